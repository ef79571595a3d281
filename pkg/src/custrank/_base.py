from __future__ import annotations

import numpy as np

from .core import rank_from_scores
from .entropy import entropy_weights
from .validation import check_weights


class RankerMixin:
    """Common machinery for estimators that score and rank alternatives.

    Subclasses implement ``fit`` and ``score_samples``; ``_rank`` stores
    ``scores_`` and ``ranking_`` for the training alternatives.
    """

    def _resolve_weights(self, X: np.ndarray) -> np.ndarray:
        if isinstance(self.weights, str):
            if self.weights != "entropy":
                raise ValueError(f"weights must be 'entropy' or an array, got {self.weights!r}")
            return entropy_weights(X).weights.weights
        return check_weights(self.weights, X.shape[1])

    def _rank(self, X, ids):
        ids = [f"A{k + 1}" for k in range(X.shape[0])] if ids is None else [str(i) for i in ids]
        self.ids_ = ids
        self.scores_ = self.score_samples(X)
        self.ranking_ = rank_from_scores(ids, self.scores_, tol=self.tie_tolerance)

    def predict(self, X):
        """Competition ranks (1 = best) of the rows of ``X`` among themselves."""
        scores = self.score_samples(X)
        ranking = rank_from_scores([str(k) for k in range(len(scores))], scores,
                                   tol=self.tie_tolerance)
        ranks = ranking.ranks()
        return np.array([ranks[str(k)] for k in range(len(scores))])

    def fit_predict(self, X, y=None, ids=None):
        self.fit(X, ids=ids)
        ranks = self.ranking_.ranks()
        return np.array([ranks[i] for i in self.ids_])

