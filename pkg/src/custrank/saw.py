"""Simple Additive Weighting: score each alternative by its weighted sum of normalized criteria."""

from __future__ import annotations

from dataclasses import dataclass

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._base import RankerMixin
from .core import TIE_TOLERANCE, DecisionMatrix, Ranking, WeightVector, rank_from_scores
from .validation import check_matrix, check_weights


@dataclass(frozen=True)
class SawResult:
    scores: dict[str, float]
    ranking: Ranking

    @property
    def best(self) -> str:
        return self.ranking.entries[0].alternative


def saw_scores(matrix: DecisionMatrix, weights, *, check_simplex: bool = True) -> dict[str, float]:
    """Weighted sum ``sum_j w_j * r_ij`` for every alternative.

    ``check_simplex=False`` skips the sum-to-one check so that weights can
    be rescaled freely; only their count is validated then.
    """
    w = weights.weights if isinstance(weights, WeightVector) else weights
    w = check_weights(w, matrix.shape[1], simplex=check_simplex)
    totals = matrix.values @ w
    return dict(zip(matrix.alternatives, totals.tolist()))


def saw_rank(matrix: DecisionMatrix, weights, *, check_simplex: bool = True,
             tol: float = TIE_TOLERANCE) -> SawResult:
    scores = saw_scores(matrix, weights, check_simplex=check_simplex)
    return SawResult(scores, rank_from_scores(scores, tol=tol))


class SAWRanker(RankerMixin, BaseEstimator):
    """Rank alternatives of an already-normalized matrix by weighted sum.

    Parameters
    ----------
    weights : "entropy" or array-like of shape (n_features,)
        ``"entropy"`` derives weights from the training matrix.
    tie_tolerance : float
        Scores closer than this share a rank.

    Attributes
    ----------
    weights_, scores_, ranking_, ids_
    """

    def __init__(self, weights="entropy", tie_tolerance=TIE_TOLERANCE):
        self.weights = weights
        self.tie_tolerance = tie_tolerance

    def fit(self, X, y=None, ids=None):
        X = check_matrix(X)
        self.n_features_in_ = X.shape[1]
        self.weights_ = self._resolve_weights(X)
        self._rank(X, ids)
        return self

    def score_samples(self, X):
        check_is_fitted(self, "weights_")
        X = check_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X @ self.weights_
