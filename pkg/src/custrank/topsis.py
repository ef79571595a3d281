"""TOPSIS: rank by relative closeness to the ideal and distance from the negative-ideal point."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ._base import RankerMixin
from .core import TIE_TOLERANCE, DecisionMatrix, Ranking, apply_weights, rank_from_scores
from .validation import check_directions, check_matrix


@dataclass(frozen=True)
class IdealPair:
    ideal: np.ndarray
    negative_ideal: np.ndarray


@dataclass(frozen=True)
class TopsisResult:
    d_plus: dict[str, float]
    d_minus: dict[str, float]
    closeness: dict[str, float]
    ranking: Ranking
    ideal: IdealPair | None = None


def _grid(weighted) -> np.ndarray:
    return weighted.values if isinstance(weighted, DecisionMatrix) else check_matrix(weighted)


def ideal_solutions(weighted, directions=None) -> IdealPair:
    """Best and worst attainable value per column.

    For a benefit column the ideal is the max and the negative ideal the
    min; cost columns swap them. When ``weighted`` is a
    :class:`DecisionMatrix` its own directions are used unless overridden.
    """
    V = _grid(weighted)
    if V.size == 0:
        raise ValueError("empty matrix")
    if directions is None and isinstance(weighted, DecisionMatrix):
        directions = weighted.directions
    cost = np.array([d == "cost" for d in check_directions(directions, V.shape[1])])
    hi, lo = V.max(axis=0), V.min(axis=0)
    return IdealPair(np.where(cost, lo, hi), np.where(cost, hi, lo))


def _row_norms(diff: np.ndarray) -> np.ndarray:
    # scale by the largest entry so tiny differences do not underflow when squared
    scale = np.max(np.abs(diff), axis=1)
    safe = np.where(scale > 0, scale, 1.0)
    return scale * np.sqrt(np.sum((diff / safe[:, None]) ** 2, axis=1))


def separations(weighted, pair: IdealPair) -> tuple[np.ndarray, np.ndarray]:
    """Euclidean distance of every row to the ideal and to the negative ideal."""
    V = _grid(weighted)
    if V.shape[1] != pair.ideal.size or V.shape[1] != pair.negative_ideal.size:
        raise ValueError(
            f"dimension mismatch: {V.shape[1]} criteria vs ideal of length {pair.ideal.size}")
    d_plus = _row_norms(V - pair.ideal)
    d_minus = _row_norms(V - pair.negative_ideal)
    return d_plus, d_minus


def closeness(d_plus, d_minus) -> np.ndarray:
    """``d- / (d- + d+)`` per alternative."""
    d_plus = np.asarray(d_plus, dtype=float)
    d_minus = np.asarray(d_minus, dtype=float)
    total = d_plus + d_minus
    if np.any(total == 0):
        raise ValueError("closeness undefined: ideal and negative-ideal solutions coincide")
    return d_minus / total


def topsis_rank(matrix: DecisionMatrix, weights, directions=None, *,
                tol: float = TIE_TOLERANCE) -> TopsisResult:
    """Weight, locate the ideal pair, measure separations and rank by closeness."""
    weighted = apply_weights(matrix, weights)
    pair = ideal_solutions(weighted, directions)
    d_plus, d_minus = separations(weighted, pair)
    cl = closeness(d_plus, d_minus)
    ids = matrix.alternatives
    return TopsisResult(
        d_plus=dict(zip(ids, d_plus.tolist())),
        d_minus=dict(zip(ids, d_minus.tolist())),
        closeness=dict(zip(ids, cl.tolist())),
        ranking=rank_from_scores(ids, cl, tol=tol),
        ideal=pair,
    )


class TOPSISRanker(RankerMixin, BaseEstimator):
    """TOPSIS on an already-normalized matrix.

    ``fit`` learns the weights and the ideal / negative-ideal points from the
    training alternatives; ``score_samples`` measures the closeness of any
    rows against those fitted points.

    Parameters
    ----------
    weights : "entropy" or array-like of shape (n_features,)
    directions : sequence of {"benefit", "cost"} or None
    tie_tolerance : float
    """

    def __init__(self, weights="entropy", directions=None, tie_tolerance=TIE_TOLERANCE):
        self.weights = weights
        self.directions = directions
        self.tie_tolerance = tie_tolerance

    def fit(self, X, y=None, ids=None):
        X = check_matrix(X)
        self.n_features_in_ = X.shape[1]
        self.weights_ = self._resolve_weights(X)
        pair = ideal_solutions(X * self.weights_, self.directions)
        self.ideal_ = pair.ideal
        self.negative_ideal_ = pair.negative_ideal
        self._rank(X, ids)
        return self

    def separations(self, X):
        check_is_fitted(self, "ideal_")
        X = check_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return separations(X * self.weights_, IdealPair(self.ideal_, self.negative_ideal_))

    def score_samples(self, X):
        return closeness(*self.separations(X))
