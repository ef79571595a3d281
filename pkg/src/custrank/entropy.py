"""Objective criterion weights from Shannon entropy.

A criterion whose values are spread evenly across the alternatives has
entropy close to one and discriminates poorly; its divergence ``1 - e``
and hence its weight are small.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, OneToOneFeatureMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import DecisionMatrix, WeightVector
from .validation import check_matrix

PROPORTION_SUM_TOL = 1e-9


@dataclass(frozen=True)
class EntropyReport:
    proportions: np.ndarray
    entropies: np.ndarray
    divergences: np.ndarray
    weights: WeightVector

    def as_dict(self, criteria=None) -> dict:
        names = list(criteria) if criteria is not None else list(range(len(self.entropies)))
        return {
            "criteria": names,
            "entropies": self.entropies.tolist(),
            "divergences": self.divergences.tolist(),
            "weights": self.weights.weights.tolist(),
        }


def _values(matrix) -> np.ndarray:
    return matrix.values if isinstance(matrix, DecisionMatrix) else check_matrix(matrix)


def proportions(matrix) -> np.ndarray:
    """Share of each column total held by each alternative."""
    X = _values(matrix)
    if np.any(X < 0):
        i, j = np.argwhere(X < 0)[0]
        raise ValueError(f"negative entry {X[i, j]!r} at row {i}, column {j}")
    totals = X.sum(axis=0)
    if np.any(totals == 0):
        raise ValueError(f"all-zero column {int(np.flatnonzero(totals == 0)[0])}")
    return X / totals


def entropy_values(P, *, validate: bool = True) -> np.ndarray:
    """Normalised Shannon entropy of each column of a proportion grid.

    Uses natural logs and ``0 * ln 0 = 0``. Set ``validate=False`` to feed
    a transcribed grid whose columns do not sum exactly to one.
    """
    P = check_matrix(P, name="proportions")
    m = P.shape[0]
    if m < 2:
        raise ValueError("entropy is undefined for a single alternative (ln 1 = 0)")
    if validate:
        if np.any(P < 0):
            raise ValueError("proportions must be nonnegative")
        sums = P.sum(axis=0)
        off = np.abs(sums - 1.0) > PROPORTION_SUM_TOL
        if off.any():
            j = int(np.flatnonzero(off)[0])
            raise ValueError(f"proportion column {j} sums to {sums[j]!r}, not 1")
    plogp = np.zeros_like(P)
    pos = P > 0
    plogp[pos] = P[pos] * np.log(P[pos])
    e = -plogp.sum(axis=0) / np.log(m)
    # rounding can push a uniform column a hair past 1
    return np.clip(e, 0.0, 1.0) if validate else e


#: Divergences below this are rounding noise from a uniform column.
DIVERGENCE_FLOOR = 1e-12


def _divergences(entropies) -> np.ndarray:
    div = 1.0 - np.asarray(entropies, dtype=float)
    return np.where(np.abs(div) < DIVERGENCE_FLOOR, 0.0, div)


def weights_from_entropies(entropies) -> WeightVector:
    div = _divergences(entropies)
    total = div.sum()
    if total <= 0:
        raise ValueError("every criterion has zero divergence; entropy weights are undefined")
    return WeightVector(div / total)


def entropy_weights(matrix) -> EntropyReport:
    """Full entropy weighting report for ``matrix`` (no re-normalization is applied)."""
    P = proportions(matrix)
    e = entropy_values(P)
    div = _divergences(e)
    return EntropyReport(P, e, div, weights_from_entropies(e))


class EntropyWeighter(OneToOneFeatureMixin, TransformerMixin, BaseEstimator):
    """Learn entropy weights in ``fit``; ``transform`` returns the weighted matrix.

    Attributes
    ----------
    weights_ : ndarray of shape (n_features,)
    entropies_, divergences_ : ndarray of shape (n_features,)
    """

    def fit(self, X, y=None):
        X = check_matrix(X)
        report = entropy_weights(X)
        self.n_features_in_ = X.shape[1]
        self.report_ = report
        self.entropies_ = report.entropies
        self.divergences_ = report.divergences
        self.weights_ = report.weights.weights
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = check_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X * self.weights_
