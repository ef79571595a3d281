"""Vector and min-max normalization of decision matrices."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, OneToOneFeatureMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import DecisionMatrix
from .validation import DegenerateCriterionWarning, check_directions, check_matrix

SCHEMES = ("minmax", "vector", "none")


@dataclass(frozen=True)
class NormalizedMatrix(DecisionMatrix):
    """A decision matrix tagged with the scheme that produced it.

    ``degenerate`` names the criteria that were constant under min-max
    scaling and were mapped to zero.
    """

    scheme: str = "minmax"
    degenerate: tuple[str, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown normalization scheme {self.scheme!r}")
        object.__setattr__(self, "degenerate", tuple(self.degenerate))


def _vector(values: np.ndarray) -> np.ndarray:
    norms = np.sqrt(np.sum(values ** 2, axis=0))
    return values / norms, norms


def _minmax(values: np.ndarray, directions, lo=None, hi=None):
    lo = values.min(axis=0) if lo is None else lo
    hi = values.max(axis=0) if hi is None else hi
    span = hi - lo
    constant = span == 0
    safe = np.where(constant, 1.0, span)
    cost = np.array([d == "cost" for d in directions])
    out = np.where(cost, hi - values, values - lo) / safe
    out[:, constant] = 0.0
    return out, constant


def vector_normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide each column by its Euclidean norm.

    Raises ``ValueError`` naming the criterion when a column is all zero.
    """
    zero = ~np.any(matrix.values != 0, axis=0)
    if zero.any():
        j = int(np.flatnonzero(zero)[0])
        raise ValueError(f"degenerate column: criterion {matrix.criteria[j].name!r} is all zero")
    out, _ = _vector(matrix.values)
    return NormalizedMatrix(matrix.alternatives, matrix.criteria, out, scheme="vector")


def minmax_normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Rescale benefit columns to ``(x - min)/(max - min)`` and cost columns to ``(max - x)/(max - min)``.

    Constant columns become all zero and are listed in ``degenerate``.
    """
    out, constant = _minmax(matrix.values, matrix.directions)
    flagged = tuple(c.name for c, flag in zip(matrix.criteria, constant) if flag)
    return NormalizedMatrix(matrix.alternatives, matrix.criteria, out,
                            scheme="minmax", degenerate=flagged)


def as_normalized(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Wrap an already-normalized matrix without touching its values."""
    return NormalizedMatrix(matrix.alternatives, matrix.criteria, matrix.values, scheme="none")


def normalize(matrix: DecisionMatrix, scheme: str = "minmax") -> NormalizedMatrix:
    if scheme == "minmax":
        return minmax_normalize(matrix)
    if scheme == "vector":
        return vector_normalize(matrix)
    if scheme == "none":
        return as_normalized(matrix)
    raise ValueError(f"unknown normalization scheme {scheme!r}; choose from {SCHEMES}")


class MinMaxNormalizer(OneToOneFeatureMixin, TransformerMixin, BaseEstimator):
    """Min-max scaler that honours benefit/cost criterion directions.

    Parameters
    ----------
    directions : sequence of {"benefit", "cost"} or None
        One entry per column. ``None`` treats every column as a benefit.

    Attributes
    ----------
    data_min_, data_max_ : ndarray of shape (n_features,)
    degenerate_ : ndarray of bool
        Columns that were constant during ``fit``; they transform to zero.
    """

    def __init__(self, directions=None):
        self.directions = directions

    def fit(self, X, y=None):
        X = check_matrix(X)
        self.n_features_in_ = X.shape[1]
        self.directions_ = check_directions(self.directions, X.shape[1])
        self.data_min_ = X.min(axis=0)
        self.data_max_ = X.max(axis=0)
        self.degenerate_ = self.data_max_ == self.data_min_
        if self.degenerate_.any():
            cols = np.flatnonzero(self.degenerate_).tolist()
            warnings.warn(f"constant columns {cols} mapped to 0", DegenerateCriterionWarning,
                          stacklevel=2)
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = check_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        out, _ = _minmax(X, self.directions_, self.data_min_, self.data_max_)
        out[:, self.degenerate_] = 0.0
        return out


class VectorNormalizer(OneToOneFeatureMixin, TransformerMixin, BaseEstimator):
    """Divide each column by the Euclidean norm it had during ``fit``."""

    def fit(self, X, y=None):
        X = check_matrix(X)
        self.n_features_in_ = X.shape[1]
        norms = np.sqrt(np.sum(X ** 2, axis=0))
        if np.any(norms == 0):
            raise ValueError(f"degenerate column: column {int(np.flatnonzero(norms == 0)[0])} is all zero")
        self.norms_ = norms
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = check_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X / self.norms_
