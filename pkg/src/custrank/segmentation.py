"""Four-quadrant customer profiles from value-from-customer and value-to-customer.

================  ==================  ==================
                  v2c below cutoff    v2c at/above cutoff
================  ==================  ==================
v2f below cutoff  Passenger           CostToServe
v2f at/above      Challenger          Noteworthy
================  ==================  ==================

A value exactly at its threshold counts as high.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .validation import check_matrix


class Profile(str, Enum):
    PASSENGER = "Passenger"
    COST_TO_SERVE = "CostToServe"
    CHALLENGER = "Challenger"
    NOTEWORTHY = "Noteworthy"


@dataclass(frozen=True)
class CustomerProfile:
    customer: str
    v2f: float
    v2c: float
    label: Profile


def assign_profile(v2f: float, v2c: float, thresholds: tuple[float, float]) -> Profile:
    t_f, t_c = thresholds
    for name, x in (("v2f", v2f), ("v2c", v2c), ("v2f threshold", t_f), ("v2c threshold", t_c)):
        if not math.isfinite(x):
            raise ValueError(f"{name} must be finite, got {x!r}")
    high_f, high_c = v2f >= t_f, v2c >= t_c
    if high_f:
        return Profile.NOTEWORTHY if high_c else Profile.CHALLENGER
    return Profile.COST_TO_SERVE if high_c else Profile.PASSENGER


def resolve_thresholds(v2f, v2c, policy="median") -> tuple[float, float]:
    """``"median"`` gives per-axis medians; a ``(t_f, t_c)`` pair is used as is."""
    if isinstance(policy, str):
        if policy != "median":
            raise ValueError(f"unknown threshold policy {policy!r}")
        return float(np.median(v2f)), float(np.median(v2c))
    t_f, t_c = policy
    return float(t_f), float(t_c)


def segment_all(customers: Sequence[str], v2f: Sequence[float], v2c: Sequence[float],
                thresholds="median") -> list[CustomerProfile]:
    if len(customers) == 0:
        raise ValueError("no customers to segment")
    if not len(customers) == len(v2f) == len(v2c):
        raise ValueError("customers, v2f and v2c must have equal length")
    cut = resolve_thresholds(np.asarray(v2f, float), np.asarray(v2c, float), thresholds)
    return [CustomerProfile(str(c), float(f), float(v), assign_profile(f, v, cut))
            for c, f, v in zip(customers, v2f, v2c)]


class QuadrantSegmenter(BaseEstimator):
    """Learn quadrant cutoffs from columns ``[v2f, v2c]`` and label customers.

    Parameters
    ----------
    thresholds : "median" or (t_f, t_c)
    """

    def __init__(self, thresholds="median"):
        self.thresholds = thresholds

    def fit(self, X, y=None):
        X = check_matrix(X)
        if X.shape[1] != 2:
            raise ValueError("expected two columns: v2f, v2c")
        self.n_features_in_ = 2
        self.thresholds_ = resolve_thresholds(X[:, 0], X[:, 1], self.thresholds)
        return self

    def predict(self, X):
        check_is_fitted(self, "thresholds_")
        X = check_matrix(X)
        if X.shape[1] != 2:
            raise ValueError("expected two columns: v2f, v2c")
        return np.array([assign_profile(f, c, self.thresholds_).value for f, c in X])

    def fit_predict(self, X, y=None):
        return self.fit(X).predict(X)
