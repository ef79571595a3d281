"""Input validation helpers shared by the functional API and the estimators."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.utils.validation import check_array

#: Absolute tolerance for the weights-sum-to-one check.
WEIGHT_SUM_TOL = 1e-9


class DegenerateCriterionWarning(UserWarning):
    """A criterion column is constant (or all-zero) and carries no information."""


def check_matrix(X, *, allow_empty: bool = False, name: str = "X") -> np.ndarray:
    """Return ``X`` as a finite 2-D float64 array.

    Raises ``ValueError`` naming the first offending cell when a value is
    NaN or infinite.
    """
    arr = check_array(
        X,
        dtype=np.float64,
        ensure_all_finite=False,
        ensure_min_samples=0 if allow_empty else 1,
        ensure_min_features=0 if allow_empty else 1,
        input_name=name,
    )
    bad = np.argwhere(~np.isfinite(arr))
    if bad.size:
        i, j = bad[0]
        raise ValueError(f"{name}: non-finite value {arr[i, j]!r} at row {i}, column {j}")
    return arr


def check_scores(scores, *, name: str = "scores") -> np.ndarray:
    arr = np.asarray(scores, dtype=float).reshape(-1)
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise ValueError(f"{name}: non-finite score {arr[bad[0]]!r} at position {bad[0]}")
    return arr


def check_weights(weights, n_criteria: int | None = None, *, simplex: bool = True,
                  tol: float = WEIGHT_SUM_TOL) -> np.ndarray:
    """Validate a weight vector.

    With ``simplex=True`` every weight must be nonnegative and the vector
    must sum to one within ``tol``.
    """
    w = np.asarray(weights, dtype=float).reshape(-1)
    if n_criteria is not None and w.size != n_criteria:
        raise ValueError(f"expected {n_criteria} weights, got {w.size}")
    if not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite")
    if simplex:
        if np.any(w < 0):
            j = int(np.flatnonzero(w < 0)[0])
            raise ValueError(f"weight {j} is negative ({w[j]!r})")
        total = float(w.sum())
        if abs(total - 1.0) > tol:
            raise ValueError(f"weights must sum to 1 (got {total!r}, tolerance {tol:g})")
    return w


def check_directions(directions, n_criteria: int) -> tuple[str, ...]:
    """Normalise a direction spec to a tuple of ``"benefit"``/``"cost"`` strings.

    ``None`` means every criterion is a benefit criterion.
    """
    if directions is None:
        return ("benefit",) * n_criteria
    if isinstance(directions, str):
        directions = [directions] * n_criteria
    out = []
    for d in directions:
        value = getattr(d, "value", d)
        if value not in ("benefit", "cost"):
            raise ValueError(f"unknown criterion direction {d!r}; use 'benefit' or 'cost'")
        out.append(value)
    if len(out) != n_criteria:
        raise ValueError(f"expected {n_criteria} directions, got {len(out)}")
    return tuple(out)


def check_unique(names: Sequence[str], what: str) -> None:
    seen = set()
    for pos, name in enumerate(names):
        if name in seen:
            raise ValueError(f"duplicate {what} {name!r} at position {pos}")
        seen.add(name)
