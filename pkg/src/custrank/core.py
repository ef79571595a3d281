"""Shared decision-analysis types: matrices, weights and rankings."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Mapping, Sequence

import numpy as np

from .validation import check_matrix, check_scores, check_unique, check_weights

#: Two scores closer than this share a rank.
TIE_TOLERANCE = 1e-9


class Direction(str, Enum):
    """Whether larger values of a criterion are better or worse."""

    BENEFIT = "benefit"
    COST = "cost"


def natural_key(text: str):
    """Sort key that orders ``C2`` before ``C10``."""
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", text))


@dataclass(frozen=True)
class CriterionSpec:
    name: str
    direction: Direction = Direction.BENEFIT

    def __post_init__(self):
        if not self.name:
            raise ValueError("criterion name must be non-empty")
        object.__setattr__(self, "direction", Direction(self.direction))


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=float, copy=True)
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class DecisionMatrix:
    """An ``m x n`` grid of alternative scores with labelled rows and columns."""

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        values = check_matrix(self.values, name="decision matrix")
        m, n = values.shape
        if m != len(self.alternatives):
            raise ValueError(
                f"dimension mismatch: {m} rows but {len(self.alternatives)} alternative ids")
        if n != len(self.criteria):
            raise ValueError(
                f"dimension mismatch: {n} columns but {len(self.criteria)} criteria")
        check_unique(self.alternatives, "alternative id")
        check_unique([c.name for c in self.criteria], "criterion name")
        object.__setattr__(self, "values", _frozen(values))

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def directions(self) -> tuple[str, ...]:
        return tuple(c.direction.value for c in self.criteria)

    @property
    def criterion_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.criteria)

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.criterion_names.index(name)]

    def row(self, alternative: str) -> np.ndarray:
        return self.values[self.alternatives.index(alternative)]

    def with_values(self, values) -> "DecisionMatrix":
        """Same labels, new grid."""
        return DecisionMatrix(self.alternatives, self.criteria, values)


def build_matrix(alternatives: Sequence[str], criteria: Sequence, values) -> DecisionMatrix:
    """Validate and assemble a :class:`DecisionMatrix`.

    ``criteria`` items may be :class:`CriterionSpec` instances, bare names
    (treated as benefit criteria) or ``(name, direction)`` pairs.

    >>> m = build_matrix(["a", "b"], ["price:cost", "quality"], [[3, 1], [4, 2]])
    >>> m.directions
    ('cost', 'benefit')
    """
    specs = []
    for c in criteria:
        if isinstance(c, CriterionSpec):
            specs.append(c)
        elif isinstance(c, str):
            name, _, direction = c.partition(":")
            specs.append(CriterionSpec(name, direction or Direction.BENEFIT))
        else:
            specs.append(CriterionSpec(*c))
    grid = values
    if not isinstance(grid, np.ndarray):
        rows = [list(r) for r in grid]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            bad = next(i for i, r in enumerate(rows) if len(r) != len(specs))
            raise ValueError(
                f"dimension mismatch: row {bad} has {len(rows[bad])} values, expected {len(specs)}")
        grid = np.array(rows, dtype=float) if rows else np.empty((0, len(specs)))
    return DecisionMatrix(tuple(alternatives), tuple(specs), grid)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative per-criterion weights summing to one."""

    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "weights", _frozen(check_weights(self.weights)))

    def __len__(self) -> int:
        return self.weights.size

    def __iter__(self):
        return iter(self.weights.tolist())

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.weights, dtype=dtype)


def _weights_array(weights, n: int, simplex: bool) -> np.ndarray:
    if isinstance(weights, WeightVector):
        weights = weights.weights
    return check_weights(weights, n, simplex=simplex)


def apply_weights(matrix, weights, *, check_simplex: bool = True):
    """Scale each criterion column by its weight.

    Accepts a :class:`DecisionMatrix` (returns one with the same labels) or a
    plain 2-D array (returns an array).
    """
    if isinstance(matrix, DecisionMatrix):
        w = _weights_array(weights, matrix.shape[1], check_simplex)
        return DecisionMatrix(matrix.alternatives, matrix.criteria, matrix.values * w)
    values = check_matrix(matrix)
    return values * _weights_array(weights, values.shape[1], check_simplex)


@dataclass(frozen=True)
class RankEntry:
    alternative: str
    score: float
    rank: int


@dataclass(frozen=True)
class Ranking:
    """Alternatives sorted by descending score with competition ranks (1, 2, 2, 4)."""

    entries: tuple[RankEntry, ...]

    @classmethod
    def single(cls, alternative: str, score: float = 0.0) -> "Ranking":
        return cls((RankEntry(str(alternative), float(score), 1),))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[RankEntry]:
        return iter(self.entries)

    @property
    def alternatives(self) -> tuple[str, ...]:
        return tuple(e.alternative for e in self.entries)

    def ranks(self) -> dict[str, int]:
        return {e.alternative: e.rank for e in self.entries}

    def scores(self) -> dict[str, float]:
        return {e.alternative: e.score for e in self.entries}

    def rank_of(self, alternative: str) -> int:
        for e in self.entries:
            if e.alternative == alternative:
                return e.rank
        raise KeyError(alternative)

    def tie_groups(self) -> list[tuple[str, ...]]:
        """Alternatives grouped by shared rank, best group first."""
        groups: list[list[str]] = []
        last = None
        for e in self.entries:
            if e.rank != last:
                groups.append([])
                last = e.rank
            groups[-1].append(e.alternative)
        return [tuple(g) for g in groups]

    def as_records(self) -> list[dict]:
        return [{"id": e.alternative, "score": e.score, "rank": e.rank} for e in self.entries]


def rank_from_scores(ids: Sequence[str] | Mapping[str, float], scores=None, *,
                     tol: float = TIE_TOLERANCE) -> Ranking:
    """Rank alternatives by descending score.

    Call as ``rank_from_scores(ids, scores)`` or with a single mapping of
    id to score. Scores within ``tol`` of the best score in their group
    share a rank; equal-rank entries are listed in natural id order.
    """
    if scores is None:
        mapping = dict(ids)
        ids, scores = list(mapping), list(mapping.values())
    ids = [str(i) for i in ids]
    values = check_scores(scores)
    if len(ids) != values.size:
        raise ValueError(f"{len(ids)} ids but {values.size} scores")
    check_unique(ids, "alternative id")

    order = sorted(range(len(ids)), key=lambda k: -values[k])
    groups: list[list[int]] = []
    for k in order:
        if groups and values[groups[-1][0]] - values[k] <= tol:
            groups[-1].append(k)
        else:
            groups.append([k])

    entries = []
    rank = 1
    for group in groups:
        for k in sorted(group, key=lambda k: natural_key(ids[k])):
            entries.append(RankEntry(ids[k], float(values[k]), rank))
        rank += len(group)
    return Ranking(tuple(entries))
