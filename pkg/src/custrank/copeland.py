"""Copeland aggregation of several rankings over the same alternatives.

Alternative ``i`` beats ``k`` when it is ranked strictly better than ``k``
by strictly more input rankings than rank ``k`` better than ``i``. With two
inputs this means winning both; a split decision is a win for neither. The
Copeland score is victories minus defeats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .core import Ranking, natural_key, rank_from_scores
from .validation import check_matrix


@dataclass(frozen=True)
class PairwiseTally:
    alternatives: tuple[str, ...]
    wins: np.ndarray  # wins[i, k] == 1 iff i beats k

    @property
    def row_wins(self) -> np.ndarray:
        return self.wins.sum(axis=1)

    @property
    def column_losses(self) -> np.ndarray:
        return self.wins.sum(axis=0)


@dataclass(frozen=True)
class CopelandResult:
    scores: dict[str, int]
    ranking: Ranking
    tally: PairwiseTally

    def chain(self) -> str:
        return format_chain(self.ranking)


def _rank_maps(rankings) -> list[dict[str, float]]:
    maps = []
    for r in rankings:
        if isinstance(r, Ranking):
            maps.append({k: float(v) for k, v in r.ranks().items()})
        else:
            maps.append({str(k): float(v) for k, v in dict(r).items()})
    return maps


def _wins_from_rank_grid(R: np.ndarray) -> np.ndarray:
    # R[i, s]: rank of alternative i in input s (lower is better)
    better = (R[:, None, :] < R[None, :, :]).sum(axis=2)
    return (better > better.T).astype(int)


def pairwise_tally(rankings: Sequence[Ranking | Mapping[str, float]]) -> PairwiseTally:
    """Majority tally of pairwise victories.

    Each input is a :class:`Ranking` or a mapping of id to rank. All inputs
    must cover the same alternatives. Equal ranks within one input count
    as a preference for neither side.
    """
    maps = _rank_maps(rankings)
    if not maps:
        raise ValueError("at least one ranking is required")
    ids = sorted(maps[0], key=natural_key)
    for pos, mp in enumerate(maps[1:], start=1):
        if set(mp) != set(ids):
            missing = sorted(set(ids) ^ set(mp), key=natural_key)
            raise ValueError(f"ranking {pos} covers a different alternative set (differs on {missing})")
    R = np.array([[mp[i] for mp in maps] for i in ids], dtype=float)
    return PairwiseTally(tuple(ids), _wins_from_rank_grid(R))


def copeland_scores(tally: PairwiseTally) -> dict[str, int]:
    scores = tally.row_wins - tally.column_losses
    return {a: int(s) for a, s in zip(tally.alternatives, scores)}


def copeland_rank(rankings: Sequence[Ranking | Mapping[str, float]]) -> CopelandResult:
    tally = pairwise_tally(rankings)
    scores = copeland_scores(tally)
    return CopelandResult(scores, rank_from_scores(scores, tol=0.0), tally)


def format_chain(ranking: Ranking | Sequence[Sequence[str]]) -> str:
    """Render ``C39 > C46 > C1 = C43 > ...``."""
    groups = ranking.tie_groups() if isinstance(ranking, Ranking) else ranking
    return " > ".join(" = ".join(g) for g in groups)


def parse_chain(text: str) -> list[tuple[str, ...]]:
    """Inverse of :func:`format_chain`; also accepts ``C_{39}`` style ids."""
    text = re.sub(r"_\{(\w+)\}", r"\1", text).replace("$", "")
    return [tuple(tok.strip() for tok in group.split("=")) for group in text.split(">")]


def same_chain(a: Sequence[Sequence[str]], b: Sequence[Sequence[str]]) -> bool:
    """Chains are equal when every tie group holds the same ids, in order."""
    return len(a) == len(b) and all(set(x) == set(y) for x, y in zip(a, b))


def chain_disagreements(a: Sequence[Sequence[str]], b: Sequence[Sequence[str]]) -> list[tuple[str, str]]:
    """Pairs of ids ordered differently (or tied in one chain only) by ``a`` and ``b``."""
    pa = {x: g for g, grp in enumerate(a) for x in grp}
    pb = {x: g for g, grp in enumerate(b) for x in grp}
    if set(pa) != set(pb):
        raise ValueError("chains cover different alternatives")
    ids = sorted(pa, key=natural_key)
    out = []
    for n, x in enumerate(ids):
        for y in ids[n + 1:]:
            if np.sign(pa[x] - pa[y]) != np.sign(pb[x] - pb[y]):
                out.append((x, y))
    return out


class CopelandAggregator(BaseEstimator):
    """Copeland consensus over the columns of a rank grid.

    ``fit(R)`` takes an ``(n_alternatives, n_methods)`` array whose column
    ``s`` holds each alternative's rank under method ``s`` (1 = best).

    Attributes
    ----------
    wins_ : ndarray of shape (n_alternatives, n_alternatives)
    scores_ : ndarray of int
    ranking_ : Ranking
    """

    def fit(self, R, y=None, ids=None):
        R = check_matrix(R, name="rank grid")
        ids = [f"A{k + 1}" for k in range(R.shape[0])] if ids is None else [str(i) for i in ids]
        if len(ids) != R.shape[0]:
            raise ValueError(f"{len(ids)} ids for {R.shape[0]} alternatives")
        self.n_features_in_ = R.shape[1]
        self.ids_ = ids
        self.wins_ = _wins_from_rank_grid(R)
        self.scores_ = self.wins_.sum(axis=1) - self.wins_.sum(axis=0)
        self.ranking_ = rank_from_scores(ids, self.scores_, tol=0.0)
        return self

    def fit_predict(self, R, y=None, ids=None):
        self.fit(R, ids=ids)
        ranks = self.ranking_.ranks()
        return np.array([ranks[i] for i in self.ids_])

    def chain(self) -> str:
        check_is_fitted(self, "ranking_")
        return format_chain(self.ranking_)
