"""Whole-pipeline orchestration behind the command line.

Each ``run_*`` function returns a plain JSON-serialisable report dict;
``render_*`` turns one into a human-readable table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .copeland import copeland_rank
from .core import DecisionMatrix, Ranking, WeightVector, natural_key
from .entropy import entropy_weights
from .normalization import SCHEMES, normalize
from .saw import saw_rank
from .segmentation import resolve_thresholds, segment_all
from .topsis import topsis_rank
from .validation import check_weights
from .value import (
    CLVInputs,
    QuestionnaireResponse,
    ValuePerception,
    clv,
    questionnaire_score,
    value_to_customer,
)

MANUAL_WEIGHT_TOL = 1e-6
METHODS = ("saw", "topsis")


class ConfigError(ValueError):
    """Contradictory or invalid analysis settings."""


@dataclass
class AnalysisConfig:
    weighting: str | list = "entropy"
    normalization: str = "minmax"
    methods: tuple = METHODS
    aggregation: str | None = None  # None: copeland when both methods run
    thresholds: str | tuple = "median"
    tie_tolerance: float = 1e-9
    segment_axes: tuple | None = None  # (v2f criterion, v2c criterion)

    def __post_init__(self):
        if self.normalization not in SCHEMES:
            raise ConfigError(f"normalization must be one of {SCHEMES}")
        self.methods = tuple(self.methods)
        if not self.methods or any(m not in METHODS for m in self.methods):
            raise ConfigError(f"methods must be a non-empty subset of {METHODS}")
        if len(set(self.methods)) != len(self.methods):
            raise ConfigError("methods listed twice")
        if self.aggregation not in (None, "copeland", "none"):
            raise ConfigError("aggregation must be 'copeland' or 'none'")
        if self.aggregation == "copeland" and len(self.methods) < 2:
            raise ConfigError("copeland aggregation needs both saw and topsis")
        if not isinstance(self.weighting, str):
            try:
                w = check_weights(self.weighting, simplex=True, tol=MANUAL_WEIGHT_TOL)
            except ValueError as exc:
                raise ConfigError(f"manual weights: {exc}") from None
            self.weighting = (w / w.sum()).tolist()
        elif self.weighting != "entropy":
            raise ConfigError("weighting must be 'entropy' or a list of weights")
        if not isinstance(self.thresholds, str):
            self.thresholds = tuple(float(t) for t in self.thresholds)
            if len(self.thresholds) != 2:
                raise ConfigError("fixed thresholds need two values: t_f,t_c")
        elif self.thresholds != "median":
            raise ConfigError("thresholds must be 'median' or 't_f,t_c'")
        if self.tie_tolerance < 0:
            raise ConfigError("tie tolerance must be nonnegative")

    @property
    def aggregate(self) -> bool:
        if self.aggregation is None:
            return len(self.methods) == 2
        return self.aggregation == "copeland"

    def as_dict(self) -> dict:
        return {
            "weighting": self.weighting,
            "normalization": self.normalization,
            "methods": list(self.methods),
            "aggregation": "copeland" if self.aggregate else "none",
            "thresholds": self.thresholds if isinstance(self.thresholds, str) else list(self.thresholds),
            "tie_tolerance": self.tie_tolerance,
            "segment_axes": list(self.segment_axes) if self.segment_axes else None,
        }

    @classmethod
    def from_file(cls, path, **overrides) -> "AnalysisConfig":
        """Load a JSON config; keyword overrides that are not ``None`` win."""
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise ConfigError(f"{path}: config file not found") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}:{exc.lineno}: invalid JSON ({exc.msg})") from None
        known = {"weighting", "normalization", "methods", "aggregation", "thresholds",
                 "tie_tolerance", "segment_axes"}
        unknown = set(raw) - known
        if unknown:
            raise ConfigError(f"{path}: unknown config keys {sorted(unknown)}")
        raw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**raw)


def _ranking_records(ranking: Ranking) -> list[dict]:
    return ranking.as_records()


def _weights(matrix: DecisionMatrix, config: AnalysisConfig, warnings: list) -> dict:
    names = list(matrix.criterion_names)
    if not isinstance(config.weighting, str):
        if len(config.weighting) != len(names):
            raise ConfigError(f"{len(config.weighting)} manual weights for {len(names)} criteria")
        return {"mode": "manual", "criteria": names, "values": list(config.weighting)}
    if matrix.shape[0] == 1:
        warnings.append("entropy is undefined for a single alternative; equal weights used")
        n = len(names)
        return {"mode": "equal", "criteria": names, "values": [1.0 / n] * n}
    live = np.any(matrix.values != 0, axis=0)
    if not live.any():
        raise ConfigError("every criterion column is zero after normalization; weights undefined")
    report = entropy_weights(matrix.values[:, live])
    values = np.zeros(len(names))
    values[live] = report.weights.weights
    entropies = np.ones(len(names))
    entropies[live] = report.entropies
    for name, ok in zip(names, live):
        if not ok:
            warnings.append(f"criterion {name!r} is all zero after normalization; weight 0")
    return {"mode": "entropy", "criteria": names, "values": values.tolist(),
            "entropies": entropies.tolist(), "divergences": (1.0 - entropies).tolist()}


def run_rank(matrix: DecisionMatrix, config: AnalysisConfig | None = None) -> dict:
    config = config or AnalysisConfig()
    warnings: list[str] = []
    normalized = normalize(matrix, config.normalization)
    for name in getattr(normalized, "degenerate", ()):
        warnings.append(f"criterion {name!r} is constant; normalized to 0")
    weights = _weights(normalized, config, warnings)
    w = WeightVector(np.asarray(weights["values"]))
    report = {
        "criteria": [{"name": c.name, "direction": c.direction.value} for c in matrix.criteria],
        "config": config.as_dict(),
        "weights": weights,
        "saw": None,
        "topsis": None,
        "copeland": None,
        "segments": None,
        "warnings": warnings,
    }
    rankings = []
    if "saw" in config.methods:
        saw = saw_rank(normalized, w, tol=config.tie_tolerance)
        report["saw"] = {"ranking": _ranking_records(saw.ranking)}
        rankings.append(saw.ranking)
    if "topsis" in config.methods:
        if matrix.shape[0] == 1:
            warnings.append("TOPSIS closeness is undefined for a single alternative; rank 1 assigned")
            only = matrix.alternatives[0]
            ranking = Ranking.single(only)
            report["topsis"] = {"ranking": [{"id": only, "score": None, "rank": 1}],
                                "separations": None, "ideal": None, "negative_ideal": None}
        else:
            top = topsis_rank(normalized, w, tol=config.tie_tolerance)
            ranking = top.ranking
            report["topsis"] = {
                "ranking": _ranking_records(top.ranking),
                "separations": {a: {"d_plus": top.d_plus[a], "d_minus": top.d_minus[a]}
                                for a in matrix.alternatives},
                "ideal": top.ideal.ideal.tolist(),
                "negative_ideal": top.ideal.negative_ideal.tolist(),
            }
        rankings.append(ranking)
    if config.aggregate:
        cop = copeland_rank(rankings)
        report["copeland"] = {
            "scores": cop.scores,
            "ranking": _ranking_records(cop.ranking),
            "chain": cop.chain(),
        }
    if config.segment_axes:
        f_name, c_name = config.segment_axes
        for name in (f_name, c_name):
            if name not in matrix.criterion_names:
                raise ConfigError(f"segment axis {name!r} is not a criterion")
        report["segments"] = _segments(list(matrix.alternatives), matrix.column(f_name).tolist(),
                                       matrix.column(c_name).tolist(), config.thresholds)
    return report


def _segments(ids, v2f, v2c, thresholds) -> dict:
    cut = resolve_thresholds(np.asarray(v2f, float), np.asarray(v2c, float), thresholds)
    profiles = segment_all(ids, v2f, v2c, cut)
    counts = {}
    for p in profiles:
        counts[p.label.value] = counts.get(p.label.value, 0) + 1
    return {
        "thresholds": {"policy": thresholds if isinstance(thresholds, str) else "fixed",
                       "v2f": cut[0], "v2c": cut[1], "boundary": "at threshold counts as high"},
        "counts": counts,
        "profiles": [{"id": p.customer, "v2f": p.v2f, "v2c": p.v2c, "label": p.label.value}
                     for p in profiles],
    }


def run_weights(matrix: DecisionMatrix, config: AnalysisConfig | None = None) -> dict:
    config = config or AnalysisConfig()
    warnings: list[str] = []
    normalized = normalize(matrix, config.normalization)
    for name in getattr(normalized, "degenerate", ()):
        warnings.append(f"criterion {name!r} is constant; normalized to 0")
    return {"config": config.as_dict(), "weights": _weights(normalized, config, warnings),
            "warnings": warnings}


def run_segment(ids, v2f, v2c, thresholds="median") -> dict:
    return {"segments": _segments(ids, v2f, v2c, thresholds)}


def run_value(periods: dict[str, CLVInputs], questionnaires: dict[str, QuestionnaireResponse],
              perceptions: dict[str, ValuePerception] | None = None,
              thresholds="median") -> dict:
    """Per-customer CLV, value to customer, questionnaire total and profile.

    The profile places CLV on the firm axis and the questionnaire total on
    the customer axis.
    """
    if not periods or not questionnaires:
        raise ValueError("empty input: no customers")
    a, b = set(periods), set(questionnaires)
    if a != b:
        raise ValueError(
            f"customer ids differ between files: only in periods {sorted(a - b, key=natural_key)}, "
            f"only in questionnaires {sorted(b - a, key=natural_key)}")
    if perceptions is not None and set(perceptions) - a:
        raise ValueError(f"perception ids without period data: {sorted(set(perceptions) - a, key=natural_key)}")
    ids = sorted(a, key=natural_key)
    values = {cid: clv(periods[cid]) for cid in ids}
    scores = {cid: questionnaire_score(questionnaires[cid]) for cid in ids}
    v2c = {cid: (value_to_customer(perceptions[cid]) if perceptions and cid in perceptions else None)
           for cid in ids}
    seg = _segments(ids, [values[c] for c in ids], [scores[c].total for c in ids], thresholds)
    labels = {p["id"]: p["label"] for p in seg["profiles"]}
    rows = [{
        "id": cid,
        "clv": values[cid],
        "v2c": v2c[cid],
        "questionnaire_total": scores[cid].total,
        "questionnaire_categories": scores[cid].per_category,
        "profile": labels[cid],
    } for cid in ids]
    return {"customers": rows, "segments": {k: v for k, v in seg.items() if k != "profiles"}}


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _table(headers, rows) -> list[str]:
    cells = [[_fmt(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[k]) for r in cells)) if cells else len(h)
              for k, h in enumerate(headers)]
    out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)),
           "  ".join("-" * w for w in widths)]
    out += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells]
    return [line.rstrip() for line in out]


def render_rank(report: dict) -> str:
    lines = []
    if "weights" in report:
        w = report["weights"]
        lines.append(f"Weights ({w['mode']})")
        cols = ["criterion", "weight"] + (["entropy", "divergence"] if "entropies" in w else [])
        rows = []
        for k, name in enumerate(w["criteria"]):
            row = [name, w["values"][k]]
            if "entropies" in w:
                row += [w["entropies"][k], w["divergences"][k]]
            rows.append(row)
        lines += _table(cols, rows) + [""]
    for key, title, label in (("saw", "SAW", "score"), ("topsis", "TOPSIS", "closeness"),
                              ("copeland", "Copeland", "score")):
        part = report.get(key)
        if part:
            lines.append(title)
            lines += _table(["rank", "id", label],
                            [[e["rank"], e["id"], e["score"]] for e in part["ranking"]])
            if key == "copeland":
                lines.append("chain: " + part["chain"])
            lines.append("")
    seg = report.get("segments")
    if seg:
        lines += _render_segments(seg)
    for msg in report.get("warnings", []):
        lines.append(f"warning: {msg}")
    return "\n".join(lines).rstrip() + "\n"


def _render_segments(seg: dict) -> list[str]:
    t = seg["thresholds"]
    lines = [f"Segments (thresholds v2f={t['v2f']:.6f}, v2c={t['v2c']:.6f}, {t['policy']}; "
             f"{t['boundary']})"]
    lines += _table(["id", "v2f", "v2c", "profile"],
                    [[p["id"], p["v2f"], p["v2c"], p["label"]] for p in seg["profiles"]])
    lines.append("")
    return lines


def render_segments(report: dict) -> str:
    return "\n".join(_render_segments(report["segments"])).rstrip() + "\n"


def render_value(report: dict) -> str:
    lines = _table(["id", "clv", "v2c", "questionnaire", "profile"],
                   [[r["id"], r["clv"], r["v2c"], r["questionnaire_total"], r["profile"]]
                    for r in report["customers"]])
    t = report["segments"]["thresholds"]
    lines.append("")
    lines.append(f"thresholds: clv={t['v2f']:.6f}, questionnaire={t['v2c']:.6f} ({t['policy']})")
    return "\n".join(lines) + "\n"
