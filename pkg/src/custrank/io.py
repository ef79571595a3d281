"""CSV readers for decision matrices and customer data.

All readers raise :class:`InputError` with the 1-based line number of the
offending row.
"""

from __future__ import annotations

import csv
import math
from collections import defaultdict
from pathlib import Path

from .core import CriterionSpec, DecisionMatrix, natural_key
from .value import N_QUESTIONS, CLVInputs, Period, QuestionnaireResponse, ValueParameter, ValuePerception


class InputError(ValueError):
    def __init__(self, message: str, path=None, line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line


def _rows(path):
    path = Path(path)
    if not path.exists():
        raise InputError("file not found", path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise InputError("empty file", path) from None
        header = [h.strip() for h in header]
        rows = [(reader.line_num, row) for row in reader if any(cell.strip() for cell in row)]
    return path, header, rows


def _float(text: str, path, line: int, what: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"{what}: cannot parse {text!r} as a number", path, line) from None
    if not math.isfinite(value):
        raise InputError(f"{what}: non-finite value {text!r}", path, line)
    return value


def _require(header, columns, path):
    missing = [c for c in columns if c not in header]
    if missing:
        raise InputError(f"missing column(s) {', '.join(missing)}", path, 1)


def read_matrix(path) -> DecisionMatrix:
    """Read ``id,crit1[:benefit|cost],crit2,...``; direction defaults to benefit."""
    path, header, rows = _rows(path)
    if len(header) < 2 or header[0].lower() != "id":
        raise InputError("header must be 'id' followed by one column per criterion", path, 1)
    criteria = []
    for col in header[1:]:
        name, _, direction = col.partition(":")
        try:
            criteria.append(CriterionSpec(name.strip(), direction.strip().lower() or "benefit"))
        except ValueError as exc:
            raise InputError(f"bad criterion header {col!r}: {exc}", path, 1) from None
    if not rows:
        raise InputError("no alternatives", path)
    ids, grid, seen = [], [], {}
    for line, row in rows:
        if len(row) != len(header):
            raise InputError(f"expected {len(header)} fields, got {len(row)}", path, line)
        alt = row[0].strip()
        if not alt:
            raise InputError("empty id", path, line)
        if alt in seen:
            raise InputError(f"duplicate id {alt!r} (first seen on line {seen[alt]})", path, line)
        seen[alt] = line
        ids.append(alt)
        grid.append([_float(cell, path, line, criteria[k].name) for k, cell in enumerate(row[1:])])
    try:
        return DecisionMatrix(tuple(ids), tuple(criteria), grid)
    except ValueError as exc:
        raise InputError(str(exc), path) from None


def read_periods(path) -> dict[str, CLVInputs]:
    """Read ``id,period,price,cost,retention,discount_rate,acquisition_cost``.

    One row per customer and period; periods must run ``0..T`` and the
    discount rate and acquisition cost must be constant per customer.
    """
    cols = ["id", "period", "price", "cost", "retention", "discount_rate", "acquisition_cost"]
    path, header, rows = _rows(path)
    _require(header, cols, path)
    idx = {c: header.index(c) for c in cols}
    if not rows:
        raise InputError("no customers", path)
    per: dict[str, dict] = defaultdict(lambda: {"periods": {}, "rate": None, "ac": None, "line": None})
    for line, row in rows:
        if len(row) != len(header):
            raise InputError(f"expected {len(header)} fields, got {len(row)}", path, line)
        cid = row[idx["id"]].strip()
        rec = per[cid]
        rec["line"] = rec["line"] or line
        try:
            t = int(row[idx["period"]])
        except ValueError:
            raise InputError(f"period {row[idx['period']]!r} is not an integer", path, line) from None
        if t in rec["periods"]:
            raise InputError(f"customer {cid!r}: duplicate period {t}", path, line)
        values = {c: _float(row[idx[c]], path, line, c)
                  for c in ("price", "cost", "retention", "discount_rate", "acquisition_cost")}
        try:
            rec["periods"][t] = Period(values["price"], values["cost"], values["retention"])
        except ValueError as exc:
            raise InputError(str(exc), path, line) from None
        for key, col in (("rate", "discount_rate"), ("ac", "acquisition_cost")):
            if rec[key] is None:
                rec[key] = values[col]
            elif rec[key] != values[col]:
                raise InputError(f"customer {cid!r}: {col} changes between periods", path, line)
    out = {}
    for cid, rec in per.items():
        steps = sorted(rec["periods"])
        if steps != list(range(len(steps))):
            raise InputError(f"customer {cid!r}: periods must be 0..T without gaps, got {steps}",
                             path, rec["line"])
        try:
            out[cid] = CLVInputs(tuple(rec["periods"][t] for t in steps), rec["rate"], rec["ac"])
        except ValueError as exc:
            raise InputError(f"customer {cid!r}: {exc}", path, rec["line"]) from None
    return out


def read_questionnaires(path) -> dict[str, QuestionnaireResponse]:
    """Read ``id`` plus 50 answer columns (Likert level 1..5 or its label)."""
    path, header, rows = _rows(path)
    if header[0].lower() != "id" or len(header) != N_QUESTIONS + 1:
        raise InputError(f"header must be 'id' followed by {N_QUESTIONS} answer columns", path, 1)
    if not rows:
        raise InputError("no customers", path)
    out = {}
    for line, row in rows:
        if len(row) != len(header):
            raise InputError(f"expected {len(header)} fields, got {len(row)}", path, line)
        cid = row[0].strip()
        if cid in out:
            raise InputError(f"duplicate id {cid!r}", path, line)
        try:
            out[cid] = QuestionnaireResponse(tuple(cell.strip() for cell in row[1:]))
        except ValueError as exc:
            raise InputError(f"customer {cid!r}: {exc}", path, line) from None
    return out


def read_perceptions(path) -> dict[str, ValuePerception]:
    """Read ``id,importance,benefit,cost``; one row per perceived parameter."""
    path, header, rows = _rows(path)
    _require(header, ["id", "importance", "benefit", "cost"], path)
    idx = {c: header.index(c) for c in ("id", "importance", "benefit", "cost")}
    params: dict[str, list] = defaultdict(list)
    first: dict[str, int] = {}
    for line, row in rows:
        if len(row) != len(header):
            raise InputError(f"expected {len(header)} fields, got {len(row)}", path, line)
        cid = row[idx["id"]].strip()
        first.setdefault(cid, line)
        params[cid].append(ValueParameter(*(_float(row[idx[c]], path, line, c)
                                            for c in ("importance", "benefit", "cost"))))
    out = {}
    for cid, items in params.items():
        try:
            out[cid] = ValuePerception(tuple(items))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"customer {cid!r}: {exc}", path, first[cid]) from None
    return out


def read_axes(path) -> tuple[list[str], list[float], list[float]]:
    """Read ``id,v2f,v2c`` for segmentation."""
    path, header, rows = _rows(path)
    _require(header, ["id", "v2f", "v2c"], path)
    idx = {c: header.index(c) for c in ("id", "v2f", "v2c")}
    if not rows:
        raise InputError("no customers", path)
    ids, f, c = [], [], []
    for line, row in rows:
        if len(row) != len(header):
            raise InputError(f"expected {len(header)} fields, got {len(row)}", path, line)
        ids.append(row[idx["id"]].strip())
        f.append(_float(row[idx["v2f"]], path, line, "v2f"))
        c.append(_float(row[idx["v2c"]], path, line, "v2c"))
    return ids, f, c


def sorted_ids(ids) -> list[str]:
    return sorted(ids, key=natural_key)
