"""Command line interface.

Exit status: 0 on success, 1 when ``reproduce-paper`` gates fail, 2 on
input or configuration errors (diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import (
    AnalysisConfig,
    ConfigError,
    render_rank,
    render_segments,
    render_value,
    run_rank,
    run_segment,
    run_value,
    run_weights,
)
from .io import InputError, read_axes, read_matrix, read_perceptions, read_periods, read_questionnaires
from .reproduce import WEIGHT_SOURCES, reproduce_pipeline


def _weights_arg(text: str):
    if text == "entropy":
        return text
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be 'entropy' or w1,w2,...: {text!r}") from None


def _methods_arg(text: str):
    return [m.strip().lower() for m in text.split(",") if m.strip()]


def _thresholds_arg(text: str):
    if text == "median":
        return text
    try:
        t_f, t_c = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"thresholds must be 'median' or tf,tc: {text!r}") from None
    return (t_f, t_c)


def _axes_arg(text: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError("segment axes must be V2F_CRITERION,V2C_CRITERION")
    return tuple(parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="custrank", description="Rank and profile customers with SAW, TOPSIS and Copeland.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, analysis=True):
        p.add_argument("--json", action="store_true", help="print the machine-readable report")
        if analysis:
            p.add_argument("--config", help="JSON file with analysis settings")
            p.add_argument("--weights", type=_weights_arg,
                           help="'entropy' (default) or manual weights w1,w2,...")
            p.add_argument("--normalize", choices=["minmax", "vector", "none"],
                           help="normalization applied before weighting (default minmax)")

    rank = sub.add_parser("rank", help="score and rank the alternatives of a matrix CSV")
    rank.add_argument("matrix", help="CSV: id,crit1[:benefit|cost],...")
    common(rank)
    rank.add_argument("--methods", type=_methods_arg, help="comma list from saw,topsis")
    rank.add_argument("--aggregate", choices=["copeland", "none"])
    rank.add_argument("--thresholds", type=_thresholds_arg)
    rank.add_argument("--segment-axes", type=_axes_arg,
                      help="criteria to use as v2f,v2c for quadrant profiles")
    rank.add_argument("--tie-tolerance", type=float)

    weights = sub.add_parser("weights", help="entropy weights (or validate manual weights)")
    weights.add_argument("matrix")
    common(weights)

    value = sub.add_parser("value", help="CLV, questionnaire score and profile per customer")
    value.add_argument("periods", help="CSV: id,period,price,cost,retention,discount_rate,acquisition_cost")
    value.add_argument("questionnaire", help="CSV: id,q1..q50 with Likert levels 1..5")
    value.add_argument("--perception", help="CSV: id,importance,benefit,cost")
    value.add_argument("--thresholds", type=_thresholds_arg, default="median")
    common(value, analysis=False)

    segment = sub.add_parser("segment", help="quadrant profiles from id,v2f,v2c")
    segment.add_argument("axes")
    segment.add_argument("--thresholds", type=_thresholds_arg, default="median")
    common(segment, analysis=False)

    repro = sub.add_parser("reproduce-paper", help="recompute the published 47-customer study")
    repro.add_argument("--json", action="store_true")
    repro.add_argument("--tolerance", type=float,
                       help="override every numeric tolerance (0 demands exact agreement)")
    repro.add_argument("--weight-source", choices=WEIGHT_SOURCES, default="appendix-b")
    return parser


def _config(args) -> AnalysisConfig:
    overrides = {
        "weighting": getattr(args, "weights", None),
        "normalization": getattr(args, "normalize", None),
        "methods": getattr(args, "methods", None),
        "aggregation": getattr(args, "aggregate", None),
        "thresholds": getattr(args, "thresholds", None),
        "tie_tolerance": getattr(args, "tie_tolerance", None),
        "segment_axes": getattr(args, "segment_axes", None),
    }
    if args.config:
        return AnalysisConfig.from_file(args.config, **overrides)
    return AnalysisConfig(**{k: v for k, v in overrides.items() if v is not None})


def _emit(report: dict, as_json: bool, render) -> None:
    if as_json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render(report))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "rank":
            config = _config(args)
            _emit(run_rank(read_matrix(args.matrix), config), args.json, render_rank)
        elif args.cmd == "weights":
            config = _config(args)
            _emit(run_weights(read_matrix(args.matrix), config), args.json, render_rank)
        elif args.cmd == "value":
            perceptions = read_perceptions(args.perception) if args.perception else None
            report = run_value(read_periods(args.periods), read_questionnaires(args.questionnaire),
                               perceptions, args.thresholds)
            _emit(report, args.json, render_value)
        elif args.cmd == "segment":
            ids, v2f, v2c = read_axes(args.axes)
            _emit(run_segment(ids, v2f, v2c, args.thresholds), args.json, render_segments)
        elif args.cmd == "reproduce-paper":
            report = reproduce_pipeline(args.weight_source, tolerance=args.tolerance)
            sys.stdout.write((report.to_json() if args.json else report.to_text()) + "\n")
            return 0 if report.passed else 1
    except (InputError, ConfigError, ValueError, ZeroDivisionError) as exc:
        print(f"custrank {args.cmd}: error: {exc}", file=sys.stderr)
        return 2
    return 0


def entry() -> None:  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    entry()
