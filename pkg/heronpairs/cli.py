"""heron-pairs command line: families, solvers, descent, verification and oracle search.

Exit codes: 0 success, 1 mathematical degeneracy (or a failed verification),
2 usage error.
"""

from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Sequence, TextIO

from pydantic import ValidationError

from heronpairs.config import Config, get_config
from heronpairs.constructor import (
    CurvePoint,
    descend_ra,
    descend_rp,
    descend_rr,
    solve_ra,
    solve_rp,
    solve_rr,
)
from heronpairs.core.errors import DegeneracyError, HeronPairsError, InvalidSides
from heronpairs.core.logging_config import setup_logging
from heronpairs.core.models import (
    PairRecordModel,
    TrianglePairModel,
    VerificationReportModel,
)
from heronpairs.core.rationals import format_rational, parse_rational
from heronpairs.families import (
    PairKind,
    TrianglePair,
    VerificationReport,
    family_ra,
    family_rp,
    family_rp_right,
    family_rr,
    family_rr_right,
    verify_pair,
)
from heronpairs.oracle_search import PairRecord, SearchConfig, find_pairs, write_csv, write_jsonl

__all__ = ["build_parser", "main", "parse_rational", "run"]

logger = logging.getLogger(__name__)

KINDS = ("rp", "rr", "ra")
FORMATS = ("json", "jsonl", "csv")


class UsageError(Exception):
    """Bad flag combination or unreadable input; maps to exit code 2."""


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except HeronPairsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _output_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the same flags appear before or after the subcommand
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    parent.add_argument("--output", default=argparse.SUPPRESS, help="file path (default: stdout)")
    return parent


def _param_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--t1", type=_rational_arg)
    parser.add_argument("--t2", type=_rational_arg)
    parser.add_argument("--t", type=_rational_arg)
    parser.add_argument("--right", action="store_true", help="t2 = 1 specialization (rp, rr)")
    parser.add_argument("--m", type=_rational_arg, help="common perimeter / inradius scale")


def build_parser() -> argparse.ArgumentParser:
    output = _output_options()
    parser = argparse.ArgumentParser(
        prog="heron-pairs",
        description="Rational triangle pairs with a common circumradius and a common perimeter, "
        "inradius or area.",
        parents=[output],
    )
    parser.add_argument("--config", help="YAML config file (default: packaged default.yaml)")
    parser.add_argument(
        "--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"), type=str.upper
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family = sub.add_parser("family", parents=[output], help="evaluate a closed-form family")
    _param_options(family)

    solve = sub.add_parser("solve", parents=[output], help="construct a pair from rational points")
    _param_options(solve)
    solve.add_argument("--n", type=_rational_arg, default=1)
    solve.add_argument("--q", type=_rational_arg, default=1)

    descend = sub.add_parser("descend", parents=[output], help="further pairs by descent")
    _param_options(descend)
    descend.add_argument("--steps", type=int)

    verify = sub.add_parser("verify", parents=[output], help="re-check pairs from a JSON file")
    verify.add_argument("input")

    search = sub.add_parser("search", parents=[output], help="brute-force oracle search")
    search.add_argument("--max-side", type=int)
    search.add_argument("--kind", action="append", choices=KINDS, dest="kinds")
    search.add_argument("--primitive-only", action="store_true", default=None)
    search.add_argument("--scalene-only", action="store_true", default=None)
    search.add_argument("--workers", type=int)
    return parser


def _require(args: argparse.Namespace, *names: str) -> list[Any]:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} {args.kind} requires {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def _m(args: argparse.Namespace, config: Config) -> Any:
    return args.m if args.m is not None else parse_rational(config.descent.default_m)


def _cmd_family(args: argparse.Namespace, config: Config) -> TrianglePair:
    if args.kind == "ra":
        (t,) = _require(args, "t")
        return family_ra(t)
    if args.right:
        (t1,) = _require(args, "t1")
        return family_rp_right(t1) if args.kind == "rp" else family_rr_right(t1)
    t1, t2 = _require(args, "t1", "t2")
    return family_rp(t1, t2) if args.kind == "rp" else family_rr(t1, t2)


def _curve_params(args: argparse.Namespace) -> tuple[Any, Any]:
    if args.right:
        (t1,) = _require(args, "t1")
        return t1, 1
    t1, t2 = _require(args, "t1", "t2")
    return t1, t2


def _cmd_solve(args: argparse.Namespace, config: Config) -> TrianglePair:
    if args.kind == "ra":
        (t,) = _require(args, "t")
        return solve_ra(t, args.n, args.q)
    t1, t2 = _curve_params(args)
    solver = solve_rp if args.kind == "rp" else solve_rr
    return solver(t1, t2, _m(args, config))


def _cmd_descend(args: argparse.Namespace, config: Config) -> list[tuple[Any, TrianglePair]]:
    steps = args.steps if args.steps is not None else config.descent.steps
    if steps < 0:
        raise UsageError("--steps must be non-negative")
    if args.kind == "ra":
        (t,) = _require(args, "t")
        return descend_ra(t, steps)
    t1, t2 = _curve_params(args)
    descend = descend_rp if args.kind == "rp" else descend_rr
    return descend(t1, t2, _m(args, config), steps)


def _read_pairs(path: Path) -> list[TrianglePairModel]:
    """Accepts a pair, a list of pairs, search records, or JSON Lines of either."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
        items = data if isinstance(data, list) else [data]
    except json.JSONDecodeError:
        items = [json.loads(line) for line in text.splitlines() if line.strip()]
    pairs = []
    for item in items:
        if isinstance(item, dict) and "pair" in item and "key" in item:
            pairs.append(PairRecordModel.model_validate(item).pair)
        elif isinstance(item, dict) and "pair" in item:
            pairs.append(TrianglePairModel.model_validate(item["pair"]))
        else:
            pairs.append(TrianglePairModel.model_validate(item))
    return pairs


def _verify_model(index: int, model: TrianglePairModel) -> VerificationReport:
    """Sides that are not a triangle become failed checks rather than an abort."""
    try:
        return verify_pair(model.to_pair())
    except InvalidSides:
        pass
    report = VerificationReport(kind=model.kind)
    for label, cert in (("first", model.first), ("second", model.second)):
        try:
            cert.to_triangle()
        except InvalidSides as exc:
            report.add(f"{label}_triangle_valid", False, str(exc))
        else:
            report.add(f"{label}_triangle_valid", True)
    logger.warning(
        "pair is not a pair of triangles", extra={"index": index, "failed": report.failed()}
    )
    return report


def _cmd_search(args: argparse.Namespace, config: Config) -> list[PairRecord]:
    cfg = SearchConfig(
        max_side=args.max_side if args.max_side is not None else config.search.max_side,
        kinds=frozenset(PairKind.from_short(k) for k in (args.kinds or KINDS)),
        primitive_only=args.primitive_only or config.search.primitive_only,
        scalene_only=args.scalene_only or config.search.scalene_only,
        workers=args.workers if args.workers is not None else config.search.workers,
    )
    return find_pairs(cfg)


def _point_json(point: Any) -> dict[str, str]:
    if isinstance(point, CurvePoint):
        return {"y1": format_rational(point.y1), "y2": format_rational(point.y2)}
    return {"u": format_rational(point)}


def _emit(records: Sequence[PairRecord], payloads: list[dict], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        write_csv(records, out)
    elif fmt == "jsonl":
        for payload in payloads:
            out.write(json.dumps(payload) + "\n")
    else:
        body = payloads[0] if len(payloads) == 1 else payloads
        out.write(json.dumps(body, indent=2) + "\n")


def _pair_payload(pair: TrianglePair) -> dict:
    return TrianglePairModel.from_pair(pair).model_dump(mode="json")


def _dispatch(args: argparse.Namespace, config: Config, fmt: str, out: TextIO) -> int:
    if args.command in ("family", "solve"):
        handler: Callable[..., TrianglePair] = (
            _cmd_family if args.command == "family" else _cmd_solve
        )
        pair = handler(args, config)
        _emit([PairRecord(pair, pair.key)], [_pair_payload(pair)], fmt, out)
        return 0
    if args.command == "descend":
        found = _cmd_descend(args, config)
        payloads = [{"point": _point_json(p), "pair": _pair_payload(pair)} for p, pair in found]
        records = [PairRecord(pair, pair.key) for _, pair in found]
        if fmt == "json":
            out.write(json.dumps(payloads, indent=2) + "\n")
        else:
            _emit(records, payloads, fmt, out)
        return 0
    if args.command == "verify":
        models = _read_pairs(Path(args.input))
        reports = [_verify_model(i, m) for i, m in enumerate(models)]
        payloads = [VerificationReportModel.from_report(r).model_dump(mode="json") for r in reports]
        if fmt == "jsonl":
            for payload in payloads:
                out.write(json.dumps(payload) + "\n")
        else:
            out.write(json.dumps(payloads, indent=2) + "\n")
        return 0 if all(r.ok for r in reports) else 1
    records = _cmd_search(args, config)
    if fmt == "jsonl":
        write_jsonl(records, out)
    elif fmt == "csv":
        write_csv(records, out)
    else:
        body = [r.to_model().model_dump(mode="json") for r in records]
        out.write(json.dumps(body, indent=2) + "\n")
    return 0


def _resolve_output(path: str, config: Config) -> Path:
    target = Path(path)
    if not target.is_absolute():
        target = Path(config.output.output_dir) / target
    target.parent.mkdir(parents=True, exist_ok=True)
    return target


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = get_config(args.config)
    except (ValidationError, OSError, ValueError) as exc:
        print(f"heron-pairs: invalid configuration: {exc}", file=sys.stderr)
        return 2
    setup_logging(level=args.log_level or config.logging.level, use_json=config.logging.json_output)
    fmt = getattr(args, "format", None) or config.output.format
    output = getattr(args, "output", None)
    buffer = io.StringIO()
    try:
        code = _dispatch(args, config, fmt, buffer)
    except DegeneracyError as exc:
        logger.warning("degenerate input", extra={"error": str(exc), "factor": exc.factor})
        print(f"heron-pairs: degenerate: {exc} (factor: {exc.factor})", file=sys.stderr)
        return 1
    except (UsageError, ValidationError, HeronPairsError, ValueError) as exc:
        print(f"heron-pairs: {exc}", file=sys.stderr)
        return 2
    if output:
        _resolve_output(output, config).write_text(buffer.getvalue(), encoding="utf-8")
    else:
        out.write(buffer.getvalue())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
