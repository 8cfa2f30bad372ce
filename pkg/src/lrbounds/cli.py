"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (containment, sizes, a
tableau that is not LR), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .ballot import NoTilingError, canonical_tiling
from .bumping import BumpError, TiledTableau, bump_row, iterated_bump
from .derivations import lower_derivation, upper_derivation
from .feasibility import FilterConfig, filter_triple
from .oracle import enumerate_lr_tableaux, lr_coefficient
from .partitions import ContainmentError, Partition, SkewShape, contains, format_partition, parse_partition
from .survey import SurveyConfig, survey
from .tableaux import content, format_tableau, is_lr, parse_tableau


class DomainError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _box(text: str) -> tuple[int, int]:
    try:
        parts = [int(x) for x in text.lower().split("x")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad box {text!r}; use N or RxC") from exc
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) != 2 or min(parts) < 1:
        raise argparse.ArgumentTypeError(f"bad box {text!r}; use N or RxC")
    return parts[0], parts[1]


def _shape(args) -> SkewShape:
    if not contains(args.gamma, args.lam):
        raise DomainError(
            f"containment error: ({format_partition(args.lam)}) is not inside ({format_partition(args.gamma)})"
        )
    return SkewShape(args.gamma, args.lam)


def _add_shape_args(p: argparse.ArgumentParser, with_mu: bool = False) -> None:
    p.add_argument("--gamma", type=_partition, required=True, help="outer partition, e.g. 4,3,2")
    p.add_argument("--lambda", dest="lam", type=_partition, default=Partition(),
                   help="inner partition (default: empty)")
    if with_mu:
        p.add_argument("--mu", type=_partition, required=True, help="content partition")


def cmd_lrcoef(args) -> int:
    _shape(args)
    if args.list:
        tabs = enumerate_lr_tableaux(SkewShape(args.gamma, args.lam), args.mu) \
            if args.lam.size + args.mu.size == args.gamma.size else []
        if args.json:
            print(json.dumps({"count": len(tabs), "tableaux": [format_tableau(t).splitlines() for t in tabs]}))
        else:
            print(len(tabs))
            for t in tabs:
                print()
                print(format_tableau(t))
        return 0
    c = lr_coefficient(args.gamma, args.lam, args.mu)
    print(json.dumps({"count": c}) if args.json else c)
    return 0


def cmd_filter(args) -> int:
    _shape(args)
    variants = args.families or (1, 2, 3, 4)
    if any(v not in (1, 2, 3, 4) for v in variants):
        raise argparse.ArgumentTypeError("--families takes values from 1,2,3,4")
    cfg = FilterConfig.build(variants, lower=not args.no_lower, upper=not args.no_upper,
                             max_upper_j=args.max_upper_j)
    report = filter_triple(args.gamma, args.lam, args.mu, cfg)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(report.verdict.value)
        if report.witness:
            print(report.witness)
        print(f"checks performed: {report.checks_performed}")
    return 0


def cmd_derive(args) -> int:
    shape = _shape(args)
    if args.kind == "lower":
        if args.i < 0:
            raise argparse.ArgumentTypeError("--i must be non-negative")
        result = lower_derivation(shape, args.i)
    else:
        try:
            result = upper_derivation(shape, args.rows)
        except IndexError as exc:
            raise DomainError(str(exc)) from exc
    print(json.dumps(list(result)) if args.json else format_partition(result))
    return 0


def _read_tableau(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_tableau(text)


def cmd_tiling(args) -> int:
    t = _read_tableau(args.tableau)
    try:
        tiling = canonical_tiling(t)
    except NoTilingError as exc:
        raise DomainError(f"not an LR tableau: {exc}") from exc
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        print(json.dumps([str(s) for s in tiling.sequences]))
    else:
        print(tiling)
    return 0


def cmd_bump(args) -> int:
    t = _read_tableau(args.tableau)
    if not is_lr(t):
        raise DomainError("row bumping needs an LR tableau")
    tt = TiledTableau.canonical(t)

    def trace(msg: str, state: TiledTableau) -> None:
        print(f"-- {msg}")
        print(state.subindexed())

    if args.trace:
        print("-- start")
        print(tt.subindexed())
    try:
        out = iterated_bump(tt, args.rows, trace if args.trace else None) if args.rows \
            else bump_row(tt, args.row, trace if args.trace else None)
    except (BumpError, IndexError) as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        print(json.dumps({
            "shape": {"gamma": list(out.tableau.shape.outer), "lambda": list(out.tableau.shape.inner)},
            "content": list(content(out.tableau)),
            "tableau": format_tableau(out.tableau).splitlines(),
        }))
    else:
        if args.trace:
            print("-- result")
        print(format_tableau(out.tableau))
    return 0


def cmd_survey(args) -> int:
    rows, cols = args.box
    cfg = SurveyConfig(rows, cols, FilterConfig.build(max_upper_j=args.max_upper_j), args.workers)
    result = survey(cfg)
    text = result.to_json() if args.out == "json" else result.to_csv()
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrbounds", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lrcoef", help="exact LR coefficient by tableau enumeration")
    _add_shape_args(p, with_mu=True)
    p.add_argument("--list", action="store_true", help="print every LR tableau")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lrcoef)

    p = sub.add_parser("filter", help="run the dominance-order necessary conditions")
    _add_shape_args(p, with_mu=True)
    p.add_argument("--families", type=_int_list, default=None, help="variants to use, e.g. 1,2,3,4")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--no-upper", action="store_true")
    g.add_argument("--no-lower", action="store_true")
    p.add_argument("--max-upper-j", type=int, default=None, help="cap on deleted rows for upper bounds")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("derive", help="lower or upper derivation of a skew shape")
    p.add_argument("kind", choices=("lower", "upper"))
    _add_shape_args(p)
    p.add_argument("--i", type=int, default=0, help="lower: cells dropped per column")
    p.add_argument("--rows", type=_int_list, default=(), help="upper: 1-based rows to delete, e.g. 1,3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("tiling", help="canonical ballot tiling of an LR tableau")
    p.add_argument("--tableau", required=True, help="tableau file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tiling)

    p = sub.add_parser("bump", help="row bumping on an LR tableau")
    p.add_argument("--tableau", required=True, help="tableau file ('-' for stdin)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--row", type=int, help="1-based row to bump out")
    g.add_argument("--rows", type=_int_list, help="iterated bump over 1-based rows, e.g. 1,3")
    p.add_argument("--trace", action="store_true", help="print every intermediate tiling")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bump)

    p = sub.add_parser("survey", help="exhaustive census over a box")
    p.add_argument("--box", type=_box, required=True, help="N or RxC")
    p.add_argument("--out", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--workers", type=int, default=None, help="processes (overrides LR_SURVEY_WORKERS)")
    p.add_argument("--max-upper-j", type=int, default=None)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose or args.command == "survey" else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except (DomainError, ContainmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
