"""Command-line interface: compute, enumerate, verify, dsl-eval, correlate.

Data goes to stdout, diagnostics to stderr. Exit status is 0 on success,
1 when a verification check fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import verify
from .chem import DatasetError, correlate, load_dataset
from .enumeration import EnumerationError, enumerate_free_trees
from .formatting import exact_or_none, format_float
from .graph import GraphFormatError, canonical_code, parse_edge_list
from .indices import BUILTINS, IndexSpec, evaluate_index, get_index
from .mean_dsl import PhiDomainError, PhiSyntaxError, classify, eval_phi, format_phi, parse_phi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_range(text: str) -> tuple:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad --n-range {text!r}; expected a..b") from None
    if lo > hi:
        raise UsageError("empty --n-range")
    return lo, hi


def _index_from_args(args) -> IndexSpec:
    if args.phi is not None:
        return IndexSpec.from_phi(args.phi)
    return get_index(args.index)


def cmd_compute(args, out) -> int:
    spec = _index_from_args(args)
    g = parse_edge_list(Path(args.graph).read_text())
    value = evaluate_index(g, spec)
    out.write(
        _dump({"index": spec.name, "value_exact": exact_or_none(value), "value_float": format_float(value)})
        + "\n"
    )
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    trees = enumerate_free_trees(args.n, args.max_degree)
    if args.emit == "count":
        out.write(f"{sum(1 for _ in trees)}\n")
    elif args.emit == "canon":
        for t in trees:
            out.write(canonical_code(t) + "\n")
    else:
        for t in trees:
            out.write(t.to_edge_string() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    lo, hi = _parse_range(args.n_range)
    workers = args.workers if args.workers is not None else verify.default_workers()
    reports = verify.run_theorem(args.theorem, lo, hi, workers=workers)
    passed = all(r.passed for r in reports)
    for r in reports:
        status = "ok" if r.passed else "FAIL: " + "; ".join(r.failures())
        label = f"n={r.n}" if r.n is not None else "samples"
        print(f"{args.theorem} {label}: scanned {r.scanned} in {r.wall_time:.2f}s, {status}", file=sys.stderr)
    doc = {
        "theorem": args.theorem,
        "n_range": [lo, hi],
        "passed": passed,
        "reports": [r.to_dict() for r in reports],
    }
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_dsl_eval(args, out) -> int:
    e = parse_phi(args.phi)
    try:
        a, b = (int(x) for x in args.degrees.split(","))
    except ValueError:
        raise UsageError("--degrees expects two integers like 2,4") from None
    if a < 1 or b < 1:
        raise UsageError("degrees must be positive")
    value = eval_phi(e, a, b)
    out.write(
        _dump(
            {
                "phi": format_phi(e),
                "class": classify(e).value,
                "degrees": [a, b],
                "value_exact": exact_or_none(value),
                "value_float": format_float(value),
            }
        )
        + "\n"
    )
    return EXIT_OK


def cmd_correlate(args, out) -> int:
    spec = _index_from_args(args)
    ds = load_dataset(args.data, kind=args.kind)
    r, abs_r = correlate(ds, spec, args.property)
    out.write(
        _dump(
            {
                "index": spec.name,
                "property": args.property,
                "r": format_float(r),
                "abs_r": format_float(abs_r),
                "n_rows": len(ds.rows),
            }
        )
        + "\n"
    )
    return EXIT_OK


def _add_index_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--index", choices=sorted(BUILTINS), help="builtin index name")
    g.add_argument("--phi", help='edge-weight expression, e.g. "H/A"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topoindex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate an index on a graph")
    _add_index_args(p)
    p.add_argument("--graph", required=True, help="edge-list file, one 'u v' pair per line")
    p.set_defaults(func=cmd_compute, usage=p.format_usage())

    p = sub.add_parser("enumerate", help="list non-isomorphic trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--emit", choices=["edges", "canon", "count"], default="edges")
    p.set_defaults(func=cmd_enumerate, usage=p.format_usage())

    p = sub.add_parser("verify", help="exhaustively check an extremal result")
    p.add_argument("--theorem", required=True, choices=sorted(verify.THEOREMS) + ["phi-monotone"])
    p.add_argument("--n-range", required=True, help="inclusive range a..b")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--workers", type=int, help="worker processes (default: $TOPOINDEX_WORKERS or CPU count)")
    p.set_defaults(func=cmd_verify, usage=p.format_usage())

    p = sub.add_parser("dsl-eval", help="evaluate an expression at one degree pair")
    p.add_argument("--phi", required=True)
    p.add_argument("--degrees", required=True, help="two degrees, e.g. 2,4")
    p.set_defaults(func=cmd_dsl_eval, usage=p.format_usage())

    p = sub.add_parser("correlate", help="Pearson r between an index and a property")
    _add_index_args(p)
    p.add_argument("--data", required=True, help="CSV with header id,edges,<props>")
    p.add_argument("--property", required=True)
    p.add_argument("--kind", choices=["alkane"], help="validate rows as molecular trees")
    p.set_defaults(func=cmd_correlate, usage=p.format_usage())
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(args.usage, end="", file=sys.stderr)
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (
        GraphFormatError,
        PhiSyntaxError,
        PhiDomainError,
        EnumerationError,
        DatasetError,
        KeyError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
