"""Command-line entry point: ``partition-strata <command> ...``.

Exit codes: 0 ok, 1 claim falsified or oracle disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import ConsistencyError, InvalidArgument
from .export import (
    BOUNDARIES_HEADER,
    INTERFACE_HEADER,
    LAYER_SIZES_HEADER,
    LAYERS_HEADER,
    THRESHOLDS_HEADER,
    TRACES_HEADER,
    boundary_rows,
    interface_rows,
    layer_rows,
    layer_size_rows,
    threshold_rows,
    trace_rows,
    write_table,
)
from .graph import build_graph, write_edge_list
from .report import verify
from .runner import stratify_many
from .strata import MODES, ThresholdScanner
from .traces import require_framework_identities

log = logging.getLogger("partition_strata")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _level(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, default=Path("."), help="output directory")
    common.add_argument("--cache", type=Path, default=None, help="cache directory")
    common.add_argument("--jobs", type=_positive, default=1)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="partition-strata", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="write the edge list of G_n")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("layers", parents=[common], help="per-vertex dimensions and layer sizes")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=MODES, default="capacity")

    p = sub.add_parser("thresholds", parents=[common], help="first occurrences of layers and boundaries")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--mode", choices=MODES, default="capacity")

    p = sub.add_parser("boundaries", parents=[common], help="phase boundary and interface edges at level r")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--r", type=_level, required=True)
    p.add_argument("--mode", choices=MODES, default="capacity")

    p = sub.add_parser("traces", parents=[common], help="layer and boundary traces on the axis and framework")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--mode", choices=MODES, default="capacity")

    p = sub.add_parser("verify", parents=[common], help="check every registered claim over 1..n-max")
    p.add_argument("--n-max", type=_positive, default=30)
    return parser


def _strat(args, n: int):
    return stratify_many([n], args.mode, jobs=1, cache_dir=args.cache)[n]


def cmd_graph(args) -> int:
    g = build_graph(args.n)
    args.out.mkdir(parents=True, exist_ok=True)
    path = args.out / "edges.tsv"
    with path.open("w") as fh:
        count = write_edge_list(g, fh)
    print(f"G_{args.n}: {len(g)} vertices, {count} edges -> {path}")
    return 0


def cmd_layers(args) -> int:
    s = _strat(args, args.n)
    write_table(args.out, "layers", LAYERS_HEADER, layer_rows(s), args.format)
    path = write_table(args.out, "layer_sizes", LAYER_SIZES_HEADER, layer_size_rows(s), args.format)
    sizes = ", ".join(f"|L_{r}|={len(ids)}" for r, ids in sorted(s.layers.items()))
    print(f"n={args.n}: Delta={s.delta}; {sizes} -> {path.parent}")
    return 0


def cmd_thresholds(args) -> int:
    ns = range(1, args.n_max + 1)
    strata = stratify_many(ns, args.mode, jobs=args.jobs, cache_dir=args.cache)
    scanner = ThresholdScanner()
    for n in ns:
        scanner.add(strata[n], build_graph(n))
    path = write_table(args.out, "thresholds", THRESHOLDS_HEADER, threshold_rows(scanner.table), args.format)
    for kind, r, n, w in scanner.table.rows():
        print(f"{kind:>12}({r}) = {n:>3}   {w}")
    print(f"-> {path}")
    return 0


def cmd_boundaries(args) -> int:
    g = build_graph(args.n)
    s = _strat(args, args.n)
    write_table(args.out, "boundaries", BOUNDARIES_HEADER, boundary_rows(s, g, args.r), args.format)
    write_table(args.out, "interface_edges", INTERFACE_HEADER, interface_rows(s, g, args.r), args.format)
    return 0


def cmd_traces(args) -> int:
    g = build_graph(args.n)
    s = _strat(args, args.n)
    require_framework_identities(s, g)
    write_table(args.out, "traces", TRACES_HEADER, trace_rows(s, g), args.format)
    return 0


def cmd_verify(args) -> int:
    report = verify(args.n_max, jobs=args.jobs, cache_dir=args.cache)
    args.out.mkdir(parents=True, exist_ok=True)
    path = args.out / "verify.json"
    path.write_text(report.to_json())
    for line in report.summary_lines():
        print(line)
    print(f"-> {path}")
    return 0 if report.ok else 1


COMMANDS = {
    "graph": cmd_graph,
    "layers": cmd_layers,
    "thresholds": cmd_thresholds,
    "boundaries": cmd_boundaries,
    "traces": cmd_traces,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
