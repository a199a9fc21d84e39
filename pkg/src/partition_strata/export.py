"""Tabular outputs (CSV, or JSON arrays of row objects)."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .capacity import capacity_profile
from .graph import PartitionGraph
from .strata import Stratification, boundaries, interface_graph
from .traces import REGIONS, boundary_trace, layer_trace, region

LAYERS_HEADER = ("n", "partition", "dim_loc", "s", "t")
LAYER_SIZES_HEADER = ("n", "r", "size")
THRESHOLDS_HEADER = ("kind", "r", "n", "witness")
BOUNDARIES_HEADER = ("n", "r", "side", "partition")
INTERFACE_HEADER = ("n", "r", "left", "right")
TRACES_HEADER = ("n", "region", "kind", "r", "partition")


def write_table(out_dir, name: str, header, rows, fmt: str = "csv") -> Path:
    """Write ``name.csv`` or ``name.json``; JSON mirrors the CSV rows."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = list(rows)
    if fmt == "json":
        path = out_dir / f"{name}.json"
        doc = [dict(zip(header, row)) for row in rows]
        path.write_text(json.dumps(doc, indent=1) + "\n")
    else:
        path = out_dir / f"{name}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    return path


def layer_rows(s: Stratification):
    for v, lam in enumerate(s.vertices):
        prof = capacity_profile(lam)
        yield s.n, str(lam), s.dims[v], prof.s, prof.t


def layer_size_rows(s: Stratification):
    for r in sorted(s.layers):
        yield s.n, r, len(s.layers[r])


def threshold_rows(table):
    for kind, r, n, w in table.rows():
        yield kind, r, n, str(w)


def boundary_rows(s: Stratification, g: PartitionGraph, r: int):
    b = boundaries(s, g, r)
    for side, ids in (("lower", b.lower), ("upper", b.upper)):
        for v in sorted(ids):
            yield s.n, r, side, str(g.vertices[v])


def interface_rows(s: Stratification, g: PartitionGraph, r: int):
    for u, v in interface_graph(s, g, r).edges:
        yield s.n, r, str(g.vertices[u]), str(g.vertices[v])


def trace_rows(s: Stratification, g: PartitionGraph):
    """Traces on every region that exists at this n, all levels, layers then boundaries."""
    for name in REGIONS:
        if name == "framework" and s.n < 2:
            continue
        reg = region(name, s.n, g)
        for r in range(s.delta + 1):
            for lam in sorted(layer_trace(s, reg, r), reverse=True):
                yield s.n, name, "layer", r, str(lam)
        for r in range(s.delta):
            for lam in sorted(boundary_trace(boundaries(s, g, r), reg, g), reverse=True):
                yield s.n, name, "boundary", r, str(lam)
