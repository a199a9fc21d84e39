"""Range verification of the published values and conjectures.

Every claim in :data:`CLAIMS` is evaluated over n = 1..n_max and reported
as ``verified-in-range``, ``falsified`` (with a counterexample) or
``skipped`` (nothing in range to check).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConsistencyError
from .graph import PartitionGraph, build_graph
from .partitions import Partition, hook, one_cell_extensions, staircase
from .runner import stratify_many
from .strata import Stratification, ThresholdScanner, boundary_levels, boundaries, component_count
from .traces import framework, framework_violations

VERIFIED = "verified-in-range"
FALSIFIED = "falsified"
SKIPPED = "skipped"

CLAIMS = (
    "claim.zero-layer",
    "claim.oracle.agreement",
    "claim.delta.sequence",
    "claim.tau.table",
    "claim.tau.triangular",
    "claim.layersizes.table",
    "claim.firstfamily.staircase",
    "claim.L1.antennas",
    "claim.boundary.table",
    "claim.boundary.tau-eq",
    "claim.framework.lowlayers",
    "claim.framework.traces",
)

# Published values, all for n <= 30.
PUBLISHED_RANGE = 30
PUBLISHED_DELTA = (0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 7, 7)
PUBLISHED_TAU = {0: 1, 1: 2, 2: 4, 3: 7, 4: 11, 5: 16, 6: 22, 7: 29}
PUBLISHED_LAYER_SIZES = {
    # n: (Delta, |L_1|, ..., |L_7|)
    4: (2, 2, 3, 0, 0, 0, 0, 0),
    7: (3, 2, 9, 4, 0, 0, 0, 0),
    11: (4, 2, 19, 30, 5, 0, 0, 0),
    16: (5, 2, 29, 114, 80, 6, 0, 0),
    22: (6, 2, 40, 268, 489, 196, 7, 0),
    29: (7, 2, 57, 494, 1725, 1859, 420, 8),
}
PUBLISHED_TAU_BOUNDARY = {1: 4, 2: 7, 3: 11, 4: 16, 5: 22, 6: 29}
PUBLISHED_FIRST_LAYERS = {
    2: {(3, 1), (2, 2), (2, 1, 1)},
    3: {(4, 2, 1), (3, 3, 1), (3, 2, 2), (3, 2, 1, 1)},
    4: {(5, 3, 2, 1), (4, 4, 2, 1), (4, 3, 3, 1), (4, 3, 2, 2), (4, 3, 2, 1, 1)},
}


def triangular_threshold(r: int) -> int:
    return 1 + r * (r + 1) // 2


@dataclass
class Check:
    claim: str
    status: str = SKIPPED
    details: list[str] = field(default_factory=list)
    counterexample: dict | None = None

    def passed(self, note: str) -> None:
        if self.status == FALSIFIED:
            return
        self.status = VERIFIED
        self.details.append(note)

    def failed(self, note: str, n: int | None = None, partition=None) -> None:
        self.details.append(note)
        if self.status != FALSIFIED:
            self.status = FALSIFIED
            self.counterexample = {
                "n": n,
                "partition": None if partition is None else str(Partition(partition)),
            }

    def as_dict(self) -> dict:
        out = {"status": self.status, "details": self.details}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class VerificationReport:
    range_max: int
    checks: dict[str, Check]
    thresholds: dict = field(default_factory=dict)
    deltas: dict[int, int] = field(default_factory=dict)
    exploratory: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != FALSIFIED for c in self.checks.values())

    def as_dict(self) -> dict:
        return {
            "range_max": self.range_max,
            "claims": {cid: self.checks[cid].as_dict() for cid in CLAIMS},
            "delta": {str(n): d for n, d in sorted(self.deltas.items())},
            "thresholds": self.thresholds,
            "exploratory": self.exploratory,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    def summary_lines(self) -> list[str]:
        lines = [f"verification over 1 <= n <= {self.range_max}"]
        for cid in CLAIMS:
            c = self.checks[cid]
            line = f"{c.status:>18}  {cid}"
            if c.counterexample:
                line += f"  (n={c.counterexample['n']}, {c.counterexample['partition']})"
            lines.append(line)
        return lines


def _sizes(s: Stratification) -> tuple[int, ...]:
    return (s.delta,) + tuple(len(s.ids(r)) for r in range(1, 8))


def verify(n_max: int = PUBLISHED_RANGE, jobs: int = 1, cache_dir=None) -> VerificationReport:
    checks = {cid: Check(cid) for cid in CLAIMS}
    report = VerificationReport(n_max, checks)
    ns = list(range(1, n_max + 1))

    oracle = checks["claim.oracle.agreement"]
    try:
        strata = stratify_many(ns, "cross-check", jobs=jobs, cache_dir=cache_dir)
    except ConsistencyError as exc:
        oracle.failed(str(exc), exc.n, exc.partition)
        # keep going on capacity values so every other claim is still reported
        strata = stratify_many(ns, "capacity", jobs=jobs)
    else:
        if n_max >= 2:
            oracle.passed(f"capacity formula equals neighborhood clique number for every vertex, 2 <= n <= {n_max}")

    scanner = ThresholdScanner()
    graphs: dict[int, PartitionGraph] = {}
    for n in ns:
        g = build_graph(n)
        graphs[n] = g
        s = strata[n]
        scanner.add(s, g)
        report.deltas[n] = s.delta
        report.exploratory[str(n)] = {
            str(r): {"boundary_size": len(boundaries(s, g, r).full),
                     "boundary_components": component_count(g, boundaries(s, g, r).full)}
            for r in sorted(boundary_levels(s, g))
        }
    table = scanner.table
    report.thresholds = {
        kind: {str(r): {"n": n, "witness": str(w)} for r, n, w in _rows(table, kind)}
        for kind in ("tau", "tau_ge", "tau_boundary")
    }

    _check_zero_layer(checks["claim.zero-layer"], strata)
    _check_delta(checks["claim.delta.sequence"], strata, n_max)
    _check_tau_table(checks["claim.tau.table"], table)
    _check_triangular(checks["claim.tau.triangular"], table, n_max)
    _check_layer_sizes(checks["claim.layersizes.table"], strata)
    _check_first_family(checks["claim.firstfamily.staircase"], strata, table)
    _check_antennas(checks["claim.L1.antennas"], strata)
    _check_boundary_table(checks["claim.boundary.table"], table)
    _check_boundary_tau(checks["claim.boundary.tau-eq"], table, n_max)
    _check_framework(checks["claim.framework.lowlayers"], checks["claim.framework.traces"], strata, graphs)
    return report


def _rows(table, kind):
    return [(r, n, w) for k, r, n, w in table.rows() if k == kind]


def _check_zero_layer(c: Check, strata) -> None:
    s1 = strata[1]
    if s1.layers == {0: frozenset({0})}:
        c.passed("L_0(1) = {[1]}")
    else:
        c.failed("L_0(1) != {[1]}", 1, (1,))
    bad = [n for n, s in strata.items() if n >= 2 and s.ids(0)]
    if bad:
        s = strata[bad[0]]
        c.failed(f"L_0(n) nonempty for n in {bad}", bad[0], s.vertices[min(s.ids(0))])
    elif len(strata) > 1:
        c.passed(f"L_0(n) empty for 2 <= n <= {max(strata)}")


def _check_delta(c: Check, strata, n_max: int) -> None:
    top = min(n_max, PUBLISHED_RANGE)
    if top < 2:
        return
    for n in range(2, top + 1):
        s = strata[n]
        if s.delta != PUBLISHED_DELTA[n - 1]:
            c.failed(f"Delta({n}) = {s.delta}, published {PUBLISHED_DELTA[n - 1]}", n,
                     s.vertices[min(s.ids(s.delta))])
            return
    c.passed(f"Delta(n) matches the published sequence for 2 <= n <= {top}")


def _check_tau_table(c: Check, table) -> None:
    rs = [r for r in sorted(PUBLISHED_TAU) if r >= 1 and PUBLISHED_TAU[r] <= table.range_max]
    for r in rs:
        got = table.tau.get(r)
        if got != PUBLISHED_TAU[r]:
            c.failed(f"tau({r}) = {got}, published {PUBLISHED_TAU[r]}", got)
            return
    if rs:
        gaps = [table.tau[r] - table.tau[r - 1] for r in rs]
        if gaps != list(rs):
            c.failed(f"threshold gaps {gaps} are not {list(rs)}")
            return
        c.passed(f"tau(r) matches the published table for 1 <= r <= {rs[-1]}; gaps {gaps}")


def _check_triangular(c: Check, table, n_max: int) -> None:
    witnessed = sorted(r for r in table.tau if r >= 1)
    for r in witnessed:
        want = triangular_threshold(r)
        if table.tau[r] != want:
            c.failed(f"tau({r}) = {table.tau[r]} but 1 + r(r+1)/2 = {want}",
                     table.tau[r], table.witnesses[("tau", r)])
            return
    r = (max(witnessed) if witnessed else 0) + 1
    if triangular_threshold(r) <= n_max:
        c.failed(f"no vertex with dim_loc = {r} although 1 + r(r+1)/2 = {triangular_threshold(r)} <= {n_max}",
                 triangular_threshold(r))
        return
    if witnessed:
        c.passed(f"tau(r) = 1 + r(r+1)/2 for r <= {witnessed[-1]}; r >= {r} beyond range")


def _check_layer_sizes(c: Check, strata) -> None:
    rows = [n for n in sorted(PUBLISHED_LAYER_SIZES) if n in strata]
    for n in rows:
        got = _sizes(strata[n])
        if got != PUBLISHED_LAYER_SIZES[n]:
            c.failed(f"n={n}: (Delta, |L_1..L_7|) = {got}, published {PUBLISHED_LAYER_SIZES[n]}", n)
            return
    if rows:
        c.passed(f"layer-size rows match for n in {rows}")


def _check_first_family(c: Check, strata, table) -> None:
    checked = []
    for r in sorted(table.tau):
        if r < 2:
            continue
        n = table.tau[r]
        s = strata[n]
        got = s.to_partitions(s.ids(r))
        want = one_cell_extensions(staircase(r))
        if got != want or len(got) != r + 1:
            odd = sorted(got ^ want, reverse=True)
            c.failed(f"L_{r}({n}) is not the one-cell extensions of the staircase of size {r}", n, odd[0])
            return
        listing = PUBLISHED_FIRST_LAYERS.get(r)
        if listing is not None and {tuple(p) for p in got} != listing:
            c.failed(f"L_{r}({n}) differs from the published listing", n)
            return
        checked.append(r)
    if checked:
        c.passed(f"L_r(tau(r)) = one-cell extensions of the staircase, |L_r| = r+1, for r in {checked}")


def _check_antennas(c: Check, strata) -> None:
    ns = [n for n in sorted(strata) if n >= 4]
    for n in ns:
        s = strata[n]
        got = s.to_partitions(s.ids(1))
        want = {hook(n, 0), hook(n, n - 1)}
        if got != want:
            c.failed(f"L_1({n}) = {sorted(map(str, got))}", n, sorted(got ^ want, reverse=True)[0])
            return
    if ns:
        c.passed(f"L_1(n) = {{(n), (1^n)}} for 4 <= n <= {ns[-1]}")


def _check_boundary_table(c: Check, table) -> None:
    rs = [r for r in sorted(PUBLISHED_TAU_BOUNDARY) if PUBLISHED_TAU_BOUNDARY[r] <= table.range_max]
    for r in rs:
        got = table.tau_boundary.get(r)
        if got != PUBLISHED_TAU_BOUNDARY[r]:
            c.failed(f"tau_boundary({r}) = {got}, published {PUBLISHED_TAU_BOUNDARY[r]}", got)
            return
    if rs:
        c.passed(f"tau_boundary(r) matches the published table for 1 <= r <= {rs[-1]}")


def _check_boundary_tau(c: Check, table, n_max: int) -> None:
    rs = sorted({r for r in table.tau_boundary if r >= 1} | {r - 1 for r in table.tau if r >= 2})
    for r in rs:
        a, b = table.tau_boundary.get(r), table.tau.get(r + 1)
        if a != b:
            c.failed(f"tau_boundary({r}) = {a} but tau({r + 1}) = {b}", a or b)
            return
    if rs:
        c.passed(f"tau_boundary(r) = tau(r+1) for 1 <= r <= {rs[-1]}")


def _check_framework(low: Check, traces: Check, strata, graphs) -> None:
    ns = [n for n in sorted(strata) if n >= 4]
    for n in ns:
        s, g = strata[n], graphs[n]
        fw = framework(n, g)
        dims = {s.dims[v] for v in fw.members}
        antennas = {hook(n, 0), hook(n, n - 1)}
        in_l1 = s.to_partitions(s.ids(1) & fw.members)
        if not dims <= {1, 2} or in_l1 != antennas:
            bad = [s.vertices[v] for v in sorted(fw.members) if s.dims[v] not in (1, 2)]
            bad += sorted(in_l1 ^ antennas, reverse=True)
            if low.status != FALSIFIED:
                low.failed(f"n={n}: framework leaves L_1 u L_2 or L_1 trace is not the antennas", n, bad[0])
        problems = framework_violations(s, g)
        if problems and traces.status != FALSIFIED:
            traces.failed("; ".join(problems), n)
    if ns:
        low.passed(f"Fw within L_1 u L_2 and Fw & L_1 = antennas for 4 <= n <= {ns[-1]}")
        traces.passed(f"framework boundary traces hold for 4 <= n <= {ns[-1]}")
