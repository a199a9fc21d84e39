"""Simplex layers, phase boundaries, interface graphs and thresholds."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .capacity import capacity_profile
from .cliques import dim_loc_clique_all
from .errors import ConsistencyError, InvalidArgument
from .graph import PartitionGraph, build_graph
from .partitions import Partition

Mode = Literal["capacity", "clique", "cross-check"]
MODES = ("capacity", "clique", "cross-check")


@dataclass(frozen=True)
class Stratification:
    n: int
    vertices: tuple[Partition, ...] = field(repr=False)
    dims: tuple[int, ...] = field(repr=False)
    layers: dict[int, frozenset[int]] = field(repr=False)
    delta: int

    @classmethod
    def from_dims(cls, n: int, vertices, dims) -> "Stratification":
        dims = tuple(dims)
        if len(dims) != len(vertices):
            raise InvalidArgument("one dimension per vertex is required")
        groups = defaultdict(set)
        for v, d in enumerate(dims):
            groups[d].add(v)
        layers = {r: frozenset(groups[r]) for r in sorted(groups)}
        return cls(n, tuple(vertices), dims, layers, max(dims))

    def ids(self, r: int) -> frozenset[int]:
        return self.layers.get(r, frozenset())

    def to_partitions(self, ids: Iterable[int]) -> set[Partition]:
        return {self.vertices[v] for v in ids}


@dataclass(frozen=True)
class BoundarySets:
    n: int
    r: int
    lower: frozenset[int]
    upper: frozenset[int]

    @property
    def full(self) -> frozenset[int]:
        return self.lower | self.upper


@dataclass(frozen=True)
class InterfaceGraph:
    n: int
    r: int
    left: frozenset[int]
    right: frozenset[int]
    edges: tuple[tuple[int, int], ...]  # (left id, right id), sorted

    def touched(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)


def compute_dims(g: PartitionGraph, mode: Mode = "capacity") -> list[int]:
    if mode not in MODES:
        raise InvalidArgument(f"unknown mode {mode!r}")
    if mode == "clique":
        return dim_loc_clique_all(g)
    by_capacity = [capacity_profile(lam).dim_loc for lam in g.vertices]
    if mode == "cross-check":
        by_clique = dim_loc_clique_all(g)
        for v, (a, b) in enumerate(zip(by_capacity, by_clique)):
            if a != b:
                lam = g.vertices[v]
                raise ConsistencyError(
                    f"dim_loc disagreement at {lam} (n={g.n}): capacity {a}, clique {b}",
                    partition=lam,
                    n=g.n,
                )
    return by_capacity


def stratify(n: int, mode: Mode = "capacity", g: PartitionGraph | None = None) -> Stratification:
    if g is None:
        g = build_graph(n)
    elif g.n != n:
        raise InvalidArgument(f"graph is G_{g.n}, expected G_{n}")
    return Stratification.from_dims(n, g.vertices, compute_dims(g, mode))


def layer(s: Stratification, r: int) -> set[Partition]:
    return s.to_partitions(s.ids(r))


def layer_ge(s: Stratification, r: int) -> set[Partition]:
    return s.to_partitions(v for v, d in enumerate(s.dims) if d >= r)


def _check_same(s: Stratification, g: PartitionGraph) -> None:
    if s.n != g.n:
        raise InvalidArgument(f"stratification is for n={s.n} but graph is G_{g.n}")


def boundaries(s: Stratification, g: PartitionGraph, r: int) -> BoundarySets:
    _check_same(s, g)
    dims = s.dims
    lower = frozenset(
        v for v in s.ids(r) if any(dims[w] == r + 1 for w in g.adjacency[v])
    )
    upper = frozenset(
        v for v in s.ids(r + 1) if any(dims[w] == r for w in g.adjacency[v])
    )
    return BoundarySets(s.n, r, lower, upper)


def interface_graph(s: Stratification, g: PartitionGraph, r: int) -> InterfaceGraph:
    _check_same(s, g)
    dims = s.dims
    edges = []
    for u, v in g.edges():
        if dims[u] == r and dims[v] == r + 1:
            edges.append((u, v))
        elif dims[u] == r + 1 and dims[v] == r:
            edges.append((v, u))
    return InterfaceGraph(s.n, r, s.ids(r), s.ids(r + 1), tuple(sorted(edges)))


def boundary_levels(s: Stratification, g: PartitionGraph) -> set[int]:
    """Levels r with a nonempty (r, r+1) boundary."""
    out = set()
    for u, v in g.edges():
        a, b = s.dims[u], s.dims[v]
        if abs(a - b) == 1:
            out.add(min(a, b))
    return out


def component_count(g: PartitionGraph, members: Iterable[int]) -> int:
    """Connected components of the subgraph induced on ``members``."""
    remaining = set(members)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w in remaining:
                    remaining.remove(w)
                    stack.append(w)
    return count


@dataclass
class ThresholdTable:
    range_max: int
    tau: dict[int, int] = field(default_factory=dict)
    tau_ge: dict[int, int] = field(default_factory=dict)
    tau_boundary: dict[int, int] = field(default_factory=dict)
    witnesses: dict[tuple[str, int], Partition] = field(default_factory=dict)
    deltas: dict[int, int] = field(default_factory=dict)

    def rows(self):
        """(kind, r, n, witness) rows in a fixed order."""
        for kind, table in (("tau", self.tau), ("tau_ge", self.tau_ge), ("tau_boundary", self.tau_boundary)):
            for r in sorted(table):
                yield kind, r, table[r], self.witnesses[(kind, r)]


class ThresholdScanner:
    """Feed stratifications for n = 1, 2, ... in order; records first occurrences."""

    def __init__(self) -> None:
        self.table = ThresholdTable(range_max=0)

    def add(self, s: Stratification, g: PartitionGraph) -> None:
        t = self.table
        if s.n != t.range_max + 1:
            raise InvalidArgument(f"expected n={t.range_max + 1}, got n={s.n}")
        t.range_max = s.n
        t.deltas[s.n] = s.delta
        for r in s.layers:
            if r not in t.tau:
                t.tau[r] = s.n
                t.witnesses[("tau", r)] = s.vertices[min(s.layers[r])]
        for r in range(s.delta + 1):
            if r not in t.tau_ge:
                t.tau_ge[r] = s.n
                first = min(v for v, d in enumerate(s.dims) if d >= r)
                t.witnesses[("tau_ge", r)] = s.vertices[first]
        for r in sorted(boundary_levels(s, g)):
            if r not in t.tau_boundary:
                t.tau_boundary[r] = s.n
                t.witnesses[("tau_boundary", r)] = s.vertices[min(boundaries(s, g, r).full)]


def scan_thresholds(n_max: int, mode: Mode = "capacity") -> ThresholdTable:
    if n_max < 1:
        raise InvalidArgument(f"n_max must be >= 1, got {n_max}")
    scanner = ThresholdScanner()
    for n in range(1, n_max + 1):
        g = build_graph(n)
        scanner.add(stratify(n, mode, g), g)
    return scanner.table
