"""Exact clique numbers of small graphs.

Graphs are given as lists of Python-int bitsets: bit ``j`` of ``adj[i]``
is set iff ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import PartitionGraph
from .partitions import Partition


@dataclass(frozen=True)
class InducedSubgraph:
    members: tuple[int, ...]
    adj: tuple[int, ...]

    @classmethod
    def of(cls, g: PartitionGraph, members: Sequence[int]) -> "InducedSubgraph":
        members = tuple(members)
        pos = {v: i for i, v in enumerate(members)}
        adj = []
        for v in members:
            mask = 0
            for w in g.adjacency[v]:
                i = pos.get(w)
                if i is not None:
                    mask |= 1 << i
            adj.append(mask)
        return cls(members, tuple(adj))

    @classmethod
    def from_edges(cls, size: int, edges) -> "InducedSubgraph":
        adj = [0] * size
        for u, v in edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return cls(tuple(range(size)), tuple(adj))

    def __len__(self) -> int:
        return len(self.members)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def clique_number_masks(adj: Sequence[int]) -> int:
    """Bron-Kerbosch with Tomita pivoting and a size bound."""
    best = 0

    def expand(size: int, cand: int, excl: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        pivot, most = -1, -1
        for u in _bits(cand | excl):
            k = (cand & adj[u]).bit_count()
            if k > most:
                pivot, most = u, k
        for v in _bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v
            if size + cand.bit_count() <= best:
                return

    expand(0, (1 << len(adj)) - 1, 0)
    return best


def clique_number(g: InducedSubgraph) -> int:
    return clique_number_masks(g.adj)


def clique_number_naive(adj: Sequence[int]) -> int:
    """Largest subset that is pairwise adjacent, by checking every subset."""
    m = len(adj)
    best = 0
    for subset in range(1 << m):
        size = subset.bit_count()
        if size <= best:
            continue
        if all(subset & ~(1 << v) & ~adj[v] == 0 for v in _bits(subset)):
            best = size
    return best


def dim_loc_clique(lam: Partition, g: PartitionGraph) -> int:
    v = g.vertex_id(lam)
    if g.n == 1:
        return 0
    return clique_number(InducedSubgraph.of(g, g.adjacency[v]))


def dim_loc_clique_all(g: PartitionGraph) -> list[int]:
    if g.n == 1:
        return [0]
    return [clique_number(InducedSubgraph.of(g, nbrs)) for nbrs in g.adjacency]

