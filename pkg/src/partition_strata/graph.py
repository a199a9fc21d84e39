"""The partition graph G_n: partitions of n joined by single-unit moves."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import InvalidArgument
from .partitions import Partition, enumerate_partitions, format_partition, transfer_table


def neighbors_by_corners(lam: Partition) -> set[Partition]:
    """Neighbors as admissible corner transfers of the Ferrers diagram."""
    return set(transfer_table(lam).values())


def neighbors_by_multiset(lam: Partition) -> set[Partition]:
    """Neighbors as 'take one unit from a part, give it to another part or a new part'.

    Kept independent of the corner calculus; used as a test oracle.
    """
    parts = list(lam)
    out = set()
    for i in range(len(parts)):
        for j in range(len(parts) + 1):
            if i == j:
                continue
            moved = parts + [0]
            moved[i] -= 1
            moved[j] += 1
            mu = Partition.from_parts(moved)
            if mu != lam:
                out.add(mu)
    return out


@dataclass(frozen=True)
class PartitionGraph:
    n: int
    vertices: tuple[Partition, ...]
    index: dict[Partition, int] = field(repr=False)
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    # bitset rows for O(1) membership; bit j of masks[i] set iff i ~ j
    masks: tuple[int, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_id(self, lam: Partition) -> int:
        try:
            return self.index[lam]
        except KeyError:
            raise InvalidArgument(f"{format_partition(lam)} is not a vertex of G_{self.n}") from None

    def neighbors(self, lam: Partition) -> set[Partition]:
        return {self.vertices[j] for j in self.adjacency[self.vertex_id(lam)]}

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2


def build_graph(n: int) -> PartitionGraph:
    vertices = tuple(enumerate_partitions(n))
    index = {lam: i for i, lam in enumerate(vertices)}
    adjacency = tuple(
        tuple(sorted(index[mu] for mu in neighbors_by_corners(lam))) for lam in vertices
    )
    masks = tuple(sum(1 << j for j in nbrs) for nbrs in adjacency)
    return PartitionGraph(n, vertices, index, adjacency, masks)


def write_edge_list(g: PartitionGraph, fh: TextIO) -> int:
    """Write one ``[lam]\\t[mu]`` line per edge, lam before mu canonically."""
    count = 0
    for u, v in g.edges():
        fh.write(f"{g.vertices[u]}\t{g.vertices[v]}\n")
        count += 1
    return count
