"""Integer partitions as Ferrers diagrams.

Partitions are stored as weakly decreasing tuples of positive integers.
Cells use 1-based (row, col) coordinates, rows counted from the top.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple

from .errors import InvalidArgument


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Tuple comparison gives reverse-lexicographic canonical order when
    sorted descending, so ``sorted(ps, reverse=True)`` is canonical.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if not parts:
            raise InvalidArgument("empty partition is not allowed")
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise InvalidArgument(f"parts must be positive integers: {parts!r}")
            if i and parts[i - 1] < p:
                raise InvalidArgument(f"parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        # skips validation; callers guarantee canonical form
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Canonicalize an unordered collection of parts (zeros dropped)."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the ``[4,3,2,1]`` text form."""
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise InvalidArgument(f"expected [a,b,...], got {text!r}")
        try:
            parts = [int(x) for x in body[1:-1].split(",")]
        except ValueError:
            raise InvalidArgument(f"bad partition text {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class Cell(NamedTuple):
    row: int
    col: int


class CornerSets(NamedTuple):
    removable: frozenset[Cell]
    addable: frozenset[Cell]


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    return _partition_counts(n)[n]


@lru_cache(maxsize=None)
def _partition_counts(n: int) -> tuple[int, ...]:
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def _descending(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, (n) first."""
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")
    return [Partition._trusted(p) for p in _descending(n, n)]


def conjugate(lam: Partition) -> Partition:
    return Partition._trusted(
        tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))
    )


def removable_corners(lam: Partition) -> list[Cell]:
    k = len(lam)
    return [Cell(i + 1, lam[i]) for i in range(k) if i == k - 1 or lam[i] > lam[i + 1]]


def addable_corners(lam: Partition) -> list[Cell]:
    cells = [Cell(1, lam[0] + 1)]
    cells += [Cell(i + 1, lam[i] + 1) for i in range(1, len(lam)) if lam[i - 1] > lam[i]]
    cells.append(Cell(len(lam) + 1, 1))
    return cells


def corners(lam: Partition) -> CornerSets:
    return CornerSets(frozenset(removable_corners(lam)), frozenset(addable_corners(lam)))


def _is_diagram(rows: list[int]) -> bool:
    return all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1))


def _apply(lam: Partition, c: Cell, a: Cell) -> Partition | None:
    rows = list(lam) + [0]
    rows[c.row - 1] -= 1
    if not _is_diagram(rows):
        return None
    if rows[a.row - 1] != a.col - 1:
        return None
    rows[a.row - 1] += 1
    if not _is_diagram(rows):
        return None
    while rows and rows[-1] == 0:
        rows.pop()
    if not rows:
        return None
    result = tuple(rows)
    if result == lam:
        return None
    return Partition._trusted(result)


def transfer(lam: Partition, c: Cell, a: Cell) -> Partition | None:
    """Move cell ``c`` to cell ``a``.

    Returns the resulting partition, or ``None`` when the transfer is
    inadmissible (invalid shape or no change). Raises if ``c``/``a`` are
    not corners of ``lam``.
    """
    c, a = Cell(*c), Cell(*a)
    rem, add = corners(lam)
    if c not in rem:
        raise InvalidArgument(f"{c} is not a removable corner of {lam}")
    if a not in add:
        raise InvalidArgument(f"{a} is not an addable corner of {lam}")
    return _apply(lam, c, a)


def transfer_table(lam: Partition) -> dict[tuple[Cell, Cell], Partition]:
    """All admissible transfers of ``lam`` keyed by (removed, added) cell."""
    out = {}
    for c in removable_corners(lam):
        for a in addable_corners(lam):
            mu = _apply(lam, c, a)
            if mu is not None:
                out[(c, a)] = mu
    return out


def staircase(r: int) -> Partition:
    if not isinstance(r, int) or r < 1:
        raise InvalidArgument(f"staircase size must be >= 1, got {r!r}")
    return Partition._trusted(tuple(range(r, 0, -1)))


def add_cell(lam: Partition, a: Cell) -> Partition:
    rows = list(lam) + [0]
    rows[a.row - 1] += 1
    if rows[-1] == 0:
        rows.pop()
    return Partition(rows)


def one_cell_extensions(lam: Partition) -> set[Partition]:
    return {add_cell(lam, a) for a in addable_corners(lam)}


def hook(n: int, k: int) -> Partition:
    """The hook (n-k, 1^k)."""
    return Partition._trusted((n - k,) + (1,) * k)


def format_partition(lam) -> str:
    return "[" + ",".join(map(str, lam)) + "]"
