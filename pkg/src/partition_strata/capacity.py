"""Star and top capacities, and the closed-form local simplex dimension.

For a removable corner ``c`` the *star* is the set of addable corners ``a``
for which moving ``c`` to ``a`` is admissible; for an addable corner ``a``
the *top* is the set of removable corners that can be moved onto ``a``.
The star (top) capacity is the largest star (top) over all corners.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument
from .partitions import (
    Cell,
    Partition,
    addable_corners,
    removable_corners,
    transfer_table,
)


@dataclass(frozen=True)
class CapacityProfile:
    s: int
    t: int
    dim_loc: int
    star_witness: Cell | None
    top_witness: Cell | None


def _best(groups: dict[Cell, list]) -> tuple[int, Cell | None]:
    # ties go to the smallest row index
    best, witness = 0, None
    for cell in sorted(groups):
        k = len(groups[cell])
        if k > best:
            best, witness = k, cell
    return best, witness


def _stars(lam: Partition) -> dict[Cell, list[Cell]]:
    table = transfer_table(lam)
    return {c: [a for (cc, a) in table if cc == c] for c in removable_corners(lam)}


def _tops(lam: Partition) -> dict[Cell, list[Cell]]:
    table = transfer_table(lam)
    return {a: [c for (c, aa) in table if aa == a] for a in addable_corners(lam)}


def star_capacity(lam: Partition) -> tuple[int, Cell | None]:
    if lam.n == 1:
        return 0, None
    return _best(_stars(lam))


def top_capacity(lam: Partition) -> tuple[int, Cell | None]:
    if lam.n == 1:
        return 0, None
    return _best(_tops(lam))


def full_star_simplex(lam: Partition, c: Cell) -> set[Partition]:
    c = Cell(*c)
    if c not in removable_corners(lam):
        raise InvalidArgument(f"{c} is not a removable corner of {lam}")
    table = transfer_table(lam)
    return {lam} | {mu for (cc, _), mu in table.items() if cc == c}


def full_top_simplex(lam: Partition, a: Cell) -> set[Partition]:
    a = Cell(*a)
    if a not in addable_corners(lam):
        raise InvalidArgument(f"{a} is not an addable corner of {lam}")
    table = transfer_table(lam)
    return {lam} | {mu for (_, aa), mu in table.items() if aa == a}


def capacity_profile(lam: Partition) -> CapacityProfile:
    s, cw = star_capacity(lam)
    t, aw = top_capacity(lam)
    dim = 0 if lam.n == 1 else max(1, s, t)
    return CapacityProfile(s, t, dim, cw, aw)


def dim_loc_capacity(lam: Partition) -> int:
    return capacity_profile(lam).dim_loc
