"""Regions of G_n (axis, framework) and the traces of layers and boundaries on them.

The framework is taken to be the set of hook partitions (n-k, 1^k), a path
from (n) to (1^n). That choice lives in :func:`framework` only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, InvalidArgument
from .graph import PartitionGraph
from .partitions import Partition, conjugate, hook
from .strata import BoundarySets, Stratification, boundaries

REGIONS = ("axis", "framework")


@dataclass(frozen=True)
class Region:
    name: str
    n: int
    members: frozenset[int]


def axis(n: int, g: PartitionGraph) -> Region:
    return Region("axis", n, frozenset(v for v, lam in enumerate(g.vertices) if conjugate(lam) == lam))


def framework(n: int, g: PartitionGraph) -> Region:
    if n < 2:
        raise InvalidArgument("the framework needs n >= 2")
    return Region("framework", n, frozenset(g.index[hook(n, k)] for k in range(n)))


def region(name: str, n: int, g: PartitionGraph) -> Region:
    if name == "axis":
        return axis(n, g)
    if name == "framework":
        return framework(n, g)
    raise InvalidArgument(f"unknown region {name!r}")


def layer_trace(s: Stratification, reg: Region, r: int) -> set[Partition]:
    if s.n != reg.n:
        raise InvalidArgument(f"region is for n={reg.n}, stratification for n={s.n}")
    return s.to_partitions(s.ids(r) & reg.members)


def boundary_trace(b: BoundarySets, reg: Region, g: PartitionGraph) -> set[Partition]:
    if b.n != reg.n or g.n != reg.n:
        raise InvalidArgument("boundary, region and graph must share n")
    return {g.vertices[v] for v in b.full & reg.members}


def outer_framework(n: int) -> set[Partition]:
    """(n), (1^n), (n-1,1), (2,1^{n-2})."""
    return {hook(n, 0), hook(n, n - 1), hook(n, 1), hook(n, n - 2)}


def framework_violations(s: Stratification, g: PartitionGraph) -> list[str]:
    """Check the low-layer identities of the hook framework at one n >= 4.

    Returns human-readable failures (empty when all hold).
    """
    n = s.n
    if n < 4:
        return []
    fw = framework(n, g)
    fw_set = s.to_partitions(fw.members)
    antennas = {hook(n, 0), hook(n, n - 1)}
    outer = outer_framework(n)
    problems = []

    high = {lam for lam in fw_set if s.dims[g.index[lam]] not in (1, 2)}
    if high:
        problems.append(f"n={n}: framework vertices outside L1 u L2: {_fmt(high)}")
    if layer_trace(s, fw, 1) != antennas:
        problems.append(f"n={n}: Fw & L1 = {_fmt(layer_trace(s, fw, 1))}")

    b1 = boundaries(s, g, 1)
    lower = {g.vertices[v] for v in b1.lower & fw.members}
    upper = {g.vertices[v] for v in b1.upper & fw.members}
    if lower != antennas:
        problems.append(f"n={n}: B1 & Fw = {_fmt(lower)}")
    if upper != {hook(n, 1), hook(n, n - 2)}:
        problems.append(f"n={n}: B2- & Fw = {_fmt(upper)}")
    if boundary_trace(b1, fw, g) != outer:
        problems.append(f"n={n}: boundary(1,2) & Fw = {_fmt(boundary_trace(b1, fw, g))}")
    if n >= 7:
        got = boundary_trace(boundaries(s, g, 2), fw, g)
        if got != fw_set - outer:
            problems.append(f"n={n}: boundary(2,3) & Fw differs at {_fmt(got ^ (fw_set - outer))}")
    for r in range(3, s.delta + 1):
        got = boundary_trace(boundaries(s, g, r), fw, g)
        if got:
            problems.append(f"n={n}: boundary({r},{r + 1}) & Fw = {_fmt(got)}")
    return problems


def require_framework_identities(s: Stratification, g: PartitionGraph) -> None:
    problems = framework_violations(s, g)
    if problems:
        raise ConsistencyError("hook framework convention fails: " + "; ".join(problems), n=s.n)


def _fmt(parts) -> str:
    return "{" + ", ".join(str(p) for p in sorted(parts, reverse=True)) + "}"
