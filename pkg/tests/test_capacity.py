from itertools import combinations

import pytest

from partition_strata.capacity import (
    capacity_profile,
    dim_loc_capacity,
    full_star_simplex,
    full_top_simplex,
    star_capacity,
    top_capacity,
)
from partition_strata.errors import InvalidArgument
from partition_strata.partitions import (
    Cell,
    Partition as P,
    conjugate,
    corners,
    enumerate_partitions,
    one_cell_extensions,
    staircase,
)

from oracles import corners_by_inspection, transfer_by_cells


def capacities_brute(lam):
    """(s, t) from the cell-set oracle, independent of the corner code."""
    if sum(lam) == 1:
        return 0, 0
    rem, add = corners_by_inspection(lam)
    ok = {(c, a) for c in rem for a in add if transfer_by_cells(lam, c, a) is not None}
    s = max(sum(1 for a in add if (c, a) in ok) for c in rem)
    t = max(sum(1 for c in rem if (c, a) in ok) for a in add)
    return s, t


def test_star_examples():
    assert star_capacity(P((1,))) == (0, None)
    assert star_capacity(P((2, 2))) == (2, Cell(2, 2))
    assert star_capacity(P((2, 1)))[0] == 1


def test_top_examples():
    assert top_capacity(P((1,))) == (0, None)
    for n in range(3, 12):
        assert top_capacity(P((n,)))[0] == 1


@pytest.mark.parametrize("n", range(1, 14))
def test_capacities_match_brute_force(n):
    for lam in enumerate_partitions(n):
        prof = capacity_profile(lam)
        assert (prof.s, prof.t) == capacities_brute(lam)


@pytest.mark.parametrize("n", range(1, 16))
def test_conjugation_preserves_capacities(n):
    # a fixed removed cell stays fixed under transposition, so s and t are each preserved
    for lam in enumerate_partitions(n):
        mu = conjugate(lam)
        assert star_capacity(mu)[0] == star_capacity(lam)[0]
        assert top_capacity(mu)[0] == top_capacity(lam)[0]
        assert dim_loc_capacity(mu) == dim_loc_capacity(lam)


def test_capacities_do_not_swap_under_conjugation():
    lam = P((2, 2))
    assert conjugate(lam) == lam
    assert (star_capacity(lam)[0], top_capacity(lam)[0]) == (2, 1)


def test_witnesses_attain_and_prefer_top_row():
    for lam in enumerate_partitions(10):
        prof = capacity_profile(lam)
        assert len(full_star_simplex(lam, prof.star_witness)) == 1 + prof.s
        assert len(full_top_simplex(lam, prof.top_witness)) == 1 + prof.t
        rem, add = corners(lam)
        for c in rem:
            if c.row < prof.star_witness.row:
                assert len(full_star_simplex(lam, c)) - 1 < prof.s


def test_full_simplex_examples():
    assert full_star_simplex(P((2, 2)), Cell(2, 2)) == {(2, 2), (3, 1), (2, 1, 1)}
    assert full_star_simplex(P((6,)), Cell(1, 6)) == {(6,), (5, 1)}
    assert full_star_simplex(P((1,)), Cell(1, 1)) == {(1,)}
    assert full_top_simplex(P((2, 1, 1)), Cell(1, 3)) >= {(2, 1, 1), (3, 1)}
    assert full_top_simplex(P((2, 2)), Cell(1, 3)) == {(2, 2), (3, 1)}
    assert full_top_simplex(P((1,)), Cell(1, 2)) == {(1,)}


def test_full_simplex_rejects_non_corners():
    with pytest.raises(InvalidArgument):
        full_star_simplex(P((2, 1)), Cell(1, 1))
    with pytest.raises(InvalidArgument):
        full_top_simplex(P((2, 1)), Cell(2, 1))


@pytest.mark.parametrize("n", range(1, 16))
def test_full_simplices_are_cliques(graphs, n):
    g = graphs[n]
    for lam in g.vertices:
        rem, add = corners(lam)
        for simplex in [full_star_simplex(lam, c) for c in rem] + [full_top_simplex(lam, a) for a in add]:
            ids = [g.index[mu] for mu in simplex]
            assert all(g.adjacent(u, v) for u, v in combinations(ids, 2))


def test_dim_loc_examples():
    assert dim_loc_capacity(P((1,))) == 0
    assert dim_loc_capacity(P((2, 1))) == 1
    for mu in one_cell_extensions(staircase(4)):
        assert mu.n == 11 and dim_loc_capacity(mu) == 4


def test_profile_invariant():
    for n in range(1, 12):
        for lam in enumerate_partitions(n):
            prof = capacity_profile(lam)
            assert (prof.dim_loc == 0) == (n == 1)
            if n >= 2:
                assert prof.dim_loc == max(1, prof.s, prof.t)
