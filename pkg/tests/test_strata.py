import pytest

from partition_strata.capacity import capacity_profile
from partition_strata.errors import ConsistencyError, InvalidArgument
from partition_strata.graph import build_graph
from partition_strata.partitions import Partition as P, conjugate, partition_count
from partition_strata.strata import (
    ThresholdScanner,
    boundaries,
    compute_dims,
    interface_graph,
    layer,
    layer_ge,
    scan_thresholds,
    stratify,
)

from oracles import neighbors_by_pairs

LEVELS = range(0, 8)


def boundary_brute(s, r):
    """(B_r, B^-_{r+1}) as partition sets, using the pair-move neighbor oracle."""
    dim = {lam: d for lam, d in zip(s.vertices, s.dims)}
    lower = {lam for lam in s.vertices if dim[lam] == r
             and any(dim[P(mu)] == r + 1 for mu in neighbors_by_pairs(lam))}
    upper = {lam for lam in s.vertices if dim[lam] == r + 1
             and any(dim[P(mu)] == r for mu in neighbors_by_pairs(lam))}
    return lower, upper


def test_stratify_examples():
    s4 = stratify(4)
    assert s4.delta == 2
    assert layer(s4, 1) == {(4,), (1, 1, 1, 1)}
    assert layer(s4, 2) == {(3, 1), (2, 2), (2, 1, 1)}
    s7 = stratify(7)
    assert s7.delta == 3
    assert [len(layer(s7, r)) for r in (1, 2, 3)] == [2, 9, 4]
    s2 = stratify(2)
    assert s2.delta == 1 and layer(s2, 1) == {(2,), (1, 1)}


def test_modes_agree_small():
    for n in range(1, 15):
        g = build_graph(n)
        assert compute_dims(g, "capacity") == compute_dims(g, "clique") == compute_dims(g, "cross-check")


def test_cross_check_reports_disagreement(monkeypatch):
    from partition_strata import strata as mod

    monkeypatch.setattr(mod, "dim_loc_clique_all", lambda g: [0] * len(g))
    with pytest.raises(ConsistencyError) as err:
        stratify(5, "cross-check")
    assert err.value.n == 5 and err.value.partition == (5,)
    assert "[5]" in str(err.value)


def test_unknown_mode():
    with pytest.raises(InvalidArgument):
        stratify(3, "fast")


def test_layer_examples(strata):
    assert layer(strata[11], 4) == {(5, 3, 2, 1), (4, 4, 2, 1), (4, 3, 3, 1), (4, 3, 2, 2), (4, 3, 2, 1, 1)}
    assert layer(strata[4], 0) == set()
    assert len(layer(strata[16], 5)) == 6
    assert layer_ge(strata[4], 1) == set(strata[4].vertices)
    assert layer_ge(strata[7], 3) == layer(strata[7], 3) and len(layer(strata[7], 3)) == 4
    assert layer_ge(strata[7], 9) == set()


@pytest.mark.parametrize("n", range(1, 31))
def test_layers_partition_vertices(strata, n):
    s = strata[n]
    assert sum(len(ids) for ids in s.layers.values()) == partition_count(n)
    assert s.delta == max(s.dims)
    if n >= 2:
        assert not s.ids(0)
    for r in range(s.delta + 2):
        union = set().union(*(layer(s, q) for q in range(r, s.delta + 1)))
        assert layer_ge(s, r) == union


@pytest.mark.parametrize("n", range(1, 21))
def test_conjugation_invariance(strata, graphs, n):
    s, g = strata[n], graphs[n]
    for v, lam in enumerate(s.vertices):
        assert s.dims[g.index[conjugate(lam)]] == s.dims[v]
    for r in LEVELS:
        b = boundaries(s, g, r)
        for ids in (s.ids(r), b.lower, b.upper, b.full):
            parts = s.to_partitions(ids)
            assert {conjugate(lam) for lam in parts} == parts


def test_boundary_examples(strata, graphs):
    b = boundaries(strata[4], graphs[4], 1)
    assert strata[4].to_partitions(b.lower) == {(4,), (1, 1, 1, 1)}
    assert strata[4].to_partitions(b.upper) == {(3, 1), (2, 1, 1)}
    assert len(b.full) == 4
    b = boundaries(strata[4], graphs[4], 2)
    assert not b.lower and not b.upper
    assert boundaries(strata[7], graphs[7], 2).full
    with pytest.raises(InvalidArgument):
        boundaries(strata[4], graphs[5], 1)


@pytest.mark.parametrize("n", range(1, 21))
def test_boundaries_against_definition(strata, graphs, n):
    s, g = strata[n], graphs[n]
    for r in LEVELS:
        b = boundaries(s, g, r)
        lower, upper = boundary_brute(s, r)
        assert s.to_partitions(b.lower) == lower
        assert s.to_partitions(b.upper) == upper
        assert b.lower <= s.ids(r) and b.upper <= s.ids(r + 1)
        assert not b.lower & b.upper and b.full == b.lower | b.upper


@pytest.mark.parametrize("n", range(1, 21))
def test_interface_degree_characterizes_boundary(strata, graphs, n):
    s, g = strata[n], graphs[n]
    for r in LEVELS:
        ig = interface_graph(s, g, r)
        for u, v in ig.edges:
            assert u in ig.left and v in ig.right and g.adjacent(u, v)
        assert ig.touched() == boundaries(s, g, r).full
        assert (not ig.edges) == (not boundaries(s, g, r).full)


def test_interface_examples(strata, graphs):
    s, g = strata[4], graphs[4]
    ig = interface_graph(s, g, 1)
    assert {(g.vertices[u], g.vertices[v]) for u, v in ig.edges} == {((4,), (3, 1)), ((1, 1, 1, 1), (2, 1, 1))}
    assert not interface_graph(s, g, 2).edges
    s, g = strata[11], graphs[11]
    ig = interface_graph(s, g, 3)
    cross = {v for a, b in g.edges() if {s.dims[a], s.dims[b]} == {3, 4} for v in (a, b)}
    assert ig.edges and ig.touched() == cross == boundaries(s, g, 3).full


def test_scan_thresholds_small():
    t = scan_thresholds(3)
    assert t.tau == {0: 1, 1: 2}
    assert t.tau_ge == {0: 1, 1: 2}
    assert t.tau_boundary == {}
    assert t.witnesses[("tau", 1)] == (2,)
    with pytest.raises(InvalidArgument):
        scan_thresholds(0)


def test_scanner_requires_consecutive_n(strata, graphs):
    sc = ThresholdScanner()
    with pytest.raises(InvalidArgument):
        sc.add(strata[2], graphs[2])


def threshold_table(strata, graphs, n_max):
    sc = ThresholdScanner()
    for n in range(1, n_max + 1):
        sc.add(strata[n], graphs[n])
    return sc.table


def test_thresholds_to_30(strata, graphs):
    t = threshold_table(strata, graphs, 30)
    assert t.tau == {0: 1, 1: 2, 2: 4, 3: 7, 4: 11, 5: 16, 6: 22, 7: 29}
    assert t.tau_boundary == {1: 4, 2: 7, 3: 11, 4: 16, 5: 22, 6: 29}
    assert [t.deltas[n] for n in range(1, 31)] == [
        0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 7, 7
    ]
    for r, n in t.tau_ge.items():
        assert n == min(m for m in range(1, 31) if t.deltas[m] >= r)
    for r, n in t.tau_boundary.items():
        assert n >= t.tau[r + 1]
    # witnesses are the first vertex in canonical order
    for (kind, r), w in t.witnesses.items():
        s = strata[getattr(t, kind)[r]]
        assert w == s.vertices[min(v for v, d in enumerate(s.dims)
                                   if (d == r if kind == "tau" else d >= r if kind == "tau_ge"
                                       else v in boundaries(s, graphs[s.n], r).full))]


def test_threshold_reduction(strata):
    # first n with s >= r or t >= r is tau_ge(r), for r >= 2
    first = {}
    for n in range(1, 31):
        for lam in strata[n].vertices:
            prof = capacity_profile(lam)
            for r in range(2, max(prof.s, prof.t) + 1):
                first.setdefault(r, n)
    deltas = {n: strata[n].delta for n in range(1, 31)}
    for r, n in first.items():
        assert n == min(m for m in deltas if deltas[m] >= r)
    assert sorted(first) == list(range(2, 8))
