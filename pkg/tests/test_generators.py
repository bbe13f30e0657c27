import itertools
import warnings

import networkx as nx
import pytest
from hypothesis import assume, given, settings, strategies as st

from clawtrace import generators as gen
from clawtrace.errors import BadParameter, GiveUp, TooLarge
from clawtrace.generators import (
    BULL, C3, CLAW, NET, P3, WOUNDED, CompleteBipartite, CompleteN, PathN, ZN, complete_bipartite,
    enumerate_connected, g1_layout, g2_layout, gen_g1, gen_g2, gen_pattern, graph_from_mask,
    iter_connected_masks, pair_list, parse_pattern, petersen_graph, random_connected,
)
from clawtrace.graph import write_graph6

from conftest import to_nx


@pytest.mark.parametrize(
    "pid, order",
    [(PathN(1), 1), (PathN(6), 6), (C3, 3), (ZN(1), 4), (ZN(4), 7), (BULL, 5), (NET, 6),
     (WOUNDED, 6), (CLAW, 4), (CompleteN(1), 1), (CompleteN(5), 5), (CompleteBipartite(2, 3), 5)],
)
def test_pattern_orders(pid, order):
    assert gen_pattern(pid).n == order


def test_z1_shape():
    g = gen_pattern(ZN(1))
    assert (g.n, g.m) == (4, 4)
    assert sorted(g.degree_sequence()) == [1, 2, 2, 3]


def test_zi_is_triangle_plus_pendant_path():
    for i in range(1, 6):
        h = to_nx(gen_pattern(ZN(i)))
        assert h.number_of_edges() == i + 3
        assert sum(nx.triangles(h).values()) == 3
        assert sorted(d for _, d in h.degree()) == sorted([1] + [2] * (i - 1) + [2, 2, 3])


def test_net():
    g = gen_pattern(NET)
    assert (g.n, g.m) == (6, 6)
    assert g.degree_sequence().count(1) == 3


def test_bull():
    g = gen_pattern(BULL)
    assert (g.n, g.m) == (5, 5)
    assert sorted(g.degree_sequence()) == [1, 1, 2, 3, 3]


def test_wounded():
    g = gen_pattern(WOUNDED)
    assert sorted(g.degree_sequence()) == [1, 1, 2, 2, 3, 3]
    h = to_nx(g)
    # a triangle with a pendant edge on one vertex and a pendant P2 on another
    assert sum(nx.triangles(h).values()) == 3
    leaves = [v for v in h if h.degree(v) == 1]
    dist = sorted(min(nx.shortest_path_length(h, leaf, t) for t in (0, 1, 2)) for leaf in leaves)
    assert dist == [1, 2]


def test_claw_is_k13():
    assert nx.is_isomorphic(to_nx(gen_pattern(CLAW)), nx.star_graph(3))


@pytest.mark.parametrize("bad", [PathN(0), ZN(0), CompleteN(0), CompleteBipartite(0, 2)])
def test_bad_pattern_parameters(bad):
    with pytest.raises(BadParameter):
        gen_pattern(bad)


@pytest.mark.parametrize("text, pid", [("claw", CLAW), ("P3", P3), ("z1", ZN(1)), ("K2,3", CompleteBipartite(2, 3)),
                                       ("C3", C3), ("B", BULL), ("N", NET), ("W", WOUNDED), ("K5", CompleteN(5))])
def test_parse_pattern(text, pid):
    assert parse_pattern(text) == pid
    assert parse_pattern(pid.name) == pid


def test_parse_pattern_unknown():
    with pytest.raises(BadParameter):
        parse_pattern("hexagon")


def test_g1_3_9():
    g = gen_g1(3, 9)
    assert (g.n, g.m) == (9, 15)
    assert sorted(g.degree_sequence()) == [1, 1, 1, 4, 4, 4, 5, 5, 5]


def test_g1_structure():
    k, n = 4, 15
    g = gen_g1(k, n)
    lay = g1_layout(k, n)
    for a, b in itertools.combinations(lay.clique, 2):
        assert g.has_edge(a, b)
    for x, xp in zip(lay.hubs, lay.pendants):
        assert set(g.neighbors(x)) == set(lay.clique) | {xp}
        assert g.neighbors(xp) == [x]


def test_g2_5_39():
    g = gen_g2(5, 39)
    assert (g.n, g.m) == (39, 153 + 270 + 15 + 3)
    deg = sorted(g.degree_sequence())
    assert deg == sorted([1] * 3 + [6] * 3 + [19] * 15 + [32] * 18)


def test_g2_structure():
    k, n = 5, 40
    g = gen_g2(k, n)
    lay = g2_layout(k, n)
    for gad in lay.gadgets:
        assert set(g.neighbors(gad.hub)) == set(gad.members) | {gad.pendant}
        assert g.neighbors(gad.pendant) == [gad.hub]
        for v in gad.members:
            assert set(g.neighbors(v)) == set(lay.clique) | {gad.hub}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 12))
def test_g1_pendant_count(k, extra):
    # G1(1,3) is P3: its lone clique vertex is a leaf too
    assume(k > 1 or extra > 0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = gen_g1(k, 2 * k + 1 + extra)
    assert g.degree_sequence().count(1) == k


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10))
def test_g2_pendant_count(k, extra):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        g = gen_g2(k, 3 * k + 7 + extra)
    assert g.degree_sequence().count(1) == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7), st.integers(1, 7))
def test_bipartite_edges(a, b):
    assert complete_bipartite(a, b).m == a * b


def test_generator_parameter_errors():
    with pytest.raises(BadParameter):
        gen_g1(0, 5)
    with pytest.raises(BadParameter):
        gen_g1(3, 6)
    with pytest.raises(BadParameter):
        gen_g2(5, 21)
    with pytest.warns(UserWarning):
        gen_g1(3, 8)
    with pytest.warns(UserWarning):
        gen_g2(4, 40)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        gen_g1(3, 9)
        gen_g2(5, 39)


def test_petersen():
    assert nx.is_isomorphic(to_nx(petersen_graph()), nx.petersen_graph())


def test_random_connected_examples():
    assert random_connected(1, 0.5, 7).n == 1
    assert random_connected(5, 1.0, 7).m == 10
    assert write_graph6(random_connected(9, 0.4, 123)) == write_graph6(random_connected(9, 0.4, 123))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.floats(0.2, 1.0), st.integers(0, 2**64 - 1))
def test_random_connected_is_connected(n, p, seed):
    assert nx.is_connected(to_nx(random_connected(n, p, seed)))


def test_random_connected_gives_up(monkeypatch):
    monkeypatch.setattr(gen, "MAX_REJECTIONS", 5)
    with pytest.raises(GiveUp):
        random_connected(40, 0.01, 1)


def test_random_connected_bad_p():
    with pytest.raises(BadParameter):
        random_connected(4, 0.0, 1)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728), (6, 26704)])
def test_enumerate_connected_counts(n, count):
    assert sum(1 for _ in iter_connected_masks(n)) == count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumerate_connected_matches_recount(n):
    # oracle: networkx connectivity over all masks
    pairs = pair_list(n)
    expected = []
    for mask in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for b, p in enumerate(pairs) if mask >> b & 1)
        if nx.is_connected(h):
            expected.append(mask)
    got = [m for m, _ in iter_connected_masks(n)]
    assert got == expected
    graphs = list(enumerate_connected(n))
    assert graphs == [graph_from_mask(n, m) for m in expected]
    assert len(set(graphs)) == len(graphs)


def test_enumerate_mask_range_partitions():
    whole = [m for m, _ in iter_connected_masks(5)]
    parts = [m for lo, hi in ((0, 300), (300, 1024)) for m, _ in iter_connected_masks(5, lo, hi)]
    assert parts == whole


def test_enumerate_too_large():
    with pytest.raises(TooLarge):
        next(enumerate_connected(9))
