import warnings

import pytest
from hypothesis import given, settings, strategies as st

from clawtrace.errors import InvalidEmbedding
from clawtrace.generators import (
    C3, CLAW, P3, P4, Z1, complete_bipartite, complete_graph, cycle_graph, gen_g1, gen_g2,
    gen_pattern,
)
from clawtrace.graph import build_graph
from clawtrace.heavy import (
    FLAG_NAMES, HeavyPair, all_subsets_o_heavy, check_H_o_heavy, classify, e_tilde, embedding_o_heavy,
    fast_claw_heavy, fast_p3_heavy, fast_p4_free, fast_z1_free, in_e_tilde, is_H_o_heavy,
    verify_non_heavy,
)
from clawtrace.patterns import Embedding, enumerate_induced, find_free_violation

from conftest import graphs


def pairs_of(rows):
    return {(u, v) for u in range(len(rows)) for v in range(len(rows)) if rows[u] >> v & 1}


def quiet(fn, *args):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return fn(*args)


@pytest.mark.parametrize("m, r", [(4, 0), (5, -1), (6, -3)])
def test_e_tilde_complete(m, r):
    assert pairs_of(e_tilde(complete_graph(m), r)) == {(u, v) for u in range(m) for v in range(m) if u != v}


def test_e_tilde_c5_all_pairs():
    assert len(pairs_of(e_tilde(cycle_graph(5), -1))) == 20


def test_e_tilde_claw_edges_only():
    g = gen_pattern(CLAW)
    assert pairs_of(e_tilde(g, -1)) == pairs_of(g.adj)


@settings(max_examples=100, deadline=None)
@given(graphs(1, 9), st.integers(-3, 2))
def test_e_tilde_definition(g, r):
    rows = e_tilde(g, r)
    for u in range(g.n):
        assert not rows[u] >> u & 1
        for v in range(g.n):
            if u != v:
                expect = g.has_edge(u, v) or g.degree(u) + g.degree(v) >= g.n + r
                assert bool(rows[u] >> v & 1) == expect == in_e_tilde(g, u, v, r)


def test_embedding_heavy_claw_in_g1():
    g = gen_g1(3, 9)
    emb = Embedding(CLAW, (0, 3, 4, 5))
    assert embedding_o_heavy(g, emb, -1) == HeavyPair(3, 4, 8)


def test_embedding_heavy_triangle_none():
    assert embedding_o_heavy(complete_graph(4), Embedding(C3, (0, 1, 2)), -1) is None


def test_embedding_heavy_star_none():
    assert embedding_o_heavy(gen_pattern(CLAW), Embedding(CLAW, (0, 1, 2, 3)), -1) is None


def test_embedding_heavy_requires_valid():
    with pytest.raises(InvalidEmbedding):
        embedding_o_heavy(cycle_graph(5), Embedding(CLAW, (0, 1, 2, 3)))


def test_g1_heavy_claims():
    g = gen_g1(3, 9)
    assert check_H_o_heavy(g, CLAW, -1) is None
    assert check_H_o_heavy(g, P4, -1) is None


def test_g2_z1_heavy():
    assert check_H_o_heavy(gen_g2(5, 39), Z1, -1) is None


def test_g1_below_threshold_witness():
    g = quiet(gen_g1, 3, 8)
    w = check_H_o_heavy(g, CLAW, -1)
    assert w is not None and verify_non_heavy(g, w)
    # hub pairs: 2(n-2k+1) = 6 < n-1 = 7
    assert sorted(s for _, _, s in w.pair_sums) == [6, 6, 6]


@settings(max_examples=50, deadline=None)
@given(graphs(1, 8), st.integers(-2, 2))
def test_vacuous_on_free_graphs(g, r):
    for pid in (P3, CLAW, Z1, P4):
        if find_free_violation(g, pid) is None:
            assert is_H_o_heavy(g, pid, r)


def test_classify_c5():
    rep = classify(cycle_graph(5), -1)
    assert rep.connected and rep.claw_heavy and rep.z1_free and not rep.p4_free
    assert rep.witnesses["p4_free"].pattern == P4


def test_classify_g1():
    rep = classify(gen_g1(3, 9), -1)
    assert rep.claw_heavy and rep.b_free and not rep.z1_free and not rep.p4_free and not rep.p3_heavy
    assert verify_non_heavy(gen_g1(3, 9), rep.witnesses["p3_heavy"])
    assert not rep.certifies("claw-z1") and not rep.certifies("claw-p4") and not rep.certifies("p3")


def test_classify_k1():
    rep = classify(build_graph(1, []), -1)
    assert all(rep.flags[f] for f in FLAG_NAMES)
    assert rep.witnesses == {}


def test_classify_disconnected_witness():
    rep = classify(build_graph(4, [(0, 1), (2, 3)]))
    assert not rep.connected
    assert rep.witnesses["connected"]["components"] == [[0, 1], [2, 3]]


def test_classify_json_schema():
    data = classify(gen_g1(3, 9)).to_json()
    assert set(data) == {"r", "flags", "witnesses"}
    assert list(data["flags"]) == list(FLAG_NAMES)
    assert data["witnesses"]["z1_free"]["pattern"] == "Z1"
    assert data["witnesses"]["p3_heavy"]["kind"] == "non_heavy"


@settings(max_examples=80, deadline=None)
@given(graphs(1, 9))
def test_classify_witnesses_verify(g):
    rep = classify(g, -1)
    for name in ("p3_heavy", "claw_heavy"):
        if not rep.flags[name]:
            assert verify_non_heavy(g, rep.witnesses[name])
    for name in ("c3_free", "z1_free", "p4_free", "b_free"):
        if not rep.flags[name]:
            emb = rep.witnesses[name]
            assert emb in set(enumerate_induced(g, emb.pattern))


@settings(max_examples=100, deadline=None)
@given(graphs(1, 9), st.sampled_from([-2, -1, 0, 1]), st.sampled_from([-2, -1, 0, 1]))
def test_monotone_in_r(g, r, s):
    if r > s:
        r, s = s, r
    lo, hi = pairs_of(e_tilde(g, s)), pairs_of(e_tilde(g, r))
    assert lo <= hi
    for pid in (P3, CLAW, P4, Z1):
        if is_H_o_heavy(g, pid, s):
            assert is_H_o_heavy(g, pid, r)


@settings(max_examples=100, deadline=None)
@given(graphs(1, 9), st.integers(-2, 1))
def test_p3_heavy_implies_p4_heavy(g, r):
    if is_H_o_heavy(g, P3, r):
        assert is_H_o_heavy(g, P4, r)


@settings(max_examples=300, deadline=None)
@given(graphs(1, 9), st.integers(-2, 1))
def test_fast_predicates_agree(g, r):
    assert fast_p3_heavy(g, r) == is_H_o_heavy(g, P3, r)
    assert fast_claw_heavy(g, r) == is_H_o_heavy(g, CLAW, r)
    assert fast_z1_free(g) == (find_free_violation(g, Z1) is None)
    assert fast_p4_free(g) == (find_free_violation(g, P4) is None)


@pytest.mark.parametrize("r", [-1, 0, 1, 2])
@pytest.mark.parametrize("k", [3, 4])
def test_g1_threshold_exact(k, r):
    # claw and P4 heaviness of G1(k, n) both hold exactly when 2(n-2k+1) >= n+r
    lo = max(2 * k + 1, 4 * k + r - 5)
    for n in range(lo, 4 * k + r + 2):
        g = quiet(gen_g1, k, n)
        expect = 2 * (n - 2 * k + 1) >= n + r
        assert is_H_o_heavy(g, CLAW, r) == expect, n
        assert is_H_o_heavy(g, P4, r) == expect, n


@pytest.mark.parametrize("r", [-1, 0, 1])
def test_g2_claw_threshold_exact(r):
    k = r + 6
    for n in range(6 * k + r + 8, 6 * k + r + 12):
        assert fast_claw_heavy(quiet(gen_g2, k, n), r) == (n >= 6 * k + r + 10), n


@pytest.mark.parametrize("r", [-1, 0])
def test_g2_z1_threshold_exact(r):
    for k in range(r + 4, r + 8):
        n = 6 * k + r + 10
        assert is_H_o_heavy(quiet(gen_g2, k, n), Z1, r) == (k >= r + 6), k


def test_k35_subsets():
    ok, bad = all_subsets_o_heavy(complete_bipartite(3, 5), -2)
    assert ok and bad is None
    ok, bad = all_subsets_o_heavy(complete_bipartite(3, 5), -1)
    assert not ok and len(bad) == 3
