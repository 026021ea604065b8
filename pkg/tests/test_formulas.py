from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spantree import formulas as fm
from spantree.graph import (
    UnionFind,
    build_gmnp,
    build_kmn_over_tree,
    complete_bipartite,
    complete_graph,
    contract_edge_set,
    matching_edges,
)
from spantree.resistance import effective_resistance, kirchhoff_index, resistance_matrix
from spantree.spanning import tau, tau_brute, tau_containing

from .test_spanning import brute_containing

F = Fraction


def test_cayley():
    assert [fm.cayley(n) for n in (1, 2, 4, 5)] == [1, 1, 16, 125]
    assert all(fm.cayley(n) == tau(complete_graph(n)) for n in range(1, 9))


def test_moon_examples():
    assert fm.moon_forest(4, [1, 1, 1, 1]) == 16 == fm.cayley(4)
    assert fm.moon_forest(4, []) == 16
    assert fm.moon_forest(4, [2, 2]) == 4
    k4 = complete_graph(4)  # edges 01 02 03 12 13 23
    assert fm.moon_forest(4, [3]) == brute_containing(k4, [0, 3]) == 3
    with pytest.raises(fm.FormulaDomainError):
        fm.moon_forest(3, [2, 2])


@settings(max_examples=60)
@given(st.integers(2, 6), st.data())
def test_moon_against_enumeration(n, data):
    kn = complete_graph(n)
    chosen = data.draw(st.lists(st.integers(0, kn.edge_count - 1), unique=True, max_size=n - 1))
    uf = UnionFind(n)
    forest = [e for e in chosen if uf.union(kn.edges[e].u, kn.edges[e].v)]
    uf = UnionFind(n)
    for e in forest:
        uf.union(kn.edges[e].u, kn.edges[e].v)
    orders = [len(c) for c in uf.classes()]
    assert fm.moon_forest(n, orders) == tau_containing(kn, forest)
    if n <= 5:
        assert fm.moon_forest(n, orders) == brute_containing(kn, forest)


def test_tau_kmn():
    assert fm.tau_kmn(1, 5) == 1
    assert fm.tau_kmn(2, 2) == 4
    assert fm.tau_kmn(3, 3) == 81


def test_tau_matching_examples():
    assert fm.tau_matching(2, 2, 1) == 3
    assert fm.tau_matching(4, 5, 2) == 5040
    assert fm.tau_matching(2, 2, 2) == 2
    assert fm.tau_matching(3, 3, 0) == 81
    with pytest.raises(fm.FormulaDomainError):
        fm.tau_matching(2, 3, 3)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_tau_matching_all_k_including_perfect(m, n):
    # k = min(m, n) yields negative exponents; rational evaluation still agrees
    kmn = complete_bipartite(m, n)
    for k in range(min(m, n) + 1):
        assert fm.tau_matching(m, n, k) == tau(contract_edge_set(kmn, matching_edges(m, n, k)))


def test_ratio_matching():
    assert fm.ratio_matching(6, 7, 3) == F(39, 140)
    assert fm.ratio_matching(2, 2, 1) == F(2, 3)
    for m in range(2, 7):
        for n in range(2, 7):
            for k in range(1, min(m, n)):
                assert fm.tau_matching(m, n, k + 1) / fm.tau_matching(m, n, k) == fm.ratio_matching(m, n, k)
    with pytest.raises(fm.FormulaDomainError):
        fm.ratio_matching(3, 3, 3)


def test_tau_tree_examples():
    for m, n in [(2, 3), (4, 4), (5, 2)]:
        assert fm.tau_tree(m, n, 1, 1) == fm.tau_matching(m, n, 1)
        assert fm.tau_tree(m, n, m, n) == 1
        for s, t in [(0, 0), (1, 0), (0, 1)]:
            assert fm.tau_tree(m, n, s, t) == fm.tau_kmn(m, n)
    assert fm.tau_tree(3, 3, 2, 1) == 21 == tau(build_kmn_over_tree(3, 3, 2, 1))
    for bad in [(3, 3, 0, 2), (3, 3, 2, 0), (3, 3, 4, 1)]:
        with pytest.raises(fm.FormulaDomainError):
            fm.tau_tree(*bad)


def test_ratio_tree():
    assert fm.ratio_tree_t(3, 3, 1, 1) == F(7, 15)
    assert fm.ratio_tree_s(3, 3, 1, 1) == F(7, 15)
    for m in range(1, 6):
        for n in range(1, 6):
            for s in range(1, m + 1):
                for t in range(1, n + 1):
                    if t < n:
                        assert fm.tau_tree(m, n, s, t + 1) / fm.tau_tree(m, n, s, t) == fm.ratio_tree_t(m, n, s, t)
                        assert fm.ratio_tree_t(m, n, s, t) == fm.ratio_tree_s(n, m, t, s)
                    if s < m:
                        assert fm.tau_tree(m, n, s + 1, t) / fm.tau_tree(m, n, s, t) == fm.ratio_tree_s(m, n, s, t)
    with pytest.raises(fm.FormulaDomainError):
        fm.ratio_tree_t(3, 3, 1, 3)
    with pytest.raises(fm.FormulaDomainError):
        fm.ratio_tree_s(3, 3, 3, 1)


def test_tau_gmnp_examples():
    assert fm.tau_gmnp(2, 2, 1) == 1
    assert fm.tau_gmnp(3, 3, 1) == 36 == 81 - 45
    assert fm.tau_gmnp(3, 3, 2) == 15
    assert fm.tau_gmnp(3, 3, 3) == 6
    assert fm.tau_gmnp(2, 2, 2) == 0  # two disjoint edges
    assert fm.tau_gmnp(3, 3, 0) == 81


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("n", range(1, 6))
def test_tau_gmnp_everywhere(m, n):
    for p in range(min(m, n) + 1):
        g = build_gmnp(m, n, p)
        assert fm.tau_gmnp(m, n, p) == tau(g)
        if m + n <= 7:
            assert tau(g) == tau_brute(g)


def test_resistance_table_spot_values():
    assert fm.gmnp_resistances(4, 3, 1).r3 == F(2, 3)
    t = fm.gmnp_resistances(3, 3, 1)
    assert (t.r5, t.r11) == (F(5, 4), F(7, 12))
    g = build_gmnp(3, 3, 1)
    assert effective_resistance(g, 0, 3) == F(5, 4)
    assert effective_resistance(g, 1, 4) == F(7, 12)


def test_resistance_table_absent_classes():
    t = fm.gmnp_resistances(3, 3, 1)
    assert t.r1 is t.r2 is t.r6 is None
    t = fm.gmnp_resistances(3, 3, 3)
    assert [k for k, v in t.items() if v is not None] == ["r1", "r2", "r5", "r6"]


@pytest.mark.parametrize("m,n,p", [(3, 3, 1), (4, 4, 2), (5, 5, 5), (6, 6, 3)])
def test_resistance_table_square_symmetry(m, n, p):
    t = fm.gmnp_resistances(m, n, p)
    assert t == t.swapped()


@pytest.mark.parametrize("m,n,p", [(3, 4, 1), (2, 5, 2), (5, 3, 3)])
def test_resistance_table_side_swap(m, n, p):
    assert fm.gmnp_resistances(m, n, p).swapped() == fm.gmnp_resistances(n, m, p)


@pytest.mark.parametrize("bad", [(2, 2, 1), (1, 4, 1), (3, 3, 0), (3, 3, 4)])
def test_resistance_domain(bad):
    with pytest.raises(fm.FormulaDomainError):
        fm.gmnp_resistances(*bad)
    with pytest.raises(fm.FormulaDomainError):
        fm.kf_gmnp(*bad)


def test_pair_classes_cover_all_non_edges():
    m, n, p = 5, 4, 3
    g = build_gmnp(m, n, p)
    adjacent = {frozenset((u, v)) for u, v, _ in g.edges}
    for u, v in combinations(range(m + n), 2):
        cls = fm.gmnp_pair_class(m, n, p, u, v)
        if frozenset((u, v)) not in adjacent:
            assert cls in {"r1", "r2", "r3", "r4", "r5", "r7", "r10"}


def test_kf_examples():
    assert fm.kf_gmnp(3, 3, 3) == F(35, 2)
    assert fm.kf_gmnp(3, 3, 1) == kirchhoff_index(build_gmnp(3, 3, 1))
    assert fm.kf_gmnp(4, 5, 2) == fm.kf_gmnp_from_table(4, 5, 2) == kirchhoff_index(build_gmnp(4, 5, 2))


def test_kf_expansion_must_not_count_adjacent_classes():
    # the r6 class consists of edges, already inside the m + n - 1 Foster term
    m, n, p = 4, 5, 2
    t = fm.gmnp_resistances(m, n, p)
    with_r6 = fm.kf_gmnp_from_table(m, n, p) + p * (p - 1) * t.r6
    assert with_r6 != kirchhoff_index(build_gmnp(m, n, p))


def test_shi_chen():
    assert fm.kf_shi_chen(3, 3) == F(35, 2)
    assert fm.kf_shi_chen(3, 1) == F(45, 4) == fm.kf_gmnp(3, 3, 1)
    for n in range(3, 9):
        for p in range(1, n + 1):
            assert fm.kf_shi_chen(n, p) == fm.kf_gmnp(n, n, p)
    # the p = n shortcut agrees with the general expression
    for n in range(3, 9):
        q = n * n - n
        general = F(n * n * (2 * n * n - 3 * n), (n - 2) * q) + 2 * (n - 1)
        assert fm.kf_shi_chen(n, n) == general
    with pytest.raises(fm.FormulaDomainError):
        fm.kf_shi_chen(2, 1)


def test_ratio_identity_against_direct_resistance():
    for m, n in [(3, 3), (3, 5), (4, 6)]:
        for p in range(1, min(m, n)):
            g = build_gmnp(m, n, p)
            r11 = effective_resistance(g, p, m + p)  # x_{p+1}, y_{p+1}
            assert tau(build_gmnp(m, n, p + 1)) / tau(g) == 1 - r11 == 1 - fm.gmnp_resistances(m, n, p).r11


def test_zero_power_convention():
    assert fm._pow(0, 0) == 1
    with pytest.raises(fm.FormulaDomainError):
        fm._pow(0, -1)
    assert fm._pow(2, -2) == F(1, 4)
