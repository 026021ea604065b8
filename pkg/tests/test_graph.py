from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spantree.graph import (
    GraphError,
    Multigraph,
    build_gmnp,
    build_kmn_over_matching,
    build_kmn_over_tree,
    complete_bipartite,
    complete_graph,
    contract_edge,
    contract_edge_set,
    edge_multiplicities,
    identify_vertices,
    matching_edges,
    simplify_parallel,
)
from spantree.spanning import tau, tau_brute

from .strategies import multigraphs


def test_loops_and_bad_weights_rejected():
    with pytest.raises(GraphError):
        Multigraph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Multigraph.from_edges(2, [(0, 1, 0)])
    with pytest.raises(GraphError):
        Multigraph.from_edges(2, [(0, 2)])


def test_contract_triangle_edge():
    g = contract_edge(complete_graph(3), 0)
    assert g.vertex_count == 2
    assert g.edges == ((0, 1, 1), (0, 1, 1))


def test_contract_path():
    g = contract_edge(Multigraph.from_edges(3, [(0, 1), (1, 2)]), 0)
    assert g == Multigraph.from_edges(2, [(0, 1)])


def test_contract_parallel_pair_leaves_no_loop():
    g = contract_edge(Multigraph.from_edges(2, [(0, 1), (0, 1)]), 1)
    assert g == Multigraph(1, ())


def test_contract_compacts_indices():
    g = Multigraph.from_edges(4, [(1, 3), (0, 2), (2, 3)])
    h = contract_edge(g, 0)  # 3 merges into 1; 2 stays 2
    assert h == Multigraph.from_edges(3, [(0, 2), (2, 1)])


def test_contract_invalid_edge():
    with pytest.raises(GraphError):
        contract_edge(complete_graph(3), 3)


def test_identify_bipartite_side():
    g = identify_vertices(complete_bipartite(2, 2), {0, 1})
    assert g.vertex_count == 3
    assert g.edge_count == 4
    assert sorted(edge_multiplicities(g).values()) == [2, 2]


def test_identify_singleton_is_identity():
    g = complete_bipartite(2, 3)
    assert identify_vertices(g, {3}) == g


def test_identify_empty_set():
    with pytest.raises(GraphError):
        identify_vertices(complete_graph(3), [])


def test_identify_adjacent_equals_contraction():
    g = complete_graph(3)
    assert identify_vertices(g, {0, 1}) == contract_edge(g, 0)


def test_contract_edge_set_cases():
    g = complete_graph(3)
    assert contract_edge_set(g, []) == g
    assert contract_edge_set(g, [0, 1]) == Multigraph(1, ())


def test_contract_two_matching_in_k44():
    g = contract_edge_set(complete_bipartite(4, 4), matching_edges(4, 4, 2))
    assert g.vertex_count == 6
    mult = edge_multiplicities(g)
    # x1+y1 -> vertex 0, x2+y2 -> vertex 1
    assert mult[frozenset((0, 1))] == 2
    assert sorted(mult.values()) == [1] * 12 + [2]


def test_simplify_parallel():
    assert simplify_parallel(Multigraph.from_edges(2, [(0, 1), (1, 0)])) == Multigraph.from_edges(2, [(0, 1, 2)])
    k3 = complete_graph(3)
    assert simplify_parallel(k3) == k3
    doubled = Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2), (0, 1)])
    simple = simplify_parallel(doubled)
    assert simple == Multigraph.from_edges(3, [(0, 1, 2), (1, 2), (0, 2)])
    assert tau_brute(doubled) == tau_brute(simple) == 5


def test_complete_graphs():
    assert complete_graph(3).edge_count == 3
    g = complete_bipartite(2, 3)
    assert g.edge_count == 6
    assert g.degrees() == [3, 3, 2, 2, 2]
    assert complete_bipartite(1, 1) == Multigraph.from_edges(2, [(0, 1)])
    with pytest.raises(GraphError):
        complete_graph(0)
    with pytest.raises(GraphError):
        complete_bipartite(0, 2)


def test_build_gmnp():
    assert build_gmnp(3, 3, 0) == complete_bipartite(3, 3)
    g = build_gmnp(3, 3, 1)
    assert g.edge_count == 8
    assert g.degrees() == [2, 3, 3, 2, 3, 3]
    c6 = build_gmnp(3, 3, 3)
    assert all(d == 2 for d in c6.degrees()) and c6.is_connected()
    with pytest.raises(GraphError):
        build_gmnp(3, 3, 4)


def _canonical(g):
    # brute-force canonical form for tiny graphs
    best = None
    for perm in permutations(range(g.vertex_count)):
        key = sorted(tuple(sorted((perm[u], perm[v]))) + (w,) for u, v, w in g.edges)
        if best is None or key < best:
            best = key
    return best


def test_kmn_over_matching_fig3_size():
    g = build_kmn_over_matching(6, 7, 3)
    assert g.vertex_count == 10
    assert g.labels[:4] == ("s", "x1", "x2", "t")


def test_kmn_over_matching_k0_is_kmn():
    assert _canonical(build_kmn_over_matching(2, 3, 0)) == _canonical(complete_bipartite(2, 3))


@pytest.mark.parametrize("m,n,k", [(2, 2, 1), (2, 3, 2), (3, 3, 2), (2, 2, 2), (3, 2, 1)])
def test_kmn_over_matching_is_the_contraction(m, n, k):
    direct = build_kmn_over_matching(m, n, k)
    generic = contract_edge_set(complete_bipartite(m, n), matching_edges(m, n, k))
    assert _canonical(direct) == _canonical(generic)


@pytest.mark.parametrize("m,n", [(4, 4), (4, 5), (5, 3)])
def test_kmn_over_matching_spot_check(m, n):
    for k in range(min(m, n) + 1):
        direct = build_kmn_over_matching(m, n, k)
        generic = contract_edge_set(complete_bipartite(m, n), matching_edges(m, n, k))
        assert sorted(direct.degrees()) == sorted(generic.degrees())
        assert tau(direct) == tau(generic)


def test_kmn_over_tree():
    assert build_kmn_over_tree(3, 4, 1, 1) == build_kmn_over_matching(3, 4, 1).relabel(
        # z first, then the other X vertices, then the other Y vertices
        [1, 2, 3, 4, 5, 0]
    )
    g = build_kmn_over_tree(3, 3, 2, 1)
    assert g.vertex_count == 4 and g.edge_count == 7
    assert build_kmn_over_tree(3, 2, 3, 2) == Multigraph(1, ())
    with pytest.raises(GraphError):
        build_kmn_over_tree(3, 3, 0, 1)


@settings(max_examples=60)
@given(multigraphs(min_vertices=2, max_vertices=6), st.data())
def test_contract_edge_counts(g, data):
    if g.edge_count == 0:
        return
    e = data.draw(st.integers(0, g.edge_count - 1))
    u, v, _ = g.edges[e]
    copies = sum(1 for a, b, _ in g.edges if {a, b} == {u, v})
    h = contract_edge(g, e)
    assert h.vertex_count == g.vertex_count - 1
    assert h.edge_count == g.edge_count - copies
    assert all(a != b for a, b, _ in h.edges)


@settings(max_examples=60)
@given(multigraphs(min_vertices=2, max_vertices=6), st.data())
def test_contract_edge_set_matches_iterated_contraction(g, data):
    if g.edge_count == 0:
        return
    chosen = data.draw(st.lists(st.integers(0, g.edge_count - 1), unique=True, max_size=3))
    at_once = contract_edge_set(g, chosen)
    # contract one at a time by following endpoints through the quotient
    h = Multigraph(g.vertex_count, g.edges)
    where = list(range(g.vertex_count))
    for e in chosen:
        u, v, _ = g.edges[e]
        a, b = where[u], where[v]
        if a == b:
            continue
        h = identify_vertices(h, {a, b})
        lo, hi = min(a, b), max(a, b)
        where = [lo if x == hi else x - (x > hi) for x in where]
    assert h == at_once
    assert tau(h) == tau(at_once)


@settings(max_examples=80)
@given(multigraphs(max_vertices=6, max_edges=9))
def test_simplify_preserves_tau(g):
    s = simplify_parallel(g)
    assert s.is_simple()
    assert tau_brute(s) == tau_brute(g)
    assert sum(w for *_, w in s.edges) == sum(w for *_, w in g.edges)
