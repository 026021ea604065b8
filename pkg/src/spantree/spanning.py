"""Spanning-tree polynomial via the Matrix-Tree theorem, plus an enumeration oracle."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable

from .graph import Multigraph, UnionFind, contract_edge_set, has_cycle, simplify_parallel
from .linalg import ExactMatrix, det_exact

BRUTE_MAX_VERTICES = 10


class GraphTooLargeError(ValueError):
    pass


def laplacian(g: Multigraph) -> ExactMatrix:
    """Weighted Laplacian D - A; parallel edges add their weights."""
    n = g.vertex_count
    rows = [[Fraction(0)] * n for _ in range(n)]
    for u, v, w in g.edges:
        rows[u][u] += w
        rows[v][v] += w
        rows[u][v] -= w
        rows[v][u] -= w
    return ExactMatrix.from_rows(rows, n)


def tau(g: Multigraph) -> Fraction:
    """Sum over spanning trees of the product of edge weights."""
    if g.vertex_count <= 1:
        return Fraction(1)
    return det_exact(laplacian(simplify_parallel(g)).delete(0, 0))


def tau_brute(g: Multigraph) -> Fraction:
    """Same quantity by enumerating every (n-1)-edge subset; parallel edges are distinct."""
    n = g.vertex_count
    if n > BRUTE_MAX_VERTICES:
        raise GraphTooLargeError(f"brute-force enumeration limited to {BRUTE_MAX_VERTICES} vertices, got {n}")
    total = Fraction(0)
    for subset in combinations(g.edges, n - 1):
        uf = UnionFind(n)
        if all(uf.union(u, v) for u, v, _ in subset):
            total += prod((w for _, _, w in subset), start=Fraction(1))
    return total


def tau_containing(g: Multigraph, edge_set: Iterable[int]) -> Fraction:
    """Weighted count of spanning trees that contain every edge of ``edge_set``."""
    edge_set = sorted(set(edge_set))
    if has_cycle(g, edge_set):
        return Fraction(0)
    w = prod((g.edges[e].weight for e in edge_set), start=Fraction(1))
    return w * tau(contract_edge_set(g, edge_set))
