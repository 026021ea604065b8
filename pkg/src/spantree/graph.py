"""Loopless weighted multigraphs and the constructions used throughout.

Vertices are dense 0-based integers.  Edge weights are conductances; the
resistance of an edge is ``1 / weight``.  All operations return new graphs.

When vertices are merged (contraction, identification) the merged vertex
takes the smallest index of its class and the surviving vertices keep
their relative order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .linalg import as_rational


class GraphError(ValueError):
    """Invalid graph, vertex, edge or construction parameter."""


class Edge(NamedTuple):
    u: int
    v: int
    weight: Fraction


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("negative vertex count")
        fixed = []
        for e in self.edges:
            u, v, w = e
            w = as_rational(w)
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.vertex_count - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if w <= 0:
                raise GraphError(f"edge ({u}, {v}) has non-positive weight {w}")
            fixed.append(Edge(int(u), int(v), w))
        object.__setattr__(self, "edges", tuple(fixed))
        if self.labels is not None:
            if len(self.labels) != self.vertex_count:
                raise GraphError("one label per vertex required")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable, labels=None) -> Multigraph:
        """Build from ``(u, v)`` or ``(u, v, weight)`` tuples; weight defaults to 1."""
        out = []
        for e in edges:
            if len(e) == 2:
                out.append(Edge(e[0], e[1], Fraction(1)))
            else:
                out.append(Edge(*e))
        return cls(vertex_count, tuple(out), labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        if self.labels is None or label not in self.labels:
            raise GraphError(f"no vertex labelled {label!r}")
        return self.labels.index(label)

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v} out of range 0..{self.vertex_count - 1}")
        return v

    def check_edge(self, e: int) -> int:
        if not 0 <= e < len(self.edges):
            raise GraphError(f"edge index {e} out of range 0..{len(self.edges) - 1}")
        return e

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def weighted_degrees(self) -> list[Fraction]:
        deg = [Fraction(0)] * self.vertex_count
        for u, v, w in self.edges:
            deg[u] += w
            deg[v] += w
        return deg

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b, _ in self.edges if v in (a, b)}

    def incident(self, v: int) -> list[int]:
        return [i for i, (a, b, _) in enumerate(self.edges) if v in (a, b)]

    def is_simple(self) -> bool:
        pairs = [frozenset((u, v)) for u, v, _ in self.edges]
        return len(pairs) == len(set(pairs))

    def components(self) -> list[list[int]]:
        uf = UnionFind(self.vertex_count)
        for u, v, _ in self.edges:
            uf.union(u, v)
        return uf.classes()

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def delete_edge(self, e: int) -> Multigraph:
        self.check_edge(e)
        return Multigraph(self.vertex_count, self.edges[:e] + self.edges[e + 1:], self.labels)

    def relabel(self, perm: Sequence[int]) -> Multigraph:
        """Move vertex ``i`` to ``perm[i]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise GraphError("not a permutation of the vertices")
        return Multigraph(self.vertex_count, tuple(Edge(perm[u], perm[v], w) for u, v, w in self.edges))


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


def _quotient(g: Multigraph, uf: UnionFind) -> Multigraph:
    classes = uf.classes()  # sorted by smallest member
    new_index = {}
    for i, cls in enumerate(classes):
        for v in cls:
            new_index[v] = i
    edges = []
    for u, v, w in g.edges:
        a, b = new_index[u], new_index[v]
        if a != b:
            edges.append(Edge(a, b, w))
    labels = None
    if g.labels is not None:
        labels = tuple("+".join(g.labels[v] for v in cls) for cls in classes)
    return Multigraph(len(classes), tuple(edges), labels)


def identify_vertices(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """Merge a vertex set into one vertex, deleting the resulting loops."""
    vs = sorted(set(vertices))
    if not vs:
        raise GraphError("cannot identify an empty vertex set")
    for v in vs:
        g.check_vertex(v)
    uf = UnionFind(g.vertex_count)
    for v in vs[1:]:
        uf.union(vs[0], v)
    return _quotient(g, uf)


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    g.check_edge(e)
    u, v, _ = g.edges[e]
    return identify_vertices(g, (u, v))


def contract_edge_set(g: Multigraph, edge_set: Iterable[int]) -> Multigraph:
    uf = UnionFind(g.vertex_count)
    for e in edge_set:
        g.check_edge(e)
        u, v, _ = g.edges[e]
        uf.union(u, v)
    return _quotient(g, uf)


def simplify_parallel(g: Multigraph) -> Multigraph:
    """Replace each class of parallel edges by one edge carrying the summed conductance."""
    order: list[frozenset] = []
    first: dict[frozenset, tuple[int, int]] = {}
    total: dict[frozenset, Fraction] = {}
    for u, v, w in g.edges:
        key = frozenset((u, v))
        if key not in total:
            order.append(key)
            first[key] = (u, v)
            total[key] = Fraction(0)
        total[key] += w
    return Multigraph(g.vertex_count, tuple(Edge(*first[k], total[k]) for k in order), g.labels)


def has_cycle(g: Multigraph, edge_set: Iterable[int]) -> bool:
    uf = UnionFind(g.vertex_count)
    for e in edge_set:
        u, v, _ = g.edges[g.check_edge(e)]
        if not uf.union(u, v):
            return True
    return False


def degree_multiset(g: Multigraph) -> list[int]:
    return sorted(g.degrees())


def edge_multiplicities(g: Multigraph) -> Counter:
    return Counter(frozenset((u, v)) for u, v, _ in g.edges)


# ---------------------------------------------------------------- builders


def complete_graph(n: int) -> Multigraph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Multigraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Multigraph:
    """K_{m,n}; X side is 0..m-1, Y side is m..m+n-1."""
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    labels = [f"x{i + 1}" for i in range(m)] + [f"y{j + 1}" for j in range(n)]
    return Multigraph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)], labels)


def build_gmnp(m: int, n: int, p: int) -> Multigraph:
    """K_{m,n} minus the matching x_i y_i for i = 1..p."""
    if m < 1 or n < 1:
        raise GraphError("G(m,n,p) needs m, n >= 1")
    if not 0 <= p <= min(m, n):
        raise GraphError(f"p = {p} must lie in 0..min(m, n) = {min(m, n)}")
    labels = [f"x{i + 1}" for i in range(m)] + [f"y{j + 1}" for j in range(n)]
    edges = [(i, m + j) for i in range(m) for j in range(n) if not (i == j and i < p)]
    return Multigraph.from_edges(m + n, edges, labels)


def matching_edges(m: int, n: int, k: int) -> list[int]:
    """Indices, in ``complete_bipartite(m, n)``, of the matching x_i y_i (i <= k)."""
    if not 0 <= k <= min(m, n):
        raise GraphError(f"matching size {k} must lie in 0..{min(m, n)}")
    return [i * n + i for i in range(k)]


def build_kmn_over_matching(m: int, n: int, k: int) -> Multigraph:
    """K_{m,n} with a k-matching contracted, built directly.

    Vertex order: unmatched X side (``s`` first, then x_1, ...), unmatched Y
    side (``t`` first, then y_1, ...), then the merged vertices z_1..z_k.
    """
    if m < 1 or n < 1:
        raise GraphError("m, n >= 1 required")
    if not 0 <= k <= min(m, n):
        raise GraphError(f"matching size {k} must lie in 0..{min(m, n)}")
    a, b = m - k, n - k
    xs = list(range(a))
    ys = list(range(a, a + b))
    zs = list(range(a + b, a + b + k))
    labels = (
        ["s" if i == 0 else f"x{i}" for i in range(a)]
        + ["t" if j == 0 else f"y{j}" for j in range(b)]
        + [f"z{i + 1}" for i in range(k)]
    )
    edges = [(x, y) for x in xs for y in ys]
    for z in zs:
        edges += [(z, x) for x in xs]
        edges += [(z, y) for y in ys]
    for i, zi in enumerate(zs):
        for zj in zs[i + 1:]:
            edges += [(zi, zj), (zi, zj)]
    return Multigraph.from_edges(m + n - k, edges, labels)


def build_kmn_over_tree(m: int, n: int, s: int, t: int) -> Multigraph:
    """K_{m,n} with a tree on s X-vertices and t Y-vertices contracted to ``z``.

    Vertex order: z, x_1..x_{m-s}, y_0..y_{n-t-1}.
    """
    if not (1 <= s <= m and 1 <= t <= n):
        raise GraphError(f"need 1 <= s <= m and 1 <= t <= n, got m={m} n={n} s={s} t={t}")
    a, b = m - s, n - t
    xs = list(range(1, 1 + a))
    ys = list(range(1 + a, 1 + a + b))
    labels = ["z"] + [f"x{i + 1}" for i in range(a)] + [f"y{j}" for j in range(b)]
    edges = [(x, y) for x in xs for y in ys]
    for x in xs:
        edges += [(0, x)] * t
    for y in ys:
        edges += [(0, y)] * s
    return Multigraph.from_edges(1 + a + b, edges, labels)
