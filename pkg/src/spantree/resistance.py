"""Effective resistance and the circuit laws on weighted multigraphs.

A graph is read as a resistor network: edge weight is conductance, so an
edge of weight ``w`` is a resistor of ``1/w`` ohms.  Currents on edges are
stored in the edge's own orientation (from ``u`` to ``v``).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .graph import (
    Edge,
    GraphError,
    Multigraph,
    UnionFind,
    build_kmn_over_matching,
    build_kmn_over_tree,
    identify_vertices,
    simplify_parallel,
)
from .linalg import ExactMatrix, as_rational, inverse_exact, solve_exact
from .spanning import laplacian, tau


class DisconnectedError(ValueError):
    """The network is not connected, so the requested resistance is infinite."""


class NotSeriesParallelError(ValueError):
    """Series and parallel reductions stall before a single edge remains."""


def network_from_resistances(vertex_count: int, resistors: Iterable, labels=None) -> Multigraph:
    """Build a network from ``(u, v, ohms)`` triples; stored weights are conductances."""
    return Multigraph.from_edges(
        vertex_count, [(u, v, 1 / as_rational(r)) for u, v, r in resistors], labels
    )


def _require_connected(g: Multigraph) -> None:
    if not g.is_connected():
        raise DisconnectedError(f"network with {g.vertex_count} vertices is not connected")


def potentials(g: Multigraph, source: int, sink: int, injection=1) -> list[Fraction]:
    """Node potentials for ``injection`` amps entering at source and leaving at sink (sink grounded)."""
    g.check_vertex(source)
    g.check_vertex(sink)
    _require_connected(g)
    n = g.vertex_count
    phi = [Fraction(0)] * n
    if source == sink:
        return phi
    keep = [v for v in range(n) if v != sink]
    reduced = laplacian(g).delete(sink, sink)
    rhs = [Fraction(0)] * (n - 1)
    rhs[keep.index(source)] = as_rational(injection)
    for v, x in zip(keep, solve_exact(reduced, rhs)):
        phi[v] = x
    return phi


def effective_resistance(g: Multigraph, u: int, v: int) -> Fraction:
    """Potential at ``u`` when a unit current flows from ``u`` to a grounded ``v``."""
    if u == v:
        g.check_vertex(u)
        return Fraction(0)
    return potentials(g, u, v)[u]


def effective_resistance_tau(g: Multigraph, u: int, v: int) -> Fraction:
    """Resistance as the ratio tau(G / {u, v}) / tau(G)."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return Fraction(0)
    total = tau(g)
    if total == 0:
        raise DisconnectedError("network is not connected")
    return tau(identify_vertices(g, (u, v))) / total


def resistance_matrix(g: Multigraph) -> list[list[Fraction]]:
    """All pairwise effective resistances.

    Grounds the last vertex and inverts the reduced Laplacian once; column
    ``j`` of the inverse is the potential profile for a unit injection at ``j``.
    """
    _require_connected(g)
    n = g.vertex_count
    if n == 1:
        return [[Fraction(0)]]
    inv = inverse_exact(laplacian(g).delete(n - 1, n - 1))

    def m(i, j):
        if i == n - 1 or j == n - 1:
            return Fraction(0)
        return inv[i, j]

    return [[m(i, i) + m(j, j) - 2 * m(i, j) for j in range(n)] for i in range(n)]


def kirchhoff_index(g: Multigraph) -> Fraction:
    r = resistance_matrix(g)
    n = g.vertex_count
    return sum((r[i][j] for i in range(n) for j in range(i + 1, n)), Fraction(0))


def foster_residual(g: Multigraph) -> Fraction:
    """Sum over edges of R_uv / r_uv, minus (n - 1).  Zero on every connected network."""
    r = resistance_matrix(g)
    return sum((r[u][v] * w for u, v, w in g.edges), Fraction(0)) - (g.vertex_count - 1)


def local_rule_residual(g: Multigraph, u: int, v: int) -> Fraction:
    """Left side of the weighted local sum rule at (u, v), minus 2.

    The rule is stated for simple graphs, so parallel edges are merged first.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise GraphError("local rule needs two distinct vertices")
    h = simplify_parallel(g)
    r = resistance_matrix(h)
    total = Fraction(0)
    conductance = Fraction(0)
    for a, b, w in h.edges:
        if u in (a, b):
            x = b if a == u else a
            conductance += w
            total += w * (r[u][x] - r[v][x])
    return conductance * r[u][v] + total - 2


def twin_resistance(g: Multigraph, a: int, b: int) -> Fraction | None:
    """Resistance predicted by the twin-vertex rules on a unit-weight simple graph.

    Returns None unless ``a`` and ``b`` have the same neighbourhood (ignoring
    each other).
    """
    na, nb = g.neighbors(a), g.neighbors(b)
    if a == b or na - {b} != nb - {a} or not na:
        return None
    if b in na:
        return Fraction(2, len(na) + 1)
    return Fraction(2, len(na))


# ------------------------------------------------------- series / parallel


class ReductionStep(NamedTuple):
    rule: str  # "parallel", "series" or "prune"
    vertices: tuple[int, ...]
    before: tuple[Fraction, ...]
    after: Fraction | None


def series_parallel_reduce(g: Multigraph, a: int, b: int) -> tuple[Fraction, list[ReductionStep]]:
    """Reduce to a single a-b resistor using the series and parallel laws.

    Non-terminal vertices of degree one carry no current and are pruned.
    Raises NotSeriesParallelError when no rule applies before a single edge
    remains.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise GraphError("terminals must differ")
    _require_connected(g)
    edges = [[u, v, 1 / w] for u, v, w in g.edges]  # resistances
    trace: list[ReductionStep] = []
    while True:
        groups: dict[frozenset, list[int]] = defaultdict(list)
        for i, (u, v, _) in enumerate(edges):
            groups[frozenset((u, v))].append(i)
        if any(len(ix) > 1 for ix in groups.values()):
            merged, drop = [], set()
            for ix in groups.values():
                if len(ix) > 1:
                    rs = tuple(edges[i][2] for i in ix)
                    r = 1 / sum(1 / x for x in rs)
                    u, v = edges[ix[0]][:2]
                    trace.append(ReductionStep("parallel", (min(u, v), max(u, v)), rs, r))
                    edges[ix[0]] = [u, v, r]
                    drop.update(ix[1:])
            edges = [e for i, e in enumerate(edges) if i not in drop]
            continue

        if len(edges) == 1 and {edges[0][0], edges[0][1]} == {a, b}:
            return edges[0][2], trace

        incident: dict[int, list[int]] = defaultdict(list)
        for i, (u, v, _) in enumerate(edges):
            incident[u].append(i)
            incident[v].append(i)
        inner = sorted(x for x in incident if x not in (a, b))
        pendant = next((x for x in inner if len(incident[x]) == 1), None)
        if pendant is not None:
            i = incident[pendant][0]
            trace.append(ReductionStep("prune", (pendant,), (edges[i][2],), None))
            del edges[i]
            continue
        middle = next((x for x in inner if len(incident[x]) == 2), None)
        if middle is None:
            raise NotSeriesParallelError(
                f"no series, parallel or pendant reduction applies ({len(edges)} edges left)"
            )
        i, j = incident[middle]
        y = edges[i][0] if edges[i][1] == middle else edges[i][1]
        z = edges[j][0] if edges[j][1] == middle else edges[j][1]
        r = edges[i][2] + edges[j][2]
        trace.append(ReductionStep("series", (y, middle, z), (edges[i][2], edges[j][2]), r))
        edges = [e for k, e in enumerate(edges) if k not in (i, j)] + [[y, z, r]]


# ------------------------------------------------------------- flows


Cycle = tuple[tuple[int, int], ...]  # (edge index, +1 along the edge / -1 against it)


@dataclass(frozen=True)
class FlowAssignment:
    source: int
    sink: int
    injection: Fraction
    currents: dict[int, Fraction] = field(hash=False)

    def current(self, e: int, frm: int, g: Multigraph) -> Fraction:
        """Current through edge ``e`` measured leaving vertex ``frm``."""
        u, v, _ = g.edges[e]
        i = self.currents[e]
        return i if frm == u else -i


def potential_flow(g: Multigraph, source: int, sink: int, injection=1) -> FlowAssignment:
    """The physical flow: Ohm's law applied to solved potentials."""
    phi = potentials(g, source, sink, injection)
    currents = {i: (phi[u] - phi[v]) * w for i, (u, v, w) in enumerate(g.edges)}
    return FlowAssignment(source, sink, as_rational(injection), currents)


def star_tree(g: Multigraph, center: int) -> list[int]:
    """One edge from ``center`` to each neighbour; must span the graph."""
    seen, tree = set(), []
    for i, (u, v, _) in enumerate(g.edges):
        if center in (u, v):
            x = v if u == center else u
            if x not in seen:
                seen.add(x)
                tree.append(i)
    if len(tree) != g.vertex_count - 1:
        raise GraphError(f"vertex {center} is not adjacent to every other vertex")
    return tree


def fundamental_cycle_basis(g: Multigraph, tree: Iterable[int]) -> list[Cycle]:
    """One oriented cycle per non-tree edge: the edge followed by the tree path back."""
    tree = sorted(set(tree))
    n = g.vertex_count
    uf = UnionFind(n)
    for e in tree:
        u, v, _ = g.edges[g.check_edge(e)]
        if not uf.union(u, v):
            raise GraphError("tree edges contain a cycle")
    if len(tree) != n - 1:
        raise GraphError(f"a spanning tree needs {n - 1} edges, got {len(tree)}")

    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e in tree:
        u, v, _ = g.edges[e]
        adj[u].append((v, e))
        adj[v].append((u, e))
    parent = {0: (None, None)}
    depth = {0: 0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y, e in adj[x]:
            if y not in parent:
                parent[y] = (x, e)
                depth[y] = depth[x] + 1
                stack.append(y)

    def step(frm: int, e: int) -> tuple[int, int]:
        return (e, 1 if g.edges[e].u == frm else -1)

    tree_set = set(tree)
    basis = []
    for e, (u, v, _) in enumerate(g.edges):
        if e in tree_set:
            continue
        # walk v -> u through the tree
        up, down = [], []
        x, y = v, u
        while x != y:
            if depth[x] >= depth[y]:
                px, ex = parent[x]
                up.append(step(x, ex))
                x = px
            else:
                py, ey = parent[y]
                down.append(step(py, ey))
                y = py
        basis.append(((e, 1),) + tuple(up) + tuple(reversed(down)))
    return basis


def kcl_residuals(g: Multigraph, flow: FlowAssignment) -> list[Fraction]:
    """Net current leaving each vertex minus what is injected there; all zero iff KCL holds."""
    res = [Fraction(0)] * g.vertex_count
    for e, (u, v, _) in enumerate(g.edges):
        if e not in flow.currents:
            raise GraphError(f"no current given for edge {e}")
        i = flow.currents[e]
        res[u] += i
        res[v] -= i
    if flow.source != flow.sink:
        res[flow.source] -= flow.injection
        res[flow.sink] += flow.injection
    return res


def kvl_residuals(g: Multigraph, flow: FlowAssignment, basis: Sequence[Cycle]) -> list[Fraction]:
    """Directed voltage sum around each cycle; all zero iff KVL holds on the basis."""
    out = []
    for cycle in basis:
        if not cycle:
            raise GraphError("empty cycle")
        start = None
        at = None
        total = Fraction(0)
        for e, sign in cycle:
            u, v, w = g.edges[g.check_edge(e)]
            tail, head = (u, v) if sign == 1 else (v, u)
            if sign not in (1, -1) or (at is not None and tail != at):
                raise GraphError(f"invalid cycle {cycle}")
            if start is None:
                start = tail
            at = head
            if e not in flow.currents:
                raise GraphError(f"no current given for edge {e}")
            total += sign * flow.currents[e] / w
        if at != start:
            raise GraphError(f"cycle {cycle} is not closed")
        out.append(total)
    return out


def explicit_flow_matching(m: int, n: int, k: int) -> tuple[Multigraph, FlowAssignment]:
    """Explicit unit s-t flow on K_{m,n}/M with the z_i z_j double edges merged.

    Returns the merged network and its closed-form current assignment.
    """
    if m < 2 or n < 2 or not 1 <= k <= min(m, n) - 1:
        raise GraphError(f"need m, n >= 2 and 1 <= k <= min(m, n) - 1, got m={m} n={n} k={k}")
    g = simplify_parallel(build_kmn_over_matching(m, n, k))
    a, b = m - k, n - k
    N = m + n - k
    F = Fraction
    w0 = F(1, m) + F(1, n) - F(1, m * N) - F(1, n * N)
    w1 = F(1, n) - F(1, m * N) - F(1, n * N)
    w2 = F(1, n) - F(1, n * N)
    w3 = F(1, m * N) + F(1, n * N) - F(1, m)
    w4 = F(1, m * N) - F(1, m)
    w5 = -F(1, m * N) - F(1, n * N)
    w6 = F(1, n * N)
    w7 = -F(1, m * N)

    def kind(v: int) -> str:
        if v == 0:
            return "s"
        if v < a:
            return "x"
        if v == a:
            return "t"
        if v < a + b:
            return "y"
        return "z"

    table = {
        ("s", "t"): w0, ("s", "y"): w1, ("s", "z"): w2,
        ("t", "x"): w3, ("t", "z"): w4, ("x", "y"): w5,
        ("z", "x"): w6, ("z", "y"): w7, ("z", "z"): F(0),
    }

    def current(u, v):
        p, q = kind(u), kind(v)
        if (p, q) in table:
            return table[p, q]
        return -table[q, p]

    currents = {i: current(u, v) for i, (u, v, _) in enumerate(g.edges)}
    return g, FlowAssignment(0, a, F(1), currents)


def explicit_flow_tree(m: int, n: int, s: int, t: int) -> tuple[Multigraph, FlowAssignment]:
    """Explicit unit z-y_0 flow on K_{m,n}/T with parallel classes merged."""
    if not (1 <= s <= m and 1 <= t <= n - 1):
        raise GraphError(f"need 1 <= s <= m and 1 <= t <= n - 1, got m={m} n={n} s={s} t={t}")
    g = simplify_parallel(build_kmn_over_tree(m, n, s, t))
    a = m - s
    y0 = 1 + a
    N = s * n + t * m - s * t
    F = Fraction
    w0 = F(s, m) + F(s * (m - s), m * N)
    w1 = F(s * (m - s), m * N)
    w2 = F(t, N)
    w3 = F(1, m) - F(s, m * N)
    w4 = -F(s, m * N)

    def current(u, v):
        if u == 0:
            if v <= a:
                return w2
            return w0 if v == y0 else w1
        # x_u -- y_v
        return w3 if v == y0 else w4

    currents = {i: current(u, v) for i, (u, v, _) in enumerate(g.edges)}
    return g, FlowAssignment(0, y0, F(1), currents)


def flow_voltage(g: Multigraph, flow: FlowAssignment) -> Fraction:
    """Voltage from source to sink along any path, using Ohm's law per edge.

    Uses a BFS path; meaningful when KVL holds.
    """
    prev: dict[int, tuple[int, int]] = {flow.source: (-1, -1)}
    queue = [flow.source]
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for e, (u, v, _) in enumerate(g.edges):
        adj[u].append((v, e))
        adj[v].append((u, e))
    while queue:
        x = queue.pop(0)
        for y, e in adj[x]:
            if y not in prev:
                prev[y] = (x, e)
                queue.append(y)
    if flow.sink not in prev:
        raise DisconnectedError("sink unreachable from source")
    volt = Fraction(0)
    y = flow.sink
    while y != flow.source:
        x, e = prev[y]
        volt += flow.current(e, x, g) / g.edges[e].weight
        y = x
    return volt
