"""Cross-checks of every closed form against the linear-algebra and enumeration routes.

Each suite is a list of independent tasks (one per parameter tuple or per
random graph).  Tasks are plain module-level functions so they can be
shipped to worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import formulas as fm
from .graph import (
    Multigraph,
    build_gmnp,
    build_kmn_over_matching,
    build_kmn_over_tree,
    complete_bipartite,
    contract_edge,
    contract_edge_set,
    matching_edges,
)
from .resistance import (
    NotSeriesParallelError,
    effective_resistance,
    effective_resistance_tau,
    flow_voltage,
    foster_residual,
    fundamental_cycle_basis,
    kcl_residuals,
    kirchhoff_index,
    kvl_residuals,
    local_rule_residual,
    explicit_flow_matching,
    explicit_flow_tree,
    resistance_matrix,
    series_parallel_reduce,
    star_tree,
    twin_resistance,
)
from .spanning import tau, tau_brute, tau_containing

SUITES = ("matching", "tree", "gmnp", "laws")
DEFAULT_SEED = 20190417
BRUTE_MAX_ORDER = 8


@dataclass(frozen=True)
class CheckRecord:
    name: str
    params: tuple
    expected: Fraction
    actual: Fraction

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class VerifyReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict[str, tuple[int, int]]:
        """check name -> (passed, total)."""
        out: dict[str, list[int]] = {}
        for r in self.records:
            c = out.setdefault(r.name, [0, 0])
            c[0] += r.passed
            c[1] += 1
        return {k: (a, b) for k, (a, b) in out.items()}


def _rec(out, name, params, expected, actual):
    out.append(CheckRecord(name, tuple(params), Fraction(expected), Fraction(actual)))


def _max_abs(xs) -> Fraction:
    return max((abs(x) for x in xs), default=Fraction(0))


def _flow_checks(out, tag, params, g: Multigraph, flow, center: int, ratio: Fraction):
    basis = fundamental_cycle_basis(g, star_tree(g, center))
    _rec(out, f"{tag}.kcl", params, 0, _max_abs(kcl_residuals(g, flow)))
    _rec(out, f"{tag}.kvl", params, 0, _max_abs(kvl_residuals(g, flow, basis)))
    volt = flow_voltage(g, flow) / flow.injection
    _rec(out, f"{tag}.voltage=ratio", params, ratio, volt)
    _rec(out, f"{tag}.voltage=solve", params, effective_resistance(g, flow.source, flow.sink), volt)


# ------------------------------------------------------------------ tasks


def matching_task(m: int, n: int) -> list[CheckRecord]:
    out: list[CheckRecord] = []
    kmn = complete_bipartite(m, n)
    counts = {}
    for k in range(0, min(m, n) + 1):
        contracted = contract_edge_set(kmn, matching_edges(m, n, k))
        counts[k] = tau(contracted)
        expected = fm.tau_matching(m, n, k)
        _rec(out, "matching.formula=contraction", (m, n, k), expected, counts[k])
        _rec(out, "matching.formula=containing", (m, n, k), expected,
             tau_containing(kmn, matching_edges(m, n, k)))
        _rec(out, "matching.direct=contraction", (m, n, k), counts[k], tau(build_kmn_over_matching(m, n, k)))
        if m + n <= BRUTE_MAX_ORDER:
            _rec(out, "matching.brute", (m, n, k), expected, tau_brute(contracted))
    for k in range(1, min(m, n)):
        _rec(out, "matching.ratio", (m, n, k), fm.ratio_matching(m, n, k), counts[k + 1] / counts[k])
        tele = fm.tau_matching(m, n, 1)
        for i in range(1, k + 1):
            tele *= fm.ratio_matching(m, n, i)
        _rec(out, "matching.telescoping", (m, n, k + 1), counts[k + 1], tele)
        g, flow = explicit_flow_matching(m, n, k)
        _flow_checks(out, "matching.flow", (m, n, k), g, flow, g.vertex("z1"), fm.ratio_matching(m, n, k))
    return out


def concrete_tree_edges(m: int, n: int, s: int, t: int) -> list[int]:
    """Edges (in ``complete_bipartite(m, n)``) of a tree meeting s X- and t Y-vertices.

    x_1 is joined to y_1..y_t and y_1 to x_2..x_s.
    """
    edges = [0 * n + j for j in range(t)]
    edges += [i * n + 0 for i in range(1, s)]
    return edges


def tree_task(m: int, n: int) -> list[CheckRecord]:
    out: list[CheckRecord] = []
    kmn = complete_bipartite(m, n)
    counts = {}
    for s in range(1, m + 1):
        for t in range(1, n + 1):
            counts[s, t] = tau(build_kmn_over_tree(m, n, s, t))
            expected = fm.tau_tree(m, n, s, t)
            _rec(out, "tree.formula=quotient", (m, n, s, t), expected, counts[s, t])
            _rec(out, "tree.formula=containing", (m, n, s, t), expected,
                 tau_containing(kmn, concrete_tree_edges(m, n, s, t)))
    _rec(out, "tree.spanning-boundary", (m, n), 1, counts[m, n])
    for (s, t), c in counts.items():
        if t < n:
            _rec(out, "tree.ratio_t", (m, n, s, t), fm.ratio_tree_t(m, n, s, t), counts[s, t + 1] / c)
        if s < m:
            _rec(out, "tree.ratio_s", (m, n, s, t), fm.ratio_tree_s(m, n, s, t), counts[s + 1, t] / c)
        # tau_{1,1} times the ratio products along s then t
        tele = Fraction(m + n - 1, m * n) * fm.tau_kmn(m, n)
        for i in range(1, s):
            tele *= fm.ratio_tree_s(m, n, i, 1)
        for i in range(1, t):
            tele *= fm.ratio_tree_t(m, n, s, i)
        _rec(out, "tree.telescoping", (m, n, s, t), c, tele)
    # The same product with tau(K_{m,n}) left symbolic must force tau(K_{m,n}).
    unit = Fraction(m + n - 1, m * n)
    for i in range(1, m):
        unit *= fm.ratio_tree_s(m, n, i, 1)
    for i in range(1, n):
        unit *= fm.ratio_tree_t(m, n, m, i)
    _rec(out, "tree.deduce-tau-kmn", (m, n), fm.tau_kmn(m, n), 1 / unit)
    for s in range(1, m + 1):
        for t in range(1, n):
            g, flow = explicit_flow_tree(m, n, s, t)
            _flow_checks(out, "tree.flow", (m, n, s, t), g, flow, 0, fm.ratio_tree_t(m, n, s, t))
    return out


def gmnp_task(m: int, n: int) -> list[CheckRecord]:
    out: list[CheckRecord] = []
    if m * n <= m + n:
        return out
    taus = {p: tau(build_gmnp(m, n, p)) for p in range(0, min(m, n) + 1)}
    for p in range(0, min(m, n) + 1):
        _rec(out, "gmnp.tau", (m, n, p), fm.tau_gmnp(m, n, p), taus[p])
    for p in range(1, min(m, n) + 1):
        g = build_gmnp(m, n, p)
        table = dict(fm.gmnp_resistances(m, n, p).items())
        r = resistance_matrix(g)
        seen = set()
        for u, v in combinations(range(m + n), 2):
            cls = fm.gmnp_pair_class(m, n, p, u, v)
            if cls is None:
                continue
            _rec(out, "gmnp.r-table=matrix", (m, n, p, cls, u, v), table[cls], r[u][v])
            if cls not in seen:
                seen.add(cls)
                _rec(out, "gmnp.r-table=solve", (m, n, p, cls), table[cls], effective_resistance(g, u, v))
                _rec(out, "gmnp.r-table=tau", (m, n, p, cls), table[cls], effective_resistance_tau(g, u, v))
        kf = kirchhoff_index(g)
        _rec(out, "gmnp.kf", (m, n, p), fm.kf_gmnp(m, n, p), kf)
        _rec(out, "gmnp.kf=table", (m, n, p), fm.kf_gmnp_from_table(m, n, p), kf)
        if m == n:
            _rec(out, "gmnp.shi-chen", (n, p), fm.kf_shi_chen(n, p), fm.kf_gmnp(n, n, p))
        if p < min(m, n):
            r11 = table["r11"]
            _rec(out, "gmnp.ratio=1-r11", (m, n, p), 1 - r11, taus[p + 1] / taus[p])
    return out


def random_connected_graph(rng: random.Random, max_vertices: int = 9, unit: bool | None = None) -> Multigraph:
    """Random connected multigraph on 2..max_vertices vertices with rational conductances."""
    n = rng.randint(2, max_vertices)
    if unit is None:
        unit = rng.random() < 0.5
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[rng.randrange(i)]) for i in range(1, n)]
    all_pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    extra = rng.randint(0, len(all_pairs))
    pairs += rng.sample(all_pairs, extra)
    if unit:
        pairs = list({frozenset(p): p for p in pairs}.values())
    elif pairs and rng.random() < 0.3:
        pairs.append(rng.choice(pairs))  # a parallel edge

    def weight():
        return Fraction(1) if unit else Fraction(rng.randint(1, 6), rng.randint(1, 4))

    return Multigraph.from_edges(n, [(a, b, weight()) for a, b in pairs])


def laws_task(seed: int, index: int) -> list[CheckRecord]:
    rng = random.Random(f"{seed}:{index}")
    g = random_connected_graph(rng)
    out: list[CheckRecord] = []
    n = g.vertex_count
    key = (seed, index)
    r = resistance_matrix(g)
    _rec(out, "laws.foster", key, 0, foster_residual(g))

    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for u, v in rng.sample(pairs, min(10, len(pairs))):
        _rec(out, "laws.local-rule", key + (u, v), 0, local_rule_residual(g, u, v))

    for u, v in combinations(range(n), 2):
        solve = effective_resistance(g, u, v)
        _rec(out, "laws.solve=tau", key + (u, v), solve, effective_resistance_tau(g, u, v))
        _rec(out, "laws.solve=matrix", key + (u, v), solve, r[u][v])
        _rec(out, "laws.symmetry", key + (u, v), r[u][v], r[v][u])
        _rec(out, "laws.positive", key + (u, v), 1, int(r[u][v] > 0))
        try:
            value, _ = series_parallel_reduce(g, u, v)
        except NotSeriesParallelError:
            pass
        else:
            _rec(out, "laws.series-parallel", key + (u, v), solve, value)
        twin = twin_resistance(g, u, v) if g.is_simple() and all(w == 1 for *_, w in g.edges) else None
        if twin is not None:
            _rec(out, "laws.twin", key + (u, v), twin, r[u][v])
    for v in range(n):
        _rec(out, "laws.zero-diagonal", key + (v,), 0, r[v][v])

    for _ in range(200):
        x, y, z = (rng.randrange(n) for _ in range(3))
        excess = r[x][y] - r[x][z] - r[z][y]
        _rec(out, "laws.triangle", key + (x, y, z), 0, max(excess, Fraction(0)))

    total = tau(g)
    for e in rng.sample(range(g.edge_count), min(5, g.edge_count)):
        w = g.edges[e].weight
        _rec(out, "laws.deletion-contraction", key + (e,), total,
             tau(g.delete_edge(e)) + w * tau(contract_edge(g, e)))
    return out


# ----------------------------------------------------------------- driver


def build_tasks(suite: str, max_m: int, max_n: int, seed: int, graphs: int = 100) -> list[tuple[Callable, tuple]]:
    suites = SUITES if suite == "all" else (suite,)
    tasks: list[tuple[Callable, tuple]] = []
    grid = [(m, n) for m in range(2, max_m + 1) for n in range(2, max_n + 1)]
    for name in suites:
        if name == "matching":
            tasks += [(matching_task, mn) for mn in grid]
        elif name == "tree":
            tasks += [(tree_task, mn) for mn in grid]
        elif name == "gmnp":
            tasks += [(gmnp_task, mn) for mn in grid]
        elif name == "laws":
            tasks += [(laws_task, (seed, i)) for i in range(graphs)]
        else:
            raise ValueError(f"unknown suite {name!r}")
    return tasks


def _run(task):
    fn, args = task
    return fn(*args)


def run_verification(suite: str = "all", max_m: int = 5, max_n: int = 5, jobs: int = 1,
                     seed: int = DEFAULT_SEED, graphs: int = 100) -> VerifyReport:
    if max_m < 2 or max_n < 2:
        raise ValueError("bounds must be >= 2")
    tasks = build_tasks(suite, max_m, max_n, seed, graphs)
    report = VerifyReport()
    if jobs <= 1:
        results = map(_run, tasks)
        for recs in results:
            report.records.extend(recs)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for recs in pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                report.records.extend(recs)
    return report
