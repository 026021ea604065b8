"""Closed-form spanning-tree counts, resistances and Kirchhoff indices.

Every evaluator works in exact rationals.  Powers use rational
exponentiation with ``0**0 == 1``; a zero base under a negative exponent is
a domain error.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb, prod
from typing import Sequence

F = Fraction


class FormulaDomainError(ValueError):
    """Parameters lie outside the formula's validity domain."""


def _pow(base, exp: int) -> Fraction:
    base = F(base)
    if base == 0:
        if exp == 0:
            return F(1)
        if exp < 0:
            raise FormulaDomainError("zero raised to a negative power")
    return base ** exp


def _check_sides(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise FormulaDomainError(f"side sizes must be >= 1, got m={m} n={n}")


def cayley(n: int) -> Fraction:
    """Spanning trees of K_n."""
    if n < 1:
        raise FormulaDomainError("n must be >= 1")
    return _pow(n, n - 2)


def moon_forest(n: int, component_orders: Sequence[int]) -> Fraction:
    """Spanning trees of K_n containing a forest with the given component orders.

    Vertices not covered by the listed components count as singletons.
    """
    if n < 1:
        raise FormulaDomainError("n must be >= 1")
    orders = list(component_orders)
    if any(o < 1 for o in orders):
        raise FormulaDomainError("component orders must be positive")
    covered = sum(orders)
    if covered > n:
        raise FormulaDomainError(f"component orders sum to {covered} > n = {n}")
    orders += [1] * (n - covered)
    return _pow(n, len(orders) - 2) * prod(orders)


def tau_kmn(m: int, n: int) -> Fraction:
    _check_sides(m, n)
    return _pow(m, n - 1) * _pow(n, m - 1)


def tau_matching(m: int, n: int, k: int) -> Fraction:
    """Spanning trees of K_{m,n} containing a fixed matching of size k."""
    _check_sides(m, n)
    if not 0 <= k <= min(m, n):
        raise FormulaDomainError(f"matching size k={k} must lie in 0..{min(m, n)}")
    if k == 0:
        return tau_kmn(m, n)
    return _pow(m + n, k - 1) * (m + n - k) * _pow(m, n - k - 1) * _pow(n, m - k - 1)


def ratio_matching(m: int, n: int, k: int) -> Fraction:
    """tau_{k+1} / tau_k for matchings in K_{m,n}."""
    _check_sides(m, n)
    if not 1 <= k <= min(m, n) - 1:
        raise FormulaDomainError(f"k={k} must lie in 1..{min(m, n) - 1}")
    return F((m + n) * (m + n - k - 1), m * n * (m + n - k))


def _check_tree(m: int, n: int, s: int, t: int) -> None:
    _check_sides(m, n)
    if not (0 <= s <= m and 0 <= t <= n):
        raise FormulaDomainError(f"need 0 <= s <= m and 0 <= t <= n, got s={s} t={t}")
    if (s == 0 and t >= 2) or (t == 0 and s >= 2):
        raise FormulaDomainError(f"no tree of K_{{m,n}} has (s, t) = ({s}, {t})")


def tau_tree(m: int, n: int, s: int, t: int) -> Fraction:
    """Spanning trees of K_{m,n} containing a tree meeting s X-vertices and t Y-vertices."""
    _check_tree(m, n, s, t)
    if s + t <= 1:
        return tau_kmn(m, n)
    return (s * n + t * m - s * t) * _pow(m, n - t - 1) * _pow(n, m - s - 1)


def ratio_tree_t(m: int, n: int, s: int, t: int) -> Fraction:
    """tau_{s,t+1} / tau_{s,t}."""
    _check_sides(m, n)
    if not (1 <= s <= m and 1 <= t <= n - 1):
        raise FormulaDomainError(f"need 1 <= s <= m and 1 <= t <= n-1, got s={s} t={t}")
    return F(s * n + (m - s) * (t + 1), m * (s * n + (m - s) * t))


def ratio_tree_s(m: int, n: int, s: int, t: int) -> Fraction:
    """tau_{s+1,t} / tau_{s,t}."""
    _check_sides(m, n)
    if not (1 <= s <= m - 1 and 1 <= t <= n):
        raise FormulaDomainError(f"need 1 <= s <= m-1 and 1 <= t <= n, got s={s} t={t}")
    return F(t * m + (n - t) * (s + 1), n * (t * m + (n - t) * s))


def tau_gmnp(m: int, n: int, p: int) -> Fraction:
    """Spanning trees of K_{m,n} minus a p-edge matching."""
    _check_sides(m, n)
    if not 0 <= p <= min(m, n):
        raise FormulaDomainError(f"p={p} must lie in 0..{min(m, n)}")
    if p == 0:
        return tau_kmn(m, n)
    c = m * n - m - n
    return (c + p) * _pow(c, p - 1) * _pow(m, n - p - 1) * _pow(n, m - p - 1)


# ------------------------------------------------------------- G(m,n,p)


def check_gmnp_domain(m: int, n: int, p: int) -> None:
    if m < 2 or n < 2:
        raise FormulaDomainError(f"resistance formulas need m, n >= 2, got m={m} n={n}")
    if not 1 <= p <= min(m, n):
        raise FormulaDomainError(f"resistance formulas need 1 <= p <= min(m, n), got p={p}")
    if m * n - m - n <= 0:
        raise FormulaDomainError(f"resistance formulas need mn - m - n > 0, got m={m} n={n}")


@dataclass(frozen=True)
class GmnpResistanceTable:
    """Effective resistance for each vertex-pair class of G(m,n,p); None marks an empty class."""

    r1: Fraction | None
    r2: Fraction | None
    r3: Fraction | None
    r4: Fraction | None
    r5: Fraction | None
    r6: Fraction | None
    r7: Fraction | None
    r8: Fraction | None
    r9: Fraction | None
    r10: Fraction | None
    r11: Fraction | None

    def items(self) -> list[tuple[str, Fraction | None]]:
        return [(f.name, getattr(self, f.name)) for f in fields(self)]

    def swapped(self) -> GmnpResistanceTable:
        """The table with the roles of the two sides exchanged."""
        return GmnpResistanceTable(
            self.r2, self.r1, self.r4, self.r3, self.r5, self.r6,
            self.r10, self.r9, self.r8, self.r7, self.r11,
        )


def gmnp_resistances(m: int, n: int, p: int) -> GmnpResistanceTable:
    check_gmnp_domain(m, n, p)
    c = m * n - m - n
    d = c + p
    r = {
        "r1": F(2 * (m - 1), c),
        "r2": F(2 * (n - 1), c),
        "r3": F(2, n),
        "r4": F(2, m),
        "r5": F(m + n, c) - F(m * n, c * d),
        "r6": F(m + n - 2, c) - F(m * n, c * d),
        "r7": F(2 * n - 1, n * (n - 1)) + F(p - 1, p * (n - 1) * c) + F(n - p, p * n * (n - 1) * d),
        "r8": F(1, m) + F((p - 1) * (m - 1), p * c) + F((m - p) * (m - 1), p * m * d),
        "r9": F(1, n) + F((p - 1) * (n - 1), p * c) + F((n - p) * (n - 1), p * n * d),
        "r10": F(2 * m - 1, m * (m - 1)) + F(p - 1, p * (m - 1) * c) + F(m - p, p * m * (m - 1) * d),
        "r11": F(1, m) + F(1, n) - F(c, m * n * d),
    }
    present = {
        "r1": p >= 2, "r2": p >= 2, "r3": m - p >= 2, "r4": n - p >= 2,
        "r5": True, "r6": p >= 2, "r7": m > p, "r8": n > p,
        "r9": m > p, "r10": n > p, "r11": m > p and n > p,
    }
    return GmnpResistanceTable(**{k: (v if present[k] else None) for k, v in r.items()})


def gmnp_pair_class(m: int, n: int, p: int, u: int, v: int) -> str | None:
    """Name of the table entry covering the pair (u, v) of ``build_gmnp(m, n, p)``.

    Returns None for adjacent pairs that no table entry covers and for u == v.
    Vertices 0..m-1 are x_1..x_m, m..m+n-1 are y_1..y_n.
    """
    if u == v:
        return None
    if u > v:
        u, v = v, u
    if v < m:  # x x
        i, j = u + 1, v + 1
        a, b = i <= p, j <= p
        return "r1" if a and b else "r3" if not (a or b) else "r7"
    if u >= m:  # y y
        i, j = u - m + 1, v - m + 1
        a, b = i <= p, j <= p
        return "r2" if a and b else "r4" if not (a or b) else "r10"
    i, j = u + 1, v - m + 1
    a, b = i <= p, j <= p
    if a and b:
        return "r5" if i == j else "r6"
    if a:
        return "r8"
    if b:
        return "r9"
    return "r11"


def kf_gmnp(m: int, n: int, p: int) -> Fraction:
    """Kirchhoff index of G(m,n,p), closed form."""
    check_gmnp_domain(m, n, p)
    c = m * n - m - n
    d = c + p
    return (
        m + n - 1
        + F(p * p * (m + n - 2) + 2 * p, c)
        + F((m - p) * (m - 1), n)
        + F((n - p) * (n - 1), m)
        - F(p * m * n, c * d)
        + F(p * (m - p), n - 1)
        + F((m - p) * (p - 1), (n - 1) * c)
        + F((m - p) * (n - p), n * (n - 1) * d)
        + F(p * (n - p), m - 1)
        + F((n - p) * (p - 1), (m - 1) * c)
        + F((m - p) * (n - p), m * (m - 1) * d)
    )


def kf_gmnp_from_table(m: int, n: int, p: int) -> Fraction:
    """Kirchhoff index assembled from class sizes and the resistance table.

    Adjacent pairs contribute m + n - 1 in total (Foster); the rest are the
    non-adjacent classes r1, r2, r3, r4, r5, r7, r10.
    """
    t = gmnp_resistances(m, n, p)

    def val(x):
        return x if x is not None else F(0)

    return (
        m + n - 1
        + comb(p, 2) * (val(t.r1) + val(t.r2))
        + comb(m - p, 2) * val(t.r3)
        + comb(n - p, 2) * val(t.r4)
        + p * val(t.r5)
        + p * (m - p) * val(t.r7)
        + p * (n - p) * val(t.r10)
    )


def kf_shi_chen(n: int, p: int) -> Fraction:
    """Kirchhoff index of K_{n,n} minus p disjoint edges."""
    if n <= 2:
        raise FormulaDomainError(f"n must be >= 3, got {n}")
    if not 1 <= p <= n:
        raise FormulaDomainError(f"p must lie in 1..{n}, got {p}")
    if p == n:
        return F(5 * n - 6, (n - 1) * (n - 2)) + 4 * n + 1
    q = n * n - 2 * n + p
    return (
        F(n * p * (2 * n * n - 5 * n + 2 * p), (n - 2) * q)
        + F((n - p) * (2 * n * n - 5 * n + 2 * p + 2), q)
        + 2 * (n - 1)
    )
