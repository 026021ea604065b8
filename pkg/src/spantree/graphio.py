"""Plain-text graph files.

::

    # comment
    graph 3
    edge 0 1 1
    edge 1 2 3/2

Vertices are 0-based; weights (conductances) are integers or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .graph import GraphError, Multigraph

_WEIGHT = re.compile(r"^[+-]?\d+(/\d+)?$")


class GraphFormatError(ValueError):
    pass


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_graph(g: Multigraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    if g.labels is not None:
        lines.append("# labels: " + " ".join(g.labels))
    lines.append(f"graph {g.vertex_count}")
    lines += [f"edge {u} {v} {format_rational(w)}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Multigraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2 or not parts[1].isdigit():
                raise GraphFormatError(f"line {lineno}: expected 'graph <vertex_count>', got {raw!r}")
            n = int(parts[1])
            continue
        if parts[0] != "edge" or len(parts) != 4:
            raise GraphFormatError(f"line {lineno}: expected 'edge <u> <v> <weight>', got {raw!r}")
        if not (parts[1].isdigit() and parts[2].isdigit()):
            raise GraphFormatError(f"line {lineno}: vertex ids must be non-negative integers")
        if not _WEIGHT.match(parts[3]):
            raise GraphFormatError(f"line {lineno}: bad weight {parts[3]!r}")
        try:
            w = Fraction(parts[3])
        except ZeroDivisionError:
            raise GraphFormatError(f"line {lineno}: zero denominator") from None
        edges.append((int(parts[1]), int(parts[2]), w))
    if n is None:
        raise GraphFormatError("missing 'graph <vertex_count>' header")
    try:
        return Multigraph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None
