"""3-arc graphs: full, relative to a self-paired 3-arc set, directed, and iterated.

The vertices of every result are the arcs of the source, sorted by
``(tail, head)``; vertex ``i`` of the result carries label ``labels[i]``.
Arcs ``uv`` and ``xy`` are adjacent iff ``(v, u, x, y)`` is a 3-arc: ``u ~ x``,
``v ~ u``, ``x ~ y``, ``v != x`` and ``u != y`` (``v == y`` is allowed).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MalformedInputError, ResourceLimitError, ValidationError
from .graph import DiGraph, Edge, Graph

ThreeArc = tuple[int, int, int, int]


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """A graph whose vertex ``i`` stands for the arc ``labels[i]`` of a source graph."""

    graph: Graph
    labels: tuple[Edge, ...] = field(repr=False)

    @cached_property
    def index(self) -> dict[Edge, int]:
        return {arc: i for i, arc in enumerate(self.labels)}

    def vertex(self, arc: Edge) -> int:
        return self.index[tuple(arc)]

    def arcs_of(self, vertices: Iterable[int]) -> list[Edge]:
        return [self.labels[i] for i in vertices]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def label_table(self) -> str:
        return "".join(f"{i}: {t}->{h}\n" for i, (t, h) in enumerate(self.labels))

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, m={self.m})"


def is_three_arc(g: Graph, t: Sequence[int]) -> bool:
    v, u, x, y = t
    return (
        u in g.adj[v]
        and x in g.adj[u]
        and y in g.adj[x]
        and v != x
        and u != y
    )


def all_three_arcs(g: Graph) -> set[ThreeArc]:
    """Every 3-arc ``(v, u, x, y)`` of ``g``."""
    out = set()
    for u in range(g.n):
        for x in g.adj[u]:
            for v in g.adj[u]:
                if v == x:
                    continue
                for y in g.adj[x]:
                    if y != u:
                        out.add((v, u, x, y))
    return out


def unpaired(delta: Iterable[ThreeArc]) -> ThreeArc | None:
    """A tuple of ``delta`` whose reversal is missing, or None if self-paired."""
    s = set(map(tuple, delta))
    for v, u, x, y in sorted(s):
        if (y, x, u, v) not in s:
            return (v, u, x, y)
    return None


def is_self_paired(delta: Iterable[ThreeArc]) -> bool:
    return unpaired(delta) is None


def _labeled(n_arcs: list[Edge], edges: Iterable[tuple[int, int]]) -> LabeledGraph:
    return LabeledGraph(Graph.from_edges(len(n_arcs), edges), tuple(n_arcs))


def build_X(g: Graph, delta: Iterable[ThreeArc] | None = None) -> LabeledGraph:
    """The 3-arc graph of ``g``, or ``X(g, delta)`` when ``delta`` is given.

    ``delta`` must be self-paired and consist of 3-arcs of ``g``; it is
    rejected, never repaired.
    """
    arcs = g.arcs()
    index = {a: i for i, a in enumerate(arcs)}
    if delta is None:
        edges = []
        for i, (u, v) in enumerate(arcs):
            for x in g.adj[u]:
                if x == v:
                    continue
                for y in g.adj[x]:
                    if y != u:
                        j = index[(x, y)]
                        if i < j:
                            edges.append((i, j))
        return _labeled(arcs, edges)

    delta = {tuple(t) for t in delta}
    for t in sorted(delta):
        if len(t) != 4 or not is_three_arc(g, t):
            raise ValidationError(f"{t} is not a 3-arc of the graph")
    bad = unpaired(delta)
    if bad is not None:
        v, u, x, y = bad
        raise ValidationError(f"3-arc set is not self-paired: {bad} present but {(y, x, u, v)} missing")
    edges = [(index[(u, v)], index[(x, y)]) for v, u, x, y in delta]
    return _labeled(arcs, edges)


def directed_adjacent(d: DiGraph, u: int, x: int) -> bool:
    """Adjacency of ``u`` and ``x`` in a digraph: an arc in either direction."""
    return d.has_arc(u, x) or d.has_arc(x, u)


def build_X_directed(d: DiGraph) -> LabeledGraph:
    """3-arc graph of a digraph: ``uv ~ xy`` iff ``v != x``, ``y != u`` and ``u, x`` adjacent."""
    arcs = d.arcs()
    edges = []
    for i, (u, v) in enumerate(arcs):
        for j in range(i + 1, len(arcs)):
            x, y = arcs[j]
            if v != x and y != u and directed_adjacent(d, u, x):
                edges.append((i, j))
    return _labeled(arcs, edges)


def iterate_X(g: Graph, i: int, cap: int = 5000) -> LabeledGraph:
    """``X^i(g)``; labels of the result are arcs of ``X^{i-1}(g)``.

    Raises ResourceLimitError before building any stage whose order (twice
    the edge count of the previous stage) exceeds ``cap``.
    """
    if i < 1:
        raise ValidationError(f"iteration count must be >= 1, got {i}")
    current = g
    result = None
    for stage in range(1, i + 1):
        order = 2 * current.m
        if order > cap:
            raise ResourceLimitError(
                f"X^{stage} would have {order} vertices (cap {cap})", stage=stage
            )
        result = build_X(current)
        current = result.graph
    return result


# -- text IO -------------------------------------------------------------


def parse_three_arcs(text: str) -> set[ThreeArc]:
    """Parse a Δ file: one ``v u x y`` tuple per line, ``#`` comments."""
    out = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != 4:
            raise MalformedInputError(f"expected 4 vertex ids, got {line!r}", lineno)
        try:
            out.add(tuple(int(p) for p in parts))
        except ValueError:
            raise MalformedInputError(f"non-integer id in {line!r}", lineno) from None
    return out


def parse_label_table(text: str) -> list[Edge]:
    labels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        try:
            idx, arc = raw.split(":")
            t, h = arc.split("->")
            labels.append((int(idx), (int(t), int(h))))
        except ValueError:
            raise MalformedInputError(f"bad label line {raw!r}", lineno) from None
    labels.sort()
    if [i for i, _ in labels] != list(range(len(labels))):
        raise MalformedInputError("label table ids are not 0..k-1")
    return [arc for _, arc in labels]
