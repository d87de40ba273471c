"""Simple undirected graphs and digraphs on dense integer vertex ids, plus text IO.

Vertices of a graph of order ``n`` are exactly ``0..n-1``.  Graphs are
immutable once built; derived data (bitmasks, degree extremes) is cached.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import MalformedInputError, ValidationError

Edge = tuple[int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    """A finite simple undirected graph."""

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) outside 0..{n - 1}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        # labeled equality, not isomorphism
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[Edge]:
        """Edges as sorted pairs, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def arcs(self) -> list[Edge]:
        """All ordered pairs of adjacent vertices, sorted by (tail, head)."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u])]

    @cached_property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adj), reverse=True)

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitmasks."""
        out = []
        for a in self.adj:
            mask = 0
            for w in a:
                mask |= 1 << w
            out.append(mask)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.nbr_masks))

    # -- derived graphs ------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Return ``G[vertices]`` relabelled to 0..k-1 and the list mapping new id -> old id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u in keep for v in self.adj[u] if v in index and u < v]
        return Graph.from_edges(len(keep), edges), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def add_edges(self, edges: Iterable[Sequence[int]], extra_vertices: int = 0) -> Graph:
        return Graph.from_edges(self.n + extra_vertices, [*self.edges(), *edges])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of this graph under the vertex bijection ``v -> perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph.from_edges(
            self.n + other.n, [*self.edges(), *((u + shift, v + shift) for u, v in other.edges())]
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True, eq=False)
class DiGraph:
    """A loopless digraph; antiparallel arc pairs are allowed."""

    n: int
    out: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> DiGraph:
        succ: list[set[int]] = [set() for _ in range(n)]
        for u, v in arcs:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"arc ({u}, {v}) outside 0..{n - 1}")
            succ[u].add(v)
        return cls(n, tuple(frozenset(s) for s in succ))

    @classmethod
    def symmetric(cls, g: Graph) -> DiGraph:
        """Both orientations of every edge of ``g``."""
        return cls.from_arcs(g.n, g.arcs())

    def arcs(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.out[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out[u]

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, arcs={sum(len(s) for s in self.out)})"


# -- structure ---------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, listed by their minimum vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(center, a, b, c)`` for some induced K_{1,3}, or None if claw-free.

    The witness is the lexicographically first one found scanning centres in
    increasing order.
    """
    for x in range(g.n):
        nb = sorted(g.adj[x])
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return (x, a, b, c)
    return None


def is_claw_free(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    witness = find_claw(g)
    return witness is None, witness


# -- edge-list IO ------------------------------------------------------

_ORDER_DIRECTIVE = re.compile(r"#\s*n\s*=\s*(\d+)")


def _parse_pairs(text: str) -> tuple[int, list[Edge]]:
    edges: list[Edge] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        directive = _ORDER_DIRECTIVE.match(raw.strip())
        if directive:
            declared = int(directive.group(1))
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInputError(f"expected two vertex ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInputError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise MalformedInputError(f"negative vertex id in {line!r}", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: loop edge {u} {v}")
        edges.append((u, v))
    n = max((max(e) for e in edges), default=-1) + 1
    if declared is not None:
        if declared < n:
            raise MalformedInputError(f"declared order {declared} smaller than max id + 1 = {n}")
        n = declared
    return n, edges


def from_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines.  ``#`` starts a comment; a ``# n=K`` comment fixes the order.

    Duplicate edges collapse.  Without a directive the order is max id + 1.
    """
    return Graph.from_edges(*_parse_pairs(text))


def from_arc_list(text: str) -> DiGraph:
    """Same format as :func:`from_edge_list`, each line read as an arc ``u -> v``."""
    return DiGraph.from_arcs(*_parse_pairs(text))


def to_arc_list(d: DiGraph) -> str:
    lines = [f"# n={d.n}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 ------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if i in g.adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _encode_order(g.n) + body


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedInputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        bad = next(c for c in s if not 0 <= ord(c) - 63 <= 63)
        raise MalformedInputError(f"byte {bad!r} outside graph6 range")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        body = data[8:]
    else:
        raise MalformedInputError("truncated graph6 order prefix")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedInputError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def looks_like_graph6(text: str) -> bool:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 1:
        return False
    s = lines[0].strip()
    if s.startswith(">>graph6<<"):
        return True
    return " " not in s and "#" not in s and all(63 <= ord(c) <= 126 for c in s)


def parse_graph(text: str) -> Graph:
    """Accept either graph6 (one line) or edge-list text."""
    if looks_like_graph6(text):
        return from_graph6(text)
    return from_edge_list(text)


def iter_graph6_file(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield from_graph6(line)
