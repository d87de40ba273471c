"""Backtracking isomorphism for small graphs and enumeration up to isomorphism.

Candidates are pruned by colour refinement (iterated degree refinement run
jointly on both graphs), then extended one vertex at a time, always choosing
the unmapped vertex with the most already-mapped neighbours.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .errors import ResourceLimitError
from .graph import Graph, components

ISO_ORDER_LIMIT = 64


def _initial_colors(g: Graph) -> list[tuple]:
    masks = g.nbr_masks
    return [(g.degree(v), sum((masks[v] & masks[w]).bit_count() for w in g.adj[v]) // 2) for v in range(g.n)]


def refine_colors(graphs: list[Graph]) -> list[list[int]]:
    """Joint colour refinement.  Returns stable colour ids, comparable across ``graphs``."""
    raw = [_initial_colors(g) for g in graphs]
    table = {c: i for i, c in enumerate(sorted({c for cols in raw for c in cols}))}
    colors = [[table[c] for c in cols] for cols in raw]
    classes = len(table)
    while True:
        sigs = [
            [(cols[v], tuple(sorted(cols[w] for w in g.adj[v]))) for v in range(g.n)]
            for g, cols in zip(graphs, colors)
        ]
        table = {s: i for i, s in enumerate(sorted({s for ss in sigs for s in ss}))}
        colors = [[table[s] for s in ss] for ss in sigs]
        if len(table) == classes:
            return colors
        classes = len(table)


def find_isomorphism(g: Graph, h: Graph, limit: int = ISO_ORDER_LIMIT) -> list[int] | None:
    """A bijection ``phi`` with ``uv ∈ E(g) <=> phi[u]phi[v] ∈ E(h)``, or None.

    Deterministic: the lexicographically first mapping in the search order.
    """
    if g.n > limit or h.n > limit:
        raise ResourceLimitError(f"isomorphism test limited to order {limit}, got {g.n}/{h.n}")
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return None
    n = g.n
    if n == 0:
        return []
    cg, ch = refine_colors([g, h])
    if sorted(cg) != sorted(ch):
        return None

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)
    class_size = {c: len(ws) for c, ws in by_color.items()}

    # fixed vertex order for g: connectivity-first, rarest colour first
    order: list[int] = []
    placed = [False] * n
    gm = g.nbr_masks
    hm = h.nbr_masks
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed[v]:
                continue
            links = sum(1 for u in order if (gm[v] >> u) & 1)
            key = (-links, class_size[cg[v]], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        placed[best] = True
        order.append(best)
    prev = [[(i, (gm[order[k]] >> order[i]) & 1) for i in range(k)] for k in range(n)]

    phi = [-1] * n
    image = [-1] * n  # image[k] = h-vertex assigned to order[k]
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in by_color[cg[v]]:
            if used[w]:
                continue
            wm = hm[w]
            if all(((wm >> image[i]) & 1) == bit for i, bit in prev[k]):
                used[w] = True
                image[k] = w
                phi[v] = w
                if extend(k + 1):
                    return True
                used[w] = False
        return False

    return list(phi) if extend(0) else None


def is_isomorphic(g: Graph, h: Graph, limit: int = ISO_ORDER_LIMIT) -> tuple[bool, list[int] | None]:
    phi = find_isomorphism(g, h, limit)
    return phi is not None, phi


def check_isomorphism(g: Graph, h: Graph, phi: list[int]) -> bool:
    """Independent check that ``phi`` maps ``g`` onto ``h`` exactly."""
    if g.n != h.n or sorted(phi) != list(range(g.n)):
        return False
    return sorted(tuple(sorted((phi[u], phi[v]))) for u, v in g.edges()) == h.edges()


# -- invariants and enumeration ---------------------------------------


def invariant_key(g: Graph) -> tuple:
    """An isomorphism invariant (equal for isomorphic graphs)."""
    # refinement of a single graph is equivariant, so the colour ids it
    # assigns agree between isomorphic graphs
    (cols,) = refine_colors([g])
    profile = sorted((cols[v], tuple(sorted(cols[w] for w in g.adj[v]))) for v in range(g.n))
    return (g.n, g.m, tuple(profile))


class IsoClassStore:
    """Keeps one representative per isomorphism class."""

    def __init__(self):
        self.buckets: dict[tuple, list[Graph]] = {}
        self.reps: list[Graph] = []

    def add(self, g: Graph) -> bool:
        """Insert ``g`` if new; return whether it was new."""
        bucket = self.buckets.setdefault(invariant_key(g), [])
        for other in bucket:
            if find_isomorphism(g, other) is not None:
                return False
        bucket.append(g)
        self.reps.append(g)
        return True

    def __len__(self) -> int:
        return len(self.reps)


ENUMERATION_ORDER_LIMIT = 8


@lru_cache(maxsize=None)
def graphs_of_order(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices, one per isomorphism class.

    Built by adding vertex ``n-1`` with every neighbour subset to each class
    representative of order ``n-1``.  Representatives are sorted by
    (edge count, graph6) for a stable order.
    """
    if n > ENUMERATION_ORDER_LIMIT:
        raise ResourceLimitError(f"enumeration limited to order {ENUMERATION_ORDER_LIMIT}, got {n}")
    if n <= 0:
        return (Graph.empty(0),)
    store = IsoClassStore()
    for base in graphs_of_order(n - 1):
        base_edges = base.edges()
        for mask in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if (mask >> v) & 1]
            store.add(Graph.from_edges(n, base_edges + extra))
    from .graph import to_graph6

    return tuple(sorted(store.reps, key=lambda g: (g.m, to_graph6(g))))


def connected_graphs(n: int, min_degree: int = 0) -> list[Graph]:
    return [
        g
        for g in graphs_of_order(n)
        if g.min_degree >= min_degree and len(components(g)) == 1
    ]


def connected_graphs_up_to(max_order: int, min_degree: int = 0, min_order: int = 1) -> list[Graph]:
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(connected_graphs(n, min_degree))
    return out


def graphs_with_edges(m: int) -> list[Graph]:
    """All graphs with exactly ``m`` edges and no isolated vertices, up to isomorphism.

    Grown edge by edge: each new edge joins two existing vertices, one
    existing vertex and a new one, or two new ones.
    """
    layer = [Graph.empty(0)]
    for _ in range(m):
        store = IsoClassStore()
        for g in layer:
            n = g.n
            base = g.edges()
            cands = [(u, v) for u, v in combinations(range(n), 2) if v not in g.adj[u]]
            cands += [(u, n) for u in range(n)]
            cands.append((n, n + 1))
            for u, v in cands:
                size = max(n, v + 1)
                store.add(Graph.from_edges(size, base + [(u, v)]))
        layer = store.reps
    return sorted(layer, key=lambda g: (g.n, g.edges()))
