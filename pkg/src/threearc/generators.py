"""Named graph families.

Labeling conventions (kept stable so examples are reproducible):

* ``cycle(n)``: ``i ~ i+1 mod n``.
* ``path(n)``: ``i ~ i+1``.
* ``complete_bipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``star(k)``: centre 0, leaves ``1..k``.
* ``friendship(k)``: centre 0; triangle ``j`` uses ``2j+1, 2j+2``.
* ``corona(H)``: H keeps its ids, the pendant of ``x`` is ``x + |V(H)|``.
* ``cone(H)``: apex is the highest id ``|V(H)|``.
* ``two_cliques(s, t)``: shared vertex 0, ``K_s`` on ``0..s-1``, ``K_t`` on ``0, s..s+t-2``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GenerationFailed, ValidationError
from .graph import Graph, is_connected

RANDOM_RETRIES = 10_000


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 0:
        raise ValidationError(f"order must be non-negative, got {n}")
    return Graph.empty(n)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValidationError(f"complete bipartite needs both parts non-empty, got {a}, {b}")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    return complete_bipartite(1, k)


def friendship(k: int) -> Graph:
    """k triangles sharing the common vertex 0."""
    if k < 1:
        raise ValidationError(f"friendship graph needs k >= 1, got {k}")
    edges = []
    for j in range(k):
        a, b = 2 * j + 1, 2 * j + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def corona(h: Graph) -> Graph:
    """H with a pendant leaf ``x + n`` attached to every vertex ``x``."""
    n = h.n
    return Graph.from_edges(2 * n, [*h.edges(), *((x, x + n) for x in range(n))])


def cone(h: Graph) -> Graph:
    """H plus an apex (id ``n``) joined to every vertex of H."""
    n = h.n
    return Graph.from_edges(n + 1, [*h.edges(), *((x, n) for x in range(n))])


def two_cliques(s: int, t: int) -> Graph:
    """``K_s`` and ``K_t`` glued at one shared vertex (id 0)."""
    if s < 2 or t < 2:
        raise ValidationError(f"two_cliques needs s, t >= 2, got {s}, {t}")
    first = list(range(s))
    second = [0, *range(s, s + t - 1)]
    edges = [*combinations(first, 2), *combinations(second, 2)]
    return Graph.from_edges(s + t - 1, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def wheel(k: int) -> Graph:
    """Cone over ``C_k`` (hub id ``k``)."""
    return cone(cycle(k))


def disjoint_copies(g: Graph, k: int) -> Graph:
    out = Graph.empty(0)
    for _ in range(k):
        out = out.disjoint_union(g)
    return out


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in ``g.edges()`` order; adjacent iff they share an end."""
    edges = g.edges()
    pairs = [
        (i, j)
        for i, j in combinations(range(len(edges)), 2)
        if set(edges[i]) & set(edges[j])
    ]
    return Graph.from_edges(len(edges), pairs)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_min_degree(
    n: int, min_degree: int, seed: int | None = None, retries: int = RANDOM_RETRIES
) -> Graph:
    """A connected G(n, p) sample with minimum degree at least ``min_degree``.

    Rejection sampling; p targets a mean degree of about ``min_degree + 1.5``.
    """
    if n < 1 or min_degree < 0 or min_degree >= n:
        raise ValidationError(f"no graph on {n} vertices can have minimum degree {min_degree}")
    rng = random.Random(seed)
    p = min(1.0, (min_degree + 1.5) / max(1, n - 1))
    for _ in range(retries):
        g = gnp(n, p, rng)
        if g.min_degree >= min_degree and is_connected(g):
            return g
    raise GenerationFailed(f"no connected graph with n={n}, δ>={min_degree} in {retries} draws")


@dataclass(frozen=True)
class GraphFamilySpec:
    """A family tag plus its parameters, e.g. ``GraphFamilySpec("cycle", {"n": 5})``."""

    family: str
    params: dict = field(default_factory=dict)


_FAMILIES = {
    "cycle": lambda p: cycle(p["n"]),
    "path": lambda p: path(p["n"]),
    "complete": lambda p: complete(p["n"]),
    "empty": lambda p: empty(p["n"]),
    "complete-bipartite": lambda p: complete_bipartite(p["a"], p["b"]),
    "star": lambda p: star(p["k"]),
    "friendship": lambda p: friendship(p["k"]),
    "petersen": lambda p: petersen(),
    "wheel": lambda p: wheel(p["k"]),
    "two-cliques": lambda p: two_cliques(p["s"], p["t"]),
    "random-min-degree": lambda p: random_min_degree(
        p["n"], p.get("delta", p.get("min_degree", 2)), p.get("seed")
    ),
}


def generate(spec: GraphFamilySpec) -> Graph:
    """Build a graph from a family spec.

    ``corona`` and ``cone`` take a ``base`` entry that is itself a ``GraphFamilySpec``
    or a :class:`Graph`.
    """
    if spec.family in ("corona", "cone"):
        base = spec.params.get("base")
        if isinstance(base, GraphFamilySpec):
            base = generate(base)
        if not isinstance(base, Graph):
            raise ValidationError(f"{spec.family} needs a 'base' graph")
        return corona(base) if spec.family == "corona" else cone(base)
    try:
        build = _FAMILIES[spec.family]
    except KeyError:
        raise ValidationError(f"unknown graph family {spec.family!r}") from None
    try:
        return build(spec.params)
    except KeyError as exc:
        raise ValidationError(f"family {spec.family!r} missing parameter {exc}") from None


def parse_family(text: str) -> GraphFamilySpec:
    """Parse ``name:key=val,key=val`` (e.g. ``friendship:k=3``)."""
    name, _, rest = text.partition(":")
    params: dict = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ValidationError(f"bad family parameter {item!r}")
        try:
            params[key.strip()] = int(val)
        except ValueError:
            raise ValidationError(f"family parameter {key!r} must be an integer, got {val!r}") from None
    if name in ("corona", "cone"):
        base = params.pop("base_cycle", None)
        if base is None:
            raise ValidationError(f"{name} from the command line needs base_cycle=<n>")
        params["base"] = cycle(base)
    return GraphFamilySpec(name.strip(), params)
