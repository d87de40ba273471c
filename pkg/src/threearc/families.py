"""Structural families defined by exhaustive search rather than by drawing.

``family_A`` is the set of connected graphs with minimum degree at least 2
whose domination number exceeds 2n/5; it is rebuilt here by enumerating all
graphs of small order.
"""

from __future__ import annotations

from functools import lru_cache

from .domination import gamma
from .errors import ResourceLimitError, ValidationError
from .graph import Graph, components
from .iso import ENUMERATION_ORDER_LIMIT, connected_graphs, find_isomorphism


@lru_cache(maxsize=None)
def family_A(limit: int = 7) -> tuple[Graph, ...]:
    """Connected graphs with δ ≥ 2 and 5γ > 2n on at most ``limit`` vertices, up to isomorphism."""
    if limit < 7:
        raise ValidationError(f"family_A needs limit >= 7, got {limit}")
    if limit > ENUMERATION_ORDER_LIMIT:
        raise ResourceLimitError(f"family_A enumeration limited to order {ENUMERATION_ORDER_LIMIT}")
    out = []
    for n in range(3, limit + 1):
        for g in connected_graphs(n, min_degree=2):
            if 5 * gamma(g) > 2 * n:
                out.append(g)
    return tuple(out)


def family_A_member(g: Graph) -> Graph | None:
    """The member of family_A isomorphic to ``g`` (connected), if any."""
    if g.n not in (4, 7) or g.min_degree < 2:
        # members only occur at orders 4 and 7 (checked against the enumeration in tests)
        return None
    for member in family_A(7):
        if member.n == g.n and find_isomorphism(g, member) is not None:
            return member
    return None


def is_corona(g: Graph) -> bool:
    """Whether connected ``g`` is ``H∘K1`` for some connected H.

    Half the vertices are leaves, and the leaves are perfectly matched onto
    the non-leaves.  ``K2`` (= ``K1∘K1``) counts.
    """
    if g.n == 2 and g.m == 1:
        return True
    if g.n < 2 or g.n % 2:
        return False
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    if 2 * len(leaves) != g.n:
        return False
    anchors = {next(iter(g.adj[v])) for v in leaves}
    return len(anchors) == len(leaves) and not anchors & set(leaves)


def is_cycle4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and all(g.degree(v) == 2 for v in range(4))


def component_graphs(g: Graph) -> list[tuple[Graph, list[int]]]:
    return [g.induced_subgraph(c) for c in components(g)]
