"""Slow, obviously-correct reference implementations used to check the fast code.

None of these import the package's algorithms; they work from plain edge sets.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product


def edge_set(g) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def brute_three_arc_edges(n: int, edges) -> tuple[list, set]:
    """Arcs sorted by (tail, head), and X-edges as index pairs, straight from the definition."""
    E = {frozenset(e) for e in edges}
    arcs = sorted([(u, v) for u, v in product(range(n), repeat=2) if frozenset((u, v)) in E])
    adj = lambda a, b: frozenset((a, b)) in E
    out = set()
    for i, (u, v) in enumerate(arcs):
        for j, (x, y) in enumerate(arcs):
            # (v, u, x, y) is a 3-arc
            if i < j and adj(v, u) and adj(u, x) and adj(x, y) and v != x and u != y:
                out.add((i, j))
    return arcs, out


def brute_gamma(n: int, edges, target=None) -> int:
    """Smallest D with target ⊆ N[D], by trying subsets in increasing size."""
    closed = [{v} for v in range(n)]
    for u, v in edges:
        closed[u].add(v)
        closed[v].add(u)
    target = set(range(n) if target is None else target)
    if not target:
        return 0
    for k in range(1, n + 1):
        for D in combinations(range(n), k):
            cov = set().union(*(closed[v] for v in D))
            if target <= cov:
                return k
    raise AssertionError("unreachable")


def brute_gamma_sets(n: int, edges) -> list[tuple[int, ...]]:
    closed = [{v} for v in range(n)]
    for u, v in edges:
        closed[u].add(v)
        closed[v].add(u)
    k = brute_gamma(n, edges)
    return [D for D in combinations(range(n), k) if set().union(*(closed[v] for v in D)) == set(range(n))]


def perm_isomorphic(g, h) -> bool:
    """Try every bijection."""
    if g.n != h.n or g.m != h.m:
        return False
    eg, eh = edge_set(g), edge_set(h)
    for p in permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in eh for u, v in (tuple(e) for e in eg)):
            return True
    return False


def random_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    return [e for e in combinations(range(n), 2) if rng.random() < p]


def milp_gamma(n: int, edges, target=None) -> int:
    """γ(G:U) as a 0/1 program solved by HiGHS: min Σx subject to Σ_{w∈N[u]} x_w ≥ 1 for u ∈ U."""
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    target = list(range(n)) if target is None else sorted(target)
    if not target:
        return 0
    A = np.zeros((len(target), n))
    row = {u: k for k, u in enumerate(target)}
    for u in target:
        A[row[u], u] = 1
    for u, v in edges:
        if u in row:
            A[row[u], v] = 1
        if v in row:
            A[row[v], u] = 1
    res = milp(
        c=np.ones(n),
        constraints=LinearConstraint(A, lb=np.ones(len(target)), ub=np.inf),
        integrality=np.ones(n),
        bounds=Bounds(0, 1),
    )
    if not res.success:
        raise AssertionError(f"MILP failed: {res.message}")
    return int(round(res.fun))
