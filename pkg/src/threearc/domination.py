"""Domination and restricted ``(G:U)``-domination with re-verifiable certificates.

A set ``D`` is ``(G:U)``-dominating when ``U ⊆ N[D]``; ``D`` need not lie in
``U``.  Ordinary domination is the case ``U = V(G)``.

The exact solver is a bitset branch-and-bound.  At every node it branches on
the undominated target vertex with the fewest admissible dominators (lowest
id on ties), excluding earlier siblings from later branches so that every
set is reached along exactly one path.  A greedy solution seeds the upper
bound; the lower bound is the number of largest remaining coverages needed
to cover what is left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import ResourceLimitError, ValidationError
from .graph import Graph

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class DominationCertificate:
    vertices: tuple[int, ...]
    target: tuple[int, ...]
    optimal: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        return is_dominating(g, self.vertices, self.target)[0]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "target": list(self.target),
            "size": self.size,
            "optimal": self.optimal,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> DominationCertificate:
        cert = cls(tuple(data["vertices"]), tuple(data["target"]), bool(data.get("optimal", False)))
        if "size" in data and data["size"] != cert.size:
            raise ValidationError(f"certificate size field {data['size']} != |vertices| = {cert.size}")
        return cert


@dataclass(frozen=True)
class GammaSets:
    sets: list[tuple[int, ...]]
    gamma: int
    truncated: bool


def _mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_subset(g: Graph, vertices: Iterable[int], what: str) -> None:
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValidationError(f"{what} vertex {v} outside 0..{g.n - 1}")


def is_dominating(g: Graph, D: Iterable[int], U: Iterable[int] | None = None) -> tuple[bool, int | None]:
    """Whether ``U ⊆ N[D]``; on failure also the smallest undominated ``u``."""
    D = list(D)
    U = range(g.n) if U is None else list(U)
    _check_subset(g, D, "dominating-set")
    _check_subset(g, U, "target")
    covered = 0
    for v in D:
        covered |= g.closed_masks[v]
    for u in sorted(U):
        if not (covered >> u) & 1:
            return False, u
    return True, None


def vi_set(g: Graph, i: int) -> tuple[int, ...]:
    """Vertices of degree at least ``i``."""
    if i < 0:
        raise ValidationError(f"degree threshold must be >= 0, got {i}")
    return tuple(v for v in range(g.n) if g.degree(v) >= i)


def greedy_dominating(g: Graph, U: Iterable[int] | None = None) -> DominationCertificate:
    """Repeatedly take the vertex covering most undominated targets (lowest id on ties),
    then drop chosen vertices that became redundant."""
    target = tuple(sorted(set(range(g.n) if U is None else U)))
    _check_subset(g, target, "target")
    cm = g.closed_masks
    rem = _mask(target)
    chosen: list[int] = []
    while rem:
        best = max(range(g.n), key=lambda w: ((cm[w] & rem).bit_count(), -w))
        chosen.append(best)
        rem &= ~cm[best]
    tmask = _mask(target)
    for v in sorted(chosen, reverse=True):
        rest = [w for w in chosen if w != v]
        cov = 0
        for w in rest:
            cov |= cm[w]
        if tmask & ~cov == 0:
            chosen = rest
    return DominationCertificate(tuple(sorted(chosen)), target, optimal=False)


class _Search:
    """Branch-and-bound over closed-neighbourhood bitmasks."""

    def __init__(self, g: Graph, target_mask: int, budget: int):
        self.cm = g.closed_masks
        self.n = g.n
        self.target = target_mask
        self.budget = budget
        self.nodes = 0

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetHit

    def _lower_bound(self, rem: int, allowed: int) -> int:
        need = rem.bit_count()
        gains = sorted(((self.cm[w] & rem).bit_count() for w in _bits(allowed)), reverse=True)
        total = 0
        for k, gain in enumerate(gains, 1):
            if gain == 0:
                break
            total += gain
            if total >= need:
                return k
        return self.n + 1  # infeasible with what is allowed

    def _pick(self, rem: int, allowed: int) -> tuple[int, list[int]]:
        best_u, best_c = -1, None
        for u in _bits(rem):
            c = (self.cm[u] & allowed).bit_count()
            if best_c is None or c < best_c:
                best_u, best_c = u, c
                if c <= 1:
                    break
        cands = _bits(self.cm[best_u] & allowed)
        cands.sort(key=lambda w: (-(self.cm[w] & rem).bit_count(), w))
        return best_u, cands

    def minimize(self, upper: list[int]) -> list[int]:
        self.best = list(upper)
        self._min(self.target, [], (1 << self.n) - 1)
        return self.best

    def _min(self, rem: int, chosen: list[int], allowed: int) -> None:
        self._tick()
        if rem == 0:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
            return
        if len(chosen) + self._lower_bound(rem, allowed) >= len(self.best):
            return
        _, cands = self._pick(rem, allowed)
        for w in cands:
            chosen.append(w)
            self._min(rem & ~self.cm[w], chosen, allowed)
            chosen.pop()
            allowed &= ~(1 << w)

    def enumerate(self, size: int, cap: int) -> tuple[list[tuple[int, ...]], bool]:
        self.found: list[tuple[int, ...]] = []
        self.cap = cap
        try:
            self._enum(self.target, [], (1 << self.n) - 1, size)
        except _CapHit:
            return sorted(self.found), True
        return sorted(self.found), False

    def _enum(self, rem: int, chosen: list[int], allowed: int, size: int) -> None:
        self._tick()
        if rem == 0:
            if len(chosen) == size:
                if len(self.found) >= self.cap:
                    raise _CapHit
                self.found.append(tuple(sorted(chosen)))
            return
        if len(chosen) + self._lower_bound(rem, allowed) > size:
            return
        _, cands = self._pick(rem, allowed)
        for w in cands:
            chosen.append(w)
            self._enum(rem & ~self.cm[w], chosen, allowed, size)
            chosen.pop()
            allowed &= ~(1 << w)


class _BudgetHit(Exception):
    pass


class _CapHit(Exception):
    pass


def gamma_exact(
    g: Graph, U: Iterable[int] | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> DominationCertificate:
    """A minimum ``(G:U)``-dominating set (``U`` defaults to all of V(G)).

    Raises ResourceLimitError, carrying the best certificate found so far as
    ``best``, if the search visits more than ``node_budget`` nodes.
    """
    greedy = greedy_dominating(g, U)
    target = greedy.target
    search = _Search(g, _mask(target), node_budget)
    try:
        best = search.minimize(list(greedy.vertices))
    except _BudgetHit:
        raise ResourceLimitError(
            f"domination search exceeded {node_budget} nodes on a graph of order {g.n}",
            best=DominationCertificate(tuple(sorted(search.best)), target, optimal=False),
        ) from None
    return DominationCertificate(tuple(sorted(best)), target, optimal=True)


def gamma(g: Graph, U: Iterable[int] | None = None, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return gamma_exact(g, U, node_budget).size


def all_gamma_sets(
    g: Graph,
    cap: int = 10_000,
    U: Iterable[int] | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> GammaSets:
    """Every minimum ``(G:U)``-dominating set, sorted, at most ``cap`` of them."""
    cert = gamma_exact(g, U, node_budget)
    search = _Search(g, _mask(cert.target), node_budget)
    try:
        sets, truncated = search.enumerate(cert.size, cap)
    except _BudgetHit:
        raise ResourceLimitError(
            f"γ-set enumeration exceeded {node_budget} nodes", best=cert
        ) from None
    return GammaSets(sets, cert.size, truncated)
