"""Explicit dominating sets of X(G) built from a minimum dominating set of G.

Every construction returns its artefacts (the S/W/U partition, the arc sets
it combined, and a log of which repair rule fired) together with the final
arc set, and re-verifies that set against the 3-arc graph before returning.
Whenever the underlying argument says "choose a neighbour", the lowest
vertex id is taken.

Arcs are ``(tail, head)`` pairs.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import floor

from .arcs import LabeledGraph, build_X
from .domination import (
    DominationCertificate,
    all_gamma_sets,
    gamma_exact,
    is_dominating,
    vi_set,
)
from .errors import PreconditionError, ValidationError, VerificationError
from .families import family_A_member, is_corona, is_cycle4
from .graph import Edge, Graph, components, find_claw

log = logging.getLogger(__name__)

GAMMA_SET_CAP = 10_000


# -- shared data ---------------------------------------------------------


@dataclass(frozen=True)
class SWUPartition:
    S: tuple[int, ...]
    W: tuple[int, ...]
    U: tuple[int, ...]


@dataclass
class ArcDominationPlan:
    source: Graph
    partition: SWUPartition
    A: dict[int, tuple[Edge, ...]]  # per-vertex arc sets A(x) after any repair
    AS: frozenset[Edge]  # before repair
    AD: frozenset[Edge]  # before repair
    D: tuple[int, ...]
    repairs: list[tuple] = field(default_factory=list)
    notes: list[tuple] = field(default_factory=list)
    result: tuple[Edge, ...] = ()
    bound: Fraction | None = None
    verified: bool = False

    @property
    def size(self) -> int:
        return len(self.result)

    @property
    def repair_case(self) -> str:
        return self.repairs[-1][0] if self.repairs else "none"

    def to_dict(self) -> dict:
        def arcs(a):
            return [list(x) for x in sorted(a)]

        return {
            "gammaSet": list(self.partition.S),
            "W": list(self.partition.W),
            "U": list(self.partition.U),
            "AS": arcs(self.AS),
            "AD": arcs(self.AD),
            "repairCase": self.repair_case,
            "resultArcs": arcs(self.result),
            "size": self.size,
            "bound": None if self.bound is None else str(self.bound),
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def arcs_dominate(g: Graph, arcs, X: LabeledGraph | None = None) -> tuple[bool, Edge | None]:
    """Whether ``arcs`` dominate X(g); otherwise also an undominated arc."""
    X = X or build_X(g)
    try:
        ids = [X.vertex(a) for a in arcs]
    except KeyError as exc:
        raise ValidationError(f"{exc.args[0]} is not an arc of the graph") from None
    ok, witness = is_dominating(X.graph, ids)
    return ok, None if ok else X.labels[witness]


def _require_min_degree(g: Graph, floor_: int) -> None:
    if g.n == 0 or g.min_degree < floor_:
        bad = min(range(g.n), key=g.degree) if g.n else None
        raise PreconditionError(f"minimum degree must be >= {floor_}; vertex {bad} has degree "
                                f"{g.degree(bad) if bad is not None else 0}", witness=bad)


def _lowest(candidates) -> int | None:
    return min(candidates, default=None)


# -- Theorem-3 machinery -------------------------------------------------


def partition_swu(g: Graph, S) -> SWUPartition:
    """Split V(G) into S, W (one S-neighbour) and U (two or more)."""
    S = tuple(sorted(set(S)))
    ok, witness = is_dominating(g, S)
    if not ok:
        raise ValidationError(f"S does not dominate vertex {witness}")
    sset = set(S)
    W, U = [], []
    for v in range(g.n):
        if v in sset:
            continue
        (W if len(g.adj[v] & sset) == 1 else U).append(v)
    return SWUPartition(S, tuple(W), tuple(U))


def choose_A(g: Graph, x: int, used: frozenset[Edge] = frozenset()) -> tuple[Edge, Edge, Edge]:
    """``A(x) = {x x1, x x2, x2 x3}`` with x1 < x2 neighbours of x and x3 a neighbour
    of x2 other than x.

    The lexicographically lowest ``(x1, x2, x3)`` whose arcs avoid ``used`` is
    taken, preferring ``x3 != x1``; if every choice meets ``used`` the overlap
    is accepted and the lowest choice returned.
    """
    nb = sorted(g.adj[x])
    if len(nb) < 2:
        raise PreconditionError(f"vertex {x} has degree {len(nb)} < 2", witness=x)
    fallback = None
    for x1, x2 in combinations(nb, 2):
        for x3 in sorted(g.adj[x2] - {x, x1}) + ([x1] if x1 in g.adj[x2] else []):
            arcs = ((x, x1), (x, x2), (x2, x3))
            if fallback is None:
                fallback = arcs
            if not used.intersection(arcs):
                return arcs
    return fallback


def build_AS(g: Graph, S) -> tuple[frozenset[Edge], dict[int, tuple[Edge, ...]]]:
    """Union of ``A(x)`` over ``x ∈ S`` (chosen in increasing x, pairwise disjoint
    where possible) and the per-vertex breakdown."""
    _require_min_degree(g, 2)
    per: dict[int, tuple[Edge, ...]] = {}
    used: frozenset[Edge] = frozenset()
    for x in sorted(set(S)):
        per[x] = choose_A(g, x, used)
        used = used.union(per[x])
    return used, per


def _restricted_min(g: Graph, keep: list[int], target: list[int]) -> list[int]:
    """Minimum ``(G[keep] : target)``-dominating set, in ids of ``g``."""
    sub, back = g.induced_subgraph(keep)
    index = {v: i for i, v in enumerate(back)}
    cert = gamma_exact(sub, [index[t] for t in target])
    return sorted(back[i] for i in cert.vertices)


def build_AD(g: Graph, part: SWUPartition) -> tuple[frozenset[Edge], tuple[int, ...], dict[int, Edge]]:
    """``A(D) = {y y'}`` for a minimum ``(G-S : W)``-dominating set D, y' the lowest S-neighbour of y."""
    sset = set(part.S)
    rest = [v for v in range(g.n) if v not in sset]
    D = _restricted_min(g, rest, list(part.W))
    per = {}
    for y in D:
        y2 = _lowest(g.adj[y] & sset)
        if y2 is None:
            raise VerificationError(f"vertex {y} of D has no neighbour in S", witness=y)
        per[y] = (y, y2)
    return frozenset(per.values()), tuple(D), per


def _repair_candidates(g: Graph, part: SWUPartition, A: dict, AD: dict):
    """Repair steps for the case where A(S) and A(D) are disjoint.

    Yields ``(A', AD', log entry)`` for the one case that applies to S, every
    admissible choice of the vertices involved, lowest ids first (so the first
    candidate is the canonical step).
    """
    S, W, U = part.S, part.W, part.U
    sset = set(S)

    def nbrs(v, *exclude):
        return sorted(g.adj[v] - set(exclude))

    if len(S) == 1:
        (x,) = S
        for y in sorted(AD):
            for z in nbrs(y, x):
                A2, AD2 = dict(A), dict(AD)
                A2[x] = ((x, z), (z, y), (y, x))
                AD2[y] = (y, x)
                yield A2, AD2, ("size1", {"x": x, "y": y, "z": z})
        return

    s_edges = [(x, y) for x, y in combinations(S, 2) if y in g.adj[x]]
    if s_edges:
        for x, y in s_edges:
            for xp, yp in product(nbrs(x, y), nbrs(y, x)):
                A2 = dict(A)
                A2[x] = ((x, xp), (x, y), (y, yp))
                A2[y] = ((y, yp), (y, x), (x, xp))
                yield A2, dict(AD), ("case1", {"x": x, "y": y, "x'": xp, "y'": yp})
        return

    if U:
        for z in U:
            for x, y in combinations(sorted(g.adj[z] & sset), 2):
                if g.degree(z) == 2:
                    A2 = dict(A)
                    A2[x] = ((x, z), (z, y))
                    A2[y] = ((y, z), (z, x))
                    yield A2, dict(AD), ("case2-deg2", {"z": z, "x": x, "y": y})
                    continue
                for zp, xp, yp in product(nbrs(z, x, y), nbrs(x, z), nbrs(y, z)):
                    A2 = dict(A)
                    A2[x] = ((x, xp), (x, z), (z, zp))
                    A2[y] = ((y, yp), (y, z), (z, zp))
                    yield A2, dict(AD), (
                        "case2-deg3", {"z": z, "x": x, "y": y, "z'": zp, "x'": xp, "y'": yp})
        return

    for z in (w for w in W if w not in AD):
        for x in sorted(g.adj[z] & sset):
            for v in sorted(g.adj[z] & set(AD)):
                for u in sorted(g.adj[v] & sset):
                    A2, AD2 = dict(A), dict(AD)
                    A2[x] = ((x, z), (z, v), (v, u))
                    AD2[v] = (v, u)
                    yield A2, AD2, ("case3", {"z": z, "x": x, "v": v, "u": u})


REPAIR_CANDIDATE_LIMIT = 5000


def _repair(g: Graph, part: SWUPartition, A: dict, AD: dict, X: LabeledGraph):
    """Shrink a dominating A(S) ∪ A(D) by at least one arc.

    Tries the repair steps in order and keeps the first that still dominates
    and is strictly smaller.  When the A(x) overlap, the rewiring can leave the
    union unchanged; then a redundant arc is dropped instead (lowest first).
    Returns ``(A', AD', log entry, arcs)`` or None.
    """
    before = _union(A, AD)
    for k, (A2, AD2, entry) in enumerate(_repair_candidates(g, part, A, AD)):
        if k >= REPAIR_CANDIDATE_LIMIT:
            break
        arcs = _union(A2, AD2)
        if len(arcs) < len(before) and arcs_dominate(g, arcs, X)[0]:
            entry[1]["choice"] = k
            return A2, AD2, entry, arcs
    for arc in sorted(before):
        arcs = before - {arc}
        if arcs_dominate(g, arcs, X)[0]:
            return A, AD, ("prune", {"arc": arc}), arcs
    return None


def _union(A: dict, AD: dict) -> frozenset[Edge]:
    return frozenset(a for arcs in A.values() for a in arcs) | frozenset(AD.values())


def theorem3_plan(g: Graph, S, X: LabeledGraph | None = None) -> ArcDominationPlan:
    """The A(S) ∪ A(D) construction for one given minimum dominating set S, with
    one repair step applied when A(S) and A(D) share no arc."""
    _require_min_degree(g, 2)
    X = X or build_X(g)
    part = partition_swu(g, S)
    AS, A = build_AS(g, part.S)
    AD, D, ADmap = build_AD(g, part)
    plan = ArcDominationPlan(g, part, A, AS, AD, D)
    before = AS | AD
    ok, witness = arcs_dominate(g, before, X)
    if not ok:
        raise VerificationError(f"A(S) ∪ A(D) misses arc {witness}", witness=witness, plan=plan)
    if AS & AD:
        plan.result = tuple(sorted(before))
    else:
        repaired = _repair(g, part, A, ADmap, X)
        if repaired is None:
            raise VerificationError("no repair step shrinks A(S) ∪ A(D)", plan=plan)
        plan.A, _, entry, arcs = repaired
        plan.repairs.append(entry)
        plan.result = tuple(sorted(arcs))
    ok, witness = arcs_dominate(g, plan.result, X)
    if not ok:
        raise VerificationError(
            f"repaired set ({plan.repair_case}) misses arc {witness}", witness=witness, plan=plan
        )
    plan.verified = True
    return plan


def _gamma_sets(g: Graph, cap: int) -> tuple[list[tuple[int, ...]], int, bool]:
    sets = all_gamma_sets(g, cap)
    return sets.sets, sets.gamma, sets.truncated


def restricted_residual(g: Graph, S) -> int:
    """``γ(G-S : V_{δ-1}(G-S))``."""
    sset = set(S)
    rest = [v for v in range(g.n) if v not in sset]
    h, back = g.induced_subgraph(rest)
    return gamma_exact(h, vi_set(h, g.min_degree - 1)).size


@dataclass(frozen=True)
class Theorem3Bound:
    value: int
    S: tuple[int, ...]
    gamma: int
    truncated: bool


def theorem3_bound(g: Graph, cap: int = GAMMA_SET_CAP) -> Theorem3Bound:
    """``3γ(G) + min_S γ(G-S : V_{δ-1}(G-S)) - 1`` over (up to ``cap``) minimum dominating sets S."""
    _require_min_degree(g, 2)
    sets, gam, truncated = _gamma_sets(g, cap)
    best_val, best_S = None, None
    for S in sets:
        val = restricted_residual(g, S)
        if best_val is None or val < best_val:
            best_val, best_S = val, S
    return Theorem3Bound(3 * gam + best_val - 1, best_S, gam, truncated)


def theorem3_construct(g: Graph, cap: int = GAMMA_SET_CAP) -> ArcDominationPlan:
    """Dominating set of X(G) of size at most ``3γ + min_S γ(G-S : V_{δ-1}(G-S)) - 1``."""
    bound = theorem3_bound(g, cap)
    plan = theorem3_plan(g, bound.S)
    plan.bound = Fraction(bound.value)
    if plan.size > bound.value:
        raise VerificationError(f"construction size {plan.size} exceeds bound {bound.value}", plan=plan)
    return plan


# -- restricted domination on V_i -------------------------------------------------------------


@dataclass
class AuxiliaryJ:
    """Auxiliary graph J.  ``origin[i]`` is the vertex of G that J-vertex ``i`` stands
    for, or None for an added gadget vertex.  ``added`` holds the new edges in J ids."""

    graph: Graph
    origin: list[int | None]
    added: list[Edge]
    kind: str
    W: tuple[int, ...] = ()


@dataclass
class LemmaResult:
    certificate: DominationCertificate
    tight: bool | None = None
    aux: AuxiliaryJ | None = None
    component_sizes: list[tuple[int, int]] = field(default_factory=list)  # (|D_j|, r_j)


def lemma2a_construct(g: Graph) -> LemmaResult:
    """``(G : V_1(G))``-dominating set of size at most n/2 (exact on G minus isolated vertices).

    ``tight`` is true iff every component of G is C4 or a corona.
    """
    target = list(vi_set(g, 1))
    D = _restricted_min(g, target, target) if target else []
    cert = DominationCertificate(tuple(D), tuple(target), optimal=True)
    if 2 * cert.size > g.n:
        raise VerificationError(f"{cert.size} > n/2 for n={g.n}")
    tight = g.n > 0 and len(target) == g.n and all(
        is_cycle4(c) or is_corona(c) for c, _ in (g.induced_subgraph(comp) for comp in components(g))
    )
    return LemmaResult(cert, tight=tight)


def _components_in_A(g: Graph) -> list[list[int]]:
    out = []
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp)
        if family_A_member(sub) is not None:
            out.append(comp)
    return out


def lemma2b_construct(g: Graph) -> LemmaResult:
    """``(G : V_2(G))``-dominating set of size at most 2n/5, for G with no component in family 𝒜."""
    bad = _components_in_A(g)
    if bad:
        raise PreconditionError(f"component {bad[0]} is isomorphic to a member of family 𝒜", witness=bad[0])
    V2 = set(vi_set(g, 2))
    W = sorted({w for v in V2 for w in g.adj[v]} - V2)
    keep = sorted(V2 | set(W))
    g2, origin = g.induced_subgraph(keep)
    index = {v: i for i, v in enumerate(origin)}
    added: list[Edge] = []
    l = len(W)
    anchor = {w: next(iter(g.adj[w])) for w in W}  # unique neighbour, inside V2
    if l >= 2:
        added = [(index[W[i]], index[W[i + 1]]) for i in range(l - 1)]
    elif l == 1:
        x1 = W[0]
        z = _lowest(set(g2.adj[index[anchor[x1]]]) - {index[x1]})
        added = [(index[x1], z)]
    J = g2.add_edges(added)
    aux = AuxiliaryJ(J, list(origin), added, "lemma2b", tuple(W))
    if J.n and J.min_degree < 2:
        raise VerificationError(f"auxiliary graph has minimum degree {J.min_degree}")

    chosen: list[int] = []
    sizes = []
    for comp in components(J):
        target = [v for v in comp if origin[v] in V2]
        D_j = _restricted_min(J, comp, target) if target else []
        if 5 * len(D_j) > 2 * len(comp):
            raise VerificationError(f"component {comp}: |D_j|={len(D_j)} > 2r_j/5")
        sizes.append((len(D_j), len(comp)))
        chosen.extend(D_j)
    D = {origin[v] for v in chosen}
    if l == 1 and W[0] in D:
        # the added edge is not in G: hand the job to the anchor
        D = (D - {W[0]}) | {anchor[W[0]]}
    cert = DominationCertificate(tuple(sorted(D)), tuple(sorted(V2)))
    if not cert.verify(g):
        raise VerificationError("lemma2b certificate does not dominate V_2(G)")
    if 5 * cert.size > 2 * g.n:
        raise VerificationError(f"{cert.size} > 2n/5 for n={g.n}")
    return LemmaResult(cert, aux=aux, component_sizes=sizes)


def _cycle_order(g: Graph, W: list[int]) -> list[int]:
    """W ordered so that the edges of G[W] (a matching) are consecutive."""
    wset = set(W)
    order, seen = [], set()
    for w in W:
        if w in seen:
            continue
        seen.add(w)
        order.append(w)
        mate = _lowest(g.adj[w] & wset - seen)
        if mate is not None:
            seen.add(mate)
            order.append(mate)
    return order


def lemma2c_construct(g: Graph) -> LemmaResult:
    """``(G : V_3(G))``-dominating set of size at most 3(n+2)/8; gadget vertices are never returned."""
    V3 = set(vi_set(g, 3))
    W = sorted({w for v in V3 for w in g.adj[v]} - V3)
    wset = set(W)
    if any(len(g.adj[w] & wset) > 1 for w in W):
        raise VerificationError("G[W] has a vertex of degree >= 2")
    keep = sorted(V3 | wset)
    g3, origin = g.induced_subgraph(keep)
    origin = list(origin)
    index = {v: i for i, v in enumerate(origin)}
    l = len(W)
    added: list[Edge] = []
    extra = 0
    gadgets: list[int] = []
    if l >= 3:
        order = [index[w] for w in _cycle_order(g, W)]
        for a, b in zip(order, order[1:] + order[:1]):
            if b not in g3.adj[a]:
                added.append((a, b))
    elif l in (1, 2):
        u1, u2 = g3.n, g3.n + 1
        gadgets = [u1, u2]
        extra = 2
        origin += [None, None]
        if l == 1:
            x1 = index[W[0]]
            x1p = index[_lowest(g.adj[W[0]] & V3)]
            added = [(u1, u2), (x1, u1), (x1, u2), (u1, x1p), (u2, x1p)]
        else:
            x1, x2 = index[W[0]], index[W[1]]
            added = [(a, b) for a, b in combinations([u1, u2, x1, x2], 2)
                     if not (a < g3.n and b < g3.n and b in g3.adj[a])]
    J = g3.add_edges(added, extra_vertices=extra)
    aux = AuxiliaryJ(J, origin, added, "lemma2c", tuple(W))
    if J.n and J.min_degree < 3:
        raise VerificationError(f"auxiliary graph has minimum degree {J.min_degree}")
    D = set(gamma_exact(J).vertices) if J.n else set()
    if 8 * len(D) > 3 * J.n:
        raise VerificationError(f"γ(J)={len(D)} > 3|V(J)|/8")
    if D & set(gadgets):
        if D & {index[w] for w in W[:2]} or len(D & set(gadgets)) != 1:
            raise VerificationError("minimum dominating set of J uses a gadget redundantly")
        D = (D - set(gadgets)) | {index[W[0]]}
    cert = DominationCertificate(tuple(sorted(origin[v] for v in D)), tuple(sorted(V3)))
    if not cert.verify(g):
        raise VerificationError("lemma2c certificate does not dominate V_3(G)")
    if 8 * cert.size > 3 * (g.n + 2):
        raise VerificationError(f"{cert.size} > 3(n+2)/8 for n={g.n}")
    return LemmaResult(cert, aux=aux)


# -- min-degree bounds -----------------------------------------------------------


def theorem4_bounds(g: Graph, gamma_value: int | None = None) -> dict[str, Fraction | None]:
    """Exact values of the δ = 2, 3, 4 bounds and ``(1+Δ)γ``; None where the hypothesis fails."""
    gam = gamma_exact(g).size if gamma_value is None else gamma_value
    d, D = g.min_degree, g.max_degree
    out: dict[str, Fraction | None] = {"delta2": None, "delta3": None, "delta4": None, "eqdel": None}
    if d == 2:
        out["delta2"] = (Fraction(D, 2) + 3) * gam - 1
    elif d == 3:
        out["delta3"] = (Fraction(2 * D, 5) + 3) * gam - 1
    elif d == 4:
        out["delta4"] = (Fraction(3 * (D + 2), 8) + 3) * gam - 1
    if d >= 2 and g.n >= 4 and len(components(g)) == 1:
        out["eqdel"] = Fraction((1 + D) * gam)
    return out


def _special_triples(g: Graph, comp: list[int], sset: set[int]):
    """Candidate (z, u, y, u', v) for a family-𝒜 component lying inside W."""
    cset = set(comp)
    for z in comp:
        for u in sorted(g.adj[z] & cset):
            up = _lowest(g.adj[u] & sset)
            for y in sorted(g.adj[u] - {up, z}):
                if y not in cset:
                    continue
                v = _lowest(g.adj[up] - {u})
                if v is not None:
                    yield z, u, y, up, v


def theorem4b_construct(g: Graph, cap: int = GAMMA_SET_CAP) -> ArcDominationPlan:
    """For δ(G) = 3: dominating set of X(G) of size at most ``(2Δ/5 + 3)γ - 1``.

    Components of ``G - S`` (minus isolated vertices) are handled one by one;
    a component isomorphic to a family-𝒜 member that lies entirely inside W
    needs a rewired ``A(u')``, which is searched for and accepted only when
    the whole arc set verifies.  Falls back to :func:`theorem3_construct`.
    """
    if g.n == 0 or g.min_degree != 3:
        raise PreconditionError(f"theorem4b needs δ = 3, got {g.min_degree if g.n else None}")
    X = build_X(g)
    sets, gam, _ = _gamma_sets(g, cap)
    bound = (Fraction(2 * g.max_degree, 5) + 3) * gam - 1
    limit = floor(bound)
    for S in sets:
        plan = _theorem4b_for(g, S, X, limit)
        if plan is not None:
            plan.bound = bound
            return plan
    plan = theorem3_construct(g, cap)
    plan.notes.append(("fallback-theorem3", {}))
    log.info("theorem4b fell back to the generic construction on %r", g)
    if plan.size > limit:
        raise VerificationError(f"no construction within {bound} found", plan=plan)
    plan.bound = bound
    return plan


def _theorem4b_for(g: Graph, S, X: LabeledGraph, limit: int) -> ArcDominationPlan | None:
    part = partition_swu(g, S)
    sset = set(part.S)
    wset = set(part.W)
    rest = [v for v in range(g.n) if v not in sset]
    h, back = g.induced_subgraph(rest)
    comps = [[back[i] for i in c] for c in components(h) if len(c) > 1]

    D: list[int] = []
    special: list[list[int]] = []
    notes = []
    for comp in comps:
        sub, _ = g.induced_subgraph(comp)
        if family_A_member(sub) is None:
            target = [v for v in comp if sub.degree(comp.index(v)) >= 2]
            D_j = _restricted_min(g, comp, target) if target else []
            notes.append(("component", {"vertices": comp, "D": D_j}))
        else:
            outside = [v for v in comp if v not in wset]
            z = outside[0] if outside else comp[0]
            D_j = _restricted_min(g, [v for v in comp if v != z], [v for v in comp if v != z])
            if not outside:
                special.append(comp)
            notes.append(("A-component", {"vertices": comp, "z": z, "D": D_j, "insideW": not outside}))
        D.extend(D_j)
    D = sorted(D)

    _, base_A = build_AS(g, part.S)
    ADmap = {y: (y, _lowest(g.adj[y] & sset)) for y in D}
    choices = [list(_special_triples(g, comp, sset)) for comp in special]

    for combo in product(*choices) if special else [()]:
        A = dict(base_A)
        log_entries = list(notes)
        clash = False
        for comp, (z, u, y, up, v) in zip(special, combo):
            new = ((up, v), (up, u), (u, y))
            if A.get(up) not in (base_A.get(up), new):
                clash = True
                break
            A[up] = new
            log_entries.append(("A-rewire", {"z": z, "u": u, "y": y, "u'": up, "v": v}))
        if clash:
            continue
        AS = frozenset(a for arcs in A.values() for a in arcs)
        AD = frozenset(ADmap.values())
        result = AS | AD
        if not arcs_dominate(g, result, X)[0]:
            continue
        plan = ArcDominationPlan(g, part, A, AS, AD, tuple(D), notes=log_entries)
        if len(result) > limit and not AS & AD:
            repaired = _repair(g, part, A, ADmap, X)
            if repaired is not None:
                plan.A, _, entry, result = repaired
                plan.repairs.append(entry)
        if len(result) > limit:
            continue
        plan.result = tuple(sorted(result))
        plan.verified = True
        return plan
    return None


# -- claw-free graphs -----------------------------------------------------------


def neighbourhood_dominator(g: Graph, x: int) -> tuple[int, int]:
    """Lowest pair ``(x1, x2)`` of neighbours of x dominating ``G[N(x)]`` (a single
    dominator is padded with the lowest other neighbour)."""
    nb = sorted(g.adj[x])
    nset = set(nb)
    for w in nb:
        if nset <= g.adj[w] | {w}:
            other = next(v for v in nb if v != w)
            return (w, other)
    for a, b in combinations(nb, 2):
        if nset <= g.adj[a] | g.adj[b] | {a, b}:
            return (a, b)
    raise PreconditionError(f"G[N({x})] has no dominating pair", witness=x)


def theorem5_clawfree_construct(g: Graph) -> ArcDominationPlan:
    """For claw-free G with δ ≥ 2: four arcs per vertex of a minimum dominating set."""
    claw = find_claw(g)
    if claw is not None:
        raise PreconditionError(f"graph has an induced claw {claw}", witness=claw)
    _require_min_degree(g, 2)
    S = gamma_exact(g).vertices
    part = partition_swu(g, S)
    A: dict[int, tuple[Edge, ...]] = {}
    for x in S:
        x1, x2 = neighbourhood_dominator(g, x)
        if g.degree(x) == 2:
            A[x] = ((x, x1), (x, x2), (x1, x), (x2, x))
        else:
            x3 = _lowest(g.adj[x] - {x1, x2})
            if x3 not in g.adj[x1]:
                x1, x2 = x2, x1
            A[x] = ((x, x1), (x1, x3), (x3, x), (x2, x))
    AS = frozenset(a for arcs in A.values() for a in arcs)
    plan = ArcDominationPlan(g, part, A, AS, frozenset(), (), bound=Fraction(4 * len(S)))
    plan.result = tuple(sorted(AS))
    ok, witness = arcs_dominate(g, plan.result)
    if not ok:
        raise VerificationError(f"claw-free construction misses arc {witness}", witness=witness, plan=plan)
    if plan.size > 4 * len(S):
        raise VerificationError(f"claw-free construction has {plan.size} > 4γ arcs", plan=plan)
    plan.verified = True
    return plan
