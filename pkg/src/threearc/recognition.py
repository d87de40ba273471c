"""Characterisation certificates for 3-arc graphs, preimage reconstruction and search.

A certificate for a graph G is a partition of V(G) into singleton blocks
(``v1``) and independent blocks of size at least two (``v2``), together with
a partition ``e`` of E(G).  :func:`verify_certificate` checks the five
conditions (a)–(e) below; :func:`construct_H` turns a valid certificate into
a graph H with X(H) ≅ G.

  (a) v1 blocks are singletons; v2 blocks are independent with >= 2 vertices
  (b) every edge block is exactly the complete bipartite graph between
      |V|-1 vertices of one v2 block V and |V'|-1 vertices of another V'
  (c) a vertex of a v2 block V lies in at most |V|-1 of those bipartite graphs
  (d) two bipartite graphs with a part inside the same V share exactly
      |V|-2 vertices, all of them in V
  (e) 2|e| = sum of |V| over v2 blocks - |v1|
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from itertools import combinations

from .arcs import LabeledGraph, build_X
from .errors import PreconditionError, ResourceLimitError, ValidationError, VerificationError
from .generators import cone
from .graph import Edge, Graph, components
from .iso import find_isomorphism, graphs_with_edges

log = logging.getLogger(__name__)

RECOGNITION_ORDER_LIMIT = 12


@dataclass(frozen=True)
class CharacterizationCertificate:
    v1: tuple[tuple[int, ...], ...]
    v2: tuple[tuple[int, ...], ...]
    e: tuple[tuple[Edge, ...], ...]

    @classmethod
    def make(cls, v1, v2, e) -> CharacterizationCertificate:
        return cls(
            tuple(tuple(sorted(b)) for b in v1),
            tuple(tuple(sorted(b)) for b in v2),
            tuple(tuple(sorted(tuple(sorted(ed)) for ed in blk)) for blk in e),
        )

    def to_dict(self) -> dict:
        return {
            "v1": [list(b) for b in self.v1],
            "v2": [list(b) for b in self.v2],
            "e": [[list(ed) for ed in blk] for blk in self.e],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> CharacterizationCertificate:
        try:
            return cls.make(data["v1"], data["v2"], data["e"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed certificate: {exc}") from None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    clause: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


# -- cone embedding -----------------------------------------


def embed_in_cone_check(h: Graph) -> tuple[bool, dict[int, int]]:
    """Check that the arcs ``v -> apex`` of the cone over H induce a copy of H in X(cone(H)).

    Returns the verdict and the map ``v -> vertex id of arc (v, apex)``.
    """
    c = cone(h)
    apex = h.n
    X = build_X(c)
    mapping = {v: X.vertex((v, apex)) for v in range(h.n)}
    ok = all(
        (mapping[v] in X.graph.adj[mapping[u]]) == (v in h.adj[u])
        for u, v in combinations(range(h.n), 2)
    )
    return ok, mapping


# -- certificates ----------------------------------------------------------


def derive_certificate(h: Graph, X: LabeledGraph | None = None) -> CharacterizationCertificate:
    """The certificate of X(H) read off H: out-arc sets ``A_H(v)`` as vertex blocks and,
    per edge between two vertices of degree >= 2, the X-edges between their out-arc sets.

    Vertex ids refer to ``build_X(h)``.
    """
    if h.m == 0:
        raise PreconditionError("H must have at least one edge")
    X = X or build_X(h)
    out_arcs = {v: [X.vertex((v, w)) for w in sorted(h.adj[v])] for v in range(h.n)}
    v1 = [out_arcs[v] for v in range(h.n) if h.degree(v) == 1]
    v2 = [out_arcs[v] for v in range(h.n) if h.degree(v) >= 2]
    blocks = []
    for u, v in h.edges():
        if h.degree(u) >= 2 and h.degree(v) >= 2:
            au, av = set(out_arcs[u]), set(out_arcs[v])
            blocks.append([(a, b) for a in au for b in X.graph.adj[a] if b in av])
    return CharacterizationCertificate.make(v1, v2, blocks)


def _block_sides(blk, owner, v2_index):
    """Split an edge block into its two sides by owning v2 block."""
    sides: dict[int, set[int]] = {}
    for a, b in blk:
        for x in (a, b):
            k = owner.get(x)
            if k is None or k not in v2_index:
                return None
            sides.setdefault(k, set()).add(x)
    return sides


def verify_certificate(g: Graph, cert: CharacterizationCertificate) -> Verdict:
    """Check conditions (a)–(e), then that the edge blocks cover E(G).

    Returns a falsy Verdict naming the first failing clause.  Overlapping
    blocks or references to non-vertices / non-edges raise ValidationError.
    """
    for blk in cert.v1 + cert.v2:
        for v in blk:
            if not 0 <= v < g.n:
                raise ValidationError(f"certificate vertex {v} outside 0..{g.n - 1}")
    seen_edges: set[Edge] = set()
    for blk in cert.e:
        for a, b in blk:
            if b not in g.adj[a]:
                raise ValidationError(f"certificate edge {(a, b)} is not an edge")
            if (a, b) in seen_edges:
                raise ValidationError(f"edge {(a, b)} appears in two blocks")
            seen_edges.add((a, b))

    # (a)
    owner: dict[int, int] = {}
    all_blocks = list(cert.v1) + list(cert.v2)
    for k, blk in enumerate(all_blocks):
        for v in blk:
            if v in owner:
                return Verdict(False, "a", f"vertex {v} in two blocks")
            owner[v] = k
    if len(owner) != g.n:
        missing = min(set(range(g.n)) - set(owner))
        return Verdict(False, "a", f"vertex {missing} in no block")
    for blk in cert.v1:
        if len(blk) != 1:
            return Verdict(False, "a", f"v1 block {list(blk)} is not a singleton")
    for blk in cert.v2:
        if len(blk) < 2:
            return Verdict(False, "a", f"v2 block {list(blk)} has fewer than two vertices")
        for a, b in combinations(blk, 2):
            if b in g.adj[a]:
                return Verdict(False, "a", f"v2 block {list(blk)} has edge {(a, b)}")

    # (b)
    first_v2 = len(cert.v1)
    v2_index = set(range(first_v2, len(all_blocks)))
    bip = []  # per edge block: {block index: part}
    for i, blk in enumerate(cert.e):
        if not blk:
            return Verdict(False, "b", f"edge block {i} is empty")
        sides = _block_sides(blk, owner, v2_index)
        if sides is None or len(sides) != 2:
            return Verdict(False, "b", f"edge block {i} does not join exactly two v2 blocks")
        (k1, p1), (k2, p2) = sorted(sides.items())
        if len(p1) != len(all_blocks[k1]) - 1 or len(p2) != len(all_blocks[k2]) - 1:
            return Verdict(False, "b", f"edge block {i} parts are not |V|-1 subsets")
        want = {tuple(sorted((a, b))) for a in p1 for b in p2}
        if {tuple(sorted(ed)) for ed in blk} != want:
            return Verdict(False, "b", f"edge block {i} is not complete bipartite on its parts")
        if any(b not in g.adj[a] for a, b in want):
            return Verdict(False, "b", f"edge block {i} parts are not fully joined in G")
        bip.append({k1: p1, k2: p2})

    # (c)
    for k in sorted(v2_index):
        size = len(all_blocks[k])
        for v in all_blocks[k]:
            count = sum(1 for parts in bip if v in parts.get(k, ()))
            if count > size - 1:
                return Verdict(False, "c", f"vertex {v} in {count} > {size - 1} bipartite blocks")

    # (d)
    for i, j in combinations(range(len(bip)), 2):
        for k in set(bip[i]) & set(bip[j]):
            common = (bip[i][k] | set().union(*bip[i].values())) & set().union(*bip[j].values())
            size = len(all_blocks[k])
            if len(common) != size - 2 or not common <= set(all_blocks[k]):
                return Verdict(False, "d", f"edge blocks {i}, {j} share {sorted(common)} in block {k}")

    # (e)
    lhs = 2 * len(cert.e)
    rhs = sum(len(b) for b in cert.v2) - len(cert.v1)
    if lhs != rhs:
        return Verdict(False, "e", f"2|e| = {lhs} != {rhs}")

    if len(seen_edges) != g.m:
        return Verdict(False, "edge-partition", f"{g.m - len(seen_edges)} edges in no block")
    return Verdict(True)


# -- reconstruction --------------------------------------------------------


@dataclass(frozen=True)
class Reconstruction:
    H: Graph
    iso: list[int]  # iso[i] = vertex of G matched with arc i of build_X(H)
    X: LabeledGraph


def construct_H(g: Graph, cert: CharacterizationCertificate) -> Reconstruction:
    """Build H with X(H) ≅ G from a valid certificate, with the explicit isomorphism.

    H has one vertex per block (v1 blocks first, then v2 blocks, in certificate
    order).  Free choices are made in increasing vertex order.
    """
    verdict = verify_certificate(g, cert)
    if not verdict:
        raise ValidationError(f"certificate fails condition ({verdict.clause}): {verdict.witness}")
    blocks = list(cert.v1) + list(cert.v2)
    first_v2 = len(cert.v1)
    owner = {v: k for k, blk in enumerate(blocks) for v in blk}

    edges: list[Edge] = []
    # arc (x, y) of H  ->  vertex of G
    arc_image: dict[Edge, int] = {}
    missing_of: dict[int, set[int]] = {k: set() for k in range(first_v2, len(blocks))}
    for blk in cert.e:
        sides: dict[int, set[int]] = {}
        for a, b in blk:
            sides.setdefault(owner[a], set()).add(a)
            sides.setdefault(owner[b], set()).add(b)
        (x, px), (y, py) = sorted(sides.items())
        vx = (set(blocks[x]) - px).pop()
        vy = (set(blocks[y]) - py).pop()
        edges.append((x, y))
        arc_image[(x, y)] = vx
        arc_image[(y, x)] = vy
        missing_of[x].add(vx)
        missing_of[y].add(vy)

    leaves = iter(range(first_v2))
    for x in range(first_v2, len(blocks)):
        free = sorted(set(blocks[x]) - missing_of[x])
        for w in free:
            leaf = next(leaves)
            edges.append((leaf, x))
            arc_image[(x, leaf)] = w
            arc_image[(leaf, x)] = blocks[leaf][0]
    H = Graph.from_edges(len(blocks), edges)
    X = build_X(H)
    iso = [arc_image[a] for a in X.labels]
    if sorted(iso) != list(range(g.n)) or any(
        (iso[j] in g.adj[iso[i]]) != (j in X.graph.adj[i]) for i, j in combinations(range(X.n), 2)
    ):
        raise VerificationError("reconstructed H does not satisfy X(H) ≅ G under the built map")
    return Reconstruction(H, iso, X)


# -- search ----------------------------------------------------------------


def x_edge_count(h: Graph) -> int:
    """|E(X(H))| = sum over edges uv of (deg u - 1)(deg v - 1)."""
    return sum((h.degree(u) - 1) * (h.degree(v) - 1) for u, v in h.edges())


def has_k2_component(h: Graph) -> bool:
    return any(len(c) == 2 for c in components(h) if h.degree(c[0]) == 1 and h.degree(c[1]) == 1)


@dataclass(frozen=True)
class Recognition:
    H: Graph
    certificate: CharacterizationCertificate | None
    iso: list[int]  # vertex of G for each arc of build_X(H)
    preimages: int  # number of non-isomorphic preimages found


def recognize_small(
    g: Graph, limit: int = RECOGNITION_ORDER_LIMIT, budget: int = 100_000
) -> Recognition | None:
    """Find H with X(H) ≅ G by searching all graphs with |V(G)|/2 edges.

    Returns None when the search completed without a match (no preimage
    exists).  ``budget`` bounds the number of candidate graphs examined;
    exhausting it raises ResourceLimitError instead.  ``certificate`` is None
    when H has a K2 component (X(K2) admits no certificate).
    """
    if g.n % 2:
        raise ValidationError(f"a 3-arc graph has even order; got {g.n}")
    if g.n > limit:
        raise ResourceLimitError(f"recognition limited to order {limit}, got {g.n}")
    if g.n == 0:
        return None
    m = g.n // 2
    target_deg = g.degree_sequence()
    found: list[tuple[Graph, list[int]]] = []
    for count, h in enumerate(graphs_with_edges(m), 1):
        if count > budget:
            raise ResourceLimitError(
                f"no preimage among the first {budget} candidates (search incomplete)",
                best=found[0] if found else None,
            )
        if x_edge_count(h) != g.m:
            continue
        X = build_X(h)
        if X.graph.degree_sequence() != target_deg:
            continue
        phi = find_isomorphism(X.graph, g)
        if phi is not None:
            found.append((h, phi))
    if not found:
        return None
    if len(found) > 1:
        log.info("%d non-isomorphic preimages found for %r", len(found), g)
    h, phi = found[0]
    cert = None
    if not has_k2_component(h):
        cert = derive_certificate(h)
        # renumber certificate vertices from X(H) ids to G ids
        cert = CharacterizationCertificate.make(
            [[phi[v] for v in b] for b in cert.v1],
            [[phi[v] for v in b] for b in cert.v2],
            [[(phi[a], phi[b]) for a, b in blk] for blk in cert.e],
        )
    return Recognition(h, cert, phi, len(found))
