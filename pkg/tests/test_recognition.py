import json
import logging
import random

import pytest

from threearc.arcs import build_X
from threearc.errors import PreconditionError, ResourceLimitError, ValidationError
from threearc.generators import complete, cone, cycle, disjoint_copies, path, petersen, star
from threearc.graph import Graph
from threearc.iso import check_isomorphism, connected_graphs_up_to, graphs_with_edges, is_isomorphic
from threearc.recognition import (
    CharacterizationCertificate,
    construct_H,
    derive_certificate,
    embed_in_cone_check,
    recognize_small,
    verify_certificate,
    x_edge_count,
)

from oracles import random_edges

K2 = complete(2)


def _cert_x(h):
    X = build_X(h)
    return X, derive_certificate(h, X)


# -- cone embedding ------------------------------------------------------------


@pytest.mark.parametrize("h", [path(3), Graph.empty(5), petersen(), K2, Graph.empty(0)])
def test_cone_embedding_examples(h):
    ok, mapping = embed_in_cone_check(h)
    assert ok
    X = build_X(cone(h))
    # independent check of the map: v goes to the arc v -> apex
    for v, i in mapping.items():
        assert X.labels[i] == (v, h.n)


def test_cone_embedding_fuzz():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 8)
        assert embed_in_cone_check(Graph.from_edges(n, random_edges(n, rng.random(), rng)))[0]


# -- derive / verify --------------------------------------------------------------


def test_derive_examples():
    X, c = _cert_x(cycle(3))
    assert c.v1 == () and len(c.v2) == 3 and all(len(b) == 2 for b in c.v2)
    assert len(c.e) == 3 and all(len(blk) == 1 for blk in c.e)
    assert verify_certificate(X.graph, c)

    X, c = _cert_x(star(3))
    assert len(c.v1) == 3 and [len(b) for b in c.v2] == [3] and c.e == ()
    assert verify_certificate(X.graph, c)

    X, c = _cert_x(path(4))
    assert len(c.v1) == 2 and [len(b) for b in c.v2] == [2, 2] and len(c.e) == 1
    assert 2 * len(c.e) == 4 - 2
    assert verify_certificate(X.graph, c)

    with pytest.raises(PreconditionError):
        derive_certificate(Graph.empty(3))


def test_verify_rejects_c4_singletons_at_e():
    cert = CharacterizationCertificate.make([[v] for v in range(4)], [], [])
    v = verify_certificate(cycle(4), cert)
    assert not v and v.clause == "e"


def test_verify_rejects_moved_pair_at_a():
    X, c = _cert_x(path(4))
    moved = CharacterizationCertificate(c.v1 + (c.v2[0],), c.v2[1:], c.e)
    v = verify_certificate(X.graph, moved)
    assert not v and v.clause == "a"


def test_verify_other_clauses():
    X, c = _cert_x(complete(4))
    # drop an edge block: edge coverage or (e) must fail
    v = verify_certificate(X.graph, CharacterizationCertificate(c.v1, c.v2, c.e[1:]))
    assert not v and v.clause == "e"
    # a block mixing two different bipartite graphs fails (b)
    merged = CharacterizationCertificate(c.v1, c.v2, (c.e[0] + c.e[1],) + c.e[2:])
    assert verify_certificate(X.graph, merged).clause == "b"
    # a v2 block holding an edge fails (a)
    a, b = X.graph.edges()[0]
    bad = CharacterizationCertificate.make([], [[a, b]] + [[v] for v in range(X.n) if v not in (a, b)], [])
    assert verify_certificate(X.graph, bad).clause == "a"


def test_verify_rejects_malformed():
    X, c = _cert_x(cycle(3))
    with pytest.raises(ValidationError):
        verify_certificate(X.graph, CharacterizationCertificate.make([[99]], c.v2, c.e))
    with pytest.raises(ValidationError):
        verify_certificate(X.graph, CharacterizationCertificate(c.v1, c.v2, c.e + (c.e[0],)))
    with pytest.raises(ValidationError):
        verify_certificate(X.graph, CharacterizationCertificate.make([], c.v2, [[(0, 1)]]))


def test_certificate_json():
    _, c = _cert_x(path(4))
    data = json.loads(c.to_json())
    assert set(data) == {"v1", "v2", "e"}
    assert all(a < b for blk in data["e"] for a, b in blk)
    assert CharacterizationCertificate.from_dict(data) == c
    with pytest.raises(ValidationError):
        CharacterizationCertificate.from_dict({"v1": []})


def test_condition_e_on_derived_certificates():
    for h in connected_graphs_up_to(6, min_order=3):
        _, c = _cert_x(h)
        assert 2 * len(c.e) == sum(len(b) for b in c.v2) - len(c.v1)


def test_K2_has_no_certificate():
    # X(K2) is two isolated vertices; neither partition of 2 vertices meets (e)
    X, c = _cert_x(K2)
    assert verify_certificate(X.graph, c).clause == "e"
    pair = CharacterizationCertificate.make([], [[0, 1]], [])
    assert verify_certificate(X.graph, pair).clause == "e"


# -- construct_H -------------------------------------------------------------------


@pytest.mark.parametrize("h", [cycle(3), path(4), complete(4), star(3), petersen()])
def test_construct_H_round_trip(h):
    X, c = _cert_x(h)
    rec = construct_H(X.graph, c)
    assert check_isomorphism(rec.X.graph, X.graph, rec.iso)
    assert is_isomorphic(rec.X.graph, X.graph)[0]
    for x, blk in enumerate(c.v2, start=len(c.v1)):
        assert rec.H.degree(x) == len(blk)


def test_construct_H_recovers_small_graphs():
    for h in (cycle(3), path(4)):
        X, c = _cert_x(h)
        assert is_isomorphic(construct_H(X.graph, c).H, h)[0]


def test_construct_H_rejects_invalid():
    cert = CharacterizationCertificate.make([[v] for v in range(4)], [], [])
    with pytest.raises(ValidationError):
        construct_H(cycle(4), cert)


def test_round_trip_small_edge_counts():
    for m in range(2, 6):
        for h in graphs_with_edges(m):
            if any(len(c) == 2 for c in _k2_parts(h)):
                continue
            X, c = _cert_x(h)
            assert verify_certificate(X.graph, c)
            rec = construct_H(X.graph, c)
            assert is_isomorphic(build_X(rec.H).graph, X.graph)[0]


def _k2_parts(h):
    from threearc.graph import components

    return [c for c in components(h) if len(c) == 2]


# -- recognition ---------------------------------------------------------------------


def test_recognize_examples():
    r = recognize_small(disjoint_copies(K2, 3))
    assert is_isomorphic(r.H, cycle(3))[0]
    assert verify_certificate(disjoint_copies(K2, 3), r.certificate)
    with pytest.raises(ValidationError):
        recognize_small(cycle(3))
    r = recognize_small(Graph.empty(6))
    assert r.H.m == 3 and build_X(r.H).m == 0


def test_recognize_absent():
    # P4 has 4 vertices; no 2-edge graph has a connected X
    assert recognize_small(path(4)) is None
    assert recognize_small(cycle(4)) is None


def test_recognize_limits():
    with pytest.raises(ResourceLimitError):
        recognize_small(Graph.empty(14))
    with pytest.raises(ResourceLimitError):
        recognize_small(build_X(cycle(6)).graph.add_edges([(0, 2)]), budget=3)


def test_recognize_is_sound_and_complete_on_images():
    for m in range(1, 7):
        for h in graphs_with_edges(m):
            X = build_X(h)
            shuffled = X.graph.relabel(list(reversed(range(X.n))))
            r = recognize_small(shuffled)
            assert r is not None
            assert check_isomorphism(build_X(r.H).graph, shuffled, r.iso)
            if r.certificate is not None:
                assert verify_certificate(shuffled, r.certificate)
            assert x_edge_count(r.H) == X.m


def test_recognize_logs_multiple_preimages(caplog):
    with caplog.at_level(logging.INFO, logger="threearc.recognition"):
        r = recognize_small(Graph.empty(6))
    assert r.preimages >= 2  # K_{1,3} and P_4 plus K_2, among others
    assert "preimages" in caplog.text
