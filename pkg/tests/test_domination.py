import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from threearc.arcs import build_X
from threearc.domination import (
    DominationCertificate,
    all_gamma_sets,
    gamma,
    gamma_exact,
    greedy_dominating,
    is_dominating,
    vi_set,
)
from threearc.errors import ResourceLimitError, ValidationError
from threearc.generators import (
    complete,
    corona,
    cycle,
    friendship,
    path,
    petersen,
)
from threearc.graph import Graph, components, is_connected
from threearc.iso import connected_graphs

from oracles import brute_gamma, brute_gamma_sets, random_edges


@st.composite
def small_graphs(draw, max_n=9):
    rng = random.Random(draw(st.integers(0, 10**6)))
    n = rng.randint(0, max_n)
    return Graph.from_edges(n, random_edges(n, rng.random(), rng))


def test_is_dominating_examples():
    assert is_dominating(cycle(4), [0, 2]) == (True, None)
    assert is_dominating(cycle(4), [0]) == (False, 2)
    p4 = path(4)
    assert vi_set(p4, 2) == (1, 2)
    assert is_dominating(p4, [1], vi_set(p4, 2))[0]
    with pytest.raises(ValidationError):
        is_dominating(p4, [7])


def test_vi_set_examples():
    g = petersen()
    assert vi_set(g, 0) == tuple(range(10))
    assert vi_set(corona(cycle(3)), 1) == tuple(range(6))
    assert vi_set(cycle(5), 3) == ()
    with pytest.raises(ValidationError):
        vi_set(g, -1)


def test_gamma_examples():
    assert gamma(cycle(4)) == 2
    assert gamma(complete(5)) == 1
    assert gamma(petersen()) == brute_gamma(10, petersen().edges()) == 3
    assert gamma(cycle(7)) == 3 and 5 * 3 > 2 * 7
    assert gamma(Graph.empty(0)) == 0
    assert gamma(cycle(5), []) == 0
    assert gamma(Graph.empty(4)) == 4


@settings(deadline=None)
@given(small_graphs())
def test_gamma_matches_brute_force(g):
    cert = gamma_exact(g)
    assert cert.optimal and cert.verify(g)
    assert cert.size == brute_gamma(g.n, g.edges())


@settings(deadline=None)
@given(small_graphs(), st.integers(0, 10**6))
def test_restricted_gamma_matches_brute_force(g, seed):
    rng = random.Random(seed)
    U = [v for v in range(g.n) if rng.random() < 0.5]
    cert = gamma_exact(g, U)
    assert cert.verify(g) and cert.target == tuple(sorted(U))
    assert cert.size == brute_gamma(g.n, g.edges(), U)


@settings(deadline=None)
@given(small_graphs(), st.integers(0, 10**6))
def test_restricted_gamma_is_monotone_in_target(g, seed):
    rng = random.Random(seed)
    U2 = [v for v in range(g.n) if rng.random() < 0.7]
    U1 = [v for v in U2 if rng.random() < 0.5]
    assert gamma(g, U1) <= gamma(g, U2)


def test_all_gamma_sets_examples():
    c4 = all_gamma_sets(cycle(4))
    assert c4.gamma == 2 and len(c4.sets) == 6 and not c4.truncated
    assert all_gamma_sets(complete(4)).sets == [(0,), (1,), (2,), (3,)]
    assert all_gamma_sets(friendship(2)).sets == [(0,)]


@settings(deadline=None)
@given(small_graphs(max_n=8))
def test_all_gamma_sets_match_brute_force(g):
    res = all_gamma_sets(g)
    assert res.sets == brute_gamma_sets(g.n, g.edges())
    assert all(len(s) == res.gamma and is_dominating(g, s)[0] for s in res.sets)


def test_all_gamma_sets_cap():
    res = all_gamma_sets(Graph.empty(0).disjoint_union(complete(5)), cap=3)
    assert res.truncated and len(res.sets) == 3


def test_greedy_examples():
    assert greedy_dominating(complete(5)).size == 1
    assert greedy_dominating(Graph.empty(4)).size == 4
    c = greedy_dominating(cycle(4))
    assert c.size <= 3 and c.verify(cycle(4)) and not c.optimal


@settings(deadline=None)
@given(small_graphs())
def test_greedy_is_valid_upper_bound(g):
    c = greedy_dominating(g)
    assert c.verify(g) and c.size >= gamma(g)


def test_budget_error_carries_best():
    g = build_X(complete(6)).graph
    with pytest.raises(ResourceLimitError) as info:
        gamma_exact(g, node_budget=1)
    best = info.value.best
    assert isinstance(best, DominationCertificate) and best.verify(g)


def test_certificate_json_round_trip():
    cert = gamma_exact(petersen())
    data = json.loads(cert.to_json())
    assert set(data) == {"vertices", "target", "size", "optimal"}
    assert DominationCertificate.from_dict(data) == cert
    data["size"] = 99
    with pytest.raises(ValidationError):
        DominationCertificate.from_dict(data)


def test_gamma_of_X_at_medium_scale():
    # X(K5): 20 vertices; three arcs of a triangle suffice
    X = build_X(complete(5))
    cert = gamma_exact(X.graph)
    assert cert.size == brute_gamma(X.n, X.graph.edges())


# -- classical bounds on exhaustive corpora ---------------------------------------


def test_half_order_bound_and_equality_family():
    for n in range(2, 8):
        for g in connected_graphs(n, min_degree=1):
            assert 2 * gamma(g) <= n
    assert 2 * gamma(cycle(4)) == 4
    for base in (cycle(3), cycle(5), path(2)):
        c = corona(base)
        assert 2 * gamma(c) == c.n


def test_two_fifths_bound_outside_exceptional_family():
    exceptions = 0
    for n in range(3, 9):
        for g in connected_graphs(n, min_degree=2):
            if 5 * gamma(g) > 2 * n:
                exceptions += 1
                assert n in (4, 7)
    assert exceptions == 7


def test_three_eighths_bound_for_min_degree_three():
    for n in range(4, 9):
        for g in connected_graphs(n, min_degree=3):
            assert 8 * gamma(g) <= 3 * n
