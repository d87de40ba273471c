import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from threearc.errors import ResourceLimitError
from threearc.generators import complete, cycle, path, petersen
from threearc.graph import Graph, components, to_graph6
from threearc.iso import (
    IsoClassStore,
    check_isomorphism,
    connected_graphs,
    connected_graphs_up_to,
    find_isomorphism,
    graphs_of_order,
    graphs_with_edges,
    invariant_key,
    is_isomorphic,
)

from oracles import perm_isomorphic, random_edges


def _from_nx(G) -> Graph:
    nodes = sorted(G.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(idx[u], idx[v]) for u, v in G.edges()])


def _shuffle(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_examples():
    grid = Graph.from_edges(4, [(0, 1), (2, 3), (0, 2), (1, 3)])  # K2 x K2
    ok, phi = is_isomorphic(cycle(4), grid)
    assert ok and check_isomorphism(cycle(4), grid, phi)
    assert is_isomorphic(cycle(4), path(4)) == (False, None)


def test_limit_raises():
    with pytest.raises(ResourceLimitError):
        find_isomorphism(cycle(10), cycle(10), limit=8)


def test_matches_permutation_oracle():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 6)
        p = rng.random()
        g = Graph.from_edges(n, random_edges(n, p, rng))
        # half the time a relabelled copy, half the time an independent draw with equal m
        if rng.random() < 0.5:
            h = _shuffle(g, rng)
        else:
            h = Graph.from_edges(n, random_edges(n, p, rng))
        ok, phi = is_isomorphic(g, h)
        assert ok == perm_isomorphic(g, h)
        if ok:
            assert check_isomorphism(g, h, phi)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000))
def test_equivalence_properties(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 12)
    g = Graph.from_edges(n, random_edges(n, rng.random(), rng))
    h = _shuffle(g, rng)
    assert is_isomorphic(g, g)[0]
    ok, phi = is_isomorphic(g, h)
    assert ok and check_isomorphism(g, h, phi)
    back, psi = is_isomorphic(h, g)
    assert back and check_isomorphism(h, g, psi)
    assert invariant_key(g) == invariant_key(h)


def test_regular_graphs_of_equal_degree_are_separated():
    # refinement cannot split these; backtracking must
    prism = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not is_isomorphic(prism, k33)[0]
    c6 = cycle(6)
    two_c3 = cycle(3).disjoint_union(cycle(3))
    assert not is_isomorphic(c6, two_c3)[0]


def test_petersen_to_networkx_copy():
    h = _from_nx(nx.petersen_graph())
    ok, phi = is_isomorphic(petersen(), h)
    assert ok and check_isomorphism(petersen(), h, phi)


def test_check_isomorphism_rejects_bad_maps():
    assert not check_isomorphism(path(3), path(3), [1, 0, 2])
    assert not check_isomorphism(path(3), path(3), [0, 0, 1])


# -- enumeration -------------------------------------------------------------


GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044]  # unlabelled graphs on n vertices


@pytest.mark.parametrize("n", range(0, 8))
def test_counts_of_graphs(n):
    assert len(graphs_of_order(n)) == GRAPH_COUNTS[n]


def test_enumeration_agrees_with_networkx_atlas():
    atlas = nx.graph_atlas_g()  # every graph on at most 7 vertices
    by_order = Counter(G.number_of_nodes() for G in atlas)
    for n in range(8):
        assert len(graphs_of_order(n)) == by_order[n]
    # every atlas graph up to order 6 is found among ours
    for G in atlas:
        if 1 <= G.number_of_nodes() <= 6:
            g = _from_nx(G)
            assert any(find_isomorphism(g, r) is not None for r in graphs_of_order(g.n) if r.m == g.m)


def test_enumerated_graphs_pairwise_non_isomorphic():
    for n in range(1, 7):
        reps = graphs_of_order(n)
        store = IsoClassStore()
        assert all(store.add(g) for g in reps)
        for g in reps[:20]:
            assert not store.add(_shuffle(g, random.Random(n)))


def test_connected_counts():
    # connected graphs on n vertices: 1, 1, 2, 6, 21, 112, 853
    assert [len(connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    atlas_conn_delta2 = Counter(
        G.number_of_nodes()
        for G in nx.graph_atlas_g()[1:]
        if nx.is_connected(G) and min(dict(G.degree()).values()) >= 2
    )
    for n in range(3, 8):
        assert len(connected_graphs(n, min_degree=2)) == atlas_conn_delta2[n]


def test_connected_up_to_orders():
    gs = connected_graphs_up_to(5, min_degree=2, min_order=3)
    assert sorted({g.n for g in gs}) == [3, 4, 5]
    assert all(len(components(g)) == 1 and g.min_degree >= 2 for g in gs)


def test_graphs_with_edges_counts():
    # graphs with m edges and no isolated vertices: 1, 2, 5, 11, 26, 68
    assert [len(graphs_with_edges(m)) for m in range(1, 7)] == [1, 2, 5, 11, 26, 68]
    for m in range(1, 6):
        for g in graphs_with_edges(m):
            assert g.m == m and g.min_degree >= 1


def test_enumeration_is_deterministic():
    first = [to_graph6(g) for g in graphs_of_order(5)]
    assert first == [to_graph6(g) for g in graphs_of_order(5)]
    assert sum(g == complete(5) for g in graphs_of_order(5)) == 1
