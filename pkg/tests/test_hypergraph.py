import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlu.errors import EdgeTooSmall, EmptyHyperedge, SizeOutOfRange, VertexOutOfRange
from hyperlu.families import pair_and_triple, polygon_family, star_family
from hyperlu.hypergraph import (
    Hypergraph,
    complete_sizes,
    delete,
    essential_hypergraph,
    essential_vertices,
    make_complete,
    mask_from_vertices,
    maximal_cliques,
    parse_hypergraph,
    reduced_sets,
    sharing_adjacency,
    shrink,
    shrink_with_phase,
    uniformity,
    vertices_of,
)

from oracles import random_hypergraph


def test_vertex_one_is_most_significant():
    assert mask_from_vertices(4, [1]) == 0b1000
    assert mask_from_vertices(4, [2, 3, 4]) == 0b0111
    assert vertices_of(4, 0b1100) == (1, 2)


def test_canonical_order_and_equality():
    a = parse_hypergraph(4, [[2, 3, 4], [1, 2]])
    b = parse_hypergraph(4, [[2, 1], [4, 3, 2]])
    assert a == b
    assert a.edge_lists() == [(1, 2), (2, 3, 4)]


def test_repeated_edges_cancel():
    assert parse_hypergraph(3, [[1, 2], [2, 1], [3]]).edge_lists() == [(3,)]


@pytest.mark.parametrize("edges,exc", [
    ([[]], EmptyHyperedge),
    ([[0, 1]], VertexOutOfRange),
    ([[4]], VertexOutOfRange),
])
def test_bad_edges(edges, exc):
    with pytest.raises(exc):
        parse_hypergraph(3, edges)


def test_vertex_count_range():
    with pytest.raises(SizeOutOfRange):
        Hypergraph(0)
    with pytest.raises(SizeOutOfRange):
        Hypergraph(25)


def test_uniformity_and_complete_sizes():
    assert uniformity(make_complete(5, [3])) == 3
    assert uniformity(pair_and_triple()) is None
    assert complete_sizes(make_complete(5, [2, 4])) == [2, 4]
    assert complete_sizes(pair_and_triple()) is None
    assert complete_sizes(Hypergraph(3)) == []


def test_reduced_sets_pair_and_triple():
    G = pair_and_triple()
    assert reduced_sets(G, 2) == {mask_from_vertices(4, [1]), mask_from_vertices(4, [3, 4])}


def test_star_essential_edge():
    for k, m in [(2, 3), (3, 3), (4, 3), (3, 4)]:
        E = essential_hypergraph(star_family(k, m))
        assert E.edge_lists() == [tuple(range(1, k + 1))]


def test_polygon_essential_is_cycle():
    E = essential_hypergraph(polygon_family(2))
    assert all(len(e) == 2 for e in E.edge_lists())
    g = nx.Graph(E.edge_lists())
    assert nx.is_connected(g) and all(d == 2 for _, d in g.degree())


def test_essential_requires_large_edges():
    with pytest.raises(EdgeTooSmall):
        essential_hypergraph(pair_and_triple())


def test_complete_state_essential_vertices():
    # every (m-1)-set is the reduced set of all n-m+1 vertices outside it,
    # so for n > m every vertex is essential and the essential hypergraph is one edge
    for n in range(3, 8):
        for m in range(3, n + 1):
            E = essential_hypergraph(make_complete(n, [m]))
            if m == n:
                assert E.edges == ()
            else:
                assert E.edge_lists() == [tuple(range(1, n + 1))]


def test_cliques_match_networkx():
    rng = random.Random(7)
    for _ in range(150):
        n = rng.randint(3, 8)
        G = random_hypergraph(rng, n, max_edges=10, min_size=3)
        adj = sharing_adjacency(G)
        nodes = essential_vertices(G)
        ours = set(maximal_cliques(adj, nodes))
        g = nx.Graph()
        g.add_nodes_from(nodes)
        g.add_edges_from((u, v) for u in nodes for v in adj[u] & nodes)
        theirs = {frozenset(c) for c in nx.find_cliques(g)}
        assert ours == theirs


def test_delete_and_shrink_pair_and_triple():
    G = pair_and_triple()
    assert delete(G, 1).edge_lists() == [(1, 2, 3)]
    assert shrink(G, 1).edge_lists() == [(1,), (1, 2, 3)]


def test_shrink_singleton_phase():
    H, phase = shrink_with_phase(parse_hypergraph(2, [[1], [1, 2]]), 1)
    assert phase == -1 and H.edge_lists() == [(1,)]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.data())
def test_permutation_round_trip(n, data):
    G = random_hypergraph(random.Random(data.draw(st.integers(0, 10 ** 6))), n)
    perm = data.draw(st.permutations(list(range(1, n + 1))))
    inv = [0] * n
    for i, p in enumerate(perm, 1):
        inv[p - 1] = i
    assert G.permuted(perm).permuted(inv) == G
