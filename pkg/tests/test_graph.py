import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tutteclosure.errors import InputError
from tutteclosure.graph import (
    Graph,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    induced_subgraph,
    is_connected,
    local_completion,
    minimum_vertex_cuts,
    neighborhood,
    parse_graph6,
    path_graph,
    star,
    vertex_connectivity,
    write_graph6,
)

from oracles import components_avoiding, connectivity_bruteforce
from strategies import graphs


def test_graph_rejects_bad_adjacency():
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(InputError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 3)])


def test_neighborhood_examples():
    claw = star(3)
    assert neighborhood(claw, 0) == {1, 2, 3}
    assert neighborhood(claw, 1, closed=True) == {0, 1}
    assert neighborhood(cycle(5), 0) == {1, 4}


def test_induced_subgraph_examples():
    h, index = induced_subgraph(cycle(6), [0, 1, 2])
    assert h == path_graph(3) and index == [0, 1, 2]
    g = cycle(7)
    assert induced_subgraph(g, g.full)[0] == g
    assert induced_subgraph(complete(5), [0, 2, 4])[0] == complete(3)


def test_local_completion_examples():
    assert local_completion(star(3), 0) == complete(4)
    k4 = complete(4)
    assert local_completion(k4, 2) == k4
    assert local_completion(cycle(5), 0) == cycle(5).add_edges([(1, 4)])


@given(graphs(max_n=12), st.data())
def test_local_completion_idempotent_and_monotone(g, data):
    if g.n == 0:
        return
    x = data.draw(st.integers(0, g.n - 1))
    h = local_completion(g, x)
    assert local_completion(h, x) == h
    assert set(g.edges()) <= set(h.edges())
    assert h.is_clique(h.adj[x])


def test_components_examples():
    assert sorted(map(sorted, components(empty(3)))) == [[0], [1], [2]]
    assert len(components(cycle(6))) == 1
    sizes = sorted(len(c) for c in components(disjoint_union(complete(3), complete(2))))
    assert sizes == [2, 3]


@given(graphs(max_n=12))
def test_components_partition(g):
    comps = components(g)
    seen = set()
    for c in comps:
        assert not seen & c
        seen |= c
    assert seen == set(range(g.n))
    for c in comps:
        other = set(range(g.n)) - c
        assert all(not g.has_edge(u, v) for u in c for v in other)
        assert is_connected(g, sum(1 << v for v in c))
    assert len(comps) == len(components_avoiding(g, set()))


def test_connectivity_examples():
    assert vertex_connectivity(cycle(5)) == 2
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(complete(4)) == 3
    assert vertex_connectivity(disjoint_union(complete(3), complete(3))) == 0
    assert vertex_connectivity(Graph.from_edges(1, [])) == 0
    for m in range(1, 8):
        assert vertex_connectivity(complete(m)) == m - 1


@settings(max_examples=150)
@given(graphs(max_n=8))
def test_connectivity_matches_bruteforce(g):
    assert vertex_connectivity(g) == connectivity_bruteforce(g)


def test_minimum_vertex_cuts_examples():
    assert minimum_vertex_cuts(path_graph(3), 1) == [frozenset({1})]
    assert minimum_vertex_cuts(cycle(4), 2) == [frozenset({0, 2}), frozenset({1, 3})]
    assert minimum_vertex_cuts(cycle(5), 1) == []
    with pytest.raises(InputError):
        minimum_vertex_cuts(complete(4), 2)


def test_graph6_known_strings():
    assert write_graph6(empty(0)) == "?"
    assert parse_graph6("?") == empty(0)
    assert write_graph6(complete(3)) == "Bw"
    assert write_graph6(cycle(6)) == "EhEG"
    assert parse_graph6(">>graph6<<Bw") == complete(3)
    assert write_graph6(complete(3), header=True) == ">>graph6<<Bw"


@given(graphs(max_n=12))
def test_graph6_roundtrip_and_networkx_agree(g):
    text = write_graph6(g)
    assert parse_graph6(text) == g
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    assert nx.to_graph6_bytes(ref, header=False).decode().strip() == text


def test_graph6_large_order_roundtrip():
    g = complete_bipartite(30, 33)
    assert g.n == 63
    assert parse_graph6(write_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A!", "Bw?", "B", "D?{x", ">>graph6<<"])
def test_graph6_malformed(bad):
    with pytest.raises(InputError):
        parse_graph6(bad)


def test_graph6_padding_must_be_zero():
    # K_2 is "A_"; "A`" sets a padding bit
    assert parse_graph6("A_") == complete(2)
    with pytest.raises(InputError, match="offset"):
        parse_graph6("A`")
