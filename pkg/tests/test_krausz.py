import pytest
from hypothesis import given, settings, strategies as st

from tutteclosure.enumeration import graphs_on
from tutteclosure.errors import Budget, BudgetExceeded, InputError
from tutteclosure.graph import Graph, complete, cycle, empty, path_graph, star
from tutteclosure.krausz import (
    CliqueSystem,
    Hypergraph,
    find_krausz_cover,
    hypergraph_from_cover,
    line_graph_of_hypergraph,
    maximal_cliques,
    verify_cover,
)

from oracles import cliques_of, has_cover_bruteforce
from strategies import graphs


def system(g, sets):
    return CliqueSystem(g, tuple(frozenset(s) for s in sets))


def test_verify_cover_examples():
    assert verify_cover(complete(3), [[0, 1, 2]], 1)
    assert verify_cover(path_graph(3), [[0, 1], [1, 2]], 2)
    report = verify_cover(star(3), [[0, 1], [0, 2], [0, 3]], 2)
    assert not report and report.overloaded == {0: 3}
    report = verify_cover(path_graph(3), [[0, 2]], 2)
    assert report.not_cliques and report.uncovered_edges


def test_find_cover_examples():
    ks = find_krausz_cover(star(3), 3)
    assert sorted(map(sorted, ks.cliques)) == [[0, 1], [0, 2], [0, 3]]
    assert find_krausz_cover(star(3), 2) is None
    ks = find_krausz_cover(cycle(5), 2)
    assert len(ks) == 5 and all(len(k) == 2 for k in ks.cliques)
    assert find_krausz_cover(complete(6), 1).to_json() == [[0, 1, 2, 3, 4, 5]]
    assert find_krausz_cover(empty(3), 1).to_json() == []


@pytest.mark.parametrize("n", range(7))
def test_cover_search_matches_bruteforce(n):
    for g in graphs_on(n):
        for r in (1, 2, 3):
            ks = find_krausz_cover(g, r)
            assert (ks is not None) == has_cover_bruteforce(g, r)
            if ks is not None:
                assert verify_cover(g, ks, r)


@settings(max_examples=80)
@given(graphs(max_n=8), st.integers(1, 3))
def test_cover_monotone_in_rank(g, r):
    if find_krausz_cover(g, r) is not None:
        assert find_krausz_cover(g, r + 1) is not None


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_edge_cover_at_max_degree(g):
    delta = max((g.degree(v) for v in range(g.n)), default=0)
    assert find_krausz_cover(g, max(delta, 1)) is not None


def test_maximal_cliques_match_oracle():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    expected = [s for s in cliques_of(g, 1) if not any(s < t for t in cliques_of(g, 1))]
    got = {frozenset(v for v in range(g.n) if m >> v & 1) for m in maximal_cliques(g)}
    assert got == set(expected)


def test_hypergraph_examples():
    p3 = path_graph(3)
    ks = system(p3, [[0, 1], [1, 2]])
    h = hypergraph_from_cover(ks, pad="single")
    assert h.rank == 2 and line_graph_of_hypergraph(h) == p3
    # the root multigraph is the path on four points
    assert sorted(map(sorted, h.edges)) == [[0, 1], [0, 2], [1, 3]]
    tri = system(complete(3), [[0, 1, 2]])
    star_h = hypergraph_from_cover(tri, pad="single")
    assert sorted(map(sorted, star_h.edges)) == [[0, 1], [0, 2], [0, 3]]
    assert line_graph_of_hypergraph(star_h) == complete(3)
    plain = hypergraph_from_cover(tri)
    assert [sorted(e) for e in plain.edges] == [[0], [0], [0]]
    assert line_graph_of_hypergraph(plain) == complete(3)
    lone = hypergraph_from_cover(system(empty(1), []))
    assert lone.edges == (frozenset({0}),)


def test_line_graph_examples():
    tri = Hypergraph(3, (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})))
    assert line_graph_of_hypergraph(tri) == complete(3)
    claw = Hypergraph(4, (frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3})))
    assert line_graph_of_hypergraph(claw) == complete(3)
    two = Hypergraph(4, (frozenset({0, 1}), frozenset({2, 3})))
    assert line_graph_of_hypergraph(two) == empty(2)


def test_hypergraph_rejects_empty_edges():
    with pytest.raises(InputError):
        Hypergraph(2, (frozenset(),))
    h = Hypergraph(3, (frozenset({0, 2}), frozenset({1})))
    assert Hypergraph.from_json(h.to_json()) == h


@pytest.mark.parametrize("pad", ["isolated", "single"])
@pytest.mark.parametrize("n", range(7))
def test_roundtrip(n, pad):
    for g in graphs_on(n):
        for r in (1, 2, 3):
            ks = find_krausz_cover(g, r)
            if ks is None:
                continue
            h = hypergraph_from_cover(ks, pad=pad)
            assert line_graph_of_hypergraph(h) == g
            if pad == "isolated":
                assert h.rank <= max(r, 1)


def test_budget_exceeded_is_not_absence():
    with pytest.raises(BudgetExceeded):
        find_krausz_cover(cycle(9), 2, Budget(1))
