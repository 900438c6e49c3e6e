import pytest
from hypothesis import given, settings

from tutteclosure.enumeration import graphs_on
from tutteclosure.graph import Graph, complete, complete_bipartite, cycle, parse_graph6, path_graph, square_of_cycle, star, wheel
from tutteclosure.isomorphism import are_isomorphic, has_induced_copy
from tutteclosure.recognition import (
    derive_forbidden_family,
    find_claw,
    forbidden_members_present,
    is_2_closed,
    is_claw_free,
    is_k1k_free,
    is_line_graph_of_multigraph,
    is_square_of_cycle,
)

from oracles import has_cover_bruteforce
from strategies import graphs

# Derived family, frozen after checking against the brute-force cover oracle below.
FAMILY_GRAPH6 = ["CF", "EQzW", "EUZw", "EUzo", "EU~o", "FUz^w", "F]~vw"]


def test_claw_examples():
    ok, witness = is_claw_free(star(3))
    assert not ok and witness == {0, 1, 2, 3}
    assert is_claw_free(cycle(5)) == (True, None)
    assert is_claw_free(wheel(5))[0]


@settings(max_examples=200)
@given(graphs(max_n=9))
def test_claw_free_agrees_with_induced_copy(g):
    claw = find_claw(g)
    assert (claw is None) == (not has_induced_copy(g, star(3)))
    if claw:
        c, *leaves = claw
        assert all(g.has_edge(c, v) for v in leaves)
        assert not any(g.has_edge(u, v) for i, u in enumerate(leaves) for v in leaves[i + 1:])


def test_square_of_cycle_examples():
    assert is_square_of_cycle(square_of_cycle(7)) == 7
    assert is_square_of_cycle(complete(5)) == 5
    assert is_square_of_cycle(path_graph(6)) is None
    assert is_square_of_cycle(cycle(8)) is None


def test_2_closed_examples():
    assert is_2_closed(complete(6)) == (True, None)
    assert is_2_closed(wheel(5)) == (False, 0)
    assert is_2_closed(cycle(6)) == (True, None)


def test_family_frozen():
    fam = derive_forbidden_family()
    assert fam.graph6() == FAMILY_GRAPH6
    assert len(fam) == 7
    assert any(are_isomorphic(h, star(3)) for h in fam)
    assert not any(are_isomorphic(h, complete(3)) for h in fam)
    assert fam.provenance["enumeration_bound"] == 7


@pytest.mark.parametrize("text", FAMILY_GRAPH6)
def test_family_members_are_minimal_by_bruteforce(text):
    h = parse_graph6(text)
    assert not has_cover_bruteforce(h, 2)
    for v in range(h.n):
        sub, _ = h.remove_vertices(1 << v)
        assert has_cover_bruteforce(sub, 2)


def test_family_orders():
    # the largest members have seven vertices (see the decisions ledger)
    assert [h.n for h in derive_forbidden_family()] == [4, 6, 6, 6, 6, 7, 7]
    assert are_isomorphic(parse_graph6("F]~vw"), complete(7).__class__.from_edges(
        7, [(u, v) for u in range(7) for v in range(u + 1, 7) if not (u and v and (u - 1) // 2 == (v - 1) // 2)]
    ))  # K_{1,2,2,2}


def test_line_graph_of_multigraph_examples():
    assert is_line_graph_of_multigraph(path_graph(3))
    assert not is_line_graph_of_multigraph(star(3))
    assert is_line_graph_of_multigraph(cycle(5))


@pytest.mark.parametrize("n", range(7))
def test_family_scan_matches_cover_search(n):
    # raises InconsistencyError on any disagreement
    for g in graphs_on(n):
        is_line_graph_of_multigraph(g)


def test_family_scan_matches_bruteforce_six():
    fam = derive_forbidden_family()
    for g in graphs_on(6):
        assert (not forbidden_members_present(g, fam)) == has_cover_bruteforce(g, 2)


def test_k1k_free():
    assert is_k1k_free(star(3), 4)
    assert not is_k1k_free(star(3), 3)
    assert not is_k1k_free(complete_bipartite(1, 4), 4)
