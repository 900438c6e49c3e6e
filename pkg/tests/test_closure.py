import pytest
from hypothesis import given, settings, strategies as st

from tutteclosure import paths
from tutteclosure.closure import COMPLETED, FIXPOINT, k_closure, tutte_closure, tutte_closure_2conn_variant
from tutteclosure.enumeration import graphs_on
from tutteclosure.errors import Budget, BudgetExceeded
from tutteclosure.graph import complete, complete_bipartite, cycle, disjoint_union, is_k_connected_within, local_completion, wheel
from tutteclosure.paths import is_tutte_connected
from tutteclosure.recognition import closure_violation, find_claw, is_k1k_free

from strategies import clawfree_graphs, graphs


def test_k_closure_examples():
    g, trace = k_closure(wheel(5), 2)
    assert g == complete(6)
    assert trace.steps[0][0] == 0
    assert trace.replay(wheel(5)) == g
    assert k_closure(cycle(6), 2)[0] == cycle(6)
    for k in (1, 2, 3):
        assert k_closure(complete(5), k)[0] == complete(5)


@settings(max_examples=100)
@given(graphs(max_n=9), st.integers(1, 3))
def test_k_closure_postconditions(g, k):
    h, trace = k_closure(g, k)
    assert closure_violation(h, k) is None
    assert set(g.edges()) <= set(h.edges())
    assert trace.replay(g) == h
    assert all(after > before for _, before, after in trace.steps)


def test_tutte_closure_examples():
    g, trace = tutte_closure(cycle(6))
    assert g == complete(6) and trace.terminal == COMPLETED
    assert tutte_closure(complete(4))[0] == complete(4)
    two = disjoint_union(complete(3), complete(3))
    g, trace = tutte_closure(two)
    assert g == two and trace.terminal == FIXPOINT and trace.steps == []


def test_tutte_closure_non_claw_free_fixpoint():
    g = complete_bipartite(4, 4)
    h, trace = tutte_closure(g)
    assert trace.replay(g) == h
    assert not is_tutte_connected(h)[0]
    for x in range(h.n):
        if not h.is_clique(h.adj[x]):
            assert is_tutte_connected(local_completion(h, x))[0]


def test_variant_examples():
    assert tutte_closure_2conn_variant(complete(5))[0] == complete(5)
    assert tutte_closure_2conn_variant(cycle(6))[0] == complete(6)
    two = disjoint_union(cycle(4), complete(3))  # 2-closed, claw-free, disconnected
    assert tutte_closure_2conn_variant(two)[0] == two


def test_budget_overrun_carries_partial_trace():
    paths._TUTTE_CACHE.clear()  # a cached answer would skip the search
    with pytest.raises(BudgetExceeded) as info:
        tutte_closure(complete_bipartite(4, 5), Budget(20))
    assert info.value.partial is not None and info.value.partial.mode == "tutte"


@pytest.mark.parametrize("n", range(1, 7))
def test_closure_preserves_tutte_connectedness(n):
    for g in graphs_on(n, claw_free=True):
        h, trace = tutte_closure(g)
        assert is_tutte_connected(g)[0] == is_tutte_connected(h)[0]
        assert trace.replay(g) == h
        assert find_claw(h) is None


@settings(max_examples=200)
@given(clawfree_graphs(max_n=10), st.data())
def test_completion_keeps_claw_free(g, data):
    if g.n == 0:
        return
    x = data.draw(st.integers(0, g.n - 1))
    assert find_claw(local_completion(g, x)) is None


@settings(max_examples=200)
@given(graphs(max_n=9), st.data())
def test_completion_keeps_k14_free(g, data):
    if g.n == 0 or not is_k1k_free(g, 4):
        return
    x = data.draw(st.integers(0, g.n - 1))
    assert is_k1k_free(local_completion(g, x), 4)
