from itertools import islice

import pytest

from tutteclosure import harness
from tutteclosure.errors import BudgetExceeded, Counterexample, InputError
from tutteclosure.graph import Graph, complete, cycle, disjoint_union, parse_graph6, wheel


def test_guarded_statuses():
    def verdicts(rec, ok=True):
        rec["verdicts"] = {"a": True, "b": ok}

    assert harness.guarded(verdicts, {})["status"] == "verified"
    bad = harness.guarded(lambda r: verdicts(r, False), {"input_graph6": "Bw"})
    assert bad["status"] == "counterexample" and bad["counterexample"]["check"] == "b"

    def raiser(exc):
        def fn(rec):
            raise exc
        return fn

    assert harness.guarded(raiser(InputError("x")), {})["status"] == "input-error"
    assert harness.guarded(raiser(BudgetExceeded(5)), {})["budget"] == 5
    assert harness.guarded(raiser(Counterexample("x", {"k": 1})), {})["counterexample"]["k"] == 1


def test_exit_code_precedence():
    def code(*statuses):
        return harness.exit_code(harness.summarize({"status": s} for s in statuses))

    assert code() == 0
    assert code("verified", "verified") == 0
    assert code("verified", "input-error") == 2
    assert code("input-error", "budget-exceeded") == 3
    assert code("budget-exceeded", "counterexample", "input-error") == 1


def test_closure_cover_record_on_cycle_and_disconnected():
    rec = harness.closure_cover_record(cycle(6))
    assert rec["status"] == "verified" and rec["mode"] == "2closed"
    assert rec["closure_trace"]["terminal"] == "completed-to-K_n"
    rec = harness.closure_cover_record(disjoint_union(cycle(5), complete(2)))
    assert rec["status"] == "verified" and rec["mode"] == "disconnected"
    assert rec["verdicts"]["complete_iff_tutte"]
    claw = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert harness.closure_cover_record(claw)["status"] == "input-error"


def test_hamilton_microcheck_on_octahedron_line_graph():
    # L(K_4) is the octahedron: 4-connected and a line graph
    octa = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 1 or u % 2])
    rec = harness.closure_cover_record(octa)
    assert rec["verdicts"]["four_connected_hamilton"] is True


def test_two_closed_records():
    assert harness.completion_record(wheel(5))["status"] == "verified"
    gs = list(harness.two_closed_instances(seed=2, count=20))
    recs = [harness.two_closed_record(g) for g in gs]
    assert all(r["status"] == "verified" for r in recs)
    assert harness.two_closed_record(wheel(5))["status"] == "input-error"  # centre breaks 2-closedness
    assert len(harness.excluded_members()) == 5


def test_completion_instances_seeded():
    a = [g for g in islice(harness.completion_instances(seed=3, count=30), 30)]
    b = list(harness.completion_instances(seed=3, count=30))
    assert a == b and len(a) == 30


def test_closure_cover_instances_counts():
    assert sum(1 for _ in harness.closure_cover_instances(5, 0)) == 1 + 1 + 2 + 5 + 14
    assert sum(1 for _ in harness.closure_cover_instances(3, 4, 6)) == 4 + 4


def test_roundtrip_and_cmaximal_records():
    rec = harness.roundtrip_record(parse_graph6("CF"))
    assert rec["status"] == "verified" and rec["cover_found"] == {"2": False, "3": True}
    rec = harness.cmaximal_record(wheel(5))
    assert rec["status"] == "verified" and rec["triples"] == 15
    rec = harness.cmaximal_record(parse_graph6("GCqrT["))
    assert rec["status"] == "counterexample"


@pytest.mark.parametrize("g6", ["FQznw"])
def test_neighbourhood_record(g6):
    assert harness.neighbourhood_record(parse_graph6(g6))["status"] == "verified"


def test_closure_orders_recorded():
    g = disjoint_union(cycle(5), Graph.from_edges(3, [(0, 1), (1, 2)]))
    rec = harness.closure_orders_record(g, tries=10)
    assert rec["status"] == "verified" and rec["orders_tried"] == 10
    assert sum(c["orders"] for c in rec["closures"]) == 10
    assert harness.closure_orders_record(complete(3))["orders_tried"] == 6
