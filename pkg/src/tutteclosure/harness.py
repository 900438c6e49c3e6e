"""Sweeps that exercise the theorem pipeline and the supporting lemmas.

Every sweep yields one JSON-ready record per instance. A record's ``status`` is
``verified``, ``counterexample``, ``budget-exceeded`` or ``input-error``; the
CLI turns the stream into JSON lines and a summary.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import permutations
from typing import Callable, Iterable, Iterator

from .closure import COMPLETED, k_closure, tutte_closure
from .enumeration import graphs_on, graphs_up_to
from .errors import Budget, BudgetExceeded, Counterexample, InconsistencyError, InputError, as_budget
from .generators import random_banded_graph, random_clawfree_generator, random_graph, repair_claws
from .goodwalk import (
    check_interior_degrees,
    cover_2closed_with_audit,
    end_cliques,
    extract_interior_paths,
    find_good_walks,
    goodwalk_graphs,
    is_good_walk,
)
from .graph import (
    Graph,
    bits,
    is_connected,
    is_k_connected,
    is_k_connected_within,
    local_completion,
    popcount,
    write_graph6,
)
from .isomorphism import are_isomorphic, has_induced_copy
from .krausz import find_krausz_cover, hypergraph_from_cover, line_graph_of_hypergraph, verify_cover
from .paths import find_maximal_tutte_path, is_tutte_connected
from .recognition import derive_forbidden_family, find_claw, is_2_closed, is_line_graph_of_multigraph, is_square_of_cycle
from .theorem import admissible_centre, check_cmaximal, cover_tutte_closure_with_audit

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
BUDGET = "budget-exceeded"
INPUT_ERROR = "input-error"


def guarded(fn: Callable[[dict], None], record: dict) -> dict:
    """Run ``fn`` on ``record`` and translate exceptions into a status."""
    try:
        fn(record)
    except Counterexample as exc:
        record["status"] = COUNTEREXAMPLE
        record["counterexample"] = exc.report
        return record
    except BudgetExceeded as exc:
        record["status"] = BUDGET
        record["budget"] = exc.limit
        return record
    except InputError as exc:
        record["status"] = INPUT_ERROR
        record["error"] = str(exc)
        return record
    failed = [k for k, v in record.get("verdicts", {}).items() if v is False]
    if failed:
        record["status"] = COUNTEREXAMPLE
        record.setdefault("counterexample", {"check": ",".join(failed), "graph6": record.get("input_graph6")})
    else:
        record["status"] = VERIFIED
    return record


def summarize(records: Iterable[dict], **extra) -> dict:
    counts = Counter(r["status"] for r in records)
    out = {
        "summary": True,
        "instances": sum(counts.values()),
        "verified": counts[VERIFIED],
        "counterexamples": counts[COUNTEREXAMPLE],
        "budget_exceeded": counts[BUDGET],
        "input_errors": counts[INPUT_ERROR],
    }
    out.update(extra)
    return out


def exit_code(summary: dict) -> int:
    if summary["counterexamples"]:
        return 1
    if summary["budget_exceeded"]:
        return 3
    if summary["input_errors"]:
        return 2
    return 0


# -- theorem pipeline ---------------------------------------------------------


def _hamilton_microcheck(g: Graph, budget: Budget) -> bool | None:
    """For a 4-connected multigraph line graph: maximal Tutte paths between adjacent vertices are Hamilton."""
    if g.n < 5 or not is_k_connected(g, 4) or find_krausz_cover(g, 2, budget) is None:
        return None
    for a, b in g.edges():
        p = find_maximal_tutte_path(g, a, b, budget)
        if p is None or len(p) != g.n:
            return False
    return True


def closure_cover_record(g: Graph, budget: int | None = None, seed: int | None = None) -> dict:
    """Closure, rank-3 cover, hypergraph roundtrip and closure-preservation checks for one graph."""
    record: dict = {"input_graph6": write_graph6(g)}
    if seed is not None:
        record["seed"] = seed

    def run(rec: dict) -> None:
        bud = as_budget(budget)
        if find_claw(g) is not None:
            raise InputError("input is not claw-free")
        gt, trace = tutte_closure(g, bud)
        rec["closure_graph6"] = write_graph6(gt)
        rec["closure_trace"] = trace.to_json()
        ks, audit = cover_tutte_closure_with_audit(gt, bud)
        rec["mode"] = audit["mode"]
        if "partition" in audit:
            rec["partition"] = audit["partition"]
        rec["cover"] = ks.to_json()
        h = hypergraph_from_cover(ks)
        rec["hypergraph"] = h.to_json()
        t_g, _ = is_tutte_connected(g, bud)
        t_gt, _ = is_tutte_connected(gt, bud)
        v = {
            "closure_claw_free": find_claw(gt) is None,
            "cover_rank3": bool(verify_cover(gt, ks, 3)),
            "hypergraph_rank3": h.rank <= 3,
            "roundtrip": line_graph_of_hypergraph(h) == gt,
            "tutte_preserved": t_g == t_gt,
            "complete_iff_tutte": gt.is_complete() == t_g,
            "trace_consistent": (trace.terminal == COMPLETED) == t_g,
        }
        micro = _hamilton_microcheck(g, bud)
        if micro is not None:
            v["four_connected_hamilton"] = micro
        rec["verdicts"] = v

    return guarded(run, record)


def random_family(seed: int, count: int, n: int, connected: bool = True) -> Iterator[Graph]:
    stream = random_clawfree_generator(seed, n, connected=connected)
    for _ in range(count):
        yield next(stream)


def closure_cover_instances(n_max: int = 8, random_count: int = 500, random_n: int = 9, seed: int = 0) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from graphs_on(n, claw_free=True, connected=True)
    if random_count:
        yield from random_family(seed, random_count, random_n)


def closure_orders_record(g: Graph, tries: int = 24, seed: int = 0) -> dict:
    """Tutte-closures reached under different completion orders, recorded but not judged.

    The closure scans vertices in ascending order, so relabelling the input
    changes the order. Each distinct closure (up to isomorphism) is listed
    with the number of orders that produced it.
    """
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        rng = random.Random(seed)
        perms = list(permutations(range(g.n))) if g.n <= 4 else \
            [tuple(range(g.n))] + [tuple(rng.sample(range(g.n), g.n)) for _ in range(tries - 1)]
        seen: list[tuple[Graph, int]] = []
        for perm in perms:
            h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
            ht = tutte_closure(h)[0]
            for i, (k, c) in enumerate(seen):
                if are_isomorphic(k, ht):
                    seen[i] = (k, c + 1)
                    break
            else:
                seen.append((ht, 1))
        rec["orders_tried"] = len(perms)
        rec["closures"] = [{"graph6": write_graph6(k), "orders": c} for k, c in seen]

    return guarded(run, record)


# -- lemma suites -------------------------------------------------------------


def completion_record(g: Graph) -> dict:
    """Local completion at every vertex keeps a claw-free graph claw-free."""
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        bad = [x for x in range(g.n) if find_claw(local_completion(g, x)) is not None]
        rec["verdicts"] = {"completion_claw_free": not bad}
        if bad:
            rec["counterexample"] = {"check": "completion creates a claw", "graph6": rec["input_graph6"],
                                     "vertex": bad[0]}

    return guarded(run, record)


def completion_instances(seed: int = 0, count: int = 10_000, n_max: int = 10) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        yield repair_claws(random_graph(rng, n, rng.uniform(0.1, 0.7)))


def excluded_members() -> list[Graph]:
    """Family members other than the two good-walk graphs."""
    walk = goodwalk_graphs()
    return [h for h in derive_forbidden_family() if not any(are_isomorphic(h, w) for w in walk)]


def two_closed_record(g: Graph) -> dict:
    """Excluded-member scan, the walk checks and the 2-closed cover for one 2-closed claw-free graph."""
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        ok, x = is_2_closed(g)
        if not ok or find_claw(g) is not None:
            raise InputError("input is not 2-closed claw-free")
        present = [i for i, h in enumerate(excluded_members()) if has_induced_copy(g, h)]
        walks = find_good_walks(g)
        walk_ok = all(is_good_walk(g, w.seq) for w in walks)
        for w in walks:
            check_interior_degrees(g, w)
        paths = []
        if not is_square_of_cycle(g):
            paths = extract_interior_paths(g, walks)
            for p in paths:
                end_cliques(g, p)
        ks, audit = cover_2closed_with_audit(g)
        rec["walks"] = [w.to_json() for w in walks]
        rec["paths"] = [list(p) for p in paths]
        rec["cover"] = ks.to_json()
        rec["verdicts"] = {
            "no_excluded_members": not present,
            "walks_valid": walk_ok,
            "cover_rank3": bool(verify_cover(g, ks, 3)),
        }

    return guarded(run, record)


def two_closed_instances(seed: int = 0, count: int = 1000, n_max: int = 12, n_min: int = 4) -> Iterator[Graph]:
    """2-closures of seeded random claw-free graphs with orders in ``[n_min, n_max]``.

    Even-numbered instances come from ``G(n, p)``, odd ones from banded graphs.
    """
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(n_min, n_max)
        if i % 2:
            base = random_banded_graph(rng, n)
        else:
            base = random_graph(rng, n, rng.uniform(0.1, 0.45))
        yield k_closure(repair_claws(base), 2)[0]


def _disjoint_non_adjacent_pairs(g: Graph, s: int) -> bool:
    pairs = [(u, v) for u in bits(s) for v in bits(s & ~g.adj[u]) if u < v]
    return any(not {p[0], p[1]} & {q[0], q[1]} for i, p in enumerate(pairs) for q in pairs[i + 1:])


def neighbourhood_record(g: Graph) -> dict:
    """A 2-connected induced subgraph of ``<N(x)>`` with two disjoint non-adjacent pairs forces ``<N(x)>`` 2-connected.

    The pairs must be disjoint: with two pairs sharing a vertex the statement
    fails already on seven vertices.
    """
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        bad = None
        for x in range(g.n):
            nbrs = g.adj[x]
            if is_k_connected_within(g, nbrs, 2):
                continue
            members = list(bits(nbrs))
            for sub in range(1, 1 << len(members)):
                s = 0
                for i, v in enumerate(members):
                    if sub >> i & 1:
                        s |= 1 << v
                if popcount(s) < 4:
                    continue
                if _disjoint_non_adjacent_pairs(g, s) and is_k_connected_within(g, s, 2):
                    bad = (x, sorted(bits(s)))
                    break
            if bad:
                break
        rec["verdicts"] = {"neighbourhood_2connected": bad is None}
        if bad:
            rec["counterexample"] = {"check": "2-connected subgraph without 2-connected neighbourhood",
                                     "graph6": rec["input_graph6"], "vertex": bad[0], "subset": bad[1]}

    return guarded(run, record)


# -- path equivalence and Krausz roundtrip --------------------------------------


def cmaximal_record(g: Graph, budget: int | None = None, all_cuts: bool = False) -> dict:
    """The same-vertex-set equivalence over every admissible triple of one graph."""
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        bud = as_budget(budget)
        triples = lhs = 0
        bad: list[dict] = []
        sensitive: list[dict] = []
        for x in range(g.n):
            if not admissible_centre(g, x):
                continue
            for a in range(g.n):
                for b in range(a + 1, g.n):
                    rep = check_cmaximal(g, a, b, x, bud, all_cuts)
                    triples += 1
                    lhs += sum(1 for c in rep.cases if c["lhs"])
                    if not rep.ok:
                        bad.append(rep.to_json())
                    if rep.cut_sensitivity:
                        sensitive.append({"a": a, "b": b, "x": x, "detail": rep.cut_sensitivity})
        rec["triples"] = triples
        rec["lhs_true"] = lhs
        if all_cuts:
            rec["cut_sensitive"] = sensitive
        rec["verdicts"] = {"equivalence": not bad}
        if bad:
            rec["counterexample"] = {"check": "same-vertex-set equivalence", "graph6": rec["input_graph6"],
                                     "reports": bad}

    return guarded(run, record)


def roundtrip_record(g: Graph, ranks: tuple[int, ...] = (2, 3), budget: int | None = None) -> dict:
    """When a rank-r cover exists, its hypergraph reproduces ``g`` exactly."""
    record: dict = {"input_graph6": write_graph6(g)}

    def run(rec: dict) -> None:
        bud = as_budget(budget)
        v = {}
        found = {}
        for r in ranks:
            ks = find_krausz_cover(g, r, bud)
            found[str(r)] = ks is not None
            if ks is None:
                continue
            h = hypergraph_from_cover(ks)
            v[f"rank{r}_roundtrip"] = line_graph_of_hypergraph(h) == g
            v[f"rank{r}_bound"] = h.rank <= r
        rec["cover_found"] = found
        rec["verdicts"] = v

    return guarded(run, record)


def forbidden_report(n_max: int = 7, cross_order: int = 7) -> dict:
    """Derive the family and cross-check the family scan against the rank-2 search on one order."""
    family = derive_forbidden_family(n_max)
    disagreements = []
    for g in graphs_on(cross_order):
        try:
            is_line_graph_of_multigraph(g)
        except InconsistencyError as exc:
            disagreements.append({"graph6": write_graph6(g), "error": str(exc)})
    orders = [h.n for h in family]
    return {
        "members": family.graph6(),
        "orders": orders,
        "provenance": family.provenance,
        "count_is_7": len(family) == 7,
        "all_at_most_6_vertices": max(orders) <= 6,
        "none_new_at_7": not any(n == 7 for n in orders),
        "cross_checked": len(graphs_on(cross_order)),
        "disagreements": disagreements,
    }
