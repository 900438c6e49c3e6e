"""Local-completion path machinery and the rank-3 cover of Tutte-closures.

Three pieces live here. ``vx_profile`` and ``check_cmaximal`` test, by brute
force on both sides, when a maximal (a,b)-path of a local completion has no
counterpart on the same vertex set in the original graph. The partition
code locates the unique vertex with a non-complete 2-connected neighbourhood
in a non-2-closed Tutte-closure and verifies the structure around it. Finally
``cover_tutte_closure`` assembles the rank-3 clique cover.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import Budget, Counterexample, InputError, as_budget
from .goodwalk import cover_2closed_with_audit
from .graph import (
    Graph,
    bits,
    component_masks,
    connectivity_within,
    induced_subgraph,
    is_connected,
    is_k_connected_within,
    local_completion,
    popcount,
    to_mask,
    write_graph6,
)
from .krausz import CliqueSystem, verify_cover
from .paths import (
    PathOracle,
    check_path,
    find_maximal_tutte_path,
    is_tutte_set,
    paths_on_vertex_set,
    tutte_failing_pair,
)
from .recognition import closure_violation, find_claw


def _set(mask: int) -> list[int]:
    return sorted(bits(mask))


@dataclass(frozen=True)
class VxProfile:
    v0: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]
    a_first: int | None
    b_last: int | None

    def to_json(self) -> dict:
        return {"v0": sorted(self.v0), "v1": sorted(self.v1), "v2": sorted(self.v2),
                "a_first": self.a_first, "b_last": self.b_last}


def vx_profile(g: Graph, x: int, p: Sequence[int]) -> VxProfile:
    """Classify path vertices in ``N(x)`` by how many path-neighbours lie in ``N[x]``."""
    nbrs = g.adj[x]
    closed = nbrs | 1 << x
    groups: list[list[int]] = [[], [], []]
    v1_order = []
    for i, y in enumerate(p):
        if not nbrs >> y & 1:
            continue
        cnt = sum(1 for j in (i - 1, i + 1) if 0 <= j < len(p) and closed >> p[j] & 1)
        groups[cnt].append(y)
        if cnt == 1:
            v1_order.append(y)
    return VxProfile(
        frozenset(groups[0]), frozenset(groups[1]), frozenset(groups[2]),
        v1_order[0] if v1_order else None,
        v1_order[-1] if v1_order else None,
    )


def _pair_is_cut(g: Graph, nbrs: int, a: int, b: int) -> bool:
    if not (nbrs >> a & 1 and nbrs >> b & 1):
        return False
    rest = nbrs & ~(1 << a | 1 << b)
    return bool(rest) and not is_connected(g, rest)


def minimum_cuts_within(g: Graph, mask: int) -> list[int]:
    """All minimum vertex cuts of ``<mask>`` as bitmasks, lexicographically."""
    from itertools import combinations

    k = connectivity_within(g, mask)
    members = list(bits(mask))
    out = []
    for cut in combinations(members, k):
        cm = to_mask(cut)
        rest = mask & ~cm
        if rest and not is_connected(g, rest):
            out.append(cm)
    return out


def path_properties(g: Graph, x: int, a: int, b: int, p: Sequence[int], cut: int) -> dict[str, bool]:
    """Properties (1)-(5) for an (a,b)-path ``p`` of the local completion at ``x``.

    ``g`` is the original graph; ``cut`` is the chosen minimum cut of ``<N(x)>``.
    """
    prof = vx_profile(g, x, p)
    nbrs = g.adj[x]
    closed = nbrs | 1 << x
    v0 = to_mask(prof.v0)
    a1, b1 = prof.a_first, prof.b_last
    out = {"1": x in p}
    out["2"] = a1 is not None and len({a, a1, b, b1}) == 4
    out["3"] = a1 is not None and g.has_edge(a1, b1)
    comps = component_masks(g, nbrs & ~cut)
    out["4"] = all(c & ~v0 for c in comps)
    comp_of = {}
    for ci, c in enumerate(comps):
        for v in bits(c):
            comp_of[v] = ci
    pos = {v: i for i, v in enumerate(p)}
    ok5 = True
    v1 = sorted(prof.v1, key=pos.__getitem__)
    for i, u in enumerate(v1):
        for v in v1[i + 1:]:
            if u not in comp_of or v not in comp_of or comp_of[u] == comp_of[v]:
                continue
            lo, hi = pos[u], pos[v]
            inner = p[lo + 1:hi]
            if inner and not any(closed >> w & 1 and not v0 >> w & 1 for w in inner):
                ok5 = False
    out["5"] = ok5
    return out


@dataclass
class CmaximalReport:
    graph6: str
    a: int
    b: int
    x: int
    cut: list[int]
    pair_is_cut: bool
    cases: list[dict] = field(default_factory=list)
    discrepancies: list[dict] = field(default_factory=list)
    cut_sensitivity: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6, "a": self.a, "b": self.b, "x": self.x, "cut": self.cut,
            "pair_is_cut": self.pair_is_cut, "ok": self.ok, "cases": self.cases,
            "discrepancies": self.discrepancies, "cut_sensitivity": self.cut_sensitivity,
        }


def admissible_centre(g: Graph, x: int) -> bool:
    nbrs = g.adj[x]
    return not g.is_clique(nbrs) and is_k_connected_within(g, nbrs, 2)


def check_cmaximal(
    g: Graph, a: int, b: int, x: int,
    budget: Budget | int | None = None, all_cuts: bool = False,
) -> CmaximalReport:
    """Brute-force both sides of the same-vertex-set equivalence for one triple.

    For every maximal (a,b)-path vertex set ``S`` of the local completion at
    ``x``, the left side is "no (a,b)-path of ``g`` spans exactly ``S``" and
    the right side is "{a,b} cuts ``<N(x)>`` and every (a,b)-path of the
    completion on ``S`` has properties (1)-(5)". When the left side holds,
    properties (6) and (7) are also checked. With ``all_cuts`` every minimum
    cut is tried and any change in the right side is recorded.
    """
    if a == b or not all(0 <= v < g.n for v in (a, b, x)):
        raise InputError("need distinct in-range a, b and an in-range x")
    if find_claw(g) is not None:
        raise InputError("check_cmaximal needs a claw-free graph")
    if not admissible_centre(g, x):
        raise InputError(f"neighbourhood of {x} must be non-complete and 2-connected")
    budget = as_budget(budget)
    nbrs = g.adj[x]
    cuts = minimum_cuts_within(g, nbrs)
    cut = cuts[0]
    gx = local_completion(g, x)
    here = PathOracle(g, budget)
    there = PathOracle(gx, budget)
    pair_cut = _pair_is_cut(g, nbrs, a, b)
    report = CmaximalReport(write_graph6(g), a, b, x, _set(cut), pair_cut)
    for s in there.maximal_sets(a, b):
        lhs = not here.has_path_on(a, b, s)
        paths = list(paths_on_vertex_set(gx, a, b, s, budget))
        props = [path_properties(g, x, a, b, p, cut) for p in paths]
        rhs = pair_cut and all(all(pr.values()) for pr in props)
        case = {"vertex_set": _set(s), "lhs": lhs, "rhs": rhs, "paths": len(paths)}
        if lhs:
            profiles = [vx_profile(g, x, p) for p in paths]
            firsts = {(pr.a_first, pr.b_last) for pr in profiles}
            case["prop6"] = len(firsts) == 1
            case["prop7"] = all(
                pr.a_first is not None and g.has_edge(pr.a_first, a) and g.has_edge(pr.b_last, b)
                for pr in profiles
            )
            case["v1_nonempty"] = all(pr.v1 for pr in profiles)
            case["x_on_path"] = all(x in p for p in paths)
            if not (case["prop6"] and case["prop7"] and case["v1_nonempty"]):
                report.discrepancies.append(dict(case, reason="properties (6)/(7) fail"))
        if lhs != rhs:
            failing = [i for i, pr in enumerate(props) if not all(pr.values())]
            bad = {
                "reason": "equivalence fails",
                "witness_path": list(paths[failing[0]]) if failing else None,
                "properties": props[failing[0]] if failing else None,
            }
            report.discrepancies.append(dict(case, **bad))
        if all_cuts and len(cuts) > 1:
            alt = [pair_cut and all(all(path_properties(g, x, a, b, p, c).values()) for p in paths)
                   for c in cuts]
            if len(set(alt)) > 1:
                report.cut_sensitivity.append({"vertex_set": _set(s), "cuts": [_set(c) for c in cuts],
                                               "rhs": alt})
        report.cases.append(case)
    return report


def _interior_v0(g: Graph, x: int, p: Sequence[int]) -> list[int]:
    v0 = vx_profile(g, x, p).v0
    return [j for j in range(1, len(p) - 1) if p[j] in v0]


def reroute_once(gt: Graph, x: int, p: Sequence[int]) -> tuple[tuple[int, ...], dict] | None:
    """One rerouting move on an (a,b)-path ``p`` of the completion at ``x``.

    The first interior vertex ``i`` in ``V_0`` is cut out (its two path
    neighbours are adjacent by claw-freeness) and re-inserted on the first
    path edge with both ends in ``N[x]``. Returns ``None`` when no interior
    vertex lies in ``V_0``.
    """
    p = tuple(p)
    g6 = write_graph6(gt)
    bad = _interior_v0(gt, x, p)
    if not bad:
        return None
    pos = bad[0]
    i = p[pos]
    left, right = p[pos - 1], p[pos + 1]
    if not gt.has_edge(left, right):
        raise Counterexample("path neighbours of a V_0 vertex are non-adjacent",
                             {"graph6": g6, "x": x, "path": list(p), "vertex": i})
    closed = gt.adj[x] | 1 << x
    q = p[:pos] + p[pos + 1:]
    slot = next((j for j in range(len(q) - 1) if closed >> q[j] & 1 and closed >> q[j + 1] & 1), None)
    if slot is None:
        raise Counterexample("no path edge inside N[x] to reroute through",
                             {"graph6": g6, "x": x, "path": list(p)})
    new = q[:slot + 1] + (i,) + q[slot + 1:]
    check_path(local_completion(gt, x), new)
    if to_mask(new) != to_mask(p) or new[0] != p[0] or new[-1] != p[-1]:
        raise Counterexample("rerouting changed the vertex set or the ends",
                             {"graph6": g6, "before": list(p), "after": list(new)})
    step = {"moved": i, "edge": [q[slot], q[slot + 1]], "v0_before": len(bad),
            "v0_after": len(_interior_v0(gt, x, new))}
    if step["v0_after"] >= step["v0_before"]:
        raise Counterexample("rerouting did not reduce interior V_0 vertices",
                             {"graph6": g6, "before": list(p), "after": list(new), "step": step})
    return new, step


def choose_tutte_path_avoiding_v0(
    gt: Graph, x: int, a: int, b: int, budget: Budget | int | None = None,
) -> tuple[tuple[int, ...], list[dict]]:
    """A maximal Tutte (a,b)-path of the completion at ``x`` with no interior vertex in ``V_0``.

    Starts from the lexicographically first maximal Tutte path and applies
    ``reroute_once`` until no interior vertex lies in ``V_0``. The argument
    needs ``gt`` itself to have no (a,b)-path on that vertex set, as for a
    failing pair of a Tutte-closure; otherwise ``InputError``. Returns the
    path and the audit of the moves.
    """
    budget = as_budget(budget)
    gx = local_completion(gt, x)
    g6 = write_graph6(gt)
    oracle = PathOracle(gx, budget)
    p = find_maximal_tutte_path(gx, a, b, budget, oracle)
    if p is None:
        raise Counterexample("completion has no maximal Tutte (a,b)-path",
                             {"graph6": g6, "x": x, "a": a, "b": b})
    if PathOracle(gt, budget).has_path_on(a, b, to_mask(p)):
        raise InputError("the graph itself has an (a,b)-path on this vertex set; rerouting does not apply")
    steps: list[dict] = []
    for _ in range(gt.n + 1):
        moved = reroute_once(gt, x, p)
        if moved is None:
            break
        p, step = moved
        steps.append(step)
    else:
        raise Counterexample("rerouting did not terminate", {"graph6": g6, "steps": steps})
    mask = to_mask(p)
    if mask not in oracle.maximal_sets(a, b) or not is_tutte_set(gx, mask):
        raise Counterexample("rerouted path is not a maximal Tutte path", {"graph6": g6, "path": list(p)})
    return p, steps


@dataclass
class AbcPartition:
    x: int
    a: int
    b: int
    a_prime: int | None
    b_prime: int | None
    a_plus: int
    A: int
    B: int
    C: int
    C_prime: int
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "x": self.x, "a": self.a, "b": self.b, "a_prime": self.a_prime, "b_prime": self.b_prime,
            "a_plus": self.a_plus, "A": _set(self.A), "B": _set(self.B), "C": _set(self.C),
            "C_prime": _set(self.C_prime), "verdicts": self.verdicts,
        }


def abc_partition(gt: Graph, x: int, a: int, b: int, p: Sequence[int], strict: bool = True) -> AbcPartition:
    """Compute ``a', b', a+, A, B, C, C'`` around ``x`` and verify the structural claims.

    With ``strict`` any failed claim raises ``Counterexample`` carrying the
    verdict table; otherwise the table is returned for inspection.
    """
    adj = gt.adj
    nbrs = adj[x]
    closed = nbrs | 1 << x
    prof = vx_profile(gt, x, p)
    ap, bp = prof.a_first, prof.b_last
    a_plus = p[1]
    v: dict[str, bool] = {}

    centres = [y for y in range(gt.n) if admissible_centre(gt, y)]
    v["pair_cuts_every_centre"] = all(_pair_is_cut(gt, adj[y], a, b) for y in centres)
    v["unique_centre"] = centres == [x]
    v["v1_nonempty"] = ap is not None

    comps = component_masks(gt, nbrs & ~(1 << a | 1 << b))
    v["two_components"] = len(comps) == 2
    c_prime = c = 0
    if ap is not None:
        for comp in comps:
            if comp >> ap & 1:
                c_prime = comp
        v["a_b_prime_together"] = bool(c_prime) and bool(c_prime >> bp & 1)
        others = [comp for comp in comps if comp != c_prime]
        c = others[0] if len(others) == 1 else 0
    else:
        v["a_b_prime_together"] = False
    A = adj[a] & ~closed
    B = adj[b] & ~closed

    touch = 0
    for w in bits(closed & ~(1 << a | 1 << b | (1 << ap if ap is not None else 0))):
        if adj[w] >> a_plus & 1:
            touch |= 1 << w
    v["a_plus_isolated"] = touch == 0
    v["a_into_C_prime"] = ap is not None and adj[a] & c_prime == 1 << ap
    v["b_into_C_prime"] = bp is not None and adj[b] & c_prime == 1 << bp

    v["C_sides_cliques"] = all(
        gt.is_clique(m) for m in (A, B, c | 1 << a, c | 1 << b, c_prime)
    ) and bool(c) and bool(c_prime)
    ab_union = A | B
    v["no_AB_to_C"] = not any(adj[u] & c for u in bits(ab_union))
    v["AB_end_cliques"] = ap is not None and bp is not None and gt.is_clique(A | 1 << a | 1 << ap) \
        and gt.is_clique(B | 1 << b | 1 << bp)
    v["common_neighbours"] = (c | 1 << x) == (adj[a] & adj[b])
    parts = [A, B, c, c_prime]
    v["pairwise_disjoint"] = all(parts[i] & parts[j] == 0 for i in range(4) for j in range(i + 1, 4))
    v["figure_cliques"] = all(
        gt.is_clique(m) for m in (c | 1 << a | 1 << x, c | 1 << b | 1 << x, c_prime | 1 << x)
    )
    part = AbcPartition(x, a, b, ap, bp, a_plus, A, B, c, c_prime, v)
    if strict and not part.ok:
        raise Counterexample(
            "closure structure claims fail",
            {"graph6": write_graph6(gt), "path": list(p), "partition": part.to_json()},
        )
    return part


def _clique_system_x(gt: Graph, part: AbcPartition) -> list[tuple[str, int]]:
    a, b, c = part.a, part.b, part.C
    if gt.has_edge(a, b):
        return [("C+ab", c | 1 << a | 1 << b), ("C'", part.C_prime)]
    return [("C+a", c | 1 << a), ("C+b", c | 1 << b), ("C'", part.C_prime)]


def merge_cover(gt: Graph, part: AbcPartition, k0: list[int]) -> tuple[list[int], list[dict]]:
    """Extend a cover of ``gt - x`` (in ``gt`` labels) over the edges at ``x``."""
    x = part.x
    g6 = write_graph6(gt)
    kx = _clique_system_x(gt, part)
    rest = gt.full & ~(1 << x)
    for name, s in kx:
        for u in bits(rest & ~s):
            if gt.is_clique(s | 1 << u):
                raise Counterexample("clique at x is not maximal in gt - x",
                                     {"graph6": g6, "clique": name, "set": _set(s), "extra": u})
    count = [0] * gt.n
    for m in k0:
        for v in bits(m):
            count[v] += 1
    cover = list(k0)
    log = []
    for name, s in kx:
        if s in cover:
            cover = [m | 1 << x if m == s else m for m in cover]
            log.append({"clique": name, "action": "extended"})
            continue
        heavy = [v for v in bits(s) if count[v] >= 3]
        if heavy:
            raise Counterexample("maximal clique at x meets a vertex already in three cliques",
                                 {"graph6": g6, "clique": name, "vertices": heavy})
        if name == "C+b":
            cover.append(1 << part.b | 1 << x)
            log.append({"clique": name, "action": "added edge bx"})
        else:
            cover.append(s | 1 << x)
            log.append({"clique": name, "action": "added with x"})
    return cover, log


def cover_from_partition(gt: Graph, part: AbcPartition) -> tuple[list[int], dict]:
    """Cover ``gt`` from a verified partition: cover ``gt - x`` then merge the cliques at ``x``."""
    x = part.x
    sub, index = induced_subgraph(gt, gt.full & ~(1 << x))
    try:
        ks0, audit0 = cover_2closed_with_audit(sub)
    except InputError as exc:
        raise Counterexample("gt - x is not 2-closed claw-free",
                             {"graph6": write_graph6(gt), "x": x, "error": str(exc)}) from exc
    k0 = [to_mask(index[v] for v in k) for k in ks0.cliques]
    cover, log = merge_cover(gt, part, k0)
    return cover, {"K_x": [[n, _set(s)] for n, s in _clique_system_x(gt, part)],
                   "K_0": [_set(m) for m in k0], "merge": log, "sub_audit": audit0}


def cover_tutte_closure_with_audit(gt: Graph, budget: Budget | int | None = None) -> tuple[CliqueSystem, dict]:
    """Rank-3 clique cover of a Tutte-closure of a claw-free graph.

    Disconnected closures have complete components; 2-closed closures use the
    good-walk construction; otherwise the structure around the unique
    non-2-closed vertex is verified and merged into a cover of ``gt - x``.
    """
    budget = as_budget(budget)
    if find_claw(gt) is not None:
        raise InputError("cover_tutte_closure needs a claw-free graph")
    g6 = write_graph6(gt)
    audit: dict = {"graph6": g6}
    comps = component_masks(gt)
    if len(comps) > 1:
        for comp in comps:
            if not gt.is_clique(comp):
                raise Counterexample("disconnected closure with a non-complete component",
                                     {"graph6": g6, "component": _set(comp)})
        audit["mode"] = "disconnected"
        cover = [m for m in comps if popcount(m) > 1]
    elif closure_violation(gt, 2) is None:
        audit["mode"] = "2closed"
        ks, sub = cover_2closed_with_audit(gt, check=False)
        audit["cover_2closed"] = sub
        cover = ks.masks()
    else:
        audit["mode"] = "claims"
        pair = tutte_failing_pair(gt, budget)
        if pair is None:
            raise Counterexample("non-2-closed closure is Tutte-connected but not complete", {"graph6": g6})
        a, b = pair
        x = closure_violation(gt, 2)
        path, steps = choose_tutte_path_avoiding_v0(gt, x, a, b, budget)
        part = abc_partition(gt, x, a, b, path)
        audit["pair"] = [a, b]
        audit["path"] = list(path)
        audit["reroute"] = steps
        audit["partition"] = part.to_json()
        cover, sub = cover_from_partition(gt, part)
        audit.update(sub)
    report = verify_cover(gt, [_set(m) for m in cover], 3)
    if not report:
        raise Counterexample("rank-3 cover of the closure is invalid",
                             {"graph6": g6, "mode": audit["mode"], "report": report.to_json()})
    system = CliqueSystem.from_masks(gt, cover)
    audit["cover"] = system.to_json()
    return system, audit


def cover_tutte_closure(gt: Graph, budget: Budget | int | None = None) -> CliqueSystem:
    return cover_tutte_closure_with_audit(gt, budget)[0]
