"""Good walks in 2-closed claw-free graphs and the rank-3 cover built from them.

A good walk ``u_0 ... u_{k+1}`` (``k >= 4``) has every pair at distance one or
two along the walk adjacent, and each window of six consecutive vertices
induces one of the two forbidden graphs that can survive in a 2-closed
claw-free graph. The cover construction removes the interiors of the walk
paths, covers the rest with a rank-2 Krausz system, and patches the walk
regions with end cliques and consecutive triangles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import Counterexample, InconsistencyError, InputError
from .graph import Graph, bits, component_masks, induced_subgraph, to_mask, write_graph6
from .isomorphism import are_isomorphic, iter_induced_copies
from .krausz import CliqueSystem, find_krausz_cover, maximal_cliques, verify_cover
from .recognition import derive_forbidden_family, is_2_closed, is_claw_free, is_square_of_cycle

Walk = tuple[int, ...]


def _walk_orderings(h: Graph) -> list[tuple[int, ...]]:
    """Orderings of a six-vertex graph that satisfy the good-walk adjacency pattern."""
    out = []
    for p in permutations(range(h.n)):
        if all(h.has_edge(p[i], p[i + 1]) for i in range(5)) and all(
            h.has_edge(p[i], p[i + 2]) for i in range(4)
        ):
            out.append(p)
    return out


@lru_cache(maxsize=None)
def goodwalk_graphs() -> tuple[Graph, Graph]:
    """The two family members that read as good walks of length six.

    These are the six-vertex members that are claw-free, 2-closed and admit
    an ordering ``u_0..u_5`` with all distance-one and distance-two pairs
    adjacent. Exactly two must qualify.
    """
    picked = []
    for h in derive_forbidden_family():
        if h.n != 6 or not is_claw_free(h)[0] or not is_2_closed(h)[0]:
            continue
        if _walk_orderings(h):
            picked.append(h)
    if len(picked) != 2:
        raise InconsistencyError(f"expected two good-walk graphs, found {len(picked)}")
    return picked[0], picked[1]


@lru_cache(maxsize=None)
def _seed_patterns() -> tuple[tuple[Graph, tuple[tuple[int, ...], ...]], ...]:
    return tuple((h, tuple(_walk_orderings(h))) for h in goodwalk_graphs())


class _WindowTest:
    """Memoised test that a six-vertex set induces one of the good-walk graphs."""

    def __init__(self, g: Graph):
        self.g = g
        self.cache: dict[int, bool] = {}
        self.targets = goodwalk_graphs()

    def __call__(self, window: Sequence[int]) -> bool:
        mask = to_mask(window)
        if bin(mask).count("1") != 6:
            return False
        hit = self.cache.get(mask)
        if hit is None:
            sub, _ = induced_subgraph(self.g, mask)
            hit = any(are_isomorphic(sub, t) for t in self.targets)
            self.cache[mask] = hit
        return hit


def is_good_walk(g: Graph, seq: Sequence[int], window: _WindowTest | None = None) -> bool:
    if len(seq) < 6:
        return False
    window = window or _WindowTest(g)
    if any(not g.has_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)):
        return False
    if any(not g.has_edge(seq[i], seq[i + 2]) for i in range(len(seq) - 2)):
        return False
    return all(window(seq[i:i + 6]) for i in range(len(seq) - 5))


@dataclass(frozen=True)
class GoodWalk:
    seq: Walk

    @property
    def k(self) -> int:
        return len(self.seq) - 2

    @property
    def interior(self) -> Walk:
        return self.seq[1:-1]

    def to_json(self) -> list[int]:
        return list(self.seq)


def _canonical(seq: Walk) -> Walk:
    rev = seq[::-1]
    key = (seq[1], seq[-2], seq)
    rkey = (rev[1], rev[-2], rev)
    return seq if key <= rkey else rev


def _skip_mask(g: Graph) -> int:
    """Vertices of components that are squares of cycles (walks there never end)."""
    skip = 0
    for comp in component_masks(g):
        sub, _ = induced_subgraph(g, comp)
        if sub.n >= 6 and is_square_of_cycle(sub):
            skip |= comp
    return skip


def find_good_walks(g: Graph, check: bool = True) -> list[GoodWalk]:
    """All maximal good walks up to reversal, canonically oriented and sorted.

    Components that are squares of cycles are skipped: their good walks wrap
    around indefinitely and the cover handles them separately.
    """
    if check:
        if not is_claw_free(g)[0]:
            raise InputError("good-walk lemmas need a claw-free graph")
        if not is_2_closed(g)[0]:
            raise InputError("good-walk lemmas need a 2-closed graph")
    window = _WindowTest(g)
    skip = _skip_mask(g)
    limit = g.n + 2
    seeds: set[Walk] = set()
    for h, orders in _seed_patterns():
        for emb in iter_induced_copies(g, h):
            if any(skip >> v & 1 for v in emb.values()):
                continue
            for order in orders:
                seeds.add(tuple(emb[u] for u in order))

    def grow(seq: Walk) -> list[Walk]:
        # right-maximal extensions of seq
        out, stack = [], [seq]
        while stack:
            s = stack.pop()
            if len(s) > limit:
                raise Counterexample(
                    "good walk longer than the vertex count (interior repeats)",
                    {"graph6": write_graph6(g), "walk": list(s)},
                )
            last5 = s[-5:]
            cand = g.adj[s[-1]] & g.adj[s[-2]]
            nxt = [s + (w,) for w in bits(cand) if window(last5 + (w,))]
            if nxt:
                stack.extend(nxt)
            else:
                out.append(s)
        return out

    walks: set[Walk] = set()
    for seed in sorted(seeds):
        for right in grow(seed):
            for both in grow(right[::-1]):
                walks.add(_canonical(both))
    return [GoodWalk(w) for w in sorted(walks)]


def _path_canonical(p: Walk) -> Walk:
    return p if p[0] < p[-1] or (p[0] == p[-1] and p <= p[::-1]) else p[::-1]


def extract_interior_paths(g: Graph, walks: Sequence[GoodWalk]) -> list[Walk]:
    """Interiors ``u_1..u_k`` of the maximal walks, checked against the path and disjointness lemmas."""
    if is_square_of_cycle(g):
        raise InputError("interior paths are undefined in the square of a cycle")
    g6 = write_graph6(g)
    for w in walks:
        inner = w.interior
        if len(set(inner)) != len(inner):
            raise Counterexample("walk interior is not a path", {"graph6": g6, "walk": list(w.seq)})
    for i, w in enumerate(walks):
        for w2 in walks[i + 1:]:
            p, q = w.interior, w2.interior
            if not set(p) & set(q):
                continue
            same_set = set(p) == set(q)
            aligned = len(p) == len(q) and all(
                p[j] == q[j] or p[j] == q[len(p) - 1 - j] for j in range(len(p))
            )
            if not (same_set and aligned):
                raise Counterexample(
                    "maximal walks share an interior vertex but not their interior",
                    {"graph6": g6, "walks": [list(w.seq), list(w2.seq)]},
                )
    paths = sorted({_path_canonical(w.interior) for w in walks})
    used = 0
    for p in paths:
        m = to_mask(p)
        if m & used:
            raise Counterexample("interior paths are not disjoint", {"graph6": g6, "paths": paths})
        used |= m
    return paths


def end_cliques(g: Graph, p: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """``N[u_1] - {u_3}`` and ``N[u_k] - {u_(k-2)}``, after checking they are cliques
    equal to ``N[u_2] - {u_3, u_4}`` and ``N[u_(k-1)] - {u_(k-2), u_(k-3)}``."""
    if len(p) < 4:
        raise InputError("interior path must have at least four vertices")
    out = []
    for q in (p, p[::-1]):
        u1, u2, u3, u4 = q[0], q[1], q[2], q[3]
        left = (g.adj[u1] | 1 << u1) & ~(1 << u3)
        right = (g.adj[u2] | 1 << u2) & ~(1 << u3) & ~(1 << u4)
        if left != right or not g.is_clique(left):
            raise Counterexample(
                "end set equality or clique property fails",
                {"graph6": write_graph6(g), "path": list(p), "end": u1,
                 "left": sorted(bits(left)), "right": sorted(bits(right))},
            )
        out.append(frozenset(bits(left)))
    return out[0], out[1]


def check_interior_degrees(g: Graph, walk: GoodWalk) -> None:
    """Vertices ``u_3..u_(k-2)`` of a walk with ``k >= 5`` must have degree four."""
    s = walk.seq
    k = walk.k
    if k < 5:
        return
    for i in range(3, k - 1):
        if g.degree(s[i]) != 4:
            raise Counterexample(
                "interior walk vertex without degree four",
                {"graph6": write_graph6(g), "walk": list(s), "index": i, "degree": g.degree(s[i])},
            )


def _consecutive_triangles(p: Sequence[int], cyclic: bool = False) -> list[int]:
    n = len(p)
    stop = n if cyclic else n - 2
    return [to_mask((p[i], p[(i + 1) % n], p[(i + 2) % n])) for i in range(stop)]


def _dedupe(masks: list[int]) -> list[int]:
    seen, out = set(), []
    for m in masks:
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def _cover_component(h: Graph, audit: dict) -> list[int]:
    """Cover of a connected 2-closed claw-free graph, in its own labels."""
    if h.n <= 1:
        return []
    if h.is_complete():
        audit["case"] = "complete"
        return [h.full]
    sq = is_square_of_cycle(h)
    if sq:
        # relabel along the cycle: i -> order[i] with order a Hamilton cycle of C_n^2
        from .isomorphism import find_isomorphism
        from .graph import square_of_cycle

        iso = find_isomorphism(square_of_cycle(h.n), h)
        order = [iso[i] for i in range(h.n)]
        audit["case"] = "square-of-cycle"
        audit["cycle_order"] = order
        return _consecutive_triangles(order, cyclic=True)

    audit["case"] = "walks"
    walks = find_good_walks(h, check=False)
    paths = extract_interior_paths(h, walks)
    for w in walks:
        check_interior_degrees(h, w)
    audit["walks"] = [w.to_json() for w in walks]
    audit["paths"] = [list(p) for p in paths]

    removed = 0
    for p in paths:
        removed |= to_mask(p[1:-1])
    gp, index = induced_subgraph(h, h.full & ~removed)
    km = find_krausz_cover(gp, 2)
    if km is None:
        raise Counterexample(
            "graph without walk interiors has no rank-2 cover",
            {"graph6": write_graph6(h), "reduced_graph6": write_graph6(gp)},
        )
    km_masks = [to_mask(index[v] for v in k) for k in km.cliques]
    audit["reduced"] = {"graph6": write_graph6(gp), "index": index}
    audit["K_m"] = [sorted(bits(m)) for m in km_masks]

    kr: list[int] = []
    ends = 0
    for p in paths:
        first, last = end_cliques(h, p)
        kr.extend([to_mask(first), to_mask(last)])
        ends |= 1 << p[0] | 1 << p[-1]
    kr = _dedupe(kr)
    audit["K_r"] = [sorted(bits(m)) for m in kr]
    k0 = [m for m in km_masks if not m & ends] + kr
    audit["K_0"] = [sorted(bits(m)) for m in k0]
    tri = [t for p in paths for t in _consecutive_triangles(p)]
    return k0 + tri


def _check_three_clique_vertices(g: Graph, cover: list[int], inner: int | None) -> None:
    count = [0] * g.n
    for m in cover:
        for v in bits(m):
            count[v] += 1
    maxcl = maximal_cliques(g)
    for v in range(g.n):
        if count[v] != 3:
            if inner is not None and inner >> v & 1:
                raise Counterexample(
                    "path interior vertex not in three cliques",
                    {"graph6": write_graph6(g), "vertex": v, "count": count[v]},
                )
            continue
        if inner is not None and not inner >> v & 1:
            raise Counterexample(
                "vertex outside path interiors lies in three cliques",
                {"graph6": write_graph6(g), "vertex": v},
            )
        mine = sorted(m for m in cover if m >> v & 1)
        theirs = sorted(m for m in maxcl if m >> v & 1)
        if mine != theirs:
            raise Counterexample(
                "three-clique vertex has other maximal cliques",
                {"graph6": write_graph6(g), "vertex": v,
                 "cover": [sorted(bits(m)) for m in mine],
                 "maximal": [sorted(bits(m)) for m in theirs]},
            )


def cover_2closed_with_audit(g: Graph, check: bool = True) -> tuple[CliqueSystem, dict]:
    """Rank-3 clique cover of a 2-closed claw-free graph plus the construction audit."""
    if check:
        if not is_claw_free(g)[0]:
            raise InputError("cover_2closed needs a claw-free graph")
        ok, x = is_2_closed(g)
        if not ok:
            raise InputError(f"cover_2closed needs a 2-closed graph (vertex {x} violates)")
    audit: dict = {"graph6": write_graph6(g), "components": []}
    cover: list[int] = []
    for comp in component_masks(g):
        h, index = induced_subgraph(g, comp)
        part: dict = {"vertices": index}
        local = _cover_component(h, part)
        lifted = [to_mask(index[v] for v in bits(m)) for m in local]
        part["K"] = [sorted(bits(m)) for m in lifted]
        audit["components"].append(part)
        inner = None
        if part.get("case") == "walks":
            inner = 0
            for p in part["paths"]:
                inner |= to_mask(index[v] for v in p[1:-1])
        _check_three_clique_vertices(g, lifted, inner)
        cover.extend(lifted)
    report = verify_cover(g, [list(bits(m)) for m in cover], 3)
    if not report:
        raise Counterexample("rank-3 cover of a 2-closed graph is invalid",
                             {"graph6": write_graph6(g), "report": report.to_json()})
    system = CliqueSystem.from_masks(g, cover)
    audit["K"] = system.to_json()
    return system, audit


def cover_2closed(g: Graph, check: bool = True) -> CliqueSystem:
    return cover_2closed_with_audit(g, check)[0]
