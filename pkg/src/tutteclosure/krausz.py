"""Krausz clique covers of bounded vertex multiplicity and hypergraph line graphs.

A cover of rank ``r`` is a system of cliques containing every edge such that
each vertex lies in at most ``r`` of the cliques. Such a system exists exactly
when the graph is the line graph of a hypergraph of rank at most ``r``; the
functions here produce the system, turn it into a hypergraph and back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import Budget, InputError, as_budget
from .graph import Graph, bits, lowest, popcount, to_mask


@dataclass(frozen=True)
class CliqueSystem:
    """Ordered multiset of vertex sets over ``host``."""

    host: Graph
    cliques: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for k in self.cliques:
            if not k:
                raise InputError("empty clique in clique system")
            if max(k) >= self.host.n or min(k) < 0:
                raise InputError(f"clique {sorted(k)} outside host vertex range")

    @classmethod
    def from_masks(cls, host: Graph, masks: Iterable[int]) -> "CliqueSystem":
        return cls(host, tuple(frozenset(bits(m)) for m in masks))

    def masks(self) -> list[int]:
        return [to_mask(k) for k in self.cliques]

    def membership(self) -> list[int]:
        count = [0] * self.host.n
        for k in self.cliques:
            for v in k:
                count[v] += 1
        return count

    def to_json(self) -> list[list[int]]:
        return [sorted(k) for k in self.cliques]

    def __len__(self) -> int:
        return len(self.cliques)


@dataclass(frozen=True)
class Hypergraph:
    """Ground points ``0..ground_size-1`` and an ordered multiset of nonempty edges."""

    ground_size: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        for e in self.edges:
            if not e:
                raise InputError("hypergraph edges must be nonempty")
            if min(e) < 0 or max(e) >= self.ground_size:
                raise InputError(f"edge {sorted(e)} outside ground set")

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def to_json(self) -> dict:
        return {"ground_size": self.ground_size, "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict | str) -> "Hypergraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["ground_size"]), tuple(frozenset(e) for e in data["edges"]))


@dataclass
class CoverReport:
    ok: bool
    not_cliques: list[list[int]] = field(default_factory=list)
    uncovered_edges: list[tuple[int, int]] = field(default_factory=list)
    overloaded: dict[int, int] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "not_cliques": self.not_cliques,
            "uncovered_edges": [list(e) for e in self.uncovered_edges],
            "overloaded": {str(v): c for v, c in self.overloaded.items()},
        }


def verify_cover(g: Graph, ks: CliqueSystem | Sequence[Iterable[int]], r: int) -> CoverReport:
    """Check the three cover conditions; violations are collected, never raised."""
    masks = ks.masks() if isinstance(ks, CliqueSystem) else [to_mask(k) for k in ks]
    report = CoverReport(ok=True)
    covered = [0] * g.n
    count = [0] * g.n
    for m in masks:
        if m & ~g.full:
            raise InputError("clique outside host vertex range")
        if not g.is_clique(m):
            report.not_cliques.append(sorted(bits(m)))
        for v in bits(m):
            covered[v] |= m & ~(1 << v)
            count[v] += 1
    for u, v in g.edges():
        if not covered[u] >> v & 1:
            report.uncovered_edges.append((u, v))
    report.overloaded = {v: c for v, c in enumerate(count) if c > r}
    report.ok = not (report.not_cliques or report.uncovered_edges or report.overloaded)
    return report


def maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """Maximal cliques of ``<within>`` (Bron-Kerbosch with pivoting), sorted."""
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: popcount(p & g.adj[u]))
        for v in bits(p & ~g.adj[pivot]):
            expand(r | (1 << v), p & g.adj[v], x & g.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    start = g.full if within is None else within
    if start:
        expand(0, start, 0)
    return sorted(out, key=lambda m: sorted(bits(m)))


def all_cliques(g: Graph, min_size: int = 1) -> list[int]:
    """Every clique (complete vertex set) of ``g`` with at least ``min_size`` vertices."""
    out: list[int] = []

    def grow(clique: int, cand: int) -> None:
        if popcount(clique) >= min_size:
            out.append(clique)
        for v in bits(cand):
            cand &= ~(1 << v)
            grow(clique | (1 << v), cand & g.adj[v])

    grow(0, g.full)
    return out


def _cliques_in(g: Graph, cand: int) -> list[int]:
    """All cliques (including the empty one) inside the vertex set ``cand``."""
    out = [0]

    def grow(clique: int, pool: int) -> None:
        for v in bits(pool):
            pool &= ~(1 << v)
            c = clique | (1 << v)
            out.append(c)
            grow(c, pool & g.adj[v])

    grow(0, cand)
    return out


def find_krausz_cover(g: Graph, r: int, budget: Budget | int | None = None) -> CliqueSystem | None:
    """Exact search for a cover in which every vertex lies in at most ``r`` cliques.

    Branches on the smallest uncovered edge, trying every clique through it
    (largest first). A clique is only tried if each of its vertices gains an
    uncovered edge, since otherwise dropping that vertex covers the same
    edges more cheaply. Returns ``None`` when no cover exists and raises
    ``BudgetExceeded`` when the search is cut off.
    """
    if r < 1:
        raise InputError("rank must be at least 1")
    budget = as_budget(budget)
    n = g.n
    uncovered = list(g.adj)
    count = [0] * n
    chosen: list[int] = []
    failed: set[tuple] = set()

    def feasible(v: int) -> bool:
        rest = uncovered[v]
        if not rest:
            return True
        cap = r - count[v]
        if cap <= 0:
            return False
        if cap == 1:
            return g.is_clique(rest)
        return True

    def search() -> bool:
        budget.spend()
        u = next((v for v in range(n) if uncovered[v]), None)
        if u is None:
            return True
        key = (tuple(uncovered), tuple(count))
        if key in failed:
            return False
        w = lowest(uncovered[u])
        avail = 0
        for v in range(n):
            if count[v] < r:
                avail |= 1 << v
        common = g.adj[u] & g.adj[w] & avail
        options = []
        for extra in _cliques_in(g, common):
            k = extra | (1 << u) | (1 << w)
            if all(uncovered[v] & k for v in bits(extra)):
                options.append(k)
        options.sort(key=lambda m: (-popcount(m), sorted(bits(m))))
        for k in options:
            saved = [(v, uncovered[v]) for v in bits(k)]
            for v in bits(k):
                uncovered[v] &= ~k
                count[v] += 1
            chosen.append(k)
            if all(feasible(v) for v in bits(k)) and search():
                return True
            chosen.pop()
            for v, row in saved:
                uncovered[v] = row
                count[v] -= 1
        failed.add(key)
        return False

    if not search():
        return None
    return CliqueSystem.from_masks(g, sorted(chosen, key=lambda m: sorted(bits(m))))


def hypergraph_from_cover(ks: CliqueSystem, pad: str = "isolated") -> Hypergraph:
    """Krausz translation: one ground point per clique, one hyperedge per vertex.

    Vertex ``v`` becomes the set of cliques containing it. With
    ``pad="isolated"`` a private point is added only for vertices in no
    clique, so the rank equals the largest membership count. ``pad="single"``
    also gives vertices of membership one a private point, which turns an
    edge cover of a graph into the familiar simple root graph.
    """
    if pad not in ("isolated", "single"):
        raise InputError(f"unknown padding rule {pad!r}")
    limit = 0 if pad == "isolated" else 1
    n = ks.host.n
    members: list[list[int]] = [[] for _ in range(n)]
    for i, k in enumerate(ks.cliques):
        for v in sorted(k):
            members[v].append(i)
    ground = len(ks.cliques)
    edges = []
    for v in range(n):
        e = list(members[v])
        if len(e) <= limit:
            e.append(ground)
            ground += 1
        edges.append(frozenset(e))
    return Hypergraph(ground, tuple(edges))


def line_graph_of_hypergraph(h: Hypergraph) -> Graph:
    """Vertices are the hyperedges in order; adjacency is a shared ground point."""
    m = len(h.edges)
    masks = [to_mask(e) for e in h.edges]
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(m, tuple(adj))
