"""Induced-copy search and isomorphism testing by bitset backtracking."""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, bits, popcount


def _search_order(h: Graph) -> list[int]:
    # Max-degree start, then always the vertex with most already-placed
    # neighbours, so adjacency constraints bite early.
    if h.n == 0:
        return []
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        best = max(
            remaining,
            key=lambda u: (popcount(h.adj[u] & placed), h.degree(u), -u),
        )
        order.append(best)
        placed |= 1 << best
        remaining.remove(best)
    return order


def iter_induced_copies(g: Graph, h: Graph, exact_degree: bool = False) -> Iterator[dict[int, int]]:
    """Yield every injection ``V(h) -> V(g)`` preserving adjacency and non-adjacency.

    Branching is deterministic: h-vertices in a fixed search order, g-vertices
    ascending. ``exact_degree`` additionally pins host degrees (used for
    isomorphism, where both graphs have the same order).
    """
    if h.n > g.n:
        return
    order = _search_order(h)
    deg_ok = []
    for u in order:
        du = h.degree(u)
        m = 0
        for v in range(g.n):
            dv = g.degree(v)
            if dv == du or (not exact_degree and dv > du):
                m |= 1 << v
        deg_ok.append(m)
    # for each position, the earlier positions adjacent / non-adjacent in h
    links = []
    for i, u in enumerate(order):
        links.append([(j, h.has_edge(u, order[j])) for j in range(i)])
    image = [0] * h.n
    full = g.full

    def extend(i: int, used: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield {order[k]: image[k] for k in range(len(order))}
            return
        cand = deg_ok[i] & ~used
        for j, adjacent in links[i]:
            row = g.adj[image[j]]
            cand &= row if adjacent else full & ~row
            if not cand:
                return
        for v in bits(cand):
            image[i] = v
            yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


def find_induced_copy(g: Graph, h: Graph) -> dict[int, int] | None:
    """First induced copy of ``h`` in ``g`` as a map h-vertex -> g-vertex, or ``None``."""
    return next(iter_induced_copies(g, h), None)


def has_induced_copy(g: Graph, h: Graph) -> bool:
    return find_induced_copy(g, h) is not None


def vertex_signature(g: Graph, v: int) -> tuple:
    row = g.adj[v]
    tri = sum(popcount(g.adj[w] & row) for w in bits(row)) // 2
    return (popcount(row), tuple(sorted(g.degree(w) for w in bits(row))), tri)


def invariant(g: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before exact testing."""
    return (g.n, g.num_edges(), tuple(sorted(vertex_signature(g, v) for v in range(g.n))))


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """A map from the vertices of ``h`` onto those of ``g`` preserving adjacency, or ``None``."""
    if g.n != h.n or g.num_edges() != h.num_edges():
        return None
    return next(iter_induced_copies(g, h, exact_degree=True), None)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if invariant(g) != invariant(h):
        return False
    return find_isomorphism(g, h) is not None


def relabel(g: Graph, perm: dict[int, int] | list[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
    adj = [0] * g.n
    for u, v in g.edges():
        pu, pv = perm[u], perm[v]
        adj[pu] |= 1 << pv
        adj[pv] |= 1 << pu
    return Graph(g.n, tuple(adj))
