"""Isomorphism-class enumeration of small graphs by vertex augmentation.

Every graph on ``n`` vertices arises from one on ``n - 1`` vertices by adding a
vertex with some neighbour set, and both claw-freeness and the class of all
graphs are closed under vertex deletion. So each level is built from the
previous one and deduplicated by invariant bucketing plus an exact
isomorphism test. Representatives are the first member found, which makes
the output order deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, is_connected
from .isomorphism import find_isomorphism, invariant


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    adj = list(g.adj)
    for v in range(n):
        if nbrs >> v & 1:
            adj[v] |= 1 << n
    adj.append(nbrs)
    return Graph._trusted(n + 1, tuple(adj))


def _new_vertex_in_claw(g: Graph, v: int) -> bool:
    # only claws through the last-added vertex need checking
    from .recognition import claw_through

    return claw_through(g, v)


@lru_cache(maxsize=None)
def _level(n: int, claw_free: bool) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for base in _level(n - 1, claw_free):
        for nbrs in range(1 << (n - 1)):
            g = _extend(base, nbrs)
            if claw_free and _new_vertex_in_claw(g, n - 1):
                continue
            key = invariant(g)
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(h, g) is not None for h in bucket):
                continue
            bucket.append(g)
            reps.append(g)
    return tuple(reps)


def graphs_on(n: int, claw_free: bool = False, connected: bool = False) -> list[Graph]:
    """One representative per isomorphism class on exactly ``n`` vertices."""
    out = list(_level(n, claw_free))
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def graphs_up_to(n_max: int, claw_free: bool = False, connected: bool = False) -> list[Graph]:
    out: list[Graph] = []
    for n in range(n_max + 1):
        out.extend(graphs_on(n, claw_free, connected))
    return out
