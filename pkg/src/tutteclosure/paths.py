"""Tutte paths and cycles, maximal (a,b)-paths and Tutte-connectedness.

Whether a path is a Tutte path, and whether it is a maximal (a,b)-path, depend
only on its vertex set. The searches therefore work on the family of vertex
sets of (a,b)-paths, computed once per start vertex by a subset dynamic
programme, and only materialise an actual vertex sequence at the end.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .errors import Budget, InputError, as_budget
from .graph import Graph, bits, component_masks, is_connected, popcount, to_mask

Path = tuple[int, ...]


def check_path(g: Graph, p: Sequence[int]) -> None:
    if not p:
        raise InputError("a path needs at least one vertex")
    if len(set(p)) != len(p):
        raise InputError(f"path {list(p)} repeats a vertex")
    for v in p:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    for u, v in zip(p, p[1:]):
        if not g.has_edge(u, v):
            raise InputError(f"path {list(p)} uses non-edge {(u, v)}")


def check_cycle(g: Graph, c: Sequence[int]) -> None:
    if len(c) < 3:
        raise InputError("a cycle needs at least three vertices")
    check_path(g, c)
    if not g.has_edge(c[-1], c[0]):
        raise InputError(f"cycle {list(c)} is not closed")


def violating_component(g: Graph, mask: int, limit: int) -> int | None:
    """First component of ``g - mask`` with more than ``limit`` neighbours in ``mask``."""
    for comp in component_masks(g, g.full & ~mask):
        attach = 0
        for v in bits(comp):
            attach |= g.adj[v]
        if popcount(attach & mask) > limit:
            return comp
    return None


def is_tutte_set(g: Graph, mask: int) -> bool:
    """Tutte condition for a path with vertex set ``mask``."""
    return violating_component(g, mask, min(3, popcount(mask) - 1)) is None


def is_tutte_path(g: Graph, p: Sequence[int]) -> tuple[bool, frozenset[int] | None]:
    """``(True, None)`` or ``(False, component with too many attachments)``."""
    check_path(g, p)
    comp = violating_component(g, to_mask(p), min(3, len(p) - 1))
    if comp is None:
        return True, None
    return False, frozenset(bits(comp))


def is_tutte_cycle(g: Graph, c: Sequence[int]) -> bool:
    check_cycle(g, c)
    if len(c) == g.n:
        return True
    if len(c) < 4:
        return False
    return violating_component(g, to_mask(c), 3) is None


def enumerate_ab_paths(g: Graph, a: int, b: int, budget: Budget | int | None = None) -> Iterator[Path]:
    """Every (a,b)-path once, in lexicographic order of the vertex sequence."""
    if a == b:
        raise InputError("endpoints must differ")
    budget = as_budget(budget)
    stack = [a]

    def walk(v: int, used: int) -> Iterator[Path]:
        budget.spend()
        if v == b:
            yield tuple(stack)
            return
        for w in bits(g.adj[v] & ~used):
            stack.append(w)
            yield from walk(w, used | (1 << w))
            stack.pop()

    yield from walk(a, 1 << a)


def paths_on_vertex_set(g: Graph, a: int, b: int, mask: int, budget: Budget | int | None = None) -> Iterator[Path]:
    """All (a,b)-paths whose vertex set is exactly ``mask``, lexicographically."""
    budget = as_budget(budget)
    stack = [a]
    target = popcount(mask)

    def walk(v: int, used: int) -> Iterator[Path]:
        budget.spend()
        if v == b:
            if len(stack) == target:
                yield tuple(stack)
            return
        for w in bits(g.adj[v] & mask & ~used):
            if w == b and used | (1 << w) != mask:
                continue
            stack.append(w)
            yield from walk(w, used | (1 << w))
            stack.pop()

    if mask >> a & 1 and mask >> b & 1:
        yield from walk(a, 1 << a)


class PathSets:
    """Vertex sets of all paths starting at ``source``, grouped by end vertex.

    ``ends[mask]`` is the bitmask of vertices ``v`` such that some path from
    ``source`` to ``v`` has vertex set exactly ``mask``.
    """

    def __init__(self, g: Graph, source: int, budget: Budget | int | None = None):
        budget = as_budget(budget)
        self.g = g
        self.source = source
        ends: dict[int, int] = {1 << source: 1 << source}
        layer = dict(ends)
        adj = g.adj
        while layer:
            nxt: dict[int, int] = {}
            budget.spend(len(layer))
            for mask, tails in layer.items():
                for v in bits(tails):
                    for w in bits(adj[v] & ~mask):
                        m2 = mask | (1 << w)
                        nxt[m2] = nxt.get(m2, 0) | (1 << w)
            ends.update(nxt)
            layer = nxt
        self.ends = ends

    def sets_to(self, b: int) -> list[int]:
        return [m for m, e in self.ends.items() if e >> b & 1 and b != self.source]

    def maximal_sets_to(self, b: int) -> list[int]:
        sets = sorted(self.sets_to(b), key=popcount, reverse=True)
        kept: list[int] = []
        for m in sets:
            if not any(m & ~k == 0 for k in kept):
                kept.append(m)
        return kept


class PathOracle:
    """Per-graph cache of ``PathSets`` so that many (a,b) queries share the work."""

    def __init__(self, g: Graph, budget: Budget | int | None = None):
        self.g = g
        self.budget = as_budget(budget)
        self._by_source: dict[int, PathSets] = {}

    def sets(self, a: int) -> PathSets:
        ps = self._by_source.get(a)
        if ps is None:
            ps = self._by_source[a] = PathSets(self.g, a, self.budget)
        return ps

    def maximal_sets(self, a: int, b: int) -> list[int]:
        return self.sets(a).maximal_sets_to(b)

    def sets_between(self, a: int, b: int) -> list[int]:
        return self.sets(a).sets_to(b)

    def tutte_maximal_sets(self, a: int, b: int) -> list[int]:
        return [m for m in self.maximal_sets(a, b) if is_tutte_set(self.g, m)]

    def has_path_on(self, a: int, b: int, mask: int) -> bool:
        return bool(self.sets(a).ends.get(mask, 0) >> b & 1)

    def pair_is_good(self, a: int, b: int) -> bool:
        """Some maximal (a,b)-path is a Tutte path."""
        ps = self.sets(a)
        if ps.ends.get(self.g.full, 0) >> b & 1:
            return True  # a Hamilton (a,b)-path exists
        return any(is_tutte_set(self.g, m) for m in ps.maximal_sets_to(b))


def is_maximal_ab_path(g: Graph, p: Sequence[int], budget: Budget | int | None = None) -> bool:
    check_path(g, p)
    if len(p) < 2:
        raise InputError("an (a,b)-path needs distinct ends")
    mask = to_mask(p)
    sets = PathSets(g, p[0], budget).sets_to(p[-1])
    return not any(m != mask and m & mask == mask for m in sets)


def _first_path_in(g: Graph, a: int, b: int, targets: list[int], budget: Budget) -> Path | None:
    """Lexicographically first (a,b)-path whose vertex set is one of ``targets``."""
    if not targets:
        return None
    goal = set(targets)
    union = 0
    for t in targets:
        union |= t
    stack = [a]

    def walk(v: int, used: int) -> Path | None:
        budget.spend()
        if v == b:
            return tuple(stack) if used in goal else None
        for w in bits(g.adj[v] & union & ~used):
            m2 = used | (1 << w)
            if not any(m2 & ~t == 0 for t in targets):
                continue
            stack.append(w)
            found = walk(w, m2)
            if found:
                return found
            stack.pop()
        return None

    return walk(a, 1 << a)


def find_maximal_tutte_path(
    g: Graph, a: int, b: int, budget: Budget | int | None = None, oracle: PathOracle | None = None
) -> Path | None:
    """Lexicographically first maximal (a,b)-path that is a Tutte path, or ``None``."""
    if a == b:
        raise InputError("endpoints must differ")
    for v in (a, b):
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range")
    budget = as_budget(budget)
    oracle = oracle or PathOracle(g, budget)
    if not oracle.sets(a).ends.keys() or not any(oracle.sets_between(a, b)):
        raise InputError(f"vertices {a} and {b} lie in different components")
    return _first_path_in(g, a, b, oracle.tutte_maximal_sets(a, b), oracle.budget)


def find_maximal_path(g: Graph, a: int, b: int, budget: Budget | int | None = None) -> Path | None:
    """Lexicographically first maximal (a,b)-path (Tutte or not)."""
    budget = as_budget(budget)
    ps = PathSets(g, a, budget)
    return _first_path_in(g, a, b, ps.maximal_sets_to(b), budget)


_TUTTE_CACHE: dict[Graph, tuple[int, int] | None] = {}
_TUTTE_CACHE_LIMIT = 200_000


def tutte_failing_pair(g: Graph, budget: Budget | int | None = None) -> tuple[int, int] | None:
    """Lexicographically smallest pair with no maximal Tutte (a,b)-path, or ``None``.

    Results are memoised per graph; a budget overrun leaves no cache entry.
    """
    if g in _TUTTE_CACHE:
        return _TUTTE_CACHE[g]
    oracle = PathOracle(g, budget)
    result = None
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not oracle.pair_is_good(a, b):
                result = (a, b)
                break
        if result:
            break
    if len(_TUTTE_CACHE) > _TUTTE_CACHE_LIMIT:
        _TUTTE_CACHE.clear()
    _TUTTE_CACHE[g] = result
    return result


def is_tutte_connected(g: Graph, budget: Budget | int | None = None) -> tuple[bool, tuple[int, int] | None]:
    """``(True, None)`` or ``(False, failing pair)``; one-vertex graphs are vacuously true."""
    pair = tutte_failing_pair(g, budget)
    return pair is None, pair


def has_hamilton_cycle(g: Graph, budget: Budget | int | None = None) -> bool:
    if g.n < 3:
        return False
    ps = PathSets(g, 0, budget)
    return bool(ps.ends.get(g.full, 0) & g.adj[0])


def is_hamilton_connected(g: Graph, budget: Budget | int | None = None) -> bool:
    if g.n <= 1:
        return True
    if not is_connected(g):
        return False
    budget = as_budget(budget)
    for a in range(g.n):
        ends = PathSets(g, a, budget).ends.get(g.full, 0)
        if ends | (1 << a) != g.full:
            return False
    return True
