"""Claw-freeness, the forbidden family for line graphs of multigraphs, and related recognizers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InconsistencyError
from .graph import (
    Graph,
    bits,
    is_k_connected_within,
    popcount,
    square_of_cycle,
    write_graph6,
)
from .isomorphism import are_isomorphic, find_induced_copy, has_induced_copy
from .krausz import find_krausz_cover

__all__ = [
    "ForbiddenFamily",
    "claw_through",
    "closure_violation",
    "derive_forbidden_family",
    "find_claw",
    "find_induced_copy",
    "is_2_closed",
    "is_claw_free",
    "is_line_graph_of_multigraph",
    "is_square_of_cycle",
]


def _claw_at(g: Graph, c: int) -> tuple[int, int, int] | None:
    nbrs = g.adj[c]
    for u in bits(nbrs):
        rest = nbrs & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(rest):
            third = rest & ~g.adj[v] & ~((1 << (v + 1)) - 1)
            if third:
                return u, v, (third & -third).bit_length() - 1
    return None


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """First induced ``K_{1,3}`` as ``(centre, leaf, leaf, leaf)``, or ``None``."""
    for c in range(g.n):
        leaves = _claw_at(g, c)
        if leaves:
            return (c, *leaves)
    return None


def claw_through(g: Graph, v: int) -> bool:
    """Whether some induced claw uses vertex ``v`` (as centre or leaf)."""
    if _claw_at(g, v):
        return True
    for c in bits(g.adj[v]):
        # v as a leaf: two more neighbours of c, non-adjacent to v and each other
        rest = g.adj[c] & ~g.adj[v] & ~(1 << v)
        for u in bits(rest):
            if rest & ~g.adj[u] & ~(1 << u):
                return True
    return False


def is_claw_free(g: Graph) -> tuple[bool, frozenset[int] | None]:
    """``(True, None)`` or ``(False, witness 4-set)``."""
    claw = find_claw(g)
    if claw is None:
        return True, None
    return False, frozenset(claw)


def is_square_of_cycle(g: Graph) -> int | None:
    """``n`` when ``g`` is isomorphic to the square of ``C_n`` with ``n = |V(g)|``."""
    n = g.n
    if n < 3:
        return None
    if n <= 5:
        return n if g.is_complete() else None
    if any(g.degree(v) != 4 for v in range(n)):
        return None
    return n if are_isomorphic(g, square_of_cycle(n)) else None


def closure_violation(g: Graph, k: int) -> int | None:
    """First vertex whose neighbourhood induces a non-complete ``k``-connected graph."""
    for x in range(g.n):
        nbrs = g.adj[x]
        if g.is_clique(nbrs):
            continue
        if is_k_connected_within(g, nbrs, k):
            return x
    return None


def is_2_closed(g: Graph) -> tuple[bool, int | None]:
    x = closure_violation(g, 2)
    return x is None, x


@lru_cache(maxsize=4096)
def _multigraph_line(g: Graph) -> bool:
    return find_krausz_cover(g, 2) is not None


@dataclass(frozen=True)
class ForbiddenFamily:
    """Induced-minimal graphs without a rank-2 Krausz cover, in a stable order."""

    graphs: tuple[Graph, ...]
    provenance: dict = field(default_factory=dict, compare=False)

    def graph6(self) -> list[str]:
        return [write_graph6(h) for h in self.graphs]

    def provenance_json(self) -> str:
        return json.dumps(self.provenance, sort_keys=True)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


def _is_minimal_nonmember(g: Graph) -> bool:
    if _multigraph_line(g):
        return False
    for v in range(g.n):
        sub, _ = g.remove_vertices(1 << v)
        if not _multigraph_line(sub):
            return False
    return True


EXPECTED_FAMILY_SIZE = 7


@lru_cache(maxsize=None)
def derive_forbidden_family(n_max: int = 7) -> ForbiddenFamily:
    """Enumerate every graph up to ``n_max`` vertices and keep the minimal non-members.

    Membership is decided by the rank-2 Krausz search. The family must have
    exactly seven members once ``n_max >= 7`` (its largest members have seven
    vertices); any other count raises ``InconsistencyError``. Use
    ``n_max=8`` to confirm that no member appears one order later.
    """
    from .enumeration import graphs_on

    members: list[Graph] = []
    counts = {}
    for n in range(n_max + 1):
        level = graphs_on(n)
        found = [g for g in level if _is_minimal_nonmember(g)]
        counts[str(n)] = {
            "graphs": len(level),
            "non_members": sum(1 for g in level if not _multigraph_line(g)),
            "minimal": len(found),
        }
        members.extend(found)
    members.sort(key=lambda h: (h.n, h.num_edges(), write_graph6(h)))
    family = ForbiddenFamily(
        tuple(members),
        {"enumeration_bound": n_max, "per_order": counts, "oracle": "rank-2 Krausz cover search",
         "numbering": "artifact order (n, edges, graph6); source numbering unknown"},
    )
    if n_max >= 7 and len(family) != EXPECTED_FAMILY_SIZE:
        raise InconsistencyError(
            f"derived {len(family)} minimal graphs (orders {[h.n for h in family]}), "
            f"expected {EXPECTED_FAMILY_SIZE}"
        )
    return family


def is_line_graph_of_multigraph(g: Graph) -> bool:
    """Decide membership by the forbidden-family scan and by the rank-2 cover search.

    The two characterizations must agree; a disagreement raises
    ``InconsistencyError``.
    """
    family = derive_forbidden_family()
    free = not any(has_induced_copy(g, h) for h in family)
    covered = find_krausz_cover(g, 2) is not None
    if free != covered:
        raise InconsistencyError(
            f"{write_graph6(g)}: forbidden-family scan says {free}, Krausz search says {covered}"
        )
    return covered


def forbidden_members_present(g: Graph, family: ForbiddenFamily | None = None) -> list[int]:
    """Indices of family members occurring as induced subgraphs of ``g``."""
    family = family or derive_forbidden_family()
    return [i for i, h in enumerate(family) if has_induced_copy(g, h)]


def max_independent_in_neighbourhood(g: Graph, x: int) -> int:
    """Independence number of ``<N(x)>`` by plain branching (small neighbourhoods only)."""

    def best(pool: int) -> int:
        if not pool:
            return 0
        v = (pool & -pool).bit_length() - 1
        return max(best(pool & ~(1 << v)), 1 + best(pool & ~g.adj[v] & ~(1 << v)))

    return best(g.adj[x])


def is_k1k_free(g: Graph, k: int) -> bool:
    return all(max_independent_in_neighbourhood(g, x) < k for x in range(g.n))
