"""k-closure and Tutte-closure with replayable traces.

Completion order is fixed: vertices are scanned in ascending order and the
scan restarts after every successful completion, so each input has exactly
one output and one trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import Budget, BudgetExceeded, as_budget
from .graph import Graph, complete, is_k_connected_within, local_completion
from .paths import tutte_failing_pair

FIXPOINT = "fixpoint"
COMPLETED = "completed-to-K_n"


@dataclass
class ClosureTrace:
    mode: str
    steps: list[tuple[int, int, int]] = field(default_factory=list)
    terminal: str = FIXPOINT

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "steps": [{"vertex": x, "edges_before": b, "edges_after": a} for x, b, a in self.steps],
            "terminal": self.terminal,
        }

    def replay(self, g: Graph) -> Graph:
        """Re-apply the recorded completions to ``g``."""
        if self.terminal == COMPLETED:
            return complete(g.n)
        for x, before, after in self.steps:
            if g.num_edges() != before:
                raise ValueError(f"trace does not match graph at vertex {x}")
            g = local_completion(g, x)
            if g.num_edges() != after:
                raise ValueError(f"trace does not match graph at vertex {x}")
        return g


def _complete_at(g: Graph, x: int, trace: ClosureTrace) -> Graph:
    h = local_completion(g, x)
    trace.steps.append((x, g.num_edges(), h.num_edges()))
    return h


def k_closure(g: Graph, k: int) -> tuple[Graph, ClosureTrace]:
    """Complete at vertices whose neighbourhood is non-complete and ``k``-connected, until none is left."""
    if k < 1:
        raise ValueError("k must be at least 1")
    trace = ClosureTrace(mode=f"k-closure({k})")
    progress = True
    while progress:
        progress = False
        for x in range(g.n):
            nbrs = g.adj[x]
            if g.is_clique(nbrs) or not is_k_connected_within(g, nbrs, k):
                continue
            g = _complete_at(g, x, trace)
            progress = True
            break
    return g, trace


def _tutte_closure(g: Graph, mode: str, need_2conn: bool, budget: Budget | int | None) -> tuple[Graph, ClosureTrace]:
    budget = as_budget(budget)
    trace = ClosureTrace(mode=mode)
    try:
        if tutte_failing_pair(g, budget) is None:
            trace.terminal = COMPLETED
            return complete(g.n), trace
        progress = True
        while progress:
            progress = False
            for x in range(g.n):
                nbrs = g.adj[x]
                if g.is_clique(nbrs):
                    continue
                if need_2conn and not is_k_connected_within(g, nbrs, 2):
                    continue
                h = local_completion(g, x)
                if tutte_failing_pair(h, budget) is not None:
                    g = _complete_at(g, x, trace)
                    progress = True
                    break
    except BudgetExceeded as exc:
        exc.partial = trace
        raise
    return g, trace


def tutte_closure(g: Graph, budget: Budget | int | None = None) -> tuple[Graph, ClosureTrace]:
    """The Tutte-closure: ``K_n`` for Tutte-connected input, otherwise completions
    that keep the graph non-Tutte-connected, applied while any exists."""
    return _tutte_closure(g, "tutte", False, budget)


def tutte_closure_2conn_variant(g: Graph, budget: Budget | int | None = None) -> tuple[Graph, ClosureTrace]:
    """As ``tutte_closure`` but only completing at vertices with a 2-connected neighbourhood."""
    return _tutte_closure(g, "tutte-2conn-variant", True, budget)
