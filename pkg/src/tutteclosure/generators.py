"""Seeded random claw-free graphs.

Each graph starts as ``G(n, p)`` with ``p`` drawn per graph, then the claw at
the lowest centre is repaired by local completion at that centre until no claw
is left. Every completion adds at least one edge, so the repair terminates.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graph import Graph, bits, is_connected, local_completion, square_of_cycle, square_of_path
from .krausz import maximal_cliques
from .recognition import find_claw


def repair_claws(g: Graph) -> Graph:
    while True:
        claw = find_claw(g)
        if claw is None:
            return g
        g = local_completion(g, claw[0])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_banded_graph(rng: random.Random, n: int) -> Graph:
    """Square of a path (sometimes of a cycle) grown by vertices attached to parts of maximal cliques.

    Plain ``G(n, p)`` almost never produces long good walks once 2-closed;
    these graphs do, so the walk code gets exercised.
    """
    m = rng.randint(6, n) if n >= 6 else n
    g = square_of_cycle(m) if m >= 6 and rng.random() < 0.15 else square_of_path(m)
    while g.n < n:
        clique = rng.choice(maximal_cliques(g))
        members = [v for v in bits(clique) if rng.random() < 0.7] or [next(bits(clique))]
        g = Graph.from_edges(g.n + 1, list(g.edges()) + [(v, g.n) for v in members])
    return g


def random_clawfree_generator(
    seed: int, n: int, connected: bool = False, p_range: tuple[float, float] = (0.15, 0.6),
) -> Iterator[Graph]:
    """Endless reproducible stream of claw-free graphs on ``n`` vertices.

    With ``connected`` the disconnected repairs are skipped.
    """
    rng = random.Random(seed)
    lo, hi = p_range
    while True:
        g = repair_claws(random_graph(rng, n, rng.uniform(lo, hi)))
        if connected and not is_connected(g):
            continue
        yield g


def random_clawfree_batch(seed: int, count: int, n_min: int, n_max: int, connected: bool = False) -> list[Graph]:
    """``count`` claw-free graphs with orders drawn uniformly from ``[n_min, n_max]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        g = repair_claws(random_graph(rng, n, rng.uniform(0.15, 0.6)))
        if connected and not is_connected(g):
            continue
        out.append(g)
    return out
