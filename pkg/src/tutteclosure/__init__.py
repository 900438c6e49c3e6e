"""Claw-free graphs, Tutte paths, Tutte-closure and rank-3 line-graph covers.

The public surface is re-exported here; see the submodules for the rest.
"""

from .closure import ClosureTrace, k_closure, tutte_closure, tutte_closure_2conn_variant
from .errors import Budget, BudgetExceeded, Counterexample, InconsistencyError, InputError
from .goodwalk import GoodWalk, cover_2closed, end_cliques, extract_interior_paths, find_good_walks, goodwalk_graphs
from .graph import (
    Graph,
    components,
    induced_subgraph,
    is_k_connected,
    local_completion,
    minimum_vertex_cuts,
    neighborhood,
    parse_graph6,
    vertex_connectivity,
    write_graph6,
)
from .isomorphism import find_induced_copy
from .krausz import (
    CliqueSystem,
    Hypergraph,
    find_krausz_cover,
    hypergraph_from_cover,
    line_graph_of_hypergraph,
    verify_cover,
)
from .paths import (
    enumerate_ab_paths,
    find_maximal_tutte_path,
    is_maximal_ab_path,
    is_tutte_connected,
    is_tutte_cycle,
    is_tutte_path,
)
from .recognition import (
    ForbiddenFamily,
    derive_forbidden_family,
    is_2_closed,
    is_claw_free,
    is_line_graph_of_multigraph,
    is_square_of_cycle,
)
from .theorem import (
    AbcPartition,
    VxProfile,
    abc_partition,
    check_cmaximal,
    choose_tutte_path_avoiding_v0,
    cover_tutte_closure,
    reroute_once,
    vx_profile,
)
from .generators import random_clawfree_generator

__all__ = [name for name in dir() if not name.startswith("_")]
