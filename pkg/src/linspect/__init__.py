"""Exact linear intersection numbers of graphs.

``v(G)`` is the fewest points of a linear hypergraph whose intersection graph
is ``G``; ``vbar(G)`` is the fewest non-trivial cliques partitioning the edges.
"""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    degree_profile,
    disjoint_sum,
    distance,
    empty_graph,
    from_edge_list,
    is_isomorphic,
    neighborhood,
    path_graph,
)
from .cliques import (  # noqa: E402
    chromatic_number,
    clique_cover_number,
    clique_graph,
    clique_number,
    enumerate_cliques,
    flag_sum,
    independence_number,
    k_value,
    reduced_v_via_clique_graph,
)
from .hypergraph import (  # noqa: E402
    L1Violation,
    L2Violation,
    LinearHypergraph,
    chromatic_index,
    clique_index,
    dual_realization,
    intersection_graph,
    is_intersecting,
    validate,
)
from .solver import (  # noqa: E402
    Budget,
    BudgetExceeded,
    CliqueCover,
    bounds,
    edge_delete_check,
    linear_intersection_number,
    reduced_linear_intersection_number,
    verify_cover,
    verify_efl,
)
from .oracle import brute_force_v  # noqa: E402
from .classify import classify_vertices, closed_form_v, is_almost_triangle_free  # noqa: E402
from .constructions import (  # noqa: E402
    collapse,
    delete_edge,
    join_at_vertex,
    near_pencil,
    remove_clique,
)
from .io import from_graph6, parse_graph, to_graph6  # noqa: E402
