"""Graph curve matroids of finite multigraphs."""

from graphcurve.cographic import cographic_rank, cographic_rank_of_neighborhood, graphic_rank
from graphcurve.errors import (
    GenericityError,
    GraphCurveError,
    GraphInputError,
    PreconditionError,
    ResourceLimitError,
    VerificationError,
)
from graphcurve.gcmatroid import (
    GraphCurveMatroid,
    basis_containing_vertex,
    bases,
    circuits_naive,
    circuits_structured,
    graph_curve_matroid,
    is_dependent,
    is_independent,
    matroid_loops,
    rank_subset,
)
from graphcurve.graphio import gallery, parse_graph, serialize_graph
from graphcurve.matroid import (
    ExplicitMatroid,
    direct_sum,
    dual,
    from_circuits,
    is_identically_self_dual,
    is_isomorphic,
    uniform,
)
from graphcurve.multigraph import (
    Multigraph,
    components,
    connectivity_report,
    delta,
    disjoint_union,
    enumerate_trivalent_graphs,
    from_edge_list,
    is_cyclic_subset,
    two_switch,
)
from graphcurve.realization import (
    cycle_matrix,
    exact_rank,
    hyperplane_section_matroid,
    verify_bond_realization,
)

__version__ = "0.1.0"
