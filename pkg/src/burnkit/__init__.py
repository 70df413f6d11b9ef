"""Graph burning and connected domination toolkit."""

from .burning import (
    BoundsReport,
    BurningSchedule,
    burning_number_exact,
    burning_number_oracle,
    coverage_lower_bound,
    greedy_burning,
    lift_schedule,
    reference_bounds,
    verify_schedule,
)
from .domination import (
    GrowthTrace,
    HopDomWitness,
    burn_via_mindeg,
    burn_via_weakdeg,
    connected_2hop_dominating,
    greedy_cds,
    nonleaf_cds,
    verify_hop_domination,
)
from .graph import (
    UNREACHABLE,
    DistanceMap,
    Graph,
    GraphError,
    ball,
    induced_subgraph,
    is_connected,
    min_degree,
    multi_source_bfs,
)
from .reduction import (
    MultiGraph,
    ReductionTrace,
    graph_value,
    lift_cds,
    reduce_to_core,
    simplify,
    value_monotone_check,
)

__version__ = "0.1.0"
