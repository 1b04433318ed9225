"""Exact enumeration and verification of maximum intersecting families of
independent sets in rook's graphs and small general graphs."""

from .counts import (
    binomial,
    cyclic_order_count,
    interval_occurrence_count,
    rook_placement_count,
    rook_star_count,
)
from .cycles import (
    CyclicOrder,
    DoubleCount,
    WindowReport,
    all_intervals,
    canonical_order,
    check_interval_windows,
    count_orders_containing,
    diagonal_interval,
    enumerate_cyclic_orders,
    interval_double_count,
    interval_start,
    max_intersecting_intervals,
    max_intersecting_intervals_witness,
    restrict_to_order,
)
from .errors import InputError, ResourceLimitError
from .graphs import (
    SimpleGraph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_independent,
    independence_number,
    is_well_covered,
    lexicographic_product,
    load_graph,
    maximal_independent_sets,
    min_maximal_independent_size,
    path_graph,
    save_graph,
)
from .rook import (
    Family,
    canonical_placement,
    enumerate_placements,
    is_intersecting,
    load_family,
    placements_intersect,
    random_intersecting_family,
    random_placement,
    row_projection,
    save_family,
    star_family,
)
from .search import (
    EkrReport,
    LexCheckResult,
    SearchBudget,
    graph_ekr_report,
    holroyd_talbot_sweep,
    lex_product_check,
    max_intersecting_family,
    rook_ekr_report,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "cyclic_order_count",
    "interval_occurrence_count",
    "rook_placement_count",
    "rook_star_count",
    "CyclicOrder",
    "DoubleCount",
    "WindowReport",
    "all_intervals",
    "canonical_order",
    "check_interval_windows",
    "count_orders_containing",
    "diagonal_interval",
    "enumerate_cyclic_orders",
    "interval_double_count",
    "interval_start",
    "max_intersecting_intervals",
    "max_intersecting_intervals_witness",
    "restrict_to_order",
    "InputError",
    "ResourceLimitError",
    "SimpleGraph",
    "cartesian_product",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "enumerate_independent",
    "independence_number",
    "is_well_covered",
    "lexicographic_product",
    "load_graph",
    "maximal_independent_sets",
    "min_maximal_independent_size",
    "path_graph",
    "save_graph",
    "Family",
    "canonical_placement",
    "enumerate_placements",
    "is_intersecting",
    "load_family",
    "placements_intersect",
    "random_intersecting_family",
    "random_placement",
    "row_projection",
    "save_family",
    "star_family",
    "EkrReport",
    "LexCheckResult",
    "SearchBudget",
    "graph_ekr_report",
    "holroyd_talbot_sweep",
    "lex_product_check",
    "max_intersecting_family",
    "rook_ekr_report",
]
