"""
T-duality between quotients of a doubled chart: the relation R, the
conditions making it a generalised isometry and the Buscher rules.
"""

from .buscher import (
    buscher_check,
    dual_background,
    dual_frame_components,
    duality_map,
    lift_project_sections,
    lift_section,
    metric_route_check,
    reverse_background,
    round_trip_check,
    section_round_trip,
)
from .conditions import (
    b_decomposition_check,
    inclusion_checks,
    invariance_checks,
    iso_lift,
    mixing_check,
    morita_check,
)
from .pipeline import tdualize
from .problem import DualBackground, IndexRoles, TDualityProblem, TDualityReport, project_point
from .relate import (
    TDualityRelation,
    perp_generators,
    rank_law,
    relate,
    relation_fiber,
    relation_generators,
)
from .verify import reduction_isometry_check, verify_geometric_tduality

__all__ = [
    "DualBackground",
    "IndexRoles",
    "TDualityProblem",
    "TDualityRelation",
    "TDualityReport",
    "b_decomposition_check",
    "buscher_check",
    "dual_background",
    "dual_frame_components",
    "duality_map",
    "inclusion_checks",
    "invariance_checks",
    "iso_lift",
    "lift_project_sections",
    "lift_section",
    "metric_route_check",
    "mixing_check",
    "morita_check",
    "perp_generators",
    "project_point",
    "rank_law",
    "reduction_isometry_check",
    "relate",
    "relation_fiber",
    "relation_generators",
    "reverse_background",
    "round_trip_check",
    "section_round_trip",
    "tdualize",
    "verify_geometric_tduality",
]
