"""
Generalised metrics, their τ involutions and classical generalised isometries,
plus transverse generalised metrics with a kernel K.
"""

from .isometry import classical_isometry_check, conjugation_route, pullback_route
from .metric import (
    GeneralisedMetric,
    decompose,
    gm_matrix,
    metric_check,
    orthogonality_check,
    positivity_check,
    tau_apply,
    tau_involution_check,
    tau_matrix,
    vminus_graph,
    vplus_graph,
)
from .transverse import TransverseGeneralisedMetric, transverse_check

__all__ = [
    "GeneralisedMetric",
    "TransverseGeneralisedMetric",
    "classical_isometry_check",
    "conjugation_route",
    "decompose",
    "gm_matrix",
    "metric_check",
    "orthogonality_check",
    "positivity_check",
    "pullback_route",
    "tau_apply",
    "tau_involution_check",
    "tau_matrix",
    "transverse_check",
    "vminus_graph",
    "vplus_graph",
]
