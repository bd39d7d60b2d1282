"""
Para-Hermitian structures, generalised fluxes and the para-Buscher rules.
"""

from .check import para_check
from .fluxes import (
    FluxData,
    flux_extract,
    hcan_flux,
    l_minus_obstruction,
    sf_conditions_check,
    singleton_scan,
)
from .metric import (
    GenParaMetric,
    gen_para_metric_coordinates,
    gen_para_metric_matrix,
    para_buscher,
    para_metric_route_check,
    pullback_identity_check,
)
from .structure import ParaHermitianFrame, compatibility_check
from .swap import eta_preservation_check, swap_frame

__all__ = [
    "FluxData",
    "GenParaMetric",
    "ParaHermitianFrame",
    "compatibility_check",
    "eta_preservation_check",
    "flux_extract",
    "gen_para_metric_coordinates",
    "gen_para_metric_matrix",
    "hcan_flux",
    "l_minus_obstruction",
    "para_buscher",
    "para_check",
    "para_metric_route_check",
    "pullback_identity_check",
    "sf_conditions_check",
    "singleton_scan",
    "swap_frame",
]
