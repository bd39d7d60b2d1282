"""
Reduction by foliation subbundles: reducibility, reduced fluxes and
reduced metrics on the quotient chart, and basic sections.
"""

from .basic import basic_section_check, is_basic
from .reduce import (
    ReducedAlgebroid,
    effective_flux,
    reduce_H,
    reduce_metric,
    reduce_tensor,
    reducibility_check,
)
from .subbundle import FoliationSubbundle, QuotientMap, adapted_splitting_check

__all__ = [
    "FoliationSubbundle",
    "QuotientMap",
    "ReducedAlgebroid",
    "adapted_splitting_check",
    "basic_section_check",
    "effective_flux",
    "is_basic",
    "reduce_H",
    "reduce_metric",
    "reduce_tensor",
    "reducibility_check",
]
