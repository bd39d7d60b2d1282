"""
Basic sections: e ∈ Γ(K^⊥) with ⟦Γ(K), e⟧ ⊆ Γ(K).
"""

from typing import Optional
import logging

from ..core.report import CheckReport
from ..courant.algebroid import TwistedCourant, dorfman
from ..courant.sections import GeneralizedSection, pairing
from ..exterior.polynomial import format_polynomial
from .subbundle import FoliationSubbundle

logger = logging.getLogger(__name__)


def basic_section_check(
    K: FoliationSubbundle, e: GeneralizedSection, E: Optional[TwistedCourant] = None
) -> CheckReport:
    """
    Whether e is basic with respect to K.

    Args:
        K: The subbundle.
        e: The section.
        E: The ambient algebroid (untwisted when omitted).

    Returns:
        Report "reduction.basic_section" whose residuals name the pairings
        ⟨e, k_i⟩ ≠ 0 and the brackets ⟦k_i, e⟧ outside K.

    Example:
        >>> chart = Chart(("x", "y"))
        >>> K = FoliationSubbundle(Frame.coordinate(chart), ["Z_y"], ["y"])
        >>> x = chart.gen("x")
        >>> e = GeneralizedSection.from_components(chart, [1, 0], [x, 0])
        >>> basic_section_check(K, e).passed
        True
    """
    E = E if E is not None else TwistedCourant.untwisted(K.chart)
    residuals = {}
    for i, k in zip(K.span, K.generators()):
        label = K.frame.labels[i]
        value = pairing(e, k)
        if value:
            residuals[f"<e, {label}>"] = format_polynomial(value)
        bracket = dorfman(E, k, e)
        if not K.contains(bracket):
            residuals[f"[[{label}, e]]"] = bracket.to_text()
    return CheckReport.from_residuals("reduction.basic_section", residuals)


def is_basic(
    K: FoliationSubbundle, e: GeneralizedSection, E: Optional[TwistedCourant] = None
) -> bool:
    return basic_section_check(K, e, E).passed
