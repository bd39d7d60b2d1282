"""
Classical generalised isometries.

Φ = φ̄ ∘ e^B maps V₁⁺ = gr(g₁ + b₁) onto V₂⁺ = gr(g₂ + b₂) iff
φ*g₂ = g₁ and φ*b₂ = b₁ + B. The check computes this pullback route and,
independently, the conjugation route τ₂∘Φ = Φ∘τ₁ on coordinate basis
sections, and records whether the two agree.
"""

from typing import Dict, List
import logging

from ..core.report import CheckReport
from ..courant.isomorphism import CourantIso, iso_apply
from ..courant.sections import GeneralizedSection
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm
from ..exterior.polynomial import format_polynomial
from ..exterior.tensors import two_form_matrix
from .metric import GeneralisedMetric, tau_apply

logger = logging.getLogger(__name__)


def _matrix_residuals(label: str, diff) -> Dict[str, str]:
    n, m = diff.shape
    return {
        f"{label}[{i},{j}]": format_polynomial(diff[i, j])
        for i in range(n)
        for j in range(m)
        if diff[i, j]
    }


def coordinate_basis_sections(chart) -> List[GeneralizedSection]:
    """∂_1, ..., ∂_n, dx^1, ..., dx^n as sections."""
    vectors = [GeneralizedSection.of_vector(VectorField.coordinate(chart, c)) for c in chart.coords]
    forms = [
        GeneralizedSection.of_form(DifferentialForm.differential(chart, c)) for c in chart.coords
    ]
    return vectors + forms


def pullback_route(Phi: CourantIso, G1: GeneralisedMetric, G2: GeneralisedMetric) -> CheckReport:
    """φ*g₂ = g₁ and φ*b₂ = b₁ + B on coordinate matrices."""
    Phi.source.chart.check_same(G1.chart)
    Phi.target.chart.check_same(G2.chart)
    g_diff = Phi.phi.pullback_tensor(G2.g_coord) - G1.g_coord
    b_diff = Phi.phi.pullback_tensor(G2.b_coord) - G1.b_coord - two_form_matrix(Phi.B)
    residuals = _matrix_residuals("phi*g2 - g1", g_diff)
    residuals.update(_matrix_residuals("phi*b2 - b1 - B", b_diff))
    return CheckReport.from_residuals("isometry.pullback", residuals)


def conjugation_route(
    Phi: CourantIso, G1: GeneralisedMetric, G2: GeneralisedMetric
) -> CheckReport:
    """τ₂(Φe) = Φ(τ₁e) on every coordinate basis section e."""
    residuals = {}
    for k, e in enumerate(coordinate_basis_sections(G1.chart)):
        diff = tau_apply(G2, iso_apply(Phi, e)) - iso_apply(Phi, tau_apply(G1, e))
        if not diff.is_zero():
            residuals[f"tau2 Phi - Phi tau1 [basis {k}]"] = diff.to_text()
    return CheckReport.from_residuals("isometry.tau_conjugation", residuals)


def classical_isometry_check(
    Phi: CourantIso, G1: GeneralisedMetric, G2: GeneralisedMetric
) -> CheckReport:
    """
    Decide whether Φ is a generalised isometry between G1 and G2.

    Args:
        Phi: Classical Courant algebroid isomorphism φ̄ ∘ e^B.
        G1: Generalised metric on the source chart.
        G2: Generalised metric on the target chart.

    Returns:
        Suite "genmetric.classical_isometry" with children "isometry.pullback"
        and "isometry.tau_conjugation"; details["routes_agree"] records whether
        both routes gave the same verdict.
    """
    by_pullback = pullback_route(Phi, G1, G2)
    by_tau = conjugation_route(Phi, G1, G2)
    agree = by_pullback.passed == by_tau.passed
    if not agree:
        logger.warning("Pullback and τ-conjugation routes disagree on the isometry verdict")
    return CheckReport.suite(
        "genmetric.classical_isometry", [by_pullback, by_tau], details={"routes_agree": agree}
    )
