"""
Reduction of (TM ⊕ T*M, H) by a foliation subbundle K.

For K = T𝓕 ⊕ 0 the effective flux is H; for a shifted K = e^{−B}T𝓕 it
is H − dB, since e^B carries K back to T𝓕 ⊕ 0 and H to H − dB. The
reduced flux is the unique H̄ on the quotient chart with ϖ*H̄ = H_eff.
"""

from dataclasses import dataclass
from typing import Any, Dict
import logging

from ..core.exceptions import ReductionError
from ..core.report import CheckReport
from ..courant.algebroid import TwistedCourant
from ..exterior.chart import Chart
from ..exterior.forms import DifferentialForm, ext_d, interior
from ..exterior.matrix import PolyMatrix
from ..genmetric.metric import GeneralisedMetric
from ..genmetric.transverse import TransverseGeneralisedMetric
from .subbundle import FoliationSubbundle, adapted_splitting_check

logger = logging.getLogger(__name__)


def effective_flux(E: TwistedCourant, K: FoliationSubbundle) -> DifferentialForm:
    """H, or H − dB when K is shifted by B."""
    E.chart.check_same(K.chart)
    if K.is_shifted:
        return E.H - ext_d(K.shift)
    return E.H


def reducibility_check(E: TwistedCourant, K: FoliationSubbundle) -> CheckReport:
    """
    Whether E reduces by K.

    Checks ι_{Z_i} H_eff = 0 for every generator Z_i of ρ(K) and that H_eff
    has no fiber differentials and no fiber-coordinate dependence.

    Returns:
        Suite "reduction.reducibility" with children "reduction.interior",
        "reduction.basic_flux", "reduction.anchor" and "reduction.adapted_splitting".
    """
    H = effective_flux(E, K)
    interior_res = {}
    for i, Z in zip(K.span, K.anchor_fields()):
        contracted = interior(Z, H)
        if not contracted.is_zero():
            interior_res[f"iota({K.frame.labels[i]}) H"] = contracted.to_text()
    basic = CheckReport.from_residuals("reduction.basic_flux", K.quotient.form_obstructions(H))
    report = CheckReport.suite(
        "reduction.reducibility",
        [
            CheckReport.from_residuals("reduction.interior", interior_res),
            basic,
            K.anchor_report(),
            adapted_splitting_check(K),
        ],
        details={"K": K.describe(), "H_eff": H.to_text()},
    )
    logger.info(f"Reducibility of {K.name}: {'pass' if report.passed else 'fail'}")
    return report


@dataclass(frozen=True)
class ReducedAlgebroid:
    """
    (TQ ⊕ T*Q, H̄) obtained by reducing by K.

    Attributes:
        K: The subbundle reduced by.
        quotient_chart: Chart of Q.
        H_reduced: Closed 3-form with ϖ*H̄ = H_eff.
    """

    K: FoliationSubbundle
    quotient_chart: Chart
    H_reduced: DifferentialForm

    @property
    def courant(self) -> TwistedCourant:
        return TwistedCourant(self.quotient_chart, self.H_reduced)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "quotient_chart": list(self.quotient_chart.coords),
            "H": self.H_reduced.to_terms(),
        }


def reduce_H(E: TwistedCourant, K: FoliationSubbundle) -> ReducedAlgebroid:
    """
    Reduce the flux to the quotient chart.

    Raises:
        ReductionError: If reducibility fails, or the round trip ϖ*H̄ = H_eff
            or dH̄ = 0 does not hold.
    """
    report = reducibility_check(E, K)
    if not report.passed:
        reasons = {k: v for f in report.failures() for k, v in f.residuals.items()}
        raise ReductionError(f"{K.name} is not reducible: {reasons}")
    H = effective_flux(E, K)
    H_bar = K.quotient.push_form(H)
    if K.quotient.pull_form(H_bar) != H:
        raise ReductionError(f"Pullback of the reduced flux differs from {H.to_text()}")
    if not ext_d(H_bar).is_zero():
        raise ReductionError(f"Reduced flux is not closed: {ext_d(H_bar).to_text()}")
    logger.info(f"Reduced flux on {K.quotient_chart}: {H_bar.to_text()}")
    return ReducedAlgebroid(K, K.quotient_chart, H_bar)


def reduce_tensor(K: FoliationSubbundle, t: PolyMatrix, what: str = "tensor") -> PolyMatrix:
    """
    Restrict a coordinate bilinear form to the quotient chart, verifying the round trip.

    Raises:
        ReductionError: If t has fiber entries, fiber dependence, or the round trip fails.
    """
    reduced = K.quotient.push_tensor(t)
    if K.quotient.pull_tensor(reduced) != t:
        raise ReductionError(f"Pullback of the reduced {what} differs from the input")
    return reduced


def reduce_metric(W: TransverseGeneralisedMetric) -> GeneralisedMetric:
    """
    The quotient generalised metric (ḡ, b̄) with ϖ*ḡ = g and ϖ*b̄ = b.

    The result is in coordinates of the quotient chart.

    Raises:
        ReductionError: If g or b has fiber entries or fiber dependence.
    """
    K = W.K
    g_bar = reduce_tensor(K, W.g_coord, "metric")
    b_bar = reduce_tensor(K, W.b_coord, "B-field")
    logger.info(f"Reduced metric on {K.quotient_chart}: g = {g_bar.to_text()}")
    return GeneralisedMetric(g_bar, b_bar)
