"""
Pointwise certificates that R is a generalised isometry between V₁⁺ and V₂⁺.
"""

from typing import Dict, List, Optional
import logging

from ..core.report import SAMPLED, CheckReport
from ..exterior.sampling import SamplePlan
from ..genmetric.metric import GeneralisedMetric, vminus_graph
from ..genmetric.transverse import TransverseGeneralisedMetric
from ..reduction.subbundle import FoliationSubbundle
from ..relations.fiber import FiberSpace, FiberSubspace
from ..relations.isometry import (
    isometry_decomposition_check,
    sections_fiber,
    transverse_isometry_check,
    vplus_fiber,
)
from ..relations.qk import k_fiber, qk_fiber
from .problem import DualBackground, TDualityProblem, project_point
from .relate import relation_fiber

logger = logging.getLogger(__name__)


def _collect(name: str, reports: List[CheckReport], plan: SamplePlan) -> CheckReport:
    residuals: Dict[str, str] = {}
    for r in reports:
        residuals.update(r.residuals)
    details = dict(plan.describe())
    if reports:
        details["dims"] = reports[0].details
    return CheckReport.from_residuals(name, residuals, SAMPLED, details)


def reduction_isometry_check(
    K: FoliationSubbundle, G: GeneralisedMetric, plan: SamplePlan, name: str
) -> CheckReport:
    """
    Q(K) is a transverse generalised isometry between ϖ*G (lifted to K^⊥)
    and G on the quotient.
    """
    W = TransverseGeneralisedMetric.pullback(K, G.g_coord, G.b_coord)
    plus_lifts, minus_lifts = W.wplus_lifts(), W.wminus_lifts()
    reduced_minus = vminus_graph(G)
    zero = FiberSubspace.zero(FiberSpace.single(K.quotient_chart.dim))
    reports = []
    for p, point in enumerate(plan.points):
        q = project_point(K, point)
        reports.append(
            transverse_isometry_check(
                qk_fiber(K, point),
                sections_fiber(plus_lifts, point),
                sections_fiber(minus_lifts, point),
                vplus_fiber(G, q),
                sections_fiber(reduced_minus, q),
                K1=k_fiber(K, point),
                K2=zero,
                label=f"@point[{p}]",
            )
        )
    return _collect(name, reports, plan)


def verify_geometric_tduality(
    P: TDualityProblem, dual: DualBackground, plan: Optional[SamplePlan] = None
) -> CheckReport:
    """
    Certify R = (𝒱⁺ ∩ R) ⊕ (𝒱⁻ ∩ R) at every sample point.

    V₁⁺ is taken at ϖ₁(m) and V₂⁺ of the dual background at ϖ₂(m). Both
    reductions Q(K₁) and Q(K₂) are also certified as transverse generalised
    isometries, which is how V₁⁺ lifts into K₁^⊥ ∩ K₂^⊥.

    Returns:
        Suite "tduality.geometric".
    """
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    decompositions = []
    for p, point in enumerate(plan.points):
        R = relation_fiber(P, point).relation
        V1 = vplus_fiber(P.G1, project_point(P.K1, point))
        V2 = vplus_fiber(dual.metric, project_point(P.K2, point))
        decompositions.append(isometry_decomposition_check(R, V1, V2, label=f"@point[{p}]"))
    report = CheckReport.suite(
        "tduality.geometric",
        [
            _collect("geometric.decomposition", decompositions, plan),
            reduction_isometry_check(P.K1, P.G1, plan, "geometric.transverse_K1"),
            reduction_isometry_check(P.K2, dual.metric, plan, "geometric.transverse_K2"),
        ],
    )
    logger.info(
        f"{P.name}: geometric T-duality {'certified' if report.passed else 'fails'} "
        f"at {len(plan.points)} points"
    )
    return report
