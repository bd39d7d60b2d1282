"""
The T-duality pipeline: reducibility, relation, topological and geometric
conditions, Buscher rules and the final certificate.
"""

from typing import Optional, Sequence
import logging
import time

from ..core.report import CheckReport
from ..courant.sections import GeneralizedSection
from ..exterior.sampling import SamplePlan
from ..genmetric.metric import metric_check
from ..reduction.reduce import reduce_H, reducibility_check
from .buscher import buscher_check, dual_background, section_round_trip
from .conditions import b_decomposition_check, invariance_checks, morita_check
from .problem import TDualityProblem, TDualityReport
from .relate import relate
from .verify import verify_geometric_tduality

logger = logging.getLogger(__name__)


def tdualize(
    P: TDualityProblem,
    plan: Optional[SamplePlan] = None,
    sections: Sequence[GeneralizedSection] = (),
    timings: bool = False,
) -> TDualityReport:
    """
    Run every stage on a problem and compute the dual background when allowed.

    Stages stop before the Buscher rules as soon as a verdict fails; the
    report then carries the failing checks and no dual background.

    Args:
        P: The problem.
        plan: Sample points on M.
        sections: Sections on Q₁ whose image under R is reported and sent
            back through the reversed problem.
        timings: Record wall-clock seconds per stage under results["timings"].

    Raises:
        TDualityError: If a stage cannot run on the given data.
        RelationError: If K₁ ∩ K₂ has non-constant rank.
    """
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    report = TDualityReport(problem=P.name)
    clock = {}

    def stage(name: str, fn):
        start = time.perf_counter()
        logger.info(f"{P.name}: stage {name}")
        out = fn()
        clock[name] = round(time.perf_counter() - start, 3)
        return out

    for key, K in (("K1", P.K1), ("K2", P.K2)):
        red = stage(f"reducible_{key}", lambda K=K: reducibility_check(P.E, K))
        report.checks.append(CheckReport.suite(f"tduality.reducible_{key}", [red]))
    relation = stage("relate", lambda: relate(P, plan))
    report.checks.append(relation.report)
    report.results["relation"] = relation.to_dict()
    report.checks.append(stage("b_decomposition", lambda: b_decomposition_check(P, plan)))
    report.checks.append(stage("invariance", lambda: invariance_checks(P, plan)))
    report.checks.append(stage("morita", lambda: morita_check(P)))
    report.checks.append(
        stage("metric", lambda: CheckReport.suite("tduality.metric", [metric_check(P.G1, plan)]))
    )
    if report.passed:
        dual = stage("dual_background", lambda: dual_background(P))
        report.dual = dual
        report.reduced["Q1"] = stage("reduce_Q1", lambda: reduce_H(P.E, P.K1))
        report.reduced["Q2"] = stage("reduce_Q2", lambda: reduce_H(P.E, P.K2))
        report.checks.append(stage("geometric", lambda: verify_geometric_tduality(P, dual, plan)))
        report.checks.append(stage("buscher", lambda: buscher_check(P, dual, plan)))
        if sections:
            report.checks.append(
                stage("sections", lambda: section_round_trip(P, dual, sections))
            )
    else:
        failed = [c.name for c in report.checks if not c.passed]
        logger.warning(f"{P.name}: no dual background, failing stages {failed}")
    if timings:
        report.results["timings"] = clock
    logger.info(f"{P.name}: T-duality {'established' if report.passed else 'not established'}")
    return report
