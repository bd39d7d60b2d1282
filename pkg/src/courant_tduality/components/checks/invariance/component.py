"""
D₁-invariance of the metric on Q₁ and compatibility of the splittings.
"""

from typing import Any, Optional
import logging

from ....core import register_component
from ....core.report import CheckReport
from ....exterior.sampling import SamplePlan
from ....tduality.conditions import invariance_checks
from ....tduality.problem import TDualityProblem
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="checks",
    name="invariance",
    version="1.0.0",
    description="Invariance of (g, b) along Iso(V1+) and of B along its lifts",
    metadata={"inputs": ["problem", "plan"], "outputs": "CheckReport"},
)
class InvarianceComponent(StageComponent):
    """
    Configuration:
        - sampling.seed, sampling.samples, sampling.box: Plan used when none is passed
    """

    NAME = "invariance"

    def run(
        self, problem: TDualityProblem, plan: Optional[SamplePlan] = None, **kwargs: Any
    ) -> CheckReport:
        plan = plan or self.sample_plan(problem.chart.dim)
        return invariance_checks(problem, plan)
