"""
The full T-duality pipeline.
"""

from typing import Any, Optional, Sequence
import logging

from ....core import register_component
from ....courant.sections import GeneralizedSection
from ....exterior.sampling import SamplePlan
from ....tduality.pipeline import tdualize
from ....tduality.problem import TDualityProblem, TDualityReport
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="pipelines",
    name="tdualize",
    version="1.0.0",
    description="Reducibility, relation, conditions, Buscher rules and the isometry certificate",
    metadata={"inputs": ["problem", "plan", "sections"], "outputs": "TDualityReport"},
)
class TDualizeComponent(StageComponent):
    """
    Configuration:
        - report.include_timings (bool): Record seconds per stage (default: false)
        - sampling.*: Plan used when none is passed
    """

    NAME = "tdualize"

    def run(
        self,
        problem: TDualityProblem,
        plan: Optional[SamplePlan] = None,
        sections: Sequence[GeneralizedSection] = (),
        **kwargs: Any,
    ) -> TDualityReport:
        return tdualize(
            problem,
            plan or self.sample_plan(problem.chart.dim),
            sections,
            timings=bool(self.get_config("report.include_timings", False)),
        )
