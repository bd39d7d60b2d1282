"""
The T-duality relation R = Q(K₂)∘Q(K₁)ᵀ and its rank data.
"""

from typing import Any, Optional
import logging

from ....core import register_component
from ....exterior.sampling import SamplePlan
from ....tduality.problem import TDualityProblem
from ....tduality.relate import TDualityRelation, relate
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="pipelines",
    name="relate",
    version="1.0.0",
    description="Generators of the T-duality relation and its Dirac structure checks",
    metadata={"inputs": ["problem", "plan"], "outputs": "TDualityRelation"},
)
class RelateComponent(StageComponent):
    """
    Raises:
        RelationError: If K₁ ∩ K₂ has non-constant rank over the plan.
    """

    NAME = "relate"

    def run(
        self, problem: TDualityProblem, plan: Optional[SamplePlan] = None, **kwargs: Any
    ) -> TDualityRelation:
        return relate(problem, plan or self.sample_plan(problem.chart.dim))
