"""
Para-Hermitian T-duality conditions: fluxes, admissibility and para-Buscher.
"""

from typing import Any, Dict, Iterable, Optional, Tuple
import logging

from ....core import register_component
from ....core.report import CheckReport
from ....exterior.diffeo import DiffeoMap
from ....exterior.sampling import SamplePlan
from ....para_hermitian.check import para_check
from ....para_hermitian.metric import GenParaMetric
from ....para_hermitian.structure import ParaHermitianFrame
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="checks",
    name="para_conditions",
    version="1.0.0",
    description="Generalised fluxes and admissible duality directions of a para-Hermitian frame",
    metadata={
        "inputs": ["frame", "duality", "phi", "metric", "plan"],
        "outputs": "(CheckReport, dict)",
    },
)
class ParaConditionsComponent(StageComponent):
    """
    Configuration:
        - scan_directions (bool): Report every single L₊ direction's
          admissibility (default: true)
    """

    NAME = "para_conditions"

    def run(
        self,
        frame: ParaHermitianFrame,
        duality: Iterable[Any],
        phi: Optional[DiffeoMap] = None,
        metric: Optional[GenParaMetric] = None,
        plan: Optional[SamplePlan] = None,
        **kwargs: Any,
    ) -> Tuple[CheckReport, Dict[str, Any]]:
        report, results = para_check(frame, duality, phi, metric, plan=plan)
        if not self.get_config("scan_directions", True):
            results.pop("admissible_directions", None)
        return report, results
