"""
Reducibility of a foliation subbundle, with the adapted splitting check.
"""

from typing import Any
import logging

from ....core import register_component
from ....core.report import CheckReport
from ....courant.algebroid import TwistedCourant
from ....reduction.reduce import reducibility_check
from ....reduction.subbundle import FoliationSubbundle, adapted_splitting_check
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="checks",
    name="reducibility",
    version="1.0.0",
    description="Whether the flux descends along a foliation subbundle",
    metadata={"inputs": ["courant", "subbundle"], "outputs": "CheckReport"},
)
class ReducibilityComponent(StageComponent):
    """
    Configuration:
        - adapted_splitting (bool): Also check σ(ρ(K)) ⊆ K (default: true)
    """

    NAME = "reducibility"

    def run(
        self, courant: TwistedCourant, subbundle: FoliationSubbundle, **kwargs: Any
    ) -> CheckReport:
        children = [reducibility_check(courant, subbundle)]
        if self.get_config("adapted_splitting", True):
            children.append(adapted_splitting_check(subbundle))
        return CheckReport.suite(
            f"check.reducible_{subbundle.name}", children, details={"K": subbundle.describe()}
        )
