"""
Reduction of the twisted Courant algebroid to a quotient chart.
"""

from typing import Any
import logging

from ....core import register_component
from ....courant.algebroid import TwistedCourant
from ....reduction.reduce import ReducedAlgebroid, reduce_H
from ....reduction.subbundle import FoliationSubbundle
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="pipelines",
    name="reduce",
    version="1.0.0",
    description="Reduced flux H̄ on the quotient by a foliation subbundle",
    metadata={"inputs": ["courant", "subbundle"], "outputs": "ReducedAlgebroid"},
)
class ReduceComponent(StageComponent):
    """
    Raises:
        ReductionError: If the subbundle is not reducible.
    """

    NAME = "reduce"

    def run(
        self, courant: TwistedCourant, subbundle: FoliationSubbundle, **kwargs: Any
    ) -> ReducedAlgebroid:
        return reduce_H(courant, subbundle)
