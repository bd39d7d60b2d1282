"""
Courant algebroid axiom suite on seeded random sections.
"""

from typing import Any, Optional
import logging

from ....core import register_component
from ....core.report import CheckReport
from ....courant.algebroid import TwistedCourant
from ....courant.axioms import AXIOMS, courant_axioms_check, sample_triples
from ....utils.validators import validate_choice, validate_range
from ...stage import StageComponent

logger = logging.getLogger(__name__)


@register_component(
    category="checks",
    name="courant_axioms",
    version="1.0.0",
    description="Courant algebroid axioms on seeded random polynomial sections",
    metadata={"inputs": ["courant"], "outputs": "CheckReport", "tags": ["courant", "axioms"]},
)
class CourantAxiomsComponent(StageComponent):
    """
    Run the axiom suite on random section triples.

    Configuration:
        - random_sections.count (int): Number of triples (default: 100)
        - random_sections.max_degree (int): Degree bound of the coefficients (default: 2)
        - random_sections.coefficient_bound (int): |numerator| bound (default: 9)
        - sampling.seed (int): Seed of the random triples
        - axioms (list): Subset of the axioms to run (default: all)

    Example:
        >>> bench = Workbench()
        >>> report = bench.execute_component("checks", "courant_axioms", courant=E)
    """

    NAME = "courant_axioms"

    def validate(self) -> None:
        validate_range(
            self.get_config("random_sections.count", 100),
            min_value=1,
            field="random_sections.count",
        )
        validate_range(
            self.get_config("random_sections.max_degree", 2),
            min_value=0,
            field="random_sections.max_degree",
        )
        for axiom in self.get_config("axioms", list(AXIOMS)):
            validate_choice(axiom, AXIOMS, "axioms")

    def run(
        self,
        courant: TwistedCourant,
        seed: Optional[int] = None,
        **kwargs: Any,
    ) -> CheckReport:
        """
        Args:
            courant: The algebroid to test.
            seed: Overrides sampling.seed.
        """
        seed = self.get_config("sampling.seed", 0) if seed is None else seed
        triples, functions = sample_triples(
            courant,
            self.get_config("random_sections.count", 100),
            seed,
            max_degree=self.get_config("random_sections.max_degree", 2),
            coefficient_bound=self.get_config("random_sections.coefficient_bound", 9),
        )
        logger.info(f"Courant axioms on {len(triples)} triples, seed {seed}")
        return courant_axioms_check(
            courant,
            triples,
            functions,
            seed=seed,
            axioms=tuple(self.get_config("axioms", list(AXIOMS))),
        )
