"""
Lifecycle shared by the registered checks and pipelines.

A stage announces itself on the event bus as ``<name>.start``, then either
``<name>.complete`` with a JSON summary of its result or ``<name>.error``
before re-raising.
"""

from abc import abstractmethod
from typing import Any, Dict, Optional
import logging

from ..core.report import CheckReport
from ..exterior.sampling import SamplePlan
from ..interfaces import BaseComponent

logger = logging.getLogger(__name__)


class StageComponent(BaseComponent):
    """
    Base class of the toolkit's components.

    Subclasses set NAME and VERSION, implement run() and may override
    validate() to check their configuration.
    """

    NAME = ""
    VERSION = "1.0.0"

    @property
    def name(self) -> str:
        return self.NAME

    @property
    def version(self) -> str:
        return self.VERSION

    def initialize(self, config: Dict[str, Any]) -> None:
        self._config = config
        self.validate()
        logger.debug(f"{self.name} initialized with config: {config}")

    def validate(self) -> None:
        """Check the instance configuration; raise ValidationError on bad values."""

    def cleanup(self) -> None:
        logger.debug(f"{self.name} cleaned up")

    def sample_plan(self, dim: int) -> SamplePlan:
        """Sample points drawn from the sampling section of the configuration."""
        return SamplePlan.generate(
            dim,
            samples=self.get_config("sampling.samples", 20),
            seed=self.get_config("sampling.seed", 0),
            box=self.get_config("sampling.box", [-1, 1]),
        )

    def execute(self, *args: Any, **kwargs: Any) -> Any:
        self.publish_event(f"{self.name}.start", {"component": self.name})
        try:
            result = self.run(*args, **kwargs)
        except Exception as e:
            logger.error(f"{self.name} failed: {e}", exc_info=True)
            self.publish_event(
                f"{self.name}.error",
                {"component": self.name, "status": "error", "error": str(e)},
            )
            raise
        self.publish_event(
            f"{self.name}.complete",
            {"component": self.name, "status": "success", "report": self.summary(result)},
        )
        return result

    @abstractmethod
    def run(self, *args: Any, **kwargs: Any) -> Any:
        """The stage itself."""

    def summary(self, result: Any) -> Optional[Dict[str, Any]]:
        """JSON view of a result for the completion event."""
        if isinstance(result, CheckReport):
            return result.to_dict()
        if isinstance(result, tuple) and result and isinstance(result[0], CheckReport):
            return result[0].to_dict()
        to_dict = getattr(result, "to_dict", None)
        return to_dict() if callable(to_dict) else None
