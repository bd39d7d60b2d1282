"""
Contract every registered check and pipeline fulfils.

The Workbench constructs a component with the shared event bus and its
layered instance configuration, calls initialize() once, execute() once and
cleanup() always. Concrete stages derive from components.StageComponent.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Mapping, Optional
import logging

from ..core.events import EventBus

logger = logging.getLogger(__name__)


class BaseComponent(ABC):
    """
    A unit of work the Workbench can run and observe.

    Attributes:
        event_bus: Bus on which the component announces its progress.
    """

    def __init__(self, event_bus: EventBus, config: Optional[Mapping[str, Any]] = None) -> None:
        self.event_bus = event_bus
        self._config: Dict[str, Any] = dict(config or {})
        logger.debug(f"{type(self).__name__} constructed")

    @property
    @abstractmethod
    def name(self) -> str:
        """Registry name; also the prefix of the component's events."""

    @property
    @abstractmethod
    def version(self) -> str:
        pass

    @abstractmethod
    def initialize(self, config: Dict[str, Any]) -> None:
        """
        Adopt the instance configuration and reject invalid settings.

        Raises:
            ValidationError: On a setting outside its allowed range or set.
        """

    @abstractmethod
    def execute(self, *args: Any, **kwargs: Any) -> Any:
        """Run once; the result is usually a CheckReport or carries one."""

    @abstractmethod
    def cleanup(self) -> None:
        """Called by the Workbench after execute, whether or not it raised."""

    @property
    def config(self) -> Dict[str, Any]:
        """A copy of the instance configuration."""
        return dict(self._config)

    def get_config(self, key: str, default: Any = None) -> Any:
        """
        Look up a dotted key such as "random_sections.count".

        Missing keys and explicit nulls both give the default.
        """
        node: Any = self._config
        for part in key.split("."):
            if not isinstance(node, Mapping) or node.get(part) is None:
                return default
            node = node[part]
        return node

    def publish_event(self, event_name: str, event_data: Any = None) -> None:
        self.event_bus.publish(event_name, event_data)
