"""
Workbench orchestrator.

The Workbench owns the layered configuration, the component registry and
the event bus, and runs registered check and pipeline components with a
uniform lifecycle: instantiate, initialize, execute, cleanup.
"""

from typing import Any, Dict, Optional, Type
import logging
import os

from .config import ConfigManager
from .events import EventBus
from .exceptions import ComponentError, WorkbenchError
from .registry import ComponentRegistry, get_registry

logger = logging.getLogger(__name__)

# Keys of the workbench configuration forwarded to every component instance.
SHARED_SECTIONS = ("sampling", "random_sections", "report")


class Workbench:
    """
    Central orchestrator for check and pipeline components.

    Attributes:
        registry: The component registry.
        event_bus: The event bus shared with every component.
        config: The effective configuration.
    """

    def __init__(
        self,
        config: Optional[Dict[str, Any]] = None,
        config_dir: Optional[str] = None,
        registry: Optional[ComponentRegistry] = None,
        event_bus: Optional[EventBus] = None,
    ) -> None:
        """
        Build a workbench.

        Args:
            config: Overrides merged on top of the loaded configuration.
            config_dir: Folder with framework.yaml and components/*.yaml. When
                omitted the built-in defaults are used.
            registry: Registry to use (default: the global one).
            event_bus: Event bus to use (default: a fresh one).

        Raises:
            ConfigError: If config_dir is given but lacks framework.yaml, or
                the sampling settings are invalid.
        """
        self.registry = registry or get_registry()
        self.event_bus = event_bus or EventBus()
        self._config_dir = config_dir

        if config_dir is not None:
            self.config = ConfigManager.from_config_folder(config_dir)
        else:
            self.config = ConfigManager.defaults()
        if config:
            self.config.merge(config)
        self.config.validate_sampling()

        logger.info(f"Workbench initialized. Config dir: {self._config_dir or '<defaults>'}")

    def component_defaults(self, name: str) -> Dict[str, Any]:
        """Defaults from config_dir/components/<name>.yaml, or {} when absent."""
        if self._config_dir is None:
            return {}
        path = os.path.join(self._config_dir, "components", f"{name}.yaml")
        if not os.path.exists(path):
            return {}
        return ConfigManager.from_component_config(name, self._config_dir).to_dict()

    def instance_config(
        self, name: str, overrides: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """
        Effective configuration of one component instance.

        Shared sections of the workbench config come first, then the component
        YAML, then the explicit overrides.
        """
        merged = ConfigManager(
            {key: self.config.get(key) for key in SHARED_SECTIONS if self.config.get(key)}
        )
        merged.merge(self.component_defaults(name))
        merged.merge(overrides or {})
        return merged.to_dict()

    def get_component_class(self, category: str, name: str) -> Type:
        return self.registry.get(category, name)

    def instantiate_component(
        self, category: str, name: str, instance_config: Optional[Dict[str, Any]] = None
    ) -> Any:
        """
        Instantiate and initialize a component.

        Raises:
            ComponentError: If instantiation or initialization fails.

        Example:
            >>> bench = Workbench()
            >>> component = bench.instantiate_component("checks", "courant_axioms")
        """
        config = self.instance_config(name, instance_config)
        component_class = self.get_component_class(category, name)
        try:
            instance = component_class(
                event_bus=self.event_bus,
                config=config,
            )
            instance.initialize(config)
        except WorkbenchError:
            raise
        except Exception as e:
            raise ComponentError(f"Failed to instantiate component {category}/{name}: {e}") from e
        logger.info(f"Component instantiated: {category}/{name}")
        return instance

    def execute_component(self, category: str, name: str, *args: Any, **kwargs: Any) -> Any:
        """
        Run a component once.

        A keyword argument named after the component is taken as its instance
        configuration; the rest are passed to execute().

        Raises:
            ComponentError: If execution fails with a non-toolkit exception.

        Example:
            >>> bench = Workbench()
            >>> report = bench.execute_component("pipelines", "tdualize", problem=problem)
        """
        instance_config = kwargs.pop(name, {})
        component = self.instantiate_component(category, name, instance_config)
        try:
            result = component.execute(*args, **kwargs)
        except WorkbenchError:
            raise
        except Exception as e:
            raise ComponentError(f"Failed to execute component {category}/{name}: {e}") from e
        finally:
            component.cleanup()
        logger.info(f"Component executed: {category}/{name}")
        return result

    def list_components(self, category: Optional[str] = None) -> Dict[str, Any]:
        return self.registry.list_components(category)

    def subscribe_event(self, event_name: str, callback: Any) -> None:
        self.event_bus.subscribe(event_name, callback)

    def publish_event(self, event_name: str, event_data: Any = None) -> None:
        self.event_bus.publish(event_name, event_data)
