"""
Component registry for checks and pipelines.

Components self-register with the @register_component decorator; the
workbench and the command line look them up by (category, name). The two
categories in use are "checks" (verdict suites) and "pipelines"
(reduction, relation and T-duality stages).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Type
import logging
import re

from .exceptions import RegistryError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentEntry:
    """Registration record of one component class."""

    component_class: Type
    name: str
    category: str
    version: str = "1.0.0"
    description: str = ""
    metadata: Dict[str, Any] = field(default_factory=dict)

    def as_info(self) -> Dict[str, Any]:
        """Plain-dict view used by the command line."""
        return {
            "class": self.component_class,
            "name": self.name,
            "category": self.category,
            "version": self.version,
            "description": self.description,
            "metadata": dict(self.metadata),
        }


class ComponentRegistry:
    """
    Catalog of registered components, organized by category.

    Attributes:
        _components: category -> name -> ComponentEntry.
    """

    def __init__(self) -> None:
        self._components: Dict[str, Dict[str, ComponentEntry]] = {}
        logger.debug("ComponentRegistry initialized")

    def register(
        self,
        component_class: Type,
        name: str,
        category: str,
        version: str = "1.0.0",
        description: str = "",
        metadata: Optional[Dict[str, Any]] = None,
    ) -> None:
        """
        Register a component class.

        Args:
            component_class: The component class to register.
            name: Component name, unique within its category.
            category: "checks" or "pipelines" (any string is accepted).
            version: Version string.
            description: Human-readable description.
            metadata: Extra metadata (inputs, outputs, ...).

        Raises:
            RegistryError: If the name is already taken in the category.

        Example:
            >>> registry = ComponentRegistry()
            >>> class Axioms: pass
            >>> registry.register(Axioms, "courant_axioms", "checks")
        """
        entries = self._components.setdefault(category, {})
        if name in entries:
            raise RegistryError(f"Component '{name}' already registered in category '{category}'")

        entries[name] = ComponentEntry(
            component_class=component_class,
            name=name,
            category=category,
            version=version,
            description=description,
            metadata=dict(metadata or {}),
        )
        logger.info(f"Component registered: {category}/{name} (v{version})")

    def _entry(self, category: str, name: str) -> ComponentEntry:
        if category not in self._components:
            raise RegistryError(f"Category '{category}' not found in registry")
        if name not in self._components[category]:
            raise RegistryError(f"Component '{name}' not found in category '{category}'")
        return self._components[category][name]

    def get(self, category: str, name: str) -> Type:
        """
        Get a registered component class.

        Raises:
            RegistryError: If the component is not found.
        """
        return self._entry(category, name).component_class

    def get_info(self, category: str, name: str) -> Dict[str, Any]:
        """Registration metadata of a component as a plain dict."""
        return self._entry(category, name).as_info()

    def list_components(self, category: Optional[str] = None) -> Dict[str, List[str]]:
        """
        List registered component names, optionally for one category only.

        Example:
            >>> registry = ComponentRegistry()
            >>> registry.list_components("checks")
            {'checks': []}
        """
        if category:
            return {category: sorted(self._components.get(category, {}))}
        return {cat: sorted(entries) for cat, entries in sorted(self._components.items())}

    def list_categories(self) -> List[str]:
        return sorted(self._components)

    def unregister(self, category: str, name: str) -> None:
        """
        Remove a component; empty categories are dropped.

        Raises:
            RegistryError: If the component is not found.
        """
        self._entry(category, name)
        del self._components[category][name]
        if not self._components[category]:
            del self._components[category]
        logger.info(f"Component unregistered: {category}/{name}")

    def clear(self) -> None:
        """Clear all registered components. Useful for testing."""
        self._components.clear()
        logger.debug("ComponentRegistry cleared")


_global_registry = ComponentRegistry()


def get_registry() -> ComponentRegistry:
    """Return the process-wide component registry."""
    return _global_registry


def register_component(
    category: str,
    name: Optional[str] = None,
    version: str = "1.0.0",
    description: str = "",
    metadata: Optional[Dict[str, Any]] = None,
):
    """
    Class decorator registering a component with the global registry.

    The name defaults to the class name in snake_case with a trailing
    "_component" removed.

    Example:
        >>> @register_component("checks", description="Courant axiom suite")
        ... class CourantAxiomsComponent:
        ...     pass
    """

    def decorator(cls: Type) -> Type:
        component_name = name or _default_name(cls.__name__)
        get_registry().register(
            cls,
            component_name,
            category,
            version=version,
            description=description,
            metadata=metadata or {},
        )
        return cls

    return decorator


def _default_name(class_name: str) -> str:
    """
    Derive a registry name from a class name.

    Example:
        >>> _default_name("CourantAxiomsComponent")
        'courant_axioms'
        >>> _default_name("HTTPCheck")
        'http_check'
    """
    s1 = re.sub("(.)([A-Z][a-z]+)", r"\1_\2", class_name)
    snake = re.sub("([a-z0-9])([A-Z])", r"\1_\2", s1).lower()
    if snake.endswith("_component"):
        snake = snake[: -len("_component")]
    return snake
