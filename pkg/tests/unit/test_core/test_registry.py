"""
Unit tests for ComponentRegistry.

Tests component registration, discovery, and naming.
"""

import pytest
from courant_tduality.core import (
    ComponentRegistry,
    RegistryError,
    get_registry,
    register_component,
)
from courant_tduality.core.registry import _default_name


@pytest.mark.unit
class TestComponentRegistry:
    """Test ComponentRegistry functionality."""

    def test_registry_singleton(self):
        """Test that get_registry returns the same instance."""
        assert get_registry() is get_registry()

    def test_register_component(self, clean_registry, mock_component_class):
        """Test registering a component."""
        clean_registry.register(
            mock_component_class,
            "test_comp",
            "checks",
            version="1.0.0",
            description="Test component",
        )

        assert clean_registry.list_components() == {"checks": ["test_comp"]}

    def test_register_duplicate_raises_error(self, clean_registry, mock_component_class):
        """Test that registering duplicate component raises error."""
        clean_registry.register(mock_component_class, "duplicate", "checks")

        with pytest.raises(RegistryError):
            clean_registry.register(mock_component_class, "duplicate", "checks")

    def test_get_component_class(self, clean_registry, mock_component_class):
        """Test retrieving a component class."""
        clean_registry.register(mock_component_class, "my_comp", "pipelines")

        assert clean_registry.get("pipelines", "my_comp") is mock_component_class

    def test_get_nonexistent_component_raises_error(self, clean_registry):
        """Test that getting nonexistent component raises error."""
        with pytest.raises(RegistryError):
            clean_registry.get("nonexistent", "component")

    def test_get_info(self, clean_registry, mock_component_class):
        """Test retrieving component metadata."""
        clean_registry.register(
            mock_component_class,
            "info_comp",
            "checks",
            version="2.1.0",
            description="With metadata",
            metadata={"inputs": ["courant"]},
        )

        info = clean_registry.get_info("checks", "info_comp")

        assert info["class"] is mock_component_class
        assert info["version"] == "2.1.0"
        assert info["description"] == "With metadata"
        assert info["metadata"] == {"inputs": ["courant"]}

    def test_list_components_by_category(self, clean_registry, mock_component_class):
        """Test listing one category, including an empty one."""
        clean_registry.register(mock_component_class, "b", "checks")
        clean_registry.register(mock_component_class, "a", "checks")

        assert clean_registry.list_components("checks") == {"checks": ["a", "b"]}
        assert clean_registry.list_components("pipelines") == {"pipelines": []}

    def test_unregister_drops_empty_category(self, clean_registry, mock_component_class):
        """Test that removing the last component removes its category."""
        clean_registry.register(mock_component_class, "only", "checks")

        clean_registry.unregister("checks", "only")

        assert clean_registry.list_categories() == []

    def test_unregister_nonexistent_raises_error(self, isolated_registry):
        """Test that unregistering an unknown component raises error."""
        with pytest.raises(RegistryError):
            isolated_registry.unregister("checks", "missing")

    def test_decorator_registers_with_default_name(self, clean_registry, mock_component_class):
        """Test that @register_component derives the name from the class."""

        @register_component("checks", description="demo")
        class FluxScanComponent(mock_component_class):
            pass

        assert clean_registry.get("checks", "flux_scan") is FluxScanComponent

    def test_builtin_components_registered(self):
        """Test that importing the workbench registers the toolkit components."""
        import courant_tduality.workbench  # noqa: F401

        listing = get_registry().list_components()
        assert "courant_axioms" in listing["checks"]
        assert "reducibility" in listing["checks"]
        assert "tdualize" in listing["pipelines"]


@pytest.mark.unit
class TestDefaultName:
    """Test derivation of registry names from class names."""

    def test_component_suffix_removed(self):
        """Test that a trailing Component is stripped."""
        assert _default_name("CourantAxiomsComponent") == "courant_axioms"

    def test_acronym(self):
        """Test that acronyms split before the next word."""
        assert _default_name("HTTPCheck") == "http_check"

    def test_private_registry_starts_empty(self):
        """Test that a new registry has no categories."""
        assert ComponentRegistry().list_categories() == []
