"""
Shared fixtures: registry isolation, workbenches, configuration folders,
small charts and the packaged example documents.
"""

from typing import Any, Dict

import pytest
import yaml

from courant_tduality import ComponentRegistry, EventBus, Workbench
from courant_tduality.components import StageComponent
from courant_tduality.core import get_registry
from courant_tduality.exterior import Chart, DifferentialForm
from courant_tduality.workbench import example_document


# ========== FRAMEWORK FIXTURES ==========

@pytest.fixture
def clean_registry():
    """
    The global registry, emptied for the test.

    The packaged stages register themselves on import, so their entries are
    put back afterwards.
    """
    registry = get_registry()
    saved = {category: dict(entries) for category, entries in registry._components.items()}
    registry.clear()
    yield registry
    registry.clear()
    registry._components.update(saved)


@pytest.fixture
def isolated_registry():
    """A private ComponentRegistry that decorators never touch."""
    return ComponentRegistry()


@pytest.fixture
def workbench():
    """A Workbench on the built-in defaults."""
    return Workbench()


@pytest.fixture
def event_bus():
    """A recording EventBus."""
    return EventBus(record=True)


@pytest.fixture
def mock_component_class():
    """A stage that doubles its input, for registry tests."""

    class DoublingStage(StageComponent):
        NAME = "doubling"

        def run(self, value: int = 1) -> int:
            return 2 * value

    return DoublingStage


@pytest.fixture
def event_collector():
    """Records (name, data) of every event it is subscribed to."""

    class EventCollector:
        def __init__(self):
            self.events = []

        def collect(self, event_name, event_data):
            self.events.append({"name": event_name, "data": event_data})

        def get_events(self, event_name):
            return [e for e in self.events if e["name"] == event_name]

        def names(self):
            return [e["name"] for e in self.events]

    return EventCollector()


# ========== CONFIGURATION FIXTURES ==========

@pytest.fixture
def sample_config() -> Dict[str, Any]:
    """Sampling, random-section and report settings differing from the defaults."""
    return {
        "sampling": {"seed": 7, "samples": 25, "box": [-2, 2]},
        "random_sections": {"count": 10, "max_degree": 1, "coefficient_bound": 5},
        "report": {"include_timings": False},
    }


@pytest.fixture
def temp_yaml_config(tmp_path, sample_config):
    """sample_config written to framework.yaml; returns the file path."""
    path = tmp_path / "framework.yaml"
    path.write_text(yaml.safe_dump(sample_config))
    return str(path)


@pytest.fixture
def config_folder(tmp_path, sample_config):
    """A config folder whose components/courant_axioms.yaml lowers the section count."""
    (tmp_path / "framework.yaml").write_text(yaml.safe_dump(sample_config))
    components = tmp_path / "components"
    components.mkdir()
    (components / "courant_axioms.yaml").write_text(
        yaml.safe_dump({"random_sections": {"count": 3}})
    )
    return str(tmp_path)


# ========== GEOMETRY FIXTURES ==========

@pytest.fixture
def chart_xy():
    return Chart(("x", "y"))


@pytest.fixture
def chart_xyz():
    return Chart(("x", "y", "z"))


@pytest.fixture
def volume_form(chart_xyz):
    """dx∧dy∧dz."""
    return DifferentialForm.from_terms(chart_xyz, 3, [((0, 1, 2), 1)])


# ========== EXAMPLE FIXTURES ==========

@pytest.fixture
def lens_doc():
    """Lens correspondence with m = k = n = 1."""
    return example_document("lens", {"m": "1", "k": "1", "n": "1"})


@pytest.fixture
def lens_mismatch_doc():
    """Lens correspondence with n ≠ k, so K2 is not reducible."""
    return example_document("lens", {"m": "1", "k": "1", "n": "2"})


@pytest.fixture
def heisenberg_doc():
    """Doubled Heisenberg nilmanifold with m = 1."""
    return example_document("heisenberg", {"m": "1"})


@pytest.fixture
def circle_doc():
    """Circle with r² = 4."""
    return example_document("circle", {"r2": "4"})


def pytest_configure(config):
    for marker in ("unit: Unit tests", "integration: Integration tests", "slow: Slow tests"):
        config.addinivalue_line("markers", marker)
