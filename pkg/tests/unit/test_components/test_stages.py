"""
Unit tests for the registered check and pipeline components.
"""

import pytest

from courant_tduality import EventBus, Workbench
from courant_tduality.core import ReductionError, ValidationError
from courant_tduality.courant import TwistedCourant
from courant_tduality.exterior import Chart, DifferentialForm, Frame
from courant_tduality.reduction import FoliationSubbundle


@pytest.fixture
def recording_bench():
    return Workbench(event_bus=EventBus(record=True))


@pytest.fixture
def chart4():
    return Chart(("x", "y", "z", "w"))


@pytest.fixture
def K_w(chart4):
    return FoliationSubbundle(Frame.coordinate(chart4), ["Z_w"], ["w"])


@pytest.mark.unit
class TestStageLifecycle:
    """Test start, complete and error events."""

    def test_start_and_complete(self, recording_bench, chart_xy):
        """Test the events of a passing run."""
        report = recording_bench.execute_component(
            "checks",
            "courant_axioms",
            courant=TwistedCourant.untwisted(chart_xy),
            courant_axioms={"random_sections": {"count": 3, "max_degree": 1}},
        )
        assert report.passed
        history = recording_bench.event_bus.history
        assert [name for name, _ in history] == [
            "courant_axioms.start",
            "courant_axioms.complete",
        ]
        payload = history[1][1]
        assert payload["status"] == "success"
        assert payload["report"]["name"] == "courant.axioms"

    def test_error_event(self, recording_bench, chart4, K_w):
        """Test that a failing stage publishes .error and re-raises."""
        H = DifferentialForm.from_terms(chart4, 3, [((0, 1, 3), 1)])
        with pytest.raises(ReductionError):
            recording_bench.execute_component(
                "pipelines", "reduce", courant=TwistedCourant(chart4, H), subbundle=K_w
            )
        name, payload = recording_bench.event_bus.history[-1]
        assert name == "reduce.error"
        assert payload["status"] == "error"


@pytest.mark.unit
class TestStageConfiguration:
    """Test instance configuration and its validation."""

    def test_non_positive_count_rejected(self, workbench):
        """Test random_sections.count ≥ 1."""
        with pytest.raises(ValidationError):
            workbench.instantiate_component(
                "checks", "courant_axioms", {"random_sections": {"count": 0}}
            )

    def test_unknown_axiom_rejected(self, workbench):
        """Test that axiom names are validated."""
        with pytest.raises(ValidationError):
            workbench.instantiate_component(
                "checks", "courant_axioms", {"axioms": ["associativity"]}
            )

    def test_component_yaml_layer(self, config_folder):
        """Test framework.yaml < components/<name>.yaml."""
        bench = Workbench(config_dir=config_folder)
        config = bench.instance_config("courant_axioms")
        assert config["random_sections"]["count"] == 3
        assert config["random_sections"]["coefficient_bound"] == 5
        assert config["sampling"]["seed"] == 7

    def test_explicit_overrides_win(self, config_folder):
        """Test that keyword configuration beats the component YAML."""
        bench = Workbench(config_dir=config_folder)
        config = bench.instance_config("courant_axioms", {"random_sections": {"count": 8}})
        assert config["random_sections"]["count"] == 8

    def test_reducibility_without_splitting(self, workbench, chart4, K_w):
        """Test that adapted_splitting can be switched off."""
        E = TwistedCourant(chart4, DifferentialForm.from_terms(chart4, 3, [((0, 1, 2), 1)]))
        report = workbench.execute_component(
            "checks",
            "reducibility",
            courant=E,
            subbundle=K_w,
            reducibility={"adapted_splitting": False},
        )
        assert report.name == "check.reducible_K"
        assert len(report.children) == 1
        assert report.passed

    def test_para_conditions_without_scan(self, workbench, heisenberg_doc):
        """Test that scan_directions drops the per-direction scan."""
        frame, duality, _, _ = heisenberg_doc.para()
        report, results = workbench.execute_component(
            "checks",
            "para_conditions",
            frame=frame,
            duality=duality,
            para_conditions={"scan_directions": False},
        )
        assert report.passed
        assert "admissible_directions" not in results

    def test_tdualize_timings(self, workbench, circle_doc):
        """Test report.include_timings on the pipeline component."""
        report = workbench.execute_component(
            "pipelines",
            "tdualize",
            problem=circle_doc.problem(),
            tdualize={"report": {"include_timings": True}},
        )
        assert report.passed
        assert "geometric" in report.results["timings"]
