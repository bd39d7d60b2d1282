"""
Unit tests for the document-level commands.
"""

import pytest

from courant_tduality import Workbench
from courant_tduality.core import SAMPLED, ValidationError
from courant_tduality.workbench import (
    COMMAND_TABLE,
    COMMANDS,
    ProblemDocument,
    cmd_check,
    cmd_example,
    cmd_para_check,
    cmd_reduce,
    cmd_relate,
    heisenberg,
    run_document,
)


@pytest.fixture
def quick_bench():
    """A workbench with few random sections."""
    return Workbench(config={"random_sections": {"count": 5, "max_degree": 1}})


@pytest.mark.unit
class TestCommandTable:
    """Test dispatch."""

    def test_every_command_dispatches(self):
        """Test that the table covers every document command."""
        assert set(COMMAND_TABLE) == set(COMMANDS)

    def test_document_without_command(self, circle_doc):
        """Test that a command must come from somewhere."""
        data = dict(circle_doc.data)
        del data["command"]
        with pytest.raises(ValidationError):
            run_document(ProblemDocument(data))

    def test_unknown_command(self, circle_doc):
        """Test that the override is validated."""
        with pytest.raises(ValidationError):
            run_document(circle_doc, "dualize")

    def test_document_command_is_default(self, circle_doc):
        """Test that the circle runs its own tdualize command."""
        report = run_document(circle_doc)
        assert report.command == "tdualize"
        assert report.results["dual_background"]["g"] == [["1/4"]]

    def test_example_command(self):
        """Test the example command's document."""
        assert cmd_example("circle", {"r2": "9"}).data["metric"] == {"g": [["9"]]}


@pytest.mark.unit
class TestCommands:
    """Test each command on the circle and the lens correspondence."""

    def test_check(self, circle_doc, quick_bench):
        """Test the suites run by check."""
        report = cmd_check(circle_doc, quick_bench)
        assert report.passed
        assert [c.name for c in report.checks] == [
            "courant.axioms",
            "check.reducible_K1",
            "check.reducible_K2",
            "tduality.invariance",
        ]

    def test_check_reports_non_closed_flux(self, quick_bench):
        """Test that dH ≠ 0 is a failing verdict, not an error."""
        doc = ProblemDocument(
            {"name": "open", "chart": ["x", "y", "z", "w"], "H": [[["x", "y", "z"], "w"]]}
        )
        report = cmd_check(doc, quick_bench)
        assert not report.passed
        assert [c.name for c in report.checks] == ["courant.construction"]

    def test_check_without_subbundles(self, quick_bench):
        """Test that only the axioms run on a bare algebroid."""
        doc = ProblemDocument({"name": "flat", "chart": ["x", "y"]})
        report = cmd_check(doc, quick_bench)
        assert [c.name for c in report.checks] == ["courant.axioms"]

    def test_reduce(self, lens_doc):
        """Test the reduced fluxes of the lens correspondence."""
        report = cmd_reduce(lens_doc)
        assert report.passed
        assert report.results["reduced_K1"] == {
            "quotient_chart": ["x", "y", "z"],
            "H": [(["x", "y", "z"], "1")],
        }
        assert report.results["reduced_K2"]["quotient_chart"] == ["x", "y", "zt"]

    def test_reduce_mismatch(self, lens_mismatch_doc):
        """Test that a non-reducible K2 gives no reduced algebroid."""
        report = cmd_reduce(lens_mismatch_doc)
        assert not report.passed
        assert "reduced_K1" in report.results
        assert "reduced_K2" not in report.results

    def test_relate_with_seed_flag(self, circle_doc):
        """Test that flags override the document's plan."""
        report = cmd_relate(circle_doc, flags={"seed": 5})
        assert report.seed == 5
        assert report.samples == 20
        assert report.results["relation"]["rank"] == 2

    def test_too_few_samples_flag(self, circle_doc):
        """Test the lower bound on --samples."""
        with pytest.raises(ValidationError):
            cmd_relate(circle_doc, flags={"samples": 3})

    def test_para_check(self, heisenberg_doc):
        """Test the para-Hermitian report of the Heisenberg example."""
        report = cmd_para_check(heisenberg_doc)
        assert [c.name for c in report.checks] == ["para.check"]
        assert report.results["admissible_directions"] == {"x": False, "y": True, "z": False}
        assert report.results["g2"] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]

    def test_para_check_follows_seed_flag(self):
        """Test that --seed reaches the sampled positivity of a non-constant g₊."""
        data = heisenberg(1)
        del data["phi"]
        data["para"]["metric"]["g"] = [["1 + x^2", "x", "0"], ["x", "1", "0"], ["0", "0", "1"]]
        report = cmd_para_check(ProblemDocument(data), flags={"seed": 5})
        assert report.seed == 5
        assert report.samples == 20
        positivity = report.checks[0].child("para.positivity")
        assert positivity.passed
        assert positivity.certificate == SAMPLED
        assert positivity.details["seed"] == 5
        assert positivity.details["samples"] == 20

    def test_timings_follow_config(self, circle_doc):
        """Test that report.include_timings adds stage timings."""
        bench = Workbench(config={"report": {"include_timings": True}})
        report = run_document(circle_doc, bench=bench)
        assert "relate" in report.timings
        assert "timings" in report.to_dict()
