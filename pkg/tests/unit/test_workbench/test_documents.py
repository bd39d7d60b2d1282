"""
Unit tests for problem documents, report documents and packaged examples.
"""

import json

import pytest

from courant_tduality.core import ParseError, ValidationError
from courant_tduality.workbench import (
    EXAMPLES,
    ProblemDocument,
    ReportDocument,
    cmd_tdualize,
    example_document,
    load_document,
)


def _circle_data():
    return example_document("circle", {"r2": "4"}).data


@pytest.mark.unit
class TestProblemDocument:
    """Test parsing with field paths in every error."""

    def test_round_trip_json(self, circle_doc):
        """Test that to_json and from_json agree."""
        again = ProblemDocument.from_json(circle_doc.to_json())
        assert again.data == circle_doc.data
        assert again.command == "tdualize"
        assert again.parameters == {"r2": "4"}

    def test_invalid_json(self):
        """Test that malformed JSON is a ParseError on the document."""
        with pytest.raises(ParseError) as exc:
            load_document("{not json")
        assert exc.value.field == "document"
        assert exc.value.position is not None

    def test_top_level_must_be_object(self):
        """Test that a JSON list is rejected."""
        with pytest.raises(ParseError):
            ProblemDocument.from_json("[1, 2]")

    def test_bad_name(self):
        """Test that the name is an identifier."""
        with pytest.raises(ValidationError):
            ProblemDocument({"name": "two words"})

    def test_unknown_command(self):
        """Test that the command is one of the toolkit's commands."""
        with pytest.raises(ValidationError):
            ProblemDocument({"name": "p", "command": "dualize"})

    def test_missing_chart(self):
        """Test the field path of a missing chart."""
        with pytest.raises(ParseError) as exc:
            ProblemDocument({"name": "p"}).chart()
        assert exc.value.field == "chart"
        assert str(exc.value) == "chart: missing required field"

    def test_unknown_span_label(self):
        """Test the field path of an unknown frame field in K1."""
        data = _circle_data()
        data["subbundles"]["K1"]["span"] = ["Z_q"]
        with pytest.raises(ParseError) as exc:
            ProblemDocument(data).problem()
        assert exc.value.field == "subbundles.K1.span[0]"

    def test_unknown_fiber_coordinate(self):
        """Test the field path of an unknown leaf coordinate in K2."""
        data = _circle_data()
        data["subbundles"]["K2"]["fiber_coords"] = ["s"]
        with pytest.raises(ParseError) as exc:
            ProblemDocument(data).problem()
        assert exc.value.field == "subbundles.K2.fiber_coords[0]"

    def test_bad_polynomial_in_metric(self):
        """Test the field path of a malformed metric entry."""
        data = _circle_data()
        data["metric"]["g"] = [["4 +"]]
        with pytest.raises(ParseError) as exc:
            ProblemDocument(data).problem()
        assert exc.value.field == "metric.g[0][0]"

    def test_duplicate_frame_labels(self):
        """Test that frame errors are tagged with the frame field."""
        data = _circle_data()
        data["frame"]["labels"] = ["Z_t", "Z_t"]
        with pytest.raises(ParseError) as exc:
            ProblemDocument(data).frame()
        assert exc.value.field == "frame"

    def test_missing_frame_is_coordinate(self):
        """Test that a document without a frame uses ∂/∂x^i."""
        data = _circle_data()
        del data["frame"]
        frame = ProblemDocument(data).frame()
        assert frame.labels == ("Z_t", "Z_tt")

    def test_sections(self, circle_doc):
        """Test parsing sections on Q₁."""
        problem = circle_doc.problem()
        sections = circle_doc.sections(problem.K1.quotient_chart)
        assert [s.to_dict() for s in sections] == [
            {"vec": ["1"], "form": ["0"]},
            {"vec": ["0"], "form": ["1"]},
        ]

    def test_sample_plan_from_document(self, circle_doc):
        """Test that the document's plan overrides the defaults."""
        plan = circle_doc.sample_plan(2)
        assert plan.describe() == {"seed": 20240101, "samples": 20, "box": ["-1", "1"]}

    def test_too_few_samples(self):
        """Test the lower bound of 20 sample points."""
        data = _circle_data()
        data["sample_plan"]["samples"] = 5
        with pytest.raises(ValidationError):
            ProblemDocument(data).sample_plan(2)


@pytest.mark.unit
class TestExamples:
    """Test the packaged examples."""

    def test_registry_of_examples(self):
        """Test the three packaged examples."""
        assert sorted(EXAMPLES) == ["circle", "heisenberg", "lens"]

    def test_unknown_example(self):
        """Test that an unknown example is a ValidationError."""
        with pytest.raises(ValidationError):
            example_document("torus")

    def test_integer_parameter(self):
        """Test that lens parameters must be integers."""
        with pytest.raises(ValidationError):
            example_document("lens", {"m": "one"})

    def test_unknown_parameter(self):
        """Test that examples reject foreign parameters."""
        with pytest.raises(ValidationError):
            example_document("circle", {"m": "1"})

    def test_non_positive_radius(self):
        """Test that the circle needs r2 > 0."""
        with pytest.raises(ValidationError):
            example_document("circle", {"r2": "-1"})

    def test_lens_problem(self, lens_doc):
        """Test the roles of the lens correspondence."""
        problem = lens_doc.problem()
        assert problem.chart.coords == ("x", "y", "z", "zt")
        assert problem.roles.v1 == (2,)
        assert problem.roles.v2 == (3,)

    def test_heisenberg_name(self, heisenberg_doc):
        """Test that the name carries the parameter."""
        assert heisenberg_doc.name == "heisenberg_1"
        assert heisenberg_doc.problem().K2.quotient_chart.coords == ("xp", "zp", "yp")


@pytest.mark.unit
class TestReportDocument:
    """Test report serialisation."""

    def test_json_round_trip(self, circle_doc):
        """Test that a report survives to_json and from_json."""
        report = cmd_tdualize(circle_doc)
        again = ReportDocument.from_json(report.to_json())
        assert again.to_json() == report.to_json()
        assert again.passed

    def test_text_rendering(self, circle_doc):
        """Test the header lines of the text format."""
        lines = cmd_tdualize(circle_doc).to_text().splitlines()
        assert lines[0] == "tdualize circle: PASSED"
        assert lines[1] == "  seed 20240101, 20 samples in box ['-1', '1']"
        assert any("✓ tduality.relate" in line for line in lines)

    def test_missing_field(self):
        """Test that a report needs command and problem."""
        with pytest.raises(ParseError) as exc:
            ReportDocument.from_dict({"command": "check"})
        assert exc.value.field == "report.problem"

    def test_sorted_keys(self):
        """Test that the JSON output is key-sorted."""
        text = ReportDocument("check", "p", results={"b": 1, "a": 2}).to_json()
        data = json.loads(text)
        assert list(data) == sorted(data)
        assert list(data["results"]) == ["a", "b"]
