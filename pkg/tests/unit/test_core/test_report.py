"""
Unit tests for CheckReport and the exception hierarchy.
"""

import pytest

from courant_tduality.core import (
    SAMPLED,
    SYMBOLIC,
    ChartError,
    CheckReport,
    ParseError,
    ValidationError,
    WorkbenchError,
)


@pytest.mark.unit
class TestCheckReport:
    """Test verdict construction and aggregation."""

    def test_from_residuals_passes_when_empty(self):
        """Test that no residuals means a pass."""
        report = CheckReport.from_residuals("demo", {})
        assert report.passed
        assert report.certificate == SYMBOLIC

    def test_from_residuals_fails_with_residual(self):
        """Test that any residual means a failure."""
        report = CheckReport.from_residuals("demo", {"jacobi[0]": "x"})
        assert not report.passed
        assert report.residuals == {"jacobi[0]": "x"}

    def test_unknown_certificate_rejected(self):
        """Test that only symbolic and sampled certificates exist."""
        with pytest.raises(ValidationError):
            CheckReport("demo", True, certificate="approximate")

    def test_suite_aggregates_pass_and_certificate(self):
        """Test that a suite fails with any child and is sampled with any sampled child."""
        ok = CheckReport.success("a")
        sampled = CheckReport.success("b", certificate=SAMPLED)
        bad = CheckReport.from_residuals("c", {"r": "1"})

        assert CheckReport.suite("s", [ok, sampled]).passed
        assert CheckReport.suite("s", [ok, sampled]).certificate == SAMPLED
        assert CheckReport.suite("s", [ok]).certificate == SYMBOLIC
        assert not CheckReport.suite("s", [ok, bad]).passed

    def test_child_lookup(self):
        """Test finding a direct child by name."""
        suite = CheckReport.suite("s", [CheckReport.success("a"), CheckReport.success("b")])
        assert suite.child("b").name == "b"
        with pytest.raises(KeyError):
            suite.child("missing")

    def test_failures_are_leaves(self):
        """Test that failures() returns failing leaves depth first."""
        bad1 = CheckReport.from_residuals("x", {"r": "1"})
        bad2 = CheckReport.from_residuals("y", {"r": "2"})
        inner = CheckReport.suite("inner", [CheckReport.success("ok"), bad1])
        outer = CheckReport.suite("outer", [inner, bad2])

        assert [f.name for f in outer.failures()] == ["x", "y"]

    def test_dict_round_trip(self):
        """Test that to_dict and from_dict preserve nested suites."""
        suite = CheckReport.suite(
            "s",
            [CheckReport.from_residuals("c", {"r": "x - 1"}, details={"seed": 3})],
            details={"K": "K1"},
        )
        assert CheckReport.from_dict(suite.to_dict()) == suite

    def test_from_dict_missing_field(self):
        """Test that a report without passed is rejected."""
        with pytest.raises(ValidationError):
            CheckReport.from_dict({"name": "x"})


@pytest.mark.unit
class TestExceptions:
    """Test the exception hierarchy."""

    def test_all_derive_from_workbench_error(self):
        """Test that toolkit errors share one base."""
        assert issubclass(ChartError, WorkbenchError)
        assert issubclass(ParseError, WorkbenchError)

    def test_parse_error_rendering(self):
        """Test that field and position appear in the message."""
        err = ParseError("Unexpected ')'", position=4, field="H[0][1]")
        assert str(err) == "H[0][1]: Unexpected ')' (at position 4)"

    def test_parse_error_at_field(self):
        """Test tagging an error with a document field."""
        err = ParseError("bad", position=2).at_field("frame.fields[1][0]")
        assert err.field == "frame.fields[1][0]"
        assert err.position == 2
