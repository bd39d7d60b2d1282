"""
Unit tests for generalised metrics, transverse metrics and classical isometries.
"""

import pytest

from courant_tduality.core import SAMPLED, SYMBOLIC, ValidationError
from courant_tduality.courant import CourantIso, GeneralizedSection, TwistedCourant
from courant_tduality.exterior import Chart, DiffeoMap, DifferentialForm, Frame, PolyMatrix
from courant_tduality.genmetric import (
    GeneralisedMetric,
    TransverseGeneralisedMetric,
    classical_isometry_check,
    decompose,
    gm_matrix,
    metric_check,
    orthogonality_check,
    positivity_check,
    tau_apply,
    tau_involution_check,
    transverse_check,
    vminus_graph,
    vplus_graph,
)
from courant_tduality.reduction import FoliationSubbundle


@pytest.fixture
def unimodular_metric(chart_xy):
    """g = [[1, x], [x, x² + 1]] with det g = 1 and b = y dx∧dy."""
    x, y = chart_xy.gens()
    g = PolyMatrix.from_rows(chart_xy, [[1, x], [x, x * x + 1]])
    b = PolyMatrix.from_rows(chart_xy, [[0, y], [-y, 0]])
    return GeneralisedMetric(g, b)


@pytest.fixture
def K_w():
    chart = Chart(("x", "y", "z", "w"))
    return FoliationSubbundle(Frame.coordinate(chart), ["Z_w"], ["w"])


@pytest.mark.unit
class TestGeneralisedMetric:
    """Test (g, b), 𝒢 and τ."""

    def test_non_symmetric_g_rejected(self, chart_xy):
        """Test that g must be symmetric."""
        with pytest.raises(ValidationError):
            GeneralisedMetric(PolyMatrix.from_rows(chart_xy, [[1, 1], [0, 1]]))

    def test_non_antisymmetric_b_rejected(self, chart_xy):
        """Test that b must be antisymmetric."""
        with pytest.raises(ValidationError):
            GeneralisedMetric(PolyMatrix.identity(chart_xy, 2), PolyMatrix.identity(chart_xy, 2))

    def test_gm_matrix_circle(self):
        """Test 𝒢 for g = 4 on a line."""
        chart = Chart(("t",))
        G = GeneralisedMetric(PolyMatrix.diagonal(chart, [4]))
        assert gm_matrix(G).to_strings() == [["4", "0"], ["0", "1/4"]]

    def test_gm_matrix_with_b_field(self, chart_xy):
        """Test the block layout of 𝒢 with a constant b."""
        b = PolyMatrix.from_rows(chart_xy, [[0, 1], [-1, 0]])
        G = GeneralisedMetric(PolyMatrix.identity(chart_xy, 2), b)
        assert gm_matrix(G).to_strings() == [
            ["2", "0", "0", "-1"],
            ["0", "2", "1", "0"],
            ["0", "1", "1", "0"],
            ["-1", "0", "0", "1"],
        ]

    def test_graphs(self, chart_xy):
        """Test V⁺ and V⁻ generators of the flat metric."""
        G = GeneralisedMetric(PolyMatrix.identity(chart_xy, 2))
        assert vplus_graph(G)[0].to_dict() == {"vec": ["1", "0"], "form": ["1", "0"]}
        assert vminus_graph(G)[1].to_dict() == {"vec": ["0", "1"], "form": ["0", "-1"]}

    def test_no_polynomial_inverse(self, chart_xy):
        """Test that 𝒢 needs a constant determinant."""
        x = chart_xy.gen("x")
        G = GeneralisedMetric(PolyMatrix.diagonal(chart_xy, [x * x + 1, 1]))
        with pytest.raises(ValidationError):
            gm_matrix(G)

    def test_tau_involution(self, unimodular_metric):
        """Test τ² = 1 for a non-constant metric."""
        assert tau_involution_check(unimodular_metric).passed

    def test_orthogonality(self, unimodular_metric):
        """Test V⁺ ⊥ V⁻."""
        assert orthogonality_check(unimodular_metric).passed

    def test_metric_check_symbolic(self, unimodular_metric):
        """Test that constant leading minors give a symbolic certificate."""
        report = metric_check(unimodular_metric)
        assert report.passed
        assert report.certificate == SYMBOLIC

    def test_decompose(self, unimodular_metric, chart_xy):
        """Test e = e⁺ + e⁻ with τe^± = ±e^±."""
        x, y = chart_xy.gens()
        e = GeneralizedSection.from_components(chart_xy, [y, 1], [x, 2])
        plus, minus = decompose(unimodular_metric, e)
        assert plus + minus == e
        assert tau_apply(unimodular_metric, plus) == plus
        assert tau_apply(unimodular_metric, minus) == -minus


@pytest.mark.unit
class TestPositivity:
    """Test the positivity verdicts."""

    def test_constant_negative(self, chart_xy):
        """Test that a constant indefinite g fails symbolically."""
        report = positivity_check(PolyMatrix.diagonal(chart_xy, [1, -1]))
        assert not report.passed
        assert report.residuals == {"minor[2]": "-1"}
        assert report.details == {"constant": True}

    def test_sampled_positive(self, chart_xy):
        """Test that a non-constant positive g is certified by sampling."""
        x = chart_xy.gen("x")
        report = positivity_check(PolyMatrix.diagonal(chart_xy, [x * x + 1, 1]))
        assert report.passed
        assert report.certificate == SAMPLED
        assert report.details["constant"] is False

    def test_sampled_failure_at_origin(self, chart_xy):
        """Test that g = diag(x, 1) fails at the origin."""
        x = chart_xy.gen("x")
        report = positivity_check(PolyMatrix.diagonal(chart_xy, [x, 1]))
        assert not report.passed
        assert report.residuals["minor[1]@point[0]"] == "0"


@pytest.mark.unit
class TestTransverseMetric:
    """Test K-transverse generalised metrics."""

    def test_pullback_is_invariant(self, K_w):
        """Test that a pulled-back flat metric passes every transverse clause."""
        W = TransverseGeneralisedMetric.pullback(K_w, PolyMatrix.identity(K_w.quotient_chart, 3))
        assert W.g.to_strings()[3] == ["0", "0", "0", "0"]
        report = transverse_check(W)
        assert report.passed
        assert [c.name for c in report.children] == [
            "transverse.lie_g",
            "transverse.lie_b",
            "transverse.flux",
            "transverse.positivity",
        ]

    def test_kernel_must_vanish(self, K_w):
        """Test that g must vanish along K."""
        with pytest.raises(ValidationError):
            TransverseGeneralisedMetric(K_w, PolyMatrix.identity(K_w.chart, 4))

    def test_fiber_dependent_metric_fails(self, K_w):
        """Test that £_∂w g ≠ 0 is reported."""
        w = K_w.chart.gen("w")
        W = TransverseGeneralisedMetric(K_w, PolyMatrix.diagonal(K_w.chart, [w * w + 1, 1, 1, 0]))
        report = transverse_check(W)
        assert [f.name for f in report.failures()] == ["transverse.lie_g"]

    def test_flux_along_fiber_fails(self, K_w):
        """Test that ι_∂w H ≠ 0 is reported."""
        W = TransverseGeneralisedMetric.pullback(K_w, PolyMatrix.identity(K_w.quotient_chart, 3))
        H = DifferentialForm.from_terms(K_w.chart, 3, [((0, 1, 3), 1)])
        assert [f.name for f in transverse_check(W, H).failures()] == ["transverse.flux"]

    def test_lifts(self, K_w):
        """Test W^± lifts of the flat metric."""
        W = TransverseGeneralisedMetric.pullback(K_w, PolyMatrix.identity(K_w.quotient_chart, 3))
        assert len(W.wplus_lifts()) == 3
        assert W.wplus_lifts()[0].to_dict() == {
            "vec": ["1", "0", "0", "0"],
            "form": ["1", "0", "0", "0"],
        }
        assert W.wminus_lifts()[2].form.components()[2] == -K_w.chart.one


@pytest.mark.unit
class TestClassicalIsometry:
    """Test the two routes to a classical generalised isometry."""

    def test_bfield_shift_is_isometry(self, chart_xy):
        """Test that e^B relates (1, 0) to (1, B)."""
        B = DifferentialForm.from_terms(chart_xy, 2, [((0, 1), 1)])
        Phi = CourantIso.with_bfield(
            DiffeoMap.identity(chart_xy), B, TwistedCourant.untwisted(chart_xy)
        )
        g = PolyMatrix.identity(chart_xy, 2)
        G1 = GeneralisedMetric(g)
        G2 = GeneralisedMetric(g, PolyMatrix.from_rows(chart_xy, [[0, 1], [-1, 0]]))
        report = classical_isometry_check(Phi, G1, G2)
        assert report.passed
        assert report.details == {"routes_agree": True}

    def test_rescaled_metric_is_not_isometric(self, chart_xy):
        """Test that both routes reject g ↦ 2g under the identity."""
        Phi = CourantIso.induced(DiffeoMap.identity(chart_xy), TwistedCourant.untwisted(chart_xy))
        G1 = GeneralisedMetric(PolyMatrix.identity(chart_xy, 2))
        G2 = GeneralisedMetric(PolyMatrix.diagonal(chart_xy, [2, 2]))
        report = classical_isometry_check(Phi, G1, G2)
        assert not report.passed
        assert report.details == {"routes_agree": True}
