"""
Unit tests for para-Hermitian frames, fluxes and the para-Buscher rules.
"""

import pytest

from courant_tduality.core import SAMPLED, FrameError, TDualityError, ValidationError
from courant_tduality.exterior import Chart, Frame, PolyMatrix, SamplePlan, VectorField
from courant_tduality.para_hermitian import (
    GenParaMetric,
    ParaHermitianFrame,
    compatibility_check,
    flux_extract,
    hcan_flux,
    l_minus_obstruction,
    para_buscher,
    para_check,
    para_metric_route_check,
    sf_conditions_check,
    singleton_scan,
    swap_frame,
)


@pytest.fixture
def heisenberg(heisenberg_doc):
    return heisenberg_doc.para()[0]


@pytest.fixture
def circle_para(circle_doc):
    return circle_doc.para()


@pytest.mark.unit
class TestParaHermitianFrame:
    """Test (η, 𝒦, ω) built from a frame."""

    def test_odd_dimension_rejected(self, chart_xyz):
        """Test that L₊ ⊕ L₋ needs an even chart."""
        with pytest.raises(FrameError):
            ParaHermitianFrame(Frame.coordinate(chart_xyz))

    def test_split(self, heisenberg):
        """Test the labels of L₊ and L₋."""
        assert heisenberg.n == 3
        assert heisenberg.plus_labels == ("Z_x", "Z_y", "Z_z")
        assert heisenberg.minus_labels == ("Zt_x", "Zt_y", "Zt_z")

    def test_eta_frame(self, chart_xy):
        """Test η(Z_I, Z_J) on a coordinate frame."""
        F = ParaHermitianFrame(Frame.coordinate(chart_xy))
        assert F.eta_frame().to_strings() == [["0", "1"], ["1", "0"]]
        assert F.omega_frame().to_strings() == [["0", "1"], ["-1", "0"]]

    def test_compatibility(self, heisenberg):
        """Test η∘𝒦 antisymmetry, 𝒦² = 1 and ω = η𝒦 on a non-coordinate frame."""
        report = compatibility_check(heisenberg)
        assert report.passed
        assert report.details == {"rank_L+": 3, "rank_L-": 3}

    def test_resolve_duality(self, heisenberg):
        """Test labels and indices for duality directions."""
        assert heisenberg.resolve_duality(["Z_z", 0]) == (0, 2)
        with pytest.raises(ValidationError):
            heisenberg.resolve_duality(["Zt_x"])
        with pytest.raises(ValidationError):
            heisenberg.resolve_duality([3])


@pytest.mark.unit
class TestFluxes:
    """Test the generalised fluxes of the doubled Heisenberg frame."""

    def test_geometric_flux_only(self, heisenberg):
        """Test that [Z_x, Z_z] = Z_y is the only flux."""
        fluxes = flux_extract(heisenberg)
        assert fluxes.to_dict() == {"f": {"x,z,y": "1"}, "H": {}, "Q": {}, "R": {}}
        assert fluxes.f_(2, 0, 1) == -heisenberg.chart.one

    def test_hcan_vanishes(self, heisenberg):
        """Test that H = (dω)^{+3}/3 is zero and both routes agree."""
        H, report = hcan_flux(heisenberg)
        assert H.is_zero()
        assert report.passed

    def test_l_minus_integrable(self, heisenberg):
        """Test that L₋ has no obstruction."""
        assert l_minus_obstruction(heisenberg).passed

    def test_admissible_directions(self, heisenberg):
        """Test that only y can be dualised."""
        assert singleton_scan(flux_extract(heisenberg)) == {"x": False, "y": True, "z": False}

    def test_spectator_flux_blocks_x(self, heisenberg):
        """Test the failing clause for the x direction."""
        report = sf_conditions_check(flux_extract(heisenberg), [0])
        assert [f.name for f in report.failures()] == ["sf.f_dual_spectator"]
        assert report.details == {"duality": ["x"]}


@pytest.mark.unit
class TestParaBuscher:
    """Test the para-Buscher rules."""

    def test_radius_inversion(self, chart_xyz):
        """Test g = diag(R², 1, 1) ↦ diag(1/R², 1, 1)."""
        G = GenParaMetric(PolyMatrix.diagonal(chart_xyz, [9, 1, 1]))
        dual = para_buscher(G, [0])
        assert dual.g.to_strings() == [["1/9", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
        assert dual.b.to_strings() == [["0"] * 3] * 3

    def test_off_diagonal_metric_creates_b(self, chart_xy):
        """Test that g_ds ≠ 0 turns into a dual b-field."""
        G = GenParaMetric(PolyMatrix.from_rows(chart_xy, [[2, 1], [1, 1]]))
        dual = para_buscher(G, [0])
        assert dual.g.to_strings() == [["1/2", "0"], ["0", "1/2"]]
        assert dual.b.to_strings() == [["0", "1/2"], ["-1/2", "0"]]

    def test_route_agrees(self, chart_xy):
        """Test the block rules against ℋ₂ = PℋP."""
        G = GenParaMetric(PolyMatrix.from_rows(chart_xy, [[2, 1], [1, 1]]))
        assert para_metric_route_check(G, [0]).passed

    def test_empty_duality_is_identity(self, chart_xy):
        """Test that no directions leave (g, b) alone."""
        G = GenParaMetric(PolyMatrix.from_rows(chart_xy, [[2, 1], [1, 1]]))
        assert para_buscher(G, []) == G

    def test_degenerate_direction(self, chart_xy):
        """Test that a vanishing g_dd blocks the rules."""
        G = GenParaMetric(PolyMatrix.diagonal(chart_xy, [0, 1]))
        with pytest.raises(TDualityError):
            para_buscher(G, [0])

    def test_non_symmetric_g_rejected(self, chart_xy):
        """Test that g₊ must be symmetric."""
        with pytest.raises(ValidationError):
            GenParaMetric(PolyMatrix.from_rows(chart_xy, [[1, 1], [0, 1]]))


@pytest.mark.unit
class TestSwapAndCheck:
    """Test the swapped frame and the end-to-end check on the circle."""

    def test_swap_frame(self, circle_para):
        """Test that Z_t becomes φ_*(∂tt) = ∂tp."""
        F, duality, phi, _ = circle_para
        swapped = swap_frame(F, duality, phi)
        assert swapped.plus(0) == VectorField.coordinate(phi.target, "tp")
        assert swapped.minus(0) == VectorField.coordinate(phi.target, "ttp")

    def test_para_check_circle(self, circle_para):
        """Test every certificate and the dual radius."""
        F, duality, phi, G = circle_para
        report, results = para_check(F, duality, phi, G)
        assert report.passed
        assert results["g2"] == [["1/4"]]
        assert results["b2"] == [["0"]]
        assert results["admissible_directions"] == {"t": True}
        assert results["H"] == "0"
        assert set(results) == {
            "fluxes",
            "H",
            "duality",
            "admissible_directions",
            "swapped_frame",
            "swapped_fluxes",
            "H2",
            "g2",
            "b2",
        }

    def test_para_check_without_phi(self, heisenberg_doc):
        """Test fluxes and the metric route when no diffeomorphism is given."""
        F, duality, _, G = heisenberg_doc.para()
        report, results = para_check(F, duality, None, G)
        assert report.passed
        assert results["duality"] == ["Z_y"]
        assert "g2" not in results
        assert [c.name for c in report.children][-1] == "para.buscher_route"

    def test_para_check_samples_positivity(self, heisenberg):
        """Test that a non-constant g₊ is checked at the points of the given plan."""
        x = heisenberg.chart.gen("x")
        g = PolyMatrix.from_rows(heisenberg.chart, [[1 + x**2, x, 0], [x, 1, 0], [0, 0, 1]])
        plan = SamplePlan.generate(heisenberg.chart.dim, samples=6, seed=3)
        report, _ = para_check(heisenberg, ["Z_y"], None, GenParaMetric(g), plan=plan)
        positivity = report.child("para.positivity")
        assert positivity.passed
        assert positivity.certificate == SAMPLED
        assert positivity.details["seed"] == 3
        assert positivity.details["samples"] == 6

    def test_para_check_rejects_indefinite_metric(self, heisenberg):
        """Test that an indefinite constant g₊ fails the positivity child."""
        chart = heisenberg.chart
        g = PolyMatrix.from_rows(chart, [[1, 0, 0], [0, -1, 0], [0, 0, 1]])
        report, _ = para_check(heisenberg, ["Z_y"], None, GenParaMetric(g))
        assert not report.passed
        assert not report.child("para.positivity").passed

    def test_para_check_reports_inadmissible(self, heisenberg):
        """Test that dualising x fails the flux conditions."""
        report, results = para_check(heisenberg, ["Z_x"])
        assert not report.passed
        assert results["admissible_directions"]["x"] is False
