"""
Integration tests: the packaged examples end to end.

Covers the self-dual lens correspondence, a mismatched lens pair, the
Hopf fibration against S²×S¹, the doubled Heisenberg nilmanifold and the
agreement of the Buscher and para-Buscher routes.
"""

import pytest

from courant_tduality.courant import GeneralizedSection
from courant_tduality.exterior import DifferentialForm, VectorField, wedge_all
from courant_tduality.para_hermitian import (
    GenParaMetric,
    hcan_flux,
    para_buscher,
    pullback_identity_check,
    swap_frame,
)
from courant_tduality.reduction import reduce_H
from courant_tduality.tduality import dual_background, rank_law, relate, tdualize
from courant_tduality.workbench import ProblemDocument, example_document, lens, run_document


def _volume(chart, names, coeff):
    """coeff · d(names[0])∧d(names[1])∧... on chart."""
    return wedge_all([DifferentialForm.differential(chart, c) for c in names]).scale(coeff)


def _on_chart(form, chart):
    """A constant-coefficient form rewritten on a chart carrying its coordinate names."""
    out = DifferentialForm.zero(chart, form.degree)
    for names, coeff in form.to_terms():
        out = out + _volume(chart, names, chart.constant(coeff))
    return out


@pytest.mark.integration
class TestLensSpaces:
    """Test circle bundles over the flat local model of S²."""

    def test_self_dual_pair(self, lens_doc):
        """Test that L(1, 1) passes every stage with its sections."""
        P = lens_doc.problem()
        plan = lens_doc.sample_plan(P.chart.dim)
        report = tdualize(P, plan, lens_doc.sections(P.K1.quotient_chart))
        assert report.passed
        assert report.check("buscher.section_round_trip").passed
        assert rank_law(P) == 6
        data = report.to_dict()["results"]
        assert data["reduced_Q1"] == {
            "quotient_chart": ["x", "y", "z"],
            "H": [(["x", "y", "z"], "1")],
        }
        assert data["reduced_Q2"] == {
            "quotient_chart": ["x", "y", "zt"],
            "H": [(["x", "y", "zt"], "1")],
        }

    def test_mismatched_pair(self, lens_mismatch_doc):
        """Test that n ≠ k blocks the reduction along K2 and the dual."""
        report = tdualize(lens_mismatch_doc.problem())
        assert not report.passed
        assert not report.check("tduality.reducible_K2").passed
        assert report.check("tduality.reducible_K1").passed
        assert report.dual is None
        assert "dual_background" not in report.to_dict()["results"]

    def test_hopf_fibration(self):
        """Test that S³ with H = 0 reduces against S²×S¹ with one unit of flux."""
        doc = example_document("lens", {"m": "1", "k": "0", "n": "0"})
        P = doc.problem()
        assert reduce_H(P.E, P.K1).H_reduced.is_zero()
        assert reduce_H(P.E, P.K2).to_dict()["H"] == [(["x", "y", "zt"], "1")]


@pytest.mark.integration
@pytest.mark.slow
class TestDoubledHeisenberg:
    """Test the nilmanifold dualised along y onto the three-torus."""

    def test_pipeline(self, heisenberg_doc):
        """Test the certificate, the flat dual metric and the dual flux."""
        P = heisenberg_doc.problem()
        report = tdualize(P, heisenberg_doc.sample_plan(P.chart.dim))
        assert report.passed
        identity = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
        assert report.dual.metric.g.to_strings() == identity
        assert report.dual.metric.b.is_zero()
        assert report.reduced["Q1"].H_reduced.is_zero()
        Q2 = report.reduced["Q2"]
        assert Q2.H_reduced == _volume(Q2.H_reduced.chart, ["xp", "yp", "zp"], -1)

    @pytest.mark.parametrize("m", [1, 2])
    def test_dual_flux_sign(self, m):
        """Test H₂ = −dB = −m dx′∧dy′∧dz′ on the torus for B = Θ^y∧Θ̃_y."""
        P = example_document("heisenberg", {"m": str(m)}).problem()
        H2 = reduce_H(P.E, P.K2).H_reduced
        assert H2.chart.coords == ("xp", "zp", "yp")
        assert H2 == _volume(H2.chart, ["xp", "yp", "zp"], -m)
        assert H2.to_terms() == [(["xp", "zp", "yp"], str(m))]

    @pytest.mark.parametrize("m", [1, 2])
    def test_relation(self, m):
        """Test rk R = 12 − 2·3 and the six generator pairs one by one."""
        doc = example_document("heisenberg", {"m": str(m)})
        P = doc.problem()
        relation = relate(P, doc.sample_plan(P.chart.dim))
        assert relation.report.passed
        assert relation.rank == 6
        Q1, Q2 = P.K1.quotient_chart, P.K2.quotient_chart
        x = Q1.gen("x")

        def vec(chart, name):
            return GeneralizedSection.of_vector(VectorField.coordinate(chart, name))

        def form(chart, name):
            return GeneralizedSection.of_form(DifferentialForm.differential(chart, name))

        Z_z = GeneralizedSection.of_vector(VectorField(Q1, (Q1.zero, m * x, Q1.one)))
        theta_y = GeneralizedSection.of_form(DifferentialForm.one_form(Q1, [0, 1, -m * x]))
        assert relation.labels == ("Z_x", "Z_y", "Z_z", "Zt_y", "theta(Z_x)", "theta(Z_z)")
        assert list(relation.generators) == [
            (vec(Q1, "x"), vec(Q2, "xp")),
            (vec(Q1, "y"), form(Q2, "yp")),
            (Z_z, vec(Q2, "zp")),
            (theta_y, vec(Q2, "yp")),
            (form(Q1, "x"), form(Q2, "xp")),
            (form(Q1, "z"), form(Q2, "zp")),
        ]

    def test_run_document(self, heisenberg_doc):
        """Test the document's own command."""
        report = run_document(heisenberg_doc)
        assert report.command == "tdualize"
        assert report.passed


@pytest.mark.integration
class TestBuscherRoutes:
    """Test the two Buscher routes on the circle."""

    def test_radius_inversion_agrees(self, circle_doc):
        """Test that both routes send r² = 4 to 1/4."""
        frame, duality, phi, G = circle_doc.para()
        para = para_buscher(G, frame.resolve_duality(duality), phi)
        dual = dual_background(circle_doc.problem())
        assert para.g.to_strings() == dual.metric.g.to_strings() == [["1/4"]]

    @pytest.mark.parametrize("g_zz, dual", [("1", "1"), ("4", "1/4")])
    def test_lens_routes_agree(self, g_zz, dual):
        """Test the frame Buscher rules on L(1, 1) against para_buscher along Z_z."""
        data = lens(1, 1, 1)
        data["metric"]["g"][2][2] = g_zz
        P = ProblemDocument(data).problem()
        background = dual_background(P)
        para = para_buscher(GenParaMetric(P.G1.g, P.G1.b), [P.K1.quotient_frame().index("Z_z")])
        assert para.g.to_strings() == background.frame_metric.g.to_strings()
        assert para.b.to_strings() == background.frame_metric.b.to_strings()
        assert background.frame_metric.g[2, 2] == P.K2.quotient_chart.constant(dual)

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [1, 2])
    def test_heisenberg_routes_agree(self, m):
        """Test dual_background against para_buscher, φ*ℋ₂ = ℋ₁ and the swapped flux."""
        doc = example_document("heisenberg", {"m": str(m)})
        P = doc.problem()
        F, duality, phi, G = doc.para()
        dual = F.resolve_duality(duality)
        para = para_buscher(G, dual, phi)
        background = dual_background(P)
        identity = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
        assert para.g.to_strings() == background.frame_metric.g.to_strings() == identity
        assert para.b.to_strings() == background.frame_metric.b.to_strings()
        F2 = swap_frame(F, dual, phi)
        assert pullback_identity_check(G, F, para, F2, phi).passed
        H2, hcan = hcan_flux(F2)
        assert hcan.passed
        assert H2 == _on_chart(reduce_H(P.E, P.K2).H_reduced, phi.target)

    @pytest.mark.parametrize("r2, dual", [("9", "1/9"), ("1/2", "2"), ("1", "1")])
    def test_radius_family(self, r2, dual):
        """Test r² ↦ 1/r² across the circle family."""
        doc = example_document("circle", {"r2": r2})
        report = run_document(doc)
        assert report.passed
        assert report.results["dual_background"]["g"] == [[dual]]
