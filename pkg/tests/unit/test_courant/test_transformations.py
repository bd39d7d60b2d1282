"""
Unit tests for B-field transformations and Courant isomorphisms.
"""

import pytest

from courant_tduality.core import ValidationError
from courant_tduality.courant import (
    BFieldMap,
    CourantIso,
    GeneralizedSection,
    TwistedCourant,
    bfield_apply,
    bfield_bracket_defect,
    bfield_defect_check,
    expected_defect,
    iso_apply,
    iso_check,
    pairing,
    pushed_anchor,
)
from courant_tduality.exterior import Chart, DiffeoMap, DifferentialForm, VectorField


@pytest.fixture
def shear_xyz(chart_xyz):
    """(x, y, z) -> (u, v, w) = (x, y + x², z)."""
    target = Chart(("u", "v", "w"))
    x, y, z = chart_xyz.gens()
    u, v, w = target.gens()
    return DiffeoMap(chart_xyz, target, [x, y + x**2, z], [u, v - u**2, w])


@pytest.mark.unit
class TestBFieldMap:
    """Test e^B."""

    def test_apply(self, chart_xy):
        """Test e^{dx∧dy}(∂x) = ∂x + dy."""
        b = BFieldMap(DifferentialForm.from_terms(chart_xy, 2, [((0, 1), 1)]))
        e = GeneralizedSection.of_vector(VectorField.coordinate(chart_xy, "x"))
        image = bfield_apply(b, e)
        assert image.vec == e.vec
        assert image.form == DifferentialForm.differential(chart_xy, "y")

    def test_inverse_undoes(self, chart_xyz):
        """Test e^{−B} e^B = 1."""
        x, y, z = chart_xyz.gens()
        b = BFieldMap(DifferentialForm.from_terms(chart_xyz, 2, [((0, 1), z), ((1, 2), x)]))
        e = GeneralizedSection.from_components(chart_xyz, [y, 1, x], [0, z, 1])
        assert b.inverse().apply(b.apply(e)) == e

    def test_preserves_pairing(self, chart_xy):
        """Test that e^B is orthogonal."""
        x, y = chart_xy.gens()
        b = BFieldMap(DifferentialForm.from_terms(chart_xy, 2, [((0, 1), x * y)]))
        e1 = GeneralizedSection.from_components(chart_xy, [1, y], [x, 0])
        e2 = GeneralizedSection.from_components(chart_xy, [x, 2], [0, 1])
        assert pairing(b.apply(e1), b.apply(e2)) == pairing(e1, e2)

    def test_wrong_degree_rejected(self, chart_xy):
        """Test that B must be a 2-form."""
        with pytest.raises(ValidationError):
            BFieldMap(DifferentialForm.differential(chart_xy, "x"))

    def test_closed_b_is_symmetry(self, chart_xy):
        """Test that a closed B leaves the bracket invariant."""
        x = chart_xy.gen("x")
        b = BFieldMap(DifferentialForm.from_terms(chart_xy, 2, [((0, 1), x)]))
        E = TwistedCourant.untwisted(chart_xy)
        e1 = GeneralizedSection.from_components(chart_xy, [1, x], [0, 1])
        e2 = GeneralizedSection.from_components(chart_xy, [x, 0], [x, 0])
        assert b.is_closed()
        assert bfield_bracket_defect(E, b, e1, e2).is_zero()

    def test_defect_equals_interior_of_db(self, chart_xyz):
        """Test that a non-closed B shifts the bracket by ι_Y ι_X dB."""
        x = chart_xyz.gen("x")
        b = BFieldMap(DifferentialForm.from_terms(chart_xyz, 2, [((1, 2), x)]))
        E = TwistedCourant.untwisted(chart_xyz)
        ex = GeneralizedSection.of_vector(VectorField.coordinate(chart_xyz, "x"))
        ey = GeneralizedSection.of_vector(VectorField.coordinate(chart_xyz, "y"))
        defect = bfield_bracket_defect(E, b, ex, ey)
        assert defect == expected_defect(b, ex, ey)
        assert defect.form == DifferentialForm.differential(chart_xyz, "z")

    def test_defect_check_report(self, chart_xyz):
        """Test the defect report on a few pairs."""
        x, y, z = chart_xyz.gens()
        b = BFieldMap(DifferentialForm.from_terms(chart_xyz, 2, [((1, 2), x), ((0, 1), z * z)]))
        E = TwistedCourant.untwisted(chart_xyz)
        e1 = GeneralizedSection.from_components(chart_xyz, [y, 0, 1], [0, x, 0])
        e2 = GeneralizedSection.from_components(chart_xyz, [1, z, 0], [y, 0, 0])
        report = bfield_defect_check(E, b, [(e1, e2), (e2, e1)])
        assert report.passed
        assert report.details == {"pairs": 2, "closed_B": False}


@pytest.mark.unit
class TestCourantIso:
    """Test classical Courant isomorphisms."""

    def test_induced_iso_passes(self, chart_xyz, volume_form, shear_xyz):
        """Test that φ̄ is an isomorphism onto the pushed-forward flux."""
        Phi = CourantIso.induced(shear_xyz, TwistedCourant(chart_xyz, volume_form))
        report = iso_check(Phi, count=3, seed=2)
        assert report.passed
        assert [c.name for c in report.children] == [
            "iso.cocycle",
            "iso.isometry",
            "iso.bracket",
            "iso.anchor",
        ]

    def test_shear_preserves_volume(self, chart_xyz, volume_form, shear_xyz):
        """Test (φ⁻¹)*(dx∧dy∧dz) = du∧dv∧dw for a unimodular map."""
        Phi = CourantIso.induced(shear_xyz, TwistedCourant(chart_xyz, volume_form))
        assert Phi.target.H == DifferentialForm.from_terms(Phi.target.chart, 3, [((0, 1, 2), 1)])

    def test_with_bfield_absorbs_flux(self, chart_xyz, volume_form):
        """Test that B = x dy∧dz untwists H = dx∧dy∧dz."""
        x = chart_xyz.gen("x")
        B = DifferentialForm.from_terms(chart_xyz, 2, [((1, 2), x)])
        Phi = CourantIso.with_bfield(
            DiffeoMap.identity(chart_xyz), B, TwistedCourant(chart_xyz, volume_form)
        )
        assert Phi.target.H.is_zero()
        assert iso_check(Phi, count=2, seed=5).passed

    def test_cocycle_violation_rejected(self, chart_xyz, volume_form):
        """Test that φ*H₂ must equal H₁ − dB."""
        E1 = TwistedCourant(chart_xyz, volume_form)
        E2 = TwistedCourant.untwisted(chart_xyz)
        with pytest.raises(ValidationError):
            CourantIso(
                DiffeoMap.identity(chart_xyz), DifferentialForm.zero(chart_xyz, 2), E1, E2
            )

    def test_apply_pushes_vector(self, chart_xyz, shear_xyz):
        """Test ρ(Φe) = φ_*ρ(e)."""
        Phi = CourantIso.induced(shear_xyz, TwistedCourant.untwisted(chart_xyz))
        e = GeneralizedSection.of_vector(VectorField.coordinate(chart_xyz, "x"))
        assert iso_apply(Phi, e).vec == shear_xyz.pushforward(e.vec)

    def test_unchecked_iso_reports_cocycle(self, chart_xyz, volume_form):
        """Test that a map built with check=False fails iso.cocycle in the report."""
        E1 = TwistedCourant(chart_xyz, volume_form)
        E2 = TwistedCourant.untwisted(chart_xyz)
        Phi = CourantIso(
            DiffeoMap.identity(chart_xyz),
            DifferentialForm.zero(chart_xyz, 2),
            E1,
            E2,
            check=False,
        )
        report = iso_check(Phi, count=2, seed=1)
        assert not report.passed
        cocycle = report.child("iso.cocycle")
        assert not cocycle.passed
        assert "phi*H2 - H1 + dB" in cocycle.residuals

    def test_pushed_anchor_via_coordinates(self, chart_xyz, shear_xyz):
        """Test φ_*∂x = ∂u + 2u ∂v from the action on the target coordinates."""
        e = GeneralizedSection.of_vector(VectorField.coordinate(chart_xyz, "x"))
        u = shear_xyz.target.gen("u")
        target = shear_xyz.target
        expected = VectorField(target, (target.one, 2 * u, target.zero))
        assert pushed_anchor(shear_xyz, e) == expected
        assert pushed_anchor(shear_xyz, e) == shear_xyz.pushforward(e.vec)
