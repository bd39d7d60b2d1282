"""
Unit tests for vector fields and differential forms.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from courant_tduality.core import ChartError, ValidationError
from courant_tduality.exterior import (
    Chart,
    DifferentialForm,
    RandomSource,
    VectorField,
    exact,
    ext_d,
    interior,
    lie_bracket,
    lie_derivative,
    wedge,
)


def _dx(chart, name):
    return DifferentialForm.differential(chart, name)


@pytest.mark.unit
class TestVectorField:
    """Test vector field algebra."""

    def test_coordinate_field_text(self, chart_xy):
        """Test the text rendering of ∂x."""
        assert VectorField.coordinate(chart_xy, "x").to_text() == "(1)*d/dx"
        assert VectorField.zero(chart_xy).to_text() == "0"

    def test_wrong_number_of_components(self, chart_xy):
        """Test that the component count must match the chart."""
        with pytest.raises(ChartError):
            VectorField(chart_xy, (1,))

    def test_apply(self, chart_xy):
        """Test the directional derivative."""
        x, y = chart_xy.gens()
        X = VectorField(chart_xy, (y, 0))
        assert X.apply(x * x) == 2 * x * y

    def test_bracket_of_coordinate_and_twisted_field(self, chart_xyz):
        """Test [∂x, x∂y + ∂z] = ∂y."""
        x = chart_xyz.gen("x")
        Zz = VectorField(chart_xyz, (0, x, 1))
        dx = VectorField.coordinate(chart_xyz, "x")
        assert lie_bracket(dx, Zz) == VectorField.coordinate(chart_xyz, "y")

    def test_bracket_antisymmetric(self, chart_xy):
        """Test [X, Y] = −[Y, X]."""
        x, y = chart_xy.gens()
        X = VectorField(chart_xy, (y, x * x))
        Y = VectorField(chart_xy, (x * y, 1))
        assert lie_bracket(X, Y) == -lie_bracket(Y, X)

    def test_bracket_rejects_other_chart(self, chart_xy, chart_xyz):
        """Test that brackets across charts fail."""
        with pytest.raises(ChartError):
            lie_bracket(VectorField.zero(chart_xy), VectorField.zero(chart_xyz))


@pytest.mark.unit
class TestDifferentialForm:
    """Test forms, wedge, interior and exterior derivative."""

    def test_from_terms_sorts_with_sign(self, chart_xy):
        """Test that dy∧dx is stored as −dx∧dy."""
        form = DifferentialForm.from_terms(chart_xy, 2, [((1, 0), 1)])
        assert form.coefficient((0, 1)) == -chart_xy.one

    def test_repeated_index_vanishes(self, chart_xy):
        """Test that dx∧dx contributes nothing."""
        assert DifferentialForm.from_terms(chart_xy, 2, [((0, 0), 1)]).is_zero()

    def test_unsorted_raw_index_rejected(self, chart_xy):
        """Test that the raw constructor insists on increasing indices."""
        with pytest.raises(ValidationError):
            DifferentialForm(chart_xy, 2, {(1, 0): chart_xy.one})

    def test_wedge_antisymmetric(self, chart_xy):
        """Test dx∧dy = −dy∧dx and dx∧dx = 0."""
        dx, dy = _dx(chart_xy, "x"), _dx(chart_xy, "y")
        assert wedge(dx, dy) == -wedge(dy, dx)
        assert wedge(dx, dx).is_zero()

    def test_interior_contracts_first_slot(self, chart_xy):
        """Test ι_∂x (dx∧dy) = dy and ι_∂y (dx∧dy) = −dx."""
        dxdy = DifferentialForm.from_terms(chart_xy, 2, [((0, 1), 1)])
        assert interior(VectorField.coordinate(chart_xy, "x"), dxdy) == _dx(chart_xy, "y")
        assert interior(VectorField.coordinate(chart_xy, "y"), dxdy) == -_dx(chart_xy, "x")

    def test_evaluation_on_vectors(self, chart_xy):
        """Test (dx∧dy)(∂x, ∂y) = 1."""
        dxdy = DifferentialForm.from_terms(chart_xy, 2, [((0, 1), 1)])
        ex = VectorField.coordinate(chart_xy, "x")
        ey = VectorField.coordinate(chart_xy, "y")
        assert dxdy(ex, ey) == chart_xy.one
        assert dxdy(ey, ex) == -chart_xy.one

    def test_ext_d_of_one_form(self, chart_xyz):
        """Test d(dy − x dz) = −dx∧dz."""
        x = chart_xyz.gen("x")
        theta = DifferentialForm.one_form(chart_xyz, [0, 1, -x])
        assert ext_d(theta) == DifferentialForm.from_terms(chart_xyz, 2, [((0, 2), -1)])

    def test_exact_function(self, chart_xy):
        """Test d(x y) = y dx + x dy."""
        x, y = chart_xy.gens()
        assert exact(x * y, chart_xy) == DifferentialForm.one_form(chart_xy, [y, x])

    def test_text_and_terms(self, chart_xyz, volume_form):
        """Test the text and serializable renderings."""
        H = volume_form.scale(5)
        assert H.to_text() == "(5)*dx^dy^dz"
        assert H.to_terms() == [(["x", "y", "z"], "5")]
        assert DifferentialForm.zero(chart_xyz, 3).to_text() == "0"

    def test_top_degree_derivative_vanishes(self, volume_form):
        """Test that d of a top form is zero."""
        assert ext_d(volume_form).is_zero()


@pytest.mark.unit
class TestCalculusIdentities:
    """Property tests of the exterior calculus on random polynomial data."""

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_d_squared_is_zero(self, seed):
        """Test d∘d = 0 on random 1- and 2-forms."""
        chart = Chart(("x", "y", "z"))
        source = RandomSource(chart, seed=seed)
        for degree in (0, 1, 2):
            assert ext_d(ext_d(source.form(degree, density=1.0))).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_cartan_formula(self, seed):
        """Test £_X ω = dι_X ω + ι_X dω on random data."""
        chart = Chart(("x", "y", "z"))
        source = RandomSource(chart, seed=seed)
        X = source.vector_field()
        for degree in (1, 2):
            omega = source.form(degree)
            expected = ext_d(interior(X, omega)) + interior(X, ext_d(omega))
            assert lie_derivative(X, omega) == expected

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_bracket_interior_identity(self, seed):
        """Test ι_[X,Y] = £_X ι_Y − ι_Y £_X on random 2-forms."""
        chart = Chart(("x", "y", "z"))
        source = RandomSource(chart, seed=seed)
        X, Y = source.vector_field(), source.vector_field()
        omega = source.form(2)
        lhs = interior(lie_bracket(X, Y), omega)
        rhs = lie_derivative(X, interior(Y, omega)) - interior(Y, lie_derivative(X, omega))
        assert lhs == rhs

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=10_000))
    def test_closed_three_form_is_closed(self, seed):
        """Test that sampled 3-forms on a 4-dimensional chart are closed."""
        chart = Chart(("x", "y", "z", "w"))
        assert ext_d(RandomSource(chart, seed=seed).closed_three_form()).is_zero()
