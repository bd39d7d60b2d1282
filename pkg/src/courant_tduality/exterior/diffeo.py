"""
Polynomial diffeomorphisms between charts.

A DiffeoMap carries both directions explicitly; the round trips
forward∘inverse and inverse∘forward are verified to be the identity at
construction. Vector fields are pushed forward, forms and 2-tensors are
pulled back.
"""

from typing import Any, Sequence, Tuple
import logging

from sympy.polys.rings import PolyElement

from ..core.exceptions import FrameError
from .chart import Chart
from .fields import VectorField
from .forms import DifferentialForm, wedge_all
from .matrix import PolyMatrix
from .polynomial import compose, format_polynomial

logger = logging.getLogger(__name__)


class DiffeoMap:
    """
    φ: source -> target with polynomial inverse.

    Attributes:
        source: Source chart.
        target: Target chart.
        forward: Target coordinates as polynomials on the source.
        inverse: Source coordinates as polynomials on the target.
        jacobian: J[a][i] = ∂ forward_a / ∂ x^i, on the source.
    """

    def __init__(
        self,
        source: Chart,
        target: Chart,
        forward: Sequence[Any],
        inverse: Sequence[Any],
    ) -> None:
        if source.dim != target.dim:
            raise FrameError(f"Charts of different dimension: {source.dim} vs {target.dim}")
        self.source = source
        self.target = target
        self.forward: Tuple[PolyElement, ...] = tuple(source.require(p) for p in forward)
        self.inverse: Tuple[PolyElement, ...] = tuple(target.require(p) for p in inverse)
        if len(self.forward) != target.dim or len(self.inverse) != source.dim:
            raise FrameError("Forward and inverse maps need one polynomial per coordinate")
        self._check_round_trip()
        self.jacobian = PolyMatrix.from_rows(
            source, [[f.diff(i) for i in range(source.dim)] for f in self.forward]
        )

    @classmethod
    def identity(cls, chart: Chart) -> "DiffeoMap":
        return cls(chart, chart, chart.gens(), chart.gens())

    def _check_round_trip(self) -> None:
        there_and_back = [compose(p, self.forward, self.source.ring) for p in self.inverse]
        if list(there_and_back) != list(self.source.gens()):
            bad = ", ".join(format_polynomial(p) for p in there_and_back)
            raise FrameError(f"inverse∘forward is not the identity: ({bad})")
        back_and_there = [compose(p, self.inverse, self.target.ring) for p in self.forward]
        if list(back_and_there) != list(self.target.gens()):
            bad = ", ".join(format_polynomial(p) for p in back_and_there)
            raise FrameError(f"forward∘inverse is not the identity: ({bad})")

    def inverted(self) -> "DiffeoMap":
        return DiffeoMap(self.target, self.source, self.inverse, self.forward)

    def then(self, other: "DiffeoMap") -> "DiffeoMap":
        """other∘self."""
        self.target.check_same(other.source)
        forward = [compose(p, self.forward, self.source.ring) for p in other.forward]
        inverse = [compose(p, other.inverse, other.target.ring) for p in self.inverse]
        return DiffeoMap(self.source, other.target, forward, inverse)

    def pull_function(self, f: Any) -> PolyElement:
        """f∘φ for a polynomial on the target."""
        return compose(self.target.require(f), self.forward, self.source.ring)

    def push_function(self, f: Any) -> PolyElement:
        """f∘φ^{-1} for a polynomial on the source."""
        return compose(self.source.require(f), self.inverse, self.target.ring)

    def pushforward(self, X: VectorField) -> VectorField:
        """
        (φ_*X)^a = (J^a_i X^i)∘φ^{-1}.

        Example:
            >>> chart = Chart(("x",))
            >>> phi = DiffeoMap.identity(chart)
            >>> X = VectorField.coordinate(chart, "x")
            >>> phi.pushforward(X) == X
            True
        """
        self.source.check_same(X.chart)
        comps = self.jacobian.apply(X.components)
        return VectorField(self.target, tuple(self.push_function(c) for c in comps))

    def pullback(self, omega: DifferentialForm) -> DifferentialForm:
        """φ*ω = Σ_I (ω_I∘φ) dφ^{I_1}∧...∧dφ^{I_p}."""
        self.target.check_same(omega.chart)
        if omega.degree == 0:
            return DifferentialForm.function(self.source, self.pull_function(omega.as_function()))
        differentials = [
            DifferentialForm.one_form(self.source, self.jacobian.row(a))
            for a in range(self.target.dim)
        ]
        result = DifferentialForm.zero(self.source, omega.degree)
        for idx, c in omega.coeffs.items():
            pulled = wedge_all([differentials[a] for a in idx])
            result = result + pulled.scale(self.pull_function(c))
        return result

    def pushforward_form(self, omega: DifferentialForm) -> DifferentialForm:
        """(φ^{-1})*ω for a form on the source."""
        return self.inverted().pullback(omega)

    def pullback_tensor(self, t: PolyMatrix) -> PolyMatrix:
        """φ*T = J^T (T∘φ) J for a bilinear form given by its coordinate matrix on the target."""
        self.target.check_same(t.chart)
        composed = t.map(self.pull_function, chart=self.source)
        return self.jacobian.T @ composed @ self.jacobian

    def __repr__(self) -> str:
        images = ", ".join(
            f"{name}'={format_polynomial(p)}" for name, p in zip(self.target.coords, self.forward)
        )
        return f"DiffeoMap({self.source} -> {self.target}: {images})"
