"""
Polynomial vector fields and the Lie bracket.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Sequence, Tuple
import logging

from sympy.polys.rings import PolyElement

from ..core.exceptions import ChartError
from .chart import Chart
from .polynomial import evaluate, format_polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class VectorField:
    """
    X = X^i ∂_i with polynomial components.

    Attributes:
        chart: The chart.
        components: One polynomial per coordinate.
    """

    chart: Chart
    components: Tuple[PolyElement, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.chart.require(c, "vector component") for c in self.components)
        if len(comps) != self.chart.dim:
            raise ChartError(
                f"Vector field needs {self.chart.dim} components, got {len(comps)}"
            )
        object.__setattr__(self, "components", comps)

    @classmethod
    def zero(cls, chart: Chart) -> "VectorField":
        return cls(chart, tuple(chart.zero for _ in range(chart.dim)))

    @classmethod
    def coordinate(cls, chart: Chart, name: str) -> "VectorField":
        """The coordinate field ∂/∂name."""
        idx = chart.index(name)
        return cls(chart, tuple(chart.one if i == idx else chart.zero for i in range(chart.dim)))

    @classmethod
    def from_components(cls, chart: Chart, components: Iterable[Any]) -> "VectorField":
        return cls(chart, tuple(components))

    def __getitem__(self, i: int) -> PolyElement:
        return self.components[i]

    def _check(self, other: "VectorField") -> None:
        if not isinstance(other, VectorField):
            raise TypeError(f"Expected a VectorField, got {type(other).__name__}")
        self.chart.check_same(other.chart)

    def __add__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        pairs = zip(self.components, other.components)
        return VectorField(self.chart, tuple(a + b for a, b in pairs))

    def __sub__(self, other: "VectorField") -> "VectorField":
        self._check(other)
        pairs = zip(self.components, other.components)
        return VectorField(self.chart, tuple(a - b for a, b in pairs))

    def __neg__(self) -> "VectorField":
        return VectorField(self.chart, tuple(-a for a in self.components))

    def scale(self, f: Any) -> "VectorField":
        """f·X for a polynomial or rational f."""
        f = self.chart.require(f)
        return VectorField(self.chart, tuple(f * a for a in self.components))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.chart, tuple(tuple(sorted(c.items())) for c in self.components)))

    def is_zero(self) -> bool:
        return not any(self.components)

    def apply(self, f: PolyElement) -> PolyElement:
        """Directional derivative X(f) = X^i ∂_i f."""
        f = self.chart.require(f)
        result = self.chart.zero
        for i, comp in enumerate(self.components):
            if comp:
                result += comp * f.diff(i)
        return result

    def at(self, point: Sequence[Any]) -> Tuple[Any, ...]:
        """Components evaluated at a rational point."""
        return tuple(evaluate(c, point) for c in self.components)

    def to_text(self) -> str:
        terms = [
            f"({format_polynomial(c)})*d/d{name}"
            for c, name in zip(self.components, self.chart.coords)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"VectorField[{self.to_text()}]"


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """
    [X, Y]^i = X^j ∂_j Y^i − Y^j ∂_j X^i.

    Raises:
        ChartError: If X and Y live on different charts.

    Example:
        >>> chart = Chart(("x", "y", "z"))
        >>> x = chart.gen("x")
        >>> Zz = VectorField(chart, (0, x, 1))
        >>> Zx = VectorField.coordinate(chart, "x")
        >>> lie_bracket(Zx, Zz) == VectorField.coordinate(chart, "y")
        True
    """
    X._check(Y)
    return VectorField(
        X.chart,
        tuple(X.apply(y_i) - Y.apply(x_i) for x_i, y_i in zip(X.components, Y.components)),
    )
