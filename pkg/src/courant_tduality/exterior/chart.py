"""
Coordinate charts.

A Chart is an ordered tuple of coordinate names. It owns the polynomial
ring Q[x_1, ..., x_n] (graded-lex order) in which every coefficient of a
vector field, form or matrix on the chart lives.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple
import logging

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from ..core.exceptions import ChartError
from ..utils.validators import IDENTIFIER

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _ring_for(coords: Tuple[str, ...]) -> PolyRing:
    return PolyRing(coords, QQ, grlex)


@dataclass(frozen=True)
class Chart:
    """
    Named local coordinates.

    Attributes:
        coords: Distinct identifiers, in chart order.

    Example:
        >>> chart = Chart(("x", "y", "z"))
        >>> chart.dim
        3
        >>> chart.index("z")
        2
    """

    coords: Tuple[str, ...]

    def __post_init__(self) -> None:
        coords = tuple(self.coords)
        if not coords:
            raise ChartError("A chart needs at least one coordinate")
        for name in coords:
            if not isinstance(name, str) or not IDENTIFIER.match(name):
                raise ChartError(f"Invalid coordinate name: {name!r}")
        if len(set(coords)) != len(coords):
            raise ChartError(f"Coordinate names must be unique: {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *names: str) -> "Chart":
        """Chart.of("x", "y") is Chart(("x", "y"))."""
        return cls(tuple(names))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def ring(self) -> PolyRing:
        return _ring_for(self.coords)

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def index(self, name: str) -> int:
        try:
            return self.coords.index(name)
        except ValueError:
            raise ChartError(f"Unknown coordinate '{name}' on chart {self.coords}")

    def gen(self, name: str) -> PolyElement:
        """The coordinate function with the given name."""
        return self.ring.gens[self.index(name)]

    def gens(self) -> Tuple[PolyElement, ...]:
        return tuple(self.ring.gens)

    def constant(self, value) -> PolyElement:
        from .polynomial import to_qq

        return self.ring.ground_new(to_qq(value))

    def owns(self, p: PolyElement) -> bool:
        return getattr(p, "ring", None) == self.ring

    def require(self, p: PolyElement, what: str = "polynomial") -> PolyElement:
        """Coerce ints/rationals to constants; reject polynomials of other charts."""
        if isinstance(p, PolyElement):
            if p.ring != self.ring:
                raise ChartError(
                    f"{what} belongs to chart {p.ring.symbols}, expected {self.coords}"
                )
            return p
        return self.constant(p)

    def sub_chart(self, names: Iterable[str]) -> "Chart":
        """Chart on a subset of the coordinates, keeping chart order."""
        keep = set(names)
        for name in keep:
            self.index(name)
        return Chart(tuple(c for c in self.coords if c in keep))

    def check_same(self, other: "Chart") -> None:
        if self != other:
            raise ChartError(f"Chart mismatch: {self.coords} vs {other.coords}")

    def __str__(self) -> str:
        return "(" + ", ".join(self.coords) + ")"


def common_chart(*charts: Chart) -> Chart:
    """Return the shared chart of several objects, raising on a mismatch."""
    first = charts[0]
    for other in charts[1:]:
        first.check_same(other)
    return first
