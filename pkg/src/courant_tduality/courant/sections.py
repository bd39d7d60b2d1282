"""
Sections X + α of the generalised tangent bundle TM ⊕ T*M.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple
import logging

from sympy.polys.rings import PolyElement

from ..core.exceptions import ValidationError
from ..exterior.chart import Chart
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm
from ..exterior.polynomial import evaluate, format_polynomial
from ..exterior.sampling import RandomSource

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GeneralizedSection:
    """
    A section X + α with polynomial coefficients.

    Attributes:
        vec: The vector part X.
        form: The 1-form part α.
    """

    vec: VectorField
    form: DifferentialForm

    def __post_init__(self) -> None:
        self.vec.chart.check_same(self.form.chart)
        if self.form.degree != 1:
            if not self.form.is_zero():
                raise ValidationError(
                    f"Section form part must be a 1-form, got degree {self.form.degree}"
                )
            object.__setattr__(self, "form", DifferentialForm.zero(self.vec.chart, 1))

    @property
    def chart(self) -> Chart:
        return self.vec.chart

    @classmethod
    def zero(cls, chart: Chart) -> "GeneralizedSection":
        return cls(VectorField.zero(chart), DifferentialForm.zero(chart, 1))

    @classmethod
    def of_vector(cls, X: VectorField) -> "GeneralizedSection":
        return cls(X, DifferentialForm.zero(X.chart, 1))

    @classmethod
    def of_form(cls, alpha: DifferentialForm) -> "GeneralizedSection":
        return cls(VectorField.zero(alpha.chart), alpha)

    @classmethod
    def from_components(
        cls, chart: Chart, vec: Sequence[Any], form: Sequence[Any]
    ) -> "GeneralizedSection":
        """Build X + α from coordinate components (X^i) and (α_i)."""
        return cls(VectorField(chart, tuple(vec)), DifferentialForm.one_form(chart, form))

    def components(self) -> Tuple[PolyElement, ...]:
        """(X^1, ..., X^n, α_1, ..., α_n)."""
        return self.vec.components + self.form.components()

    def __add__(self, other: "GeneralizedSection") -> "GeneralizedSection":
        return GeneralizedSection(self.vec + other.vec, self.form + other.form)

    def __sub__(self, other: "GeneralizedSection") -> "GeneralizedSection":
        return GeneralizedSection(self.vec - other.vec, self.form - other.form)

    def __neg__(self) -> "GeneralizedSection":
        return GeneralizedSection(-self.vec, -self.form)

    def scale(self, f: Any) -> "GeneralizedSection":
        return GeneralizedSection(self.vec.scale(f), self.form.scale(f))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralizedSection):
            return NotImplemented
        return self.vec == other.vec and self.form == other.form

    def __hash__(self) -> int:
        return hash((self.vec, self.form))

    def is_zero(self) -> bool:
        return self.vec.is_zero() and self.form.is_zero()

    def at(self, point: Sequence[Any]) -> Tuple[Any, ...]:
        """Fiber vector (X^i, α_i) at a rational point."""
        return tuple(evaluate(c, point) for c in self.components())

    def to_dict(self) -> Dict[str, List[str]]:
        return {
            "vec": [format_polynomial(c) for c in self.vec.components],
            "form": [format_polynomial(c) for c in self.form.components()],
        }

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if not self.vec.is_zero():
            parts.append(self.vec.to_text())
        if not self.form.is_zero():
            parts.append(self.form.to_text())
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GeneralizedSection[{self.to_text()}]"


def anchor(e: GeneralizedSection) -> VectorField:
    """ρ(X + α) = X."""
    return e.vec


def pairing(e1: GeneralizedSection, e2: GeneralizedSection) -> PolyElement:
    """
    ⟨X + α, Y + β⟩ = α(Y) + β(X).

    Example:
        >>> chart = Chart(("x", "y"))
        >>> e1 = GeneralizedSection.from_components(chart, [1, 0], [0, 1])
        >>> e2 = GeneralizedSection.from_components(chart, [0, 1], [1, 0])
        >>> pairing(e1, e2) == chart.constant(2)
        True
    """
    e1.chart.check_same(e2.chart)
    total = e1.chart.zero
    for a, y in zip(e1.form.components(), e2.vec.components):
        if a and y:
            total += a * y
    for b, x in zip(e2.form.components(), e1.vec.components):
        if b and x:
            total += b * x
    return total


def random_section(source: RandomSource) -> GeneralizedSection:
    """A random section drawn from a seeded RandomSource."""
    return GeneralizedSection(source.vector_field(), source.form(1, density=1.0))


def random_sections(source: RandomSource, count: int) -> List[GeneralizedSection]:
    return [random_section(source) for _ in range(count)]
