"""
The H-twisted standard Courant algebroid (TM ⊕ T*M, H) on a chart.

The Dorfman bracket is

    ⟦X + α, Y + β⟧_H = [X, Y] + £_X β − ι_Y dα + ι_Y ι_X H

with pairing ⟨X + α, Y + β⟩ = α(Y) + β(X), anchor ρ(X + α) = X and
𝒟f = (0, df).
"""

from dataclasses import dataclass
from typing import Any, Optional
import logging

from ..core.exceptions import ValidationError
from ..core.report import CheckReport
from ..exterior.chart import Chart
from ..exterior.fields import VectorField, lie_bracket
from ..exterior.forms import DifferentialForm, exact, ext_d, interior, lie_derivative
from .sections import GeneralizedSection, pairing

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TwistedCourant:
    """
    (TM ⊕ T*M, H) with a closed 3-form H.

    Attributes:
        chart: The chart.
        H: Closed 3-form; dH = 0 is verified at construction.

    Raises:
        ValidationError: If H is not a closed 3-form on the chart.
    """

    chart: Chart
    H: DifferentialForm

    def __post_init__(self) -> None:
        self.chart.check_same(self.H.chart)
        if self.H.degree != 3:
            if not self.H.is_zero():
                raise ValidationError(f"H must be a 3-form, got degree {self.H.degree}")
            object.__setattr__(self, "H", DifferentialForm.zero(self.chart, 3))
        dH = ext_d(self.H)
        if not dH.is_zero():
            raise ValidationError(f"H is not closed: dH = {dH.to_text()}")
        logger.debug(f"TwistedCourant on {self.chart} with H = {self.H.to_text()}")

    @classmethod
    def untwisted(cls, chart: Chart) -> "TwistedCourant":
        return cls(chart, DifferentialForm.zero(chart, 3))

    def dorfman(self, e1: GeneralizedSection, e2: GeneralizedSection) -> GeneralizedSection:
        return dorfman(self, e1, e2)

    def pairing(self, e1: GeneralizedSection, e2: GeneralizedSection) -> Any:
        return pairing(e1, e2)

    def anchor(self, e: GeneralizedSection) -> VectorField:
        return e.vec

    def derivation(self, f: Any) -> GeneralizedSection:
        return derivation_D(self, f)

    def twisted(self, H: DifferentialForm) -> "TwistedCourant":
        """The same chart with another closed 3-form."""
        return TwistedCourant(self.chart, H)

    def __repr__(self) -> str:
        return f"TwistedCourant({self.chart}, H={self.H.to_text()})"


def dorfman(
    E: TwistedCourant, e1: GeneralizedSection, e2: GeneralizedSection
) -> GeneralizedSection:
    """
    The H-twisted Dorfman bracket.

    Raises:
        ChartError: If a section lives on another chart.

    Example:
        >>> chart = Chart(("x", "y", "z"))
        >>> H = DifferentialForm.from_terms(chart, 3, [((0, 1, 2), 5)])
        >>> E = TwistedCourant(chart, H)
        >>> dx = GeneralizedSection.of_vector(VectorField.coordinate(chart, "x"))
        >>> dy = GeneralizedSection.of_vector(VectorField.coordinate(chart, "y"))
        >>> E.dorfman(dx, dy).form == DifferentialForm.from_terms(chart, 1, [((2,), 5)])
        True
    """
    E.chart.check_same(e1.chart)
    E.chart.check_same(e2.chart)
    X, alpha = e1.vec, e1.form
    Y, beta = e2.vec, e2.form
    vec = lie_bracket(X, Y)
    form = lie_derivative(X, beta) - interior(Y, ext_d(alpha))
    if not E.H.is_zero():
        form = form + interior(Y, interior(X, E.H))
    return GeneralizedSection(vec, form)


def derivation_D(E: TwistedCourant, f: Any) -> GeneralizedSection:
    """𝒟f = (0, df)."""
    return GeneralizedSection.of_form(exact(E.chart.require(f), E.chart))


def exactness_witness(
    H1: DifferentialForm, H2: DifferentialForm, B: DifferentialForm, name: Optional[str] = None
) -> CheckReport:
    """
    Witness that H1 and H2 differ by an exact form, H1 − H2 = dB.

    Returns:
        A symbolic CheckReport with the residual H1 − H2 − dB on failure.
    """
    residual = H1 - H2 - ext_d(B)
    residuals = {} if residual.is_zero() else {"H1 - H2 - dB": residual.to_text()}
    return CheckReport.from_residuals(name or "courant.exactness_witness", residuals)
