"""
B-field transformations e^B(X + α) = X + ι_X B + α.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple
import logging

from ..core.exceptions import ValidationError
from ..core.report import CheckReport
from ..exterior.forms import DifferentialForm, ext_d, interior
from ..exterior.polynomial import format_polynomial
from .algebroid import TwistedCourant, dorfman
from .sections import GeneralizedSection, pairing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BFieldMap:
    """
    The orthogonal map e^B.

    Attributes:
        B: A 2-form.
    """

    B: DifferentialForm

    def __post_init__(self) -> None:
        if self.B.degree != 2:
            if not self.B.is_zero():
                raise ValidationError(f"B must be a 2-form, got degree {self.B.degree}")
            object.__setattr__(self, "B", DifferentialForm.zero(self.B.chart, 2))

    @property
    def chart(self):
        return self.B.chart

    def apply(self, e: GeneralizedSection) -> GeneralizedSection:
        return bfield_apply(self, e)

    def inverse(self) -> "BFieldMap":
        """e^{−B}."""
        return BFieldMap(-self.B)

    def is_closed(self) -> bool:
        return ext_d(self.B).is_zero()

    def __repr__(self) -> str:
        return f"BFieldMap({self.B.to_text()})"


def bfield_apply(b: BFieldMap, e: GeneralizedSection) -> GeneralizedSection:
    """
    e^B(X + α) = X + ι_X B + α.

    Example:
        >>> chart = Chart(("x", "y"))
        >>> B = BFieldMap(DifferentialForm.from_terms(chart, 2, [((0, 1), 1)]))
        >>> e = GeneralizedSection.of_vector(VectorField.coordinate(chart, "x"))
        >>> bfield_apply(B, e).form == DifferentialForm.differential(chart, "y")
        True
    """
    b.chart.check_same(e.chart)
    return GeneralizedSection(e.vec, e.form + interior(e.vec, b.B))


def bfield_bracket_defect(
    E: TwistedCourant, b: BFieldMap, e1: GeneralizedSection, e2: GeneralizedSection
) -> GeneralizedSection:
    """⟦e^B e1, e^B e2⟧_H − e^B⟦e1, e2⟧_H, which equals (0, ι_Y ι_X dB)."""
    lhs = dorfman(E, bfield_apply(b, e1), bfield_apply(b, e2))
    rhs = bfield_apply(b, dorfman(E, e1, e2))
    return lhs - rhs


def expected_defect(
    b: BFieldMap, e1: GeneralizedSection, e2: GeneralizedSection
) -> GeneralizedSection:
    """(0, ι_Y ι_X dB) for e1 = X + α, e2 = Y + β."""
    return GeneralizedSection.of_form(interior(e2.vec, interior(e1.vec, ext_d(b.B))))


def bfield_defect_check(
    E: TwistedCourant,
    b: BFieldMap,
    pairs: Iterable[Tuple[GeneralizedSection, GeneralizedSection]],
    name: Optional[str] = None,
) -> CheckReport:
    """
    Compare the bracket defect of e^B with (0, ι_Y ι_X dB) on each pair.

    Also checks that e^B preserves the pairing.
    """
    residuals = {}
    count = 0
    for k, (e1, e2) in enumerate(pairs):
        count += 1
        diff = bfield_bracket_defect(E, b, e1, e2) - expected_defect(b, e1, e2)
        if not diff.is_zero():
            residuals[f"defect[{k}]"] = diff.to_text()
        iso = pairing(bfield_apply(b, e1), bfield_apply(b, e2)) - pairing(e1, e2)
        if iso:
            residuals[f"pairing[{k}]"] = format_polynomial(iso)
    return CheckReport.from_residuals(
        name or "courant.bfield_defect",
        residuals,
        details={"pairs": count, "closed_B": b.is_closed()},
    )


def is_bracket_homomorphism(
    E: TwistedCourant, b: BFieldMap, sections: Sequence[GeneralizedSection]
) -> bool:
    """Whether e^B preserves the bracket on every pair drawn from sections."""
    return all(
        bfield_bracket_defect(E, b, e1, e2).is_zero() for e1 in sections for e2 in sections
    )
