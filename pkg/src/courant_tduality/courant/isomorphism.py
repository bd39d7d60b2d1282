"""
Classical Courant algebroid isomorphisms Φ = φ̄ ∘ e^B.

Here φ̄(X + α) = φ_*X + (φ^{-1})*α. Φ maps (TM₁ ⊕ T*M₁, H₁) to
(TM₂ ⊕ T*M₂, H₂) exactly when φ*H₂ = H₁ − dB.
"""

from typing import List, Optional, Sequence
import logging

from ..core.exceptions import ValidationError
from ..core.report import CheckReport
from ..exterior.diffeo import DiffeoMap
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm, ext_d, interior
from ..exterior.polynomial import format_polynomial
from ..exterior.sampling import RandomSource
from .algebroid import TwistedCourant, dorfman
from .sections import GeneralizedSection, anchor, pairing, random_sections

logger = logging.getLogger(__name__)


class CourantIso:
    """
    Φ = φ̄ ∘ e^B between two twisted standard Courant algebroids.

    Attributes:
        phi: The underlying diffeomorphism source.chart -> target.chart.
        B: 2-form on the source chart.
        source: (TM₁ ⊕ T*M₁, H₁).
        target: (TM₂ ⊕ T*M₂, H₂).

    Raises:
        ValidationError: If φ*H₂ ≠ H₁ − dB and check is set. With
            check=False the map is built as given and iso_check reports
            the failing cocycle.
    """

    def __init__(
        self,
        phi: DiffeoMap,
        B: DifferentialForm,
        source: TwistedCourant,
        target: TwistedCourant,
        check: bool = True,
    ) -> None:
        phi.source.check_same(source.chart)
        phi.target.check_same(target.chart)
        source.chart.check_same(B.chart)
        if B.degree != 2 and not B.is_zero():
            raise ValidationError(f"B must be a 2-form, got degree {B.degree}")
        self.phi = phi
        self.B = B if B.degree == 2 else DifferentialForm.zero(source.chart, 2)
        self.source = source
        self.target = target
        residual = self.cocycle_residual()
        if check and not residual.is_zero():
            raise ValidationError(
                f"Not a Courant isomorphism: φ*H₂ − (H₁ − dB) = {residual.to_text()}"
            )
        logger.debug(f"CourantIso {phi.source} -> {phi.target} built")

    @classmethod
    def induced(cls, phi: DiffeoMap, source: TwistedCourant) -> "CourantIso":
        """φ̄ with B = 0, landing on H₂ = (φ^{-1})*H₁."""
        target = TwistedCourant(phi.target, phi.pushforward_form(source.H))
        return cls(phi, DifferentialForm.zero(source.chart, 2), source, target)

    @classmethod
    def with_bfield(
        cls, phi: DiffeoMap, B: DifferentialForm, source: TwistedCourant
    ) -> "CourantIso":
        """φ̄ ∘ e^B with the target flux H₂ = (φ^{-1})*(H₁ − dB)."""
        H2 = phi.pushforward_form(source.H - ext_d(B))
        return cls(phi, B, source, TwistedCourant(phi.target, H2))

    def cocycle_residual(self) -> DifferentialForm:
        """φ*H₂ − H₁ + dB."""
        return self.phi.pullback(self.target.H) - self.source.H + ext_d(self.B)

    def apply(self, e: GeneralizedSection) -> GeneralizedSection:
        return iso_apply(self, e)

    def __repr__(self) -> str:
        return f"CourantIso({self.phi!r}, B={self.B.to_text()})"


def iso_apply(Phi: CourantIso, e: GeneralizedSection) -> GeneralizedSection:
    """Φ(X + α) = φ_*X + (φ^{-1})*(ι_X B + α)."""
    Phi.source.chart.check_same(e.chart)
    shifted = e.form + interior(e.vec, Phi.B)
    return GeneralizedSection(Phi.phi.pushforward(e.vec), Phi.phi.pushforward_form(shifted))


def pushed_anchor(phi: DiffeoMap, e: GeneralizedSection) -> VectorField:
    """φ_*ρ(e) through its action on the target coordinates, without the jacobian."""
    X = anchor(e)
    return VectorField(phi.target, tuple(phi.push_function(X.apply(f)) for f in phi.forward))


def iso_check(
    Phi: CourantIso,
    sections: Optional[Sequence[GeneralizedSection]] = None,
    seed: int = 0,
    count: int = 10,
) -> CheckReport:
    """
    Verify that Φ is a Courant algebroid isomorphism.

    Checks the flux cocycle φ*H₂ = H₁ − dB symbolically, then on every pair
    of sample sections: the pairing ⟨Φe1, Φe2⟩ = ⟨e1, e2⟩∘φ^{-1}, the
    bracket ⟦Φe1, Φe2⟧₂ = Φ⟦e1, e2⟧₁ and the anchor ρ(Φe) = φ_*ρ(e). The
    anchor is compared as a derivation: ρ(Φe) applied to a target
    coordinate y^a must equal ρ(e)(φ^a)∘φ^{-1}.

    Args:
        Phi: The isomorphism.
        sections: Sample sections on the source; drawn at random when omitted.
        seed: Seed for the random sections.
        count: Number of random sections.

    Returns:
        A suite report with children "cocycle", "isometry", "bracket" and "anchor".
    """
    if sections is None:
        sections = random_sections(RandomSource(Phi.source.chart, seed=seed), count)
    residual = Phi.cocycle_residual()
    cocycle = CheckReport.from_residuals(
        "iso.cocycle", {} if residual.is_zero() else {"phi*H2 - H1 + dB": residual.to_text()}
    )
    images: List[GeneralizedSection] = [iso_apply(Phi, e) for e in sections]
    iso_res, bracket_res, anchor_res = {}, {}, {}
    for i, (e1, f1) in enumerate(zip(sections, images)):
        expected = pushed_anchor(Phi.phi, e1)
        if anchor(f1) != expected:
            anchor_res[f"anchor[{i}]"] = (anchor(f1) - expected).to_text()
        for j, (e2, f2) in enumerate(zip(sections, images)):
            diff = pairing(f1, f2) - Phi.phi.push_function(pairing(e1, e2))
            if diff:
                iso_res[f"pairing[{i},{j}]"] = format_polynomial(diff)
            bracket = dorfman(Phi.target, f1, f2) - iso_apply(Phi, dorfman(Phi.source, e1, e2))
            if not bracket.is_zero():
                bracket_res[f"bracket[{i},{j}]"] = bracket.to_text()
    details = {"sections": len(sections), "seed": seed}
    return CheckReport.suite(
        "courant.iso_check",
        [
            cocycle,
            CheckReport.from_residuals("iso.isometry", iso_res, details=details),
            CheckReport.from_residuals("iso.bracket", bracket_res, details=details),
            CheckReport.from_residuals("iso.anchor", anchor_res, details=details),
        ],
        details=details,
    )
