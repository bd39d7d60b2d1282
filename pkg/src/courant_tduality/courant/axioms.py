"""
Courant algebroid axiom suite.

Every identity is evaluated exactly on sample sections and each clause
reports its non-zero residuals:

- metric compatibility: ρ(e1)⟨e2, e3⟩ = ⟨⟦e1, e2⟧, e3⟩ + ⟨e2, ⟦e1, e3⟧⟩
- symmetric part: ⟦e, e⟧ = ½𝒟⟨e, e⟩
- Jacobi: ⟦e1, ⟦e2, e3⟧⟧ = ⟦⟦e1, e2⟧, e3⟧ + ⟦e2, ⟦e1, e3⟧⟧
- anchored Leibniz: ⟦e1, f e2⟧ = f⟦e1, e2⟧ + (ρ(e1)f) e2
- left Leibniz: ⟦f e1, e2⟧ = f⟦e1, e2⟧ − (ρ(e2)f) e1 + ⟨e1, e2⟩𝒟f
- anchor homomorphism: ρ⟦e1, e2⟧ = [ρe1, ρe2]
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple
import logging

from sympy.polys.domains import QQ

from ..core.report import CheckReport
from ..exterior.fields import lie_bracket
from ..exterior.polynomial import format_polynomial
from ..exterior.sampling import RandomSource
from .algebroid import TwistedCourant, derivation_D, dorfman
from .sections import GeneralizedSection, pairing, random_section

logger = logging.getLogger(__name__)

Triple = Tuple[GeneralizedSection, GeneralizedSection, GeneralizedSection]

AXIOMS = (
    "metric_compatibility",
    "symmetric_part",
    "jacobi",
    "leibniz_anchored",
    "leibniz_left",
    "anchor_homomorphism",
)


def _metric_compatibility(E: TwistedCourant, t: Triple, f) -> str:
    e1, e2, e3 = t
    lhs = e1.vec.apply(pairing(e2, e3))
    rhs = pairing(dorfman(E, e1, e2), e3) + pairing(e2, dorfman(E, e1, e3))
    diff = lhs - rhs
    return format_polynomial(diff) if diff else ""


def _symmetric_part(E: TwistedCourant, t: Triple, f) -> str:
    e = t[0]
    half = derivation_D(E, pairing(e, e)).scale(QQ(1, 2))
    diff = dorfman(E, e, e) - half
    return "" if diff.is_zero() else diff.to_text()


def _jacobi(E: TwistedCourant, t: Triple, f) -> str:
    e1, e2, e3 = t
    lhs = dorfman(E, e1, dorfman(E, e2, e3))
    rhs = dorfman(E, dorfman(E, e1, e2), e3) + dorfman(E, e2, dorfman(E, e1, e3))
    diff = lhs - rhs
    return "" if diff.is_zero() else diff.to_text()


def _leibniz_anchored(E: TwistedCourant, t: Triple, f) -> str:
    e1, e2, _ = t
    lhs = dorfman(E, e1, e2.scale(f))
    rhs = dorfman(E, e1, e2).scale(f) + e2.scale(e1.vec.apply(f))
    diff = lhs - rhs
    return "" if diff.is_zero() else diff.to_text()


def _leibniz_left(E: TwistedCourant, t: Triple, f) -> str:
    e1, e2, _ = t
    lhs = dorfman(E, e1.scale(f), e2)
    rhs = (
        dorfman(E, e1, e2).scale(f)
        - e1.scale(e2.vec.apply(f))
        + derivation_D(E, f).scale(pairing(e1, e2))
    )
    diff = lhs - rhs
    return "" if diff.is_zero() else diff.to_text()


def _anchor_homomorphism(E: TwistedCourant, t: Triple, f) -> str:
    e1, e2, _ = t
    diff = dorfman(E, e1, e2).vec - lie_bracket(e1.vec, e2.vec)
    return "" if diff.is_zero() else diff.to_text()


_CLAUSES: Dict[str, Callable[..., str]] = {
    "metric_compatibility": _metric_compatibility,
    "symmetric_part": _symmetric_part,
    "jacobi": _jacobi,
    "leibniz_anchored": _leibniz_anchored,
    "leibniz_left": _leibniz_left,
    "anchor_homomorphism": _anchor_homomorphism,
}


def sample_triples(
    E: TwistedCourant, count: int, seed: int, max_degree: int = 2, coefficient_bound: int = 9
) -> Tuple[List[Triple], List]:
    """Seeded random section triples and test functions for the axiom suite."""
    source = RandomSource(
        E.chart, seed=seed, max_degree=max_degree, coefficient_bound=coefficient_bound
    )
    triples: List[Triple] = []
    functions = []
    for _ in range(count):
        triples.append((random_section(source), random_section(source), random_section(source)))
        functions.append(source.polynomial(allow_zero=False))
    return triples, functions


def courant_axioms_check(
    E: TwistedCourant,
    triples: Optional[Sequence[Triple]] = None,
    functions: Optional[Sequence] = None,
    count: int = 100,
    seed: int = 0,
    axioms: Sequence[str] = AXIOMS,
) -> CheckReport:
    """
    Run the axiom suite on sample section triples.

    Args:
        E: The twisted Courant algebroid.
        triples: Sample triples (e1, e2, e3); drawn from seed when omitted.
        functions: One test function per triple for the Leibniz rules.
        count: Number of random triples when none are given.
        seed: Seed for the random triples.
        axioms: Subset of AXIOMS to run.

    Returns:
        A suite report with one child per axiom, named "courant.<axiom>".

    Example:
        >>> E = TwistedCourant.untwisted(Chart(("x", "y", "z")))
        >>> courant_axioms_check(E, count=5, seed=1).passed
        True
    """
    if triples is None:
        triples, functions = sample_triples(E, count, seed)
    if functions is None:
        functions = [E.chart.gens()[k % E.chart.dim] for k in range(len(triples))]
    children = []
    for axiom in axioms:
        clause = _CLAUSES[axiom]
        residuals = {}
        for k, (t, f) in enumerate(zip(triples, functions)):
            text = clause(E, t, E.chart.require(f))
            if text:
                residuals[f"{axiom}[{k}]"] = text
        children.append(CheckReport.from_residuals(f"courant.{axiom}", residuals))
        logger.debug(f"Axiom {axiom}: {len(residuals)} residual(s) on {len(triples)} samples")
    return CheckReport.suite(
        "courant.axioms",
        children,
        details={"samples": len(triples), "seed": seed, "H": E.H.to_text()},
    )
