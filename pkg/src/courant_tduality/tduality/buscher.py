"""
Buscher rules from the mixing block of B.

With h = g₁ + b₁ pulled back to M in the frame and h̃ = h + B, the dual
background is the Schur complement of the v1 block:

    (h₂)_hh = h̃_hh − h̃_h1 h̃_11⁻¹ h̃_1h
    (h₂)_2h = B_2h − B_21 h̃_11⁻¹ h̃_1h
    (h₂)_h2 = B_h2 − h̃_h1 h̃_11⁻¹ B_12
    (h₂)_22 = B_22 − B_21 h̃_11⁻¹ B_12

on the frame indices of Q₂, with g₂ and b₂ its symmetric and
antisymmetric parts. The same background also follows from the fiber map
O: E_{Q₁} -> E_{Q₂} whose graph is R, as 𝒢₂ = O^{−T} 𝒢₁ O^{−1}.
"""

from typing import Dict, List, Optional, Sequence, Tuple
import logging

from sympy import Matrix
from sympy.polys.rings import PolyElement

from ..core.exceptions import TDualityError, ValidationError, WorkbenchError
from ..core.report import SAMPLED, CheckReport
from ..courant.sections import GeneralizedSection
from ..exterior.matrix import PolyMatrix
from ..exterior.sampling import SamplePlan
from ..genmetric.metric import GeneralisedMetric
from ..genmetric.transverse import TransverseGeneralisedMetric
from .problem import DualBackground, TDualityProblem, project_point

logger = logging.getLogger(__name__)


def frame_metric_on_M(P: TDualityProblem) -> PolyMatrix:
    """h = ϖ₁*(ḡ₁ + b̄₁) as frame components on M, zero on K₁'s span."""
    W1 = TransverseGeneralisedMetric.pullback(P.K1, P.G1.g_coord, P.G1.b_coord)
    return W1.g + W1.b


def _v1_inverse(P: TDualityProblem, t: PolyMatrix) -> PolyMatrix:
    v1 = P.roles.v1
    block = t.submatrix(v1, v1)
    try:
        return block.inverse()
    except ValidationError as e:
        raise TDualityError(f"h1 on the duality directions is not invertible: {e}")


def dual_frame_components(P: TDualityProblem) -> PolyMatrix:
    """
    h₂ as an n₂×n₂ matrix of functions on M, indexed by K₂'s complement.

    Raises:
        TDualityError: If h̃ restricted to v1 has no polynomial inverse.
    """
    t = frame_metric_on_M(P) + P.B_frame
    v1 = P.roles.v1
    inv = _v1_inverse(P, t) if v1 else None
    indices = P.K2.complement
    rows = []
    for i in indices:
        row = []
        for j in indices:
            value = t[i, j]
            if inv is not None:
                for a, va in enumerate(v1):
                    for b, vb in enumerate(v1):
                        value = value - t[i, va] * inv[a, b] * t[vb, j]
            row.append(value)
        rows.append(row)
    return PolyMatrix.from_rows(P.chart, rows)


def dual_background(P: TDualityProblem) -> DualBackground:
    """
    The T-dual (ḡ₂, b̄₂) on Q₂.

    Raises:
        TDualityError: If the v1 block is singular or the result depends on
            a leaf coordinate of 𝓕₂.
    """
    h2 = dual_frame_components(P)
    try:
        hq = h2.map(P.K2.quotient.push_function, chart=P.K2.quotient_chart)
        qframe = P.K2.quotient_frame()
    except WorkbenchError as e:
        raise TDualityError(f"Dual background does not descend to Q2: {e}")
    frame_metric = GeneralisedMetric(hq.symmetric_part(), hq.antisymmetric_part(), frame=qframe)
    dual = DualBackground(frame_metric.in_coordinates(), frame_metric)
    logger.info(f"{P.name}: dual metric g2 = {dual.metric.g.to_text()}")
    return dual


def reverse_background(P: TDualityProblem, dual: DualBackground) -> GeneralisedMetric:
    """Apply the rules from Q₂ back to Q₁; returns coordinates on Q₁."""
    return dual_background(P.reversed(dual.metric)).metric


def round_trip_check(P: TDualityProblem, dual: DualBackground) -> CheckReport:
    """(ḡ₁, b̄₁) -> (ḡ₂, b̄₂) -> (ḡ₁, b̄₁) exactly."""
    back = reverse_background(P, dual)
    residuals = {}
    for label, got, want in (("g", back.g, P.G1.g_coord), ("b", back.b, P.G1.b_coord)):
        if got != want:
            residuals[label] = f"{got.to_text()} != {want.to_text()}"
    return CheckReport.from_residuals("buscher.round_trip", residuals)


def _lift_components(
    P: TDualityProblem,
    X1: Dict[int, PolyElement],
    a1: Dict[int, PolyElement],
    beta_inv: Optional[PolyMatrix],
) -> Tuple[List[PolyElement], List[PolyElement]]:
    # frame components on M of the lift ψ̂ with zero K₁ ∩ K₂ component
    n = P.frame.dim
    zero = P.chart.zero
    B = P.B_frame
    X = [X1.get(i, zero) for i in range(n)]
    a = [a1.get(i, zero) for i in range(n)]
    v1, v2 = P.roles.v1, P.roles.v2
    if beta_inv is None:
        return X, a
    known = [i for i in range(n) if i not in v2]
    r = [a[j] + sum((X[k] * B[k, j] for k in known), zero) for j in v1]
    for pos, w in enumerate(v2):
        X[w] = -sum((r[b] * beta_inv[b, pos] for b in range(len(v1))), zero)
    return X, a


def _beta_inverse(P: TDualityProblem) -> Optional[PolyMatrix]:
    v1, v2 = P.roles.v1, P.roles.v2
    if not v1 and not v2:
        return None
    if len(v1) != len(v2):
        raise TDualityError(f"Mixing block is {len(v2)}x{len(v1)}, not square")
    try:
        return P.B_frame.submatrix(v2, v1).inverse()
    except ValidationError as e:
        raise TDualityError(f"Mixing block of B is not invertible: {e}")


def lift_section(P: TDualityProblem, e1: GeneralizedSection) -> GeneralizedSection:
    """
    The lift ψ̂ ∈ K₁^⊥ ∩ K₂^⊥ of a section on Q₁ with ♮₁ψ̂ = e₁.

    The v2 components solve (ϖ₁*α)(Z_v) + B(X̂, Z_v) = 0 for v in v1;
    the component along K₁ ∩ K₂ is set to zero.

    Raises:
        TDualityError: If the mixing block of B is not invertible.
    """
    P.K1.quotient_chart.check_same(e1.chart)
    qframe = P.K1.quotient_frame()
    pull = P.K1.quotient.pull_function
    comps = qframe.vector_components(e1.vec)
    forms = qframe.form_components(e1.form)
    X1 = {i: pull(comps[k]) for k, i in enumerate(P.K1.complement)}
    a1 = {i: pull(forms[k]) for k, i in enumerate(P.K1.complement)}
    X, a = _lift_components(P, X1, a1, _beta_inverse(P))
    frame = P.frame
    return GeneralizedSection(frame.vector_from_components(X), frame.form_from_components(a))


def lift_project_sections(P: TDualityProblem, e1: GeneralizedSection) -> GeneralizedSection:
    """
    ♮₂ of the lift of e₁: the image of e₁ under R.

    Raises:
        TDualityError: If the lift is not unique or its projection depends on
            a leaf coordinate of 𝓕₂.
    """
    psi = lift_section(P, e1)
    try:
        return P.K2.natural_project(psi)
    except WorkbenchError as e:
        raise TDualityError(f"Lift does not project to Q2: {e}")


def duality_map(P: TDualityProblem) -> PolyMatrix:
    """
    The 2q×2q matrix O with R = graph(O), as functions on M.

    Columns act on frame components (X, α) of Q₁ in K₁'s complement
    order; rows are frame components on Q₂ in K₂'s complement order.
    """
    beta_inv = _beta_inverse(P)
    q1, q2 = P.K1.complement, P.K2.complement
    B = P.B_frame
    one, zero = P.chart.one, P.chart.zero
    columns = []
    for k in range(2 * len(q1)):
        if k < len(q1):
            X, a = _lift_components(P, {q1[k]: one}, {}, beta_inv)
        else:
            X, a = _lift_components(P, {}, {q1[k - len(q1)]: one}, beta_inv)
        shifted = [a[j] + sum((X[i] * B[i, j] for i in range(P.frame.dim)), zero) for j in q2]
        columns.append([X[j] for j in q2] + shifted)
    return PolyMatrix.from_rows(P.chart, columns).T


def _generalised_matrix(g: Matrix, b: Matrix) -> Matrix:
    gi = g.inv()
    top = (g - b * gi * b).row_join(-(b * gi))
    return top.col_join((gi * b).row_join(gi))


def metric_route_check(
    P: TDualityProblem, dual: DualBackground, plan: Optional[SamplePlan] = None
) -> CheckReport:
    """
    Compare the block rules with 𝒢₂ = O^{−T} 𝒢₁ O^{−1} at every sample point.

    g₂ is read off as the inverse of the lower-right block of 𝒢₂ and b₂ as
    g₂ times its lower-left block.
    """
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    omap = duality_map(P)
    h = frame_metric_on_M(P)
    q1 = P.K1.complement
    g1 = h.symmetric_part().submatrix(q1, q1)
    b1 = h.antisymmetric_part().submatrix(q1, q1)
    h2 = dual.frame_metric.g + dual.frame_metric.b
    n = len(q1)
    residuals = {}
    for p, point in enumerate(plan.points):
        oc = omap.at(point)
        G1 = _generalised_matrix(g1.at(point), b1.at(point))
        oinv = oc.inv()
        G2 = oinv.T * G1 * oinv
        g2 = G2[n:, n:].inv()
        b2 = g2 * G2[n:, :n]
        expected = h2.at(project_point(P.K2, point))
        if g2 + b2 != expected:
            residuals[f"point[{p}]"] = f"{list(g2 + b2)} != {list(expected)}"
    return CheckReport.from_residuals(
        "buscher.metric_route", residuals, SAMPLED, details=plan.describe()
    )


def buscher_check(
    P: TDualityProblem, dual: DualBackground, plan: Optional[SamplePlan] = None
) -> CheckReport:
    """Suite: the O-matrix route and the round trip back to Q₁."""
    return CheckReport.suite(
        "tduality.buscher", [metric_route_check(P, dual, plan), round_trip_check(P, dual)]
    )


def section_round_trip(
    P: TDualityProblem, dual: DualBackground, sections: Sequence[GeneralizedSection]
) -> CheckReport:
    """Rᵀ∘R is the identity on the given sections of Q₁."""
    reverse = P.reversed(dual.metric)
    residuals = {}
    for k, e1 in enumerate(sections):
        back = lift_project_sections(reverse, lift_project_sections(P, e1))
        if back != e1:
            residuals[f"section[{k}]"] = f"{back.to_text()} != {e1.to_text()}"
    return CheckReport.from_residuals("buscher.section_round_trip", residuals)
