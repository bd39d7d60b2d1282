"""
Conditions under which a T-duality relation is a generalised isometry.

- B decomposes into vertical, horizontal and mixing parts whose mixing
  block is nondegenerate; equivalently K₁ ∩ K₂^⊥ ⊆ K₂ and K₂ ∩ K₁^⊥ ⊆ K₁.
- The metric on Q₁ is invariant along Iso(V₁⁺), and B is invariant along
  the lifts of its generators to T𝓕₂.
- The tangent parts of K₁ + K₂ are involutive.
"""

from typing import Dict, List, Optional
import logging

from sympy import Matrix

from ..core.report import SAMPLED, CheckReport
from ..exterior.fields import VectorField, lie_bracket
from ..exterior.forms import lie_derivative
from ..exterior.polynomial import evaluate, format_polynomial
from ..exterior.sampling import SamplePlan
from ..exterior.tensors import lie_derivative_tensor
from ..relations.fiber import to_rational
from ..relations.qk import k_fiber
from .problem import TDualityProblem, project_point

logger = logging.getLogger(__name__)


def _block_residuals(P: TDualityProblem, rows, cols, label: str) -> Dict[str, str]:
    B, labels = P.B_frame, P.frame.labels
    return {
        f"{label} B({labels[i]}, {labels[j]})": format_polynomial(B[i, j])
        for i in rows
        for j in cols
        if B[i, j]
    }


def mixing_check(P: TDualityProblem, plan: Optional[SamplePlan] = None) -> CheckReport:
    """The mixing block B(Z_{v2}, Z_{v1}) is square and invertible."""
    roles = P.roles
    name = "b_decomposition.mix"
    if len(roles.v1) != len(roles.v2):
        return CheckReport.from_residuals(
            name, {"shape": f"{len(roles.v2)}x{len(roles.v1)} is not square"}
        )
    beta = P.B_frame.submatrix(roles.v2, roles.v1)
    det = beta.det()
    if det.is_ground:
        residuals = {} if det else {"det": "0"}
        return CheckReport.from_residuals(name, residuals, details={"det": format_polynomial(det)})
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    residuals = {
        f"det@point[{p}]": "0" for p, point in enumerate(plan.points) if not evaluate(det, point)
    }
    return CheckReport.from_residuals(
        name, residuals, SAMPLED, details={"det": format_polynomial(det), **plan.describe()}
    )


def inclusion_checks(P: TDualityProblem, plan: Optional[SamplePlan] = None) -> List[CheckReport]:
    """K₁ ∩ K₂^⊥ ⊆ K₂ and K₂ ∩ K₁^⊥ ⊆ K₁ at every sample point."""
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    first: Dict[str, str] = {}
    second: Dict[str, str] = {}
    for p, point in enumerate(plan.points):
        k1, k2 = k_fiber(P.K1, point), k_fiber(P.K2, point)
        left = k1.intersection(k2.perp())
        if not k2.contains_subspace(left):
            first[f"point[{p}]"] = f"dim(K1 ∩ K2^perp) = {left.dim}"
        right = k2.intersection(k1.perp())
        if not k1.contains_subspace(right):
            second[f"point[{p}]"] = f"dim(K2 ∩ K1^perp) = {right.dim}"
    details = plan.describe()
    return [
        CheckReport.from_residuals("b_decomposition.inclusion_K2", first, SAMPLED, details),
        CheckReport.from_residuals("b_decomposition.inclusion_K1", second, SAMPLED, details),
    ]


def b_decomposition_check(P: TDualityProblem, plan: Optional[SamplePlan] = None) -> CheckReport:
    """
    B = B_ver + B_hor + B_mix with the vanishing and nondegeneracy clauses.

    In the frame: B(Z_c, ·) = 0 on the common directions, the vertical part
    vanishes on common × v2, the horizontal part on horizontal × v1, and
    the mixing block v2 × v1 is invertible. The two inclusions are checked
    pointwise as an independent route.

    Returns:
        Suite "tduality.b_decomposition".
    """
    roles = P.roles
    everything = range(P.frame.dim)
    children = [
        CheckReport.from_residuals(
            "b_decomposition.common", _block_residuals(P, roles.common, everything, "common")
        ),
        CheckReport.from_residuals(
            "b_decomposition.vertical", _block_residuals(P, roles.common, roles.v2, "vertical")
        ),
        CheckReport.from_residuals(
            "b_decomposition.horizontal",
            _block_residuals(P, roles.horizontal, roles.v1, "horizontal"),
        ),
        mixing_check(P, plan),
        *inclusion_checks(P, plan),
    ]
    report = CheckReport.suite(
        "tduality.b_decomposition", children, details={"B": P.B.to_text()}
    )
    logger.info(f"{P.name}: B decomposition {'passes' if report.passed else 'fails'}")
    return report


def iso_lift(P: TDualityProblem, X: VectorField) -> VectorField:
    """
    The lift of X̄ ∈ Iso(V₁⁺) to T𝓕₂: Σ_{v ∈ v1} (c^v∘ϖ₁) Z_v.

    Only the components of X̄ along the duality directions are kept.
    """
    frame = P.K1.quotient_frame()
    comps = frame.vector_components(X)
    position = {i: k for k, i in enumerate(P.K1.complement)}
    full = [P.chart.zero] * P.frame.dim
    for v in P.roles.v1:
        full[v] = P.K1.quotient.pull_function(comps[position[v]])
    return P.frame.vector_from_components(full)


def _rank(vectors: List[tuple]) -> int:
    if not vectors:
        return 0
    return Matrix([[to_rational(x) for x in v] for v in vectors]).rank()


def _nonzero(t):
    n, m = t.shape
    return [((i, j), t[i, j]) for i in range(n) for j in range(m) if t[i, j]]


def invariance_checks(P: TDualityProblem, plan: Optional[SamplePlan] = None) -> CheckReport:
    """
    D₁-invariance of (ḡ₁, b̄₁) and compatibility of the splittings.

    Iso(V₁⁺) is the span of the declared generators. The checks are:
    generators lie in D₁ = span{Z̄_v : v ∈ v1}, span D₁ at every sample
    point and close under the bracket up to their span there;
    £_X̄ ḡ₁ = £_X̄ b̄₁ = 0; and £_X B = 0 for the lifts X to T𝓕₂, which
    stand in for Iso(W₁) at generator level.

    Returns:
        Suite "tduality.invariance".
    """
    K1 = P.K1
    qframe = K1.quotient_frame()
    position = {i: k for k, i in enumerate(K1.complement)}
    duality = {position[v] for v in P.roles.v1}
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    in_d1: Dict[str, str] = {}
    metric: Dict[str, str] = {}
    bfield: Dict[str, str] = {}
    g, b = P.G1.g_coord, P.G1.b_coord
    for a, X in enumerate(P.iso):
        comps = qframe.vector_components(X)
        for k, c in enumerate(comps):
            if c and k not in duality:
                in_d1[f"iso[{a}] along {qframe.labels[k]}"] = format_polynomial(c)
        for label, t in (("g", g), ("b", b)):
            lie = lie_derivative_tensor(X, t)
            for (i, j), c in _nonzero(lie):
                metric[f"L_iso[{a}] {label}[{i},{j}]"] = format_polynomial(c)
        lie_B = lie_derivative(iso_lift(P, X), P.B)
        if not lie_B.is_zero():
            bfield[f"L_lift(iso[{a}]) B"] = lie_B.to_text()
    spans: Dict[str, str] = {}
    closure: Dict[str, str] = {}
    brackets = [
        lie_bracket(X, Y) for a, X in enumerate(P.iso) for Y in P.iso[a + 1:]
    ]
    d1_fields = [qframe.field(position[v]) for v in P.roles.v1]
    for p, point in enumerate(plan.points):
        q = project_point(K1, point)
        values = [X.at(q) for X in P.iso]
        rank = _rank(values)
        joint = _rank(values + [Z.at(q) for Z in d1_fields])
        if rank != len(P.roles.v1) or joint != rank:
            spans[f"point[{p}]"] = f"rank {rank}, rk D1 = {len(P.roles.v1)}"
        extended = values + [Y.at(q) for Y in brackets]
        if _rank(extended) != _rank(values):
            closure[f"point[{p}]"] = "bracket leaves the span of the generators"
    details = {"iso_W1": "generator lifts", **plan.describe()}
    report = CheckReport.suite(
        "tduality.invariance",
        [
            CheckReport.from_residuals("invariance.iso_in_D1", in_d1),
            CheckReport.from_residuals("invariance.spans_D1", spans, SAMPLED, details),
            CheckReport.from_residuals("invariance.subalgebra", closure, SAMPLED, details),
            CheckReport.from_residuals("invariance.metric", metric),
            CheckReport.from_residuals("invariance.B", bfield),
        ],
        details={"generators": [X.to_text() for X in P.iso]},
    )
    logger.info(f"{P.name}: invariance {'passes' if report.passed else 'fails'}")
    return report


def morita_check(P: TDualityProblem) -> CheckReport:
    """The tangent parts {Z_i : i ∈ S₁ ∪ S₂} of K₁ + K₂ span an involutive distribution."""
    frame = P.frame
    union = sorted(set(P.K1.span) | set(P.K2.span))
    residuals = {}
    for a in union:
        for b in union:
            if a >= b:
                continue
            for k in range(frame.dim):
                c = frame.structure(a, b, k)
                if k not in union and c:
                    key = f"[{frame.labels[a]}, {frame.labels[b]}] along {frame.labels[k]}"
                    residuals[key] = format_polynomial(c)
    return CheckReport.from_residuals(
        "tduality.morita", residuals, details={"span": [frame.labels[i] for i in union]}
    )
