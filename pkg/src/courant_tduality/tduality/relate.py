"""
The T-duality relation R = Q(K₂)∘Q(K₁)ᵀ.

Symbolically R is spanned by (♮₁e, ♮₂e) for e in K₁^⊥ ∩ K₂^⊥. In the
frame, K₁^⊥ ∩ K₂^⊥ is spanned by

    Z_I − Σ_{j ∈ v1} B_Ij Θ^j    for every frame index I
    Θ^J                          for every horizontal index J

provided B has no legs along the common directions. At each sample point
the composition of the Q(K) fibers is computed independently and compared
with the span of the generators.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple
import logging

from ..core.exceptions import RelationError, WorkbenchError
from ..core.report import SAMPLED, CheckReport
from ..courant.sections import GeneralizedSection
from ..exterior.polynomial import format_polynomial
from ..exterior.sampling import SamplePlan
from ..relations.compose import Composition, compose
from ..relations.fiber import FiberSpace, FiberSubspace
from ..relations.qk import k_fiber, qk_fiber
from .problem import TDualityProblem, project_point

logger = logging.getLogger(__name__)

Pair = Tuple[GeneralizedSection, GeneralizedSection]


@dataclass(frozen=True)
class TDualityRelation:
    """
    Generators of R and its rank data.

    Attributes:
        generators: Pairs (♮₁e, ♮₂e), sections on Q₁ and Q₂.
        labels: The frame element e each pair comes from.
        rank: rk R, constant over the sample plan.
        kernel_rank: rk(K₁ ∩ K₂), the kernel of the diamond projection.
        report: Suite "tduality.relate".
    """

    generators: Tuple[Pair, ...]
    labels: Tuple[str, ...]
    rank: int
    kernel_rank: int
    report: CheckReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "kernel_rank": self.kernel_rank,
            "generators": [
                {"from": label, "Q1": e1.to_dict(), "Q2": e2.to_dict()}
                for label, (e1, e2) in zip(self.labels, self.generators)
            ],
        }


def common_legs(P: TDualityProblem) -> Dict[str, str]:
    """Nonzero B(Z_c, Z_J) for c in the common directions."""
    B = P.B_frame
    labels = P.frame.labels
    return {
        f"B({labels[c]}, {labels[j]})": format_polynomial(B[c, j])
        for c in P.roles.common
        for j in range(P.frame.dim)
        if B[c, j]
    }


def perp_generators(P: TDualityProblem) -> List[Tuple[str, GeneralizedSection]]:
    """
    Labelled sections spanning K₁^⊥ ∩ K₂^⊥.

    Raises:
        RelationError: If B has legs along K₁ ∩ K₂.
    """
    legs = common_legs(P)
    if legs:
        raise RelationError(f"B has legs along the common directions of K1 and K2: {legs}")
    frame, B = P.frame, P.B_frame
    n = frame.dim
    out = []
    for i in range(n):
        comps = [-B[i, j] if j in P.roles.v1 else 0 for j in range(n)]
        e = GeneralizedSection(frame.field(i), frame.form_from_components(comps))
        out.append((frame.labels[i], e))
    for j in P.roles.horizontal:
        out.append((f"theta({frame.labels[j]})", GeneralizedSection.of_form(frame.coframe(j))))
    return out


def relation_generators(P: TDualityProblem) -> Tuple[Tuple[str, ...], Tuple[Pair, ...]]:
    """
    Nonzero pairs (♮₁e, ♮₂e) over the generators of K₁^⊥ ∩ K₂^⊥.

    Raises:
        RelationError: If B has common legs or a projection depends on a leaf coordinate.
    """
    labels, pairs = [], []
    for label, e in perp_generators(P):
        try:
            pair = (P.K1.natural_project(e), P.K2.natural_project(e))
        except WorkbenchError as err:
            raise RelationError(f"Generator {label} does not project: {err}")
        if pair[0].is_zero() and pair[1].is_zero():
            continue
        labels.append(label)
        pairs.append(pair)
    return tuple(labels), tuple(pairs)


def relation_fiber(P: TDualityProblem, point: Any) -> Composition:
    """R at (ϖ₁(m), ϖ₂(m)) as Q(K₂)∘Q(K₁)ᵀ of the fibers at m."""
    return compose(qk_fiber(P.K1, point).transpose(), qk_fiber(P.K2, point))


def generator_fiber(P: TDualityProblem, pairs: Tuple[Pair, ...], point: Any) -> FiberSubspace:
    p1, p2 = project_point(P.K1, point), project_point(P.K2, point)
    space = FiberSpace.relation(P.K1.quotient_chart.dim, P.K2.quotient_chart.dim)
    return FiberSubspace(space, [list(e1.at(p1)) + list(e2.at(p2)) for e1, e2 in pairs])


def relate(P: TDualityProblem, plan: Optional[SamplePlan] = None) -> TDualityRelation:
    """
    Build R and certify rk R = rk E − 2 rk K₁ at every sample point.

    Raises:
        RelationError: If rk(K₁ ∩ K₂) is not constant over the plan, or the
            symbolic generators cannot be formed.
    """
    plan = (plan or SamplePlan.generate(P.chart.dim)).for_chart(P.chart)
    labels, pairs = relation_generators(P)
    expected = rank_law(P)
    rank_res: Dict[str, str] = {}
    dirac_res: Dict[str, str] = {}
    kernel_res: Dict[str, str] = {}
    gen_res: Dict[str, str] = {}
    kernels = set()
    ranks = set()
    for p, point in enumerate(plan.points):
        comp = relation_fiber(P, point)
        R = comp.relation
        cap = k_fiber(P.K1, point).intersection(k_fiber(P.K2, point)).dim
        kernels.add(cap)
        ranks.add(R.dim)
        if R.dim != expected:
            rank_res[f"point[{p}]"] = f"rk R = {R.dim}, expected {expected}"
        if not R.is_dirac():
            dirac_res[f"point[{p}]"] = f"dim {R.dim}, isotropic {R.is_isotropic()}"
        if comp.kernel_dim != cap:
            kernel_res[f"point[{p}]"] = f"kernel {comp.kernel_dim} vs rk(K1 ∩ K2) {cap}"
        spanned = generator_fiber(P, pairs, point)
        if spanned != R:
            gen_res[f"point[{p}]"] = f"generators span {spanned.dim}, R has {R.dim}"
    if len(kernels) > 1:
        raise RelationError(
            f"K1 ∩ K2 has non-constant rank over the sample plan: {sorted(kernels)}"
        )
    details = plan.describe()
    report = CheckReport.suite(
        "tduality.relate",
        [
            CheckReport.from_residuals("relate.rank", rank_res, SAMPLED, details),
            CheckReport.from_residuals("relate.dirac", dirac_res, SAMPLED, details),
            CheckReport.from_residuals("relate.kernel", kernel_res, SAMPLED, details),
            CheckReport.from_residuals("relate.generators", gen_res, SAMPLED, details),
        ],
        details={"rank": expected, "kernel_rank": kernels.pop() if kernels else 0},
    )
    rank = ranks.pop() if len(ranks) == 1 else expected
    logger.info(f"{P.name}: rk R = {rank} over {len(plan.points)} points")
    return TDualityRelation(pairs, labels, rank, report.details["kernel_rank"], report)


def rank_law(P: TDualityProblem) -> int:
    """rk E − 2 rk K₁."""
    return 2 * P.chart.dim - 2 * P.K1.rank
