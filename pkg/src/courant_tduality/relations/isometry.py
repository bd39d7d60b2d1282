"""
Pointwise generalised-isometry conditions for fiber relations.

A relation R ⊆ E₁ × Ē₂ is a generalised isometry between V₁⁺ and V₂⁺ at a
point when R = (𝒱⁺ ∩ R) ⊕ (𝒱⁻ ∩ R) with 𝒱^± = V₁^± × V₂^± and
V^− = (V^+)^⊥. The transverse version replaces V_i^± by lifts W̃_i^± and
only asks for the decomposition of R ∩ (𝒲⁺ + 𝒲⁻).
"""

from typing import Any, Dict, Optional, Sequence
import logging

from sympy import Matrix

from ..core.report import CheckReport
from ..courant.isomorphism import CourantIso
from ..courant.sections import GeneralizedSection
from ..exterior.tensors import two_form_matrix
from ..genmetric.metric import GeneralisedMetric, vplus_graph
from .fiber import FiberSpace, FiberSubspace, graph, product

logger = logging.getLogger(__name__)


def sections_fiber(
    sections: Sequence[GeneralizedSection], point: Sequence[Any], sign: int = 1
) -> FiberSubspace:
    """Span of sections evaluated at a point."""
    n = sections[0].chart.dim if sections else len(point)
    return FiberSubspace(FiberSpace.single(n, sign), [list(e.at(point)) for e in sections])


def vplus_fiber(G: GeneralisedMetric, point: Sequence[Any], sign: int = 1) -> FiberSubspace:
    """V⁺ of a generalised metric at a point."""
    return sections_fiber(vplus_graph(G), point, sign)


def classical_graph_fiber(Phi: CourantIso, point: Sequence[Any]) -> FiberSubspace:
    """
    Graph of Φ = φ̄ ∘ e^B at a point, inside E₁ × Ē₂.

    On columns (X, α) the map is X ↦ JX and α ↦ J^{−T}(α − BX), with B the
    coordinate matrix B(∂_i, ∂_j).
    """
    J = Phi.phi.jacobian.at(point)
    B = two_form_matrix(Phi.B).at(point)
    Jinv_T = J.inv().T
    n = J.shape[0]
    top = J.row_join(Matrix.zeros(n, n))
    bottom = (-(Jinv_T * B)).row_join(Jinv_T)
    L = top.col_join(bottom)
    return graph(L, FiberSpace.single(n), FiberSpace.single(Phi.target.chart.dim, -1))


def _as_factor(S: FiberSubspace, sign: int) -> FiberSubspace:
    space = FiberSpace.single(S.ambient.dims[0], sign)
    return FiberSubspace(space, [list(v) for v in S.basis])


def _split(R: FiberSubspace, plus: FiberSubspace, minus: FiberSubspace) -> Dict[str, int]:
    return {
        "dim_R": R.dim,
        "dim_R_plus": R.intersection(plus).dim,
        "dim_R_minus": R.intersection(minus).dim,
    }


def isometry_decomposition_check(
    R: FiberSubspace, V1: FiberSubspace, V2: FiberSubspace, label: str = ""
) -> CheckReport:
    """
    dim(𝒱⁺ ∩ R) + dim(𝒱⁻ ∩ R) = dim R at one point.

    Args:
        R: Relation fiber in E₁ × Ē₂.
        V1: V₁⁺ in E₁.
        V2: V₂⁺ in E₂.
        label: Point label for the residual.
    """
    s1, s2 = R.ambient.signs
    V1p, V2p = _as_factor(V1, s1), _as_factor(V2, s2)
    plus = product(V1p, V2p)
    minus = product(V1p.perp(), V2p.perp())
    dims = _split(R, plus, minus)
    residuals = {}
    if dims["dim_R_plus"] + dims["dim_R_minus"] != dims["dim_R"]:
        residuals[f"decomposition{label}"] = (
            f"{dims['dim_R_plus']} + {dims['dim_R_minus']} != {dims['dim_R']}"
        )
    return CheckReport.from_residuals("relations.isometry_decomposition", residuals, details=dims)


def transverse_isometry_check(
    R: FiberSubspace,
    W1_plus: FiberSubspace,
    W1_minus: FiberSubspace,
    W2_plus: FiberSubspace,
    W2_minus: FiberSubspace,
    K1: Optional[FiberSubspace] = None,
    K2: Optional[FiberSubspace] = None,
    label: str = "",
) -> CheckReport:
    """
    R ∩ (𝒲⁺ + 𝒲⁻) = (R ∩ 𝒲⁺) ⊕ (R ∩ 𝒲⁻) with 𝒲^± = W̃₁^± × W̃₂^±.

    Lifts must lie in K_i^⊥; a lift outside it fails the check.
    """
    residuals = {}
    for name, lift, K in (
        ("W1+", W1_plus, K1),
        ("W1-", W1_minus, K1),
        ("W2+", W2_plus, K2),
        ("W2-", W2_minus, K2),
    ):
        if K is not None and not K.perp().contains_subspace(_as_factor(lift, K.ambient.signs[0])):
            residuals[f"{name} not in K^perp{label}"] = f"dim {lift.dim}"
    s1, s2 = R.ambient.signs
    plus = product(_as_factor(W1_plus, s1), _as_factor(W2_plus, s2))
    minus = product(_as_factor(W1_minus, s1), _as_factor(W2_minus, s2))
    inside = R.intersection(plus.sum(minus)).dim
    dims = _split(R, plus, minus)
    dims["dim_R_in_W"] = inside
    if dims["dim_R_plus"] + dims["dim_R_minus"] != inside:
        residuals[f"decomposition{label}"] = (
            f"{dims['dim_R_plus']} + {dims['dim_R_minus']} != {inside}"
        )
    return CheckReport.from_residuals("relations.transverse_isometry", residuals, details=dims)


def splitting_compat_check(
    R1: FiberSubspace,
    R2: FiberSubspace,
    discrepancy: FiberSubspace,
    K1: FiberSubspace,
    K3: FiberSubspace,
) -> CheckReport:
    """
    Compatibility of two splittings s, s′ of E₂ for composing R₁ and R₂.

    Passes when pr₁(R₁ ∩ (E₁ × D)) ⊆ K₁ or pr₂(R₂ ∩ (D × E₃)) ⊆ K₃ with
    D = im(s − s′); a zero D passes vacuously.
    """
    if discrepancy.dim == 0:
        return CheckReport.success("relations.splitting_compat", details={"vacuous": True})
    n1, n2 = R1.ambient.dims
    _, n3 = R2.ambient.dims
    E1 = FiberSubspace.whole(FiberSpace.single(n1, R1.ambient.signs[0]))
    E3 = FiberSubspace.whole(FiberSpace.single(n3, R2.ambient.signs[1]))
    D_right = _as_factor(discrepancy, R1.ambient.signs[1])
    D_left = _as_factor(discrepancy, R2.ambient.signs[0])
    first = R1.intersection(product(E1, D_right)).project(0)
    second = R2.intersection(product(D_left, E3)).project(1)
    in_K1 = _as_factor(K1, first.ambient.signs[0]).contains_subspace(first)
    in_K3 = _as_factor(K3, second.ambient.signs[0]).contains_subspace(second)
    residuals = {}
    if not (in_K1 or in_K3):
        residuals["splitting discrepancy"] = (
            f"pr1 image dim {first.dim} not in K1, pr2 image dim {second.dim} not in K3"
        )
    return CheckReport.from_residuals(
        "relations.splitting_compat", residuals, details={"in_K1": in_K1, "in_K3": in_K3}
    )
