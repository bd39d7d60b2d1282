"""
Generalised metrics V⁺ = gr(g + b) ⊂ TM ⊕ T*M.

A GeneralisedMetric stores (g, b) either in coordinates or as components
in a Frame, b_IJ = b(Z_I, Z_J). All block computations run on the
coordinate matrices, acting on columns (X^i, α_i):

    τ = [[g⁻¹b, g⁻¹], [g − b g⁻¹ b, −b g⁻¹]]
    𝒢 = ητ = [[g − b g⁻¹ b, −b g⁻¹], [g⁻¹ b, g⁻¹]]

so that V⁺ = {X + (g − b)X} and V⁻ = {X − (g + b)X} are the ±1
eigenbundles of τ and 𝒢(e, e) = ⟨e, τe⟩.
"""

from typing import List, Optional, Sequence, Tuple
import logging

from sympy.polys.domains import QQ

from ..core.exceptions import ValidationError
from ..core.report import SAMPLED, SYMBOLIC, CheckReport
from ..courant.sections import GeneralizedSection, pairing
from ..exterior.chart import Chart
from ..exterior.frames import Frame
from ..exterior.matrix import PolyMatrix
from ..exterior.polynomial import evaluate, format_polynomial, qq_str
from ..exterior.sampling import SamplePlan

logger = logging.getLogger(__name__)


class GeneralisedMetric:
    """
    A generalised metric given by a symmetric g and an antisymmetric b.

    Attributes:
        chart: The chart.
        g: Symmetric matrix, frame components when frame is set.
        b: Antisymmetric matrix, frame components when frame is set.
        frame: Frame the components refer to, or None for coordinates.

    Raises:
        ValidationError: If g is not symmetric, b not antisymmetric or the shapes disagree.
    """

    def __init__(
        self, g: PolyMatrix, b: Optional[PolyMatrix] = None, frame: Optional[Frame] = None
    ) -> None:
        chart = g.chart
        n = chart.dim
        if g.shape != (n, n):
            raise ValidationError(f"g must be {n}x{n}, got {g.shape}")
        if not g.is_symmetric():
            raise ValidationError(f"g is not symmetric: {g.to_text()}")
        b = b if b is not None else PolyMatrix.zeros(chart, n)
        chart.check_same(b.chart)
        if b.shape != (n, n) or not b.is_antisymmetric():
            raise ValidationError(f"b must be an antisymmetric {n}x{n} matrix: {b.to_text()}")
        if frame is not None:
            chart.check_same(frame.chart)
        self.chart: Chart = chart
        self.g = g
        self.b = b
        self.frame = frame
        self._inverse: Optional[PolyMatrix] = None

    @property
    def dim(self) -> int:
        return self.chart.dim

    @property
    def g_coord(self) -> PolyMatrix:
        """Coordinate matrix g(∂_i, ∂_j)."""
        return self.g if self.frame is None else self.frame.bilinear_to_coordinates(self.g)

    @property
    def b_coord(self) -> PolyMatrix:
        return self.b if self.frame is None else self.frame.bilinear_to_coordinates(self.b)

    def g_inverse(self) -> PolyMatrix:
        """
        Coordinate g⁻¹.

        Raises:
            ValidationError: If det g is not a nonzero constant.
        """
        if self._inverse is None:
            try:
                self._inverse = self.g_coord.inverse()
            except ValidationError as e:
                raise ValidationError(f"g has no polynomial inverse: {e}")
        return self._inverse

    def in_coordinates(self) -> "GeneralisedMetric":
        return GeneralisedMetric(self.g_coord, self.b_coord)

    def __repr__(self) -> str:
        basis = self.frame.name if self.frame is not None else "coordinate"
        return f"GeneralisedMetric(g={self.g.to_text()}, b={self.b.to_text()}, basis={basis})"


def _blocks(G: GeneralisedMetric) -> Tuple[PolyMatrix, PolyMatrix, PolyMatrix, PolyMatrix]:
    g, b = G.g_coord, G.b_coord
    gi = G.g_inverse()
    return g, b, gi, b @ gi @ b


def tau_matrix(G: GeneralisedMetric) -> PolyMatrix:
    """The 2n×2n matrix of τ on coordinate columns (X, α)."""
    g, b, gi, bgb = _blocks(G)
    return PolyMatrix.blocks(G.chart, [[gi @ b, gi], [g - bgb, -(b @ gi)]])


def gm_matrix(G: GeneralisedMetric) -> PolyMatrix:
    """
    The fibre metric 𝒢 as a 2n×2n coordinate matrix.

    Raises:
        ValidationError: If g has no polynomial inverse.

    Example:
        >>> chart = Chart(("t",))
        >>> G = GeneralisedMetric(PolyMatrix.diagonal(chart, [4]))
        >>> gm_matrix(G).to_strings()
        [['4', '0'], ['0', '1/4']]
    """
    g, b, gi, bgb = _blocks(G)
    return PolyMatrix.blocks(G.chart, [[g - bgb, -(b @ gi)], [gi @ b, gi]])


def _graph(G: GeneralisedMetric, sign: int) -> List[GeneralizedSection]:
    # columns of (sign·g − b) in the frame (or coordinates) the metric is given in
    gb = G.g - G.b if sign > 0 else -G.g - G.b
    sections = []
    for i in range(G.dim):
        comps = gb.col(i)
        if G.frame is None:
            vec = [G.chart.one if j == i else G.chart.zero for j in range(G.dim)]
            sections.append(GeneralizedSection.from_components(G.chart, vec, comps))
        else:
            sections.append(
                GeneralizedSection(G.frame.field(i), G.frame.form_from_components(comps))
            )
    return sections


def vplus_graph(G: GeneralisedMetric) -> List[GeneralizedSection]:
    """
    Generators Z_i + ι_{Z_i}(g + b) of V⁺ (∂_i for coordinate metrics).

    Example:
        >>> chart = Chart(("x", "y"))
        >>> G = GeneralisedMetric(PolyMatrix.identity(chart, 2))
        >>> vplus_graph(G)[0].to_dict()
        {'vec': ['1', '0'], 'form': ['1', '0']}
    """
    return _graph(G, 1)


def vminus_graph(G: GeneralisedMetric) -> List[GeneralizedSection]:
    """Generators Z_i + ι_{Z_i}(−g + b) of V⁻."""
    return _graph(G, -1)


def tau_apply(G: GeneralisedMetric, e: GeneralizedSection) -> GeneralizedSection:
    """τ(e), which fixes V⁺ and negates V⁻."""
    G.chart.check_same(e.chart)
    comps = tau_matrix(G).apply(e.components())
    n = G.dim
    return GeneralizedSection.from_components(G.chart, comps[:n], comps[n:])


def decompose(
    G: GeneralisedMetric, e: GeneralizedSection
) -> Tuple[GeneralizedSection, GeneralizedSection]:
    """
    Split e = e⁺ + e⁻ with e^± ∈ V^±.

    With D = g⁻¹(α + bX), the vector parts are X^± = (X ± D)/2.
    """
    G.chart.check_same(e.chart)
    g, b = G.g_coord, G.b_coord
    X = e.vec.components
    alpha = e.form.components()
    bX = b.apply(X)
    D = G.g_inverse().apply([a + c for a, c in zip(alpha, bX)])
    half = QQ(1, 2)
    Xp = [(x + d) * half for x, d in zip(X, D)]
    Xm = [(x - d) * half for x, d in zip(X, D)]
    plus = GeneralizedSection.from_components(G.chart, Xp, (g - b).apply(Xp))
    minus = GeneralizedSection.from_components(G.chart, Xm, (-g - b).apply(Xm))
    return plus, minus


def tau_involution_check(G: GeneralisedMetric) -> CheckReport:
    """τ² = 1 exactly."""
    tau = tau_matrix(G)
    square = tau @ tau
    identity = PolyMatrix.identity(G.chart, 2 * G.dim)
    residuals = {}
    for i in range(2 * G.dim):
        for j in range(2 * G.dim):
            diff = square[i, j] - identity[i, j]
            if diff:
                residuals[f"tau^2[{i},{j}]"] = format_polynomial(diff)
    return CheckReport.from_residuals("genmetric.tau_involution", residuals)


def orthogonality_check(G: GeneralisedMetric) -> CheckReport:
    """gr(g + b) ⊥ gr(−g + b) under the pairing."""
    residuals = {}
    for i, vp in enumerate(vplus_graph(G)):
        for j, vm in enumerate(vminus_graph(G)):
            value = pairing(vp, vm)
            if value:
                residuals[f"<v+[{i}], v-[{j}]>"] = format_polynomial(value)
    return CheckReport.from_residuals("genmetric.orthogonality", residuals)


def leading_minors(g: PolyMatrix) -> List:
    return [g.submatrix(range(k), range(k)).det() for k in range(1, g.shape[0] + 1)]


def positivity_check(
    g: PolyMatrix,
    plan: Optional[SamplePlan] = None,
    name: str = "genmetric.positivity",
    indices: Optional[Sequence[int]] = None,
) -> CheckReport:
    """
    Positive-definiteness of g by leading principal minors.

    A constant g is certified symbolically. Otherwise every minor is
    evaluated at the points of the plan and the certificate is "sampled".

    Args:
        g: Symmetric matrix.
        plan: Sample points on g's chart (a default seeded plan when omitted).
        name: Report name.
        indices: Restrict to the principal block on these rows and columns.
    """
    block = g if indices is None else g.submatrix(indices, indices)
    minors = leading_minors(block)
    if all(m.is_ground for m in minors):
        residuals = {
            f"minor[{k + 1}]": format_polynomial(m) for k, m in enumerate(minors) if not m.LC > 0
        }
        return CheckReport.from_residuals(name, residuals, details={"constant": True})
    plan = (plan or SamplePlan.generate(g.chart.dim)).for_chart(g.chart)
    residuals = {}
    for p, point in enumerate(plan.points):
        for k, m in enumerate(minors):
            value = evaluate(m, point)
            if not value > 0:
                residuals[f"minor[{k + 1}]@point[{p}]"] = qq_str(value)
                break
    logger.debug(f"Positivity of {block.shape} matrix sampled at {len(plan.points)} points")
    return CheckReport.from_residuals(
        name, residuals, certificate=SAMPLED, details={"constant": False, **plan.describe()}
    )


def metric_check(G: GeneralisedMetric, plan: Optional[SamplePlan] = None) -> CheckReport:
    """Suite: positivity of g, τ² = 1 and V⁺ ⊥ V⁻."""
    children = [positivity_check(G.g, plan), tau_involution_check(G), orthogonality_check(G)]
    report = CheckReport.suite("genmetric.metric", children)
    if report.certificate == SYMBOLIC:
        logger.debug("Generalised metric certified symbolically")
    return report
