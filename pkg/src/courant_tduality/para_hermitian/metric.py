"""
Generalised para-Hermitian metrics and the para-Buscher rules.

A pair (g₊, b₊) of frame matrices on L₊ determines g₋ = g₊⁻¹ through η
and the metric

    ℋ = [[g₊ − b₊ g₋ b₊, −b₊ g₋], [g₋ b₊, g₋]]

in the frame {Z_i, Z̃^i}, which is the generalised metric of (g₊, b₊)
once L₋ is identified with L₊* by η.
"""

from dataclasses import dataclass
from typing import Any, Iterable, Optional
import logging

from ..core.exceptions import TDualityError, ValidationError
from ..core.report import CheckReport
from ..exterior.diffeo import DiffeoMap
from ..exterior.matrix import PolyMatrix
from ..exterior.polynomial import format_polynomial
from .structure import ParaHermitianFrame

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenParaMetric:
    """
    (g₊, b₊) as n×n frame matrices on L₊.

    Raises:
        ValidationError: If g₊ is not symmetric, b₊ not antisymmetric or the
            shapes disagree.
    """

    g: PolyMatrix
    b: Optional[PolyMatrix] = None

    def __post_init__(self) -> None:
        if not self.g.is_square or not self.g.is_symmetric():
            raise ValidationError("g+ must be a symmetric square matrix")
        b = self.b if self.b is not None else PolyMatrix.zeros(self.g.chart, self.g.shape[0])
        if b.shape != self.g.shape or not b.is_antisymmetric():
            raise ValidationError(f"b+ must be an antisymmetric {self.g.shape} matrix")
        self.g.chart.check_same(b.chart)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.g.shape[0]

    @property
    def chart(self):
        return self.g.chart

    def g_minus(self) -> PolyMatrix:
        """g₋ in the frame Z̃^i.

        Raises:
            ValidationError: If g₊ has no polynomial inverse.
        """
        return self.g.inverse()

    def pushed(self, phi: DiffeoMap) -> "GenParaMetric":
        """Components composed with φ⁻¹, as functions on φ's target."""
        return GenParaMetric(
            self.g.map(phi.push_function, chart=phi.target),
            self.b.map(phi.push_function, chart=phi.target),
        )


def _block_matrix(G: GenParaMetric) -> PolyMatrix:
    g, b, gm = G.g, G.b, G.g_minus()
    return PolyMatrix.blocks(G.chart, [[g - b @ gm @ b, -(b @ gm)], [gm @ b, gm]])


def gen_para_metric_matrix(G: GenParaMetric, F: ParaHermitianFrame) -> PolyMatrix:
    """The 2n×2n frame matrix ℋ(Z_I, Z_J)."""
    if G.n != F.n:
        raise ValidationError(f"Metric on L+ has size {G.n}, frame has n = {F.n}")
    F.chart.check_same(G.chart)
    return _block_matrix(G)


def gen_para_metric_coordinates(G: GenParaMetric, F: ParaHermitianFrame) -> PolyMatrix:
    return F.frame.bilinear_to_coordinates(gen_para_metric_matrix(G, F))


def para_buscher(
    G: GenParaMetric, duality: Iterable[Any], phi: Optional[DiffeoMap] = None
) -> GenParaMetric:
    """
    Buscher rules along the duality directions d, with s the spectators and
    h = g₊ + b₊:

        (h₂)_dd = h_dd⁻¹          (h₂)_ds = h_dd⁻¹ h_ds
        (h₂)_sd = −h_sd h_dd⁻¹    (h₂)_ss = h_ss − h_sd h_dd⁻¹ h_ds

    With b₊ = 0 this is (g₂)_dd = g_dd⁻¹, (g₂)_ss the Schur complement,
    (g₂)_ds = 0 and (b₂)_ds = g_dd⁻¹ g_ds.

    Args:
        G: Metric in the frame of M₁.
        duality: Indices into L₊.
        phi: When given, the result is pushed to φ's target.

    Raises:
        TDualityError: If h_dd has no polynomial inverse.
    """
    n = G.n
    dual = sorted(set(duality))
    if any(not 0 <= i < n for i in dual):
        raise ValidationError(f"Duality indices {dual} out of range 0..{n - 1}")
    h = G.g + G.b
    out = [[h[i, j] for j in range(n)] for i in range(n)]
    if dual:
        spect = [i for i in range(n) if i not in dual]
        try:
            inv = h.submatrix(dual, dual).inverse()
        except ValidationError as e:
            raise TDualityError(f"g+ on the duality directions is not invertible: {e}")
        blocks = {(True, True): inv}
        if spect:
            h_ds = h.submatrix(dual, spect)
            h_sd = h.submatrix(spect, dual)
            blocks[(True, False)] = inv @ h_ds
            blocks[(False, True)] = -(h_sd @ inv)
            blocks[(False, False)] = h.submatrix(spect, spect) - h_sd @ inv @ h_ds
        position = {i: (i in dual, (dual if i in dual else spect).index(i)) for i in range(n)}
        for i in range(n):
            for j in range(n):
                (di, a), (dj, c) = position[i], position[j]
                out[i][j] = blocks[(di, dj)][a, c]
    h2 = PolyMatrix.from_rows(G.chart, out)
    result = GenParaMetric(h2.symmetric_part(), h2.antisymmetric_part())
    logger.debug(f"Para-Buscher along {dual}: g2 = {result.g.to_text()}")
    return result.pushed(phi) if phi is not None else result


def _swap_permutation(n: int, dual: Iterable[int]):
    order = list(range(2 * n))
    for i in dual:
        order[i], order[n + i] = n + i, i
    return order


def para_metric_route_check(G: GenParaMetric, duality: Iterable[Any]) -> CheckReport:
    """
    para_buscher against ℋ₂ = PℋP, P swapping Z_d with Z̃^d.

    g₂ is the inverse of the lower-right block of ℋ₂ and b₂ is g₂ times its
    lower-left block. Both sides are exact frame matrices on M₁.
    """
    n, dual = G.n, sorted(set(duality))
    H1 = _block_matrix(G)
    order = _swap_permutation(n, dual)
    H2 = H1.submatrix(order, order)
    lower = list(range(n, 2 * n))
    g2 = H2.submatrix(lower, lower).inverse()
    b2 = g2 @ H2.submatrix(lower, list(range(n)))
    expected = para_buscher(G, dual)
    residuals = {}
    for label, got, want in (("g", g2, expected.g), ("b", b2, expected.b)):
        diff = got - want
        for i in range(n):
            for j in range(n):
                if diff[i, j]:
                    residuals[f"{label}[{i},{j}]"] = format_polynomial(diff[i, j])
    return CheckReport.from_residuals("para.buscher_route", residuals)


def pullback_identity_check(
    G1: GenParaMetric,
    F1: ParaHermitianFrame,
    G2: GenParaMetric,
    F2: ParaHermitianFrame,
    phi: DiffeoMap,
) -> CheckReport:
    """φ*ℋ₂ = ℋ₁ as coordinate matrices on M₁."""
    H1 = gen_para_metric_coordinates(G1, F1)
    H2 = gen_para_metric_coordinates(G2, F2)
    diff = phi.pullback_tensor(H2) - H1
    size = diff.shape[0]
    residuals = {
        f"H[{i},{j}]": format_polynomial(diff[i, j])
        for i in range(size)
        for j in range(size)
        if diff[i, j]
    }
    return CheckReport.from_residuals("para.pullback_identity", residuals)
