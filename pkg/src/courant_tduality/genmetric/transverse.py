"""
Transverse generalised metrics W = gr(g + b) ⊕ K with degenerate g.

The pair (g, b) is stored as frame components in the frame of K, with
every row and column indexed by K's span equal to zero. For a shifted
K = e^{−B}T𝓕 the pair describes e^B W, so W itself is e^{−B}(gr(g + b) ⊕ T𝓕).
"""

from typing import TYPE_CHECKING, Dict, List, Optional
import logging

from ..core.exceptions import ValidationError
from ..core.report import CheckReport
from ..courant.sections import GeneralizedSection
from ..exterior.forms import DifferentialForm, ext_d, interior
from ..exterior.matrix import PolyMatrix
from ..exterior.polynomial import format_polynomial
from ..exterior.sampling import SamplePlan
from ..exterior.tensors import lie_derivative_tensor
from .metric import positivity_check

if TYPE_CHECKING:
    from ..reduction.subbundle import FoliationSubbundle

logger = logging.getLogger(__name__)


class TransverseGeneralisedMetric:
    """
    A K-transverse generalised metric.

    Attributes:
        K: The foliation subbundle; its frame is the basis of g and b.
        g: Symmetric frame matrix, zero on K's span.
        b: Antisymmetric frame matrix, zero on K's span.

    Raises:
        ValidationError: On a shape, symmetry or kernel violation.
    """

    def __init__(
        self, K: "FoliationSubbundle", g: PolyMatrix, b: Optional[PolyMatrix] = None
    ) -> None:
        chart = K.chart
        n = chart.dim
        b = b if b is not None else PolyMatrix.zeros(chart, n)
        for label, m in (("g", g), ("b", b)):
            chart.check_same(m.chart)
            if m.shape != (n, n):
                raise ValidationError(f"{label} must be {n}x{n}, got {m.shape}")
        if not g.is_symmetric():
            raise ValidationError(f"g is not symmetric: {g.to_text()}")
        if not b.is_antisymmetric():
            raise ValidationError(f"b is not antisymmetric: {b.to_text()}")
        for i in K.span:
            for j in range(n):
                if g[i, j] or b[i, j]:
                    raise ValidationError(
                        f"Transverse metric must vanish on {K.frame.labels[i]}: "
                        f"g = {format_polynomial(g[i, j])}, b = {format_polynomial(b[i, j])}"
                    )
        self.K = K
        self.g = g
        self.b = b

    @classmethod
    def pullback(
        cls, K: "FoliationSubbundle", gbar: PolyMatrix, bbar: Optional[PolyMatrix] = None
    ) -> "TransverseGeneralisedMetric":
        """ϖ*ḡ, ϖ*b̄ from coordinate matrices on K's quotient chart."""
        q = K.quotient_chart.dim
        bbar = bbar if bbar is not None else PolyMatrix.zeros(K.quotient_chart, q)
        g = K.frame.bilinear_to_frame(K.quotient.pull_tensor(gbar))
        b = K.frame.bilinear_to_frame(K.quotient.pull_tensor(bbar))
        return cls(K, g, b)

    @property
    def chart(self):
        return self.K.chart

    @property
    def g_coord(self) -> PolyMatrix:
        return self.K.frame.bilinear_to_coordinates(self.g)

    @property
    def b_coord(self) -> PolyMatrix:
        return self.K.frame.bilinear_to_coordinates(self.b)

    def _lifts(self, sign: int) -> List[GeneralizedSection]:
        frame = self.K.frame
        gb = self.g - self.b if sign > 0 else -self.g - self.b
        lifts = []
        for i in self.K.complement:
            Z = frame.field(i)
            e = GeneralizedSection(Z, frame.form_from_components(gb.col(i)))
            if self.K.is_shifted:
                e = GeneralizedSection(e.vec, e.form - interior(Z, self.K.shift))
            lifts.append(e)
        return lifts

    def wplus_lifts(self) -> List[GeneralizedSection]:
        """Sections σ(Z_I) + ι_{Z_I}(g + b), I ∉ S, spanning W⁺ modulo K."""
        return self._lifts(1)

    def wminus_lifts(self) -> List[GeneralizedSection]:
        """Sections σ(Z_I) + ι_{Z_I}(−g + b), I ∉ S."""
        return self._lifts(-1)

    def __repr__(self) -> str:
        return f"TransverseGeneralisedMetric({self.K.name}, g={self.g.to_text()})"


def _tensor_residuals(label: str, t: PolyMatrix) -> Dict[str, str]:
    n = t.shape[0]
    return {
        f"{label}[{i},{j}]": format_polynomial(t[i, j])
        for i in range(n)
        for j in range(n)
        if t[i, j]
    }


def transverse_check(
    W: TransverseGeneralisedMetric,
    H: Optional[DifferentialForm] = None,
    plan: Optional[SamplePlan] = None,
) -> CheckReport:
    """
    K-invariance of a transverse generalised metric.

    For every generator Z_i of ρ(K): £_{Z_i} g = 0, £_{Z_i} b = 0 and
    ι_{Z_i} H = 0, with H replaced by H − dB for a shifted K. Positivity of
    g on the complement of K is checked as well.

    Returns:
        Suite "genmetric.transverse" with children "transverse.lie_g",
        "transverse.lie_b", "transverse.flux" and "transverse.positivity".
    """
    K = W.K
    H = H if H is not None else DifferentialForm.zero(K.chart, 3)
    if K.is_shifted:
        H = H - ext_d(K.shift)
    g, b = W.g_coord, W.b_coord
    lie_g: Dict[str, str] = {}
    lie_b: Dict[str, str] = {}
    flux: Dict[str, str] = {}
    for i, Z in zip(K.span, K.anchor_fields()):
        label = K.frame.labels[i]
        lie_g.update(_tensor_residuals(f"L_{label} g", lie_derivative_tensor(Z, g)))
        lie_b.update(_tensor_residuals(f"L_{label} b", lie_derivative_tensor(Z, b)))
        contracted = interior(Z, H)
        if not contracted.is_zero():
            flux[f"iota({label}) H"] = contracted.to_text()
    return CheckReport.suite(
        "genmetric.transverse",
        [
            CheckReport.from_residuals("transverse.lie_g", lie_g),
            CheckReport.from_residuals("transverse.lie_b", lie_b),
            CheckReport.from_residuals("transverse.flux", flux),
            positivity_check(W.g, plan, name="transverse.positivity", indices=K.complement),
        ],
        details={"K": K.name},
    )
