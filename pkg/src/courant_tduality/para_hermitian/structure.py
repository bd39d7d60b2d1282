"""
Almost para-Hermitian structures from a diagonalising frame.

A frame {Z_i, Z̃^i} of a 2n-dimensional chart, with coframe {Θ^i, Θ̃_i},
determines

    η = Θ^i⊗Θ̃_i + Θ̃_i⊗Θ^i
    𝒦 = Θ^i⊗Z_i − Θ̃_i⊗Z̃^i
    ω = Θ^i∧Θ̃_i = η∘𝒦

The first n frame fields span L₊ and the last n span L₋.
"""

from typing import Any, Iterable, Tuple
import logging

from ..core.exceptions import FrameError, ValidationError
from ..core.report import CheckReport
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm
from ..exterior.frames import Frame
from ..exterior.matrix import PolyMatrix
from ..exterior.polynomial import format_polynomial
from ..exterior.tensors import two_form_matrix

logger = logging.getLogger(__name__)


class ParaHermitianFrame:
    """
    A frame split as L₊ ⊕ L₋ with the induced (η, 𝒦, ω).

    Attributes:
        frame: The 2n frame fields, L₊ first.
        n: Half the dimension.

    Raises:
        FrameError: If the chart has odd dimension.
    """

    def __init__(self, frame: Frame) -> None:
        if frame.dim % 2:
            raise FrameError(f"A para-Hermitian frame needs even dimension, got {frame.dim}")
        self.frame = frame
        self.n = frame.dim // 2
        logger.debug(f"Para-Hermitian frame on {frame.chart}, L+ = {self.plus_labels}")

    @property
    def chart(self):
        return self.frame.chart

    @property
    def plus_labels(self) -> Tuple[str, ...]:
        return self.frame.labels[: self.n]

    @property
    def minus_labels(self) -> Tuple[str, ...]:
        return self.frame.labels[self.n :]

    def plus(self, i: int) -> VectorField:
        """Z_i."""
        return self.frame.field(i)

    def minus(self, i: int) -> VectorField:
        """Z̃^i."""
        return self.frame.field(self.n + i)

    def resolve_duality(self, duality: Iterable[Any]) -> Tuple[int, ...]:
        """
        Duality directions as sorted indices into L₊.

        Raises:
            ValidationError: If an entry is not an L₊ label or an index 0..n-1.
        """
        out = set()
        for key in duality:
            if isinstance(key, int) and not isinstance(key, bool):
                if not 0 <= key < self.n:
                    raise ValidationError(f"Duality index {key} out of range 0..{self.n - 1}")
                out.add(key)
            elif key in self.plus_labels:
                out.add(self.plus_labels.index(key))
            else:
                raise ValidationError(
                    f"Duality direction '{key}' is not one of {list(self.plus_labels)}"
                )
        return tuple(sorted(out))

    def _sign_matrix(self) -> PolyMatrix:
        return PolyMatrix.diagonal(self.chart, [1] * self.n + [-1] * self.n)

    def eta_frame(self) -> PolyMatrix:
        """η(Z_I, Z_J): the constant matrix [[0, 1], [1, 0]]."""
        n, chart = self.n, self.chart
        zero, one = PolyMatrix.zeros(chart, n), PolyMatrix.identity(chart, n)
        return PolyMatrix.blocks(chart, [[zero, one], [one, zero]])

    def omega_frame(self) -> PolyMatrix:
        """ω(Z_I, Z_J) = η(𝒦Z_I, Z_J)."""
        return self._sign_matrix() @ self.eta_frame()

    def eta(self) -> PolyMatrix:
        """Coordinate matrix of η."""
        return self.frame.bilinear_to_coordinates(self.eta_frame())

    def K(self) -> PolyMatrix:
        """Coordinate matrix of 𝒦 acting on vector components: Aᵀ D (A⁻¹)ᵀ."""
        return self.frame.matrix.T @ self._sign_matrix() @ self.frame.coframe_matrix

    def omega(self) -> DifferentialForm:
        """The fundamental two-form Θ^i∧Θ̃_i."""
        return self.frame.two_form_from_matrix(self.omega_frame())

    def describe(self):
        return {
            "L+": list(self.plus_labels),
            "L-": list(self.minus_labels),
            "fields": self.frame.describe(),
        }

    def __repr__(self) -> str:
        return f"ParaHermitianFrame(n={self.n}, L+={self.plus_labels})"


def _matrix_residuals(label: str, m: PolyMatrix):
    n, k = m.shape
    return {
        f"{label}[{i},{j}]": format_polynomial(m[i, j])
        for i in range(n)
        for j in range(k)
        if m[i, j]
    }


def compatibility_check(F: ParaHermitianFrame) -> CheckReport:
    """
    η(𝒦X, 𝒦Y) = −η(X, Y), 𝒦² = 1 and ω = η∘𝒦, all in coordinates.

    Returns:
        Suite "para.compatibility".
    """
    eta, K = F.eta(), F.K()
    n2 = F.frame.dim
    identity = PolyMatrix.identity(F.chart, n2)
    anti = K.T @ eta @ K + eta
    square = K @ K - identity
    fundamental = two_form_matrix(F.omega()) - K.T @ eta
    return CheckReport.suite(
        "para.compatibility",
        [
            CheckReport.from_residuals("para.eta_K", _matrix_residuals("K^T eta K + eta", anti)),
            CheckReport.from_residuals("para.K_involution", _matrix_residuals("K^2 - 1", square)),
            CheckReport.from_residuals(
                "para.omega", _matrix_residuals("omega - eta K", fundamental)
            ),
        ],
        details={"rank_L+": F.n, "rank_L-": F.n},
    )
