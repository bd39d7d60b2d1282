"""
Bilinear forms given by coordinate matrices: Lie derivatives and conversion
to and from 2-forms.
"""

import logging

from ..core.exceptions import ValidationError
from .fields import VectorField
from .forms import DifferentialForm
from .matrix import PolyMatrix

logger = logging.getLogger(__name__)


def vector_jacobian(X: VectorField) -> PolyMatrix:
    """D[k][i] = ∂_i X^k."""
    n = X.chart.dim
    rows = [[X.components[k].diff(i) for i in range(n)] for k in range(n)]
    return PolyMatrix.from_rows(X.chart, rows)


def lie_derivative_tensor(X: VectorField, t: PolyMatrix) -> PolyMatrix:
    """
    (£_X T)_ij = X(T_ij) + T_kj ∂_i X^k + T_ik ∂_j X^k.

    Works for any bilinear form; symmetry and antisymmetry are preserved.
    """
    X.chart.check_same(t.chart)
    D = vector_jacobian(X)
    return t.map(X.apply) + D.T @ t + t @ D


def two_form_matrix(B: DifferentialForm) -> PolyMatrix:
    """Coordinate matrix B(∂_i, ∂_j) of a 2-form."""
    if B.degree != 2 and not B.is_zero():
        raise ValidationError(f"Expected a 2-form, got degree {B.degree}")
    n = B.chart.dim
    rows = [[B.coefficient((i, j)) for j in range(n)] for i in range(n)]
    return PolyMatrix.from_rows(B.chart, rows)


def two_form_from_matrix(b: PolyMatrix) -> DifferentialForm:
    """Σ_{i<j} b_ij dx^i∧dx^j from an antisymmetric coordinate matrix."""
    if not b.is_antisymmetric():
        raise ValidationError("A 2-form needs an antisymmetric matrix")
    n = b.shape[0]
    return DifferentialForm.from_terms(
        b.chart, 2, [((i, j), b[i, j]) for i in range(n) for j in range(i + 1, n)]
    )
