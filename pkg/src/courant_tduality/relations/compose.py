"""
Composition of fiber relations R′∘R through the diamond R′ ⋄ R.
"""

from dataclasses import dataclass
from typing import Any, Dict, List
import logging

from sympy import Matrix

from ..core.exceptions import RelationError
from .fiber import FiberSpace, FiberSubspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Composition:
    """
    Result of composing R ⊆ E₁ × Ē₂ with R′ ⊆ E₂ × Ē₃.

    Attributes:
        relation: R′∘R ⊆ E₁ × Ē₃.
        diamond_dim: dim R′ ⋄ R, the pairs (r, r′) agreeing on E₂.
        kernel_dim: Dimension of the kernel of R′ ⋄ R -> R′∘R.
    """

    relation: FiberSubspace
    diamond_dim: int
    kernel_dim: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.relation.dim,
            "diamond_dim": self.diamond_dim,
            "kernel_dim": self.kernel_dim,
        }


def compose(R: FiberSubspace, R2: FiberSubspace) -> Composition:
    """
    R2∘R for R ⊆ E₁ × Ē₂ and R2 ⊆ E₂ × Ē₃.

    The diamond is the nullspace of [R_{E₂}ᵀ | −R2_{E₂}ᵀ], whose vectors
    (x, y) give the elements (xR_{E₁}, yR2_{E₃}) of the composite.

    Raises:
        RelationError: If the middle factors do not match.

    Example:
        >>> I = identity_relation(1)
        >>> compose(I, I).relation == I
        True
    """
    if R.ambient.factors != 2 or R2.ambient.factors != 2:
        raise RelationError("Composition needs two-factor relations")
    n1, n2 = R.ambient.dims
    m2, n3 = R2.ambient.dims
    if n2 != m2 or R.ambient.signs[1] != -R2.ambient.signs[0]:
        raise RelationError(
            f"Middle factors do not match: {R.ambient} then {R2.ambient}"
        )
    ambient = FiberSpace((n1, n3), (R.ambient.signs[0], R2.ambient.signs[1]))
    cut1, cut2 = 2 * n1, 2 * n2
    if not R.basis or not R2.basis:
        return Composition(FiberSubspace.zero(ambient), 0, 0)
    left = Matrix([list(v[cut1:]) for v in R.basis]).T
    right = Matrix([list(v[:cut2]) for v in R2.basis]).T
    null = left.row_join(-right).nullspace()
    vectors: List[List[Any]] = []
    k = R.dim
    A = Matrix([list(v[:cut1]) for v in R.basis])
    C = Matrix([list(v[cut2:]) for v in R2.basis])
    for z in null:
        x, y = z[:k, 0], z[k:, 0]
        vectors.append(list((x.T * A)) + list((y.T * C)))
    relation = FiberSubspace(ambient, vectors)
    result = Composition(relation, len(null), len(null) - relation.dim)
    logger.debug(f"Composition: diamond {result.diamond_dim}, kernel {result.kernel_dim}")
    return result
