"""
Exact linear algebra on fibers of products of generalised tangent bundles.

A FiberSpace is E₁ × ... × E_k at a point, each factor TM_i ⊕ T*M_i of
dimension 2n_i with pairing sign·[[0, I], [I, 0]]; a sign −1 factor models
Ē. Subspaces are stored as the nonzero rows of their reduced row-echelon
form over the rationals, so equal subspaces have equal bases.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple
import logging

from sympy import Matrix, Rational, zeros
from sympy.polys.domains import QQ

from ..core.exceptions import RelationError, ValidationError

logger = logging.getLogger(__name__)

Vector = Tuple[Rational, ...]


def to_rational(value: Any) -> Rational:
    """Exact sympy Rational from ints, Fractions, QQ elements or sympy numbers."""
    if isinstance(value, QQ.dtype):
        return QQ.to_sympy(value)
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        raise ValidationError(f"Inexact fiber entry refused: {value!r}")
    return Rational(value)


@dataclass(frozen=True)
class FiberSpace:
    """
    Product of split-signature fibers.

    Attributes:
        dims: Base dimension n_i of each factor; the factor has dimension 2n_i.
        signs: Pairing sign of each factor, +1 for E and −1 for Ē.
    """

    dims: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != len(self.signs):
            raise ValidationError("One sign per factor is required")
        if any(s not in (1, -1) for s in self.signs):
            raise ValidationError(f"Signs must be +1 or -1, got {self.signs}")
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "signs", tuple(self.signs))

    @classmethod
    def single(cls, n: int, sign: int = 1) -> "FiberSpace":
        return cls((n,), (sign,))

    @classmethod
    def relation(cls, n1: int, n2: int) -> "FiberSpace":
        """E₁ × Ē₂."""
        return cls((n1, n2), (1, -1))

    @property
    def dim(self) -> int:
        return sum(2 * n for n in self.dims)

    @property
    def factors(self) -> int:
        return len(self.dims)

    def offset(self, k: int) -> int:
        return sum(2 * n for n in self.dims[:k])

    def factor(self, k: int) -> "FiberSpace":
        return FiberSpace((self.dims[k],), (self.signs[k],))

    def times(self, other: "FiberSpace") -> "FiberSpace":
        return FiberSpace(self.dims + other.dims, self.signs + other.signs)

    def pairing_matrix(self) -> Matrix:
        P = zeros(self.dim, self.dim)
        for k, (n, s) in enumerate(zip(self.dims, self.signs)):
            o = self.offset(k)
            for i in range(n):
                P[o + i, o + n + i] = s
                P[o + n + i, o + i] = s
        return P

    def pair(self, u: Sequence[Any], v: Sequence[Any]) -> Rational:
        U = Matrix([[to_rational(x) for x in u]])
        V = Matrix([to_rational(x) for x in v])
        return (U * self.pairing_matrix() * V)[0, 0]


class FiberSubspace:
    """
    A subspace of a FiberSpace in reduced row-echelon form.

    Attributes:
        ambient: The FiberSpace.
        basis: RREF basis rows.

    Example:
        >>> space = FiberSpace.single(1)
        >>> FiberSubspace(space, [[2, 0], [4, 0]]).dim
        1
    """

    def __init__(self, ambient: FiberSpace, vectors: Sequence[Sequence[Any]]) -> None:
        self.ambient = ambient
        rows = [[to_rational(x) for x in v] for v in vectors]
        for r in rows:
            if len(r) != ambient.dim:
                raise ValidationError(f"Vector of length {len(r)} in a {ambient.dim}-dim fiber")
        if rows:
            reduced, pivots = Matrix(rows).rref()
            self.basis: Tuple[Vector, ...] = tuple(
                tuple(reduced.row(i)) for i in range(len(pivots))
            )
        else:
            self.basis = ()

    @classmethod
    def zero(cls, ambient: FiberSpace) -> "FiberSubspace":
        return cls(ambient, [])

    @classmethod
    def whole(cls, ambient: FiberSpace) -> "FiberSubspace":
        return cls(ambient, Matrix.eye(ambient.dim).tolist())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> Matrix:
        if not self.basis:
            return zeros(0, self.ambient.dim)
        return Matrix([list(v) for v in self.basis])

    def _same_ambient(self, other: "FiberSubspace") -> None:
        if self.ambient != other.ambient:
            raise RelationError(f"Fiber mismatch: {self.ambient} vs {other.ambient}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiberSubspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    __hash__ = None  # type: ignore[assignment]

    def perp(self) -> "FiberSubspace":
        """The annihilator under the ambient pairing."""
        if not self.basis:
            return FiberSubspace.whole(self.ambient)
        A = self.matrix() * self.ambient.pairing_matrix()
        return FiberSubspace(self.ambient, [list(v) for v in A.nullspace()])

    def sum(self, other: "FiberSubspace") -> "FiberSubspace":
        self._same_ambient(other)
        return FiberSubspace(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "FiberSubspace") -> "FiberSubspace":
        """S ∩ T = (S^⊥ + T^⊥)^⊥, exact since the pairing is nondegenerate."""
        self._same_ambient(other)
        return self.perp().sum(other.perp()).perp()

    def contains(self, v: Sequence[Any]) -> bool:
        return self.sum(FiberSubspace(self.ambient, [v])).dim == self.dim

    def contains_subspace(self, other: "FiberSubspace") -> bool:
        self._same_ambient(other)
        return self.sum(other).dim == self.dim

    def is_isotropic(self) -> bool:
        if not self.basis:
            return True
        M = self.matrix()
        return (M * self.ambient.pairing_matrix() * M.T).is_zero_matrix

    def is_dirac(self) -> bool:
        """Maximally isotropic: S ⊆ S^⊥ and 2 dim S = dim of the fiber."""
        return self.is_isotropic() and 2 * self.dim == self.ambient.dim

    def project(self, k: int) -> "FiberSubspace":
        """Image under the projection to factor k."""
        o, width = self.ambient.offset(k), 2 * self.ambient.dims[k]
        return FiberSubspace(self.ambient.factor(k), [v[o:o + width] for v in self.basis])

    def transpose(self) -> "FiberSubspace":
        """Rᵀ ⊆ E₂ × Ē₁ for R ⊆ E₁ × Ē₂."""
        if self.ambient.factors != 2:
            raise RelationError("Transpose needs a two-factor fiber")
        s1, s2 = self.ambient.signs
        n1, n2 = self.ambient.dims
        swapped = FiberSpace((n2, n1), (-s2, -s1))
        cut = 2 * n1
        return FiberSubspace(swapped, [v[cut:] + v[:cut] for v in self.basis])

    def __repr__(self) -> str:
        return f"FiberSubspace(dim={self.dim}, ambient={self.ambient.dims})"


def graph(L: Matrix, source: FiberSpace, target: FiberSpace) -> FiberSubspace:
    """{(v, Lv)} in source × target for a linear map L given as a matrix."""
    if L.shape != (target.dim, source.dim):
        raise ValidationError(f"Map of shape {L.shape} does not fit {source.dim} -> {target.dim}")
    vectors = []
    for j in range(source.dim):
        v = [Rational(int(i == j)) for i in range(source.dim)]
        vectors.append(v + list(L.col(j)))
    return FiberSubspace(source.times(target), vectors)


def identity_relation(n: int) -> FiberSubspace:
    """The diagonal of E × Ē."""
    return graph(Matrix.eye(2 * n), FiberSpace.single(n), FiberSpace.single(n, -1))


def product(left: FiberSubspace, right: FiberSubspace) -> FiberSubspace:
    """S × T inside the product of their ambients."""
    ambient = left.ambient.times(right.ambient)
    pad_l = [Rational(0)] * right.ambient.dim
    pad_r = [Rational(0)] * left.ambient.dim
    vectors: List[List[Any]] = [list(v) + pad_l for v in left.basis]
    vectors += [pad_r + list(v) for v in right.basis]
    return FiberSubspace(ambient, vectors)


def dirac_check(S: FiberSubspace) -> bool:
    return S.is_dirac()
