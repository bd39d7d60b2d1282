"""
Matrices of polynomials.

PolyMatrix carries frame coefficient matrices, Jacobians, metrics and
B-field component matrices. All matrix arithmetic beyond entrywise maps runs
on sympy's DomainMatrix over the chart ring, which stays fraction-free, so no
rational functions ever appear; inverses exist only when the determinant is
a nonzero constant.
"""

from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Tuple
import logging

from sympy import Matrix
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from ..core.exceptions import ValidationError
from .chart import Chart
from .polynomial import evaluate, format_polynomial

logger = logging.getLogger(__name__)

Row = Tuple[PolyElement, ...]


@dataclass(frozen=True, eq=False)
class PolyMatrix:
    """
    An n×m matrix with entries in a chart's polynomial ring.

    Attributes:
        chart: The chart.
        rows: Row tuples.
    """

    chart: Chart
    rows: Tuple[Row, ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(self.chart.require(c, "matrix entry") for c in row) for row in self.rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValidationError(f"Ragged matrix rows: widths {sorted(widths)}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, chart: Chart, rows: Sequence[Sequence[Any]]) -> "PolyMatrix":
        return cls(chart, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, chart: Chart, n: int, m: int = -1) -> "PolyMatrix":
        m = n if m < 0 else m
        return cls(chart, tuple(tuple(chart.zero for _ in range(m)) for _ in range(n)))

    @classmethod
    def identity(cls, chart: Chart, n: int) -> "PolyMatrix":
        return cls.diagonal(chart, [1] * n)

    @classmethod
    def diagonal(cls, chart: Chart, values: Sequence[Any]) -> "PolyMatrix":
        n = len(values)
        return cls(
            chart,
            tuple(
                tuple(chart.require(values[i]) if i == j else chart.zero for j in range(n))
                for i in range(n)
            ),
        )

    @classmethod
    def blocks(cls, chart: Chart, grid: Sequence[Sequence["PolyMatrix"]]) -> "PolyMatrix":
        """Assemble a block matrix from a grid of compatible blocks."""
        rows: List[Row] = []
        for block_row in grid:
            height = block_row[0].shape[0]
            for i in range(height):
                row: List[PolyElement] = []
                for block in block_row:
                    row.extend(block.rows[i])
                rows.append(tuple(row))
        return cls(chart, tuple(rows))

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def __getitem__(self, key: Tuple[int, int]) -> PolyElement:
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> Row:
        return self.rows[i]

    def col(self, j: int) -> Row:
        return tuple(r[j] for r in self.rows)

    def map(self, fn: Callable[[PolyElement], PolyElement], chart: Any = None) -> "PolyMatrix":
        """Apply fn entrywise; pass chart when fn lands in another ring."""
        return PolyMatrix(chart or self.chart, tuple(tuple(fn(c) for c in r) for r in self.rows))

    @property
    def T(self) -> "PolyMatrix":
        n, m = self.shape
        columns = tuple(tuple(self.rows[i][j] for i in range(n)) for j in range(m))
        return PolyMatrix(self.chart, columns)

    def _same_shape(self, other: "PolyMatrix") -> None:
        self.chart.check_same(other.chart)
        if self.shape != other.shape:
            raise ValidationError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(
            self.chart,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __neg__(self) -> "PolyMatrix":
        return self.map(lambda c: -c)

    def scale(self, f: Any) -> "PolyMatrix":
        f = self.chart.require(f)
        return self.map(lambda c: f * c)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self.chart.check_same(other.chart)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValidationError(f"Cannot multiply {self.shape} by {other.shape}")
        if 0 in (n, k, m):
            return PolyMatrix.zeros(self.chart, n, m)
        product = self._domain_matrix().matmul(other._domain_matrix())
        return self._from_domain(product)

    def apply(self, vector: Sequence[Any]) -> Row:
        """Matrix times a column of polynomials."""
        vec = [self.chart.require(v) for v in vector]
        if len(vec) != self.shape[1]:
            raise ValidationError(f"Vector length {len(vec)} does not match {self.shape}")
        return (self @ PolyMatrix(self.chart, tuple((v,) for v in vec))).col(0)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(self.chart, tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.chart == other.chart and self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not any(c for r in self.rows for c in r)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square and self == -self.T

    def symmetric_part(self) -> "PolyMatrix":
        return (self + self.T).map(lambda c: c.quo_ground(QQ(2)))

    def antisymmetric_part(self) -> "PolyMatrix":
        return (self - self.T).map(lambda c: c.quo_ground(QQ(2)))

    def _domain_matrix(self) -> DomainMatrix:
        n, m = self.shape
        return DomainMatrix([list(r) for r in self.rows], (n, m), self.chart.ring.to_domain())

    def _from_domain(self, matrix: DomainMatrix) -> "PolyMatrix":
        ring = self.chart.ring
        return PolyMatrix(self.chart, tuple(tuple(ring(c) for c in r) for r in matrix.to_list()))

    def det(self) -> PolyElement:
        """
        Determinant as a polynomial.

        Example:
            >>> chart = Chart(("x",))
            >>> x = chart.gen("x")
            >>> PolyMatrix.from_rows(chart, [[1, x], [0, 1]]).det() == chart.one
            True
        """
        if not self.is_square:
            raise ValidationError(f"Determinant of a non-square {self.shape} matrix")
        if self.shape[0] == 0:
            return self.chart.one
        value = self._domain_matrix().det()
        return self.chart.ring(value)

    def adjugate(self) -> "PolyMatrix":
        """Classical adjoint, computed fraction-free over the chart ring."""
        if not self.is_square:
            raise ValidationError(f"Adjugate of a non-square {self.shape} matrix")
        if self.shape[0] == 0:
            return self
        adj, _ = self._domain_matrix().adj_det()
        return self._from_domain(adj)

    def inverse(self) -> "PolyMatrix":
        """
        Polynomial inverse.

        Raises:
            ValidationError: Unless det is a nonzero constant.
        """
        if not self.is_square:
            raise ValidationError(f"Inverse of a non-square {self.shape} matrix")
        if self.shape[0] == 0:
            return self
        adj, value = self._domain_matrix().adj_det()
        d = self.chart.ring(value)
        if not d or not d.is_ground:
            raise ValidationError(
                f"Matrix has no polynomial inverse: determinant is {format_polynomial(d)}"
            )
        c = d.LC
        return self._from_domain(adj).map(lambda e: e.quo_ground(c))

    def at(self, point: Sequence[Any]) -> Matrix:
        """Exact rational sympy Matrix of the entries evaluated at a point."""
        n, m = self.shape
        return Matrix(n, m, lambda i, j: QQ.to_sympy(evaluate(self.rows[i][j], point)))

    def to_strings(self) -> List[List[str]]:
        return [[format_polynomial(c) for c in r] for r in self.rows]

    def to_text(self) -> str:
        return "[" + "; ".join(", ".join(r) for r in self.to_strings()) + "]"

    def __repr__(self) -> str:
        return f"PolyMatrix{self.shape}{self.to_text()}"
