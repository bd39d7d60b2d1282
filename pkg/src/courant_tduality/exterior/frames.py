"""
Polynomial frames with polynomial coframes.

A Frame is given by its coefficient matrix A, Z_I = A_I^J ∂_J. The
determinant must be a nonzero constant so that the dual coframe
Θ^I = (A^{-1})^T_{IJ} dx^J is polynomial too. Structure functions are
C_IJ^K = Θ^K([Z_I, Z_J]).
"""

from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import itertools
import logging

from sympy.polys.rings import PolyElement

from ..core.exceptions import FrameError, ValidationError
from .chart import Chart
from .fields import VectorField, lie_bracket
from .forms import DifferentialForm, wedge_all
from .matrix import PolyMatrix
from .polynomial import format_polynomial

logger = logging.getLogger(__name__)

StructureFunctions = Dict[Tuple[int, int, int], PolyElement]


class Frame:
    """
    A global frame {Z_I} of a chart with constant determinant.

    Attributes:
        chart: The chart.
        matrix: A, whose rows are the coordinate components of the Z_I.
        coframe_matrix: (A^{-1})^T, whose rows are the components of the Θ^I.
        labels: One label per frame field.
        name: Optional descriptive name.
    """

    def __init__(
        self,
        chart: Chart,
        matrix: PolyMatrix,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> None:
        if matrix.shape != (chart.dim, chart.dim):
            raise FrameError(f"Frame matrix must be {chart.dim}x{chart.dim}, got {matrix.shape}")
        chart.check_same(matrix.chart)
        det = matrix.det()
        if not det or not det.is_ground:
            raise FrameError(
                f"Frame determinant must be a nonzero constant, got {format_polynomial(det)}"
            )
        self.chart = chart
        self.matrix = matrix
        self.coframe_matrix = matrix.inverse().T
        self.labels: Tuple[str, ...] = tuple(labels) if labels else tuple(
            f"Z_{c}" for c in chart.coords
        )
        if len(self.labels) != chart.dim or len(set(self.labels)) != chart.dim:
            raise FrameError(f"Frame needs {chart.dim} distinct labels, got {self.labels}")
        self.name = name
        self._structure: Optional[StructureFunctions] = None
        self._check_duality()
        logger.debug(f"Frame '{name or chart}' built with det {format_polynomial(det)}")

    @classmethod
    def coordinate(cls, chart: Chart, labels: Optional[Sequence[str]] = None) -> "Frame":
        """The coordinate frame {∂_i}."""
        return cls(chart, PolyMatrix.identity(chart, chart.dim), labels=labels, name="coordinate")

    @classmethod
    def from_fields(
        cls,
        fields: Sequence[VectorField],
        labels: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "Frame":
        chart = fields[0].chart
        return cls(chart, PolyMatrix(chart, tuple(f.components for f in fields)), labels, name)

    def _check_duality(self) -> None:
        product = self.coframe_matrix @ self.matrix.T
        if product != PolyMatrix.identity(self.chart, self.chart.dim):
            raise FrameError("Coframe is not dual to the frame")

    @property
    def dim(self) -> int:
        return self.chart.dim

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"Unknown frame label '{label}', expected one of {self.labels}")

    def resolve(self, key: Any) -> int:
        """Accept a label or an integer index."""
        if isinstance(key, int) and not isinstance(key, bool):
            if not 0 <= key < self.dim:
                raise ValidationError(f"Frame index {key} out of range 0..{self.dim - 1}")
            return key
        return self.index(str(key))

    def field(self, i: int) -> VectorField:
        return VectorField(self.chart, self.matrix.row(i))

    @property
    def fields(self) -> Tuple[VectorField, ...]:
        return tuple(self.field(i) for i in range(self.dim))

    def coframe(self, i: int) -> DifferentialForm:
        return DifferentialForm.one_form(self.chart, self.coframe_matrix.row(i))

    @property
    def coframes(self) -> Tuple[DifferentialForm, ...]:
        return tuple(self.coframe(i) for i in range(self.dim))

    def structure_functions(self) -> StructureFunctions:
        """
        Nonzero C_IJ^K for I < J, verified so that [Z_I, Z_J] = C_IJ^K Z_K.

        Example:
            >>> chart = Chart(("x", "y", "z"))
            >>> x = chart.gen("x")
            >>> frame = Frame(chart, PolyMatrix.from_rows(chart, [[1, 0, 0], [0, 1, x], [0, 0, 1]]))
            >>> frame.structure_functions() == {(0, 1, 2): chart.one}
            True
        """
        if self._structure is None:
            table: StructureFunctions = {}
            for i, j in itertools.combinations(range(self.dim), 2):
                bracket = lie_bracket(self.field(i), self.field(j))
                coeffs = self.vector_components(bracket)
                rebuilt = self.vector_from_components(coeffs)
                if rebuilt != bracket:
                    raise FrameError(
                        f"Bracket [{self.labels[i]}, {self.labels[j]}] not in frame span"
                    )
                for k, c in enumerate(coeffs):
                    if c:
                        table[(i, j, k)] = c
            self._structure = table
        return dict(self._structure)

    def structure(self, i: int, j: int, k: int) -> PolyElement:
        """C_ij^k for any i, j (antisymmetric)."""
        if i == j:
            return self.chart.zero
        table = self.structure_functions()
        if i < j:
            return table.get((i, j, k), self.chart.zero)
        return -table.get((j, i, k), self.chart.zero)

    def vector_components(self, X: VectorField) -> Tuple[PolyElement, ...]:
        """Frame components c^I of X = c^I Z_I, that is c = (A^{-1})^T X."""
        return self.coframe_matrix.apply(X.components)

    def vector_from_components(self, comps: Sequence[Any]) -> VectorField:
        return VectorField(self.chart, self.matrix.T.apply(comps))

    def form_components(self, alpha: DifferentialForm) -> Tuple[PolyElement, ...]:
        """a_I = α(Z_I)."""
        return self.matrix.apply(alpha.components())

    def form_from_components(self, comps: Sequence[Any]) -> DifferentialForm:
        """α = a_I Θ^I."""
        return DifferentialForm.one_form(self.chart, self.coframe_matrix.T.apply(comps))

    def two_form_matrix(self, B: DifferentialForm) -> PolyMatrix:
        """b_IJ = B(Z_I, Z_J)."""
        if B.degree != 2:
            raise ValidationError(f"Expected a 2-form, got degree {B.degree}")
        coord = PolyMatrix.from_rows(
            self.chart,
            [[B.coefficient((k, l)) for l in range(self.dim)] for k in range(self.dim)],
        )
        return self.matrix @ coord @ self.matrix.T

    def two_form_from_matrix(self, b: PolyMatrix) -> DifferentialForm:
        """Σ_{I<J} b_IJ Θ^I∧Θ^J from an antisymmetric frame matrix."""
        if not b.is_antisymmetric():
            raise ValidationError("Two-form component matrix must be antisymmetric")
        coord = self.bilinear_to_coordinates(b)
        terms = [
            ((k, l), coord[k, l]) for k in range(self.dim) for l in range(k + 1, self.dim)
        ]
        return DifferentialForm.from_terms(self.chart, 2, terms)

    def bilinear_to_coordinates(self, t: PolyMatrix) -> PolyMatrix:
        """Coordinate matrix of T = t_IJ Θ^I⊗Θ^J, namely M^T t M with M the coframe matrix."""
        return self.coframe_matrix.T @ t @ self.coframe_matrix

    def bilinear_to_frame(self, t: PolyMatrix) -> PolyMatrix:
        """t_IJ = T(Z_I, Z_J) from a coordinate matrix."""
        return self.matrix @ t @ self.matrix.T

    def form_frame_components(self, omega: DifferentialForm) -> Dict[Tuple[int, ...], PolyElement]:
        """Nonzero ω(Z_I1, ..., Z_Ip) over increasing frame index tuples."""
        fields = self.fields
        out: Dict[Tuple[int, ...], PolyElement] = {}
        for idx in itertools.combinations(range(self.dim), omega.degree):
            value = omega(*(fields[i] for i in idx))
            if value:
                out[idx] = value
        return out

    def form_from_frame_components(
        self, degree: int, comps: Mapping[Tuple[int, ...], Any]
    ) -> DifferentialForm:
        """Σ_I c_I Θ^{I_1}∧...∧Θ^{I_p} over increasing frame index tuples."""
        result = DifferentialForm.zero(self.chart, degree)
        coframes = self.coframes
        for idx, c in comps.items():
            if degree == 0:
                result = result + DifferentialForm.function(self.chart, c)
                continue
            result = result + wedge_all([coframes[i] for i in idx]).scale(c)
        return result

    def describe(self) -> List[str]:
        return [f"{label} = {self.field(i).to_text()}" for i, label in enumerate(self.labels)]

    def __repr__(self) -> str:
        return f"Frame({self.name or 'unnamed'}, labels={self.labels})"
