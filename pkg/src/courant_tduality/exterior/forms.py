"""
Polynomial differential forms and Cartan calculus.

A p-form is stored as a map from strictly increasing index tuples to
nonzero polynomial coefficients, ω = Σ_I ω_I dx^{I_1}∧...∧dx^{I_p}.
Evaluation follows the determinant convention, (dx∧dy)(∂x, ∂y) = 1, and
ι_X contracts the first slot. A form whose degree exceeds the chart
dimension is necessarily zero and is represented as such.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union
import itertools
import logging

from sympy.polys.rings import PolyElement

from ..core.exceptions import ChartError, ValidationError
from .chart import Chart
from .fields import VectorField, lie_bracket
from .polynomial import evaluate, format_polynomial

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


def _sort_with_sign(indices: Sequence[int]) -> Tuple[int, Index]:
    """Sort indices by bubble sort and return (sign, sorted); sign 0 on repeats."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    for i in range(len(items)):
        for j in range(len(items) - 1 - i):
            if items[j] > items[j + 1]:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    return sign, tuple(items)


@dataclass(frozen=True, eq=False)
class DifferentialForm:
    """
    A polynomial p-form on a chart.

    Attributes:
        chart: The chart.
        degree: Form degree p ≥ 0.
        coeffs: Strictly increasing index tuple -> nonzero polynomial.
    """

    chart: Chart
    degree: int
    coeffs: Mapping[Index, PolyElement]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValidationError(f"Form degree must be non-negative, got {self.degree}")
        clean: Dict[Index, PolyElement] = {}
        for idx, c in self.coeffs.items():
            idx = tuple(idx)
            if len(idx) != self.degree:
                raise ValidationError(f"Index {idx} does not match degree {self.degree}")
            if any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValidationError(f"Index {idx} is not strictly increasing")
            if any(i < 0 or i >= self.chart.dim for i in idx):
                raise ChartError(f"Index {idx} out of range for chart {self.chart}")
            c = self.chart.require(c, "form coefficient")
            if c:
                clean[idx] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, chart: Chart, degree: int) -> "DifferentialForm":
        return cls(chart, degree, {})

    @classmethod
    def function(cls, chart: Chart, f: Any) -> "DifferentialForm":
        """A polynomial viewed as a 0-form."""
        return cls(chart, 0, {(): chart.require(f)})

    @classmethod
    def from_terms(
        cls, chart: Chart, degree: int, terms: Iterable[Tuple[Sequence[int], Any]]
    ) -> "DifferentialForm":
        """
        Build a form from (indices, coefficient) pairs in any index order.

        Unsorted indices are sorted with the permutation sign; repeated
        indices contribute nothing; equal tuples accumulate.
        """
        acc: Dict[Index, PolyElement] = {}
        for indices, coeff in terms:
            if len(indices) != degree:
                raise ValidationError(f"Index {tuple(indices)} does not match degree {degree}")
            sign, idx = _sort_with_sign(indices)
            if sign == 0:
                continue
            c = chart.require(coeff, "form coefficient")
            acc[idx] = acc.get(idx, chart.zero) + (c if sign > 0 else -c)
        return cls(chart, degree, acc)

    @classmethod
    def differential(cls, chart: Chart, name: str) -> "DifferentialForm":
        """The coordinate 1-form d(name)."""
        return cls(chart, 1, {(chart.index(name),): chart.one})

    @classmethod
    def one_form(cls, chart: Chart, components: Sequence[Any]) -> "DifferentialForm":
        """α = Σ α_i dx^i from a component list."""
        if len(components) != chart.dim:
            raise ChartError(f"One-form needs {chart.dim} components, got {len(components)}")
        return cls(chart, 1, {(i,): c for i, c in enumerate(components)})

    def components(self) -> Tuple[PolyElement, ...]:
        """Coefficient list of a 1-form."""
        if self.degree != 1:
            raise ValidationError(f"components() needs a 1-form, got degree {self.degree}")
        return tuple(self.coeffs.get((i,), self.chart.zero) for i in range(self.chart.dim))

    def coefficient(self, indices: Sequence[int]) -> PolyElement:
        """Coefficient for indices in any order (antisymmetry applied)."""
        sign, idx = _sort_with_sign(indices)
        if sign == 0:
            return self.chart.zero
        c = self.coeffs.get(idx, self.chart.zero)
        return c if sign > 0 else -c

    def as_function(self) -> PolyElement:
        if self.degree != 0:
            raise ValidationError(f"as_function() needs a 0-form, got degree {self.degree}")
        return self.coeffs.get((), self.chart.zero)

    def items(self) -> Iterator[Tuple[Index, PolyElement]]:
        return iter(sorted(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "DifferentialForm") -> None:
        if not isinstance(other, DifferentialForm):
            raise TypeError(f"Expected a DifferentialForm, got {type(other).__name__}")
        self.chart.check_same(other.chart)
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValidationError(f"Degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "DifferentialForm") -> "DifferentialForm":
        self._check(other)
        if self.is_zero() and self.degree != other.degree:
            return other
        if other.is_zero() and self.degree != other.degree:
            return self
        acc = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            acc[idx] = acc.get(idx, self.chart.zero) + c
        return DifferentialForm(self.chart, self.degree, acc)

    def __neg__(self) -> "DifferentialForm":
        return DifferentialForm(self.chart, self.degree, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "DifferentialForm") -> "DifferentialForm":
        return self + (-other)

    def scale(self, f: Any) -> "DifferentialForm":
        f = self.chart.require(f)
        return DifferentialForm(self.chart, self.degree, {k: f * c for k, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DifferentialForm):
            return NotImplemented
        if self.chart != other.chart:
            return False
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        frozen = tuple(sorted((k, tuple(sorted(c.items()))) for k, c in self.coeffs.items()))
        return hash((self.chart, self.degree, frozen))

    def at(self, point: Sequence[Any]) -> Dict[Index, Any]:
        """Nonzero coefficients evaluated at a rational point."""
        values = {idx: evaluate(c, point) for idx, c in self.coeffs.items()}
        return {idx: v for idx, v in values.items() if v}

    def __call__(self, *vectors: VectorField) -> PolyElement:
        """ω(v_1, ..., v_p) as a polynomial."""
        if len(vectors) != self.degree:
            raise ValidationError(
                f"A {self.degree}-form takes {self.degree} vectors, got {len(vectors)}"
            )
        form = self
        for v in vectors:
            form = interior(v, form)
        return form.as_function()

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        pieces = []
        for idx, c in self.items():
            basis = "^".join(f"d{self.chart.coords[i]}" for i in idx)
            pieces.append(f"({format_polynomial(c)})" + (f"*{basis}" if basis else ""))
        return " + ".join(pieces)

    def to_terms(self) -> List[Tuple[List[str], str]]:
        """Serializable [[coordinate names], polynomial text] pairs in canonical order."""
        return [
            ([self.chart.coords[i] for i in idx], format_polynomial(c)) for idx, c in self.items()
        ]

    def __repr__(self) -> str:
        return f"DifferentialForm[{self.degree}: {self.to_text()}]"


FormOrVector = Union[DifferentialForm, VectorField, PolyElement]


def wedge(alpha: DifferentialForm, beta: DifferentialForm) -> DifferentialForm:
    """
    Exterior product, graded antisymmetric.

    Example:
        >>> chart = Chart(("x", "y"))
        >>> dx = DifferentialForm.differential(chart, "x")
        >>> wedge(dx, dx).is_zero()
        True
    """
    alpha.chart.check_same(beta.chart)
    degree = alpha.degree + beta.degree
    if degree > alpha.chart.dim:
        return DifferentialForm.zero(alpha.chart, degree)
    terms = []
    for I, a in alpha.coeffs.items():
        for J, b in beta.coeffs.items():
            if set(I) & set(J):
                continue
            terms.append((I + J, a * b))
    return DifferentialForm.from_terms(alpha.chart, degree, terms)


def wedge_all(forms: Sequence[DifferentialForm]) -> DifferentialForm:
    result = forms[0]
    for form in forms[1:]:
        result = wedge(result, form)
    return result


def interior(X: VectorField, omega: DifferentialForm) -> DifferentialForm:
    """
    Interior product ι_X ω, contracting the first slot. ι_X of a function is 0.

    Example:
        >>> chart = Chart(("x", "y"))
        >>> dxdy = DifferentialForm.from_terms(chart, 2, [((0, 1), 1)])
        >>> Zx = VectorField.coordinate(chart, "x")
        >>> interior(Zx, dxdy) == DifferentialForm.differential(chart, "y")
        True
    """
    X.chart.check_same(omega.chart)
    if omega.degree == 0:
        return DifferentialForm.zero(omega.chart, 0)
    terms = []
    for idx, c in omega.coeffs.items():
        for pos, i in enumerate(idx):
            if X.components[i]:
                coeff = X.components[i] * c
                terms.append((idx[:pos] + idx[pos + 1:], coeff if pos % 2 == 0 else -coeff))
    return DifferentialForm.from_terms(omega.chart, omega.degree - 1, terms)


def ext_d(omega: DifferentialForm) -> DifferentialForm:
    """
    Exterior derivative dω = Σ_I Σ_j ∂_j ω_I dx^j ∧ dx^I.

    Example:
        >>> chart = Chart(("x", "y", "z"))
        >>> x = chart.gen("x")
        >>> theta = DifferentialForm.one_form(chart, [0, 1, -x])
        >>> ext_d(theta) == DifferentialForm.from_terms(chart, 2, [((0, 2), -1)])
        True
    """
    chart = omega.chart
    degree = omega.degree + 1
    if degree > chart.dim:
        return DifferentialForm.zero(chart, degree)
    terms = []
    for idx, c in omega.coeffs.items():
        for j in range(chart.dim):
            if j in idx:
                continue
            dc = c.diff(j)
            if dc:
                terms.append(((j,) + idx, dc))
    return DifferentialForm.from_terms(chart, degree, terms)


def exact(f: Any, chart: Chart) -> DifferentialForm:
    """df for a polynomial f."""
    return ext_d(DifferentialForm.function(chart, f))


def _lie_derivative_form(X: VectorField, omega: DifferentialForm) -> DifferentialForm:
    # £_X(f dx^{I_1}∧...∧dx^{I_p}) = X(f) dx^I + Σ_s f dx^{I_1}∧..∧d(X^{I_s})∧..∧dx^{I_p}
    chart = omega.chart
    terms = []
    for idx, c in omega.coeffs.items():
        xc = X.apply(c)
        if xc:
            terms.append((idx, xc))
        for pos, i in enumerate(idx):
            for j in range(chart.dim):
                dxi = X.components[i].diff(j)
                if dxi:
                    terms.append((idx[:pos] + (j,) + idx[pos + 1:], c * dxi))
    return DifferentialForm.from_terms(chart, omega.degree, terms)


def lie_derivative(X: VectorField, T: FormOrVector) -> FormOrVector:
    """
    Lie derivative of a form, a vector field or a function along X.

    Forms use the coordinate formula (independent of the Cartan identity,
    which the tests then verify); vector fields use the bracket.
    """
    if isinstance(T, VectorField):
        return lie_bracket(X, T)
    if isinstance(T, DifferentialForm):
        X.chart.check_same(T.chart)
        return _lie_derivative_form(X, T)
    if isinstance(T, PolyElement):
        return X.apply(T)
    raise TypeError(f"Cannot take the Lie derivative of {type(T).__name__}")


def coordinate_basis(chart: Chart, degree: int) -> List[Index]:
    """All strictly increasing index tuples of a degree, in lexicographic order."""
    return list(itertools.combinations(range(chart.dim), degree))
