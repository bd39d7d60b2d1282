"""
Isotropic subbundles K generated by frame fields, and the coordinate
quotient they define.

K is spanned by frame fields {Z_i : i ∈ S} tangent to a foliation whose
leaves are the fiber coordinates. Optionally K is shifted by a 2-form,
K = e^{−B}(span{Z_i} ⊕ 0), with generators Z_i − ι_{Z_i}B. The quotient
chart keeps the remaining (base) coordinates in chart order.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from sympy import Matrix
from sympy.polys.rings import PolyElement

from ..core.exceptions import ReductionError, ValidationError
from ..core.report import CheckReport
from ..courant.bfield import BFieldMap
from ..courant.sections import GeneralizedSection, anchor, pairing
from ..exterior.chart import Chart
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm, interior
from ..exterior.frames import Frame
from ..exterior.matrix import PolyMatrix
from ..exterior.polynomial import compose, depends_on, format_polynomial
from ..exterior.tensors import two_form_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientMap:
    """
    The coordinate projection ϖ: M -> Q that forgets the fiber coordinates.

    Attributes:
        source: Chart of M.
        target: Quotient chart, one coordinate per base coordinate of M.
        base_indices: Indices of the base coordinates in the source chart.
    """

    source: Chart
    target: Chart
    base_indices: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.base_indices) != self.target.dim:
            raise ValidationError(
                f"Quotient chart {self.target} needs {len(self.base_indices)} coordinates"
            )

    @property
    def fiber_indices(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.source.dim) if i not in self.base_indices)

    def fiber_dependence(self, p: PolyElement) -> List[str]:
        """Fiber coordinates p depends on."""
        return [self.source.coords[i] for i in self.fiber_indices if depends_on(p, i)]

    def push_function(self, p: Any) -> PolyElement:
        """
        Restrict a fiber-independent polynomial to the quotient chart.

        Raises:
            ReductionError: If p depends on a fiber coordinate.
        """
        p = self.source.require(p)
        leaves = self.fiber_dependence(p)
        if leaves:
            raise ReductionError(
                f"{format_polynomial(p)} depends on fiber coordinate(s) {leaves}"
            )
        images = [self.target.zero] * self.source.dim
        for k, i in enumerate(self.base_indices):
            images[i] = self.target.ring.gens[k]
        return compose(p, images, self.target.ring)

    def pull_function(self, p: Any) -> PolyElement:
        """ϖ*p."""
        gens = self.source.gens()
        return compose(
            self.target.require(p), [gens[i] for i in self.base_indices], self.source.ring
        )

    def form_obstructions(self, omega: DifferentialForm) -> Dict[str, str]:
        """Fiber differentials and fiber-dependent coefficients that block restriction."""
        found: Dict[str, str] = {}
        fiber = set(self.fiber_indices)
        for idx, c in omega.items():
            label = "^".join(f"d{self.source.coords[i]}" for i in idx) or "1"
            if fiber & set(idx):
                found[f"fiber differential {label}"] = format_polynomial(c)
            elif self.fiber_dependence(c):
                found[f"fiber dependence of {label}"] = format_polynomial(c)
        return found

    def push_form(self, omega: DifferentialForm) -> DifferentialForm:
        """
        The form ω̄ on Q with ϖ*ω̄ = ω.

        Raises:
            ReductionError: If ω has fiber differentials or fiber dependence.
        """
        self.source.check_same(omega.chart)
        blocked = self.form_obstructions(omega)
        if blocked:
            raise ReductionError(f"Form does not descend to the quotient: {blocked}")
        position = {i: k for k, i in enumerate(self.base_indices)}
        coeffs = {
            tuple(position[i] for i in idx): self.push_function(c) for idx, c in omega.items()
        }
        return DifferentialForm(self.target, omega.degree, coeffs)

    def pull_form(self, omega: DifferentialForm) -> DifferentialForm:
        self.target.check_same(omega.chart)
        coeffs = {
            tuple(self.base_indices[k] for k in idx): self.pull_function(c)
            for idx, c in omega.items()
        }
        return DifferentialForm(self.source, omega.degree, coeffs)

    def tensor_obstructions(self, t: PolyMatrix) -> Dict[str, str]:
        found: Dict[str, str] = {}
        fiber = set(self.fiber_indices)
        n = self.source.dim
        for i in range(n):
            for j in range(n):
                c = t[i, j]
                if not c:
                    continue
                if i in fiber or j in fiber:
                    found[f"fiber entry [{i},{j}]"] = format_polynomial(c)
                elif self.fiber_dependence(c):
                    found[f"fiber dependence [{i},{j}]"] = format_polynomial(c)
        return found

    def push_tensor(self, t: PolyMatrix) -> PolyMatrix:
        """
        Restrict a bilinear form with no fiber entries to the quotient chart.

        Raises:
            ReductionError: If t has fiber rows/columns or fiber dependence.
        """
        blocked = self.tensor_obstructions(t)
        if blocked:
            raise ReductionError(f"Tensor does not descend to the quotient: {blocked}")
        return t.submatrix(self.base_indices, self.base_indices).map(
            self.push_function, chart=self.target
        )

    def pull_tensor(self, t: PolyMatrix) -> PolyMatrix:
        """ϖ*T, zero on fiber rows and columns."""
        self.target.check_same(t.chart)
        n = self.source.dim
        position = {i: k for k, i in enumerate(self.base_indices)}
        rows = [
            [
                self.pull_function(t[position[i], position[j]])
                if i in position and j in position
                else 0
                for j in range(n)
            ]
            for i in range(n)
        ]
        return PolyMatrix.from_rows(self.source, rows)

    def push_components(self, comps: Sequence[PolyElement]) -> Tuple[PolyElement, ...]:
        """Base components of a coordinate vector or covector, restricted to Q."""
        return tuple(self.push_function(comps[i]) for i in self.base_indices)


class FoliationSubbundle:
    """
    K = e^{−B}(span{Z_i : i ∈ S} ⊕ 0) for a frame and an index set S.

    Attributes:
        frame: The frame, used as the adapted splitting.
        span: Sorted frame indices S.
        fiber_coords: Leaf coordinates, in chart order.
        shift: The 2-form B, or None for K = T𝓕 ⊕ 0.
        quotient: The QuotientMap onto the base coordinates.
        name: Label used in reports.

    Raises:
        ReductionError: If span{Z_i} is not involutive, a generator has a
            base component, or |S| differs from the number of fiber coordinates.
    """

    def __init__(
        self,
        frame: Frame,
        span: Sequence[Any],
        fiber_coords: Sequence[str],
        shift: Optional[DifferentialForm] = None,
        quotient_names: Optional[Sequence[str]] = None,
        name: str = "K",
    ) -> None:
        chart = frame.chart
        self.frame = frame
        self.name = name
        self.span: Tuple[int, ...] = tuple(sorted({frame.resolve(s) for s in span}))
        fiber = {chart.index(c) for c in fiber_coords}
        self.fiber_coords: Tuple[str, ...] = tuple(c for c in chart.coords if c in fiber_coords)
        if shift is not None:
            chart.check_same(shift.chart)
            if shift.degree != 2 and not shift.is_zero():
                raise ValidationError(f"{name}: shift must be a 2-form, got degree {shift.degree}")
            shift = shift if shift.degree == 2 else DifferentialForm.zero(chart, 2)
        self.shift = shift
        base = tuple(i for i in range(chart.dim) if i not in fiber)
        names = tuple(quotient_names) if quotient_names else tuple(chart.coords[i] for i in base)
        if len(names) != len(base):
            raise ValidationError(
                f"{name}: {len(base)} quotient names needed, got {len(names)}"
            )
        self.quotient = QuotientMap(chart, Chart(names), base)
        self._check_involutive()
        self._check_anchor()
        logger.debug(
            f"{name}: span {[frame.labels[i] for i in self.span]}, fiber {self.fiber_coords}"
        )

    def _check_involutive(self) -> None:
        for a in self.span:
            for b in self.span:
                if a >= b:
                    continue
                for k in range(self.frame.dim):
                    if k not in self.span and self.frame.structure(a, b, k):
                        raise ReductionError(
                            f"{self.name} is not involutive: [{self.frame.labels[a]}, "
                            f"{self.frame.labels[b]}] has component "
                            f"{format_polynomial(self.frame.structure(a, b, k))} "
                            f"along {self.frame.labels[k]}"
                        )

    def _check_anchor(self) -> None:
        if len(self.span) != len(self.fiber_coords):
            raise ReductionError(
                f"{self.name}: rank {len(self.span)} does not match "
                f"{len(self.fiber_coords)} fiber coordinate(s)"
            )
        for i in self.span:
            for j in self.quotient.base_indices:
                c = self.frame.matrix[i, j]
                if c:
                    raise ReductionError(
                        f"{self.name}: {self.frame.labels[i]} has component "
                        f"{format_polynomial(c)} along base coordinate "
                        f"{self.chart.coords[j]}"
                    )

    @property
    def chart(self) -> Chart:
        return self.frame.chart

    @property
    def rank(self) -> int:
        return len(self.span)

    @property
    def quotient_chart(self) -> Chart:
        return self.quotient.target

    @property
    def is_shifted(self) -> bool:
        return self.shift is not None and not self.shift.is_zero()

    @property
    def complement(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.frame.dim) if i not in self.span)

    def anchor_fields(self) -> List[VectorField]:
        """Generators Z_i of ρ(K)."""
        return [self.frame.field(i) for i in self.span]

    def splitting(self, X: VectorField) -> GeneralizedSection:
        """The adapted splitting σ(X) = X − ι_X B (σ(X) = X when unshifted)."""
        if not self.is_shifted:
            return GeneralizedSection.of_vector(X)
        return GeneralizedSection(X, -interior(X, self.shift))

    def generators(self) -> List[GeneralizedSection]:
        return [self.splitting(Z) for Z in self.anchor_fields()]

    def contains(self, e: GeneralizedSection) -> bool:
        """Exact membership e ∈ Γ(K) over the polynomial ring."""
        self.chart.check_same(e.chart)
        comps = self.frame.vector_components(e.vec)
        if any(comps[i] for i in self.complement):
            return False
        if not self.is_shifted:
            return e.form.is_zero()
        return (e.form + interior(e.vec, self.shift)).is_zero()

    def perp_contains(self, e: GeneralizedSection) -> bool:
        """e ∈ Γ(K^⊥)."""
        return all(not pairing(e, k) for k in self.generators())

    def natural_project(self, e: GeneralizedSection) -> GeneralizedSection:
        """
        ♮(e) on the quotient chart: undo the shift, then drop fiber components.

        Raises:
            ReductionError: If a surviving component depends on a fiber coordinate.
        """
        self.chart.check_same(e.chart)
        form = e.form
        if self.is_shifted:
            form = form + interior(e.vec, self.shift)
        return GeneralizedSection.from_components(
            self.quotient_chart,
            self.quotient.push_components(e.vec.components),
            self.quotient.push_components(form.components()),
        )

    def quotient_frame(self) -> Frame:
        """
        The frame {Z̄_I : I ∉ S} on the quotient chart.

        Raises:
            ReductionError: If a projected field depends on a fiber coordinate.
        """
        rows = []
        for i in self.complement:
            rows.append(self.quotient.push_components(self.frame.matrix.row(i)))
        labels = [self.frame.labels[i] for i in self.complement]
        matrix = PolyMatrix.from_rows(self.quotient_chart, rows)
        return Frame(self.quotient_chart, matrix, labels=labels, name=f"{self.name} quotient")

    def fiber_vectors(self, point: Sequence[Any]) -> List[List[Any]]:
        """Rational fiber vectors (X^i, α_i) of the generators at a point."""
        return [list(k.at(point)) for k in self.generators()]

    def natural_matrix(self, point: Sequence[Any]) -> Matrix:
        """
        The 2q×2n matrix of ♮ at a point.

        Rows pick the base components of X and of α + ι_X B.
        """
        n = self.chart.dim
        base = self.quotient.base_indices
        q = len(base)
        B = two_form_matrix(self.shift).at(point) if self.is_shifted else None
        out = Matrix.zeros(2 * q, 2 * n)
        for k, j in enumerate(base):
            out[k, j] = 1
            out[q + k, n + j] = 1
            if B is not None:
                for i in range(n):
                    out[q + k, i] = B[i, j]
        return out

    def anchor_report(self) -> CheckReport:
        """ρ|_K injective with image spanned by the fiber coordinate fields."""
        block = self.frame.matrix.submatrix(
            self.span, [self.chart.index(c) for c in self.fiber_coords]
        )
        det = block.det()
        residuals = {} if det and det.is_ground else {"fiber block det": format_polynomial(det)}
        return CheckReport.from_residuals(
            "reduction.anchor",
            residuals,
            details={"rank": self.rank, "fiber_coords": list(self.fiber_coords)},
        )

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "span": [self.frame.labels[i] for i in self.span],
            "fiber_coords": list(self.fiber_coords),
            "quotient_chart": list(self.quotient_chart.coords),
            "shifted": self.is_shifted,
        }

    def __repr__(self) -> str:
        return f"FoliationSubbundle({self.name}, span={self.describe()['span']})"


def adapted_splitting_check(K: FoliationSubbundle) -> CheckReport:
    """
    σ(ρ(K)) ⊆ K for the frame splitting, generator by generator.

    Membership is tested without K's own generators: e^B σ(Z) must be a
    vector field with no base components, i.e. lie in T𝓕 ⊕ 0. Alongside it
    ρ∘σ = id on each Z and the images are mutually isotropic.
    """
    untwist = BFieldMap(K.shift if K.is_shifted else DifferentialForm.zero(K.chart, 2))
    base = K.quotient.base_indices
    residuals: Dict[str, str] = {}
    images = []
    for i, Z in zip(K.span, K.anchor_fields()):
        label = K.frame.labels[i]
        image = K.splitting(Z)
        images.append((label, image))
        if anchor(image) != Z:
            residuals[f"rho(sigma({label}))"] = (anchor(image) - Z).to_text()
        flat = untwist.apply(image)
        if not flat.form.is_zero():
            residuals[f"form of e^B sigma({label})"] = flat.form.to_text()
        leaked = [K.chart.coords[j] for j in base if flat.vec.components[j]]
        if leaked:
            residuals[f"base components of sigma({label})"] = ", ".join(leaked)
    for a, (la, ea) in enumerate(images):
        for lb, eb in images[a:]:
            value = pairing(ea, eb)
            if value:
                residuals[f"<sigma({la}), sigma({lb})>"] = format_polynomial(value)
    return CheckReport.from_residuals(
        "reduction.adapted_splitting", residuals, details={"generators": len(images)}
    )
