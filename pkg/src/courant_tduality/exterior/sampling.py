"""
Seeded sample points and random polynomial data.

Every randomized check draws from a RandomSource built from an explicit
seed, and every pointwise check runs over a SamplePlan, so that reports can
quote the seed and be reproduced exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple
import logging
import math
import random

from sympy.polys.rings import PolyElement

from ..core.exceptions import ValidationError
from .chart import Chart
from .fields import VectorField
from .forms import DifferentialForm, coordinate_basis, ext_d
from .polynomial import qq_str, to_fraction, to_qq

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


def _random_rational_in(
    rng: random.Random, low: Fraction, high: Fraction, max_den: int
) -> Fraction:
    den = rng.randint(1, max_den)
    lo_num = math.ceil(low * den)
    hi_num = math.floor(high * den)
    return Fraction(rng.randint(lo_num, hi_num), den)


@dataclass(frozen=True)
class SamplePlan:
    """
    Distinct rational sample points in a coordinate box.

    Attributes:
        points: Coordinate tuples in chart order.
        seed: Seed the points were drawn from.
        box: (low, high) bounds applied to every coordinate.
    """

    points: Tuple[Point, ...]
    seed: int
    box: Tuple[Fraction, Fraction] = (Fraction(-1), Fraction(1))

    def __post_init__(self) -> None:
        pts = tuple(tuple(to_fraction(v) for v in p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValidationError("Sample points must be pairwise distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "box", (to_fraction(self.box[0]), to_fraction(self.box[1])))

    @classmethod
    def generate(
        cls,
        dim: int,
        samples: int = 20,
        seed: int = 0,
        box: Sequence[Any] = (-1, 1),
        max_denominator: int = 9,
    ) -> "SamplePlan":
        """
        Draw samples distinct points with coordinates p/q in the box, q ≤ max_denominator.

        The origin is always the first point so that symbolic identities with a
        constant value are caught at a memorable place.

        Example:
            >>> plan = SamplePlan.generate(3, samples=20, seed=7)
            >>> len(plan.points)
            20
        """
        low, high = to_fraction(box[0]), to_fraction(box[1])
        if not low < high:
            raise ValidationError(f"Empty sampling box [{low}, {high}]")
        rng = random.Random(seed)
        origin = tuple(
            Fraction(0) if low <= 0 <= high else low for _ in range(dim)
        )
        points: List[Point] = [origin]
        seen = {origin}
        attempts = 0
        while len(points) < samples:
            attempts += 1
            if attempts > 1000 * samples:
                raise ValidationError(f"Could not draw {samples} distinct points in the box")
            p = tuple(_random_rational_in(rng, low, high, max_denominator) for _ in range(dim))
            if p not in seen:
                seen.add(p)
                points.append(p)
        logger.debug(f"SamplePlan: {samples} points in [{low}, {high}]^{dim}, seed {seed}")
        return cls(points=tuple(points), seed=seed, box=(low, high))

    def for_chart(self, chart: Chart) -> "SamplePlan":
        """Regenerate the plan for a chart of another dimension, same seed and box."""
        if self.points and len(self.points[0]) == chart.dim:
            return self
        return SamplePlan.generate(chart.dim, len(self.points), self.seed, self.box)

    def describe(self) -> dict:
        return {
            "seed": self.seed,
            "samples": len(self.points),
            "box": [qq_str(to_qq(self.box[0])), qq_str(to_qq(self.box[1]))],
        }


@dataclass
class RandomSource:
    """
    Seeded generator of random polynomial data on a chart.

    Coefficients are p/q with 1 ≤ |p| ≤ bound and 1 ≤ q ≤ bound; monomials
    have total degree ≤ max_degree.
    """

    chart: Chart
    seed: int = 0
    max_degree: int = 2
    coefficient_bound: int = 9
    max_terms: int = 3
    _rng: random.Random = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._rng = random.Random(self.seed)

    def rational(self) -> Fraction:
        num = self._rng.randint(1, self.coefficient_bound) * self._rng.choice((-1, 1))
        return Fraction(num, self._rng.randint(1, self.coefficient_bound))

    def monomial(self) -> Tuple[int, ...]:
        exps = [0] * self.chart.dim
        for _ in range(self._rng.randint(0, self.max_degree)):
            exps[self._rng.randrange(self.chart.dim)] += 1
        return tuple(exps)

    def polynomial(self, allow_zero: bool = True) -> PolyElement:
        low = 0 if allow_zero else 1
        terms = {}
        for _ in range(self._rng.randint(low, self.max_terms)):
            terms[self.monomial()] = to_qq(self.rational())
        p = self.chart.ring.from_dict(terms) if terms else self.chart.zero
        if not p and not allow_zero:
            return self.chart.constant(self.rational())
        return p

    def vector_field(self) -> VectorField:
        return VectorField(self.chart, tuple(self.polynomial() for _ in range(self.chart.dim)))

    def form(self, degree: int, density: Optional[float] = None) -> DifferentialForm:
        """Random form; each basis coefficient is present with probability density."""
        keep = 0.6 if density is None else density
        terms = {}
        for idx in coordinate_basis(self.chart, degree):
            if self._rng.random() < keep:
                terms[idx] = self.polynomial()
        return DifferentialForm(self.chart, degree, terms)

    def closed_three_form(self) -> DifferentialForm:
        """A random exact 3-form dβ (closed by construction)."""
        return ext_d(self.form(2))

    def choice(self, items: Sequence[Any]) -> Any:
        return self._rng.choice(list(items))
