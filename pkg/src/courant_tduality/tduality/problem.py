"""
T-duality problems on a doubled chart and the reports the pipeline emits.

A problem lives on one chart M with one frame. K₁ = T𝓕₁ ⊕ 0 and
K₂ = e^{−B}(T𝓕₂ ⊕ 0) are spanned by frame fields; the frame indices fall
into four roles:

    common      S₁ ∩ S₂, directions of K₁ ∩ K₂
    v1          S₂ ∖ S₁, the duality directions seen on Q₁
    v2          S₁ ∖ S₂, the duality directions seen on Q₂
    horizontal  everything else
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from ..core.exceptions import TDualityError
from ..core.report import CheckReport
from ..courant.algebroid import TwistedCourant
from ..exterior.chart import Chart
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm, ext_d
from ..exterior.frames import Frame
from ..exterior.matrix import PolyMatrix
from ..genmetric.metric import GeneralisedMetric
from ..reduction.reduce import ReducedAlgebroid
from ..reduction.subbundle import FoliationSubbundle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexRoles:
    """Frame indices sorted by their role in the duality."""

    common: Tuple[int, ...]
    v1: Tuple[int, ...]
    v2: Tuple[int, ...]
    horizontal: Tuple[int, ...]

    @classmethod
    def of(cls, K1: FoliationSubbundle, K2: FoliationSubbundle) -> "IndexRoles":
        s1, s2 = set(K1.span), set(K2.span)
        n = K1.frame.dim
        return cls(
            common=tuple(sorted(s1 & s2)),
            v1=tuple(sorted(s2 - s1)),
            v2=tuple(sorted(s1 - s2)),
            horizontal=tuple(i for i in range(n) if i not in s1 | s2),
        )

    def to_dict(self, labels: Sequence[str]) -> Dict[str, List[str]]:
        return {
            "common": [labels[i] for i in self.common],
            "v1": [labels[i] for i in self.v1],
            "v2": [labels[i] for i in self.v2],
            "horizontal": [labels[i] for i in self.horizontal],
        }


def project_point(K: FoliationSubbundle, point: Sequence[Any]) -> Tuple[Any, ...]:
    """ϖ(m): the base coordinates of a point, in quotient chart order."""
    return tuple(point[i] for i in K.quotient.base_indices)


class TDualityProblem:
    """
    The data of a T-duality over the quotients Q₁ = M/𝓕₁ and Q₂ = M/𝓕₂.

    Attributes:
        E: (TM ⊕ T*M, H) on the doubled chart.
        K1: Unshifted foliation subbundle.
        K2: Foliation subbundle shifted by B (B = 0 allowed).
        G1: Generalised metric on Q₁, in coordinates or in K₁'s quotient frame.
        iso: Vector fields on Q₁ generating Iso(V₁⁺).
        name: Label used in reports.

    Raises:
        TDualityError: If K₁ and K₂ use different frames, K₁ is shifted, the
            ranks differ, or G₁ and the Iso generators are not on Q₁.
    """

    def __init__(
        self,
        E: TwistedCourant,
        K1: FoliationSubbundle,
        K2: FoliationSubbundle,
        G1: GeneralisedMetric,
        iso: Sequence[VectorField] = (),
        name: str = "problem",
    ) -> None:
        if K1.frame is not K2.frame and K1.frame.matrix != K2.frame.matrix:
            raise TDualityError("K1 and K2 must be spanned by fields of the same frame")
        if K1.is_shifted:
            raise TDualityError(f"{K1.name} must be unshifted; put the B-field on {K2.name}")
        if K1.rank != K2.rank:
            raise TDualityError(f"rk {K1.name} = {K1.rank} differs from rk {K2.name} = {K2.rank}")
        E.chart.check_same(K1.chart)
        G1.chart.check_same(K1.quotient_chart)
        for X in iso:
            K1.quotient_chart.check_same(X.chart)
        self.E = E
        self.K1 = K1
        self.K2 = K2
        self.G1 = G1
        self.iso: Tuple[VectorField, ...] = tuple(iso)
        self.name = name
        self.roles = IndexRoles.of(K1, K2)
        self._B_frame: Optional[PolyMatrix] = None
        logger.debug(f"{name}: roles {self.roles.to_dict(self.frame.labels)}")

    @property
    def chart(self) -> Chart:
        return self.E.chart

    @property
    def frame(self) -> Frame:
        return self.K1.frame

    @property
    def B(self) -> DifferentialForm:
        if self.K2.shift is None:
            return DifferentialForm.zero(self.chart, 2)
        return self.K2.shift

    @property
    def B_frame(self) -> PolyMatrix:
        """B(Z_I, Z_J)."""
        if self._B_frame is None:
            self._B_frame = self.frame.two_form_matrix(self.B)
        return self._B_frame

    def reversed(
        self, G2: GeneralisedMetric, iso: Sequence[VectorField] = ()
    ) -> "TDualityProblem":
        """
        The same duality seen from Q₂.

        Applying e^B moves the shift from K₂ to K₁ with the opposite sign and
        turns H into H − dB.
        """
        B = self.B
        K1r = FoliationSubbundle(
            self.frame,
            self.K2.span,
            self.K2.fiber_coords,
            quotient_names=self.K2.quotient_chart.coords,
            name=self.K2.name,
        )
        K2r = FoliationSubbundle(
            self.frame,
            self.K1.span,
            self.K1.fiber_coords,
            shift=-B,
            quotient_names=self.K1.quotient_chart.coords,
            name=self.K1.name,
        )
        E = self.E.twisted(self.E.H - ext_d(B))
        return TDualityProblem(E, K1r, K2r, G2, iso, name=f"{self.name} reversed")

    def describe(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "chart": list(self.chart.coords),
            "K1": self.K1.describe(),
            "K2": self.K2.describe(),
            "B": self.B.to_text(),
            "roles": self.roles.to_dict(self.frame.labels),
        }

    def __repr__(self) -> str:
        return f"TDualityProblem({self.name}, {self.K1!r}, {self.K2!r})"


@dataclass(frozen=True)
class DualBackground:
    """
    The T-dual generalised metric on Q₂.

    Attributes:
        metric: (ḡ₂, b̄₂) in coordinates of Q₂.
        frame_metric: The same pair in K₂'s quotient frame.
    """

    metric: GeneralisedMetric
    frame_metric: GeneralisedMetric

    def to_dict(self) -> Dict[str, Any]:
        return {
            "g": self.metric.g.to_strings(),
            "b": self.metric.b.to_strings(),
            "g_frame": self.frame_metric.g.to_strings(),
            "b_frame": self.frame_metric.b.to_strings(),
        }


@dataclass
class TDualityReport:
    """
    Everything the pipeline established about a problem.

    The dual background is present only when every verdict before it passed.
    """

    problem: str
    checks: List[CheckReport] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    reduced: Dict[str, ReducedAlgebroid] = field(default_factory=dict)
    dual: Optional[DualBackground] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckReport:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "problem": self.problem,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "results": dict(self.results),
        }
        for key, red in self.reduced.items():
            data["results"][f"reduced_{key}"] = red.to_dict()
        if self.dual is not None:
            data["results"]["dual_background"] = self.dual.to_dict()
        return data
