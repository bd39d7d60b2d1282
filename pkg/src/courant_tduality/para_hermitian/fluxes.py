"""
Generalised fluxes of a para-Hermitian frame and the admissibility of
T-duality directions.

For L₊ = span{Z_i} and L₋ = span{Z̃^i}:

    [Z_i, Z_j]   = f_ij^k Z_k + H_ijk Z̃^k
    [Z_i, Z̃^j]  = (…) Z̃^k + Q_i^{jk} Z_k
    [Z̃^i, Z̃^j] = (…) Z̃^k + R^{ijk} Z_k
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Dict, Iterable, List, Tuple
import logging

from sympy.polys.rings import PolyElement

from ..core.report import CheckReport
from ..exterior.chart import Chart
from ..exterior.forms import DifferentialForm, ext_d
from ..exterior.polynomial import format_polynomial
from .structure import ParaHermitianFrame

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class FluxData:
    """
    Nonzero flux components of a para-Hermitian frame.

    f, H and R are keyed by (i, j, k) with i < j and are antisymmetric in
    (i, j); Q is keyed by (i, j, k) for Q_i^{jk}. Indices run over 0..n-1.
    """

    chart: Chart
    labels: Tuple[str, ...]
    f: Dict[Triple, PolyElement]
    H: Dict[Triple, PolyElement]
    Q: Dict[Triple, PolyElement]
    R: Dict[Triple, PolyElement]

    @property
    def n(self) -> int:
        return len(self.labels)

    def _antisymmetric(self, table: Dict[Triple, PolyElement], i: int, j: int, k: int):
        if i == j:
            return self.chart.zero
        if i < j:
            return table.get((i, j, k), self.chart.zero)
        return -table.get((j, i, k), self.chart.zero)

    def f_(self, i: int, j: int, k: int) -> PolyElement:
        """f_ij^k."""
        return self._antisymmetric(self.f, i, j, k)

    def H_(self, i: int, j: int, k: int) -> PolyElement:
        """H_ijk = η([Z_i, Z_j], Z_k)."""
        return self._antisymmetric(self.H, i, j, k)

    def Q_(self, i: int, j: int, k: int) -> PolyElement:
        """Q_i^{jk}."""
        return self.Q.get((i, j, k), self.chart.zero)

    def R_(self, i: int, j: int, k: int) -> PolyElement:
        """R^{ijk} = η([Z̃^i, Z̃^j], Z̃^k)."""
        return self._antisymmetric(self.R, i, j, k)

    def is_zero(self) -> bool:
        return not (self.f or self.H or self.Q or self.R)

    def _key(self, i: int, j: int, k: int) -> str:
        return ",".join(self.labels[a] for a in (i, j, k))

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        return {
            name: {self._key(*idx): format_polynomial(v) for idx, v in sorted(table.items())}
            for name, table in (("f", self.f), ("H", self.H), ("Q", self.Q), ("R", self.R))
        }


def flux_extract(F: ParaHermitianFrame) -> FluxData:
    """
    Sort the structure functions of F into the four flux blocks.

    Example:
        >>> from courant_tduality.workbench.examples import heisenberg_frame
        >>> fluxes = flux_extract(heisenberg_frame(1))
        >>> fluxes.to_dict()["f"]
        {'x,z,y': '1'}
    """
    n, frame = F.n, F.frame
    f: Dict[Triple, PolyElement] = {}
    H: Dict[Triple, PolyElement] = {}
    Q: Dict[Triple, PolyElement] = {}
    R: Dict[Triple, PolyElement] = {}
    for i, j in combinations(range(n), 2):
        for k in range(n):
            for table, value in (
                (f, frame.structure(i, j, k)),
                (H, frame.structure(i, j, n + k)),
                (R, frame.structure(n + i, n + j, k)),
            ):
                if value:
                    table[(i, j, k)] = value
    for i, j, k in product(range(n), repeat=3):
        value = frame.structure(i, n + j, k)
        if value:
            Q[(i, j, k)] = value
    labels = tuple(label.replace("Z_", "") for label in F.plus_labels)
    fluxes = FluxData(F.chart, labels, f, H, Q, R)
    logger.debug(f"Fluxes: {fluxes.to_dict()}")
    return fluxes


def _plus_projection(F: ParaHermitianFrame, form: DifferentialForm) -> Dict[Triple, PolyElement]:
    # frame components on increasing L₊ triples, i.e. the (+3,−0) part
    comps = F.frame.form_frame_components(form)
    return {idx: c for idx, c in comps.items() if all(i < F.n for i in idx)}


def hcan_flux(F: ParaHermitianFrame) -> Tuple[DifferentialForm, CheckReport]:
    """
    H = (dω)^{+3,−0} / 3 together with its certificate.

    The dω route is compared with the bracket route
    dω(Z_i, Z_j, Z_k) = H_ijk − H_ikj + H_jki, and H is checked to be
    closed. A failure is reported, not repaired.

    Returns:
        The 3-form on F's chart and the suite "para.hcan".
    """
    fluxes = flux_extract(F)
    domega = ext_d(F.omega())
    route = _plus_projection(F, domega)
    residuals = {}
    for i, j, k in combinations(range(F.n), 3):
        bracket = fluxes.H_(i, j, k) - fluxes.H_(i, k, j) + fluxes.H_(j, k, i)
        diff = route.get((i, j, k), F.chart.zero) - bracket
        if diff:
            residuals[fluxes._key(i, j, k)] = format_polynomial(diff)
    thirds = {idx: c * F.chart.constant("1/3") for idx, c in route.items()}
    H = F.frame.form_from_frame_components(3, thirds)
    dH = ext_d(H)
    closed = {}
    if not dH.is_zero():
        closed = {"dH": dH.to_text()}
    report = CheckReport.suite(
        "para.hcan",
        [
            CheckReport.from_residuals("para.hcan_bracket_route", residuals),
            CheckReport.from_residuals("para.hcan_closed", closed),
        ],
        details={"H": H.to_text()},
    )
    return H, report


def l_minus_obstruction(F: ParaHermitianFrame, fluxes: Any = None) -> CheckReport:
    """
    The totally antisymmetrised η([X₋, Y₋], Z₋) on the L₋ frame.

    It vanishes when L₋ is integrable; the residuals list R^{ijk} − R^{ikj} + R^{jki}.
    """
    fluxes = fluxes or flux_extract(F)
    residuals = {}
    for i, j, k in combinations(range(F.n), 3):
        value = fluxes.R_(i, j, k) - fluxes.R_(i, k, j) + fluxes.R_(j, k, i)
        if value:
            residuals[fluxes._key(i, j, k)] = format_polynomial(value)
    return CheckReport.from_residuals("para.lminus_obstruction", residuals)


def _zero_clause(name: str, fluxes: FluxData, fn, triples: Iterable[Triple]) -> CheckReport:
    residuals = {}
    for i, j, k in triples:
        value = fn(i, j, k)
        if value:
            residuals[fluxes._key(i, j, k)] = format_polynomial(value)
    return CheckReport.from_residuals(name, residuals)


def _symmetry_clause(
    name: str, fluxes: FluxData, pairs: Iterable[Tuple[Triple, Triple]]
) -> CheckReport:
    residuals = {}
    for left, right in pairs:
        diff = fluxes.H_(*left) - fluxes.H_(*right)
        if diff:
            residuals[f"{fluxes._key(*left)} - {fluxes._key(*right)}"] = format_polynomial(diff)
    return CheckReport.from_residuals(name, residuals)


def sf_conditions_check(fluxes: FluxData, duality: Iterable[int]) -> CheckReport:
    """
    Whether the duality directions μ̲ are admissible for the fluxes.

    Clauses: R = 0, Q = 0, f_{μ̲ν̲}^i = 0, f_{μ̲μ}^i = 0, H_{μ̲ν̲α̲} = 0,
    H_{iμ̲μ} = H_{iμμ̲}, H_{μμ̲ν̲} = H_{μν̲μ̲} and the B-invariance
    condition H_{μ̲ν̲μ} = H_{μ̲μν̲}. Here μ runs over the remaining L₊
    indices and i over all of them.

    Args:
        fluxes: Output of flux_extract.
        duality: Indices into L₊.

    Returns:
        Suite "para.sf_conditions" with one child per clause.
    """
    dual = sorted(set(duality))
    rest = [i for i in range(fluxes.n) if i not in dual]
    every = range(fluxes.n)
    n = fluxes.n
    all_triples = list(product(range(n), repeat=3))
    clauses: List[CheckReport] = [
        _zero_clause("sf.R", fluxes, fluxes.R_, all_triples),
        _zero_clause("sf.Q", fluxes, fluxes.Q_, all_triples),
        _zero_clause("sf.f_dual_dual", fluxes, fluxes.f_, product(dual, dual, every)),
        _zero_clause("sf.f_dual_spectator", fluxes, fluxes.f_, product(dual, rest, every)),
        _zero_clause("sf.H_dual", fluxes, fluxes.H_, product(dual, dual, dual)),
        _symmetry_clause(
            "sf.H_symmetric",
            fluxes,
            (((i, a, m), (i, m, a)) for i, a, m in product(every, dual, rest)),
        ),
        _symmetry_clause(
            "sf.H_spectator",
            fluxes,
            (((m, a, b), (m, b, a)) for m, a, b in product(rest, dual, dual)),
        ),
        _symmetry_clause(
            "sf.B_invariance",
            fluxes,
            (((a, b, m), (a, m, b)) for a, b, m in product(dual, dual, rest)),
        ),
    ]
    report = CheckReport.suite(
        "para.sf_conditions",
        clauses,
        details={"duality": [fluxes.labels[i] for i in dual]},
    )
    if not report.passed:
        failed = [c.name for c in report.failures()]
        logger.info(f"Directions {report.details['duality']} not admissible: {failed}")
    return report


def singleton_scan(fluxes: FluxData) -> Dict[str, bool]:
    """Admissibility of every single L₊ direction, keyed by label."""
    return {
        fluxes.labels[i]: sf_conditions_check(fluxes, [i]).passed for i in range(fluxes.n)
    }
