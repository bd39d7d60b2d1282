"""
End-to-end para-Hermitian T-duality check for one frame and one set of
duality directions.
"""

from typing import Any, Dict, Iterable, Optional, Tuple
import logging

from ..core.report import CheckReport
from ..exterior.diffeo import DiffeoMap
from ..exterior.sampling import SamplePlan
from ..genmetric.metric import positivity_check
from .fluxes import (
    flux_extract,
    hcan_flux,
    l_minus_obstruction,
    sf_conditions_check,
    singleton_scan,
)
from .metric import GenParaMetric, para_buscher, para_metric_route_check, pullback_identity_check
from .structure import ParaHermitianFrame, compatibility_check
from .swap import swap_frame

logger = logging.getLogger(__name__)


def para_check(
    F: ParaHermitianFrame,
    duality: Iterable[Any],
    phi: Optional[DiffeoMap] = None,
    G: Optional[GenParaMetric] = None,
    plan: Optional[SamplePlan] = None,
) -> Tuple[CheckReport, Dict[str, Any]]:
    """
    Fluxes, admissibility and, when φ and G are given, the swapped frame and
    the para-Buscher dual with its φ*ℋ₂ = ℋ₁ certificate.

    With G given, "para.positivity" checks g₊ by leading minors; a
    non-constant g₊ is sampled at the points of plan.

    Returns:
        The suite "para.check" and a results dict for the report document.

    Raises:
        ValidationError: If a duality direction is not in L₊.
        TDualityError: If g₊ is not invertible on the duality directions.
    """
    dual = F.resolve_duality(duality)
    fluxes = flux_extract(F)
    H, hcan = hcan_flux(F)
    admissible = sf_conditions_check(fluxes, dual)
    checks = [compatibility_check(F), hcan, l_minus_obstruction(F, fluxes), admissible]
    if G is not None:
        checks.append(positivity_check(G.g, plan, name="para.positivity"))
    results: Dict[str, Any] = {
        "fluxes": fluxes.to_dict(),
        "H": H.to_text(),
        "duality": [F.plus_labels[i] for i in dual],
        "admissible_directions": singleton_scan(fluxes),
    }
    if phi is not None:
        F2 = swap_frame(F, dual, phi)
        H2, hcan2 = hcan_flux(F2)
        checks.append(CheckReport.suite("para.swapped", [compatibility_check(F2), hcan2]))
        results["swapped_frame"] = F2.frame.describe()
        results["swapped_fluxes"] = flux_extract(F2).to_dict()
        results["H2"] = H2.to_text()
        if G is not None and admissible.passed:
            G2 = para_buscher(G, dual, phi)
            checks.append(para_metric_route_check(G, dual))
            checks.append(pullback_identity_check(G, F, G2, F2, phi))
            results["g2"] = G2.g.to_strings()
            results["b2"] = G2.b.to_strings()
    elif G is not None:
        checks.append(para_metric_route_check(G, dual))
    report = CheckReport.suite("para.check", checks)
    logger.info(
        f"Para-Hermitian check along {results['duality']}: "
        f"{'passed' if report.passed else 'failed'}"
    )
    return report, results
