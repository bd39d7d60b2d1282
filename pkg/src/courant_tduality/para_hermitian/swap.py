"""
Swapping T-duality directions between L₊ and L₋ along a diffeomorphism.
"""

from typing import Any, Iterable
import logging

from ..core.exceptions import FrameError
from ..core.report import CheckReport
from ..exterior.diffeo import DiffeoMap
from ..exterior.frames import Frame
from ..exterior.polynomial import format_polynomial
from .structure import ParaHermitianFrame

logger = logging.getLogger(__name__)


def eta_preservation_check(
    F1: ParaHermitianFrame, F2: ParaHermitianFrame, phi: DiffeoMap
) -> CheckReport:
    """φ*η₂ = η₁ in coordinates on the source chart."""
    pulled = phi.pullback_tensor(F2.eta())
    diff = pulled - F1.eta()
    n = diff.shape[0]
    residuals = {
        f"eta[{i},{j}]": format_polynomial(diff[i, j])
        for i in range(n)
        for j in range(n)
        if diff[i, j]
    }
    return CheckReport.from_residuals("para.swap_eta", residuals)


def swap_frame(F: ParaHermitianFrame, duality: Iterable[Any], phi: DiffeoMap) -> ParaHermitianFrame:
    """
    The frame Z'_μ̲ = φ_*(Z̃^μ̲), Z̃'^μ̲ = φ_*(Z_μ̲), every other field pushed forward.

    Labels are kept, so Z'_μ̲ carries the label of Z_μ̲.

    Raises:
        FrameError: If φ does not start on F's chart or η is not preserved.
        ValidationError: If a duality direction is not in L₊.
    """
    phi.source.check_same(F.chart)
    dual = F.resolve_duality(duality)
    plus = [phi.pushforward(F.minus(i) if i in dual else F.plus(i)) for i in range(F.n)]
    minus = [phi.pushforward(F.plus(i) if i in dual else F.minus(i)) for i in range(F.n)]
    name = f"{F.frame.name or 'frame'} swapped along {[F.plus_labels[i] for i in dual]}"
    swapped = ParaHermitianFrame(Frame.from_fields(plus + minus, F.frame.labels, name))
    check = eta_preservation_check(F, swapped, phi)
    if not check.passed:
        raise FrameError(f"Swapped frame does not preserve eta: {check.residuals}")
    logger.info(f"Swapped {len(dual)} direction(s) onto {phi.target}")
    return swapped
