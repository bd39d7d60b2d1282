"""
Fibers of the reduction relation Q(K) = {(e, ♮e) : e ∈ K^⊥} at a point.
"""

from typing import Any, Sequence
import logging

from sympy import Matrix

from ..core.report import CheckReport
from ..reduction.subbundle import FoliationSubbundle
from .fiber import FiberSpace, FiberSubspace, product

logger = logging.getLogger(__name__)


def k_fiber(K: FoliationSubbundle, point: Sequence[Any]) -> FiberSubspace:
    """K at a point, inside TM ⊕ T*M."""
    return FiberSubspace(FiberSpace.single(K.chart.dim), K.fiber_vectors(point))


def qk_fiber(K: FoliationSubbundle, point: Sequence[Any]) -> FiberSubspace:
    """
    Q(K) at (m, ϖ(m)) inside E × Ē_red.

    Its dimension is 2n − rk K.
    """
    n, q = K.chart.dim, K.quotient_chart.dim
    perp = k_fiber(K, point).perp()
    N = K.natural_matrix(point)
    vectors = []
    for v in perp.basis:
        image = N * Matrix(list(v))
        vectors.append(list(v) + list(image))
    return FiberSubspace(FiberSpace.relation(n, q), vectors)


def qk_perp_decomposition_check(K: FoliationSubbundle, point: Sequence[Any]) -> CheckReport:
    """Q(K)^⊥ = K × {0} + Q(K) at a point, by exact rank."""
    Q = qk_fiber(K, point)
    zero = FiberSubspace.zero(FiberSpace.single(K.quotient_chart.dim, -1))
    lhs = Q.perp()
    rhs = product(k_fiber(K, point), zero).sum(Q)
    residuals = {}
    if lhs != rhs:
        residuals["Q(K)^perp vs K x 0 + Q(K)"] = f"dims {lhs.dim} vs {rhs.dim}"
    return CheckReport.from_residuals(
        "relations.qk_perp_decomposition",
        residuals,
        details={"dim_Q": Q.dim, "isotropic": Q.is_isotropic()},
    )
