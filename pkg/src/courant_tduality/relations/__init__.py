"""
Exact pointwise linear algebra for Courant algebroid relations.
"""

from .compose import Composition, compose
from .fiber import (
    FiberSpace,
    FiberSubspace,
    dirac_check,
    graph,
    identity_relation,
    product,
    to_rational,
)
from .isometry import (
    classical_graph_fiber,
    isometry_decomposition_check,
    sections_fiber,
    splitting_compat_check,
    transverse_isometry_check,
    vplus_fiber,
)
from .qk import k_fiber, qk_fiber, qk_perp_decomposition_check

__all__ = [
    "Composition",
    "FiberSpace",
    "FiberSubspace",
    "classical_graph_fiber",
    "compose",
    "dirac_check",
    "graph",
    "identity_relation",
    "isometry_decomposition_check",
    "k_fiber",
    "product",
    "qk_fiber",
    "qk_perp_decomposition_check",
    "sections_fiber",
    "splitting_compat_check",
    "to_rational",
    "transverse_isometry_check",
    "vplus_fiber",
]
