"""
Exact exterior calculus on polynomial coordinate charts.
"""

from .chart import Chart
from .diffeo import DiffeoMap
from .fields import VectorField, lie_bracket
from .forms import DifferentialForm, exact, ext_d, interior, lie_derivative, wedge, wedge_all
from .frames import Frame
from .matrix import PolyMatrix
from .parser import parse_polynomial
from .polynomial import (
    Polynomial,
    compose,
    constant_value,
    evaluate,
    format_polynomial,
    qq_str,
    render,
    to_qq,
)
from .sampling import RandomSource, SamplePlan
from .tensors import lie_derivative_tensor, two_form_from_matrix, two_form_matrix


def frame_structure_functions(frame: Frame):
    """Structure functions C_IJ^K of a frame (I < J, nonzero entries only)."""
    return frame.structure_functions()


def pushforward(phi: DiffeoMap, X: VectorField) -> VectorField:
    return phi.pushforward(X)


def pullback(phi: DiffeoMap, omega: DifferentialForm) -> DifferentialForm:
    return phi.pullback(omega)


__all__ = [
    "Chart",
    "DiffeoMap",
    "DifferentialForm",
    "Frame",
    "PolyMatrix",
    "Polynomial",
    "RandomSource",
    "SamplePlan",
    "VectorField",
    "compose",
    "constant_value",
    "evaluate",
    "exact",
    "ext_d",
    "format_polynomial",
    "frame_structure_functions",
    "interior",
    "lie_bracket",
    "lie_derivative",
    "lie_derivative_tensor",
    "parse_polynomial",
    "pullback",
    "pushforward",
    "qq_str",
    "render",
    "to_qq",
    "two_form_from_matrix",
    "two_form_matrix",
    "wedge",
    "wedge_all",
]
