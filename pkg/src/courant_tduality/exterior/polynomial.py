"""
Exact polynomial helpers.

Polynomials are sympy PolyElements of a chart's ring over QQ. This module
adds what the toolkit needs on top of sympy: strict conversion of scalars to
QQ (floats are refused), evaluation at rational points, substitution into
another chart's ring, and the canonical string form `3/2*x^2*z - y + 1`.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple
import logging

from sympy import Basic
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from ..core.exceptions import ChartError, ValidationError

logger = logging.getLogger(__name__)

Polynomial = PolyElement


def to_qq(value: Any) -> Any:
    """
    Convert an exact scalar to a QQ element.

    Accepts ints, Fractions, "p/q" strings, sympy Rationals, QQ/ZZ elements and
    constant polynomials.

    Raises:
        ValidationError: For floats and anything non-exact.

    Example:
        >>> to_qq("3/2") == QQ(3, 2)
        True
    """
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, (bool, float)):
        raise ValidationError(f"Inexact or boolean scalar refused: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            frac = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Not a rational number: '{value}'")
        return QQ(frac.numerator, frac.denominator)
    if isinstance(value, PolyElement):
        if not value.is_ground:
            raise ValidationError(
                f"Expected a constant, got a polynomial: {format_polynomial(value)}"
            )
        return constant_value(value)
    if isinstance(value, Basic):
        if not value.is_Rational:
            raise ValidationError(f"Expected a rational number, got {value}")
        return QQ.from_sympy(value)
    try:
        return QQ.convert(value)
    except Exception:
        raise ValidationError(f"Cannot convert {value!r} to an exact rational")


def to_fraction(value: Any) -> Fraction:
    c = to_qq(value)
    return Fraction(int(c.numerator), int(c.denominator))


def qq_str(value: Any) -> str:
    """
    Render a rational as "p" or "p/q".

    Example:
        >>> qq_str(QQ(-3, 2))
        '-3/2'
    """
    c = to_qq(value)
    num, den = int(c.numerator), int(c.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def constant_value(p: PolyElement) -> Any:
    """
    The value of a constant polynomial.

    Raises:
        ValidationError: If p depends on a coordinate.
    """
    if not p.is_ground:
        raise ValidationError(f"Expected a constant, got {format_polynomial(p)}")
    return p.get(p.ring.zero_monom, QQ.zero)


def degree(p: PolyElement) -> int:
    """Total degree; 0 for constants and for the zero polynomial."""
    return max((sum(m) for m in p.keys()), default=0)


def depends_on(p: PolyElement, index: int) -> bool:
    return any(m[index] for m in p.keys())


def evaluate(p: PolyElement, point: Sequence[Any]) -> Any:
    """
    Evaluate at a rational point given in chart order.

    Example:
        >>> R = PolyRing(("x", "y"), QQ)
        >>> x, y = R.gens
        >>> evaluate(x * y + 1, [2, 3]) == QQ(7)
        True
    """
    if len(point) != p.ring.ngens:
        raise ChartError(f"Point has {len(point)} coordinates, chart has {p.ring.ngens}")
    values = [to_qq(v) for v in point]
    total = QQ.zero
    for monom, coeff in p.terms():
        term = coeff
        for value, exp in zip(values, monom):
            if exp:
                term = term * value**exp
        total += term
    return total


def compose(p: PolyElement, images: Sequence[PolyElement], target: PolyRing) -> PolyElement:
    """
    Substitute polynomials of another ring for the variables of p.

    Args:
        p: Polynomial in n variables.
        images: n polynomials of the target ring, one per variable of p.
        target: The target ring.

    Returns:
        p(images) in the target ring.
    """
    if len(images) != p.ring.ngens:
        raise ChartError(f"Need {p.ring.ngens} substitutions, got {len(images)}")
    powers: Dict[Tuple[int, int], PolyElement] = {}

    def power(i: int, e: int) -> PolyElement:
        key = (i, e)
        if key not in powers:
            powers[key] = images[i] ** e
        return powers[key]

    result = target.zero
    for monom, coeff in p.terms():
        term = target.ground_new(coeff)
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
        result += term
    return result


def format_polynomial(p: PolyElement, names: Iterable[str] = ()) -> str:
    """
    Canonical text form in graded-lex order, readable by parse_polynomial.

    Example:
        >>> R = PolyRing(("x", "z"), QQ)
        >>> x, z = R.gens
        >>> format_polynomial(QQ(3, 2) * x**2 * z - 1)
        '3/2*x^2*z - 1'
    """
    symbols = list(names) or [str(s) for s in p.ring.symbols]
    if not p:
        return "0"
    pieces: List[str] = []
    for monom, coeff in p.terms():
        factors = [
            name if exp == 1 else f"{name}^{exp}"
            for name, exp in zip(symbols, monom)
            if exp
        ]
        magnitude = -coeff if coeff < 0 else coeff
        if not factors:
            body = qq_str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = qq_str(magnitude) + "*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def render(value: Any) -> str:
    """Canonical text for residuals: polynomials, rationals and toolkit objects."""
    if isinstance(value, PolyElement):
        return format_polynomial(value)
    if isinstance(value, (int, Fraction, QQ.dtype)):
        return qq_str(value)
    to_text = getattr(value, "to_text", None)
    if callable(to_text):
        return to_text()
    return str(value)
