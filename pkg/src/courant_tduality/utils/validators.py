"""
Input validation helpers for documents and command-line options.
"""

from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence, Tuple
import re

from ..core.exceptions import ValidationError

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def validate_identifier(value: Any, field: str = "name") -> str:
    """
    Validate a coordinate or label name.

    Raises:
        ValidationError: If value is not an identifier.

    Example:
        >>> validate_identifier("xt")
        'xt'
    """
    if not isinstance(value, str) or not IDENTIFIER.match(value):
        raise ValidationError(f"{field}: '{value}' is not a valid identifier")
    return value


def validate_unique(values: Sequence[str], field: str = "names") -> List[str]:
    """Reject duplicates, naming the first repeated entry."""
    seen = set()
    for value in values:
        if value in seen:
            raise ValidationError(f"{field}: duplicate entry '{value}'")
        seen.add(value)
    return list(values)


def validate_choice(value: Any, choices: Iterable[Any], field: str = "value") -> Any:
    """
    Validate that a value is one of the allowed choices.

    Example:
        >>> validate_choice("json", ["json", "text"])
        'json'
    """
    allowed = list(choices)
    if value not in allowed:
        raise ValidationError(f"{field}: {value!r} not in allowed choices: {allowed}")
    return value


def validate_range(
    value: Any,
    min_value: Optional[Any] = None,
    max_value: Optional[Any] = None,
    field: str = "value",
) -> Any:
    """
    Validate that a numeric value lies in [min_value, max_value].

    Example:
        >>> validate_range(20, min_value=20)
        20
    """
    if min_value is not None and value < min_value:
        raise ValidationError(f"{field}: value {value} is below minimum {min_value}")
    if max_value is not None and value > max_value:
        raise ValidationError(f"{field}: value {value} exceeds maximum {max_value}")
    return value


def parse_box(text: str) -> Tuple[Fraction, Fraction]:
    """
    Parse a sampling box given as "a,b" with rational endpoints.

    Raises:
        ValidationError: On malformed input or a < b violated.

    Example:
        >>> parse_box("-1,1/2")
        (Fraction(-1, 1), Fraction(1, 2))
    """
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValidationError(f"box: expected 'a,b', got '{text}'")
    try:
        low, high = Fraction(parts[0]), Fraction(parts[1])
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"box: endpoints must be rationals, got '{text}'")
    if not low < high:
        raise ValidationError(f"box: lower bound {low} must be below upper bound {high}")
    return low, high
