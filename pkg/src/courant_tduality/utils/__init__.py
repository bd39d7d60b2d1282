"""
Logging and validation helpers.
"""

from .logger import resolve_level, setup_logging
from .validators import (
    parse_box,
    validate_choice,
    validate_identifier,
    validate_range,
    validate_unique,
)

__all__ = [
    "setup_logging",
    "resolve_level",
    "parse_box",
    "validate_choice",
    "validate_identifier",
    "validate_range",
    "validate_unique",
]
