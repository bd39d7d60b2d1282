"""
courant-tduality: exact Courant algebroid reduction and T-duality.

The toolkit works on polynomial coordinate charts with rational
coefficients: twisted Courant algebroids and their axioms, reduction by
foliation subbundles, Courant algebroid relations, generalised metrics and
isometries, T-duality with the Buscher rules, and the para-Hermitian
description with generalised fluxes.

Basic Usage:
    >>> from courant_tduality.workbench import cmd_tdualize, example_document
    >>> report = cmd_tdualize(example_document("lens", {"m": "1", "k": "1", "n": "1"}))
    >>> report.passed
    True
"""

from .core import (
    ChartError,
    CheckReport,
    ComponentError,
    ComponentRegistry,
    ConfigError,
    ConfigManager,
    EventBus,
    EventError,
    FrameError,
    ParseError,
    ReductionError,
    RegistryError,
    RelationError,
    TDualityError,
    ValidationError,
    Workbench,
    WorkbenchError,
    get_registry,
    register_component,
)
from .interfaces import BaseComponent
from .utils import setup_logging

__version__ = "0.1.0"
__license__ = "MIT"

__all__ = [
    # Core
    "Workbench",
    "ComponentRegistry",
    "get_registry",
    "register_component",
    "ConfigManager",
    "EventBus",
    "CheckReport",
    # Exceptions
    "WorkbenchError",
    "ChartError",
    "ParseError",
    "FrameError",
    "ValidationError",
    "ReductionError",
    "RelationError",
    "TDualityError",
    "ConfigError",
    "RegistryError",
    "ComponentError",
    "EventError",
    # Interfaces
    "BaseComponent",
    # Utils
    "setup_logging",
]
