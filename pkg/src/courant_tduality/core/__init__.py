"""
Core infrastructure of courant-tduality.

- Workbench: orchestrator running registered check and pipeline components
- ComponentRegistry: component registration and discovery
- ConfigManager: layered configuration
- EventBus: stage notifications
- CheckReport: uniform verdict record
- Exception hierarchy rooted at WorkbenchError
"""

from .base import Workbench
from .config import DEFAULT_CONFIG, ConfigManager
from .events import EventBus
from .exceptions import (
    ChartError,
    ComponentError,
    ConfigError,
    EventError,
    FrameError,
    ParseError,
    ReductionError,
    RegistryError,
    RelationError,
    TDualityError,
    ValidationError,
    WorkbenchError,
)
from .registry import ComponentRegistry, get_registry, register_component
from .report import SAMPLED, SYMBOLIC, CheckReport

__all__ = [
    "Workbench",
    "ComponentRegistry",
    "get_registry",
    "register_component",
    "ConfigManager",
    "DEFAULT_CONFIG",
    "EventBus",
    "CheckReport",
    "SYMBOLIC",
    "SAMPLED",
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
]
