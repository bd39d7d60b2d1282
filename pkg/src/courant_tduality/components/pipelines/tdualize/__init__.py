"""T-duality pipeline component."""

from .component import TDualizeComponent

__all__ = ["TDualizeComponent"]
