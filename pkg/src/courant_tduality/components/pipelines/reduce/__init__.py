"""Reduction pipeline component."""

from .component import ReduceComponent

__all__ = ["ReduceComponent"]
