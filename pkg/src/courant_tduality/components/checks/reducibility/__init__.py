"""Reducibility check component."""

from .component import ReducibilityComponent

__all__ = ["ReducibilityComponent"]
