"""Invariance check component."""

from .component import InvarianceComponent

__all__ = ["InvarianceComponent"]
