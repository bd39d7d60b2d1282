"""Relation pipeline component."""

from .component import RelateComponent

__all__ = ["RelateComponent"]
