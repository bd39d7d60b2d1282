"""Courant axiom suite component."""

from .component import CourantAxiomsComponent

__all__ = ["CourantAxiomsComponent"]
