"""
Interface definitions for registered components.
"""

from .component import BaseComponent

__all__ = ["BaseComponent"]
