"""
Command-line interface: document commands (check, reduce, relate,
tdualize, para-check), packaged examples and component listing.
"""

from .commands import cli

__all__ = ["cli"]
