"""
Check components: each returns a CheckReport (para_conditions also returns
its results dict).
"""

from .courant_axioms import CourantAxiomsComponent
from .invariance import InvarianceComponent
from .para_conditions import ParaConditionsComponent
from .reducibility import ReducibilityComponent

__all__ = [
    "CourantAxiomsComponent",
    "InvarianceComponent",
    "ParaConditionsComponent",
    "ReducibilityComponent",
]
