"""
Registered components.

Importing this package registers every check and pipeline with the global
registry:

- checks: courant_axioms, reducibility, invariance, para_conditions
- pipelines: reduce, relate, tdualize
"""

from .checks import (
    CourantAxiomsComponent,
    InvarianceComponent,
    ParaConditionsComponent,
    ReducibilityComponent,
)
from .pipelines import ReduceComponent, RelateComponent, TDualizeComponent
from .stage import StageComponent

__all__ = [
    "CourantAxiomsComponent",
    "InvarianceComponent",
    "ParaConditionsComponent",
    "ReduceComponent",
    "ReducibilityComponent",
    "RelateComponent",
    "StageComponent",
    "TDualizeComponent",
]
