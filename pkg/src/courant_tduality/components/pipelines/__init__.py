"""
Pipeline components: reduction, the T-duality relation and the full
T-duality run.
"""

from .reduce import ReduceComponent
from .relate import RelateComponent
from .tdualize import TDualizeComponent

__all__ = ["ReduceComponent", "RelateComponent", "TDualizeComponent"]
