"""
Problem and report documents, the packaged examples and the commands that
run one on the other.
"""

from .commands import (
    COMMAND_TABLE,
    cmd_check,
    cmd_example,
    cmd_para_check,
    cmd_reduce,
    cmd_relate,
    cmd_tdualize,
    run_document,
)
from .documents import COMMANDS, ProblemDocument, ReportDocument, load_document
from .examples import EXAMPLES, circle, example_document, heisenberg, heisenberg_frame, lens

__all__ = [
    "COMMANDS",
    "COMMAND_TABLE",
    "EXAMPLES",
    "ProblemDocument",
    "ReportDocument",
    "circle",
    "cmd_check",
    "cmd_example",
    "cmd_para_check",
    "cmd_reduce",
    "cmd_relate",
    "cmd_tdualize",
    "example_document",
    "heisenberg",
    "heisenberg_frame",
    "lens",
    "load_document",
    "run_document",
]
