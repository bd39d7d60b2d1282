"""
Custom exceptions for courant-tduality.

Every error raised by the toolkit derives from WorkbenchError so that the
command line and embedding code can catch a single type. Failed mathematical
conditions are not exceptions: check operations report them in a
CheckReport instead.
"""

from typing import Optional


class WorkbenchError(Exception):
    """Base exception for all courant-tduality errors."""

    pass


class ChartError(WorkbenchError):
    """Raised when objects living on different coordinate charts are combined."""

    pass


class ParseError(WorkbenchError):
    """
    Raised when a polynomial string or a document field cannot be parsed.

    Attributes:
        position: Character offset of the failure inside the parsed text, if known.
        field: Dotted path of the document field being parsed, if known.
    """

    def __init__(
        self, message: str, position: Optional[int] = None, field: Optional[str] = None
    ) -> None:
        self.message = message
        self.position = position
        self.field = field
        super().__init__(self._render())

    def _render(self) -> str:
        text = self.message
        if self.position is not None:
            text = f"{text} (at position {self.position})"
        if self.field:
            text = f"{self.field}: {text}"
        return text

    def at_field(self, field: str) -> "ParseError":
        """Return a copy of this error tagged with a document field path."""
        return ParseError(self.message, position=self.position, field=field)


class FrameError(WorkbenchError):
    """Raised when a frame or diffeomorphism violates its construction invariants."""

    pass


class ValidationError(WorkbenchError):
    """Raised when input data fails validation."""

    pass


class ReductionError(WorkbenchError):
    """Raised when a foliation subbundle cannot be used for reduction."""

    pass


class RelationError(WorkbenchError):
    """Raised when a fiber relation cannot be built or composed."""

    pass


class TDualityError(WorkbenchError):
    """Raised when a T-duality problem is inconsistent or a pipeline stage cannot run."""

    pass


class ConfigError(WorkbenchError):
    """Raised when there's a configuration-related error."""

    pass


class RegistryError(WorkbenchError):
    """Raised when a component cannot be registered or looked up."""

    pass


class ComponentError(WorkbenchError):
    """Raised when a registered component fails to initialize or execute."""

    pass


class EventError(WorkbenchError):
    """Raised when there's an error with event bus operations."""

    pass
