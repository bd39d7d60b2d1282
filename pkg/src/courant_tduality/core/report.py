"""
Verdict records shared by every check in the toolkit.

A CheckReport is the uniform result of a mathematical check: whether it
passed, how strong the certificate is, and the exact residuals that
witness a failure. Reports nest, so a suite can carry one child per clause.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple
import logging

from typing_extensions import Final, Literal

from .exceptions import ValidationError

logger = logging.getLogger(__name__)

SYMBOLIC: Final = "symbolic"
SAMPLED: Final = "sampled"
CERTIFICATES = (SYMBOLIC, SAMPLED)

Certificate = Literal["symbolic", "sampled"]


@dataclass(frozen=True)
class CheckReport:
    """
    Result of a single check or of a suite of checks.

    Attributes:
        name: Identifier of the check, e.g. "courant.jacobi".
        passed: Whether every condition held.
        certificate: "symbolic" when proven identically, "sampled" when only
            verified at the points of a SamplePlan.
        residuals: Exact non-zero residuals, already rendered as strings.
        details: Free-form JSON-compatible diagnostics.
        children: Per-clause reports of a suite.
    """

    name: str
    passed: bool
    certificate: Certificate = SYMBOLIC
    residuals: Mapping[str, str] = field(default_factory=dict)
    details: Mapping[str, Any] = field(default_factory=dict)
    children: Tuple["CheckReport", ...] = ()

    def __post_init__(self) -> None:
        if self.certificate not in CERTIFICATES:
            raise ValidationError(
                f"Unknown certificate '{self.certificate}', expected one of {CERTIFICATES}"
            )
        object.__setattr__(self, "residuals", dict(self.residuals))
        object.__setattr__(self, "details", dict(self.details))
        object.__setattr__(self, "children", tuple(self.children))

    @classmethod
    def success(
        cls,
        name: str,
        certificate: Certificate = SYMBOLIC,
        details: Optional[Mapping[str, Any]] = None,
    ) -> "CheckReport":
        """Build a passing report."""
        return cls(name=name, passed=True, certificate=certificate, details=details or {})

    @classmethod
    def from_residuals(
        cls,
        name: str,
        residuals: Mapping[str, str],
        certificate: Certificate = SYMBOLIC,
        details: Optional[Mapping[str, Any]] = None,
    ) -> "CheckReport":
        """
        Build a report that passes exactly when no residual was recorded.

        Args:
            name: Check identifier.
            residuals: Label to rendered non-zero residual.
            certificate: Certificate kind.
            details: Extra diagnostics.

        Returns:
            The report.

        Example:
            >>> CheckReport.from_residuals("demo", {}).passed
            True
        """
        report = cls(
            name=name,
            passed=not residuals,
            certificate=certificate,
            residuals=residuals,
            details=details or {},
        )
        if not report.passed:
            logger.warning(f"Check failed: {name} ({len(residuals)} residual(s))")
        return report

    @classmethod
    def suite(
        cls,
        name: str,
        children: Iterable["CheckReport"],
        details: Optional[Mapping[str, Any]] = None,
    ) -> "CheckReport":
        """
        Aggregate child reports. The suite passes iff every child passes and its
        certificate is "sampled" as soon as one child is.
        """
        kids = tuple(children)
        certificate = SAMPLED if any(c.certificate == SAMPLED for c in kids) else SYMBOLIC
        return cls(
            name=name,
            passed=all(c.passed for c in kids),
            certificate=certificate,
            details=details or {},
            children=kids,
        )

    def child(self, name: str) -> "CheckReport":
        """Look up a direct child by name."""
        for kid in self.children:
            if kid.name == name:
                return kid
        raise KeyError(name)

    def failures(self) -> List["CheckReport"]:
        """All failing leaf reports, depth first."""
        if not self.children:
            return [] if self.passed else [self]
        found: List[CheckReport] = []
        for kid in self.children:
            found.extend(kid.failures())
        return found

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "passed": self.passed,
            "certificate": self.certificate,
            "residuals": dict(self.residuals),
            "details": dict(self.details),
        }
        if self.children:
            data["children"] = [kid.to_dict() for kid in self.children]
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CheckReport":
        try:
            return cls(
                name=data["name"],
                passed=bool(data["passed"]),
                certificate=data.get("certificate", SYMBOLIC),
                residuals=data.get("residuals", {}),
                details=data.get("details", {}),
                children=tuple(cls.from_dict(kid) for kid in data.get("children", [])),
            )
        except KeyError as e:
            raise ValidationError(f"Check report is missing field {e}")
