"""
Problem and report documents.

A problem document is one JSON object describing a chart, a frame, the
flux H, the foliations K₁ and K₂, the B-field, the metric on Q₁ and the
para-Hermitian data. Polynomials are strings in the toolkit's grammar so
that everything stays exact. Every parse error names the offending field,
e.g. ``subbundles.K1.span[2]``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple
import json
import logging

from ..core.config import ConfigManager
from ..core.exceptions import ParseError, ValidationError, WorkbenchError
from ..core.report import CheckReport
from ..courant.algebroid import TwistedCourant
from ..courant.sections import GeneralizedSection
from ..exterior.chart import Chart
from ..exterior.diffeo import DiffeoMap
from ..exterior.fields import VectorField
from ..exterior.forms import DifferentialForm
from ..exterior.frames import Frame
from ..exterior.matrix import PolyMatrix
from ..exterior.parser import parse_polynomial
from ..exterior.sampling import SamplePlan
from ..genmetric.metric import GeneralisedMetric
from ..para_hermitian.metric import GenParaMetric
from ..para_hermitian.structure import ParaHermitianFrame
from ..reduction.subbundle import FoliationSubbundle
from ..tduality.problem import TDualityProblem
from ..utils.validators import (
    validate_choice,
    validate_identifier,
    validate_range,
    validate_unique,
)

logger = logging.getLogger(__name__)

COMMANDS = ("check", "reduce", "relate", "tdualize", "para-check")


def _require(data: Mapping[str, Any], key: str, path: str) -> Any:
    if key not in data:
        raise ParseError("missing required field", field=f"{path}.{key}" if path else key)
    return data[key]


def _list(value: Any, path: str, length: Optional[int] = None) -> List[Any]:
    if not isinstance(value, list):
        raise ParseError(f"expected a list, got {type(value).__name__}", field=path)
    if length is not None and len(value) != length:
        raise ParseError(f"expected {length} entries, got {len(value)}", field=path)
    return value


def _mapping(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise ParseError(f"expected an object, got {type(value).__name__}", field=path)
    return value


def _tagged(error: WorkbenchError, path: str) -> ParseError:
    if isinstance(error, ParseError) and error.field:
        return error
    return ParseError(str(error), field=path)


def parse_matrix(value: Any, chart: Chart, path: str, size: Optional[int] = None) -> PolyMatrix:
    rows = _list(value, path, size)
    width = size if size is not None else len(rows)
    return PolyMatrix.from_rows(
        chart,
        [
            [
                parse_polynomial(entry, chart, f"{path}[{i}][{j}]")
                for j, entry in enumerate(_list(row, f"{path}[{i}]", width))
            ]
            for i, row in enumerate(rows)
        ],
    )


def parse_vector(value: Any, chart: Chart, path: str) -> Tuple[Any, ...]:
    entries = _list(value, path, chart.dim)
    return tuple(parse_polynomial(e, chart, f"{path}[{i}]") for i, e in enumerate(entries))


def parse_form(value: Any, chart: Chart, path: str, degree: int) -> DifferentialForm:
    """
    A form given as [[coordinate names], polynomial] terms.

    Raises:
        ParseError: On unknown coordinates or a term of another degree.
    """
    if value is None:
        return DifferentialForm.zero(chart, degree)
    terms = []
    for t, term in enumerate(_list(value, path)):
        here = f"{path}[{t}]"
        coords, coeff = _list(term, here, 2)
        names = _list(coords, f"{here}[0]", degree)
        try:
            indices = [chart.index(name) for name in names]
        except WorkbenchError as e:
            raise _tagged(e, f"{here}[0]")
        terms.append((indices, parse_polynomial(coeff, chart, f"{here}[1]")))
    return DifferentialForm.from_terms(chart, degree, terms)


@dataclass
class ProblemDocument:
    """
    A problem document and the objects it describes.

    Attributes:
        data: The parsed JSON object.
    """

    data: Dict[str, Any]

    def __post_init__(self) -> None:
        _mapping(self.data, "document")
        validate_identifier(_require(self.data, "name", ""), "name")
        if self.data.get("command") is not None:
            validate_choice(self.data["command"], COMMANDS, "command")

    @classmethod
    def from_json(cls, text: str) -> "ProblemDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", position=e.pos, field="document")
        if not isinstance(data, dict):
            raise ParseError("a problem document must be a JSON object", field="document")
        return cls(data)

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True)

    @property
    def name(self) -> str:
        return self.data["name"]

    @property
    def command(self) -> Optional[str]:
        return self.data.get("command")

    @property
    def parameters(self) -> Dict[str, str]:
        return dict(self.data.get("parameters") or {})

    def chart(self) -> Chart:
        names = _list(_require(self.data, "chart", ""), "chart")
        for i, name in enumerate(names):
            validate_identifier(name, f"chart[{i}]")
        validate_unique(names, "chart")
        return Chart(tuple(names))

    def frame(self, chart: Optional[Chart] = None) -> Frame:
        """The frame, or the coordinate frame when the document has none."""
        chart = chart or self.chart()
        entry = self.data.get("frame")
        if entry is None:
            return Frame.coordinate(chart)
        entry = _mapping(entry, "frame")
        matrix = parse_matrix(_require(entry, "fields", "frame"), chart, "frame.fields", chart.dim)
        labels = entry.get("labels")
        if labels is not None:
            labels = _list(labels, "frame.labels", chart.dim)
        try:
            return Frame(chart, matrix, labels, entry.get("name", ""))
        except WorkbenchError as e:
            raise _tagged(e, "frame")

    def flux(self, chart: Chart) -> DifferentialForm:
        return parse_form(self.data.get("H"), chart, "H", 3)

    def bfield(self, chart: Chart) -> DifferentialForm:
        return parse_form(self.data.get("B"), chart, "B", 2)

    def courant(self, chart: Optional[Chart] = None) -> TwistedCourant:
        chart = chart or self.chart()
        try:
            return TwistedCourant(chart, self.flux(chart))
        except ValidationError as e:
            raise _tagged(e, "H")

    def subbundle(self, frame: Frame, key: str) -> FoliationSubbundle:
        """
        K1 or K2 from the subbundles block; shift_B applies −B to the fibre.

        Raises:
            ParseError: Naming subbundles.<key> and the failing entry.
        """
        path = f"subbundles.{key}"
        block = _mapping(_require(self.data, "subbundles", ""), "subbundles")
        entry = _mapping(_require(block, key, "subbundles"), path)
        span = _list(_require(entry, "span", path), f"{path}.span")
        for i, label in enumerate(span):
            if label not in frame.labels and not (
                isinstance(label, int) and 0 <= label < frame.dim
            ):
                raise ParseError(f"unknown frame field '{label}'", field=f"{path}.span[{i}]")
        fiber = _list(_require(entry, "fiber_coords", path), f"{path}.fiber_coords")
        for i, name in enumerate(fiber):
            if name not in frame.chart.coords:
                raise ParseError(f"unknown coordinate '{name}'", field=f"{path}.fiber_coords[{i}]")
        shift = self.bfield(frame.chart) if entry.get("shift_B") else None
        names = entry.get("quotient_names")
        try:
            return FoliationSubbundle(frame, span, fiber, shift, names, name=key)
        except WorkbenchError as e:
            raise _tagged(e, path)

    def metric(self, K1: FoliationSubbundle) -> GeneralisedMetric:
        """The metric on Q₁, in coordinates or in K₁'s quotient frame."""
        entry = _mapping(_require(self.data, "metric", ""), "metric")
        chart = K1.quotient_chart
        g = parse_matrix(_require(entry, "g", "metric"), chart, "metric.g", chart.dim)
        b = parse_matrix(entry["b"], chart, "metric.b", chart.dim) if "b" in entry else None
        kind = validate_choice(
            entry.get("frame", "coordinate"), ("induced", "coordinate"), "metric.frame"
        )
        try:
            frame = K1.quotient_frame() if kind == "induced" else None
            return GeneralisedMetric(g, b, frame=frame)
        except WorkbenchError as e:
            raise _tagged(e, "metric")

    def iso(self, chart: Chart) -> List[VectorField]:
        return [
            VectorField(chart, parse_vector(v, chart, f"iso[{a}]"))
            for a, v in enumerate(_list(self.data.get("iso") or [], "iso"))
        ]

    def sections(self, chart: Chart) -> List[GeneralizedSection]:
        out = []
        for k, entry in enumerate(_list(self.data.get("sections") or [], "sections")):
            path = f"sections[{k}]"
            entry = _mapping(entry, path)
            vec = parse_vector(_require(entry, "vec", path), chart, f"{path}.vec")
            form = parse_vector(_require(entry, "form", path), chart, f"{path}.form")
            out.append(GeneralizedSection.from_components(chart, vec, form))
        return out

    def problem(self) -> TDualityProblem:
        """
        The T-duality problem on the document's chart.

        Raises:
            ParseError: For malformed or inconsistent fields.
            TDualityError: If the pieces do not form a problem.
        """
        chart = self.chart()
        frame = self.frame(chart)
        E = self.courant(chart)
        K1 = self.subbundle(frame, "K1")
        K2 = self.subbundle(frame, "K2")
        G1 = self.metric(K1)
        iso = self.iso(K1.quotient_chart)
        return TDualityProblem(E, K1, K2, G1, iso, name=self.name)

    def phi(self, chart: Chart) -> Optional[DiffeoMap]:
        entry = self.data.get("phi")
        if entry is None:
            return None
        entry = _mapping(entry, "phi")
        names = _list(_require(entry, "target", "phi"), "phi.target", chart.dim)
        validate_unique(names, "phi.target")
        target = Chart(tuple(names))
        forward = parse_vector(_require(entry, "forward", "phi"), chart, "phi.forward")
        inverse = parse_vector(_require(entry, "inverse", "phi"), target, "phi.inverse")
        try:
            return DiffeoMap(chart, target, forward, inverse)
        except WorkbenchError as e:
            raise _tagged(e, "phi")

    def para(
        self,
    ) -> Tuple[ParaHermitianFrame, List[Any], Optional[DiffeoMap], Optional[GenParaMetric]]:
        """
        (frame, duality directions, φ, generalised para-Hermitian metric).

        Raises:
            ParseError: If the para block is missing or malformed.
        """
        chart = self.chart()
        try:
            F = ParaHermitianFrame(self.frame(chart))
        except WorkbenchError as e:
            raise _tagged(e, "frame")
        entry = _mapping(_require(self.data, "para", ""), "para")
        duality = _list(entry.get("duality", []), "para.duality")
        try:
            F.resolve_duality(duality)
        except WorkbenchError as e:
            raise _tagged(e, "para.duality")
        G = None
        if entry.get("metric") is not None:
            block = _mapping(entry["metric"], "para.metric")
            g = parse_matrix(_require(block, "g", "para.metric"), chart, "para.metric.g", F.n)
            b = parse_matrix(block["b"], chart, "para.metric.b", F.n) if "b" in block else None
            try:
                G = GenParaMetric(g, b)
            except WorkbenchError as e:
                raise _tagged(e, "para.metric")
        return F, duality, self.phi(chart), G

    def sample_plan(self, dim: int, config: Optional[ConfigManager] = None) -> SamplePlan:
        """
        Sample points for a chart of the given dimension.

        The document's sample_plan block overrides the configuration.
        """
        config = config or ConfigManager.defaults()
        entry = _mapping(self.data.get("sample_plan") or {}, "sample_plan")
        seed = entry.get("seed", config.get("sampling.seed"))
        samples = entry.get("samples", config.get("sampling.samples"))
        box = entry.get("box", config.get("sampling.box"))
        if not isinstance(seed, int) or not isinstance(samples, int):
            raise ParseError("seed and samples must be integers", field="sample_plan")
        validate_range(samples, min_value=20, field="sample_plan.samples")
        _list(box, "sample_plan.box", 2)
        try:
            return SamplePlan.generate(dim, samples=samples, seed=seed, box=box)
        except WorkbenchError as e:
            raise _tagged(e, "sample_plan")


@dataclass
class ReportDocument:
    """
    The machine-readable outcome of one command.

    Keys are sorted on output so that a fixed seed gives identical bytes.
    """

    command: str
    problem: str
    checks: List[CheckReport] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    samples: Optional[int] = None
    box: Optional[List[str]] = None
    timings: Optional[Dict[str, float]] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def with_plan(self, plan: SamplePlan) -> "ReportDocument":
        info = plan.describe()
        self.seed, self.samples, self.box = info["seed"], info["samples"], info["box"]
        return self

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "command": self.command,
            "problem": self.problem,
            "passed": self.passed,
            "seed": self.seed,
            "samples": self.samples,
            "box": self.box,
            "checks": [c.to_dict() for c in self.checks],
            "results": self.results,
        }
        if self.timings is not None:
            data["timings"] = self.timings
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "ReportDocument":
        try:
            return cls(
                command=data["command"],
                problem=data["problem"],
                checks=[CheckReport.from_dict(c) for c in data.get("checks", [])],
                results=dict(data.get("results", {})),
                seed=data.get("seed"),
                samples=data.get("samples"),
                box=data.get("box"),
                timings=data.get("timings"),
            )
        except KeyError as e:
            raise ParseError("missing required field", field=f"report.{e.args[0]}")

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", position=e.pos, field="report")

    def to_text(self) -> str:
        """Human-readable rendering used by --format text."""
        status = "PASSED" if self.passed else "FAILED"
        lines = [f"{self.command} {self.problem}: {status}"]
        if self.seed is not None:
            lines.append(f"  seed {self.seed}, {self.samples} samples in box {self.box}")
        for check in self.checks:
            lines.extend(_render(check, 1))
        for key in sorted(self.results):
            rendered = json.dumps(self.results[key], sort_keys=True, ensure_ascii=False)
            lines.append(f"  {key}: {rendered}")
        if self.timings:
            spent = ", ".join(f"{k}={v}s" for k, v in sorted(self.timings.items()))
            lines.append(f"  timings: {spent}")
        return "\n".join(lines)


def _render(report: CheckReport, depth: int) -> List[str]:
    pad = "  " * depth
    mark = "✓" if report.passed else "✗"
    lines = [f"{pad}{mark} {report.name} [{report.certificate}]"]
    for label, value in sorted(report.residuals.items()):
        lines.append(f"{pad}    {label}: {value}")
    for kid in report.children:
        lines.extend(_render(kid, depth + 1))
    return lines


def load_document(text: str) -> ProblemDocument:
    doc = ProblemDocument.from_json(text)
    logger.debug(f"Loaded document '{doc.name}'")
    return doc

