"""
Document-level commands behind the command line.

Each command takes a ProblemDocument, runs the registered components on a
Workbench and returns a ReportDocument. Sampling settings follow the
precedence defaults < config folder < document sample_plan < flags.
"""

from typing import Any, Callable, Dict, Mapping, Optional
import logging
import time

from .. import components  # noqa: F401  (registers the components)
from ..core.base import Workbench
from ..core.exceptions import ParseError, ValidationError
from ..core.report import CheckReport
from ..exterior.sampling import SamplePlan
from ..utils.validators import validate_range
from .documents import COMMANDS, ProblemDocument, ReportDocument
from .examples import example_document

logger = logging.getLogger(__name__)


def _plan(
    doc: ProblemDocument, dim: int, bench: Workbench, flags: Optional[Mapping[str, Any]]
) -> SamplePlan:
    plan = doc.sample_plan(dim, bench.config)
    flags = {k: v for k, v in (flags or {}).items() if v is not None}
    if not flags:
        return plan
    seed = flags.get("seed", plan.seed)
    samples = validate_range(flags.get("samples", len(plan.points)), min_value=20, field="samples")
    box = flags.get("box", plan.box)
    return SamplePlan.generate(dim, samples=samples, seed=seed, box=box)


def _finish(report: ReportDocument, bench: Workbench, timings: Dict[str, float]) -> ReportDocument:
    if bench.config.get("report.include_timings", False):
        report.timings = dict(timings)
    status = "passed" if report.passed else "failed"
    logger.info(f"{report.command} {report.problem}: {status}")
    return report


def cmd_check(
    doc: ProblemDocument,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """
    Courant axioms, reducibility of K₁ and K₂ and D₁-invariance.

    The subbundle and invariance suites run when the document declares the
    data they need. An H that is not closed is reported as a failing
    verdict rather than raised.

    Raises:
        ParseError: For a malformed document.
    """
    bench = bench or Workbench()
    timings: Dict[str, float] = {}
    chart = doc.chart()
    plan = _plan(doc, chart.dim, bench, flags)
    report = ReportDocument("check", doc.name).with_plan(plan)
    try:
        E = doc.courant(chart)
    except ParseError as e:
        if e.field != "H":
            raise
        report.checks.append(CheckReport.from_residuals("courant.construction", {"H": e.message}))
        return _finish(report, bench, timings)

    start = time.perf_counter()
    report.checks.append(
        bench.execute_component("checks", "courant_axioms", courant=E, seed=plan.seed)
    )
    timings["courant_axioms"] = round(time.perf_counter() - start, 3)
    if "subbundles" not in doc.data:
        return _finish(report, bench, timings)

    frame = doc.frame(chart)
    for key in ("K1", "K2"):
        start = time.perf_counter()
        K = doc.subbundle(frame, key)
        report.checks.append(
            bench.execute_component("checks", "reducibility", courant=E, subbundle=K)
        )
        timings[f"reducible_{key}"] = round(time.perf_counter() - start, 3)
    if "metric" in doc.data and doc.data.get("iso"):
        start = time.perf_counter()
        problem = doc.problem()
        report.checks.append(
            bench.execute_component("checks", "invariance", problem=problem, plan=plan)
        )
        timings["invariance"] = round(time.perf_counter() - start, 3)
    return _finish(report, bench, timings)


def cmd_reduce(
    doc: ProblemDocument,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """
    Reduce by each declared subbundle; results carry the quotient chart and H̄.

    A subbundle that is not reducible contributes its failing verdict and no
    reduced algebroid.
    """
    bench = bench or Workbench()
    timings: Dict[str, float] = {}
    chart = doc.chart()
    report = ReportDocument("reduce", doc.name).with_plan(_plan(doc, chart.dim, bench, flags))
    E = doc.courant(chart)
    frame = doc.frame(chart)
    block = doc.data.get("subbundles") or {}
    if not block:
        raise ParseError("at least one subbundle is required", field="subbundles")
    for key in sorted(block):
        start = time.perf_counter()
        K = doc.subbundle(frame, key)
        verdict = bench.execute_component("checks", "reducibility", courant=E, subbundle=K)
        report.checks.append(verdict)
        if verdict.passed:
            reduced = bench.execute_component("pipelines", "reduce", courant=E, subbundle=K)
            report.results[f"reduced_{key}"] = reduced.to_dict()
        timings[f"reduce_{key}"] = round(time.perf_counter() - start, 3)
    return _finish(report, bench, timings)


def cmd_relate(
    doc: ProblemDocument,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """The relation R: its generators, rank and Dirac structure verdicts."""
    bench = bench or Workbench()
    problem = doc.problem()
    plan = _plan(doc, problem.chart.dim, bench, flags)
    report = ReportDocument("relate", doc.name).with_plan(plan)
    start = time.perf_counter()
    relation = bench.execute_component("pipelines", "relate", problem=problem, plan=plan)
    report.checks.append(relation.report)
    report.results["relation"] = relation.to_dict()
    return _finish(report, bench, {"relate": round(time.perf_counter() - start, 3)})


def cmd_tdualize(
    doc: ProblemDocument,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """
    The full T-duality pipeline; results hold the dual background when every
    condition holds.

    Example:
        >>> report = cmd_tdualize(example_document("circle", {"r2": "4"}))
        >>> report.results["dual_background"]["g"]
        [['1/4']]
    """
    bench = bench or Workbench()
    problem = doc.problem()
    chart = problem.chart
    plan = _plan(doc, chart.dim, bench, flags)
    outcome = bench.execute_component(
        "pipelines",
        "tdualize",
        problem=problem,
        plan=plan,
        sections=doc.sections(problem.K1.quotient_chart),
        tdualize={"report": {"include_timings": True}},
    )
    data = outcome.to_dict()
    results = data["results"]
    timings = results.pop("timings", {})
    report = ReportDocument("tdualize", doc.name, outcome.checks, results).with_plan(plan)
    return _finish(report, bench, timings)


def cmd_para_check(
    doc: ProblemDocument,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """
    Fluxes, admissibility of the duality directions and the para-Buscher dual.

    The sample plan (document, config and --seed/--samples/--box) drives the
    positivity check of g₊ when g₊ is not constant.
    """
    bench = bench or Workbench()
    frame, duality, phi, metric = doc.para()
    plan = _plan(doc, frame.chart.dim, bench, flags)
    start = time.perf_counter()
    check, results = bench.execute_component(
        "checks",
        "para_conditions",
        frame=frame,
        duality=duality,
        phi=phi,
        metric=metric,
        plan=plan,
    )
    report = ReportDocument("para-check", doc.name, [check], results).with_plan(plan)
    return _finish(report, bench, {"para_conditions": round(time.perf_counter() - start, 3)})


def cmd_example(name: str, params: Optional[Mapping[str, str]] = None) -> ProblemDocument:
    """
    A packaged example document: lens, heisenberg or circle.

    Raises:
        ValidationError: For an unknown example or parameter.
    """
    return example_document(name, params or {})


COMMAND_TABLE: Dict[str, Callable[..., ReportDocument]] = {
    "check": cmd_check,
    "reduce": cmd_reduce,
    "relate": cmd_relate,
    "tdualize": cmd_tdualize,
    "para-check": cmd_para_check,
}


def run_document(
    doc: ProblemDocument,
    command: Optional[str] = None,
    bench: Optional[Workbench] = None,
    flags: Optional[Mapping[str, Any]] = None,
) -> ReportDocument:
    """
    Run a command on a document; the command defaults to the document's own.

    Raises:
        ValidationError: If neither names a command.
    """
    command = command or doc.command
    if command is None:
        raise ValidationError(f"command: document '{doc.name}' names no command")
    if command not in COMMANDS:
        raise ValidationError(f"command: {command!r} not in allowed choices: {list(COMMANDS)}")
    logger.info(f"Running {command} on {doc.name}")
    return COMMAND_TABLE[command](doc, bench, flags)
