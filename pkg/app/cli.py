"""Command-line runner: every library pipeline as a reproducible, machine-readable report.

Exit codes: 0 success, 1 verification failure or library error,
2 configuration error, 3 dense operator or diagram basis above its cap.
"""
import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ValidationError

from app.core.errors import BrauerError, ConfigError, VerificationError
from app.core.logging import configure_logging
from app.models.operators import StateVector
from app.models.run import TENSOR_COMMANDS, Command, OutputFormat
from app.models.sampling import EnsembleKind, EnsembleSpec
from app.schemas.brauer import GramMatrixRead, PairingsRead, WeingartenRead
from app.schemas.designs import (
    ApproximateOrderRead,
    DesignConstraintSetRead,
    DistanceBoundsRead,
    MomentReportRead,
    OverlapScanRead,
)
from app.schemas.run import ReportEnvelope, RunConfig
from app.schemas.sampling import CheckRead, EmpiricalMomentRead, ExperimentResultRead, VerificationRead
from app.services import brauer_linalg, designs, pairings, sampling, tensor_rep
from app.services.verification import run_acceptance

logger = logging.getLogger(__name__)


# -----------------------------------------------------------
# Argument parsing
# -----------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-designs",
        description="Weingarten calculus for O(d) and U(d): Brauer diagrams, moment operators and design checks",
    )
    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--t", type=int, help="number of tensor copies")
    parser.add_argument("--d", type=int, help="local dimension")
    parser.add_argument("--n-samples", type=int, dest="n_samples", help="Monte Carlo draws")
    parser.add_argument("--seed", type=int, help="RNG seed (default: BRAUER_SEED)")
    parser.add_argument("--workers", type=int, help="sampling worker threads (default: all cores)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], help="report encoding")
    parser.add_argument("--output", help="write the report here instead of standard output")
    parser.add_argument("--cap", type=int, help="max d**t for dense operators (default: BRAUER_CAP)")
    parser.add_argument("--basis-cap", type=int, dest="basis_cap", help="max (2t-1)!! for Gram and Weingarten work (default: BRAUER_BASIS_CAP)")
    parser.add_argument("--ensemble", choices=[k.value for k in EnsembleKind], help="ensemble for sample-moment")
    parser.add_argument("--overlap", type=float, help="conjugate overlap r of the two-amplitude seed state")
    parser.add_argument("--real", action="store_true", help="use |0> as the seed state")
    parser.add_argument("--eps", type=float, help="target 1-norm accuracy for approximate-order")
    parser.add_argument("--points", type=int, help="grid points for scan-orbits")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ...")
    return parser


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    given = {k: v for k, v in vars(args).items() if v is not None and v is not False}
    try:
        return RunConfig(**given)
    except ValidationError as e:
        raise ConfigError(str(e)) from e


# -----------------------------------------------------------
# Pipelines
# -----------------------------------------------------------
def _seed_state(config: RunConfig, real_by_default: bool) -> StateVector:
    if config.real:
        return StateVector.basis(config.d)
    if config.overlap is not None:
        return designs.design_state_from_overlap(config.d, config.overlap)
    if real_by_default:
        return StateVector.basis(config.d)
    return designs.construct_design_state(config.d)


def _sample_moment(config: RunConfig) -> Tuple[BaseModel, int]:
    seed_state = None
    if config.ensemble is EnsembleKind.ORTHOGONAL_ORBIT:
        seed_state = _seed_state(config, real_by_default=True)
    spec = EnsembleSpec(kind=config.ensemble, d=config.d, t=config.t, seed_state=seed_state)
    workers = sampling.resolve_workers(config.workers)
    moment = sampling.empirical_moment(spec, config.n_samples, seed=config.seed, workers=workers, cap=config.cap)
    sym = tensor_rep.rho_sym(config.d, config.t, config.cap)
    br = tensor_rep.rho_br(config.d, config.t, config.cap)
    report = EmpiricalMomentRead(
        t=config.t,
        d=config.d,
        ensemble=config.ensemble,
        n_samples=config.n_samples,
        trace=moment.trace().real,
        max_deviation_rho_sym=float(abs(moment.entries - sym.entries).max()),
        max_deviation_rho_br=float(abs(moment.entries - br.entries).max()),
        trace_distance_rho_sym=tensor_rep.trace_distance(moment, sym),
        trace_distance_rho_br=tensor_rep.trace_distance(moment, br),
    )
    return report, workers


def _approximate_order(config: RunConfig) -> BaseModel:
    t_max = designs.approximate_design_order(config.d, config.eps)
    return ApproximateOrderRead(
        d=config.d,
        eps=config.eps,
        t_max=t_max,
        one_norm_at_t_max=2 * tensor_rep.harmonic_distance(config.d, t_max),
    )


def _verify_all(config: RunConfig) -> Tuple[BaseModel, int]:
    workers = sampling.resolve_workers(config.workers)
    report = run_acceptance(seed=config.seed, workers=workers)
    for failure in report.failures:
        logger.error("verification failed: %s %s", failure.name, failure.detail)
    return (
        VerificationRead(
            passed=report.passed,
            n_checks=len(report.checks),
            n_failed=len(report.failures),
            elapsed=report.elapsed,
            checks=[CheckRead.model_validate(c) for c in report.checks],
        ),
        workers,
    )


def execute(config: RunConfig) -> Tuple[BaseModel, Optional[int]]:
    """Run the pipeline for ``config.command``; returns the report and the worker count used."""
    t, d, cap, basis_cap = config.t, config.d, config.cap, config.basis_cap
    if config.command in TENSOR_COMMANDS:
        tensor_rep.check_cap(d, t, cap)
    command = config.command
    if command is Command.PAIRINGS:
        return PairingsRead.from_basis(t, list(pairings.enumerate_pairings(t))), None
    if command is Command.GRAM:
        return GramMatrixRead.from_domain(brauer_linalg.gram_matrix(t, d, basis_cap)), None
    if command is Command.WEINGARTEN:
        return WeingartenRead.from_domain(brauer_linalg.weingarten_matrix(t, d, basis_cap)), None
    if command is Command.TRACE_DISTANCE:
        return MomentReportRead.from_domain(designs.moment_report(d, t, cap)), None
    if command is Command.DESIGN_CHECK:
        psi = _seed_state(config, real_by_default=False)
        return MomentReportRead.from_domain(designs.exact_design_check(psi, t, cap, basis_cap)), None
    if command is Command.CONSTRAINTS:
        return DesignConstraintSetRead.from_domain(designs.design_constraints(t, d, basis_cap)), None
    if command is Command.IMPOSSIBILITY:
        return DesignConstraintSetRead.from_domain(designs.impossibility_report(t, d, basis_cap)), None
    if command is Command.BOUNDS:
        return DistanceBoundsRead.model_validate(designs.distance_bounds(d, t)), None
    if command is Command.APPROXIMATE_ORDER:
        return _approximate_order(config), None
    if command is Command.SCAN_ORBITS:
        scan = designs.scan_overlap_family(t, d, config.points, cap, basis_cap)
        return OverlapScanRead.from_domain(t, d, scan), None
    if command is Command.SAMPLE_MOMENT:
        return _sample_moment(config)
    if command is Command.HELSTROM:
        result = sampling.helstrom_experiment(t, d, config.n_samples, seed=config.seed, workers=config.workers, cap=cap)
        return ExperimentResultRead.model_validate(result), result.workers
    if command is Command.VERIFY_ALL:
        return _verify_all(config)
    raise ConfigError(f"unknown command {command}")


# -----------------------------------------------------------
# Rendering
# -----------------------------------------------------------
def _flatten(value: Any, prefix: str, rows: List[Tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else key, rows)
    elif isinstance(value, list):
        for i, item in enumerate(value):
            _flatten(item, f"{prefix}.{i}", rows)
    elif isinstance(value, str):
        rows.append((prefix, value))
    else:
        rows.append((prefix, json.dumps(value)))


def render(envelope: ReportEnvelope, fmt: OutputFormat) -> str:
    payload: Dict[str, Any] = envelope.model_dump(mode="json")
    if fmt is OutputFormat.JSON:
        return json.dumps(payload, indent=2) + "\n"
    rows: List[Tuple[str, str]] = []
    _flatten(payload, "", rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("key", "value"))
    writer.writerows(rows)
    return buffer.getvalue()


def run(config: RunConfig) -> int:
    configure_logging(config.log_level)
    try:
        report, workers = execute(config)
    except BrauerError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return e.exit_code
    envelope = ReportEnvelope(
        command=config.command,
        t=config.t,
        d=config.d,
        seed=config.seed,
        workers=workers,
        result=report.model_dump(mode="json"),
    )
    text = render(envelope, config.format)
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text)
    if isinstance(report, VerificationRead) and not report.passed:
        failure = VerificationError(f"{report.n_failed} of {report.n_checks} checks failed")
        logger.error("%s", failure)
        return failure.exit_code
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_config(argv)
    except ConfigError as e:
        configure_logging()
        logger.error("invalid configuration: %s", e)
        return e.exit_code
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
