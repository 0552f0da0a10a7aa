"""Acceptance grid run by ``brauer-designs verify-all``.

Every check records a name, a pass flag and a short detail string; the
runner never stops at the first failure.
"""
import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

import numpy as np

from app.models.operators import StateVector
from app.models.sampling import EnsembleKind, EnsembleSpec
from app.services import brauer_linalg, designs, pairings, sampling, tensor_rep

logger = logging.getLogger(__name__)

EXACT_TOL = 1e-10
DISTANCE_TOL = 1e-9
MOMENT_TOL = 5e-3


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str, condition: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name=name, passed=bool(condition), detail=detail))
        logger.info("%s %s %s", "✓" if condition else "✗", name, detail)


def _matching_counts(report: VerificationReport) -> None:
    for t, expected in zip(range(1, 7), (1, 3, 15, 105, 945, 10395)):
        count = len(pairings.enumerate_pairings(t))
        report.check(f"matching count t={t}", count == expected, f"{count}")


def _gram_oracle(report: VerificationReport) -> None:
    for t in (1, 2, 3):
        basis = pairings.enumerate_pairings(t)
        for d in (2, 3):
            gram = brauer_linalg.gram_matrix(t, d).entries
            reps = [tensor_rep.rep_pairing(m, d).entries for m in basis]
            mismatches = sum(
                1
                for i, a in enumerate(reps)
                for j, b in enumerate(reps)
                if int(np.sum(a * b)) != gram[i, j]
            )
            report.check(f"gram oracle t={t} d={d}", mismatches == 0, f"{mismatches} mismatches")


def _diagram_traces(report: VerificationReport) -> None:
    for t in range(1, 5):
        for d in range(1, 6):
            total = sum(int(np.trace(tensor_rep.rep_pairing(m, d).entries)) for m in pairings.enumerate_pairings(t))
            report.check(f"sum of diagram traces t={t} d={d}", total == brauer_linalg.z_factor(d, t), f"{total}")


def _all_ones(report: VerificationReport) -> None:
    for t in range(1, 5):
        for d in range(1, 7):
            sums = brauer_linalg.gram_matrix(t, d).row_sums()
            z = brauer_linalg.z_factor(d, t)
            report.check(f"gram row sums t={t} d={d}", all(s == z for s in sums), f"Z={z}")
    for t in range(1, 4):
        for d in range(1, 5):
            twirled = designs.orbit_moment(StateVector.basis(d), t).entries
            expected = tensor_rep.rho_br(d, t).entries
            err = float(np.max(np.abs(twirled - expected)))
            report.check(f"twirl of |0> equals rho_br t={t} d={d}", err <= EXACT_TOL, f"max err {err:.2e}")


def _trace_distances(report: VerificationReport) -> None:
    for t in (2, 3, 4):
        for d in range(2, 7):
            if d ** t > 4096:
                continue
            br, sym = tensor_rep.rho_br(d, t), tensor_rep.rho_sym(d, t)
            numeric = tensor_rep.trace_distance(br, sym)
            exact = tensor_rep.harmonic_distance(d, t)
            bound = tensor_rep.closed_form_distance(d, t)
            err = abs(numeric - float(exact))
            report.check(f"trace distance t={t} d={d}", err <= DISTANCE_TOL, f"{numeric:.12f} vs {exact}")
            report.check(f"1 - P/Z bound t={t} d={d}", numeric <= float(bound) + DISTANCE_TOL, f"{numeric:.6f} <= {bound}")
            positive, negative = tensor_rep.spectral_split(br, sym)
            report.check(f"traceless difference t={t} d={d}", abs(positive - negative) <= EXACT_TOL, f"{positive:.12f} vs {negative:.12f}")
    for d in range(1, 11):
        exact = tensor_rep.harmonic_distance(d, 2)
        report.check(f"t=2 distance d={d}", exact == Fraction(d - 1, d * (d + 1)), f"{exact}")
    for t in (2, 3):
        ratios = [tensor_rep.harmonic_distance(d, t) / tensor_rep.closed_form_distance(d, t) for d in (4, 16, 64, 256, 1024)]
        increasing = all(a < b for a, b in zip(ratios, ratios[1:]))
        report.check(f"bound tightens with d t={t}", increasing and ratios[-1] > Fraction(99, 100), f"{[f'{float(r):.4f}' for r in ratios]}")


def _positivity(report: VerificationReport) -> None:
    for t in (2, 3, 4):
        for d in (2, 3):
            value = tensor_rep.min_eigenvalue(tensor_rep.propagating_class_sum(t, d))
            report.check(f"non-permutation sum PSD t={t} d={d}", value >= -EXACT_TOL, f"min eig {value:.2e}")


def _three_designs(report: VerificationReport) -> None:
    for d in range(2, 7):
        psi = designs.construct_design_state(d)
        for t in (2, 3):
            td = designs.exact_design_check(psi, t).trace_distance_numeric
            report.check(f"exact design t={t} d={d}", td <= DISTANCE_TOL, f"TD {td:.2e}")


def _impossibility(report: VerificationReport) -> None:
    bad = [d for d in range(2, 51) if designs.design_constraints(4, d).consistent]
    report.check("t=4 inconsistent for 2<=d<=50", not bad, f"consistent at {bad}" if bad else "")
    report.check("t=4 consistent at d=1", designs.design_constraints(4, 1).consistent)


def _sandwich(report: VerificationReport) -> None:
    for d in (8, 16, 32, 64):
        t = 2
        while t * t < d:
            b = designs.distance_bounds(d, t)
            bound = float(b.closed_form)
            scaled = bound * d / (t * (t - 1))
            ok = b.lower_exponential <= bound <= b.upper_exponential and Fraction(1, 12) <= scaled <= 1
            report.check(f"bound sandwich t={t} d={d}", ok, f"1-P/Z {bound:.5f}, scaled {scaled:.4f}")
            t += 1


def _homomorphism(report: VerificationReport) -> None:
    d = 2
    for t in (1, 2, 3):
        basis = pairings.enumerate_pairings(t)
        reps = {m: tensor_rep.rep_pairing(m, d).entries for m in basis}
        failures = 0
        for m in basis:
            for n in basis:
                comp = pairings.compose(m, n)
                if not np.array_equal(reps[m] @ reps[n], d ** comp.loops * reps[comp.product]):
                    failures += 1
        report.check(f"diagram homomorphism t={t} d={d}", failures == 0, f"{failures} failures")


def _symmetric_projector(report: VerificationReport) -> None:
    for t in range(1, 5):
        for d in range(1, 5):
            proj = tensor_rep.symmetric_projector(d, t).entries
            idem = float(np.max(np.abs(proj @ proj - proj)))
            rank = math.comb(d + t - 1, t)
            trace = float(np.trace(proj).real)
            report.check(
                f"symmetric projector t={t} d={d}",
                idem <= 1e-12 and abs(trace - rank) <= 1e-9,
                f"idempotence {idem:.1e}, trace {trace:.6f}",
            )
            for name, op in (("rho_sym", tensor_rep.rho_sym(d, t)), ("rho_br", tensor_rep.rho_br(d, t))):
                err = abs(op.trace() - 1)
                report.check(f"unit trace {name} t={t} d={d}", err <= 1e-12, f"{err:.1e}")


def _distinguisher(report: VerificationReport, seed: int, workers: Optional[int]) -> None:
    for t, d in ((2, 2), (1, 3)):
        result = sampling.helstrom_experiment(t, d, 20000, seed=seed, workers=workers)
        expected = 0.5 + 0.5 * float(tensor_rep.harmonic_distance(d, t))
        report.check(
            f"helstrom prediction t={t} d={d}",
            abs(result.predicted_success - expected) <= DISTANCE_TOL,
            f"{result.predicted_success:.12f} vs {expected:.12f}",
        )
        report.check(
            f"helstrom t={t} d={d}",
            result.deviation_in_sigma <= 3.0,
            f"{result.empirical_success:.4f} vs {result.predicted_success:.4f} (sigma {result.std_error:.4f})",
        )


def _empirical_moments(report: VerificationReport, seed: int, workers: Optional[int]) -> None:
    targets = (
        (EnsembleKind.UNITARY_HAAR, tensor_rep.rho_sym(2, 2)),
        (EnsembleKind.ORTHOGONAL_ORBIT, tensor_rep.rho_br(2, 2)),
    )
    for kind, target in targets:
        spec = EnsembleSpec(kind=kind, d=2, t=2, seed_state=StateVector.basis(2))
        moment = sampling.empirical_moment(spec, 100000, seed=seed, workers=workers)
        err = float(np.max(np.abs(moment.entries - target.entries)))
        report.check(f"empirical {kind.value} moment", err <= MOMENT_TOL, f"max err {err:.2e}")


def run_acceptance(seed: int, workers: Optional[int] = None) -> VerificationReport:
    report = VerificationReport()
    started = time.perf_counter()
    steps: List[Callable[[VerificationReport], None]] = [
        _matching_counts,
        _gram_oracle,
        _diagram_traces,
        _all_ones,
        _trace_distances,
        _positivity,
        _three_designs,
        _impossibility,
        _sandwich,
        _homomorphism,
        _symmetric_projector,
        lambda r: _distinguisher(r, seed, workers),
        lambda r: _empirical_moments(r, seed, workers),
    ]
    for step in steps:
        step(report)
    report.elapsed = time.perf_counter() - started
    logger.info("verification: %d checks, %d failed in %.1fs", len(report.checks), len(report.failures), report.elapsed)
    return report
