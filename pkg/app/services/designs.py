"""Orthogonal-orbit moments, exact-design constraints and distance bounds.

The moment of the orbit {O|ψ⟩ : O ∈ O(d)} depends on ψ only through the
conjugate overlap r = |⟨ψ*|ψ⟩|. It is rho_sym exactly when the overlaps
r**(t - pr(m)) match G·c for the coefficients c of rho_sym; those equations
are what design_constraints derives.
"""
import dataclasses
import logging
import math
from collections import defaultdict
from fractions import Fraction
from typing import List, Optional

import numpy as np

from app.core.errors import DomainError, StructuralError
from app.models.brauer import CoefficientVector
from app.models.designs import DesignConstraintSet, DistanceBounds, MomentReport, OverlapScanPoint
from app.models.operators import DenseOperator, StateVector
from app.services.brauer_linalg import check_basis_cap, gram_columns, p_factor, twirl_coefficients, weingarten_matrix
from app.services.pairings import enumerate_pairings, is_permutation, propagating_number
from app.services.tensor_rep import (
    check_cap,
    closed_form_distance,
    diagram_sum,
    harmonic_distance,
    min_eigenvalue,
    overlap_trace,
    propagating_class_sum,
    rho_br,
    rho_sym,
    trace_distance,
)

logger = logging.getLogger(__name__)

REAL_OVERLAP_TOL = 1e-12


def conjugate_overlap(psi: StateVector) -> float:
    return min(1.0, abs(complex(np.sum(psi.amplitudes ** 2))))


def orbit_moment(psi: StateVector, t: int, cap: Optional[int] = None, basis_cap: Optional[int] = None) -> DenseOperator:
    """∫ (O|ψ⟩⟨ψ|Oᵀ)^{⊗t} dO through the Weingarten pipeline c = W b."""
    check_cap(psi.d, t, cap)
    check_basis_cap(t, basis_cap)
    basis = enumerate_pairings(t)
    b = CoefficientVector(t=t, values=np.array([overlap_trace(m, psi) for m in basis]))
    c = twirl_coefficients(weingarten_matrix(t, psi.d, basis_cap), b)
    return diagram_sum(basis, c.values, psi.d, cap)


def design_state_from_overlap(d: int, r: float) -> StateVector:
    """√((1−r)/2)|0⟩ + i√((1+r)/2)|1⟩, whose conjugate overlap is r."""
    if d < 2:
        raise DomainError(f"the two-amplitude family needs d >= 2, got d={d}")
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"conjugate overlap must lie in [0, 1], got {r}")
    amps = np.zeros(d, dtype=np.complex128)
    amps[0] = math.sqrt(0.5 * (1.0 - r))
    amps[1] = 1j * math.sqrt(0.5 * (1.0 + r))
    return StateVector(d=d, amplitudes=amps)


def construct_design_state(d: int) -> StateVector:
    """A state with |⟨ψ*|ψ⟩|² = 2/(d+1): its orthogonal orbit is an exact 3-design."""
    if d < 2:
        raise DomainError("d = 1 is trivial: every state equals |0> up to phase")
    return design_state_from_overlap(d, math.sqrt(2.0 / (d + 1)))


def _consistent(constraints) -> bool:
    for k, value in constraints:
        if value < 0 or value > 1:
            return False
    for i, (k_i, v_i) in enumerate(constraints):
        for k_j, v_j in constraints[i + 1:]:
            if v_i ** k_j != v_j ** k_i:
                return False
    return True


def design_constraints(t: int, d: int, basis_cap: Optional[int] = None) -> DesignConstraintSet:
    """Constraints on r = |⟨ψ*|ψ⟩| for the orbit moment to equal rho_sym.

    Uses exact rationals: v = G c with c_σ = 1/P(d,t) on permutations and 0
    elsewhere, grouped by propagating number.
    """
    check_basis_cap(t, basis_cap)
    basis = enumerate_pairings(t)
    perm_idx = [i for i, m in enumerate(basis) if is_permutation(m)]
    columns = gram_columns(t, d, perm_idx, basis_cap)
    norm = p_factor(d, t)

    classes = defaultdict(set)
    for i, m in enumerate(basis):
        classes[propagating_number(m)].add(Fraction(sum(columns[i].tolist()), norm))

    for p, values in classes.items():
        if len(values) != 1:
            raise StructuralError(f"propagating class {p} at t={t}, d={d} has disagreeing values {sorted(values)}")
    if classes[t] != {1}:
        raise StructuralError(f"permutation class at t={t}, d={d} evaluates to {classes[t]} instead of 1")

    constraints = tuple(sorted((t - p, next(iter(values))) for p, values in classes.items() if p < t))
    consistent = _consistent(constraints)
    witness = None
    if consistent and constraints:
        k, value = constraints[0]
        witness = float(value) ** (2.0 / k)
    logger.info("t=%d d=%d constraints %s consistent=%s", t, d, [(k, str(v)) for k, v in constraints], consistent)
    return DesignConstraintSet(t=t, d=d, constraints=constraints, consistent=consistent, witness_r_squared=witness)


def impossibility_report(t: int, d: int, basis_cap: Optional[int] = None) -> DesignConstraintSet:
    """Constraint set for t >= 4, annotated with the exact witness of inconsistency."""
    if t < 4:
        raise DomainError(f"the impossibility statement concerns t >= 4, got t={t}")
    result = design_constraints(t, d, basis_cap)
    notes = []
    r2, r4 = result.value_for(2), result.value_for(4)
    if r2 is not None and r4 is not None:
        relation = "=" if r2 ** 2 == r4 else "!="
        notes.append(f"(r^2)^2 = {r2 ** 2} {relation} r^4 = {r4}")
    if d == 1:
        notes.append("d = 1: every state is real up to phase")
    expected = d == 1
    if result.consistent != expected:
        logger.warning("t=%d d=%d: constraint set consistent=%s, expected %s", t, d, result.consistent, expected)
        notes.append(f"unexpected consistency result (expected {expected})")
    return dataclasses.replace(result, notes=tuple(notes))


def moment_report(d: int, t: int, cap: Optional[int] = None) -> MomentReport:
    """rho_br against rho_sym: numeric trace distance next to the exact value and the 1 - P/Z bound."""
    td = trace_distance(rho_br(d, t, cap), rho_sym(d, t, cap))
    notes = []
    if t >= 2:
        min_eig = min_eigenvalue(propagating_class_sum(t, d, cap=cap))
    else:
        min_eig = 0.0
        notes.append("t = 1: no non-permutation diagrams")
    if d == 1:
        notes.append("d = 1: both moments equal [[1]]")
    return MomentReport(
        t=t,
        d=d,
        trace_distance_numeric=td,
        one_norm=2.0 * td,
        min_eigenvalue_check=min_eig,
        trace_distance_exact=harmonic_distance(d, t),
        trace_distance_bound=closed_form_distance(d, t),
        notes=notes,
    )


def exact_design_check(psi: StateVector, t: int, cap: Optional[int] = None, basis_cap: Optional[int] = None) -> MomentReport:
    moment = orbit_moment(psi, t, cap, basis_cap)
    td = trace_distance(moment, rho_sym(psi.d, t, cap))
    r = conjugate_overlap(psi)
    notes = [f"conjugate overlap r = {r!r}"]
    exact = bound = None
    if r >= 1.0 - REAL_OVERLAP_TOL:
        exact, bound = harmonic_distance(psi.d, t), closed_form_distance(psi.d, t)
        notes.append("real orbit (up to phase): exact distance and bound attached")
    if psi.d == 1:
        notes.append("d = 1: all states coincide up to phase")
    return MomentReport(
        t=t,
        d=psi.d,
        trace_distance_numeric=td,
        one_norm=2.0 * td,
        min_eigenvalue_check=min_eigenvalue(moment),
        trace_distance_exact=exact,
        trace_distance_bound=bound,
        notes=notes,
    )


def distance_bounds(d: int, t: int) -> DistanceBounds:
    x = t * (t - 1) / d
    return DistanceBounds(
        t=t,
        d=d,
        trace_distance=harmonic_distance(d, t),
        closed_form=closed_form_distance(d, t),
        lower_exponential=-math.expm1(-x / 6.0),
        upper_exponential=-math.expm1(-x),
        lower_quadratic=x / 12.0,
        upper_quadratic=x,
        exponential_regime=2 * t < d,
        quadratic_regime=t * t < d,
    )


def approximate_design_order(d: int, eps: float) -> int:
    """Largest t with ‖rho_br − rho_sym‖₁ = 2·TD(d, t) <= eps.

    TD(d, t) is non-decreasing in t (partial traces contract it), so the
    search stops at the first t + 1 that exceeds eps.
    """
    if not 0.0 < eps < 2.0:
        raise DomainError(f"eps must lie in (0, 2), got {eps}")
    if d < 2:
        raise DomainError(f"at d = 1 both moments coincide for every t, got d={d}")
    bound = Fraction(eps)
    t = 1
    while 2 * harmonic_distance(d, t + 1) <= bound:
        t += 1
    return t


def scan_overlap_family(
    t: int, d: int, points: int = 21, cap: Optional[int] = None, basis_cap: Optional[int] = None
) -> List[OverlapScanPoint]:
    """Trace distance to rho_sym along the two-amplitude family, r on a uniform grid."""
    if points < 2:
        raise DomainError(f"a scan needs at least 2 points, got {points}")
    target = rho_sym(d, t, cap)
    scan = []
    for r in np.linspace(0.0, 1.0, points):
        psi = design_state_from_overlap(d, float(r))
        scan.append(OverlapScanPoint(r=float(r), trace_distance=trace_distance(orbit_moment(psi, t, cap, basis_cap), target)))
    best = min(scan, key=lambda point: point.trace_distance)
    logger.info("t=%d d=%d: closest orbit at r=%.4f, trace distance %.3e", t, d, best.r, best.trace_distance)
    return scan
