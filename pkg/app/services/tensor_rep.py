"""Dense representations of diagrams on (C^d)^{⊗t} and the two moment operators.

rho_sym is the t-th moment of Haar-random complex states, rho_br that of
Haar-random real states. Everything here is dense; ``cap`` bounds the side
length d**t and defaults to ``settings.BRAUER_CAP``.
"""
import functools
import logging
import math
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.linalg

from app.core.config import settings
from app.core.errors import ContractError, MemoryCapError, SizeError
from app.models.operators import HERMITIAN_TOL, DenseOperator, StateVector
from app.models.pairing import PairPartition
from app.services.brauer_linalg import p_factor, z_factor
from app.services.pairings import embed_permutation, enumerate_pairings, is_permutation, propagating_number

logger = logging.getLogger(__name__)


def check_cap(d: int, t: int, cap: Optional[int] = None) -> int:
    cap = settings.BRAUER_CAP if cap is None else cap
    side = d ** t
    if side > cap:
        raise MemoryCapError(required=side, cap=cap)
    return side


def _support(m: PairPartition, d: int):
    """Row and column indices of the d**t unit entries of rep(m)."""
    t = m.t
    row_w = np.zeros(t, dtype=np.int64)
    col_w = np.zeros(t, dtype=np.int64)
    for k, pair in enumerate(m.pairs):
        for p in pair:
            if p <= t:
                row_w[k] += d ** (t - p)
            else:
                col_w[k] += d ** (2 * t - p)
    values = np.indices((d,) * t).reshape(t, -1)
    return row_w @ values, col_w @ values


def _accumulate(diagrams: Iterable[PairPartition], weights: Iterable[complex], d: int, t: int, dtype) -> np.ndarray:
    side = d ** t
    acc = np.zeros((side, side), dtype=dtype)
    for m, weight in zip(diagrams, weights):
        rows, cols = _support(m, d)
        acc[rows, cols] += weight
    return acc


def rep_pairing(m: PairPartition, d: int, cap: Optional[int] = None) -> DenseOperator:
    """The 0/1 matrix of diagram m, kept as integers so products are exact."""
    check_cap(d, m.t, cap)
    return DenseOperator(t=m.t, d=d, entries=_accumulate([m], [1], d, m.t, np.int64))


def rep_permutation(sigma: Sequence[int], d: int, cap: Optional[int] = None) -> DenseOperator:
    """σ acting as σ ⊗ψ_i = ⊗ψ_{σ⁻¹(i)}; a homomorphism from S_t."""
    return rep_pairing(embed_permutation(sigma), d, cap)


def symmetric_projector(d: int, t: int, cap: Optional[int] = None) -> DenseOperator:
    """(1/t!) Σ_σ σ, the projector onto the symmetric subspace."""
    check_cap(d, t, cap)
    perms = [m for m in enumerate_pairings(t) if is_permutation(m)]
    weight = 1.0 / math.factorial(t)
    return DenseOperator(t=t, d=d, entries=_accumulate(perms, [weight] * len(perms), d, t, np.complex128))


def rho_sym(d: int, t: int, cap: Optional[int] = None) -> DenseOperator:
    check_cap(d, t, cap)
    perms = [m for m in enumerate_pairings(t) if is_permutation(m)]
    weight = 1.0 / p_factor(d, t)
    return DenseOperator(t=t, d=d, entries=_accumulate(perms, [weight] * len(perms), d, t, np.complex128))


def rho_br(d: int, t: int, cap: Optional[int] = None) -> DenseOperator:
    check_cap(d, t, cap)
    basis = enumerate_pairings(t)
    weight = 1.0 / z_factor(d, t)
    return DenseOperator(t=t, d=d, entries=_accumulate(basis, [weight] * len(basis), d, t, np.complex128))


def diagram_sum(diagrams: Sequence[PairPartition], coefficients: Sequence[complex], d: int, cap: Optional[int] = None) -> DenseOperator:
    """Σ_m c_m rep(m) over an arbitrary weighted family of diagrams."""
    if not diagrams:
        raise SizeError("diagram_sum needs at least one diagram")
    t = diagrams[0].t
    check_cap(d, t, cap)
    return DenseOperator(t=t, d=d, entries=_accumulate(diagrams, coefficients, d, t, np.complex128))


def propagating_class_sum(t: int, d: int, w: Optional[int] = None, cap: Optional[int] = None) -> DenseOperator:
    """Integer sum of rep(m) over non-permutation diagrams, optionally only those with pr(m) = w."""
    check_cap(d, t, cap)
    chosen = [
        m for m in enumerate_pairings(t)
        if not is_permutation(m) and (w is None or propagating_number(m) == w)
    ]
    if w is not None and not chosen:
        raise SizeError(f"no non-permutation diagram at t={t} has propagating number {w}")
    return DenseOperator(t=t, d=d, entries=_accumulate(chosen, [1] * len(chosen), d, t, np.int64))


def _hermitian_eigvalsh(a: DenseOperator) -> np.ndarray:
    if not a.is_hermitian(HERMITIAN_TOL):
        raise ContractError(f"operator is not Hermitian (defect {a.hermiticity_defect():.3e})")
    return scipy.linalg.eigvalsh(a.hermitian_part())


def _same_space(a: DenseOperator, b: DenseOperator) -> None:
    if (a.t, a.d) != (b.t, b.d):
        raise SizeError(f"operators live on different spaces: (t={a.t}, d={a.d}) vs (t={b.t}, d={b.d})")


def trace_distance(a: DenseOperator, b: DenseOperator) -> float:
    """½‖a − b‖₁ for Hermitian a, b."""
    _same_space(a, b)
    eigenvalues = _hermitian_eigvalsh(a - b)
    return 0.5 * float(np.sum(np.abs(eigenvalues)))


def spectral_split(a: DenseOperator, b: DenseOperator):
    """Traces of the positive part and of |negative part| of a − b."""
    _same_space(a, b)
    eigenvalues = _hermitian_eigvalsh(a - b)
    positive = float(np.sum(eigenvalues[eigenvalues > 0]))
    negative = float(-np.sum(eigenvalues[eigenvalues < 0]))
    return positive, negative


def helstrom_projector(a: DenseOperator, b: DenseOperator, tol: float = 1e-12) -> DenseOperator:
    """Projector onto the non-negative eigenspace of a − b.

    Measuring it and answering "a" on the +1 outcome succeeds with
    probability ½ + ½·trace_distance(a, b) under equal priors.
    """
    _same_space(a, b)
    diff = a - b
    if not diff.is_hermitian(HERMITIAN_TOL):
        raise ContractError(f"operator is not Hermitian (defect {diff.hermiticity_defect():.3e})")
    eigenvalues, vectors = scipy.linalg.eigh(diff.hermitian_part())
    kept = vectors[:, eigenvalues > -tol]
    return DenseOperator(t=a.t, d=a.d, entries=kept @ kept.conj().T)


def closed_form_distance(d: int, t: int) -> Fraction:
    """Upper bound 1 − P(d,t)/Z(d,t) on trace_distance(rho_br, rho_sym).

    Equals Tr[N]/Z(d,t) for the sum N of all non-permutation diagrams. The
    true distance is smaller, and the ratio of the two tends to 1 as d grows.
    """
    if t < 1:
        raise SizeError(f"t must be positive, got {t}")
    return 1 - Fraction(p_factor(d, t), z_factor(d, t))


def harmonic_dimension(d: int, k: int) -> int:
    """Dimension of the degree-k harmonic polynomials in d real variables."""
    lower = math.comb(d + k - 3, k - 2) if k >= 2 else 0
    return math.comb(d + k - 1, k) - lower


def harmonic_distance(d: int, t: int) -> Fraction:
    """Exact trace_distance(rho_br, rho_sym) from the O(d) decomposition of Sym^t.

    Sym^t splits into pieces |x|^{2j} H_k with k = t − 2j and H_k harmonic.
    rho_br is a scalar on each piece, proportional to
    1 / (Z(d,k) · Π_{i=1}^{j} 2i(2k + d + 2i − 2)), while rho_sym is
    1/dim Sym^t everywhere. Only the pieces where rho_br is larger contribute.
    """
    if t < 1:
        raise SizeError(f"t must be positive, got {t}")
    if d < 1:
        raise SizeError(f"d must be positive, got {d}")
    pieces = []
    for j in range(t // 2 + 1):
        k = t - 2 * j
        dim = harmonic_dimension(d, k)
        if dim == 0:
            continue
        weight = z_factor(d, k) * math.prod(2 * i * (2 * k + d + 2 * i - 2) for i in range(1, j + 1))
        pieces.append((dim, Fraction(1, weight)))
    total = sum(dim * w for dim, w in pieces)
    uniform = Fraction(1, math.comb(d + t - 1, t))
    return sum((dim * (w / total - uniform) for dim, w in pieces if w / total > uniform), Fraction(0))


def min_eigenvalue(a: DenseOperator) -> float:
    return float(_hermitian_eigvalsh(a)[0])


def overlap_trace(m: PairPartition, psi: StateVector) -> float:
    """Tr[rep(m) (|ψ⟩⟨ψ|)^{⊗t}] = |⟨ψ*|ψ⟩|^{t − pr(m)}."""
    r = abs(complex(np.sum(psi.amplitudes ** 2)))
    return r ** (m.t - propagating_number(m))


def tensor_power(psi: StateVector, t: int) -> np.ndarray:
    return functools.reduce(np.kron, [psi.amplitudes] * t)


def dense_overlap_trace(m: PairPartition, psi: StateVector) -> complex:
    """Tr[rep(m) (|ψ⟩⟨ψ|)^{⊗t}] evaluated densely; cross-checks overlap_trace."""
    vec = tensor_power(psi, m.t)
    rep = rep_pairing(m, psi.d).entries
    return complex(vec.conj() @ (rep @ vec))


def partial_trace(op: DenseOperator, k: int = 1) -> DenseOperator:
    """Trace out the last k tensor copies."""
    if not 0 < k < op.t:
        raise SizeError(f"can trace out between 1 and {op.t - 1} copies, got {k}")
    kept = op.d ** (op.t - k)
    traced = op.d ** k
    reshaped = op.entries.reshape(kept, traced, kept, traced)
    return DenseOperator(t=op.t - k, d=op.d, entries=np.trace(reshaped, axis1=1, axis2=3))
