"""Gram matrix of the Brauer diagram basis and its Weingarten pseudo-inverse."""
import logging
import math
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from app.core.config import settings
from app.core.errors import ComputationError, MemoryCapError, SizeError
from app.models.brauer import CoefficientVector, GramMatrix, WeingartenMatrix, double_factorial
from app.services.pairings import enumerate_pairings, union_cycle_count

logger = logging.getLogger(__name__)

SVD_RELATIVE_CUTOFF = 1e-12


def p_factor(d: int, t: int) -> int:
    """P(d, t) = d (d+1) ... (d+t-1)."""
    return math.prod(d + j for j in range(t))


def z_factor(d: int, t: int) -> int:
    """Z(d, t) = d (d+2) ... (d+2t-2)."""
    return math.prod(d + 2 * j for j in range(t))


def check_basis_cap(t: int, cap: Optional[int] = None) -> int:
    """Return the basis size (2t-1)!!, raising if it exceeds the basis cap."""
    cap = settings.BRAUER_BASIS_CAP if cap is None else cap
    size = double_factorial(t) if t >= 1 else 1
    if size > cap:
        raise MemoryCapError(required=size, cap=cap, what="diagram basis of size", knob="--basis-cap or BRAUER_BASIS_CAP")
    return size


@lru_cache(maxsize=8)
def cycle_count_matrix(t: int) -> np.ndarray:
    """union_cycle_count over all basis pairs; independent of d."""
    basis = enumerate_pairings(t)
    size = len(basis)
    cycles = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        cycles[i, i] = t
        for j in range(i + 1, size):
            cycles[i, j] = cycles[j, i] = union_cycle_count(basis[i], basis[j])
    cycles.setflags(write=False)
    logger.debug("cycle-count matrix for t=%d filled (%dx%d)", t, size, size)
    return cycles


@lru_cache(maxsize=16)
def cycle_count_columns(t: int, columns: Tuple[int, ...]) -> np.ndarray:
    """union_cycle_count between every basis element and the chosen columns."""
    basis = enumerate_pairings(t)
    cycles = np.empty((len(basis), len(columns)), dtype=np.int64)
    for k, j in enumerate(columns):
        for i, m in enumerate(basis):
            cycles[i, k] = union_cycle_count(m, basis[j])
    cycles.setflags(write=False)
    return cycles


def gram_columns(t: int, d: int, columns: Sequence[int], basis_cap: Optional[int] = None) -> np.ndarray:
    """Exact Gram entries G[:, columns] without materializing the full matrix."""
    check_basis_cap(t, basis_cap)
    powers = np.array([d ** k for k in range(t + 1)], dtype=object)
    return powers[cycle_count_columns(t, tuple(columns))]


def gram_matrix(t: int, d: int, basis_cap: Optional[int] = None) -> GramMatrix:
    check_basis_cap(t, basis_cap)
    return _gram_matrix(t, d)


def weingarten_matrix(t: int, d: int, basis_cap: Optional[int] = None) -> WeingartenMatrix:
    """Moore-Penrose pseudo-inverse of the Gram matrix via SVD.

    Singular values at or below ``s_max * 1e-12 * size`` are treated as zero;
    this genuinely happens when d < t.
    """
    check_basis_cap(t, basis_cap)
    return _weingarten_matrix(t, d)


@lru_cache(maxsize=32)
def _gram_matrix(t: int, d: int) -> GramMatrix:
    if d < 1:
        raise SizeError(f"d must be positive, got {d}")
    basis = enumerate_pairings(t)
    powers = np.array([d ** k for k in range(t + 1)], dtype=object)
    entries = powers[cycle_count_matrix(t)]
    entries.setflags(write=False)
    return GramMatrix(t=t, d=d, basis=basis, entries=entries)


@lru_cache(maxsize=32)
def _weingarten_matrix(t: int, d: int) -> WeingartenMatrix:
    gram = _gram_matrix(t, d).as_float()
    size = gram.shape[0]
    try:
        u, s, vh = scipy.linalg.svd(gram, full_matrices=False)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise ComputationError(f"SVD of the Gram matrix failed: {e}", t=t, d=d) from e
    cutoff = float(s[0]) * SVD_RELATIVE_CUTOFF * size
    keep = s > cutoff
    rank = int(np.count_nonzero(keep))
    w = (vh[keep].T / s[keep]) @ u[:, keep].T
    w = 0.5 * (w + w.T)
    w.setflags(write=False)
    if rank < size:
        logger.warning("Gram matrix at t=%d, d=%d is rank deficient (%d of %d); using the pseudo-inverse", t, d, rank, size)
    return WeingartenMatrix(t=t, d=d, entries=w, rank=rank, cutoff=cutoff)


def twirl_coefficients(w: WeingartenMatrix, b: CoefficientVector) -> CoefficientVector:
    """c = W b: commutant coefficients from the overlaps b_m = Tr[m^T X]."""
    if w.t != b.t or b.values.shape[0] != w.size:
        raise SizeError(f"Weingarten matrix of size {w.size} (t={w.t}) cannot act on {b.values.shape[0]} coefficients (t={b.t})")
    return CoefficientVector(t=b.t, values=w.entries @ b.values)
