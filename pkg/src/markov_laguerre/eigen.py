"""Extreme eigenvalues of the symmetric tridiagonal matrix attached to Q_n.

The Jacobi matrix with diagonal d_0..d_{n-1} and positive off-diagonal
lam_1..lam_{n-1} has Q_n as its characteristic polynomial, so its smallest
eigenvalue is the smallest zero of Q_n and its inverse square root is the
sharp Markov constant c_n(alpha).  Eigenvalues are located by bisection on
the Sturm sign count, which certifies an enclosing bracket for the result.
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass

import numpy as np

from .recurrence import recurrence_coeffs

__all__ = [
    "TridiagMatrix",
    "EigenResult",
    "build_jacobi",
    "gershgorin_bracket",
    "sturm_count",
    "smallest_eigenvalue",
    "largest_eigenvalue",
    "markov_constant",
]

log = logging.getLogger(__name__)

_EPS = sys.float_info.epsilon
_MAX_BISECT = 200


@dataclass(frozen=True)
class TridiagMatrix:
    """Symmetric tridiagonal matrix; only diagonal and one off-diagonal stored."""

    diag: np.ndarray
    offdiag: np.ndarray

    @property
    def order(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class EigenResult:
    """One eigenvalue with its certified bracket: lo <= value <= hi."""

    value: float
    bracket: tuple[float, float]
    iterations: int
    tol: float


def build_jacobi(alpha, n: int) -> TridiagMatrix:
    """Jacobi matrix of order n whose eigenvalues are the zeros of Q_n."""
    rc = recurrence_coeffs(alpha, n)
    diag = np.array([float(x) for x in rc.d])
    offdiag = np.sqrt([float(x) for x in rc.lambda_sq])
    diag.setflags(write=False)
    offdiag.setflags(write=False)
    return TridiagMatrix(diag, offdiag)


def gershgorin_bracket(T: TridiagMatrix) -> tuple[float, float]:
    """Interval containing all eigenvalues, clamped below at 0.

    The clamp is valid because all zeros of Q_n are positive (the
    orthogonality measure of the family is supported on the positive axis).
    """
    n = T.order
    radius = np.zeros(n)
    if n > 1:
        radius[:-1] += T.offdiag
        radius[1:] += T.offdiag
    lo = float(np.min(T.diag - radius))
    hi = float(np.max(T.diag + radius))
    return max(0.0, lo), hi


def _sturm_count(diag, offdiag_sq, sigma, off_norm):
    """Number of eigenvalues strictly below sigma (negative-pivot count).

    A vanishing pivot is replaced by -eps * max(1, |d_k|, off_norm) so the
    count is defined for every sigma.
    """
    count = 0
    q = diag[0] - sigma
    if q == 0.0:
        q = -_EPS * max(1.0, abs(diag[0]), off_norm)
    if q < 0.0:
        count += 1
    for k in range(1, len(diag)):
        q = (diag[k] - sigma) - offdiag_sq[k - 1] / q
        if q == 0.0:
            q = -_EPS * max(1.0, abs(diag[k]), off_norm)
        if q < 0.0:
            count += 1
    return count


def _sturm_data(T: TridiagMatrix):
    diag = T.diag.tolist()
    off_sq = (T.offdiag * T.offdiag).tolist()
    off_norm = float(np.linalg.norm(T.offdiag)) if T.order > 1 else 0.0
    return diag, off_sq, off_norm


def sturm_count(T: TridiagMatrix, sigma: float) -> int:
    """Number of eigenvalues of T strictly less than sigma."""
    diag, off_sq, off_norm = _sturm_data(T)
    return _sturm_count(diag, off_sq, float(sigma), off_norm)


def _bisect(T: TridiagMatrix, tol: float, want: int, nudge_hi: bool) -> EigenResult:
    """Bisect the Gershgorin bracket for the eigenvalue with count threshold
    ``want``: predicate count(sigma) >= want is false left of the target and
    true right of it."""
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    diag, off_sq, off_norm = _sturm_data(T)
    lo, hi = gershgorin_bracket(T)
    if nudge_hi and T.order > 1:
        # The largest eigenvalue may sit exactly on the Gershgorin edge;
        # nudge so the count predicate is true at the right endpoint.
        hi = hi + 4.0 * _EPS * max(1.0, abs(hi))

    iterations = 0
    value = 0.5 * (lo + hi)
    while hi - lo > tol * max(1.0, abs(value)):
        if iterations >= _MAX_BISECT:
            raise RuntimeError(
                f"bisection did not converge to tol={tol} in {_MAX_BISECT} steps"
            )
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise RuntimeError(
                f"tol={tol} is below binary64 resolution of bracket [{lo}, {hi}]"
            )
        if _sturm_count(diag, off_sq, mid, off_norm) >= want:
            hi = mid
        else:
            lo = mid
        value = 0.5 * (lo + hi)
        iterations += 1
    log.debug("bisection(want=%d): value=%.17g in [%g, %g] after %d steps",
              want, value, lo, hi, iterations)
    return EigenResult(value, (lo, hi), iterations, tol)


def smallest_eigenvalue(T: TridiagMatrix, tol: float = 1e-13) -> EigenResult:
    """Smallest eigenvalue of T with a certified enclosing bracket."""
    return _bisect(T, tol, want=1, nudge_hi=False)


def largest_eigenvalue(T: TridiagMatrix, tol: float = 1e-13) -> EigenResult:
    """Largest eigenvalue of T with a certified enclosing bracket."""
    return _bisect(T, tol, want=T.order, nudge_hi=True)


def markov_constant(alpha, n: int, tol: float = 1e-13) -> float:
    """Sharp constant c_n(alpha): inverse square root of the smallest zero of Q_n."""
    res = smallest_eigenvalue(build_jacobi(alpha, n), tol)
    if res.value <= 0.0:
        raise RuntimeError(
            f"smallest eigenvalue {res.value} is not positive (alpha={alpha}, n={n})"
        )
    return res.value ** -0.5
