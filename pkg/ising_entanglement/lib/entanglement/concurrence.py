"""
concurrence.py

Wootters concurrence and entanglement of formation of two-qubit states.

Every density matrix built here is real, so rho* = rho and the spin-flipped
operator is R = rho Y rho Y with Y = sigma_y (x) sigma_y (a real matrix).
The square roots of R's eigenvalues are |eig(S)| for the symmetric matrix
S = sqrt(rho) Y sqrt(rho), which is what the primary route diagonalises.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ising_entanglement.lib.errors import ConsistencyError, ParameterError
from ising_entanglement.lib.linalg4 import SPIN_FLIP, as_sym_matrix4, eigh, sqrt_psd
from ising_entanglement.lib.thermal import DensityMatrix

LAMBDA_FLOOR = 1e-12
CONCURRENCE_SLACK = 1e-12
IMAGINARY_TOL = 1e-8


@dataclass(frozen=True)
class ConcurrenceResult:
    """concurrence in [0, 1]; lambdas descending; eof the entanglement of formation.

    Fields are floats for a single state and arrays for a stack.
    """

    concurrence: NDArray[np.float64] | float
    lambdas: NDArray[np.float64]
    eof: NDArray[np.float64] | float


def _matrix(rho: DensityMatrix | ArrayLike) -> NDArray[np.float64]:
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return as_sym_matrix4(rho)


def _scalar_or_array(x: NDArray[np.float64]) -> NDArray[np.float64] | float:
    return float(x) if x.ndim == 0 else x


def from_lambdas(lambdas: ArrayLike) -> ConcurrenceResult:
    """Assemble a ConcurrenceResult from the four square-rooted eigenvalues (any order)."""
    lam = np.asarray(lambdas, dtype=np.float64)
    lam = np.where(lam < LAMBDA_FLOOR, 0.0, lam)
    lam = -np.sort(-lam, axis=-1)
    raw = lam[..., 0] - lam[..., 1] - lam[..., 2] - lam[..., 3]
    if np.any(raw > 1.0 + CONCURRENCE_SLACK):
        raise ConsistencyError(f"concurrence above 1: {np.max(raw)!r}")
    c = np.clip(raw, 0.0, 1.0)
    return ConcurrenceResult(
        concurrence=_scalar_or_array(c),
        lambdas=lam,
        eof=_scalar_or_array(np.asarray(entanglement_of_formation(c))),
    )


def spin_flip(rho: DensityMatrix | ArrayLike) -> NDArray[np.float64]:
    """R = rho Y rho* Y for a real rho. Not symmetric in general."""
    m = _matrix(rho)
    return m @ SPIN_FLIP @ m @ SPIN_FLIP


def concurrence(rho: DensityMatrix | ArrayLike) -> ConcurrenceResult:
    """Concurrence via the symmetric matrix sqrt(rho) Y sqrt(rho).

    Raises:
        LinalgError: if rho is not positive semidefinite.
    """
    root = sqrt_psd(_matrix(rho))
    s = root @ SPIN_FLIP @ root
    s = 0.5 * (s + np.swapaxes(s, -1, -2))
    return from_lambdas(np.abs(eigh(s).values))


def concurrence_bruteforce(rho: DensityMatrix | ArrayLike) -> ConcurrenceResult:
    """Concurrence from a general (non-symmetric) eigensolver, for cross-checks.

    R = (rho Y)^2, so the eigenvalues of R are the squares of the eigenvalues
    nu of rho Y and lambda_i = |nu_i|; this avoids taking square roots of
    roundoff-level eigenvalues of R.

    Raises:
        ConsistencyError: if an eigenvalue of R has an imaginary part above 1e-8.
    """
    m = _matrix(rho)
    nu = np.linalg.eigvals(m @ SPIN_FLIP)
    if np.any(np.abs((nu * nu).imag) > IMAGINARY_TOL):
        raise ConsistencyError("spin-flipped matrix has complex eigenvalues")
    return from_lambdas(np.abs(nu))


def pure_state_concurrence(psi: ArrayLike) -> NDArray[np.float64] | float:
    """2 |alpha delta - beta gamma| for psi = (alpha, beta, gamma, delta), normalised on the fly."""
    v = np.asarray(psi, dtype=np.float64)
    norm2 = np.sum(v * v, axis=-1)
    c = 2.0 * np.abs(v[..., 0] * v[..., 3] - v[..., 1] * v[..., 2]) / norm2
    return _scalar_or_array(c)


def _xlog2x(x: NDArray[np.float64]) -> NDArray[np.float64]:
    positive = x > 0.0
    return np.where(positive, x * np.log2(np.where(positive, x, 1.0)), 0.0)


def binary_entropy(x: ArrayLike) -> NDArray[np.float64] | float:
    """h(x) = -x log2 x - (1 - x) log2 (1 - x), with h(0) = h(1) = 0."""
    p = np.asarray(x, dtype=np.float64)
    return _scalar_or_array(-_xlog2x(p) - _xlog2x(1.0 - p))


def entanglement_of_formation(c: ArrayLike) -> NDArray[np.float64] | float:
    """E = h((1 + sqrt(1 - C^2)) / 2).

    Raises:
        ParameterError: if c lies outside [0, 1] by more than 1e-12.
    """
    cc = np.asarray(c, dtype=np.float64)
    if np.any((cc < -CONCURRENCE_SLACK) | (cc > 1.0 + CONCURRENCE_SLACK)) or np.any(
        np.isnan(cc)
    ):
        raise ParameterError("concurrence", "must lie in [0, 1]")
    cc = np.clip(cc, 0.0, 1.0)
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - cc * cc)))
