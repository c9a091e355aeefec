"""
linalg4.py

Exact-size real linear algebra for two-qubit operators.

Every matrix in this package is a real 4x4 array in the natural basis
{|00>, |01>, |10>, |11>} with qubit 1 as the left tensor factor. Functions
accept a single (4, 4) matrix or a stack (..., 4, 4) and work over the
leading axes the way numpy.linalg does; the result for one matrix does not
depend on what else is in the stack.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ising_entanglement.lib.errors import LinalgError

type SymMatrix4 = NDArray[np.float64]

DIM = 4
SYMMETRY_RTOL = 1e-12
CONVERGENCE_RTOL = 1e-14
MAX_SWEEPS = 100
PSD_TOL = 1e-12

IDENTITY2 = np.eye(2)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])

# cyclic-by-row ordering of the six off-diagonal pivots
_PAIRS = tuple((p, q) for p in range(DIM) for q in range(p + 1, DIM))
_OFF_DIAGONAL = ~np.eye(DIM, dtype=bool)


@dataclass(frozen=True)
class Spectrum4:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns).

    Both arrays carry the same leading stack shape as the source matrix.
    """

    values: NDArray[np.float64]
    vectors: NDArray[np.float64]

    def reconstruct(self) -> NDArray[np.float64]:
        return (self.vectors * self.values[..., None, :]) @ np.swapaxes(
            self.vectors, -1, -2
        )

    def ground_vector(self) -> NDArray[np.float64]:
        return self.vectors[..., :, 0]


def _as_stack(m: ArrayLike) -> NDArray[np.float64]:
    arr = np.asarray(m, dtype=np.float64)
    if arr.shape[-2:] != (DIM, DIM):
        raise LinalgError(f"expected shape (..., 4, 4), got {arr.shape}")
    return arr


def _readonly(arr: NDArray[np.float64]) -> NDArray[np.float64]:
    arr.setflags(write=False)
    return arr


def as_sym_matrix4(entries: ArrayLike) -> SymMatrix4:
    """Validate and symmetrize a real 4x4 matrix (or stack of them).

    Asymmetry up to SYMMETRY_RTOL relative to the largest entry is averaged
    away; anything larger is rejected.
    """
    arr = _as_stack(entries)
    finite = np.all(np.isfinite(arr), axis=(-2, -1)).reshape(-1)
    if not finite.all():
        raise LinalgError("matrix has non-finite entries", index=int(np.flatnonzero(~finite)[0]))
    transposed = np.swapaxes(arr, -1, -2)
    scale = np.maximum(1.0, np.max(np.abs(arr), axis=(-2, -1)))
    asymmetry = np.max(np.abs(arr - transposed), axis=(-2, -1))
    bad = np.flatnonzero(asymmetry > SYMMETRY_RTOL * scale)
    if bad.size:
        raise LinalgError("matrix is not symmetric", index=int(bad[0]))
    return _readonly(0.5 * (arr + transposed))


def kron2(a: ArrayLike, b: ArrayLike) -> NDArray[np.float64]:
    """Kronecker product of two single-qubit operators, qubit 1 on the left.

    Complex factors are allowed as long as the product is real, which is the
    case for sigma_y (x) sigma_y.
    """
    product = np.kron(np.asarray(a), np.asarray(b))
    if np.iscomplexobj(product):
        if np.any(product.imag != 0.0):
            raise LinalgError("kron2 product is not real")
        product = product.real
    return product.astype(np.float64)


SPIN_FLIP = _readonly(kron2(SIGMA_Y, SIGMA_Y))


def _off_norm(a: NDArray[np.float64]) -> NDArray[np.float64]:
    return np.sqrt(np.sum(np.where(_OFF_DIAGONAL, a, 0.0) ** 2, axis=(-2, -1)))


def _rotate(
    a: NDArray[np.float64],
    v: NDArray[np.float64],
    p: int,
    q: int,
) -> None:
    """Apply one Jacobi rotation annihilating a[:, p, q], in place."""
    app = a[:, p, p]
    aqq = a[:, q, q]
    apq = a[:, p, q]
    tau = (aqq - app) / (2.0 * apq)
    t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    c = (1.0 / np.hypot(1.0, t))[:, None]
    s = t[:, None] * c

    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = c * col_p - s * col_q
    a[:, :, q] = s * col_p + c * col_q
    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = c * row_p - s * row_q
    a[:, q, :] = s * row_p + c * row_q
    a[:, p, q] = 0.0
    a[:, q, p] = 0.0

    vec_p = v[:, :, p].copy()
    vec_q = v[:, :, q].copy()
    v[:, :, p] = c * vec_p - s * vec_q
    v[:, :, q] = s * vec_p + c * vec_q


def eigh(m: ArrayLike) -> Spectrum4:
    """Cyclic Jacobi eigendecomposition of a real symmetric 4x4 matrix.

    Converged once the off-diagonal Frobenius norm drops to
    CONVERGENCE_RTOL * ||m||_F. Matrices in a stack stop rotating
    independently, so each result is the same as for a lone call.

    Raises:
        LinalgError: after MAX_SWEEPS sweeps without convergence.
    """
    source = as_sym_matrix4(m)
    lead = source.shape[:-2]
    # iterate on m / 2**k with max|entry| in [0.5, 1) so the norms cannot overflow
    _, exponent = np.frexp(np.max(np.abs(source.reshape(-1, DIM, DIM)), axis=(-2, -1)))
    a = np.ldexp(source.reshape(-1, DIM, DIM), -exponent[:, None, None])
    v = np.broadcast_to(np.eye(DIM), a.shape).copy()

    tol = CONVERGENCE_RTOL * np.sqrt(np.sum(a**2, axis=(-2, -1)))
    active = _off_norm(a) > tol
    sweeps = 0
    while active.any():
        if sweeps == MAX_SWEEPS:
            raise LinalgError(
                f"Jacobi eigensolver did not converge in {MAX_SWEEPS} sweeps",
                index=int(np.flatnonzero(active)[0]),
            )
        for p, q in _PAIRS:
            idx = np.flatnonzero(active & (a[:, p, q] != 0.0))
            if idx.size == 0:
                continue
            sub_a = a[idx]
            sub_v = v[idx]
            _rotate(sub_a, sub_v, p, q)
            a[idx] = sub_a
            v[idx] = sub_v
        sweeps += 1
        active = _off_norm(a) > tol

    diagonal = np.ldexp(np.diagonal(a, axis1=-2, axis2=-1), exponent[:, None])
    order = np.argsort(diagonal, axis=-1, kind="stable")
    values = np.take_along_axis(diagonal, order, axis=-1)
    vectors = np.take_along_axis(v, order[:, None, :], axis=-1)
    return Spectrum4(
        values=_readonly(values.reshape(*lead, DIM)),
        vectors=_readonly(vectors.reshape(*lead, DIM, DIM)),
    )


def from_spectrum(values: ArrayLike, vectors: ArrayLike) -> SymMatrix4:
    """V diag(values) V^T, symmetrized."""
    vals = np.asarray(values, dtype=np.float64)
    vecs = np.asarray(vectors, dtype=np.float64)
    m = (vecs * vals[..., None, :]) @ np.swapaxes(vecs, -1, -2)
    return _readonly(0.5 * (m + np.swapaxes(m, -1, -2)))


def sqrt_psd(m: ArrayLike) -> SymMatrix4:
    """Principal square root of a positive semidefinite symmetric matrix.

    Eigenvalues in [-PSD_TOL, 0) are treated as zero.

    Raises:
        LinalgError: if an eigenvalue is below -PSD_TOL.
    """
    spectrum = eigh(m)
    values = spectrum.values
    bad = np.flatnonzero(np.any(values < -PSD_TOL, axis=-1))
    if bad.size:
        raise LinalgError("matrix is not positive semidefinite", index=int(bad[0]))
    return from_spectrum(np.sqrt(np.clip(values, 0.0, None)), spectrum.vectors)
