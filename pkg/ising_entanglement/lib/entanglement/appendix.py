"""
appendix.py

Closed-form solution of the model when field 1 lies along the Ising axis
(theta1 = 0, or theta1 = pi with the sign of B1 flipped).

The closed forms label spin-down as |0>, i.e. they are written in the basis
sigma_x (x) sigma_x |ab> of the natural basis used everywhere else. Under
that relabeling

    |X+-> = a+- |00> + b+- |01>   lives in span{|11>, |10>}   (natural basis)
    |Y+-> = c+- |10> + d+- |11>   lives in span{|01>, |00>}

Energies do not depend on the labeling, and sigma_x (x) sigma_x commutes with
sigma_y (x) sigma_y, so the block structure of R and its entries A, B, C, D
are evaluated in the closed-form labeling and mapped back by reversing the
basis order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from ising_entanglement.lib.entanglement.concurrence import ConcurrenceResult
from ising_entanglement.lib.errors import ParameterError
from ising_entanglement.lib.linalg4 import from_spectrum
from ising_entanglement.lib.model import ModelParams
from ising_entanglement.lib.thermal import DensityMatrix, StateKind, gibbs_weights


@dataclass(frozen=True)
class AppendixSpectrum:
    e_x_minus: float
    e_x_plus: float
    e_y_minus: float
    e_y_plus: float
    a_minus: float
    a_plus: float
    b_minus: float
    b_plus: float
    c_minus: float
    c_plus: float
    d_minus: float
    d_plus: float

    def energies(self) -> NDArray[np.float64]:
        """(E-^X, E+^X, E-^Y, E+^Y), same order as vectors()."""
        return np.array([self.e_x_minus, self.e_x_plus, self.e_y_minus, self.e_y_plus])

    def vectors(self) -> NDArray[np.float64]:
        """Eigenvectors as columns in the natural basis |00>, |01>, |10>, |11>."""
        v = np.zeros((4, 4))
        v[3, 0], v[2, 0] = self.a_minus, self.b_minus
        v[3, 1], v[2, 1] = self.a_plus, self.b_plus
        v[1, 2], v[0, 2] = self.c_minus, self.d_minus
        v[1, 3], v[0, 3] = self.c_plus, self.d_plus
        return v


@dataclass(frozen=True)
class SpinFlipBlocks:
    """Entries of R in the closed-form labeling, R = [[A, C], [D, B]] (+) [[B, -C], [-D, A]]."""

    A: float
    B: float
    C: float
    D: float

    def matrix(self) -> NDArray[np.float64]:
        """R in the natural basis."""
        r = np.array(
            [
                [self.A, self.C, 0.0, 0.0],
                [self.D, self.B, 0.0, 0.0],
                [0.0, 0.0, self.B, -self.C],
                [0.0, 0.0, -self.D, self.A],
            ]
        )
        return r[::-1, ::-1].copy()

    def eigenvalues(self) -> NDArray[np.float64]:
        """Pairwise-equal eigenvalues of R, descending: (l1, l1, l3, l3)."""
        mean = 0.5 * (self.A + self.B)
        half_gap = 0.5 * math.sqrt(max((self.A - self.B) ** 2 + 4.0 * self.C * self.D, 0.0))
        return np.array([mean + half_gap, mean + half_gap, mean - half_gap, mean - half_gap])


@dataclass(frozen=True)
class AppendixResult:
    spectrum: AppendixSpectrum
    state: DensityMatrix
    blocks: SpinFlipBlocks
    concurrence: ConcurrenceResult


def _amplitudes(r: float, h: float, s: float) -> tuple[float, float, float, float]:
    """(a-, a+, b-, b+) for the block [[-h, s], [s, h]], eigenvalues -+r.

    a+- = sgn(s) sqrt((r -+ h) / 2r) and b+- = +-sqrt((r +- h) / 2r) are the
    closed-form amplitudes with s = sqrt((r - h)(r + h)) rationalised away.
    """
    if r == 0.0:
        return 1.0, 0.0, 0.0, 1.0
    sign = 1.0 if s >= 0.0 else -1.0
    a_minus = sign * math.sqrt(max(r + h, 0.0) / (2.0 * r))
    a_plus = sign * math.sqrt(max(r - h, 0.0) / (2.0 * r))
    b_minus = -math.sqrt(max(r - h, 0.0) / (2.0 * r))
    b_plus = math.sqrt(max(r + h, 0.0) / (2.0 * r))
    return a_minus, a_plus, b_minus, b_plus


def appendix_spectrum(p: ModelParams) -> AppendixSpectrum:
    """Closed-form eigensystem for a field-1 direction along +z or -z.

    Raises:
        ParameterError: if theta1 is neither 0 nor pi.
    """
    if p.theta1 == 0.0:
        b1 = p.B1
    elif p.theta1 == np.pi:
        b1 = -p.B1
    else:
        raise ParameterError("theta1", "closed form requires field 1 along the Ising axis")

    J, B2 = p.J, p.B2
    cos_t, s = math.cos(p.theta2), B2 * math.sin(p.theta2)
    r_x = math.sqrt(max(4.0 * J**2 + B2**2 - 4.0 * J * B2 * cos_t, 0.0))
    r_y = math.sqrt(max(4.0 * J**2 + B2**2 + 4.0 * J * B2 * cos_t, 0.0))

    a_minus, a_plus, b_minus, b_plus = _amplitudes(r_x, B2 * cos_t - 2.0 * J, s)
    c_minus, c_plus, d_minus, d_plus = _amplitudes(r_y, B2 * cos_t + 2.0 * J, s)
    return AppendixSpectrum(
        e_x_minus=-b1 - r_x,
        e_x_plus=-b1 + r_x,
        e_y_minus=b1 - r_y,
        e_y_plus=b1 + r_y,
        a_minus=a_minus,
        a_plus=a_plus,
        b_minus=b_minus,
        b_plus=b_plus,
        c_minus=c_minus,
        c_plus=c_plus,
        d_minus=d_minus,
        d_plus=d_plus,
    )


def appendix_state(p: ModelParams, spectrum: AppendixSpectrum | None = None) -> DensityMatrix:
    """Gibbs state assembled from the closed-form eigensystem (ground mixture at T = 0)."""
    spectrum = spectrum or appendix_spectrum(p)
    energies = spectrum.energies()
    order = np.argsort(energies, kind="stable")
    weights, _ = gibbs_weights(energies[order], p.T)
    rho = from_spectrum(weights, spectrum.vectors()[:, order])
    if p.T > 0.0:
        return DensityMatrix(matrix=rho, kind=StateKind.THERMAL, temperature=p.T)
    return DensityMatrix(
        matrix=rho, kind=StateKind.GROUND, degeneracy=int(np.count_nonzero(weights))
    )


def spin_flip_blocks(state: DensityMatrix) -> SpinFlipBlocks:
    # 1-based names below follow the closed-form labeling
    rho = state.matrix[::-1, ::-1]
    r11, r12, r22 = rho[0, 0], rho[0, 1], rho[1, 1]
    r33, r34, r44 = rho[2, 2], rho[2, 3], rho[3, 3]
    return SpinFlipBlocks(
        A=float(r11 * r44 - r12 * r34),
        B=float(r22 * r33 - r12 * r34),
        C=float(r33 * r12 - r11 * r34),
        D=float(r44 * r12 - r22 * r34),
    )


def appendix_oracle(p: ModelParams) -> AppendixResult:
    """Closed-form eigensystem, state, spin-flip blocks and concurrence.

    The concurrence is identically zero: R's eigenvalues come in equal pairs,
    so sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4) = -2 sqrt(l3) <= 0.
    """
    spectrum = appendix_spectrum(p)
    state = appendix_state(p, spectrum)
    blocks = spin_flip_blocks(state)
    lambdas = np.sqrt(np.clip(blocks.eigenvalues(), 0.0, None))
    raw = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    result = ConcurrenceResult(concurrence=max(float(raw), 0.0), lambdas=lambdas, eof=0.0)
    return AppendixResult(spectrum=spectrum, state=state, blocks=blocks, concurrence=result)
