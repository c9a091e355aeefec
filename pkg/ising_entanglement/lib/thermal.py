"""
thermal.py

Gibbs density matrices rho = exp(-H/T)/Z in reduced units (T = k_B T / J),
and the T = 0 limit in which only the ground level is populated.

Boltzmann weights always use energies shifted by the ground energy E0, so
exp() never overflows however small T gets. The unshifted partition function
is Z = z * exp(-E0 / T); log_z carries it without overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ising_entanglement.lib.errors import ParameterError
from ising_entanglement.lib.linalg4 import Spectrum4, SymMatrix4, eigh, from_spectrum
from ising_entanglement.lib.model import ModelParams, hamiltonian

DEGENERACY_RTOL = 1e-9


class StateKind(StrEnum):
    THERMAL = "thermal"
    GROUND = "ground"


@dataclass(frozen=True)
class DensityMatrix:
    """Unit-trace PSD two-qubit state with its provenance.

    temperature is 0 for ground states; degeneracy is the number of
    equally populated ground levels (1 for thermal states).
    """

    matrix: SymMatrix4
    kind: StateKind
    temperature: float = 0.0
    degeneracy: int = 1

    def trace(self) -> float:
        return float(np.trace(self.matrix))


@dataclass(frozen=True)
class PartitionValue:
    """Partition function of the shifted spectrum, z = sum_i exp(-(E_i - E0)/T)."""

    z: float
    beta: float
    shift: float

    @property
    def log_z(self) -> float:
        """ln of the unshifted partition function tr exp(-H/T)."""
        return math.log(self.z) - self.beta * self.shift

    @property
    def paper_z(self) -> float:
        """tr exp(-H/T); may overflow to inf for very small T."""
        try:
            return math.exp(self.log_z)
        except OverflowError:
            return math.inf


def degeneracy_tolerance(energies: ArrayLike) -> NDArray[np.float64]:
    """Scale-aware level grouping tolerance, 1e-9 * (E3 - E0 + 1)."""
    e = np.asarray(energies, dtype=np.float64)
    return DEGENERACY_RTOL * (e[..., -1] - e[..., 0] + 1.0)


def gibbs_weights(
    energies: ArrayLike, T: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Normalised Boltzmann weights and shifted partition function.

    Energies must be sorted ascending along the last axis. Entries with T == 0
    get the ground-level mixture instead (uniform over the degenerate ground
    levels), which is the T -> 0+ limit of the same weights.

    Returns:
        (weights, z) with z == 0 where T == 0.
    """
    e = np.asarray(energies, dtype=np.float64)
    temperature = np.broadcast_to(np.asarray(T, dtype=np.float64), e.shape[:-1])
    shifted = e - e[..., :1]

    hot = temperature > 0.0
    # divide rather than multiply by 1/T: 1/T overflows for subnormal T
    exponent = np.divide(
        -shifted, temperature[..., None], out=np.zeros_like(shifted), where=hot[..., None]
    )
    boltzmann = np.exp(exponent)
    z = np.sum(boltzmann, axis=-1)
    thermal = boltzmann / z[..., None]

    ground_levels = (shifted <= degeneracy_tolerance(e)[..., None]).astype(np.float64)
    ground = ground_levels / np.sum(ground_levels, axis=-1, keepdims=True)

    weights = np.where(hot[..., None], thermal, ground)
    return weights, np.where(hot, z, 0.0)


def gibbs_matrices(
    hamiltonians: ArrayLike, T: ArrayLike
) -> tuple[SymMatrix4, NDArray[np.int64], Spectrum4]:
    """Density matrices for a stack of Hamiltonians at matching temperatures.

    Returns:
        (rho, degeneracy, spectrum); degeneracy is 1 where T > 0.
    """
    spectrum = eigh(hamiltonians)
    weights, _ = gibbs_weights(spectrum.values, T)
    temperature = np.broadcast_to(np.asarray(T, dtype=np.float64), weights.shape[:-1])
    degeneracy = np.where(
        temperature > 0.0, 1, np.count_nonzero(weights > 0.0, axis=-1)
    ).astype(np.int64)
    return from_spectrum(weights, spectrum.vectors), degeneracy, spectrum


def thermal_state(p: ModelParams) -> DensityMatrix:
    """Gibbs state at p.T > 0.

    Raises:
        ParameterError: if T is 0 (use ground_state for that).
    """
    if p.T <= 0.0:
        raise ParameterError("T", "thermal_state requires T > 0; use ground_state at T = 0")
    rho, _, _ = gibbs_matrices(hamiltonian(p), p.T)
    return DensityMatrix(matrix=rho, kind=StateKind.THERMAL, temperature=p.T)


def ground_state(p: ModelParams) -> DensityMatrix:
    """Uniform mixture over the ground eigenspace (the pure ground state when non-degenerate).

    p.T is ignored.
    """
    rho, degeneracy, _ = gibbs_matrices(hamiltonian(p), 0.0)
    return DensityMatrix(matrix=rho, kind=StateKind.GROUND, degeneracy=int(degeneracy))


def density_matrix(p: ModelParams) -> DensityMatrix:
    return thermal_state(p) if p.T > 0.0 else ground_state(p)


def partition_function(p: ModelParams) -> PartitionValue:
    if p.T <= 0.0:
        raise ParameterError("T", "partition function requires T > 0")
    energies = eigh(hamiltonian(p)).values
    _, z = gibbs_weights(energies, p.T)
    return PartitionValue(z=float(z), beta=1.0 / p.T, shift=float(energies[0]))


def free_energy(p: ModelParams) -> float:
    """F = -T ln Z in units of J."""
    return -p.T * partition_function(p).log_z
