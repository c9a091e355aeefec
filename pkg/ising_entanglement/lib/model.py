"""
model.py

Two-qubit Ising Hamiltonian under site-dependent fields in the xz plane:

    H = 2J sz1 sz2 + B1 (cos t1 sz1 + sin t1 sx1) + B2 (cos t2 sz2 + sin t2 sx2)

All energies are in units of J, temperatures are k_B T / J.
"""

from __future__ import annotations

from typing import Any, Self

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ising_entanglement.lib.linalg4 import (
    IDENTITY2,
    SIGMA_X,
    SIGMA_Z,
    SymMatrix4,
    as_sym_matrix4,
    eigh,
    kron2,
)
from ising_entanglement.lib.utilities.angles import fold_angle, parse_angle

ISING_ZZ = kron2(SIGMA_Z, SIGMA_Z)
Z1 = kron2(SIGMA_Z, IDENTITY2)
X1 = kron2(SIGMA_X, IDENTITY2)
Z2 = kron2(IDENTITY2, SIGMA_Z)
X2 = kron2(IDENTITY2, SIGMA_X)

# exchanges |01> and |10>
SWAP = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]
)

PARAMETER_IDS = ("J", "B1", "B2", "theta1", "theta2", "T")
ANGLE_IDS = ("theta1", "theta2")


class ModelParams(BaseModel):
    """Physical inputs in reduced units.

    Angles accept radians or "<float>pi" literals and are folded onto [0, pi].
    """

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    J: float = Field(default=1.0, gt=0.0)
    B1: float = Field(default=0.0, ge=0.0)
    B2: float = Field(default=0.0, ge=0.0)
    theta1: float = 0.0
    theta2: float = 0.0
    T: float = Field(default=0.0, ge=0.0)

    @field_validator("theta1", "theta2", mode="before")
    @classmethod
    def _parse_angle(cls, value: Any) -> float:
        return fold_angle(parse_angle(value))

    def replace(self, **changes: Any) -> Self:
        """Validated copy with some fields changed."""
        return type(self).model_validate({**self.model_dump(), **changes})

    def swapped(self) -> Self:
        """The same physics with the two qubits exchanged."""
        return self.replace(B1=self.B2, B2=self.B1, theta1=self.theta2, theta2=self.theta1)


def hamiltonian_matrix(
    J: ArrayLike,
    B1: ArrayLike,
    B2: ArrayLike,
    theta1: ArrayLike,
    theta2: ArrayLike,
) -> NDArray[np.float64]:
    """Raw Hamiltonian for broadcastable parameter arrays, shape (..., 4, 4).

    No validation and no angle folding; ModelParams does both.
    """
    J, B1, B2, theta1, theta2 = np.broadcast_arrays(
        *(np.asarray(x, dtype=np.float64) for x in (J, B1, B2, theta1, theta2))
    )

    def term(coefficient: NDArray[np.float64], op: NDArray[np.float64]) -> NDArray[np.float64]:
        return coefficient[..., None, None] * op

    return (
        term(2.0 * J, ISING_ZZ)
        + term(B1 * np.cos(theta1), Z1)
        + term(B1 * np.sin(theta1), X1)
        + term(B2 * np.cos(theta2), Z2)
        + term(B2 * np.sin(theta2), X2)
    )


def hamiltonian(p: ModelParams) -> SymMatrix4:
    return as_sym_matrix4(hamiltonian_matrix(p.J, p.B1, p.B2, p.theta1, p.theta2))


def ground_energy(p: ModelParams) -> float:
    return float(eigh(hamiltonian(p)).values[0])


def field_components(p: ModelParams) -> tuple[float, float, float, float]:
    """(Bx1, Bz1, Bx2, Bz2) in units of J."""
    return (
        p.B1 * float(np.sin(p.theta1)),
        p.B1 * float(np.cos(p.theta1)),
        p.B2 * float(np.sin(p.theta2)),
        p.B2 * float(np.cos(p.theta2)),
    )
