"""Shared fixtures: a deterministic hypothesis profile and seeded random draws."""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from ising_entanglement.lib.model import hamiltonian_matrix
from ising_entanglement.lib.thermal import gibbs_matrices

settings.register_profile(
    "deterministic",
    derandomize=True,
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")

SEED = 20240611


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


def draw_params(rng: np.random.Generator, n: int, T_max: float = 5.0) -> dict[str, np.ndarray]:
    """n random parameter points, J = 1, fields in [0, 5], angles in [0, pi], T in [0.01, T_max]."""
    return {
        "J": np.ones(n),
        "B1": rng.uniform(0.0, 5.0, n),
        "B2": rng.uniform(0.0, 5.0, n),
        "theta1": rng.uniform(0.0, np.pi, n),
        "theta2": rng.uniform(0.0, np.pi, n),
        "T": rng.uniform(0.01, T_max, n),
    }


def thermal_stack(params: dict[str, np.ndarray]) -> np.ndarray:
    H = hamiltonian_matrix(
        params["J"], params["B1"], params["B2"], params["theta1"], params["theta2"]
    )
    rho, _, _ = gibbs_matrices(H, params["T"])
    return rho


@pytest.fixture
def random_thermal_states(rng: np.random.Generator) -> Callable[[int], np.ndarray]:
    def make(n: int) -> np.ndarray:
        return thermal_stack(draw_params(rng, n))

    return make
