import math

import numpy as np
import pytest

from ising_entanglement.lib.entanglement import (
    appendix_oracle,
    appendix_spectrum,
    appendix_state,
    concurrence,
    spin_flip,
    spin_flip_blocks,
)
from ising_entanglement.lib.errors import ParameterError
from ising_entanglement.lib.linalg4 import eigh
from ising_entanglement.lib.model import ModelParams, hamiltonian
from ising_entanglement.lib.sweeps import evaluate_grid
from ising_entanglement.lib.thermal import StateKind, density_matrix


def _draws(rng: np.random.Generator, n: int) -> list[ModelParams]:
    out = []
    for _ in range(n):
        T = 0.0 if rng.random() < 0.3 else float(rng.uniform(0.01, 5.0))
        out.append(
            ModelParams(
                J=1.0,
                B1=float(rng.uniform(0.0, 5.0)),
                B2=float(rng.uniform(0.0, 5.0)),
                theta1=0.0 if rng.random() < 0.8 else "pi",
                theta2=float(rng.uniform(0.0, np.pi)),
                T=T,
            )
        )
    return out


def test_closed_form_energies_example():
    spectrum = appendix_spectrum(ModelParams(J=1.0, B1=0.5, B2=1.0, theta2="0.5pi"))
    root5 = math.sqrt(5.0)
    assert spectrum.e_x_minus == pytest.approx(-0.5 - root5, abs=1e-14)
    assert spectrum.e_x_plus == pytest.approx(-0.5 + root5, abs=1e-14)
    assert spectrum.e_y_minus == pytest.approx(0.5 - root5, abs=1e-14)
    assert spectrum.e_y_plus == pytest.approx(0.5 + root5, abs=1e-14)


def test_closed_form_eigensystem_matches_numeric(rng: np.random.Generator):
    for p in _draws(rng, 1000):
        spectrum = appendix_spectrum(p)
        H = hamiltonian(p)
        np.testing.assert_allclose(np.sort(spectrum.energies()), eigh(H).values, atol=1e-10)
        v = spectrum.vectors()
        np.testing.assert_allclose(v.T @ v, np.eye(4), atol=1e-12)
        np.testing.assert_allclose(H @ v, v * spectrum.energies(), atol=1e-10)


def test_closed_form_state_matches_numeric(rng: np.random.Generator):
    for p in _draws(rng, 1000):
        oracle = appendix_state(p)
        numeric = density_matrix(p)
        np.testing.assert_allclose(oracle.matrix, numeric.matrix, atol=1e-10)
        assert oracle.kind == numeric.kind


def test_documented_thermal_case():
    p = ModelParams(J=1.0, B1=0.5, B2=1.0, theta2=np.pi / 3, T=0.5)
    np.testing.assert_allclose(appendix_state(p).matrix, density_matrix(p).matrix, atol=1e-10)


def test_spin_flip_blocks_reproduce_spin_flip_matrix(rng: np.random.Generator):
    for p in _draws(rng, 200):
        state = appendix_state(p)
        blocks = spin_flip_blocks(state)
        np.testing.assert_allclose(blocks.matrix(), spin_flip(state), atol=1e-12)
        squared = np.sort(concurrence(state).lambdas ** 2)
        np.testing.assert_allclose(squared, np.sort(blocks.eigenvalues()), atol=1e-10)


def test_oracle_lambdas_pair_up_and_concurrence_vanishes(rng: np.random.Generator):
    for p in _draws(rng, 500):
        result = appendix_oracle(p).concurrence
        lam = result.lambdas
        assert lam[0] == pytest.approx(lam[1], abs=1e-12)
        assert lam[2] == pytest.approx(lam[3], abs=1e-12)
        assert result.concurrence == 0.0


def test_ground_state_spin_flip_matrix_is_zero():
    p = ModelParams(J=1.0, B1=0.8, B2=1.7, theta2=1.1, T=0.0)
    result = appendix_oracle(p)
    assert result.state.kind is StateKind.GROUND
    assert result.state.degeneracy == 1
    np.testing.assert_allclose(result.blocks.matrix(), np.zeros((4, 4)), atol=1e-14)


def test_theta1_pi_flips_field_sign():
    p = ModelParams(J=1.0, B1=1.2, B2=0.6, theta1="pi", theta2=0.4, T=0.2)
    spectrum = appendix_spectrum(p)
    same = appendix_spectrum(p.replace(theta1=0.0, B1=0.0))
    assert spectrum.e_x_minus == pytest.approx(same.e_x_minus + 1.2)
    assert spectrum.e_y_minus == pytest.approx(same.e_y_minus - 1.2)


def test_oracle_requires_field_one_along_ising_axis():
    with pytest.raises(ParameterError) as info:
        appendix_oracle(ModelParams(theta1=0.1))
    assert info.value.field == "theta1"


def test_zero_concurrence_on_random_draws(rng: np.random.Generator):
    n = 10_000
    T = np.where(rng.random(n) < 0.5, 0.0, rng.uniform(0.01, 5.0, n))
    result = evaluate_grid(
        np.ones(n),
        rng.uniform(0.0, 5.0, n),
        rng.uniform(0.0, 5.0, n),
        np.zeros(n),
        rng.uniform(0.0, np.pi, n),
        T,
    )
    assert np.all(result.concurrence <= 1e-10)
