import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import draw_params, thermal_stack
from ising_entanglement.lib.entanglement import (
    binary_entropy,
    concurrence,
    concurrence_bruteforce,
    entanglement_of_formation,
    from_lambdas,
    pure_state_concurrence,
    spin_flip,
)
from ising_entanglement.lib.errors import ConsistencyError, LinalgError, ParameterError
from ising_entanglement.lib.model import SWAP, ModelParams, hamiltonian_matrix
from ising_entanglement.lib.thermal import density_matrix, gibbs_matrices

SINGLET = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2.0)
PHI_PLUS = np.array([1.0, 0.0, 0.0, 1.0]) / math.sqrt(2.0)


@pytest.mark.parametrize("psi", [SINGLET, PHI_PLUS], ids=["singlet", "phi-plus"])
def test_bell_states_are_maximally_entangled(psi: np.ndarray):
    rho = np.outer(psi, psi)
    for route in (concurrence, concurrence_bruteforce):
        result = route(rho)
        assert result.concurrence == pytest.approx(1.0, abs=1e-12)
        assert result.eof == pytest.approx(1.0, abs=1e-9)


def test_singlet_spin_flip_eigenvalues():
    rho = np.outer(SINGLET, SINGLET)
    values = np.sort(np.linalg.eigvals(spin_flip(rho)).real)[::-1]
    np.testing.assert_allclose(values, [1.0, 0.0, 0.0, 0.0], atol=1e-12)


def test_spin_flip_of_product_basis_state_vanishes():
    rho = np.diag([1.0, 0.0, 0.0, 0.0])
    np.testing.assert_array_equal(spin_flip(rho), np.zeros((4, 4)))
    assert concurrence(rho).concurrence == 0.0


def test_classical_mixture_is_separable():
    rho = np.diag([0.5, 0.0, 0.0, 0.5])
    assert concurrence(rho).concurrence <= 1e-12
    assert concurrence_bruteforce(rho).concurrence <= 1e-12


def test_diagonal_states_are_separable(rng: np.random.Generator):
    w = rng.dirichlet(np.ones(4), size=200)
    rho = np.einsum("ni,ij->nij", w, np.eye(4))
    assert np.all(concurrence(rho).concurrence <= 1e-12)


def test_transverse_field_ground_state_concurrence():
    state = density_matrix(ModelParams(J=1.0, B1=1.0, B2=1.0, theta1="0.5pi", theta2="0.5pi"))
    result = concurrence(state)
    assert result.concurrence == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-12)
    assert result.eof == pytest.approx(0.60088, abs=1e-5)
    assert result.lambdas.shape == (4,)
    assert np.all(np.diff(result.lambdas) <= 0.0)


def test_field_along_ising_axis_gives_no_entanglement():
    state = density_matrix(ModelParams(J=1.0, B1=0.7, B2=1.3, theta2="0.4pi", T=0.3))
    assert concurrence(state).concurrence <= 1e-10


def test_dual_routes_agree_on_thermal_states(random_thermal_states):
    rho = random_thermal_states(1000)
    primary = concurrence(rho)
    brute = concurrence_bruteforce(rho)
    np.testing.assert_allclose(primary.concurrence, brute.concurrence, atol=1e-9)
    assert primary.concurrence.shape == (1000,)


def test_dual_routes_agree_on_random_mixed_states(rng: np.random.Generator):
    a = rng.normal(size=(1000, 4, 4))
    rho = a @ np.swapaxes(a, -1, -2)
    rho /= np.trace(rho, axis1=-2, axis2=-1)[:, None, None]
    np.testing.assert_allclose(
        concurrence(rho).concurrence, concurrence_bruteforce(rho).concurrence, atol=1e-9
    )


def test_pure_states_match_closed_form(rng: np.random.Generator):
    psi = rng.normal(size=(1000, 4))
    psi /= np.linalg.norm(psi, axis=-1, keepdims=True)
    rho = np.einsum("ni,nj->nij", psi, psi)
    expected = pure_state_concurrence(psi)
    np.testing.assert_allclose(concurrence(rho).concurrence, expected, atol=1e-10)
    np.testing.assert_allclose(concurrence_bruteforce(rho).concurrence, expected, atol=1e-10)


def test_pure_state_concurrence_normalises():
    assert pure_state_concurrence([1.0, 0.0, 0.0, 1.0]) == pytest.approx(1.0)
    assert pure_state_concurrence([1.0, 0.0, 0.0, 0.0]) == 0.0


def test_concurrence_is_invariant_under_qubit_swap(random_thermal_states):
    rho = random_thermal_states(500)
    swapped = SWAP @ rho @ SWAP
    np.testing.assert_allclose(concurrence(rho).concurrence, concurrence(swapped).concurrence, atol=1e-10)


def test_non_psd_input_is_rejected():
    with pytest.raises(LinalgError):
        concurrence(np.diag([1.5, -0.5, 0.0, 0.0]))


def test_lambdas_above_one_are_inconsistent():
    with pytest.raises(ConsistencyError):
        from_lambdas([2.0, 0.0, 0.0, 0.0])


def test_lambdas_are_floored_and_sorted():
    result = from_lambdas([1e-13, 0.2, 0.9, 0.1])
    np.testing.assert_array_equal(result.lambdas, [0.9, 0.2, 0.1, 0.0])
    assert result.concurrence == pytest.approx(0.6)


def test_binary_entropy():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    np.testing.assert_allclose(binary_entropy([0.25, 0.75]), 2 * [0.8112781244591328])


def test_entanglement_of_formation_endpoints_and_monotonicity():
    assert entanglement_of_formation(0.0) == 0.0
    assert entanglement_of_formation(1.0) == 1.0
    assert entanglement_of_formation(1.0 / math.sqrt(2.0)) == pytest.approx(0.60088, abs=1e-5)
    e = entanglement_of_formation(np.linspace(0.0, 1.0, 101))
    assert np.all(np.diff(e) > 0.0)


@pytest.mark.parametrize("c", [-0.1, 1.5, float("nan")])
def test_entanglement_of_formation_rejects_out_of_range(c: float):
    with pytest.raises(ParameterError):
        entanglement_of_formation(c)


def test_invariant_suite_on_random_parameters(rng: np.random.Generator):
    n = 10_000
    params = draw_params(rng, n)
    params["T"] = np.where(rng.random(n) < 0.25, 0.0, params["T"])
    rho = thermal_stack(params)
    np.testing.assert_allclose(np.trace(rho, axis1=-2, axis2=-1), 1.0, atol=1e-12)
    assert np.all(np.linalg.eigvalsh(rho) >= -1e-12)

    c = concurrence(rho).concurrence
    assert np.all((c >= 0.0) & (c <= 1.0))

    def c_of(B1, B2, theta1, theta2, T=params["T"]):
        H = hamiltonian_matrix(params["J"], B1, B2, theta1, theta2)
        return concurrence(gibbs_matrices(H, T)[0]).concurrence

    B1, B2, t1, t2 = params["B1"], params["B2"], params["theta1"], params["theta2"]
    np.testing.assert_allclose(c_of(B2, B1, t2, t1), c, atol=1e-10)
    np.testing.assert_allclose(c_of(B1, B2, -t1, -t2), c, atol=1e-10)
    np.testing.assert_allclose(c_of(B1, B2, np.pi - t1, np.pi - t2), c, atol=1e-10)
    assert np.all(c_of(B1, B2, t1, t2, T=np.full(n, 1e6)) <= 1e-12)
    assert np.all(c_of(np.zeros(n), np.zeros(n), t1, t2) <= 1e-12)


@given(
    B1=st.floats(0.0, 5.0),
    B2=st.floats(0.0, 5.0),
    theta1=st.floats(-10.0, 10.0),
    theta2=st.floats(-10.0, 10.0),
    T=st.one_of(st.just(0.0), st.floats(0.01, 5.0)),
)
def test_concurrence_properties(B1: float, B2: float, theta1: float, theta2: float, T: float):
    p = ModelParams(B1=B1, B2=B2, theta1=theta1, theta2=theta2, T=T)
    result = concurrence(density_matrix(p))
    assert 0.0 <= result.concurrence <= 1.0
    assert np.all(result.lambdas >= 0.0)
    assert concurrence(density_matrix(p.swapped())).concurrence == pytest.approx(
        result.concurrence, abs=1e-10
    )
