import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import single_site_op, xxz_hamiltonian_pauli
from yblab.errors import SizeGuardError
from yblab.lattice import cyclic_op
from yblab.linalg import commutator, embed_two_site, max_abs
from yblab.spin_chain import (
    ERROR_FLOOR,
    PAULI,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    TrotterSpec,
    alpha_of_J,
    correspondence_report,
    correspondence_residual,
    epsilon_of_u,
    evolution,
    hamiltonian,
    local_h,
    spin_vertex_bridge_residual,
    trotter_error,
    trotter_order,
    trotter_transfer,
)


def levi_civita(a, b, c):
    return {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (0, 2, 1): -1, (2, 1, 0): -1, (1, 0, 2): -1}.get((a, b, c), 0)


def test_pauli_algebra():
    for a, b in itertools.product(range(3), repeat=2):
        sa, sb = PAULI[a], PAULI[b]
        expected = sum(2j * levi_civita(a, b, c) * PAULI[c] for c in range(3))
        assert max_abs(commutator(sa, sb) - expected) <= 1e-15
        assert max_abs(sa @ sb + sb @ sa - 2 * (a == b) * np.eye(2)) <= 1e-15


def test_pauli_basis_convention():
    np.testing.assert_array_equal(SIGMA3 @ [1, 0], [1, 0])
    np.testing.assert_array_equal(SIGMA1, [[0, 1], [1, 0]])
    np.testing.assert_array_equal(SIGMA2, [[0, -1j], [1j, 0]])


@pytest.mark.parametrize("J", [0.0, 1.0, -0.4, 2.5])
def test_local_h_closed_form(J):
    expected = [[J, 0, 0, 0], [0, -J, 2, 0], [0, 2, -J, 0], [0, 0, 0, J]]
    np.testing.assert_allclose(local_h(J), expected, atol=1e-15)
    assert max_abs(local_h(J) - local_h(J).conj().T) == 0


def test_local_h_spectrum_isotropic():
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(local_h(1.0))), [-3, 1, 1, 1], atol=1e-12)


@pytest.mark.parametrize("J,N", [(1.0, 2), (0.5, 3), (2.0, 4), (-1.3, 5)])
def test_hamiltonian_against_pauli_strings(J, N):
    np.testing.assert_allclose(hamiltonian(J, N), xxz_hamiltonian_pauli(J, N, PAULI), atol=1e-12)


def test_hamiltonian_two_sites_doubles():
    np.testing.assert_allclose(hamiltonian(0.8, 2), 2 * local_h(0.8), atol=1e-15)


def test_hamiltonian_traceless_hermitian():
    h = hamiltonian(1.0, 3)
    assert abs(np.trace(h)) < 1e-12
    assert max_abs(h - h.conj().T) == 0


def test_non_adjacent_bonds_commute():
    h = local_h(0.7)
    assert max_abs(commutator(embed_two_site(h, 1, 5, 2), embed_two_site(h, 3, 5, 2))) == 0
    assert max_abs(commutator(embed_two_site(h, 1, 5, 2), embed_two_site(h, 2, 5, 2))) > 1


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_hamiltonian_translation_invariant(N):
    assert max_abs(commutator(hamiltonian(1.3, N), cyclic_op(N))) <= 1e-12


def test_magnetization_conserved():
    # total sigma3 commutes with the XXZ chain for any J
    N = 4
    sz = sum(single_site_op(SIGMA3, k, N) for k in range(1, N + 1))
    assert max_abs(commutator(hamiltonian(0.3, N), sz)) < 1e-12


def test_hamiltonian_guards():
    with pytest.raises(ValueError):
        hamiltonian(1.0, 1)
    with pytest.raises(SizeGuardError):
        hamiltonian(1.0, 13)


def test_evolution_at_zero():
    np.testing.assert_allclose(evolution(1.0, 0, 3), np.eye(8), atol=1e-15)


@settings(max_examples=10, deadline=None)
@given(t=st.floats(-2.0, 2.0), N=st.integers(2, 6), J=st.floats(-2, 2))
def test_evolution_unitary_for_imaginary_z(t, N, J):
    u = evolution(J, 1j * t, N)
    assert max_abs(u @ u.conj().T - np.eye(2 ** N)) <= 1e-10


def test_evolution_positive_for_real_z():
    u = evolution(1.0, 0.4, 4)
    assert max_abs(u - u.conj().T) < 1e-12
    assert np.linalg.eigvalsh(u).min() > 0


def test_evolution_spectral_oracle():
    h = hamiltonian(0.6, 4)
    w, v = np.linalg.eigh(h)
    oracle = v @ np.diag(np.exp(-0.7 * w)) @ v.conj().T
    assert max_abs(evolution(0.6, 0.7, 4) - oracle) <= 1e-12 * max_abs(oracle)


def test_trotter_spec():
    spec = TrotterSpec(1.0, 0.5j, 8, 4)
    assert spec.epsilon == 0.5j / 8
    with pytest.raises(ValueError):
        TrotterSpec(1.0, 0.5, 0, 4)
    with pytest.raises(ValueError):
        TrotterSpec(1.0, 0.5, 4, 1)


def test_trotter_transfer_at_zero():
    np.testing.assert_allclose(trotter_transfer(1.0, 0, 4), np.eye(16), atol=1e-15)


def test_trotter_transfer_ordering():
    # leftmost factor is the (1,2) bond, rightmost the wrap bond (N,1)
    from yblab.linalg import mat_exp

    J, eps, N = 0.7, 0.3, 3
    bond = mat_exp(local_h(J), -eps)
    b = [embed_two_site(bond, k, N, 2) for k in range(1, N + 1)]
    np.testing.assert_allclose(trotter_transfer(J, eps, N), b[0] @ b[1] @ b[2], atol=1e-14)
    assert max_abs(trotter_transfer(J, eps, N) - b[2] @ b[1] @ b[0]) > 1e-3


def test_trotter_two_sites_exact():
    assert trotter_error(1.0, 0.5, 2, 8) < 1e-12
    assert trotter_error(1.0, 0.5j, 2, 8) < 1e-12


def test_trotter_error_decreases():
    errs = [trotter_error(1.0, 0.5, 4, L) for L in (8, 16, 32)]
    assert errs[0] > errs[1] > errs[2]


@pytest.mark.parametrize("J", [0.5, 1.0, 2.0])
@pytest.mark.parametrize("z", [0.5, 0.5j])
def test_trotter_first_order(J, z):
    rep = trotter_order(J, z, 4, [8, 16, 32, 64])
    assert not rep.exact
    assert -1.2 <= rep.slope <= -0.8


def test_trotter_order_two_sites_reported_exact():
    rep = trotter_order(1.0, 0.5, 2, [8, 16, 32, 64])
    assert rep.exact and math.isnan(rep.slope)
    assert rep.excluded == [8, 16, 32, 64]
    assert max(rep.errors) <= ERROR_FLOOR
    obj = rep.to_json()
    assert set(obj) >= {"L", "errors", "slope"}


def test_trotter_order_rejects_bad_lists():
    with pytest.raises(ValueError):
        trotter_order(1.0, 0.5, 4, [8, 16])
    with pytest.raises(ValueError):
        trotter_order(1.0, 0.5, 4, [8, 32, 16])


def test_alpha_of_J():
    assert alpha_of_J(2.0) == pytest.approx(math.acosh(2.0), abs=1e-15)
    assert alpha_of_J(1.0) == 0
    a = alpha_of_J(0.5)
    assert a.real >= 0 and np.cosh(a) == pytest.approx(0.5)


def test_epsilon_of_u_values():
    alpha = alpha_of_J(2.0)
    assert epsilon_of_u(0, alpha) == 0
    assert np.sinh(alpha) == pytest.approx(math.sqrt(3), abs=1e-15)
    eps = epsilon_of_u(0.2, alpha)
    assert eps == pytest.approx(-math.sinh(0.2) / (2 * math.sqrt(3)), abs=1e-15)
    assert eps.real == pytest.approx(-0.058120697632331915, abs=1e-15)


def test_epsilon_of_u_imaginary():
    eps = epsilon_of_u(0.3j, alpha_of_J(2.0))
    assert eps.real == 0 and eps.imag != 0


def test_epsilon_of_u_singular():
    with pytest.raises(ValueError):
        epsilon_of_u(0.2, 0.0)


def test_correspondence_at_zero():
    c, res = correspondence_residual(2.0, 0.0)
    assert res < 1e-15
    assert c == pytest.approx(math.sinh(alpha_of_J(2.0).real))


def test_correspondence_residual_bounded():
    alpha = alpha_of_J(2.0)
    eps = epsilon_of_u(0.2, alpha)
    _, res = correspondence_residual(2.0, 0.2)
    assert res / abs(eps) ** 2 <= 10


def test_correspondence_measured_scaling():
    # measured: the fitted residual halves by about 1/8 (third order), see notes
    r1 = correspondence_residual(2.0, 0.2).residual
    r2 = correspondence_residual(2.0, 0.1).residual
    assert r2 / r1 == pytest.approx(0.119, abs=0.01)
    r3 = correspondence_residual(2.0, 0.05).residual
    assert r3 / r2 == pytest.approx(0.125, abs=0.01)


def test_correspondence_least_squares_optimal():
    # perturbing the fitted scalar can only increase the 2-norm misfit
    from yblab.linalg import tensor_to_matrix
    from yblab.rmatrix import from_local_hamiltonian, six_vertex

    alpha = alpha_of_J(2.0)
    eps = epsilon_of_u(0.2, alpha)
    x = tensor_to_matrix(from_local_hamiltonian(local_h(2.0), eps)[1])
    y = tensor_to_matrix(six_vertex(alpha, 0.2))
    c = correspondence_residual(2.0, 0.2).c
    best = np.linalg.norm(c * x - y)
    for d in (1e-3, -1e-3, 1e-3j):
        assert np.linalg.norm((c + d) * x - y) > best


def test_correspondence_singular():
    with pytest.raises(ValueError):
        correspondence_residual(1.0, 0.2)


def test_correspondence_report_fields():
    rep = correspondence_report(2.0, 0.2)
    assert set(rep) >= {"u", "epsilon", "c", "residual", "halving_ratio"}
    assert rep["real_alpha"]
    assert not correspondence_report(0.5, 0.2)["real_alpha"]


def test_bridge_at_zero():
    assert spin_vertex_bridge_residual(1.0, 0.0, 3) < 1e-15


@pytest.mark.parametrize("N", [2, 3, 4])
def test_bridge_second_order(N):
    r1 = spin_vertex_bridge_residual(1.0, 0.1, N)
    r2 = spin_vertex_bridge_residual(1.0, 0.05, N)
    assert 0.15 <= r2 / r1 <= 0.40
    assert r1 <= 10 * 0.1 ** 2
