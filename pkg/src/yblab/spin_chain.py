"""Periodic spin-1/2 XXZ chain and its vertex-model correspondence.

Pauli matrices use the basis ``|0> = (1, 0)`` with ``sigma3 |0> = |0>``.
Products over bonds are ordered with ``k`` ascending from the left, the
last factor wrapping from site ``N`` onto site 1.
"""
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .lattice import CHAIN_LIMIT, cyclic_op, transfer_matrix
from .linalg import check_dim, embed_two_site, kron, mat_exp, max_abs, tensor_to_matrix
from .rmatrix import from_local_hamiltonian, six_vertex

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA1, SIGMA2, SIGMA3)

# errors at or below this are treated as exact in the order fit
ERROR_FLOOR = 1e-13


@dataclass(frozen=True)
class TrotterSpec:
    J: float
    z: complex
    L: int
    N: int
    epsilon: complex = field(init=False)

    def __post_init__(self):
        if self.L < 1:
            raise ValueError("L must be >= 1")
        if self.N < 2:
            raise ValueError("N must be >= 2")
        object.__setattr__(self, "epsilon", complex(self.z) / self.L)


def local_h(J):
    """Bond Hamiltonian ``s1 s1 + s2 s2 + J s3 s3`` on two sites (4x4)."""
    return kron(SIGMA1, SIGMA1) + kron(SIGMA2, SIGMA2) + J * kron(SIGMA3, SIGMA3)


def _chain_guard(N):
    if N < 2:
        raise ValueError("the periodic chain needs N >= 2 sites")
    check_dim(2 ** N, CHAIN_LIMIT, "spin chain")


def hamiltonian(J, N):
    _chain_guard(N)
    h = local_h(J)
    return sum(embed_two_site(h, k, N, 2) for k in range(1, N + 1))


def evolution(J, z, N):
    """``U(z) = exp(-z H)``."""
    return mat_exp(hamiltonian(J, N), -complex(z))


def trotter_transfer(J, eps, N):
    """``T(eps) = B_{1,2} B_{2,3} ... B_{N,1}`` with ``B = exp(-eps h)``."""
    _chain_guard(N)
    bond = mat_exp(local_h(J), -complex(eps))
    out = np.eye(2 ** N, dtype=complex)
    for k in range(1, N + 1):
        out = out @ embed_two_site(bond, k, N, 2)
    return out


def trotter_error(J, z, N, L):
    spec = TrotterSpec(J, z, L, N)
    u = evolution(J, z, N)
    approx = np.linalg.matrix_power(trotter_transfer(J, spec.epsilon, N), L)
    return max_abs(u - approx)


@dataclass
class TrotterOrder:
    L: list
    errors: list
    slope: float  # nan when fewer than two points are above the floor
    exact: bool
    excluded: list

    def to_json(self):
        return {
            "L": list(self.L),
            "errors": list(self.errors),
            "slope": self.slope,
            "exact": self.exact,
            "excluded": list(self.excluded),
        }


def trotter_order(J, z, N, L_list):
    """Least-squares slope of ``log ||U - T(z/L)^L||`` against ``log L``.

    Errors at or below ``ERROR_FLOOR`` are excluded from the fit; if fewer
    than two points remain the decomposition is reported as exact.
    """
    L_list = [int(L) for L in L_list]
    if len(L_list) < 3 or any(b <= a for a, b in zip(L_list, L_list[1:])):
        raise ValueError("L_list needs at least three strictly increasing values")
    errors = [trotter_error(J, z, N, L) for L in L_list]
    keep = [(L, e) for L, e in zip(L_list, errors) if e > ERROR_FLOOR]
    excluded = [L for L, e in zip(L_list, errors) if e <= ERROR_FLOOR]
    if len(keep) < 2:
        return TrotterOrder(L_list, errors, float("nan"), True, excluded)
    x = np.log([L for L, _ in keep])
    y = np.log([e for _, e in keep])
    slope = float(np.polyfit(x, y, 1)[0])
    return TrotterOrder(L_list, errors, slope, False, excluded)


def alpha_of_J(J):
    """Principal ``arccosh(J)``, branch with ``Re(alpha) >= 0``."""
    alpha = complex(np.arccosh(complex(J)))
    return -alpha if alpha.real < 0 else alpha


def epsilon_of_u(u, alpha):
    """Trotter step matching the six-vertex point ``u``: ``-sinh(u) / (2 sinh(alpha))``."""
    s = np.sinh(complex(alpha))
    if abs(s) == 0:
        raise ValueError("alpha = 0 is singular (sinh(alpha) = 0)")
    return complex(-0.5 * np.sinh(complex(u)) / s)


class Correspondence(NamedTuple):
    c: complex
    residual: float


def _alpha_for(J, alpha):
    alpha = alpha_of_J(J) if alpha is None else complex(alpha)
    if abs(np.sinh(alpha)) == 0:
        raise ValueError("singular alpha: J = 1 gives sinh(alpha) = 0")
    return alpha


def correspondence_residual(J, u, alpha=None):
    """Fit ``c`` minimising ``||c R_exact - R_6v||_2`` and return it with the max residual.

    ``R_exact`` is the R form of ``exp(-eps(u) h)`` for the XXZ bond and
    ``R_6v`` the six-vertex matrix at ``(alpha, u)`` with ``J = cosh(alpha)``.
    """
    alpha = _alpha_for(J, alpha)
    eps = epsilon_of_u(u, alpha)
    x = tensor_to_matrix(from_local_hamiltonian(local_h(J), eps)[1]).ravel()
    y = tensor_to_matrix(six_vertex(alpha, u)).ravel()
    c = complex(np.vdot(x, y) / np.vdot(x, x))
    return Correspondence(c, max_abs(c * x - y))


def correspondence_report(J, u, alpha=None):
    alpha = _alpha_for(J, alpha)
    u = complex(u)
    eps = epsilon_of_u(u, alpha)
    full = correspondence_residual(J, u, alpha)
    half = correspondence_residual(J, u / 2, alpha)
    return {
        "u": [u.real, u.imag],
        "epsilon": [eps.real, eps.imag],
        "c": [full.c.real, full.c.imag],
        "residual": full.residual,
        "halving_ratio": half.residual / full.residual if full.residual else float("nan"),
        "real_alpha": abs(alpha.imag) == 0,
    }


def spin_vertex_bridge_residual(J, eps, N):
    """``||T(eps) - C^dagger t(R(eps))||_max`` with ``R(eps)`` the R form of the bond operator."""
    _chain_guard(N)
    r = from_local_hamiltonian(local_h(J), eps)[1]
    t = transfer_matrix(r, N)
    c = cyclic_op(N, 2)
    return max_abs(trotter_transfer(J, eps, N) - c.conj().T @ t)
