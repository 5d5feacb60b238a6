"""L-operator realisation of the RTT algebra for ``U_q(sl(2))`` at ``|q| = 1``.

Relations adopted (standard presentation)::

    k x+ k^-1 = q^2 x+,   k x- k^-1 = q^-2 x-,   [x+, x-] = (k - k^-1) / (q - q^-1)

Square roots use the principal branch ``q^(1/2) = exp(i gamma / 2)``.

The T-operators ``T(lam) = f(lam) L+ - f(lam)^-1 L-`` are checked against the
RTT relation with the gauge six-vertex R-matrix evaluated at
``delta = (lam - mu) / i``. Three candidates for the factor ``f`` are
compared by :func:`convention_search`.
"""
from dataclasses import dataclass

import numpy as np

from .errors import ConventionError
from .lattice import rtt_residual
from .linalg import commutator, max_abs
from .rmatrix import gauge_six_vertex

UNIMODULAR_TOL = 1e-12
SELECT_TOL = 1e-8

CONVENTIONS = {
    "exp(lambda*gamma)": lambda lam, gamma: np.exp(lam * gamma),
    "exp(i*lambda*gamma)": lambda lam, gamma: np.exp(1j * lam * gamma),
    # lambda = i delta, so exp(gamma delta) = exp(-i lambda gamma)
    "exp(gamma*delta)": lambda lam, gamma: np.exp(gamma * lam / 1j),
}

DEFAULT_PAIRS = ((0.9, 0.4), (1.3, 0.2), (0.5, 0.1))


@dataclass(frozen=True, eq=False)
class UqSl2Rep:
    gamma: float
    x_plus: np.ndarray
    x_minus: np.ndarray
    k: np.ndarray
    k_half: np.ndarray

    @property
    def q(self):
        return np.exp(1j * self.gamma)

    @property
    def dim(self):
        return self.k.shape[0]


def _check_gamma(gamma):
    gamma = float(gamma)
    if abs(np.sin(gamma)) < UNIMODULAR_TOL:
        raise ValueError("q = exp(i gamma) must not be +1 or -1")
    return gamma


def standard_rep(gamma):
    """Two-dimensional representation with ``x+ = q^(1/2) E12``, ``x- = q^(-1/2) E21``, ``k = diag(q, 1/q)``."""
    gamma = _check_gamma(gamma)
    qh = np.exp(0.5j * gamma)
    x_plus = np.array([[0, qh], [0, 0]], dtype=complex)
    x_minus = np.array([[0, 0], [1 / qh, 0]], dtype=complex)
    k = np.diag([qh ** 2, qh ** -2]).astype(complex)
    k_half = np.diag([qh, 1 / qh]).astype(complex)
    return UqSl2Rep(gamma, x_plus, x_minus, k, k_half)


def _inverse(m):
    if abs(np.linalg.det(m)) < 1e-14:
        raise ValueError("k is singular")
    return np.linalg.inv(m)


def relations_residual(rep):
    q = rep.q
    if abs(q - 1 / q) < UNIMODULAR_TOL:
        raise ValueError("q = +-1: relations are singular")
    k_inv = _inverse(rep.k)
    r_plus = max_abs(rep.k @ rep.x_plus @ k_inv - q ** 2 * rep.x_plus)
    r_minus = max_abs(rep.k @ rep.x_minus @ k_inv - q ** -2 * rep.x_minus)
    r_comm = max_abs(commutator(rep.x_plus, rep.x_minus) - (rep.k - k_inv) / (q - 1 / q))
    return max(r_plus, r_minus, r_comm)


@dataclass(frozen=True, eq=False)
class LOperators:
    """``L_plus[a, b]`` and ``L_minus[a, b]`` are the operator entries (shape ``(2, 2, d, d)``)."""

    L_plus: np.ndarray
    L_minus: np.ndarray


def l_operators(rep):
    q = rep.q
    qh = np.exp(0.5j * rep.gamma)
    kh = rep.k_half
    kh_inv = _inverse(kh)
    zero = np.zeros_like(rep.k)
    lp = qh * np.array([[kh, (q - 1 / q) * rep.x_minus], [zero, kh_inv]])
    lm = (1 / qh) * np.array([[kh_inv, zero], [-(q - 1 / q) * rep.x_plus, kh]])
    return LOperators(lp, lm)


def build_T(rep, lam, convention="exp(lambda*gamma)"):
    """``T(lam)[a, b] = f L+[a, b] - f^-1 L-[a, b]`` for the chosen exponential factor ``f``."""
    try:
        f = complex(CONVENTIONS[convention](complex(lam), rep.gamma))
    except KeyError:
        raise ValueError(f"unknown convention {convention!r}") from None
    ops = l_operators(rep)
    return f * ops.L_plus - ops.L_minus / f


def rtt_l_residual(gamma, lam, mu, convention="exp(lambda*gamma)"):
    rep = standard_rep(gamma)
    r12 = gauge_six_vertex(rep.gamma, (complex(lam) - complex(mu)) / 1j)
    return rtt_residual(r12, build_T(rep, lam, convention), build_T(rep, mu, convention))


def convention_search(gamma, sample_pairs=DEFAULT_PAIRS):
    """Pick the factor convention for which the RTT relation holds on every sample pair.

    Returns ``(winner, table)`` with ``table[name]`` the residual per pair.
    Raises :class:`ConventionError` unless exactly one convention stays
    below ``SELECT_TOL`` on all pairs.
    """
    pairs = [(complex(a), complex(b)) for a, b in sample_pairs]
    if len(pairs) < 3:
        raise ValueError("convention_search needs at least three (lambda, mu) pairs")
    table = {
        name: [rtt_l_residual(gamma, lam, mu, name) for lam, mu in pairs]
        for name in CONVENTIONS
    }
    passing = [name for name, res in table.items() if max(res) <= SELECT_TOL]
    if not passing:
        raise ConventionError("no convention satisfies the RTT relation", table)
    if len(passing) > 1:
        raise ConventionError(
            f"insufficient discrimination: {', '.join(passing)} all pass", table
        )
    return passing[0], table


def convention_report(winner, table):
    return {"winner": winner, "table": {k: list(v) for k, v in table.items()}}


def star_check(rep):
    """Residuals of the twisted star ``x+* = x-, k* = k^-1`` and of the Hopf star (hermitian generators)."""
    if abs(abs(rep.q) - 1) > UNIMODULAR_TOL:
        raise ValueError("star check assumes |q| = 1")
    k_inv = _inverse(rep.k)
    twisted = max(
        max_abs(rep.x_plus.conj().T - rep.x_minus),
        max_abs(rep.k.conj().T - k_inv),
    )
    per_generator = {
        "x_plus": max_abs(rep.x_plus.conj().T - rep.x_plus),
        "x_minus": max_abs(rep.x_minus.conj().T - rep.x_minus),
        "k": max_abs(rep.k.conj().T - rep.k),
    }
    return {
        "twisted_residual": twisted,
        "hopf_residual": min(per_generator.values()),
        "hermiticity": per_generator,
    }
