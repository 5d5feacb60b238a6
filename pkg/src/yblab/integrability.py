"""Residual checks for the Yang-Baxter equation and star classification.

Slot embeddings on the three-fold space ``V1 (x) V2 (x) V3`` (matrix
reading of :func:`yblab.linalg.tensor_to_matrix`)::

    R12 = R (x) I
    R23 = I (x) R
    R13 = (I (x) P) (R (x) I) (I (x) P)

All checks return raw residuals; verdicts only compare them with ``tol``.
"""
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    as_tensor,
    max_abs,
    permutation_op,
    swap_outputs,
    tensor_to_matrix,
)
from .rmatrix import from_local_hamiltonian, is_hermitian

ARGUMENT_TOL = 1e-12


def slot_matrices(t):
    """Return ``(X12, X13, X23)`` for a vertex tensor ``t``."""
    m = tensor_to_matrix(t)
    n = as_tensor(t).shape[0]
    eye = np.eye(n, dtype=complex)
    p23 = np.kron(eye, permutation_op(n))
    x12 = np.kron(m, eye)
    x23 = np.kron(eye, m)
    x13 = p23 @ x12 @ p23
    return x12, x13, x23


def _pair_json(z):
    z = complex(z)
    return [z.real, z.imag]


@dataclass(frozen=True)
class YbeReport:
    residual: float
    lhs_norm: float
    lam: complex
    mu: complex

    @property
    def relative(self):
        return self.residual / max(self.lhs_norm, 1.0)

    def to_json(self):
        return {
            "residual": self.residual,
            "lhs_norm": self.lhs_norm,
            "lambda": _pair_json(self.lam),
            "mu": _pair_json(self.mu),
        }


def ybe_residual(family, lam, mu):
    """Max-abs residual of ``R12(l-m) R13(l) R23(m) = R23(m) R13(l) R12(l-m)``.

    ``family`` is any callable mapping a spectral point to an R-form vertex
    tensor (e.g. :class:`yblab.rmatrix.SpectralRFamily`).
    """
    lam, mu = complex(lam), complex(mu)
    a12 = slot_matrices(family(lam - mu))[0]
    b13 = slot_matrices(family(lam))[1]
    c23 = slot_matrices(family(mu))[2]
    lhs = a12 @ b13 @ c23
    rhs = c23 @ b13 @ a12
    return YbeReport(max_abs(lhs - rhs), max_abs(lhs), lam, mu)


def ybe_residual_b_form(family, theta12, theta13, theta23):
    """Yang-Baxter residual in scattering form, ``B = `` (swap of outputs of) ``R``.

    With the composite-index reading used here (row = outgoing pair) the
    scattering relation reads::

        B12(t12) B23(t13) B12(t23) = B23(t23) B12(t13) B23(t12)

    which is the R-form relation at ``lambda = t13``, ``mu = t12`` conjugated
    by the swap of slots 1 and 3, so both residuals agree entrywise up to
    rounding. Requires ``t12 = t13 - t23``.
    """
    theta12, theta13, theta23 = complex(theta12), complex(theta13), complex(theta23)
    if abs(theta12 - (theta13 - theta23)) > ARGUMENT_TOL:
        raise ValueError("rapidity differences must satisfy theta12 = theta13 - theta23")

    def b_slots(theta):
        x12, _, x23 = slot_matrices(swap_outputs(family(theta)))
        return x12, x23

    b12_12, b23_12 = b_slots(theta12)
    b12_13, b23_13 = b_slots(theta13)
    b12_23, b23_23 = b_slots(theta23)
    lhs = b12_12 @ b23_13 @ b12_23
    rhs = b23_23 @ b12_13 @ b23_12
    return YbeReport(max_abs(lhs - rhs), max_abs(lhs), theta13, theta12)


def unitarity_residual(b):
    m = tensor_to_matrix(b)
    eye = np.eye(m.shape[0])
    return max(max_abs(m @ m.conj().T - eye), max_abs(m.conj().T @ m - eye))


def hermiticity_residual(r):
    m = tensor_to_matrix(r)
    return max_abs(m - m.conj().T)


def symmetry_residual(r):
    """Deviation from ``R_{ij}^{kl} = R_{kl}^{ij}``."""
    m = tensor_to_matrix(r)
    return max_abs(m - m.T)


VERDICTS = ("hopf", "twisted", "both", "none")


@dataclass(frozen=True)
class StarReport:
    unitarity_residual: float
    hermiticity_residual: float
    symmetry_residual: float
    verdict: str
    tol: float

    def to_json(self):
        return {
            "unitarity": self.unitarity_residual,
            "hermiticity": self.hermiticity_residual,
            "symmetry": self.symmetry_residual,
            "verdict": self.verdict,
            "tol": self.tol,
        }


def _verdict(unitary, hermitian):
    if unitary and hermitian:
        return "both"
    if unitary:
        return "hopf"
    if hermitian:
        return "twisted"
    return "none"


def classify_star(x, tol=DEFAULT_TOL, form="B"):
    """Classify the star structure induced by a vertex tensor.

    Unitarity is tested on the scattering form B and hermiticity/symmetry on
    the R form; ``form`` says which one ``x`` is ("B" or "R"), the other is
    obtained by swapping the outgoing indices.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if form not in ("B", "R"):
        raise ValueError(f"form must be 'B' or 'R', got {form!r}")
    x = as_tensor(x)
    b, r = (x, swap_outputs(x)) if form == "B" else (swap_outputs(x), x)
    u = unitarity_residual(b)
    h = hermiticity_residual(r)
    s = symmetry_residual(r)
    return StarReport(u, h, s, _verdict(u <= tol, h <= tol), tol)


def wick_scan(h, radius, samples, tol=DEFAULT_TOL):
    """Classify ``exp(-z h)`` along the real and imaginary z segments.

    Returns ``[(z, StarReport), ...]``: ``samples`` points on ``[0, radius]``
    followed by ``samples - 1`` points on ``(0, i radius]``.
    """
    if not is_hermitian(h):
        raise ValueError("local Hamiltonian must be hermitian")
    if samples < 2:
        raise ValueError("samples must be >= 2")
    ts = np.linspace(0.0, float(radius), int(samples))
    zs = [complex(t) for t in ts] + [1j * t for t in ts[1:]]
    return [(z, classify_star(from_local_hamiltonian(h, z)[0], tol)) for z in zs]


def wick_verdict_flip(scan):
    """True if the scan reports both at 0, twisted on the real axis and hopf on the imaginary one."""
    for z, rep in scan:
        if z == 0:
            expected = "both"
        elif z.imag == 0:
            expected = "twisted"
        else:
            expected = "hopf"
        if rep.verdict != expected:
            return False
    return True
