"""Catalogue of R-/B-matrices and their JSON serialization.

Every constructor returns a vertex tensor ``T[i, j, k, l] = R_{ij}^{kl}``
(see :mod:`yblab.linalg` for the index conventions).
"""
import enum
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import TensorFormatError
from .linalg import as_tensor, mat_exp, matrix_to_tensor, swap_outputs

HERMITIAN_TOL = 1e-12


def _six_vertex_layout(a, b, c, c_prime=None):
    """Tensor with weights ``a`` (corners), ``b`` (middle diagonal) and
    ``c``/``c_prime`` (middle off-diagonal, upper-right/lower-left)."""
    c_prime = c if c_prime is None else c_prime
    m = np.array(
        [
            [a, 0, 0, 0],
            [0, b, c, 0],
            [0, c_prime, b, 0],
            [0, 0, 0, a],
        ],
        dtype=complex,
    )
    return matrix_to_tensor(m)


def six_vertex(alpha, u):
    """Trigonometric six-vertex R-matrix with anisotropy ``alpha`` at spectral point ``u``.

    Weights: ``sinh(u + alpha)`` on the corners, ``sinh(u)`` on the middle
    diagonal and ``sinh(alpha)`` on the middle off-diagonal.
    """
    alpha, u = complex(alpha), complex(u)
    return _six_vertex_layout(np.sinh(u + alpha), np.sinh(u), np.sinh(alpha))


def xxz_first_order(J, eps):
    """First-order R-matrix of the XXZ bond operator ``exp(-eps * h)`` times the swap."""
    J, eps = complex(J), complex(eps)
    return _six_vertex_layout(1 - J * eps, -2 * eps, 1 + J * eps)


def gauge_six_vertex(gamma, delta):
    """Six-vertex R-matrix at ``q = exp(i gamma)`` in the gauge where the
    off-diagonal weights carry the phases ``exp(-/+ i gamma delta)``.

    ``gamma`` must be real; ``delta`` may be complex (the multiplicative
    spectral variable ``lambda`` corresponds to ``delta = lambda / i``).
    """
    if np.iscomplexobj(gamma) and np.imag(gamma) != 0:
        raise ValueError("gamma must be real (|q| = 1)")
    gamma = float(np.real(gamma))
    delta = complex(delta)
    a = 1j * np.sin(gamma * (delta + 1))
    b = 1j * np.sin(gamma * delta)
    c = 1j * np.sin(gamma)
    return _six_vertex_layout(a, b, c * np.exp(-1j * gamma * delta), c * np.exp(1j * gamma * delta))


def is_hermitian(m, tol=HERMITIAN_TOL):
    m = np.asarray(m)
    return m.ndim == 2 and m.shape[0] == m.shape[1] and np.max(np.abs(m - m.conj().T)) <= tol


def from_local_hamiltonian(h, z):
    """Bond operator ``B = exp(-z h)`` as a tensor, and its R form.

    Returns ``(B, R)`` with ``R[i, j, k, l] = B[i, j, l, k]``.
    """
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("local Hamiltonian must be hermitian")
    b = matrix_to_tensor(mat_exp(h, -complex(z)))
    return b, swap_outputs(b)


def rescale(t, c):
    return as_tensor(t) * complex(c)


class Family(enum.Enum):
    SIX_VERTEX = "six-vertex"
    XXZ_FIRST_ORDER = "xxz-first-order"
    GAUGE_SIX_VERTEX = "gauge-six-vertex"
    FROM_LOCAL_H = "from-local-h"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class SpectralRFamily:
    """A named R-matrix family, callable at a spectral point.

    Only the parameters relevant to ``family`` are used. ``FROM_LOCAL_H``
    evaluates to the R form of ``exp(-z h_local)``; ``CUSTOM`` returns
    ``table`` regardless of the spectral point.
    """

    family: Family
    alpha: complex = 0.0
    J: complex = 1.0
    gamma: float = 0.0
    h_local: np.ndarray = None
    table: np.ndarray = None

    def __post_init__(self):
        if self.family is Family.GAUGE_SIX_VERTEX and np.imag(self.gamma) != 0:
            raise ValueError("gauge six-vertex family needs real gamma")
        if self.family is Family.FROM_LOCAL_H:
            if self.h_local is None or not is_hermitian(self.h_local):
                raise ValueError("from-local-h family needs a hermitian h_local")
        if self.family is Family.CUSTOM:
            if self.table is None:
                raise ValueError("custom family needs a table")
            object.__setattr__(self, "table", as_tensor(self.table))

    @classmethod
    def six_vertex(cls, alpha):
        return cls(Family.SIX_VERTEX, alpha=complex(alpha))

    @classmethod
    def xxz_first_order(cls, J):
        return cls(Family.XXZ_FIRST_ORDER, J=complex(J))

    @classmethod
    def gauge_six_vertex(cls, gamma):
        return cls(Family.GAUGE_SIX_VERTEX, gamma=float(gamma))

    @classmethod
    def from_local_h(cls, h):
        return cls(Family.FROM_LOCAL_H, h_local=np.asarray(h, dtype=complex))

    @classmethod
    def constant(cls, table):
        return cls(Family.CUSTOM, table=table)

    @property
    def n(self):
        if self.family is Family.CUSTOM:
            return self.table.shape[0]
        if self.family is Family.FROM_LOCAL_H:
            return int(round(np.sqrt(self.h_local.shape[0])))
        return 2

    def __call__(self, point):
        point = complex(point)
        if self.family is Family.SIX_VERTEX:
            return six_vertex(self.alpha, point)
        if self.family is Family.XXZ_FIRST_ORDER:
            return xxz_first_order(self.J, point)
        if self.family is Family.GAUGE_SIX_VERTEX:
            return gauge_six_vertex(self.gamma, point)
        if self.family is Family.FROM_LOCAL_H:
            return from_local_hamiltonian(self.h_local, point)[1]
        return self.table.copy()


# -- JSON -----------------------------------------------------------------

def _complex_to_json(z):
    z = complex(z)
    return [z.real, z.imag]


def _complex_from_json(v, where="value"):
    if (
        not isinstance(v, (list, tuple))
        or len(v) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in v)
    ):
        raise TensorFormatError(f"{where}: expected [re, im], got {v!r}")
    return complex(float(v[0]), float(v[1]))


def _nested_from_json(data, shape, where):
    # strict recursive parse so wrong-arity nesting is rejected, not broadcast
    if not shape:
        return _complex_from_json(data, where)
    if not isinstance(data, list) or len(data) != shape[0]:
        raise TensorFormatError(f"{where}: expected a list of length {shape[0]}")
    return [_nested_from_json(x, shape[1:], f"{where}[{i}]") for i, x in enumerate(data)]


def _nested_to_json(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return _complex_to_json(a)
    return [_nested_to_json(x) for x in a]


def tensor_to_json(t):
    t = as_tensor(t)
    return {"n": t.shape[0], "entries": _nested_to_json(t)}


def tensor_from_json(obj):
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise TensorFormatError('tensor JSON must be an object with "n" and "entries"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise TensorFormatError(f'"n" must be a positive integer, got {n!r}')
    entries = _nested_from_json(obj["entries"], (n, n, n, n), "entries")
    t = np.array(entries, dtype=complex)
    if not np.all(np.isfinite(t)):
        raise TensorFormatError("tensor entries must be finite")
    return t


def family_to_json(fam):
    out = {"family": fam.family.value}
    if fam.family is Family.SIX_VERTEX:
        out["alpha"] = _complex_to_json(fam.alpha)
    elif fam.family is Family.XXZ_FIRST_ORDER:
        out["J"] = _complex_to_json(fam.J)
    elif fam.family is Family.GAUGE_SIX_VERTEX:
        out["gamma"] = float(fam.gamma)
    elif fam.family is Family.FROM_LOCAL_H:
        out["h"] = _nested_to_json(fam.h_local)
    else:
        out["table"] = tensor_to_json(fam.table)
    return out


def family_from_json(obj):
    if not isinstance(obj, dict) or "family" not in obj:
        raise TensorFormatError('family JSON must be an object with a "family" key')
    try:
        kind = Family(obj["family"])
    except ValueError:
        raise TensorFormatError(f"unknown family {obj['family']!r}") from None
    try:
        if kind is Family.SIX_VERTEX:
            return SpectralRFamily.six_vertex(_complex_from_json(obj["alpha"], "alpha"))
        if kind is Family.XXZ_FIRST_ORDER:
            return SpectralRFamily.xxz_first_order(_complex_from_json(obj["J"], "J"))
        if kind is Family.GAUGE_SIX_VERTEX:
            gamma = obj["gamma"]
            if not isinstance(gamma, (int, float)) or isinstance(gamma, bool):
                raise TensorFormatError("gamma must be a real number")
            return SpectralRFamily.gauge_six_vertex(gamma)
        if kind is Family.FROM_LOCAL_H:
            h = obj["h"]
            if not isinstance(h, list) or not h:
                raise TensorFormatError("h must be a nested matrix")
            dim = len(h)
            return SpectralRFamily.from_local_h(np.array(_nested_from_json(h, (dim, dim), "h")))
        return SpectralRFamily.constant(tensor_from_json(obj["table"]))
    except KeyError as exc:
        raise TensorFormatError(f"family {kind.value!r} is missing key {exc}") from None
    except ValueError as exc:
        if isinstance(exc, TensorFormatError):
            raise
        raise TensorFormatError(str(exc)) from None


def load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise TensorFormatError(f"{path}: invalid JSON ({exc})") from None


def load_tensor(path):
    return tensor_from_json(load_json(path))


def save_tensor(t, path):
    Path(path).write_text(json.dumps(tensor_to_json(t)) + "\n", encoding="utf-8")
