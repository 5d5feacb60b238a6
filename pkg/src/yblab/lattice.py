"""RTT representation, row-to-row transfer matrices and partition functions.

The auxiliary (horizontal) index of a row runs left to right and closes
periodically, ``b_{N+1} = b_1``; the vertical index is the physical one::

    t[i, j] = sum_b R[b1,i1,b2,j1] R[b2,i2,b3,j2] ... R[bN,iN,b1,jN]

with ``t[i, j] = <i|t|j>``.
"""
import math
from dataclasses import dataclass

import numpy as np

from .linalg import as_tensor, check_dim, commutator, max_abs

CHAIN_LIMIT = 2 ** 12
BRUTE_FORCE_LIMIT = 2 ** 24
_CHUNK = 2 ** 16


@dataclass(frozen=True)
class LatticeSpec:
    """Periodic ``N x M`` lattice (N columns, M rows) with link dimension ``n``."""

    N: int
    M: int
    n: int = 2

    def __post_init__(self):
        if self.N < 1 or self.M < 1 or self.n < 1:
            raise ValueError("lattice dimensions must be positive")

    @property
    def periodic(self):
        return True

    @property
    def n_links(self):
        return 2 * self.N * self.M


def rep_T(r, a, b):
    """``rho(T_a^b)[i, j] = R[a, i, b, j]``."""
    r = as_tensor(r)
    n = r.shape[0]
    if not (0 <= a < n and 0 <= b < n):
        raise IndexError(f"auxiliary indices ({a}, {b}) out of range for n={n}")
    return r[a, :, b, :].copy()


def rep_T_all(r):
    """All representation matrices as an array ``T[a, b] = rho(T_a^b)``."""
    r = as_tensor(r)
    return np.ascontiguousarray(r.transpose(0, 2, 1, 3))


def rtt_residual(r12, t_lam, t_mu):
    """Residual of ``R_ij^kl T_k^p(l) T_l^q(m) = T_j^l(m) T_i^k(l) R_kl^pq``.

    ``t_lam`` and ``t_mu`` have shape ``(n, n, d, d)`` with ``t[a, b]`` the
    representation matrix of ``T_a^b``. Products are taken in the written
    order in the representation space.
    """
    r12 = as_tensor(r12)
    t_lam = np.asarray(t_lam, dtype=complex)
    t_mu = np.asarray(t_mu, dtype=complex)
    n = r12.shape[0]
    if t_lam.ndim != 4 or t_lam.shape[:2] != (n, n) or t_lam.shape[2] != t_lam.shape[3]:
        raise ValueError(f"T(lambda) must have shape ({n}, {n}, d, d), got {t_lam.shape}")
    if t_mu.shape != t_lam.shape:
        raise ValueError("T(lambda) and T(mu) must live on the same representation")
    lhs = np.einsum("ijkl,kpxy,lqyz->ijpqxz", r12, t_lam, t_mu)
    rhs = np.einsum("jlxy,ikyz,klpq->ijpqxz", t_mu, t_lam, r12)
    return max_abs(lhs - rhs)


def transfer_matrix(r, N):
    """Row-to-row transfer matrix on ``N`` sites (an ``n**N`` square array)."""
    r = as_tensor(r)
    n = r.shape[0]
    if N < 1:
        raise ValueError("N must be >= 1")
    check_dim(n ** N, CHAIN_LIMIT, "transfer matrix")
    # w[b, b', i, j] = R[b, i, b', j]; accumulate acc[b1, b_cur, I, J]
    w = r.transpose(0, 2, 1, 3)
    acc = w
    for _ in range(N - 1):
        acc = np.einsum("acIJ,cdij->adIiJj", acc, w)
        s = acc.shape
        acc = acc.reshape(n, n, s[2] * s[3], s[4] * s[5])
    return np.einsum("aaIJ->IJ", acc)


def cyclic_op(N, n=2):
    """Cyclic shift ``C |j1, j2, ..., jN> = |j2, ..., jN, j1>``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    dim = n ** N
    check_dim(dim, CHAIN_LIMIT, "cyclic operator")
    idx = np.arange(dim).reshape((n,) * N)
    # digit tuple (j1..jN) -> (j2..jN, j1)
    shifted = np.moveaxis(idx, 0, -1)
    c = np.zeros((dim, dim), dtype=complex)
    c[np.arange(dim), shifted.reshape(-1)] = 1.0
    return c


def commuting_family_residual(family, N, u, v):
    """``max(||[t(u), t(v)]||, ||[C, t(u)]||)`` for the row transfer matrices."""
    tu = transfer_matrix(family(u), N)
    tv = transfer_matrix(family(v), N)
    c = cyclic_op(N, as_tensor(family(u)).shape[0])
    return max(max_abs(commutator(tu, tv)), max_abs(commutator(c, tu)))


def partition_transfer(r, lattice):
    """``Z = trace(t**M)``."""
    r = as_tensor(r)
    if r.shape[0] != lattice.n:
        raise ValueError("tensor link dimension does not match the lattice")
    t = transfer_matrix(r, lattice.N)
    return complex(np.trace(np.linalg.matrix_power(t, lattice.M)))


def _link_layout(N, M):
    """Edge numbering: horizontal links h(r, c) first, then vertical v(r, c), row-major."""
    h = np.arange(N * M).reshape(M, N)
    v = N * M + np.arange(N * M).reshape(M, N)
    return h, v


def partition_bruteforce(r, lattice):
    """Sum of vertex-weight products over all periodic link configurations.

    Vertex ``(row, col)`` carries ``R[h(row,col), v(row,col), h(row,col+1), v(row+1,col)]``.
    Configurations are base-n integers over the fixed edge order of
    :func:`_link_layout`, summed in fixed-size chunks for reproducibility.
    """
    r = as_tensor(r)
    n, N, M = lattice.n, lattice.N, lattice.M
    if r.shape[0] != n:
        raise ValueError("tensor link dimension does not match the lattice")
    n_links = lattice.n_links
    total = n ** n_links
    check_dim(total, BRUTE_FORCE_LIMIT, "brute-force configuration count")
    h, v = _link_layout(N, M)
    verts = [
        (h[row, col], v[row, col], h[row, (col + 1) % N], v[(row + 1) % M, col])
        for row in range(M)
        for col in range(N)
    ]
    weights = []
    powers = n ** np.arange(n_links - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        conf = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (conf[:, None] // powers[None, :]) % n
        w = np.ones(len(conf), dtype=complex)
        for a, b, c, d in verts:
            w = w * r[digits[:, a], digits[:, b], digits[:, c], digits[:, d]]
        weights.append(np.sum(w))
    return complex(np.sum(np.array(weights)))


def partition_report(z, lattice, method):
    log_z = complex(np.log(complex(z))) if z != 0 else complex(-math.inf, 0.0)
    per_site = log_z / (lattice.N * lattice.M)
    return {
        "Z": [z.real, z.imag],
        "logZ_per_site": [per_site.real, per_site.imag],
        "N": lattice.N,
        "M": lattice.M,
        "method": method,
    }

