"""Dense complex linear algebra kernel.

Conventions used throughout the package:

* A vertex tensor is a complex array ``T`` of shape ``(n, n, n, n)`` with
  ``T[i, j, k, l] = R_{ij}^{kl}``: lower indices ``(i, j)`` are the incoming
  pair, upper indices ``(k, l)`` the outgoing pair.
* Its matrix reading has row = outgoing composite index ``k*n + l`` and
  column = incoming composite index ``i*n + j``.
* Chain operators are plain ``(n**N, n**N)`` arrays, site 1 being the most
  significant digit of the basis index.
"""
import math

import numpy as np

from .errors import SizeGuardError

DEFAULT_TOL = 1e-10

# fixed Taylor order for the scaled exponential; truncation error below
# 0.5**19 / 19! ~ 1e-23 after scaling to norm <= 0.5
_EXPM_ORDER = 18
_EXPM_THETA = 0.5


def max_abs(a):
    """Entrywise max-norm, 0.0 for empty input."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def commutator(a, b):
    return a @ b - b @ a


def check_dim(dim, limit, what):
    if dim > limit:
        raise SizeGuardError(what, dim, limit)


def as_tensor(t):
    """Validate and return ``t`` as a complex ``(n, n, n, n)`` array."""
    t = np.asarray(t, dtype=complex)
    if t.ndim != 4 or len(set(t.shape)) != 1 or t.shape[0] < 1:
        raise ValueError(f"vertex tensor must have shape (n, n, n, n), got {t.shape}")
    if not np.all(np.isfinite(t)):
        raise ValueError("vertex tensor has non-finite entries")
    return t


def composite_index(k, l, n):
    """Composite index ``k*n + l`` of the ordered link pair ``(k, l)``."""
    if n < 1:
        raise ValueError("link dimension must be positive")
    if not (0 <= k < n and 0 <= l < n):
        raise IndexError(f"link indices ({k}, {l}) out of range for n={n}")
    return k * n + l


def split_index(c, n):
    """Inverse of :func:`composite_index`."""
    if not 0 <= c < n * n:
        raise IndexError(f"composite index {c} out of range for n={n}")
    return divmod(c, n)


def tensor_to_matrix(t):
    """Matrix ``M[k*n+l, i*n+j] = T[i, j, k, l]``."""
    t = as_tensor(t)
    n = t.shape[0]
    return t.reshape(n * n, n * n).T.copy()


def matrix_to_tensor(m):
    """Inverse of :func:`tensor_to_matrix`."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    n = math.isqrt(m.shape[0])
    if n * n != m.shape[0]:
        raise ValueError(f"matrix size {m.shape[0]} is not a perfect square")
    return m.T.reshape(n, n, n, n).copy()


def swap_outputs(t):
    """Exchange the two outgoing indices: ``R_{ij}^{kl} = B_{ij}^{lk}``.

    This is the passage between the scattering (B) form and the R form of a
    vertex tensor; it is an involution, so the same call maps R back to B.
    In matrix reading it is left multiplication by the swap operator.
    """
    return np.ascontiguousarray(as_tensor(t).transpose(0, 1, 3, 2))


def kron(a, b):
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def mat_exp(a, scale=1.0):
    """``exp(scale * a)`` by scaling and squaring a fixed-order Taylor series."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"mat_exp needs a square matrix, got shape {a.shape}")
    x = complex(scale) * a
    dim = x.shape[0]
    norm = float(np.max(np.sum(np.abs(x), axis=0))) if dim else 0.0
    squarings = 0
    if norm > _EXPM_THETA:
        squarings = int(math.ceil(math.log2(norm / _EXPM_THETA)))
        x = x / (2.0 ** squarings)
    eye = np.eye(dim, dtype=complex)
    result = eye.copy()
    for k in range(_EXPM_ORDER, 0, -1):
        result = eye + (x @ result) / k
    for _ in range(squarings):
        result = result @ result
    return result


def permutation_op(n):
    """Swap operator on ``C^n (x) C^n``: ``P (u (x) v) = v (x) u``."""
    if n < 1:
        raise ValueError("link dimension must be positive")
    p = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            p[j * n + i, i * n + j] = 1.0
    return p


def identity_tensor(n):
    """``T[i,j,k,l] = delta_i^k delta_j^l``."""
    return matrix_to_tensor(np.eye(n * n, dtype=complex))


def permutation_tensor(n):
    """``T[i,j,k,l] = delta_i^l delta_j^k``."""
    return matrix_to_tensor(permutation_op(n))


def embed_pair(op, a, b, N, n):
    """Embed a two-site operator acting on (distinct) sites ``a`` and ``b``.

    Sites are 1-based. The first tensor factor of ``op`` acts on site ``a``
    and the second on site ``b``; all other sites carry the identity.
    """
    op = np.asarray(op, dtype=complex)
    if op.shape != (n * n, n * n):
        raise ValueError(f"two-site operator must be {n * n}x{n * n}, got {op.shape}")
    if not (1 <= a <= N and 1 <= b <= N) or a == b:
        raise ValueError(f"invalid site pair ({a}, {b}) for N={N}")
    rest = [s for s in range(N) if s not in (a - 1, b - 1)]
    full = np.kron(op, np.eye(n ** (N - 2), dtype=complex))
    # axes of ``full`` are ordered (a, b, rest...) for outputs then inputs
    order = [a - 1, b - 1] + rest
    perm = [order.index(s) for s in range(N)]
    full = full.reshape((n,) * (2 * N))
    full = full.transpose(perm + [N + p for p in perm])
    return full.reshape(n ** N, n ** N)


def embed_two_site(op, k, N, n):
    """Embed ``op`` on the neighbouring sites ``(k, k+1)`` of a periodic chain.

    ``k`` runs over ``1..N``; for ``k = N`` the pair is ``(N, 1)``, the first
    factor of ``op`` still acting on site ``N``. Requires ``N >= 2``.
    """
    if N < 2:
        raise ValueError("embedding a two-site operator needs N >= 2")
    if not 1 <= k <= N:
        raise ValueError(f"site index k={k} out of range 1..{N}")
    return embed_pair(op, k, k % N + 1, N, n)
