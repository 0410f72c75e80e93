"""Monge matrices and the min-plus (distance) product.

Square integer matrices are plain numpy ``int64`` arrays.  A matrix is
*simple* when its first column and bottom row vanish; the simple Monge
matrices of size ``n+1`` are in bijection with ``n x n`` biword matrices via
``phi``, and that bijection turns the Demazure product into the distance
product.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .biword import DomainError, biword_matrix


def square_matrix(data) -> np.ndarray:
    """Validate ``data`` as a nonempty square integer matrix (entries may be negative)."""
    arr = np.asarray(data)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DomainError(f"expected a nonempty square matrix, got shape {arr.shape}")
    if arr.dtype.kind not in "iub":
        if arr.dtype.kind != "f" or not np.all(np.equal(np.mod(arr, 1), 0)):
            raise DomainError("matrix entries must be integers")
    return arr.astype(np.int64)


def _same_size(A, B):
    if A.shape != B.shape:
        raise DomainError(f"dimension mismatch: {A.shape[0]} vs {B.shape[0]}")


def _second_differences(A: np.ndarray) -> np.ndarray:
    # entry (i, j): A[i,j+1] + A[i+1,j] - A[i,j] - A[i+1,j+1], nonnegative iff that block is Monge
    return A[:-1, 1:] + A[1:, :-1] - A[:-1, :-1] - A[1:, 1:]


def first_monge_violation(A) -> tuple[int, int] | None:
    """Top-left corner ``(i, j)`` (1-indexed, row-major first) of a non-Monge 2x2 block, or None."""
    A = square_matrix(A)
    bad = np.argwhere(_second_differences(A) < 0)
    if len(bad) == 0:
        return None
    i, j = bad[0]
    return int(i) + 1, int(j) + 1


def is_monge(A) -> bool:
    """Contiguous 2x2 criterion ``A[i,j] + A[i+1,j+1] <= A[i,j+1] + A[i+1,j]``."""
    return first_monge_violation(A) is None


def is_monge_allpairs(A) -> bool:
    """Check the Monge inequality for every ``i < I`` and ``j < J`` (quartic; for tests)."""
    A = square_matrix(A)
    m = A.shape[0]
    for i in range(m):
        for I in range(i + 1, m):
            for j in range(m):
                for J in range(j + 1, m):
                    if A[i, j] + A[I, J] > A[i, J] + A[I, j]:
                        return False
    return True


def is_simple(A) -> bool:
    A = np.asarray(A)
    return not A[:, 0].any() and not A[-1, :].any()


def is_simple_monge(A) -> bool:
    A = square_matrix(A)
    return is_simple(A) and bool((A >= 0).all()) and is_monge(A)


def density(A) -> np.ndarray:
    """Mixed second difference of a Monge matrix.

    ``density(A)[i, j] = A[i,j] + A[i+1,j-1] - A[i,j-1] - A[i+1,j]`` away from
    the bottom row and first column, where it is zero.  The result is
    nonnegative; a non-Monge input raises :class:`DomainError`.
    """
    A = square_matrix(A)
    bad = first_monge_violation(A)
    if bad is not None:
        raise DomainError(f"density requires a Monge matrix; 2x2 block at {bad} violates it")
    out = np.zeros_like(A)
    out[:-1, 1:] = _second_differences(A)
    return out


def distribution(B) -> np.ndarray:
    """Each entry becomes the sum of the entries of ``B`` weakly southwest of it."""
    B = square_matrix(B)
    if (B < 0).any():
        raise DomainError("distribution requires nonnegative entries")
    return np.cumsum(np.cumsum(B, axis=1)[::-1], axis=0)[::-1].copy()


def pad_L(X) -> np.ndarray:
    """Embed ``X`` in the upper-right block, padding a zero first column and bottom row."""
    X = biword_matrix(X)
    n = X.shape[0]
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[:n, 1:] = X
    return out


def unpad_L(A) -> np.ndarray:
    A = square_matrix(A)
    if A.shape[0] < 2 or not is_simple(A):
        raise DomainError("unpad_L needs a matrix with zero first column and bottom row")
    return biword_matrix(A[:-1, 1:])


def phi(X) -> np.ndarray:
    """The simple Monge matrix of a biword matrix: ``distribution(pad_L(X))``.

    Entry ``(i, j)`` (1-indexed) counts the kelps of ``X`` with top in
    ``i..n`` and bottom in ``1..j-1``.
    """
    return distribution(pad_L(X))


def phi_by_blocks(X) -> np.ndarray:
    """``phi`` as the weighted sum of upper-right all-ones blocks.

    The entry ``X[i, -j]`` (``j``-th column from the right) contributes an
    ``i x j`` block of ones flush with the top-right corner.  Kept separate
    from ``phi`` so the two constructions can check each other.
    """
    X = biword_matrix(X)
    n = X.shape[0]
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = X[i - 1, n - j]
            if c:
                out[:i, n + 1 - j:] += c
    return out


def phi_inverse(A) -> np.ndarray:
    A = square_matrix(A)
    if A.shape[0] < 2:
        raise DomainError("a simple Monge matrix has size at least 2")
    if not is_simple(A):
        raise DomainError("phi_inverse requires zero first column and bottom row")
    if (A < 0).any():
        raise DomainError("phi_inverse requires nonnegative entries")
    return biword_matrix(density(A)[:-1, 1:])


def distance_product(A, B, return_argmin: bool = False):
    """Min-plus product ``C[i, j] = min_k A[i, k] + B[k, j]`` (cubic reference).

    With ``return_argmin`` also returns the leftmost minimizing ``k``
    (0-indexed) for every entry.
    """
    A = square_matrix(A)
    B = square_matrix(B)
    _same_size(A, B)
    m = A.shape[0]
    C = np.empty((m, m), dtype=np.int64)
    K = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        s = A[i][:, None] + B
        K[i] = s.argmin(axis=0)
        C[i] = s[K[i], np.arange(m)]
    return (C, K) if return_argmin else C


def distance_product_monge(A, B, return_argmin: bool = False):
    """Min-plus product of simple Monge matrices via monotone argmin search.

    For fixed row ``i`` the leftmost minimizer of ``A[i, k] + B[k, j]`` is
    nondecreasing in ``j`` because ``B`` is Monge.  Each row is solved by
    divide and conquer over columns (middle column first, then the halves
    with the ``k`` range split at its argmin).  All rows advance one
    recursion level at a time so each level is a single vectorized pass;
    total work is ``O(m^2 log m)``.
    """
    A = square_matrix(A)
    B = square_matrix(B)
    _same_size(A, B)
    for name, M in (("left", A), ("right", B)):
        if not is_simple_monge(M):
            raise DomainError(f"{name} factor is not a simple Monge matrix")
    m = A.shape[0]
    C = np.empty((m, m), dtype=np.int64)
    K = np.empty((m, m), dtype=np.int64)

    # one task per (row, column interval, k interval); all bounds inclusive
    row = np.arange(m)
    jlo = np.zeros(m, dtype=np.int64)
    jhi = np.full(m, m - 1, dtype=np.int64)
    klo = np.zeros(m, dtype=np.int64)
    khi = np.full(m, m - 1, dtype=np.int64)
    while row.size:
        mid = (jlo + jhi) // 2
        lengths = khi - klo + 1
        starts = np.cumsum(lengths) - lengths
        seg = np.repeat(np.arange(row.size), lengths)
        k = klo[seg] + (np.arange(seg.size) - starts[seg])
        vals = A[row[seg], k] + B[k, mid[seg]]
        segmin = np.minimum.reduceat(vals, starts)
        hits = np.flatnonzero(vals == segmin[seg])
        _, first = np.unique(seg[hits], return_index=True)
        kstar = k[hits[first]]
        C[row, mid] = segmin
        K[row, mid] = kstar

        left = mid > jlo
        right = mid < jhi
        row = np.concatenate([row[left], row[right]])
        jlo, jhi = np.concatenate([jlo[left], mid[right] + 1]), np.concatenate([mid[left] - 1, jhi[right]])
        klo, khi = np.concatenate([klo[left], kstar[right]]), np.concatenate([kstar[left], khi[right]])
    return (C, K) if return_argmin else C


def sum_matrix(A) -> np.ndarray:
    """Addition table ``S[i, j] = A[i, 1] + A[m, j] - A[m, 1]`` of the lower-left boundary."""
    A = square_matrix(A)
    return A[:, :1] + A[-1:, :] - A[-1, 0]


@dataclass(frozen=True)
class MongeDecomposition:
    simple_part: np.ndarray
    sum_part: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.simple_part + self.sum_part


def decompose(A) -> MongeDecomposition:
    """Split a Monge matrix into ``distribution(density(A))`` plus its sum matrix."""
    A = square_matrix(A)
    return MongeDecomposition(distribution(density(A)), sum_matrix(A))


def norm_max(A) -> int:
    A = np.asarray(A)
    if (A < 0).any():
        raise DomainError("norms are defined here for nonnegative matrices")
    return int(A.max())


def norm_l11(A) -> int:
    A = np.asarray(A)
    if (A < 0).any():
        raise DomainError("norms are defined here for nonnegative matrices")
    return int(A.sum(dtype=np.int64))
