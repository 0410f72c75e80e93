"""Growth series of the simple Monge semigroup under the max and L11 norms.

Series are plain lists of Python ints (coefficients of ``q^0 .. q^K``), so
all arithmetic is exact.  Counting goes through the bijection ``phi``:
``||phi(X)||_max`` is the number of kelps of ``X``, and ``||phi(X)||_11``
weights the entry of ``X`` in row ``i`` and ``j``-th column from the right
by ``i * j``.
"""
from __future__ import annotations

from math import comb

import numpy as np

from .biword import DomainError
from .monge import norm_l11, norm_max, phi

NORMS = ("max", "l11")
DEFAULT_ENUMERATION_CAP = 10**6


def _geometric_factor(coeffs: list[int], step: int) -> None:
    # in place: multiply by 1 / (1 - q^step), truncated at len(coeffs)
    for t in range(step, len(coeffs)):
        coeffs[t] += coeffs[t - step]


def _check(n: int, K: int):
    if n < 1:
        raise DomainError("n must be positive")
    if K < 0:
        raise DomainError("truncation must be nonnegative")


def series_max(n: int, K: int) -> list[int]:
    """Coefficients of ``1 / (1-q)^(n^2)`` up to ``q^K``."""
    _check(n, K)
    coeffs = [1] + [0] * K
    for _ in range(n * n):
        _geometric_factor(coeffs, 1)
    return coeffs


def series_l11(n: int, K: int) -> list[int]:
    """Coefficients of ``prod_{i,j<=n} 1 / (1 - q^(ij))`` up to ``q^K``."""
    _check(n, K)
    coeffs = [1] + [0] * K
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i * j <= K:
                _geometric_factor(coeffs, i * j)
    return coeffs


def series_l11_infinity(K: int) -> list[int]:
    """L11 growth series of simple Monge matrices of unbounded size.

    The coefficient of ``q^k`` stops changing once ``n >= k``, so
    truncating at ``K`` needs only ``n = K``.
    """
    return series_l11(max(K, 1), K)


def partial_sum_series(s: list[int]) -> list[int]:
    """Multiply by ``1 / (1-q)``: coefficient ``k`` becomes ``s[0] + ... + s[k]``."""
    out = list(s)
    _geometric_factor(out, 1)
    return out


def cell_weights(n: int, norm: str) -> np.ndarray:
    """Contribution of one kelp at each position of ``X`` to the norm of ``phi(X)``."""
    if norm == "max":
        return np.ones((n, n), dtype=np.int64)
    if norm == "l11":
        i = np.arange(1, n + 1)[:, None]
        j = np.arange(n, 0, -1)[None, :]
        return i * j
    raise DomainError(f"unknown norm {norm!r}; expected one of {NORMS}")


def _preimages(n: int, k: int, norm: str):
    """Yield every ``X`` whose image has the given norm exactly ``k``."""
    w = cell_weights(n, norm)
    cells = sorted(((int(w[i, j]), i, j) for i in range(n) for j in range(n)), reverse=True)
    X = np.zeros((n, n), dtype=np.int64)

    def rec(pos: int, remaining: int):
        if remaining == 0:
            yield X.copy()
            return
        if pos == len(cells):
            return
        wt, i, j = cells[pos]
        # cells are sorted by decreasing weight; a 1-weight cell (always last) can absorb any rest
        for c in range(remaining // wt, -1, -1):
            X[i, j] = c
            yield from rec(pos + 1, remaining - c * wt)
        X[i, j] = 0

    yield from rec(0, k)


def _count(n: int, k: int, norm: str) -> int:
    s = series_max(n, k) if norm == "max" else series_l11(n, k)
    return s[k]


def enumerate_graded(n: int, k: int, norm: str, *, at_most: bool = False,
                     cap: int = DEFAULT_ENUMERATION_CAP) -> list[np.ndarray]:
    """All simple Monge matrices of size ``n+1`` with norm ``k`` (``<= k`` if ``at_most``).

    Sorted row-major lexicographically.  Raises :class:`DomainError` when the
    result would hold more than ``cap`` matrices; the size is known in
    advance from the growth series.
    """
    _check(n, k)
    cell_weights(n, norm)
    levels = range(k + 1) if at_most else [k]
    total = sum(_count(n, t, norm) for t in levels)
    if total > cap:
        raise DomainError(f"enumeration would produce {total} matrices, above the cap {cap}")
    out = [phi(X) for t in levels for X in _preimages(n, t, norm)]
    out.sort(key=lambda A: tuple(A.ravel()))
    return out


def norm_of(A, norm: str) -> int:
    if norm == "max":
        return norm_max(A)
    if norm == "l11":
        return norm_l11(A)
    raise DomainError(f"unknown norm {norm!r}; expected one of {NORMS}")


def binomial_max_count(n: int, k: int) -> int:
    """Closed form of the max-norm coefficient."""
    return comb(n * n + k - 1, k)
