"""Up-down pairs, weights and the Demazure product on biword matrices.

The product ``star(X, Y)`` stacks the kelp bed of ``X`` over that of ``Y``
and greedily fuses up-down pairs: kelps of ``X`` are taken right to left,
each matched to the leftmost kelp of ``Y`` that raises the weight.  On
permutation matrices this is the classical 0-Hecke (Demazure) product, which
is provided separately as :func:`hecke_product` for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .biword import DomainError, OracleCapacityError, biword_matrix, kelps, oracle_bound, total_kelps
from .monge import distance_product, phi, phi_inverse

Kelp = tuple[int, int]


def _pair(X, Y):
    X = biword_matrix(X)
    Y = biword_matrix(Y)
    if X.shape != Y.shape:
        raise DomainError(f"dimension mismatch: {X.shape[0]} vs {Y.shape[0]}")
    return X, Y


def is_up_down_pair(x: Kelp, y: Kelp) -> bool:
    """``x = (a, b)`` over ``y = (c, d)`` is an up-down pair when ``b <= c``."""
    return x[1] <= y[0]


def _split_costs(col_counts: np.ndarray, row_counts: np.ndarray) -> np.ndarray:
    # cost[k-1] for k = 1..n+1: kelps of X with bottom < k plus kelps of Y with top >= k
    prefix = np.concatenate([[0], np.cumsum(col_counts)])
    suffix = np.concatenate([np.cumsum(row_counts[::-1])[::-1], [0]])
    return prefix + suffix


def weight(X, Y) -> int:
    """Size of a largest system of up-down pairs for ``(X, Y)``.

    Computed as the minimum over split points ``k`` of the number of kelps
    of ``X`` with bottom vertex ``< k`` plus the kelps of ``Y`` with top
    vertex ``>= k``.
    """
    X, Y = _pair(X, Y)
    return int(_split_costs(X.sum(axis=0), Y.sum(axis=1)).min())


def weight_oracle(X, Y, bound: int | None = None) -> int:
    """Maximum bipartite matching between kelp copies of ``X`` and ``Y``.

    Edges join up-down pairs.  Uses simple augmenting paths, so it is only
    meant for small inputs; more than ``bound`` kelps on either side raises
    :class:`OracleCapacityError`.
    """
    X, Y = _pair(X, Y)
    bound = oracle_bound() if bound is None else bound
    xs, ys = list(kelps(X)), list(kelps(Y))
    if len(xs) > bound or len(ys) > bound:
        raise OracleCapacityError(
            f"weight oracle limited to {bound} kelps per side, got {len(xs)} and {len(ys)}")
    adj = [[t for t, y in enumerate(ys) if is_up_down_pair(x, y)] for x in xs]
    match_y: list[int | None] = [None] * len(ys)

    def augment(s, seen):
        for t in adj[s]:
            if t in seen:
                continue
            seen.add(t)
            if match_y[t] is None or augment(match_y[t], seen):
                match_y[t] = s
                return True
        return False

    return sum(augment(s, set()) for s in range(len(xs)))


def star_steps(X, Y) -> list[tuple[Kelp, Kelp]]:
    """The fused pairs ``(x_l, y_l)``, in the order the product selects them.

    At each step the candidates for ``x`` are the unused kelps of ``X`` whose
    top vertex is weakly left of every kelp chosen so far; they are tried
    right to left (top vertex, then bottom).  The first candidate for which
    some unused kelp ``y`` of ``Y`` raises the weight is paired with the
    leftmost such ``y`` (bottom vertex, then top).  Identical copies of a
    kelp behave identically, so candidates are scanned by kelp type.
    """
    X, Y = _pair(X, Y)
    n = X.shape[0]
    x_left = X.copy()
    y_left = Y.copy()
    col_counts = np.zeros(n, dtype=np.int64)   # bottoms of chosen x kelps
    row_counts = np.zeros(n, dtype=np.int64)   # tops of chosen y kelps
    # leftmost-first order over Y types: bottom vertex, then top
    y_order = [(c, d) for d in range(n) for c in range(n)]
    ks = np.arange(1, n + 2)
    steps: list[tuple[Kelp, Kelp]] = []
    top_limit = n - 1
    while True:
        costs = _split_costs(col_counts, row_counts)
        current = costs.min()
        chosen = None
        gains: dict[int, np.ndarray] = {}
        for a in range(top_limit, -1, -1):
            for b in range(n - 1, -1, -1):
                if not x_left[a, b]:
                    continue
                if b not in gains:
                    # raises[c]: adding x (bottom b+1) and some y with top c+1 raises the weight
                    extra_x = (b + 1 < ks).astype(np.int64)
                    raises = np.array([
                        (costs + extra_x + (c + 1 >= ks)).min() > current for c in range(n)])
                    gains[b] = raises
                raises = gains[b]
                for c, d in y_order:
                    if y_left[c, d] and raises[c]:
                        chosen = (a, b), (c, d)
                        break
                if chosen:
                    break
            if chosen:
                break
        if chosen is None:
            return steps
        (a, b), (c, d) = chosen
        x_left[a, b] -= 1
        y_left[c, d] -= 1
        col_counts[b] += 1
        row_counts[c] += 1
        top_limit = a
        steps.append(((a + 1, b + 1), (c + 1, d + 1)))


def star(X, Y) -> np.ndarray:
    """Demazure product of two biword matrices of the same size."""
    X, Y = _pair(X, Y)
    out = np.zeros_like(X)
    for (a, _), (_, d) in star_steps(X, Y):
        out[a - 1, d - 1] += 1
    return biword_matrix(out)


def star_via_monge(X, Y) -> np.ndarray:
    """``phi_inverse(phi(X) (min,+) phi(Y))``; equal to ``star(X, Y)``."""
    X, Y = _pair(X, Y)
    return phi_inverse(distance_product(phi(X), phi(Y)))


# --- permutations and the 0-Hecke monoid ---------------------------------

@dataclass(frozen=True)
class Permutation:
    """``images[i-1] = sigma(i)``.  Products read left to right: ``u * v`` applies ``u`` first."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        """The adjacent transposition exchanging ``i`` and ``i+1``."""
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(tuple(im))

    @property
    def n(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def length(self) -> int:
        im = self.images
        return sum(1 for s in range(len(im)) for t in range(s + 1, len(im)) if im[s] > im[t])

    def times_simple(self, i: int) -> Permutation:
        """``self * s_i``: exchange the values ``i`` and ``i+1``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(v, v) for v in self.images))


def reduced_word(v: Permutation, descending: bool = False) -> list[int]:
    """Indices ``i_1..i_k`` with ``v = s_{i_1} * ... * s_{i_k}`` and ``k = length(v)``.

    Found by bubble-sorting ``v`` back to the identity one adjacent
    transposition at a time; ``descending`` flips the scan direction, which
    generally yields a different reduced word.
    """
    word = []
    w = v
    scan = range(v.n - 1, 0, -1) if descending else range(1, v.n)
    while w.length():
        pos = {val: p for p, val in enumerate(w.images)}
        for i in scan:
            if pos[i + 1] < pos[i]:
                w = w.times_simple(i)
                word.append(i)
                break
    return word[::-1]


def hecke_fold(u: Permutation, word: list[int]) -> Permutation:
    w = u
    for i in word:
        nxt = w.times_simple(i)
        if nxt.length() > w.length():
            w = nxt
    return w


def hecke_product(u: Permutation, v: Permutation, descending: bool = False) -> Permutation:
    """Classical Demazure product: fold a reduced word of ``v`` onto ``u``."""
    if u.n != v.n:
        raise DomainError("permutations of different sizes")
    return hecke_fold(u, reduced_word(v, descending))


def hecke_product_bruteforce(u: Permutation, v: Permutation) -> Permutation:
    """Longest product over all subwords of (reduced word of u) + (reduced word of v)."""
    word = reduced_word(u) + reduced_word(v)
    best = Permutation.identity(u.n)
    for mask in iproduct((False, True), repeat=len(word)):
        w = Permutation.identity(u.n)
        for keep, i in zip(mask, word):
            if keep:
                w = w.times_simple(i)
        if w.length() > best.length():
            best = w
    return best


def permutation_to_matrix(p: Permutation) -> np.ndarray:
    X = np.zeros((p.n, p.n), dtype=np.int64)
    for i, v in enumerate(p.images):
        X[i, v - 1] = 1
    return biword_matrix(X)


def matrix_to_permutation(X) -> Permutation:
    X = biword_matrix(X)
    n = X.shape[0]
    if not ((X.sum(axis=0) == 1).all() and (X.sum(axis=1) == 1).all() and total_kelps(X) == n):
        raise DomainError("not a permutation matrix")
    return Permutation(tuple(int(np.flatnonzero(row)[0]) + 1 for row in X))
