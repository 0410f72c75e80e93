"""Density matrices of L11 norm ``k`` and the partition families they biject with.

A density class is a nonnegative matrix ``M`` whose entry in row ``i`` and
``j``-th column from the right (written ``M[i, -j]``) carries weight
``i * j``; the weights sum to ``k``.  It is stored as its upper-right
support block only.  Two partition families of ``k`` are in bijection with
these classes:

* divisor-copy partitions, where each part ``a`` comes in ``d(a)`` copies
  ``a[1] .. a[d(a)]``;
* partitions with distinguishable but unlabeled parts ``a(1), a(2), ...``,
  where ``a(s)`` occurs at least as often as ``a(s+1)``.

The same numbers count the factorization patterns of Hultquist, Mullen and
Niederreiter; that bijection lives in the literature and is not built here.
The second family also indexes unital *-subalgebras of ``k x k`` complex
matrices up to unitary similarity, which :func:`star_algebra_signature`
renders as a direct-sum string.

Also here: plane partitions in an ``(n, n, k)`` box, the map ``psi`` that
turns one into an L-padded square matrix, and the southern-face test that
decides when that matrix is Monge.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from .biword import DomainError, OracleCapacityError, oracle_bound
from .formats import ParseError
from .growth import series_l11_infinity
from .monge import phi

@lru_cache(maxsize=None)
def divisors(a: int) -> tuple[int, ...]:
    if a < 1:
        raise DomainError("divisors are taken of positive integers")
    return tuple(d for d in range(1, a + 1) if a % d == 0)


def divisor_count(a: int) -> int:
    return len(divisors(a))


def divisor_count_upto(a: int, i: int) -> int:
    """Number of divisors of ``a`` that are ``<= i``."""
    return sum(1 for d in divisors(a) if d <= i)


@dataclass(frozen=True, eq=False)
class DensityClass:
    """Density matrix with weighted sum ``k``, kept as its upper-right support block.

    ``block[r, c]`` is ``M[r+1, -(width - c)]``; the block has no all-zero
    bottom row or left column (except for the empty class, ``k == 0``).
    """

    k: int
    block: np.ndarray

    def __post_init__(self):
        block = _trim(np.asarray(self.block, dtype=np.int64))
        if (block < 0).any():
            raise DomainError("density entries must be nonnegative")
        block.setflags(write=False)
        object.__setattr__(self, "block", block)
        if weighted_sum(block) != self.k:
            raise DomainError(f"weighted entry sum is {weighted_sum(block)}, expected k = {self.k}")

    @classmethod
    def from_matrix(cls, M) -> DensityClass:
        """Wrap any matrix; its class size ``k`` is read off from the entries."""
        M = _trim(np.asarray(M, dtype=np.int64))
        return cls(weighted_sum(M), M)

    def entry(self, i: int, j: int) -> int:
        """``M[i, -j]``: row ``i`` from the top, column ``j`` from the right (1-indexed)."""
        r, c = self.block.shape
        if 1 <= i <= r and 1 <= j <= c:
            return int(self.block[i - 1, c - j])
        return 0

    def items(self):
        """Yield ``(i, j, m)`` for every nonzero ``M[i, -j] = m``."""
        r, c = self.block.shape
        for (a, b), m in np.ndenumerate(self.block):
            if m:
                yield a + 1, c - b, int(m)

    def square(self, size: int | None = None) -> np.ndarray:
        """The class as a ``size x size`` matrix (default: smallest square holding the support)."""
        r, c = self.block.shape
        size = max(r, c, 1) if size is None else size
        if size < max(r, c):
            raise DomainError(f"support {r}x{c} does not fit in {size}x{size}")
        out = np.zeros((size, size), dtype=np.int64)
        out[:r, size - c:] = self.block
        return out

    def __eq__(self, other):
        return (isinstance(other, DensityClass) and self.k == other.k
                and np.array_equal(self.block, other.block))

    def __hash__(self):
        return hash((self.k, self.block.shape, self.block.tobytes()))

    def __repr__(self):
        return f"DensityClass(k={self.k}, block={self.block.tolist()})"


def _trim(M: np.ndarray) -> np.ndarray:
    if M.ndim != 2:
        raise DomainError("density matrices are two-dimensional")
    rows = np.flatnonzero(M.any(axis=1))
    cols = np.flatnonzero(M.any(axis=0))
    if rows.size == 0:
        return np.zeros((0, 0), dtype=np.int64)
    # anchored at the top-right corner: keep rows from the top, columns from the right edge
    return M[: rows[-1] + 1, cols[0]:].copy()


def weighted_sum(M) -> int:
    M = np.asarray(M, dtype=np.int64)
    r, c = M.shape
    if M.size == 0:
        return 0
    i = np.arange(1, r + 1)[:, None]
    j = np.arange(c, 0, -1)[None, :]
    return int((i * j * M).sum())


def sigma_bar(M: DensityClass) -> np.ndarray:
    """Smallest simple Monge representative of the distribution class of ``M``.

    Its L11 norm is ``M.k``.  Dropping the zero first column and bottom row
    gives the southwest-sum matrix of the support block.
    """
    return phi(M.square())


# --- decorated partitions --------------------------------------------------

@dataclass(frozen=True)
class DivisorCopyPartition:
    """Multiset of labeled parts ``a[c]`` with ``1 <= c <= d(a)``, as a mapping to multiplicities."""

    parts: tuple[tuple[int, int, int], ...]  # (part, label, multiplicity), canonical order

    def __post_init__(self):
        agg: Counter = Counter()
        for a, c, m in self.parts:
            if a < 1 or m < 0:
                raise DomainError(f"bad part {a}[{c}]^{m}")
            if not 1 <= c <= divisor_count(a):
                raise DomainError(f"label {c} exceeds d({a}) = {divisor_count(a)}")
            agg[(a, c)] += m
        canon = tuple((a, c, m) for (a, c), m in sorted(agg.items(), key=lambda t: (-t[0][0], t[0][1])) if m)
        object.__setattr__(self, "parts", canon)

    @property
    def total(self) -> int:
        return sum(a * m for a, _, m in self.parts)

    def __str__(self):
        return ", ".join(_fmt(a, f"[{c}]", m) for a, c, m in self.parts)


@dataclass(frozen=True)
class DistinguishablePartition:
    """Multiset of parts ``a(s)``; each ``a(s+1)`` occurs no more often than ``a(s)``."""

    parts: tuple[tuple[int, int, int], ...]  # (part, subscript, multiplicity), canonical order

    def __post_init__(self):
        agg: Counter = Counter()
        for a, s, m in self.parts:
            if a < 1 or s < 1 or m < 0:
                raise DomainError(f"bad part {a}({s})^{m}")
            agg[(a, s)] += m
        for (a, s), m in agg.items():
            if m and agg.get((a, s - 1), 0) < m and s > 1:
                raise DomainError(
                    f"{a}({s}) occurs {m} times but {a}({s - 1}) only {agg.get((a, s - 1), 0)}")
        canon = tuple((a, s, m) for (a, s), m in sorted(agg.items(), key=lambda t: (-t[0][0], t[0][1])) if m)
        object.__setattr__(self, "parts", canon)

    @property
    def total(self) -> int:
        return sum(a * m for a, _, m in self.parts)

    def count(self, a: int, s: int) -> int:
        for b, t, m in self.parts:
            if (b, t) == (a, s):
                return m
        return 0

    def __str__(self):
        return ", ".join(_fmt(a, f"({s})", m) for a, s, m in self.parts)


def _fmt(a, label, m):
    return f"{a}{label}" + (f"^{m}" if m > 1 else "")


_TOKEN = re.compile(r"^(\d+)(\[(\d+)\]|\((\d+)\))(?:\^(\d+))?$")


def parse_partition(text: str) -> DivisorCopyPartition | DistinguishablePartition:
    """Parse ``"12[3], 6[3]^3, ..."`` or ``"4(1)^3, 3(2)^5, ..."``.

    Tokens are separated by commas and/or whitespace; enclosing parentheses
    around the whole list are allowed.  Mixing the two label styles is an
    error.
    """
    body = text.strip()
    if body.startswith("("):
        if not body.endswith(")"):
            raise ParseError("unbalanced parentheses around partition")
        body = body[1:-1]
    tokens = [t for t in re.split(r"[,\s]+", body) if t]
    kinds, parts = set(), []
    for tok in tokens:
        mt = _TOKEN.match(tok)
        if not mt:
            raise ParseError(f"cannot parse decorated part {tok!r}")
        a = int(mt.group(1))
        mult = int(mt.group(5)) if mt.group(5) else 1
        if mt.group(3) is not None:
            kinds.add("p")
            parts.append((a, int(mt.group(3)), mult))
        else:
            kinds.add("r")
            parts.append((a, int(mt.group(4)), mult))
    if len(kinds) > 1:
        raise ParseError("cannot mix a[c] and a(s) parts")
    if kinds == {"r"}:
        return DistinguishablePartition(tuple(parts))
    return DivisorCopyPartition(tuple(parts))


def density_to_p(M: DensityClass) -> DivisorCopyPartition:
    return DivisorCopyPartition(tuple(
        (i * j, divisor_count_upto(i * j, i), m) for i, j, m in M.items()))


def p_to_density(pi: DivisorCopyPartition) -> DensityClass:
    entries = Counter()
    for a, c, m in pi.parts:
        divs = divisors(a)
        if c > len(divs):
            raise DomainError(f"label {c} exceeds d({a}) = {len(divs)}")
        i = divs[c - 1]
        entries[(i, a // i)] += m
    return _from_entries(entries)


def density_to_r(M: DensityClass) -> DistinguishablePartition:
    r, c = M.block.shape
    parts = []
    for i in range(1, r + 1):
        tail = 0
        for j in range(c, 0, -1):
            tail += M.entry(i, j)
            if tail:
                parts.append((i, j, tail))
    return DistinguishablePartition(tuple(parts))


def r_to_density(rho: DistinguishablePartition) -> DensityClass:
    entries = Counter()
    for a, s, m in rho.parts:
        entries[(a, s)] = m - rho.count(a, s + 1)
    return _from_entries(entries)


def _from_entries(entries) -> DensityClass:
    live = {key: m for key, m in entries.items() if m}
    if not live:
        return DensityClass(0, np.zeros((0, 0), dtype=np.int64))
    r = max(i for i, _ in live)
    c = max(j for _, j in live)
    block = np.zeros((r, c), dtype=np.int64)
    for (i, j), m in live.items():
        block[i - 1, c - j] = m
    return DensityClass.from_matrix(block)


def star_algebra_signature(rho: DistinguishablePartition) -> str:
    """Direct-sum shape of the unital *-subalgebra indexed by ``rho``.

    Each ``a(s)`` occurring once is a full block ``Ma``; one occurring
    ``m > 1`` times is the diagonal copy ``Δ(Ma ⊕ ... ⊕ Ma)`` of ``m``
    identical blocks.
    """
    pieces = []
    for a, _, m in rho.parts:
        block = f"M{a}"
        pieces.append(block if m == 1 else "Δ(" + " ⊕ ".join([block] * m) + ")")
    return " ⊕ ".join(pieces)


def enumerate_density(k: int, bound: int | None = None) -> list[DensityClass]:
    """Every density class with weighted sum ``k``, in canonical order.

    Canonical order sorts by the entries ``M[i, -j]`` listed for
    ``i, j = 1..k`` row-major, descending.  ``k`` above ``bound`` (default
    :func:`~kelpbed.biword.oracle_bound`) raises :class:`OracleCapacityError`.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    bound = oracle_bound() if bound is None else bound
    if k > bound:
        raise OracleCapacityError(f"k = {k} exceeds the enumeration bound {bound}")
    cells = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1) if i * j <= k]
    out = []
    current = Counter()

    def rec(pos, remaining):
        if remaining == 0:
            out.append(_from_entries(current))
            return
        if pos == len(cells):
            return
        i, j = cells[pos]
        for m in range(remaining // (i * j), -1, -1):
            current[(i, j)] = m
            rec(pos + 1, remaining - m * i * j)
        current[(i, j)] = 0

    rec(0, k)
    return out


def density_count(k: int) -> int:
    return series_l11_infinity(k)[k]


# --- plane partitions --------------------------------------------------------

@dataclass(frozen=True)
class PlanePartition:
    """Rows of positive integers, weakly decreasing along rows and down columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(v < 1 for v in r) or any(r[t] < r[t + 1] for t in range(len(r) - 1)):
                raise DomainError(f"row {r} is not a weakly decreasing sequence of positive integers")
        for up, down in zip(rows, rows[1:]):
            if len(down) > len(up) or any(down[t] > up[t] for t in range(len(down))):
                raise DomainError(f"rows {up} and {down} violate the column condition")

    @classmethod
    def from_matrix(cls, P) -> PlanePartition:
        """Read the positive entries of a weakly decreasing nonnegative matrix, row by row."""
        return cls(tuple(tuple(int(v) for v in row if v > 0) for row in np.asarray(P)))

    def fits(self, a: int, b: int, c: int) -> bool:
        return (len(self.rows) <= a and all(len(r) <= b for r in self.rows)
                and all(v <= c for r in self.rows for v in r))

    def as_matrix(self, n: int) -> np.ndarray:
        P = np.zeros((n, n), dtype=np.int64)
        for i, r in enumerate(self.rows):
            P[i, : len(r)] = r
        return P


def psi(pi: PlanePartition, n: int, k: int) -> np.ndarray:
    """Reflect the tableau of ``pi`` left-right and L-pad it to size ``n+1``."""
    if not pi.fits(n, n, k):
        raise DomainError(f"plane partition does not fit in the ({n}, {n}, {k}) box")
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[:n, 1:] = pi.as_matrix(n)[:, ::-1]
    return out


def southern_faces(pi: PlanePartition) -> list[tuple[int, ...]]:
    """Visible heights of each wall from the south: row ``i`` minus row ``i+1``, over row ``i``."""
    rows = pi.rows
    faces = []
    for i, r in enumerate(rows):
        below = rows[i + 1] if i + 1 < len(rows) else ()
        faces.append(tuple(v - (below[t] if t < len(below) else 0) for t, v in enumerate(r)))
    return faces


def has_weakly_decreasing_faces(pi: PlanePartition) -> bool:
    return all(f[t] >= f[t + 1] for f in southern_faces(pi) for t in range(len(f) - 1))


def boxed_plane_partitions(a: int, b: int, c: int):
    """Yield every plane partition fitting in the ``(a, b, c)`` box."""
    def rows_below(limit):
        # weakly decreasing rows of length b with entries in 0..c, entrywise <= limit
        for row in iproduct(*(range(v + 1) for v in limit)):
            if all(row[t] >= row[t + 1] for t in range(b - 1)):
                yield row

    def rec(prefix, limit):
        if len(prefix) == a:
            yield prefix
            return
        for row in rows_below(limit):
            yield from rec(prefix + [row], row)

    for rows in rec([], (c,) * b):
        yield PlanePartition(tuple(tuple(v for v in r if v) for r in rows))
