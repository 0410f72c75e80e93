"""Biwords, kelp beds and their nonnegative-integer matrices.

A biword on ``[n]`` is a lexicographically sorted two-row array; the matrix
``X`` of a biword counts how often each column ``(i, j)`` occurs.  Rows and
columns are 1-indexed in every public function of this package, matching the
way kelps ``(i, j)`` are written; internally the arrays are plain 0-indexed
numpy arrays.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

DEFAULT_ORACLE_BOUND = 12


class DomainError(ValueError):
    """An input violates a mathematical precondition of an operation."""


class OracleCapacityError(RuntimeError):
    """A brute-force routine was asked to handle an input above its size cap."""


def oracle_bound() -> int:
    """Size cap for brute-force oracles; ``KELPBED_ORACLE_BOUND`` overrides the default 12."""
    raw = os.environ.get("KELPBED_ORACLE_BOUND")
    return int(raw) if raw else DEFAULT_ORACLE_BOUND


def biword_matrix(data, n: int | None = None) -> np.ndarray:
    """Validate ``data`` as an ``n x n`` nonnegative-integer matrix.

    Returns a fresh read-only ``int64`` array.  Raises :class:`DomainError`
    for a non-square shape, negative or non-integral entries, or a shape that
    disagrees with an explicit ``n``.
    """
    arr = np.asarray(data)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DomainError(f"expected a nonempty square matrix, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise DomainError(f"expected dimension {n}, got {arr.shape[0]}")
    if arr.dtype.kind == "f":
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise DomainError("matrix entries must be integers")
    elif arr.dtype.kind not in "iub":
        raise DomainError(f"matrix entries must be integers, got dtype {arr.dtype}")
    out = arr.astype(np.int64)
    if (out < 0).any():
        raise DomainError("biword matrices have nonnegative entries")
    out.setflags(write=False)
    return out


def zero(n: int) -> np.ndarray:
    return biword_matrix(np.zeros((n, n), dtype=np.int64))


def total_kelps(X) -> int:
    """Number of kelps in the bed of ``X`` (the sum of its entries)."""
    return int(np.asarray(X, dtype=np.int64).sum())


@dataclass(frozen=True)
class Biword:
    """Two-row array of columns ``(top[t], bottom[t])``, kept lexicographically sorted."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise DomainError("biword rows must have equal length")
        cols = list(zip(self.top, self.bottom))
        if cols != sorted(cols):
            raise DomainError("biword columns must be lexicographically sorted")

    @classmethod
    def from_columns(cls, columns: Iterable[tuple[int, int]]) -> Biword:
        """Build a biword from columns in any order; copies are interchangeable."""
        cols = sorted((int(a), int(b)) for a, b in columns)
        return cls(tuple(a for a, _ in cols), tuple(b for _, b in cols))

    @property
    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.top, self.bottom))

    def __len__(self) -> int:
        return len(self.top)


def biword_to_matrix(w: Biword, n: int) -> np.ndarray:
    if n < 1:
        raise DomainError("n must be positive")
    X = np.zeros((n, n), dtype=np.int64)
    for a, b in w.columns:
        if not (1 <= a <= n and 1 <= b <= n):
            raise DomainError(f"biword letter out of range [1, {n}]: column ({a}, {b})")
        X[a - 1, b - 1] += 1
    return biword_matrix(X)


def matrix_to_biword(X) -> Biword:
    X = biword_matrix(X)
    cols = []
    for (i, j), m in np.ndenumerate(X):
        cols.extend([(i + 1, j + 1)] * int(m))
    return Biword(tuple(a for a, _ in cols), tuple(b for _, b in cols))


def kelps(X) -> Iterator[tuple[int, int]]:
    """Yield every kelp copy of ``X`` in row-major order, copies consecutive."""
    X = np.asarray(X)
    for (i, j), m in np.ndenumerate(X):
        for _ in range(int(m)):
            yield (i + 1, j + 1)


def _interval(iv: Sequence[int] | range | None, n: int) -> range:
    if iv is None:
        return range(1, n + 1)
    if isinstance(iv, range):
        r = iv
    else:
        lo, hi = iv
        r = range(lo, hi + 1)
    if r.step != 1:
        raise DomainError("sub-bed intervals must be contiguous")
    if len(r) and (r.start < 1 or r.stop - 1 > n):
        raise DomainError(f"interval {r.start}..{r.stop - 1} not within [1, {n}]")
    return r


@dataclass(frozen=True, eq=False)
class SubBed:
    """The kelps of ``base`` whose top lies in ``rows`` and bottom in ``cols``.

    Intervals are inclusive 1-indexed pairs ``(lo, hi)`` or ``range`` objects;
    ``None`` means all of ``[n]``.  An empty interval (``hi < lo``) is allowed.
    """

    base: np.ndarray
    rows: range | tuple[int, int] | None = None
    cols: range | tuple[int, int] | None = None

    def __post_init__(self):
        base = biword_matrix(self.base)
        n = base.shape[0]
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "rows", _interval(self.rows, n))
        object.__setattr__(self, "cols", _interval(self.cols, n))

    def _slices(self):
        r, c = self.rows, self.cols
        return slice(r.start - 1, r.start - 1 + len(r)), slice(c.start - 1, c.start - 1 + len(c))

    def to_matrix(self) -> np.ndarray:
        """The induced sub-bed as a full ``n x n`` matrix, zero outside the rectangle."""
        out = np.zeros_like(self.base)
        rs, cs = self._slices()
        out[rs, cs] = self.base[rs, cs]
        return biword_matrix(out)


def count_kelps(S: SubBed) -> int:
    rs, cs = S._slices()
    return int(S.base[rs, cs].sum())
