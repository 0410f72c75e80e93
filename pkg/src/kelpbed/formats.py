"""Plain-text matrix and biword formats.

Matrix: a first line holding the dimension ``n``, then ``n`` lines of ``n``
whitespace-separated nonnegative integers.  Several matrices in one stream
are separated by blank lines.  Biword: two lines of equal length, the top
row then the bottom row.
"""
from __future__ import annotations

import numpy as np

from .biword import Biword

MAX_ENTRY = 2**31


class ParseError(ValueError):
    """Text does not follow the matrix or biword format."""


def _ints(line: str, where: str) -> list[int]:
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"{where}: expected integers, got {line.strip()!r}") from None
    return vals


def _check_entries(vals: list[int], where: str, signed: bool):
    for v in vals:
        if (v < 0 and not signed) or abs(v) > MAX_ENTRY:
            raise ParseError(f"{where}: entry {v} outside [0, 2^31]")


def parse_matrix(text: str, signed: bool = False) -> np.ndarray:
    matrices = parse_matrices(text, signed=signed)
    if len(matrices) != 1:
        raise ParseError(f"expected one matrix, found {len(matrices)}")
    return matrices[0]


def parse_matrices(text: str, signed: bool = False) -> list[np.ndarray]:
    lines = [ln for ln in text.splitlines()]
    out = []
    pos = 0
    while True:
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos == len(lines):
            return out
        head = _ints(lines[pos], f"line {pos + 1}")
        if len(head) != 1 or head[0] < 1:
            raise ParseError(f"line {pos + 1}: expected a positive dimension")
        n = head[0]
        rows = []
        for r in range(n):
            idx = pos + 1 + r
            if idx >= len(lines) or not lines[idx].strip():
                raise ParseError(f"matrix starting at line {pos + 1}: expected {n} rows, got {r}")
            vals = _ints(lines[idx], f"line {idx + 1}")
            if len(vals) != n:
                raise ParseError(f"line {idx + 1}: expected {n} entries, got {len(vals)}")
            _check_entries(vals, f"line {idx + 1}", signed)
            rows.append(vals)
        out.append(np.array(rows, dtype=np.int64).reshape(n, n))
        pos += n + 1


def format_matrix(A) -> str:
    A = np.asarray(A)
    lines = [str(A.shape[0])]
    lines += [" ".join(str(int(v)) for v in row) for row in A]
    return "\n".join(lines) + "\n"


def format_matrices(matrices) -> str:
    return "\n".join(format_matrix(A) for A in matrices)


def parse_biword(text: str) -> Biword:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) == 0:
        return Biword((), ())
    if len(lines) != 2:
        raise ParseError(f"a biword has two rows, got {len(lines)}")
    top, bottom = (_ints(ln, f"row {t + 1}") for t, ln in enumerate(lines))
    if len(top) != len(bottom):
        raise ParseError("biword rows differ in length")
    return Biword.from_columns(zip(top, bottom))


def format_biword(w: Biword) -> str:
    return " ".join(map(str, w.top)) + "\n" + " ".join(map(str, w.bottom)) + "\n"
