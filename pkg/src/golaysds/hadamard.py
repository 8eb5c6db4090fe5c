"""Hadamard matrices of order 2v from periodic Golay pairs."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import BinarySequence, PeriodicGolayPair
from .errors import GolayError


class SquareMatrix:
    """Dense +-1 integer matrix."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GolayError(f"not a square matrix: shape {arr.shape}")
        if not np.all(np.abs(arr) == 1):
            raise GolayError("entries must be +1 or -1")
        arr.flags.writeable = False
        self.entries = arr

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None


def circulant(a: BinarySequence) -> SquareMatrix:
    """Row i is ``a`` cyclically shifted right by i."""
    x = a.entries.astype(np.int64)
    v = a.v
    idx = (np.arange(v)[None, :] - np.arange(v)[:, None]) % v
    return SquareMatrix(x[idx])


def build_hadamard(p: PeriodicGolayPair) -> SquareMatrix:
    ca = circulant(p.a).entries
    cb = circulant(p.b).entries
    return SquareMatrix(np.block([[ca, cb], [-cb.T, ca.T]]))


def is_hadamard(m: SquareMatrix) -> bool:
    e = m.entries
    gram = e @ e.T  # int64: exact
    return bool(np.array_equal(gram, m.order * np.eye(m.order, dtype=np.int64)))


def format_matrix(m: SquareMatrix) -> str:
    return "".join("".join("+" if x > 0 else "-" for x in row) + "\n" for row in m.entries)


def format_matrix_csv(m: SquareMatrix) -> str:
    return "".join(",".join(str(int(x)) for x in row) + "\n" for row in m.entries)


def parse_matrix(text: str) -> SquareMatrix:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    return SquareMatrix([[1 if ch == "+" else -1 if ch == "-" else 0 for ch in row]
                         for row in rows])


def write_matrix(m: SquareMatrix, path, csv=False):
    Path(path).write_text(format_matrix_csv(m) if csv else format_matrix(m), newline="\n")
