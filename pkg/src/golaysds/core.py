"""Domain types: binary sequences, subsets of Z_v and SDS parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import (DecompositionFails, GolayError, NegativeLambda, NotComplementary,
                     OddLength)


class BinarySequence:
    """An immutable +-1 sequence of length ``v``.

    Entries are kept as a read-only ``int8`` array so the correlation
    kernels can consume them without copying.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        arr = np.array(list(entries) if not isinstance(entries, np.ndarray) else entries,
                       dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise GolayError("a binary sequence needs at least one entry")
        if not np.all((arr == 1) | (arr == -1)):
            raise GolayError("entries must be +1 or -1")
        arr = arr.astype(np.int8)
        arr.flags.writeable = False
        self._entries = arr

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def v(self) -> int:
        return int(self._entries.size)

    def __len__(self):
        return self.v

    def __iter__(self):
        return (int(x) for x in self._entries)

    def __eq__(self, other):
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self):
        body = "".join("+" if x > 0 else "-" for x in self._entries)
        return f"BinarySequence({body})"


@dataclass(frozen=True)
class SubsetZv:
    """A subset of Z_v stored as a strictly increasing tuple."""

    v: int
    elements: tuple

    def __post_init__(self):
        if self.v < 1:
            raise GolayError(f"modulus must be positive, got {self.v}")
        elems = tuple(int(e) for e in self.elements)
        for e in elems:
            if not 0 <= e < self.v:
                raise GolayError(f"element {e} outside [0, {self.v})")
        ordered = tuple(sorted(elems))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise GolayError(f"duplicate element {a}")
        object.__setattr__(self, "elements", ordered)

    @classmethod
    def of(cls, v: int, elements: Iterable[int]) -> "SubsetZv":
        return cls(v, tuple(elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, item):
        return item in set(self.elements)

    def scaled(self, u: int) -> "SubsetZv":
        """Image under x -> u*x (mod v)."""
        return SubsetZv(self.v, tuple({(u * e) % self.v for e in self.elements}))

    def shifted(self, c: int) -> "SubsetZv":
        return SubsetZv(self.v, tuple((e + c) % self.v for e in self.elements))


@dataclass(frozen=True)
class SdsParams:
    """Parameters (v; k_1, ..., k_t; lambda) of a supplementary difference set family."""

    v: int
    block_sizes: tuple
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(int(k) for k in self.block_sizes))
        if self.v < 1 or not self.block_sizes or any(k < 1 for k in self.block_sizes):
            raise GolayError(f"malformed parameters {self}")
        if self.lam < 0:
            raise NegativeLambda(f"lambda = {self.lam} is negative")
        lhs = self.lam * (self.v - 1)
        rhs = sum(k * (k - 1) for k in self.block_sizes)
        if lhs != rhs:
            raise GolayError(
                f"infeasible parameters: lambda*(v-1) = {lhs} but sum k(k-1) = {rhs}")

    @property
    def n(self) -> int:
        return sum(self.block_sizes) - self.lam

    def __str__(self):
        ks = ",".join(map(str, self.block_sizes))
        return f"({self.v};{ks};{self.lam})"


class PeriodicGolayPair:
    """Two +-1 sequences whose periodic autocorrelations cancel off zero.

    Only :meth:`from_sequences` (or the subset-level
    :func:`golaysds.sds.verify_periodic_golay_pair`) should construct one.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: BinarySequence, b: BinarySequence, *, _verified=False):
        if not _verified:
            raise TypeError("use PeriodicGolayPair.from_sequences to build a verified pair")
        self.a = a
        self.b = b

    @classmethod
    def from_sequences(cls, a: BinarySequence, b: BinarySequence) -> "PeriodicGolayPair":
        if a.v != b.v:
            raise GolayError(f"lengths differ: {a.v} != {b.v}")
        total = kernels.paf(a.entries) + kernels.paf(b.entries)
        bad = np.flatnonzero(total[1:])
        if bad.size:
            s = int(bad[0]) + 1
            raise NotComplementary(s, int(total[s]))
        return cls(a, b, _verified=True)

    @property
    def v(self) -> int:
        return self.a.v

    def __eq__(self, other):
        if not isinstance(other, PeriodicGolayPair):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"PeriodicGolayPair(v={self.v}, a={self.a!r}, b={self.b!r})"


def sequence_from_subset(x: SubsetZv) -> BinarySequence:
    a = np.ones(x.v, dtype=np.int8)
    a[list(x.elements)] = -1
    return BinarySequence(a)


def subset_from_sequence(a: BinarySequence) -> SubsetZv:
    return SubsetZv(a.v, tuple(int(i) for i in np.flatnonzero(a.entries < 0)))


def pair_lambda(v: int, r: int, s: int) -> int:
    """lambda = r + s - v/2 for a pair of blocks of sizes r and s."""
    if v % 2:
        raise OddLength(f"v = {v} is odd; periodic Golay pairs need even length")
    lam = r + s - v // 2
    if lam < 0:
        raise NegativeLambda(f"r + s - v/2 = {lam} < 0 for v={v}, r={r}, s={s}")
    return lam


def derive_pair_params(x: SubsetZv, y: SubsetZv) -> SdsParams:
    if x.v != y.v:
        raise GolayError(f"moduli differ: {x.v} != {y.v}")
    lam = pair_lambda(x.v, len(x), len(y))
    r, s = len(x), len(y)
    # SdsParams enforces lambda(v-1) = r(r-1) + s(s-1); rewrap its failure so
    # the caller sees one decomposition error rather than a generic one.
    try:
        return SdsParams(x.v, (r, s), lam)
    except NegativeLambda:
        raise
    except GolayError as exc:
        raise DecompositionFails(str(exc)) from None


def check_square_decomposition(params: SdsParams) -> tuple:
    """Return (a, b) = (v - 2r, v - 2s), confirming a^2 + b^2 = 2v."""
    if len(params.block_sizes) != 2:
        raise DecompositionFails("need exactly two blocks")
    r, s = params.block_sizes
    a, b = params.v - 2 * r, params.v - 2 * s
    if a * a + b * b != 2 * params.v:
        raise DecompositionFails(
            f"{a}^2 + {b}^2 = {a * a + b * b} != 2v = {2 * params.v}")
    return a, b


def as_subset(v: int, elements: Sequence[int] | SubsetZv) -> SubsetZv:
    if isinstance(elements, SubsetZv):
        return elements
    return SubsetZv.of(v, elements)
