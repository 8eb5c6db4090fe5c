"""Periodic/nonperiodic autocorrelation and the power spectral density filter."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import BinarySequence

PSD_TOL = 1e-6


@dataclass(frozen=True)
class PafVector:
    v: int
    values: tuple

    def __getitem__(self, s):
        return self.values[s]


@dataclass(frozen=True)
class NafVector:
    v: int
    values: tuple

    def __getitem__(self, s):
        # shifts past the end see only the zero padding
        if s >= self.v:
            return 0
        return self.values[s]


def paf(a: BinarySequence) -> PafVector:
    """Periodic autocorrelation ``sum_i a_i a_{i+s mod v}`` for every shift."""
    vals = kernels.paf(a.entries)
    return PafVector(a.v, tuple(int(x) for x in vals))


def naf(a: BinarySequence) -> NafVector:
    """Nonperiodic autocorrelation for shifts ``0 .. v-1``."""
    x = a.entries.astype(np.int64)
    v = a.v
    return NafVector(v, tuple(int(np.dot(x[: v - s], x[s:])) for s in range(v)))


def psd(a: BinarySequence) -> np.ndarray:
    """Squared DFT magnitudes at frequencies ``0 .. floor(v/2)``."""
    spectrum = np.fft.rfft(a.entries.astype(np.float64))
    return spectrum.real ** 2 + spectrum.imag ** 2


def psd_test(a: BinarySequence, tol: float = PSD_TOL) -> bool:
    """True when every nonzero-frequency PSD value is at most ``2v``."""
    values = psd(a)[1:]
    return bool(np.all(values <= 2 * a.v + tol))


def paf_sum(a: BinarySequence, b: BinarySequence) -> np.ndarray:
    if a.v != b.v:
        raise ValueError(f"lengths differ: {a.v} != {b.v}")
    return kernels.paf(a.entries) + kernels.paf(b.entries)
