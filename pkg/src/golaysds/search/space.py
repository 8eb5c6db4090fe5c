"""The space of orbit unions with a fixed cardinality.

Combinations are tuples of free-orbit indices, ordered lexicographically
(equivalently, by their representative lists). Ranks number that order
from 0, so a window ``[start, stop)`` of ranks is a resumable work unit and
disjoint windows partition the space.
"""

from __future__ import annotations

import numpy as np

from .. import kernels
from ..errors import GolayError, UnreachableCardinality
from ..orbits import OrbitTable


class CombinationSpace:
    """Orbit unions of ``target`` elements containing ``forced`` and avoiding ``excluded``.

    Ranks and windows refer to the free orbits only (all orbits not forced
    and not excluded); the forced orbits are added to every combination.
    """

    def __init__(self, table: OrbitTable, target: int, forced=(), excluded=()):
        self.table = table
        self.v = table.v
        self.target = int(target)
        self.forced = tuple(sorted(int(r) for r in forced))
        self.excluded = tuple(sorted(int(r) for r in excluded))
        for r in self.forced + self.excluded:
            if r not in table._index():
                raise GolayError(f"{r} is not an orbit representative modulo {self.v}")
        if set(self.forced) & set(self.excluded):
            raise GolayError("an orbit cannot be both forced and excluded")
        blocked = set(self.forced) | set(self.excluded)
        self.free_reps = tuple(r for r in table.reps if r not in blocked)
        self.sizes = tuple(table.size_of(r) for r in self.free_reps)
        self.forced_size = sum(table.size_of(r) for r in self.forced)
        self.free_target = self.target - self.forced_size
        self._counts = self._count_table()
        if self.free_target < 0 or self.total == 0:
            raise UnreachableCardinality(
                f"no union of the available orbits has exactly {self.target} elements "
                f"(forced {self.forced_size}, free orbit sizes {sorted(set(self.sizes))})")
        self.feasible = np.array([[c > 0 for c in row] for row in self._counts], dtype=np.uint8)

    def _count_table(self):
        n = len(self.sizes)
        t = max(self.free_target, 0)
        counts = [[0] * (t + 1) for _ in range(n + 1)]
        counts[n][0] = 1
        for i in range(n - 1, -1, -1):
            sz = self.sizes[i]
            for r in range(t + 1):
                counts[i][r] = counts[i + 1][r] + (counts[i + 1][r - sz] if r >= sz else 0)
        return counts

    @property
    def total(self) -> int:
        if self.free_target < 0:
            return 0
        return self._counts[0][self.free_target]

    def rank(self, combo) -> int:
        """Position of a combination (free-orbit indices) in lexicographic order."""
        combo = list(combo)
        rem = self.free_target
        rank = 0
        prev = -1
        for c in combo:
            for q in range(prev + 1, c):
                if self.sizes[q] <= rem:
                    rank += self._counts[q + 1][rem - self.sizes[q]]
            rem -= self.sizes[c]
            prev = c
        if rem != 0:
            raise GolayError(f"combination {combo} does not reach the target size")
        return rank

    def unrank(self, rank: int) -> list:
        if not 0 <= rank < self.total:
            raise IndexError(f"rank {rank} outside [0, {self.total})")
        combo = []
        rem = self.free_target
        q = 0
        while rem > 0:
            sz = self.sizes[q]
            block = self._counts[q + 1][rem - sz] if sz <= rem else 0
            if rank < block:
                combo.append(q)
                rem -= sz
            else:
                rank -= block
            q += 1
        return combo

    def combo_from_reps(self, reps) -> list:
        """Free-orbit indices for a full representative list (forced orbits included)."""
        reps = sorted(int(r) for r in reps)
        missing = [r for r in self.forced if r not in reps]
        if missing:
            raise GolayError(f"representatives {reps} omit forced orbits {missing}")
        pos = {r: i for i, r in enumerate(self.free_reps)}
        free = [r for r in reps if r not in self.forced]
        bad = [r for r in free if r not in pos]
        if bad:
            raise GolayError(f"{bad} are excluded or not representatives")
        return [pos[r] for r in free]

    def reps_of(self, combo) -> tuple:
        return tuple(sorted(self.forced + tuple(self.free_reps[c] for c in combo)))

    def elements_of(self, combo) -> np.ndarray:
        reps = self.reps_of(combo)
        if not reps:
            return np.zeros(0, dtype=np.int64)
        return np.sort(np.concatenate([np.asarray(self.table.orbit(r).elements) for r in reps]))


def checked_frequencies(table: OrbitTable) -> np.ndarray:
    """Frequencies in [1, v/2] that suffice for the PSD test on orbit unions.

    For X a union of H-orbits the spectrum is constant on the orbits of
    {+-h} acting on frequencies, so one frequency per such orbit is enough.
    """
    v = table.v
    mult = set(table.subgroup.elements) | {(-h) % v for h in table.subgroup.elements}
    out = []
    for k in range(1, v // 2 + 1):
        if all((g * k) % v >= k for g in mult):
            out.append(k)
    return np.array(out, dtype=np.int64)


def orbit_spectra(table: OrbitTable, reps, freqs: np.ndarray):
    """Real/imag parts of sum_{j in orbit} exp(2 pi i j k / v) per orbit, per frequency."""
    v = table.v
    re = np.zeros((len(reps), freqs.size))
    im = np.zeros((len(reps), freqs.size))
    for i, r in enumerate(reps):
        elems = np.asarray(table.orbit(r).elements, dtype=np.float64)
        phase = 2.0 * np.pi * np.outer(elems, freqs) / v
        re[i] = np.cos(phase).sum(axis=0)
        im[i] = np.sin(phase).sum(axis=0)
    return re, im


class SpectralScanner:
    """Runs the PSD filter over rank windows of a :class:`CombinationSpace`."""

    def __init__(self, space: CombinationSpace, slack: float = 1e-6):
        self.space = space
        self.bound = 2.0 * space.v + slack
        self.freqs = checked_frequencies(space.table)
        self.re, self.im = orbit_spectra(space.table, space.free_reps, self.freqs)
        fre, fim = orbit_spectra(space.table, space.forced, self.freqs)
        self.base_re = fre.sum(axis=0)
        self.base_im = fim.sum(axis=0)

    def scan(self, start: int, stop: int):
        """Return ``(passing_combos, scanned)`` for ranks in ``[start, stop)``."""
        stop = min(stop, self.space.total)
        if start >= stop:
            return [], 0
        first = self.space.unrank(start)
        sizes = np.asarray(self.space.sizes, dtype=np.int64)
        return kernels.scan_window(self.re, self.im, sizes, self.base_re, self.base_im,
                                   first, self.space.free_target, stop - start, self.bound,
                                   self.space.feasible)

