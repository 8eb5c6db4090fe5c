"""Supplementary difference sets: multiplicities, verification, dedup."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from . import kernels
from .core import (PeriodicGolayPair, SubsetZv, derive_pair_params, sequence_from_subset)
from .errors import GolayError, ParameterInfeasible


@dataclass(frozen=True)
class DifferenceMultiplicity:
    """``counts[c-1]`` ordered pairs inside one block with difference c, summed over blocks."""

    v: int
    counts: tuple

    def __getitem__(self, c):
        return self.counts[c - 1]


def difference_multiplicities(v: int, blocks: Sequence[SubsetZv]) -> DifferenceMultiplicity:
    total = np.zeros(v, dtype=np.int64)
    for block in blocks:
        if block.v != v:
            raise GolayError(f"block over Z_{block.v} mixed into Z_{v}")
        total += kernels.difference_counts(np.asarray(block.elements, dtype=np.int64), v)
    return DifferenceMultiplicity(v, tuple(int(c) for c in total[1:]))


def is_sds(v: int, blocks: Sequence[SubsetZv], lam: int) -> bool:
    return all(c == lam for c in difference_multiplicities(v, blocks).counts)


def verify_periodic_golay_pair(x: SubsetZv, y: SubsetZv) -> PeriodicGolayPair:
    """Check (x, y) both as complementary sequences and as an SDS.

    The two checks are independent; they must agree or an AssertionError is
    raised (it would mean a bug in one of the two code paths).
    """
    if x.v != y.v:
        raise GolayError(f"moduli differ: {x.v} != {y.v}")
    pair = PeriodicGolayPair.from_sequences(sequence_from_subset(x), sequence_from_subset(y))
    try:
        params = derive_pair_params(x, y)
    except GolayError as exc:
        raise ParameterInfeasible(str(exc)) from None
    if not is_sds(x.v, [x, y], params.lam):
        raise AssertionError(
            f"PAF-complementary pair at v={x.v} fails the SDS check with lambda={params.lam}")
    return pair


def _least_translate(elems: np.ndarray, v: int) -> tuple:
    """Lexicographically least sorted image of a block under x -> +-x + c."""
    if elems.size == 0:
        return ()
    images = []
    for signed in (elems, (-elems) % v):
        # the least image contains 0, so only shifts sending a member to 0 matter
        images.append((signed[None, :] - signed[:, None]) % v)
    rows = np.sort(np.vstack(images), axis=1)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    return tuple(int(e) for e in best)


def elementary_canonical_form(x: SubsetZv, y: SubsetZv) -> tuple:
    """Least pair reachable by per-block shifts and negation, block swap, and
    multiplying both blocks by a common unit.

    This is a cheap dedup key, not a full equivalence test: pairs with
    different keys may still be equivalent under a larger group.
    """
    v = x.v
    if y.v != v:
        raise GolayError(f"moduli differ: {x.v} != {y.v}")
    xs = np.asarray(x.elements, dtype=np.int64)
    ys = np.asarray(y.elements, dtype=np.int64)
    best = None
    for u in range(1, max(v, 2)):
        if gcd(u, v) != 1:
            continue
        bx = _least_translate(np.unique(xs * u % v), v)
        by = _least_translate(np.unique(ys * u % v), v)
        cand = min((bx, by), (by, bx))
        if best is None or cand < best:
            best = cand
    return SubsetZv(v, best[0]), SubsetZv(v, best[1])
