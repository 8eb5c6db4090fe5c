"""Necessary conditions on the length of a periodic Golay pair."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .errors import GolayError, OddExponent

MAX_SUPPORTED = 10 ** 6

# Lengths with a known periodic Golay pair that are provably not Golay
# numbers. Later results are deliberately left out.
KNOWN_PERIODIC_ONLY = frozenset({34, 50, 58, 68, 72, 74, 82})

# Lengths settled by the explicit constructions shipped in data/fixtures.txt.
# Whether these are Golay numbers is open.
CONSTRUCTED = frozenset({74, 82, 122, 164, 202, 226})

# Even sums of two squares ruled out by Arasu-Xiang below 500.
ARASU_XIANG_EXCLUDED = (18, 36, 98, 162, 242, 324, 392, 484, 490)


class KnownStatus(str, Enum):
    GOLAY = "golay"
    PERIODIC_ONLY = "periodic_only"
    EXCLUDED = "excluded"
    OPEN = "open"


@dataclass(frozen=True)
class LengthVerdict:
    v: int
    even: bool
    two_squares: bool
    eks_golay_possible: bool
    # None when some p = 3 (mod 4) has odd exponent: the two-squares
    # failure already decides the length and the bound is undefined
    arasu_xiang_pass: bool | None
    known_status: KnownStatus

    @property
    def failures(self) -> list:
        out = []
        if self.v > 1 and not self.even:
            out.append("odd")
        if not self.two_squares:
            out.append("not-sum-of-two-squares")
        if self.arasu_xiang_pass is False:
            out.append("arasu-xiang")
        return out


def factorize(v: int) -> dict:
    if not 1 <= v <= MAX_SUPPORTED:
        raise GolayError(f"v = {v} outside supported range [1, {MAX_SUPPORTED}]")
    out = {}
    p = 2
    while p * p <= v:
        while v % p == 0:
            out[p] = out.get(p, 0) + 1
            v //= p
        p += 1 if p == 2 else 2
    if v > 1:
        out[v] = out.get(v, 0) + 1
    return out


def is_sum_of_two_squares(v: int) -> bool:
    """Every prime 3 (mod 4) must divide v to an even power."""
    return all(t % 2 == 0 for p, t in factorize(v).items() if p % 4 == 3)


def two_squares_brute(v: int) -> bool:
    for a in range(isqrt(v) + 1):
        b2 = v - a * a
        if isqrt(b2) ** 2 == b2:
            return True
    return False


def eks_golay_exclusion(v: int) -> bool:
    """True when v has a prime factor 3 (mod 4), so it cannot be a Golay number."""
    return any(p % 4 == 3 for p in factorize(v))


def arasu_xiang_test(v: int) -> bool:
    if v < 2:
        raise GolayError("Arasu-Xiang test needs v >= 2")
    for p, t in factorize(v).items():
        if p % 4 != 3:
            continue
        if t % 2:
            raise OddExponent(f"{p}^{t} exactly divides {v}; odd exponent fails two-squares")
        u = v // p ** t
        if u < 2 * p ** (t // 2):
            return False
    return True


def is_golay_form(v: int) -> bool:
    """v = 2^a 10^b 26^c, i.e. v = 2^x 5^y 13^z with x >= y + z."""
    if v < 1:
        return False
    exps = {2: 0, 5: 0, 13: 0}
    for p in exps:
        while v % p == 0:
            v //= p
            exps[p] += 1
    return v == 1 and exps[2] >= exps[5] + exps[13]


def is_known_periodic(v: int) -> bool:
    """True when a periodic Golay pair of length v is known.

    The known lengths are closed under multiplying by a Golay number: a
    Golay pair of length g and a periodic Golay pair of length d give a
    periodic Golay pair of length g*d.
    """
    base = KNOWN_PERIODIC_ONLY | CONSTRUCTED
    for g in range(1, v + 1):
        if v % g == 0 and is_golay_form(g):
            d = v // g
            if d in base or is_golay_form(d):
                return True
    return False


def classify_length(v: int) -> LengthVerdict:
    even = v % 2 == 0
    two = is_sum_of_two_squares(v)
    eks_possible = not eks_golay_exclusion(v)
    ax = True if v == 1 else None
    if v >= 2:
        try:
            ax = arasu_xiang_test(v)
        except OddExponent:
            ax = None
    if is_golay_form(v):
        status = KnownStatus.GOLAY
    elif (v > 1 and not even) or not two or ax is False:
        status = KnownStatus.EXCLUDED
    elif is_known_periodic(v):
        status = KnownStatus.PERIODIC_ONLY
    else:
        status = KnownStatus.OPEN
    return LengthVerdict(v, even, two, eks_possible, ax, status)


def open_candidates(range_end: int) -> list:
    if range_end < 1:
        raise GolayError("range_end must be >= 1")
    return [v for v in range(1, range_end + 1)
            if classify_length(v).known_status is KnownStatus.OPEN]
