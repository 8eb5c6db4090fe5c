"""Multiplicative subgroups of the units of Z_v and their orbits on Z_v."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .core import SubsetZv
from .errors import DuplicateIndex, GolayError, NotARepresentative, NotAUnit, NotOrbitUnion


@dataclass(frozen=True)
class UnitSubgroup:
    v: int
    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted(set(int(h) % self.v for h in self.elements)))
        for h in elems:
            if gcd(h, self.v) != 1:
                raise NotAUnit(f"{h} is not a unit modulo {self.v}")
        if 1 % self.v not in elems:
            raise GolayError("a subgroup must contain 1")
        members = set(elems)
        for a in elems:
            for b in elems:
                if a * b % self.v not in members:
                    raise GolayError(f"{sorted(members)} is not closed: {a}*{b} mod {self.v}")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def close_subgroup(v: int, generators: Iterable[int]) -> UnitSubgroup:
    """Smallest subgroup of the units mod ``v`` containing ``generators``."""
    if v < 1:
        raise GolayError(f"modulus must be positive, got {v}")
    gens = [int(g) for g in generators]
    for g in gens:
        if not 1 <= g < max(v, 2) or gcd(g, v) != 1:
            raise NotAUnit(f"generator {g} is not a unit modulo {v}")
    group = {1 % v}
    frontier = list(group)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g % v
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return UnitSubgroup(v, tuple(group))


@dataclass(frozen=True)
class OrbitTable:
    """Partition of Z_v into orbits of ``subgroup``, sorted by representative."""

    v: int
    subgroup: UnitSubgroup
    orbits: tuple
    rep_of: dict = field(compare=False, repr=False)

    @property
    def reps(self) -> tuple:
        return tuple(o.elements[0] for o in self.orbits)

    def orbit(self, rep: int) -> SubsetZv:
        return self.orbits[self._index()[rep]]

    def index_of(self, rep: int) -> int:
        return self._index()[rep]

    def size_of(self, rep: int) -> int:
        return len(self.orbit(rep))

    def _index(self):
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {o.elements[0]: i for i, o in enumerate(self.orbits)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def describe(self) -> str:
        lines = [f"v={self.v} H={','.join(map(str, self.subgroup))} orbits={len(self.orbits)}"]
        for o in self.orbits:
            lines.append(f"{o.elements[0]}: {','.join(map(str, o.elements))}")
        return "\n".join(lines)


def orbit_partition(h: UnitSubgroup) -> OrbitTable:
    v = h.v
    rep_of = {}
    orbits = []
    for j in range(v):
        if j in rep_of:
            continue
        orbit = sorted({g * j % v for g in h})
        # j is the first unseen residue, so it is the orbit minimum
        for e in orbit:
            rep_of[e] = j
        orbits.append(SubsetZv(v, tuple(orbit)))
    return OrbitTable(v, h, tuple(orbits), rep_of)


def expand_index_set(t: OrbitTable, reps: Iterable[int]) -> SubsetZv:
    """Union of the orbits named by their smallest elements."""
    reps = list(reps)
    seen = set()
    elems = []
    for j in reps:
        if j in seen:
            raise DuplicateIndex(f"representative {j} listed twice")
        seen.add(j)
        if not 0 <= j < t.v or t.rep_of[j] != j:
            hint = "" if not 0 <= j < t.v else f" (orbit minimum is {t.rep_of[j]})"
            raise NotARepresentative(f"{j} is not an orbit representative{hint}")
        elems.extend(t.orbit(j).elements)
    return SubsetZv(t.v, tuple(elems))


def compress_to_index_set(t: OrbitTable, x: SubsetZv) -> list:
    if x.v != t.v:
        raise GolayError(f"moduli differ: {x.v} != {t.v}")
    members = set(x.elements)
    reps = sorted({t.rep_of[e] for e in members})
    for j in reps:
        missing = set(t.orbit(j).elements) - members
        if missing:
            raise NotOrbitUnion(
                f"subset cuts orbit {j}: missing {sorted(missing)}")
    return reps
