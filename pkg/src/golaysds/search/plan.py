"""Search plans: what to enumerate, with which subgroup, over which windows.

Plans are JSON documents::

    {
      "v": 74, "h_generators": [47], "r": 36, "s": 31,
      "x": {"forced": [], "excluded": [0, 37],
            "windows": [[0, 5000], {"around": [1, 4, 6], "radius": 2000}]},
      "y": {"forced": [37]},
      "translate_x": true
    }

A window is a half-open rank range ``[start, stop)`` or a radius around the
rank of a representative list. Omitting ``windows`` means the whole space.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from ..core import SdsParams
from ..errors import GolayError, PlanError
from ..orbits import OrbitTable, close_subgroup, orbit_partition

DEFAULT_CHUNK = 1 << 16
DEFAULT_MEMORY_BUDGET = 2_000_000


@dataclass(frozen=True)
class BlockPlan:
    forced: tuple = ()
    excluded: tuple = ()
    # None = the full space; otherwise a tuple of [start, stop) pairs or
    # {"around": reps, "radius": n} dicts
    windows: tuple | None = None


@dataclass(frozen=True)
class SearchPlan:
    v: int
    h_generators: tuple
    r: int
    s: int
    x: BlockPlan = field(default_factory=BlockPlan)
    y: BlockPlan = field(default_factory=BlockPlan)
    psd_bound_slack: float = 1e-6
    translate_x: bool = True
    memory_budget: int = DEFAULT_MEMORY_BUDGET
    chunk_size: int = DEFAULT_CHUNK

    def __post_init__(self):
        problems = validate_fields(self)
        if problems:
            raise PlanError(problems)

    @property
    def lam(self) -> int:
        return self.r + self.s - self.v // 2

    @property
    def params(self) -> SdsParams | None:
        """The SDS parameters, or None when (r, s) cannot occur at this v."""
        try:
            return SdsParams(self.v, (self.r, self.s), self.lam)
        except GolayError:
            return None

    def block(self, name: str) -> BlockPlan:
        if name not in ("x", "y"):
            raise ValueError(f"block must be 'x' or 'y', got {name!r}")
        return self.x if name == "x" else self.y

    def target(self, name: str) -> int:
        return self.r if name == "x" else self.s

    def table(self) -> OrbitTable:
        return orbit_partition(close_subgroup(self.v, self.h_generators))


def validate_fields(plan: SearchPlan) -> list:
    problems = []
    v = plan.v
    if not isinstance(v, int) or v < 2:
        problems.append(("v", "must be an integer >= 2"))
        return problems
    if v % 2:
        problems.append(("v", "must be even"))
    for g in plan.h_generators:
        if not isinstance(g, int) or not 1 <= g < v or gcd(g, v) != 1:
            problems.append(("h_generators", f"{g!r} is not a unit modulo {v}"))
    for name in ("r", "s"):
        val = getattr(plan, name)
        if not isinstance(val, int) or not 1 <= val <= v:
            problems.append((name, f"must be an integer in [1, {v}]"))
    if not problems and plan.lam < 0:
        problems.append(("r", f"r + s - v/2 = {plan.lam} is negative"))
    if plan.psd_bound_slack < 0:
        problems.append(("psd_bound_slack", "must be >= 0"))
    if plan.memory_budget < 0:
        problems.append(("memory_budget", "must be >= 0"))
    if plan.chunk_size < 1:
        problems.append(("chunk_size", "must be >= 1"))
    if problems:
        return problems
    table = plan.table()
    for name in ("x", "y"):
        bp = plan.block(name)
        for key in ("forced", "excluded"):
            for rep in getattr(bp, key):
                if not isinstance(rep, int) or not 0 <= rep < v or table.rep_of[rep] != rep:
                    problems.append((f"{name}.{key}", f"{rep!r} is not an orbit representative"))
        overlap = set(bp.forced) & set(bp.excluded)
        if overlap:
            problems.append((f"{name}.forced", f"{sorted(overlap)} also excluded"))
        forced_size = sum(table.size_of(rep) for rep in bp.forced
                          if isinstance(rep, int) and 0 <= rep < v and table.rep_of[rep] == rep)
        if forced_size > plan.target(name):
            problems.append((f"{name}.forced",
                             f"forced orbits hold {forced_size} elements > target {plan.target(name)}"))
        for w in bp.windows or ():
            if isinstance(w, dict):
                if set(w) != {"around", "radius"} or not isinstance(w["radius"], int) \
                        or w["radius"] < 0:
                    problems.append((f"{name}.windows", f"bad window {w!r}"))
            elif not (isinstance(w, (list, tuple)) and len(w) == 2
                      and all(isinstance(b, int) for b in w) and 0 <= w[0] <= w[1]):
                problems.append((f"{name}.windows", f"bad window {w!r}"))
    return problems


_TOP_KEYS = {"v", "h_generators", "r", "s", "x", "y", "psd_bound_slack", "translate_x",
             "memory_budget", "chunk_size"}
_BLOCK_KEYS = {"forced", "excluded", "windows"}


def plan_from_dict(doc: dict) -> SearchPlan:
    problems = []
    if not isinstance(doc, dict):
        raise PlanError([("<root>", "plan must be a JSON object")])
    for key in sorted(set(doc) - _TOP_KEYS):
        problems.append((key, "unknown field"))
    for key in ("v", "r", "s"):
        if key not in doc:
            problems.append((key, "missing"))
    blocks = {}
    for name in ("x", "y"):
        raw = doc.get(name, {})
        if not isinstance(raw, dict):
            problems.append((name, "must be an object"))
            continue
        for key in sorted(set(raw) - _BLOCK_KEYS):
            problems.append((f"{name}.{key}", "unknown field"))
        windows = raw.get("windows")
        blocks[name] = BlockPlan(tuple(raw.get("forced", ())), tuple(raw.get("excluded", ())),
                                 None if windows is None else tuple(
                                     tuple(w) if isinstance(w, list) else w for w in windows))
    if any(why == "missing" for _, why in problems) or len(blocks) < 2:
        raise PlanError(problems)
    try:
        plan = SearchPlan(
            v=doc["v"], h_generators=tuple(doc.get("h_generators", ())), r=doc["r"], s=doc["s"],
            x=blocks["x"], y=blocks["y"],
            psd_bound_slack=float(doc.get("psd_bound_slack", 1e-6)),
            translate_x=bool(doc.get("translate_x", True)),
            memory_budget=doc.get("memory_budget", DEFAULT_MEMORY_BUDGET),
            chunk_size=doc.get("chunk_size", DEFAULT_CHUNK),
        )
    except PlanError as exc:
        # report structural and value problems together
        raise PlanError(problems + exc.problems) from None
    except (TypeError, ValueError) as exc:
        raise PlanError(problems + [("<root>", str(exc))]) from None
    if problems:
        raise PlanError(problems)
    return plan


def plan_to_dict(plan: SearchPlan) -> dict:
    def block(bp):
        out = {"forced": list(bp.forced), "excluded": list(bp.excluded)}
        if bp.windows is not None:
            out["windows"] = [w if isinstance(w, dict) else list(w) for w in bp.windows]
        return out

    return {"v": plan.v, "h_generators": list(plan.h_generators), "r": plan.r, "s": plan.s,
            "x": block(plan.x), "y": block(plan.y), "psd_bound_slack": plan.psd_bound_slack,
            "translate_x": plan.translate_x, "memory_budget": plan.memory_budget,
            "chunk_size": plan.chunk_size}


def load_plan(path) -> SearchPlan:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PlanError([("<json>", str(exc))]) from None
    return plan_from_dict(doc)
