"""Line-oriented fixture format for pairs in compact orbit notation.

One pair per line::

    pair v=74 H=1,47,63 J=1,4,... K=1,2,... params=36,31,30

``gens=47`` may replace ``H=`` (the subgroup is then closed from the
generators). Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .core import SdsParams, pair_lambda
from .errors import (FixtureError, GolayError, ParamMismatch, ParseError, RepNotCanonical)
from .orbits import OrbitTable, UnitSubgroup, close_subgroup, expand_index_set, orbit_partition

_LIST_KEYS = ("H", "gens", "J", "K", "params")


@dataclass(frozen=True)
class FixtureSpec:
    v: int
    subgroup: UnitSubgroup
    j_reps: tuple
    k_reps: tuple
    params: SdsParams
    line: int | None = field(default=None, compare=False)

    @property
    def table(self) -> OrbitTable:
        t = self.__dict__.get("_table")
        if t is None:
            t = orbit_partition(self.subgroup)
            object.__setattr__(self, "_table", t)
        return t

    def blocks(self) -> tuple:
        return expand_index_set(self.table, self.j_reps), expand_index_set(self.table, self.k_reps)

    def to_line(self) -> str:
        r, s = self.params.block_sizes
        return (f"pair v={self.v} H={_join(self.subgroup.elements)} J={_join(self.j_reps)} "
                f"K={_join(self.k_reps)} params={r},{s},{self.params.lam}")


def _join(values):
    return ",".join(str(x) for x in values)


def _int_list(text, key, lineno):
    if text == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ParseError(f"{key}= expects comma-separated integers, got {text!r}", lineno) from None


def parse_line(line: str, lineno: int | None = None) -> FixtureSpec | None:
    """Parse and validate one line; ``None`` for blank/comment lines."""
    body = line.split("#", 1)[0].strip()
    if not body:
        return None
    tokens = body.split()
    if tokens[0] != "pair":
        raise ParseError(f"expected 'pair', got {tokens[0]!r}", lineno)
    fields = {}
    for tok in tokens[1:]:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("v",) + _LIST_KEYS:
            raise ParseError(f"unexpected token {tok!r}", lineno)
        if key in fields:
            raise ParseError(f"{key}= given twice", lineno)
        fields[key] = value
    missing = [k for k in ("v", "J", "K", "params") if k not in fields]
    if "H" not in fields and "gens" not in fields:
        missing.append("H")
    if missing:
        raise ParseError(f"missing {', '.join(missing)}", lineno)
    try:
        v = int(fields["v"])
    except ValueError:
        raise ParseError(f"v= expects an integer, got {fields['v']!r}", lineno) from None
    if v < 1:
        raise ParseError(f"v must be positive, got {v}", lineno)
    try:
        if "H" in fields:
            h = UnitSubgroup(v, tuple(_int_list(fields["H"], "H", lineno)))
            if "gens" in fields:
                gen_h = close_subgroup(v, _int_list(fields["gens"], "gens", lineno))
                if gen_h != h:
                    raise ParseError(f"H={fields['H']} differs from the closure of gens", lineno)
        else:
            h = close_subgroup(v, _int_list(fields["gens"], "gens", lineno))
    except FixtureError:
        raise
    except GolayError as exc:
        raise ParseError(str(exc), lineno) from None

    j = _int_list(fields["J"], "J", lineno)
    k = _int_list(fields["K"], "K", lineno)
    stated = _int_list(fields["params"], "params", lineno)
    if len(stated) != 3:
        raise ParseError("params= expects r,s,lambda", lineno)

    table = orbit_partition(h)
    for name, reps in (("J", j), ("K", k)):
        if len(set(reps)) != len(reps):
            raise RepNotCanonical(f"{name} repeats a representative", lineno)
        for rep in reps:
            if not 0 <= rep < v or table.rep_of[rep] != rep:
                raise RepNotCanonical(f"{name} entry {rep} is not the smallest element of its orbit",
                                      lineno)
    r = sum(table.size_of(x) for x in j)
    s = sum(table.size_of(x) for x in k)
    if (r, s) != tuple(stated[:2]):
        raise ParamMismatch(f"expanded sizes ({r},{s}) differ from stated ({stated[0]},{stated[1]})",
                            lineno)
    try:
        lam = pair_lambda(v, r, s)
        params = SdsParams(v, (r, s), lam)
    except GolayError as exc:
        raise ParamMismatch(f"sizes ({r},{s}) are not valid pair parameters at v={v}: {exc}",
                            lineno) from None
    if lam != stated[2]:
        raise ParamMismatch(f"stated lambda {stated[2]} but r+s-v/2 = {lam}", lineno)
    spec = FixtureSpec(v, h, tuple(j), tuple(k), params, lineno)
    object.__setattr__(spec, "_table", table)
    return spec


def iter_fixture_lines(text: str):
    """Yield ``(lineno, spec_or_error)`` for every non-blank line.

    Validation errors are yielded instead of raised so a batch can report
    them per fixture.
    """
    for lineno, line in enumerate(text.splitlines(), start=1):
        try:
            spec = parse_line(line, lineno)
        except FixtureError as exc:
            yield lineno, exc
            continue
        if spec is not None:
            yield lineno, spec


def parse_fixture(text: str) -> list:
    out = []
    for _, item in iter_fixture_lines(text):
        if isinstance(item, FixtureError):
            raise item
        out.append(item)
    return out


def serialize_fixtures(specs, header: str | None = None) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.extend(s.to_line() for s in specs)
    return "".join(line + "\n" for line in lines)


def fixture_from_blocks(table: OrbitTable, j_reps, k_reps) -> FixtureSpec:
    x = expand_index_set(table, j_reps)
    y = expand_index_set(table, k_reps)
    lam = pair_lambda(table.v, len(x), len(y))
    spec = FixtureSpec(table.v, table.subgroup, tuple(sorted(j_reps)), tuple(sorted(k_reps)),
                       SdsParams(table.v, (len(x), len(y)), lam))
    object.__setattr__(spec, "_table", table)
    return spec


def bundled_fixtures_text() -> str:
    return resources.files("golaysds").joinpath("data/fixtures.txt").read_text()


def bundled_fixtures_path() -> Path:
    return Path(str(resources.files("golaysds").joinpath("data/fixtures.txt")))


def load_bundled() -> list:
    return parse_fixture(bundled_fixtures_text())

