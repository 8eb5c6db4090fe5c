"""generate -> PSD filter -> fingerprint -> translate -> complement -> join -> verify."""

from __future__ import annotations

import logging
import os
import shutil
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from .. import kernels
from ..errors import GolayError, IncompatibleModuli
from ..orbits import OrbitTable, UnitSubgroup, compress_to_index_set, expand_index_set
from ..sds import elementary_canonical_form, verify_periodic_golay_pair
from .plan import SearchPlan
from .records import (CandidateRecord, file_modulus, join_files, parse_record,
                      read_records, write_complemented)
from .space import CombinationSpace, SpectralScanner

log = logging.getLogger(__name__)


def block_space(plan: SearchPlan, block: str, table: OrbitTable | None = None) -> CombinationSpace:
    bp = plan.block(block)
    return CombinationSpace(table or plan.table(), plan.target(block), bp.forced, bp.excluded)


def resolve_windows(space: CombinationSpace, windows) -> list:
    """Turn window specs into sorted, merged, clipped ``[start, stop)`` ranges."""
    total = space.total
    if windows is None:
        return [(0, total)] if total else []
    ranges = []
    for w in windows:
        if isinstance(w, dict):
            centre = space.rank(space.combo_from_reps(w["around"]))
            lo, hi = centre - w["radius"], centre + w["radius"] + 1
        else:
            lo, hi = w
        lo, hi = max(0, lo), min(total, hi)
        if lo < hi:
            ranges.append((lo, hi))
    ranges.sort()
    merged = []
    for lo, hi in ranges:
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def split_ranges(ranges, chunk: int) -> list:
    out = []
    for lo, hi in ranges:
        for start in range(lo, hi, chunk):
            out.append((start, min(hi, start + chunk)))
    return out


def fingerprint(v: int, elements) -> tuple:
    counts = kernels.difference_counts(np.asarray(elements, dtype=np.int64), v)
    return tuple(int(c) for c in counts[1:])


def _scan_job(job):
    """Worker body: scan one rank chunk, return record lines and the scanned count."""
    plan, block, start, stop, backend = job
    if backend != kernels.get_backend():
        kernels.set_backend(backend)
    space = block_space(plan, block)
    scanner = SpectralScanner(space, plan.psd_bound_slack)
    passing, scanned = scanner.scan(start, stop)
    lines = []
    for combo in passing:
        elems = space.elements_of(combo)
        rec = CandidateRecord(space.v, space.reps_of(combo), int(elems.size),
                              fingerprint(space.v, elems))
        lines.append(rec.to_line() + "\n")
    return lines, scanned


def _shard_job(args):
    job, shard = args
    lines, scanned = _scan_job(job)
    with open(shard, "w", newline="\n") as fh:
        fh.writelines(lines)
    return scanned, len(lines)


def enumerate_candidates(plan: SearchPlan, block: str) -> Iterator[CandidateRecord]:
    """Stream PSD-passing orbit unions for one block in lexicographic order."""
    space = block_space(plan, block)
    backend = kernels.get_backend()
    for start, stop in split_ranges(resolve_windows(space, plan.block(block).windows),
                                    plan.chunk_size):
        lines, _ = _scan_job((plan, block, start, stop, backend))
        for line in lines:
            yield parse_record(line)


def write_block_candidates(plan: SearchPlan, block: str, path, jobs: int = 1,
                           workdir=None) -> tuple:
    """Enumerate one block into a candidate file. Returns ``(scanned, passed)``.

    Chunks are independent; with ``jobs > 1`` each worker writes its own
    shard and the shards are concatenated in rank order, so the output file
    does not depend on ``jobs``.
    """
    space = block_space(plan, block)
    chunks = split_ranges(resolve_windows(space, plan.block(block).windows), plan.chunk_size)
    backend = kernels.get_backend()
    jobs_list = [(plan, block, lo, hi, backend) for lo, hi in chunks]
    scanned = passed = 0
    path = Path(path)
    if jobs <= 1 or len(chunks) <= 1:
        with open(path, "w", newline="\n") as out:
            for job in jobs_list:
                lines, n = _scan_job(job)
                out.writelines(lines)
                scanned += n
                passed += len(lines)
        return scanned, passed
    shard_dir = Path(tempfile.mkdtemp(prefix=f"{block}-shards-", dir=workdir))
    try:
        shards = [shard_dir / f"{block}.{i:06d}.cand" for i in range(len(jobs_list))]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for n, m in pool.map(_shard_job, zip(jobs_list, shards)):
                scanned += n
                passed += m
        with open(path, "w", newline="\n") as out:
            for shard in shards:
                with open(shard) as fh:
                    shutil.copyfileobj(fh, out)
    finally:
        shutil.rmtree(shard_dir, ignore_errors=True)
    return scanned, passed


def translate_candidates(records: Iterable[CandidateRecord], h: UnitSubgroup,
                         table: OrbitTable) -> Iterator[CandidateRecord]:
    """For every record and every h in H emit the record of h*X.

    ``table`` is the orbit table the records' ``reps`` refer to; h*X must be
    a union of its orbits. Duplicates are kept.
    """
    for rec in records:
        if rec.v != table.v or h.v != table.v:
            raise IncompatibleModuli(f"record over Z_{rec.v}, table over Z_{table.v}")
        x = expand_index_set(table, rec.reps)
        for g in h:
            hx = x.scaled(g)
            yield CandidateRecord(rec.v, tuple(compress_to_index_set(table, hx)), len(hx),
                                  fingerprint(rec.v, hx.elements))


@dataclass
class MatchResult:
    raw_matches: int = 0
    join_method: str = "hash"
    y_kept: int = 0
    y_dropped: int = 0
    # distinct verified (J, K) pairs in sorted order
    pairs: list = field(default_factory=list)
    # canonical form -> class index, in order of first appearance
    classes: dict = field(default_factory=dict)
    pair_class: list = field(default_factory=list)

    @property
    def distinct_x(self) -> int:
        return len({j for j, _ in self.pairs})

    @property
    def distinct_y(self) -> int:
        return len({k for _, k in self.pairs})


def match_join(file_x, file_y, lam: int, table: OrbitTable, memory_budget: int = 2_000_000,
               workdir=None) -> MatchResult:
    """Join X fingerprints with complemented Y fingerprints and verify the matches."""
    vx, vy = file_modulus(file_x), file_modulus(file_y)
    if (vx is not None and vx != table.v) or (vy is not None and vy != table.v):
        raise IncompatibleModuli(f"files over Z_{vx} and Z_{vy}, orbit table over Z_{table.v}")
    own_dir = workdir is None
    workdir = Path(tempfile.mkdtemp(prefix="join-")) if own_dir else Path(workdir)
    result = MatchResult()
    try:
        ycomp = workdir / "y_complement.cand"
        result.y_kept, result.y_dropped = write_complemented(file_y, ycomp, lam)
        pairs_iter, result.join_method = join_files(file_x, ycomp, memory_budget, workdir)
        distinct = set()
        for lx, ly in pairs_iter:
            result.raw_matches += 1
            distinct.add((parse_record(lx).reps, parse_record(ly).reps))
        for j, k in sorted(distinct):
            x = expand_index_set(table, j)
            y = expand_index_set(table, k)
            verify_periodic_golay_pair(x, y)
            key = elementary_canonical_form(x, y)
            cls = result.classes.setdefault(key, len(result.classes))
            result.pairs.append((j, k))
            result.pair_class.append(cls)
    finally:
        if own_dir:
            shutil.rmtree(workdir, ignore_errors=True)
    return result


@dataclass
class SearchReport:
    plan: SearchPlan
    subgroup: tuple
    stats: dict
    match: MatchResult
    notes: list = field(default_factory=list)

    @property
    def verified_pairs(self) -> list:
        return list(self.match.pairs)

    def stage_counts_monotone(self) -> bool:
        s = self.stats
        return (s["x.scanned"] >= s["x.psd_pass"] >= self.match.distinct_x
                and s["y.scanned"] >= s["y.psd_pass"] >= self.match.distinct_y)

    def to_text(self) -> str:
        p = self.plan
        h = ",".join(map(str, self.subgroup))
        params = p.params
        out = ["# periodic Golay pair search report",
               f"v={p.v} H={h} r={p.r} s={p.s} lambda={p.lam} "
               f"params={params if params is not None else 'infeasible'}"]
        out.extend(f"note: {n}" for n in self.notes)
        for key, value in self.stats.items():
            out.append(f"stage {key}={value}")
        out.append(f"stage join.method={self.match.join_method}")
        out.append(f"stage join.raw_matches={self.match.raw_matches}")
        out.append(f"stage verified.distinct_pairs={len(self.match.pairs)}")
        out.append(f"stage verified.elementary_inequivalent={len(self.match.classes)}")
        out.append("[pairs]")
        for (j, k), cls in zip(self.match.pairs, self.match.pair_class):
            out.append(f"J={','.join(map(str, j))} K={','.join(map(str, k))} H={h} v={p.v} "
                       f"class={cls}")
        return "\n".join(out) + "\n"


def run_pipeline(plan: SearchPlan, workdir=None, jobs: int = 1) -> SearchReport:
    """Run every stage; intermediate candidate files land in ``workdir``.

    When ``workdir`` is None a temporary directory is used and removed.
    """
    own_dir = workdir is None
    workdir = Path(tempfile.mkdtemp(prefix="golay-search-")) if own_dir else Path(workdir)
    workdir.mkdir(parents=True, exist_ok=True)
    try:
        table = plan.table()
        notes = []
        if plan.params is None:
            notes.append(f"(v, r, s) = ({plan.v}, {plan.r}, {plan.s}) fails "
                         "(v-2r)^2 + (v-2s)^2 = 2v; no pair can exist")
        stats = {}
        files = {}
        for block in ("x", "y"):
            path = workdir / f"{block}.cand"
            try:
                scanned, passed = write_block_candidates(plan, block, path, jobs, workdir)
            except GolayError as exc:
                notes.append(f"{block}: {exc}")
                path.write_text("")
                scanned = passed = 0
            stats[f"{block}.scanned"] = scanned
            stats[f"{block}.psd_pass"] = passed
            files[block] = path
            log.info("%s: scanned %d, %d passed the PSD test", block, scanned, passed)
        x_file = files["x"]
        if plan.translate_x:
            x_file = workdir / "x_translated.cand"
            with open(x_file, "w", newline="\n") as out:
                n = 0
                for rec in translate_candidates(read_records(files["x"]), table.subgroup, table):
                    out.write(rec.to_line() + "\n")
                    n += 1
            stats["x.translated"] = n
        match = match_join(x_file, files["y"], plan.lam, table, plan.memory_budget, workdir)
        stats["y.complement_kept"] = match.y_kept
        stats["y.complement_dropped"] = match.y_dropped
        return SearchReport(plan, table.subgroup.elements, stats, match, notes)
    finally:
        if own_dir:
            shutil.rmtree(workdir, ignore_errors=True)


def default_jobs() -> int:
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except AttributeError:  # not on Linux
        return max(1, os.cpu_count() or 1)

