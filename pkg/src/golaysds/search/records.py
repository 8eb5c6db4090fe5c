"""Candidate records, the candidate file format and the fingerprint joins.

A candidate file holds one record per line::

    v=74 reps=1,4,6 card=9 fp=2,0,1,...

``fp`` lists the difference multiplicities for differences 1 .. v-1. A file
whose first line is ``#sorted-by=fp`` has its records ordered by the byte
string of the ``fp`` field, which is the order both join inputs share.
"""

from __future__ import annotations

import heapq
import itertools
import os
import tempfile
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from ..errors import CountExceedsLambda, GolayError, IncompatibleModuli
from ..sds import DifferenceMultiplicity

SORTED_HEADER = "#sorted-by=fp"


@dataclass(frozen=True)
class CandidateRecord:
    v: int
    reps: tuple
    cardinality: int
    fingerprint: tuple

    def to_line(self) -> str:
        return (f"v={self.v} reps={','.join(map(str, self.reps))} card={self.cardinality} "
                f"fp={','.join(map(str, self.fingerprint))}")

    @property
    def multiplicity(self) -> DifferenceMultiplicity:
        return DifferenceMultiplicity(self.v, self.fingerprint)


def _ints(text):
    return tuple(int(t) for t in text.split(",")) if text else ()


def parse_record(line: str) -> CandidateRecord:
    try:
        v_tok, reps_tok, card_tok, fp_tok = line.split()
        if not (v_tok.startswith("v=") and reps_tok.startswith("reps=")
                and card_tok.startswith("card=") and fp_tok.startswith("fp=")):
            raise ValueError
        rec = CandidateRecord(int(v_tok[2:]), _ints(reps_tok[5:]), int(card_tok[5:]),
                              _ints(fp_tok[3:]))
    except ValueError:
        raise GolayError(f"malformed candidate record: {line.strip()!r}") from None
    if len(rec.fingerprint) != rec.v - 1:
        raise GolayError(f"fingerprint has {len(rec.fingerprint)} counts, expected {rec.v - 1}")
    return rec


def fp_key(line: str) -> str:
    return line[line.rindex(" fp=") + 4:].rstrip("\n")


def record_lines(path):
    """Record lines of a candidate file (header and comments skipped)."""
    with open(path) as fh:
        for line in fh:
            if line.startswith("#") or not line.strip():
                continue
            yield line if line.endswith("\n") else line + "\n"


def read_records(path):
    for line in record_lines(path):
        yield parse_record(line)


def write_records(path, records, sorted_by_fp=False) -> int:
    """Write records; sorts in memory when ``sorted_by_fp``. Returns the count."""
    lines = [r.to_line() + "\n" for r in records]
    if sorted_by_fp:
        lines.sort(key=fp_key)
    with open(path, "w", newline="\n") as fh:
        if sorted_by_fp:
            fh.write(SORTED_HEADER + "\n")
        fh.writelines(lines)
    return len(lines)


def file_modulus(path):
    """The v of the first record, or None for an empty file."""
    for line in record_lines(path):
        return int(line.split(None, 1)[0][2:])
    return None


def count_records(path) -> int:
    return sum(1 for _ in record_lines(path))


def complement_fingerprint(f: DifferenceMultiplicity, lam: int) -> DifferenceMultiplicity:
    """Replace every multiplicity m by lam - m."""
    over = [c for c in f.counts if c > lam]
    if over:
        raise CountExceedsLambda(f"multiplicity {max(over)} exceeds lambda={lam}")
    return DifferenceMultiplicity(f.v, tuple(lam - c for c in f.counts))


def write_complemented(src, dst, lam: int):
    """Complement every record's fingerprint; drop records that cannot match.

    Returns ``(kept, dropped)``.
    """
    kept = dropped = 0
    with open(dst, "w", newline="\n") as out:
        for rec in read_records(src):
            try:
                comp = complement_fingerprint(rec.multiplicity, lam)
            except CountExceedsLambda:
                dropped += 1
                continue
            out.write(CandidateRecord(rec.v, rec.reps, rec.cardinality, comp.counts).to_line()
                      + "\n")
            kept += 1
    return kept, dropped


def external_sort(src, dst, chunk_records: int = 200_000, tmpdir=None) -> int:
    """Sort a candidate file by fingerprint using bounded memory.

    Sorted runs of ``chunk_records`` lines are spilled to temporary files and
    merged with a heap. Returns the number of records written.
    """
    runs = []
    lines = record_lines(src)
    n = 0
    try:
        while True:
            chunk = list(itertools.islice(lines, chunk_records))
            if not chunk:
                break
            chunk.sort(key=fp_key)
            fd, name = tempfile.mkstemp(prefix="run", suffix=".cand", dir=tmpdir)
            with os.fdopen(fd, "w", newline="\n") as fh:
                fh.writelines(chunk)
            runs.append(name)
            n += len(chunk)
        handles = [open(name) for name in runs]
        try:
            with open(dst, "w", newline="\n") as out:
                out.write(SORTED_HEADER + "\n")
                out.writelines(heapq.merge(*handles, key=fp_key))
        finally:
            for fh in handles:
                fh.close()
    finally:
        for name in runs:
            os.unlink(name)
    return n


def _is_sorted_file(path) -> bool:
    with open(path) as fh:
        return fh.readline().rstrip("\n") == SORTED_HEADER


def merge_join(sorted_a, sorted_b):
    """Yield ``(line_a, line_b)`` for equal fingerprints of two sorted files."""
    for path in (sorted_a, sorted_b):
        if not _is_sorted_file(path):
            raise GolayError(f"{path} lacks the {SORTED_HEADER} header")
    groups_a = itertools.groupby(record_lines(sorted_a), key=fp_key)
    groups_b = itertools.groupby(record_lines(sorted_b), key=fp_key)
    ka, ga = next(groups_a, (None, None))
    kb, gb = next(groups_b, (None, None))
    while ka is not None and kb is not None:
        if ka < kb:
            ka, ga = next(groups_a, (None, None))
        elif kb < ka:
            kb, gb = next(groups_b, (None, None))
        else:
            left = list(ga)
            right = list(gb)
            for la in left:
                for lb in right:
                    yield la, lb
            ka, ga = next(groups_a, (None, None))
            kb, gb = next(groups_b, (None, None))


def hash_join(path_a, path_b):
    """In-memory equivalent of :func:`merge_join`; ``path_b`` is the build side."""
    table = defaultdict(list)
    for line in record_lines(path_b):
        table[fp_key(line)].append(line)
    for la in record_lines(path_a):
        for lb in table.get(fp_key(la), ()):
            yield la, lb


def join_files(path_a, path_b, memory_budget: int, workdir, chunk_records: int = 200_000):
    """Equality join on fingerprints, choosing the path by record count.

    Returns ``(pairs_iterator, method)`` where method is ``"hash"`` or
    ``"merge"``.
    """
    va, vb = file_modulus(path_a), file_modulus(path_b)
    if va is not None and vb is not None and va != vb:
        raise IncompatibleModuli(f"candidate files over Z_{va} and Z_{vb}")
    total = count_records(path_a) + count_records(path_b)
    if total <= memory_budget:
        return hash_join(path_a, path_b), "hash"
    a = _sorted_copy(path_a, Path(workdir), chunk_records)
    b = _sorted_copy(path_b, Path(workdir), chunk_records)
    return merge_join(a, b), "merge"


def _sorted_copy(src, workdir: Path, chunk_records: int):
    if _is_sorted_file(src):
        return src
    dst = workdir / (Path(src).name + ".sorted")
    external_sort(src, dst, chunk_records, tmpdir=workdir)
    return dst
