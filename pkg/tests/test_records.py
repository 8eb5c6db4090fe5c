import itertools

import numpy as np
import pytest

from golaysds.errors import CountExceedsLambda, GolayError, IncompatibleModuli
from golaysds.sds import DifferenceMultiplicity
from golaysds.search.records import (SORTED_HEADER, CandidateRecord, complement_fingerprint,
                                     external_sort, fp_key, hash_join, join_files, merge_join,
                                     parse_record, read_records, record_lines,
                                     write_complemented, write_records)


def rec(reps, fp, v=4):
    return CandidateRecord(v, tuple(reps), len(reps), tuple(fp))


def test_record_line_round_trip():
    r = rec((0, 2), (0, 2, 0))
    line = r.to_line()
    assert line == "v=4 reps=0,2 card=2 fp=0,2,0"
    assert parse_record(line) == r
    assert fp_key(line + "\n") == "0,2,0"
    assert parse_record("v=4 reps= card=0 fp=0,0,0").reps == ()


@pytest.mark.parametrize("line", ["v=4 reps=1 card=1", "x=4 reps=1 card=1 fp=0,0,0",
                                  "v=4 reps=1 card=1 fp=0,0"])
def test_malformed_records(line):
    with pytest.raises(GolayError):
        parse_record(line)


def test_complement_examples():
    f = DifferenceMultiplicity(5, (15,) * 4)
    assert complement_fingerprint(f, 30).counts == (15,) * 4
    with pytest.raises(CountExceedsLambda):
        complement_fingerprint(DifferenceMultiplicity(3, (7, 7)), 5)


def test_complement_of_published_x_is_y(fixtures):
    from golaysds.sds import difference_multiplicities
    x, y = fixtures[0].blocks()
    fx = difference_multiplicities(74, [x])
    fy = difference_multiplicities(74, [y])
    assert complement_fingerprint(fx, 30) == fy


def test_write_complemented_drops(tmp_path):
    src = tmp_path / "y.cand"
    write_records(src, [rec((0,), (0, 0, 0)), rec((0, 1, 2), (2, 2, 2))])
    kept, dropped = write_complemented(src, tmp_path / "c.cand", 1)
    assert (kept, dropped) == (1, 1)
    assert [r.fingerprint for r in read_records(tmp_path / "c.cand")] == [(1, 1, 1)]


def _random_file(path, rng, n, v=6, hi=3):
    fps = rng.integers(0, hi, size=(n, v - 1))
    write_records(path, (CandidateRecord(v, (i,), 1, tuple(int(c) for c in fp))
                         for i, fp in enumerate(fps)))


def test_external_sort_matches_in_memory(tmp_path):
    rng = np.random.default_rng(1)
    _random_file(tmp_path / "a.cand", rng, 1000)
    n = external_sort(tmp_path / "a.cand", tmp_path / "a.sorted", chunk_records=64,
                      tmpdir=tmp_path)
    assert n == 1000
    lines = (tmp_path / "a.sorted").read_text().splitlines()
    assert lines[0] == SORTED_HEADER
    assert [fp_key(l) for l in lines[1:]] == sorted(fp_key(l) for l in lines[1:])
    assert sorted(lines[1:]) == sorted((tmp_path / "a.cand").read_text().splitlines())
    assert not [p for p in tmp_path.iterdir() if p.name.startswith("run")]


def test_merge_join_equals_hash_join(tmp_path):
    rng = np.random.default_rng(2)
    _random_file(tmp_path / "a.cand", rng, 700)
    _random_file(tmp_path / "b.cand", rng, 500)
    expected = sorted(hash_join(tmp_path / "a.cand", tmp_path / "b.cand"))
    assert expected
    pairs, method = join_files(tmp_path / "a.cand", tmp_path / "b.cand", memory_budget=10,
                               workdir=tmp_path, chunk_records=50)
    assert method == "merge"
    assert sorted(pairs) == expected
    pairs, method = join_files(tmp_path / "a.cand", tmp_path / "b.cand", memory_budget=10 ** 6,
                               workdir=tmp_path)
    assert method == "hash"
    assert sorted(pairs) == expected


def test_join_against_nested_loop(tmp_path):
    rng = np.random.default_rng(3)
    _random_file(tmp_path / "a.cand", rng, 80, hi=2)
    _random_file(tmp_path / "b.cand", rng, 60, hi=2)
    a = list(record_lines(tmp_path / "a.cand"))
    b = list(record_lines(tmp_path / "b.cand"))
    brute = sorted((x, y) for x, y in itertools.product(a, b) if fp_key(x) == fp_key(y))
    assert sorted(hash_join(tmp_path / "a.cand", tmp_path / "b.cand")) == brute


def test_merge_join_requires_sorted_header(tmp_path):
    write_records(tmp_path / "a.cand", [rec((0,), (0, 0, 0))])
    with pytest.raises(GolayError):
        list(merge_join(tmp_path / "a.cand", tmp_path / "a.cand"))


def test_join_rejects_mixed_moduli(tmp_path):
    write_records(tmp_path / "a.cand", [rec((0,), (0, 0, 0))])
    write_records(tmp_path / "b.cand", [rec((0,), (0,) * 5, v=6)])
    with pytest.raises(IncompatibleModuli):
        join_files(tmp_path / "a.cand", tmp_path / "b.cand", 10, tmp_path)


def test_empty_files_join(tmp_path):
    (tmp_path / "a.cand").write_text("")
    write_records(tmp_path / "b.cand", [rec((0,), (0, 0, 0))])
    pairs, _ = join_files(tmp_path / "a.cand", tmp_path / "b.cand", 0, tmp_path)
    assert list(pairs) == []
