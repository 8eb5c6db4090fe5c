import json

import pytest

from golaysds.cli import main
from golaysds.fixtures import bundled_fixtures_path, bundled_fixtures_text, parse_fixture
from golaysds.hadamard import is_hadamard, parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_bundled(capsys):
    code, out, _ = run(capsys, "verify", str(bundled_fixtures_path()))
    assert code == 0
    assert out.count("PASS line") == 11
    assert "11/11 fixtures verified" in out


def test_verify_mutated_fixture(capsys, tmp_path):
    lines = bundled_fixtures_text().splitlines()
    idx = next(i for i, l in enumerate(lines) if l.startswith("pair v=74"))
    # swap one J representative for another orbit of the same size
    lines[idx] = lines[idx].replace("J=1,4,6,", "J=1,5,6,")
    path = tmp_path / "bad.txt"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert out.count("FAIL line") == 1 and out.count("PASS line") == 10
    assert f"FAIL line {idx + 1} v=74" in out


def test_verify_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("pair v=74 nonsense\n")
    assert run(capsys, "verify", str(path))[0] == 2


def test_verify_missing_path(capsys, tmp_path):
    code, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"))
    assert code == 3 and "cannot read" in err


def test_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_conditions_open_only(capsys):
    code, out, _ = run(capsys, "conditions", "300", "--open-only")
    assert code == 0
    assert [int(x) for x in out.split()] == [90, 106, 130, 146, 170, 178, 180, 194, 212, 218,
                                             234, 250, 274, 290, 292, 298]


def test_conditions_table(capsys):
    code, out, _ = run(capsys, "conditions", "10")
    rows = out.splitlines()
    assert code == 0 and len(rows) == 11
    golay = [int(r.split()[0]) for r in rows[1:] if r.split()[5] == "golay"]
    assert golay == [1, 2, 4, 8, 10]
    code, out, _ = run(capsys, "conditions", "1")
    assert len(out.splitlines()) == 2
    assert run(capsys, "conditions", "0")[0] == 2


def test_hadamard_export(capsys, tmp_path):
    code, out, _ = run(capsys, "hadamard", str(bundled_fixtures_path()), "--out", str(tmp_path))
    assert code == 0
    files = sorted(tmp_path.glob("hadamard_v74_*.txt"))
    assert len(files) == 2
    m = parse_matrix(files[0].read_text())
    assert m.order == 148 and is_hadamard(m)
    assert len(list(tmp_path.glob("*.txt"))) == 11


def test_hadamard_small_and_failing(capsys, tmp_path):
    good = "pair v=4 H=1 J=0 K=0 params=1,1,0\n"
    bad = "pair v=10 H=1 J=0,1,2,3 K=0,1,2 params=4,3,2\n"
    path = tmp_path / "f.txt"
    path.write_text(good + bad)
    code, out, _ = run(capsys, "hadamard", str(path), "--out", str(tmp_path / "m"), "--csv")
    assert code == 1
    assert [p.name for p in (tmp_path / "m").iterdir()] == ["hadamard_v4_line1.csv"]
    assert "FAIL line 2" in out


def test_search_closed_loop(capsys, tmp_path):
    plan = {"v": 10, "h_generators": [], "r": 4, "s": 3}
    (tmp_path / "plan.json").write_text(json.dumps(plan))
    out_dir = tmp_path / "out"
    code, out, _ = run(capsys, "search", str(tmp_path / "plan.json"), "--jobs", "1",
                       "--out", str(out_dir))
    assert code == 0
    assert "stage verified.distinct_pairs=" in out
    solutions = (out_dir / "solutions.txt").read_text()
    assert len(parse_fixture(solutions)) > 0
    code, out, _ = run(capsys, "verify", str(out_dir / "solutions.txt"))
    assert code == 0 and "FAIL" not in out
    assert (out_dir / "report.txt").read_text().startswith("# periodic Golay pair search report")


def test_search_v4_emits_solution(capsys, tmp_path):
    (tmp_path / "plan.json").write_text(json.dumps({"v": 4, "r": 1, "s": 1}))
    code, out, _ = run(capsys, "search", str(tmp_path / "plan.json"), "--out",
                       str(tmp_path / "o"))
    assert code == 0
    assert len(parse_fixture((tmp_path / "o" / "solutions.txt").read_text())) >= 1


def test_search_bad_plan(capsys, tmp_path):
    (tmp_path / "plan.json").write_text(json.dumps({"v": 7, "r": 1, "s": 1, "extra": 0}))
    code, _, err = run(capsys, "search", str(tmp_path / "plan.json"))
    assert code == 2
    assert "offending field: v" in err and "offending field: extra" in err
    assert run(capsys, "search", str(tmp_path / "missing.json"))[0] == 3


def test_orbits_command(capsys):
    code, out, _ = run(capsys, "orbits", "--v", "74", "--gens", "47")
    assert code == 0
    assert out.splitlines()[0].startswith("v=74 H=1,47,63")
    assert "1: 1,47,63" in out and "37: 37" in out
    assert run(capsys, "orbits", "--v", "74", "--gens", "2")[0] == 2


def test_example_plans_load():
    from pathlib import Path
    from golaysds.search.plan import load_plan
    plans = sorted((Path(__file__).parent.parent / "plans").glob("*.json"))
    assert plans
    for p in plans:
        assert load_plan(p).v % 2 == 0
