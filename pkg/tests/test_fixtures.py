import pytest
from hypothesis import given, strategies as st

from golaysds.errors import ParamMismatch, ParseError, RepNotCanonical
from golaysds.fixtures import (bundled_fixtures_text, fixture_from_blocks, parse_fixture,
                               parse_line, serialize_fixtures)
from golaysds.orbits import close_subgroup, orbit_partition

V74 = "pair v=74 H=1,47,63 J=1,4,6,7,9,12,22,23,28,29,34,42 K=1,2,4,6,9,12,17,21,22,37,55 " \
      "params=36,31,30"


def test_bundled_counts(fixtures):
    assert len(fixtures) == 11
    vs = [s.v for s in fixtures]
    assert [vs.count(v) for v in (74, 82, 122, 164, 202, 226)] == [2, 2, 1, 3, 1, 2]


def test_empty_document():
    assert parse_fixture("") == []
    assert parse_fixture("# only a comment\n\n") == []


def test_parse_v74_line():
    spec = parse_line(V74)
    assert spec.v == 74 and spec.subgroup.elements == (1, 47, 63)
    assert spec.params.block_sizes == (36, 31) and spec.params.lam == 30


def test_generators_form():
    spec = parse_line(V74.replace("H=1,47,63", "gens=47"))
    assert spec == parse_line(V74)


@pytest.mark.parametrize("text, error", [
    (V74.replace("pair ", "pear "), ParseError),
    (V74.replace("J=1,4,", "J=1,x,"), ParseError),
    (V74.replace(" params=36,31,30", ""), ParseError),
    (V74.replace("H=1,47,63", "H=1,47"), ParseError),
    (V74.replace("J=1,4,", "J=47,4,"), RepNotCanonical),
    (V74.replace("J=1,4,", "J=4,4,"), RepNotCanonical),
    (V74.replace("J=1,4,", "J=4,"), ParamMismatch),
    (V74.replace("params=36,31,30", "params=36,31,29"), ParamMismatch),
])
def test_parse_errors(text, error):
    with pytest.raises(error) as err:
        parse_fixture("# header\n" + text)
    assert err.value.line == 2


def test_parse_serialize_parse_identity(fixtures):
    text = serialize_fixtures(fixtures)
    again = parse_fixture(text)
    assert again == fixtures
    assert serialize_fixtures(again) == text


def test_bundled_text_round_trip():
    specs = parse_fixture(bundled_fixtures_text())
    assert parse_fixture(serialize_fixtures(specs, header="copy")) == specs


@given(st.sets(st.integers(0, 9)), st.sets(st.integers(0, 9)))
def test_fixture_from_blocks_round_trip(j, k):
    table = orbit_partition(close_subgroup(10, [1]))
    r, s = len(j), len(k)
    lam = r + s - 5
    if lam < 0 or lam * 9 != r * (r - 1) + s * (s - 1):
        return
    spec = fixture_from_blocks(table, j, k)
    assert parse_fixture(serialize_fixtures([spec])) == [spec]
