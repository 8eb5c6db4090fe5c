import numpy as np
import pytest
from hypothesis import given, strategies as st

from golaysds.conditions import two_squares_brute
from golaysds.core import (BinarySequence, PeriodicGolayPair, SdsParams, SubsetZv,
                           check_square_decomposition, derive_pair_params,
                           sequence_from_subset, subset_from_sequence)
from golaysds.errors import (DecompositionFails, GolayError, NegativeLambda, NotComplementary,
                             OddLength)


def test_empty_subset_is_all_ones():
    assert list(sequence_from_subset(SubsetZv(4, ()))) == [1, 1, 1, 1]


def test_single_flip():
    assert list(sequence_from_subset(SubsetZv(4, (0,)))) == [-1, 1, 1, 1]


def test_published_v74_block_has_36_minus_ones(fixtures):
    x, _ = fixtures[0].blocks()
    a = sequence_from_subset(x)
    assert a.v == 74
    assert sum(1 for e in a if e == -1) == 36


@pytest.mark.parametrize("entries, expected", [((1, 1), ()), ((-1, 1, -1), (0, 2))])
def test_subset_from_sequence(entries, expected):
    assert subset_from_sequence(BinarySequence(entries)).elements == expected


@given(st.integers(1, 60).flatmap(
    lambda v: st.tuples(st.just(v), st.sets(st.integers(0, v - 1)))))
def test_round_trip(case):
    v, elems = case
    x = SubsetZv.of(v, elems)
    assert subset_from_sequence(sequence_from_subset(x)) == x


def test_round_trip_1000_random_subsets():
    rng = np.random.default_rng(101)
    for _ in range(1000):
        v = int(rng.integers(1, 80))
        mask = rng.random(v) < 0.5
        x = SubsetZv.of(v, np.flatnonzero(mask))
        assert subset_from_sequence(sequence_from_subset(x)) == x


def test_sequence_rejects_bad_entries():
    with pytest.raises(GolayError):
        BinarySequence([1, 0, -1])
    with pytest.raises(GolayError):
        BinarySequence([])


def test_subset_invariants():
    with pytest.raises(GolayError):
        SubsetZv(5, (1, 1))
    with pytest.raises(GolayError):
        SubsetZv(5, (5,))
    assert SubsetZv(5, (3, 1)).elements == (1, 3)


def test_derive_pair_params_v74():
    p = derive_pair_params(SubsetZv.of(74, range(36)), SubsetZv.of(74, range(31)))
    assert (p.v, p.block_sizes, p.lam, p.n) == (74, (36, 31), 30, 37)


def test_derive_pair_params_v4():
    p = derive_pair_params(SubsetZv(4, (0,)), SubsetZv(4, (0,)))
    assert (p.block_sizes, p.lam, p.n) == ((1, 1), 0, 2)


def test_derive_pair_params_v202():
    p = derive_pair_params(SubsetZv.of(202, range(100)), SubsetZv.of(202, range(91)))
    assert (p.lam, p.n) == (90, 101)


def test_derive_pair_params_errors():
    with pytest.raises(OddLength):
        derive_pair_params(SubsetZv(5, (0,)), SubsetZv(5, (1,)))
    with pytest.raises(NegativeLambda):
        derive_pair_params(SubsetZv(6, (0,)), SubsetZv(6, (1,)))
    with pytest.raises(DecompositionFails):
        derive_pair_params(SubsetZv(4, (0,)), SubsetZv(4, (0, 1)))


@pytest.mark.parametrize("params, expected", [
    (SdsParams(74, (36, 31), 30), (2, 12)),
    (SdsParams(4, (1, 1), 0), (2, 2)),
    (SdsParams(82, (45, 36), 40), (-8, 10)),
])
def test_square_decomposition(params, expected):
    a, b = check_square_decomposition(params)
    assert (a, b) == expected
    assert a * a + b * b == 2 * params.v


def test_square_decomposition_needs_two_blocks():
    with pytest.raises(DecompositionFails):
        check_square_decomposition(SdsParams(7, (3,), 1))


def test_feasibility_identity_enforced():
    with pytest.raises(GolayError):
        SdsParams(74, (36, 31), 29)


def test_pair_params_match_two_squares_for_small_v():
    # some (r, s) is admissible exactly when 2v is a sum of two squares
    for v in range(2, 121, 2):
        ok = False
        for r in range(1, v + 1):
            for s in range(r, v + 1):
                lam = r + s - v // 2
                if lam < 0 or lam * (v - 1) != r * (r - 1) + s * (s - 1):
                    continue
                a, b = check_square_decomposition(SdsParams(v, (r, s), lam))
                assert a * a + b * b == 2 * v
                ok = True
        assert ok == two_squares_brute(2 * v), v


def test_derive_pair_params_agrees_with_formula():
    rng = np.random.default_rng(3)
    for _ in range(300):
        v = 2 * int(rng.integers(1, 40))
        r, s = (int(t) for t in rng.integers(1, v + 1, size=2))
        lam = r + s - v // 2
        good = lam >= 0 and lam * (v - 1) == r * (r - 1) + s * (s - 1)
        try:
            p = derive_pair_params(SubsetZv.of(v, range(r)), SubsetZv.of(v, range(s)))
        except GolayError:
            assert not good
        else:
            assert good and p.lam == lam


def test_periodic_golay_pair_factory():
    a = BinarySequence([-1, 1, 1, 1])
    pair = PeriodicGolayPair.from_sequences(a, a)
    assert pair.v == 4
    with pytest.raises(NotComplementary) as err:
        PeriodicGolayPair.from_sequences(BinarySequence([1, 1]), BinarySequence([1, 1]))
    assert err.value.shift == 1
    with pytest.raises(TypeError):
        PeriodicGolayPair(a, a)
