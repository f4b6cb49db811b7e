import pytest
from hypothesis import given, settings, strategies as st

from colorcomp.core import ColorLaw
from colorcomp.counting import (
    PartitionProfile,
    binomial,
    check_convolution,
    count_domino_stratum,
    count_parts_closed,
    count_parts_n_minus_1,
    count_parts_n_minus_2,
    count_parts_partition,
    count_total_closed,
    count_total_recurrence,
    fibonacci,
    fibonacci_identity_check,
    invert_transform,
    partition_profiles,
    total_sequence_recurrence,
)

from oracles import fib_table, signed_restricted, weighted_count

GRID = [(a, b) for a in range(4) for b in range(4) if a + b >= 1]


@pytest.mark.parametrize("n, k, expected", [(4, 1, 4), (5, 7, 0), (0, 0, 1), (5, -1, 0), (10, 3, 120)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        binomial(-3, 1)


def test_count_parts_closed_examples():
    assert count_parts_closed(ColorLaw(1, 2), 2, 1) == 4
    assert count_parts_closed(ColorLaw(1, 0), 3, 2) == 4
    assert count_parts_closed(ColorLaw(1, 0), 3, 4) == 0


@pytest.mark.parametrize("a, b", GRID)
def test_diagonal_is_power(a, b):
    for nu in range(1, 8):
        assert count_parts_closed(ColorLaw(a, b), nu, nu) == (a + b) ** nu


def test_zero_power_convention():
    # a = 0 leaves b^k C(nu-1, nu-k); b = 0 leaves a^k C(nu+k-1, nu-k)
    for nu in range(1, 9):
        for k in range(1, nu + 1):
            assert count_parts_closed(ColorLaw(0, 3), nu, k) == 3**k * binomial(nu - 1, nu - k)
            assert count_parts_closed(ColorLaw(2, 0), nu, k) == 2**k * binomial(nu + k - 1, nu - k)


def test_rejects_nonpositive_arguments():
    with pytest.raises(ValueError):
        count_parts_closed(ColorLaw(1, 0), 0, 1)
    with pytest.raises(ValueError):
        count_parts_closed(ColorLaw(1, 0), 3, 0)
    with pytest.raises(ValueError):
        count_total_recurrence(ColorLaw(1, 0), 0)


def test_totals():
    assert count_total_closed(ColorLaw(1, 0), 2) == 3
    assert count_total_closed(ColorLaw(1, 0), 4) == 21
    assert [count_total_recurrence(ColorLaw(1, 0), nu) for nu in range(1, 6)] == [1, 3, 8, 21, 55]
    assert [count_total_recurrence(ColorLaw(1, -2), nu) for nu in range(1, 7)] == [-1, 1, 0, 1, 1, 2]
    assert count_total_recurrence(ColorLaw(2, 0), 2) == 8
    assert total_sequence_recurrence(ColorLaw(1, 0), 5) == [1, 3, 8, 21, 55]
    assert total_sequence_recurrence(ColorLaw(1, 0), 1) == [1]


@pytest.mark.parametrize("a, b", GRID + [(1, -1), (1, -2), (2, -1), (3, -1)])
def test_initial_conditions(a, b):
    law = ColorLaw(a, b)
    assert count_total_closed(law, 1) == a + b
    assert count_total_closed(law, 2) == (a + b) ** 2 + (2 * a + b)


def test_invert_transform_examples():
    assert invert_transform([1, 1, 1, 1], 4) == [1, 2, 4, 8]
    assert invert_transform([0, 1, 0, 0, 0, 0], 6) == [0, 1, 0, 1, 0, 1]
    assert invert_transform([1, 2, 3, 4], 4) == [1, 3, 8, 21]
    with pytest.raises(ValueError):
        invert_transform([1, 2], 3)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=7))
def test_invert_transform_matches_brute_force(ws):
    n = len(ws)
    expected = [sum(weighted_count(ws, m, k) for k in range(1, m + 1)) for m in range(1, n + 1)]
    assert invert_transform(ws, n) == expected


def test_partition_profiles():
    profiles = sorted(p.multiplicities for p in partition_profiles(6, 3))
    # 4+1+1, 3+2+1, 2+2+2
    assert profiles == [(0, 3, 0, 0, 0, 0), (1, 1, 1, 0, 0, 0), (2, 0, 0, 1, 0, 0)]
    for p in partition_profiles(9, 4):
        assert (p.n, p.k) == (9, 4)
    assert PartitionProfile((2, 0, 0, 1)).multinomial() == 3
    assert list(partition_profiles(2, 3)) == []


def test_count_parts_partition_examples():
    assert count_parts_partition([1, 1, 1, 1], 4, 2) == 3
    assert count_parts_partition([1, 2, 3], 3, 1) == 3
    assert count_parts_partition([1, 2], 1, 2) == 0
    with pytest.raises(ValueError):
        count_parts_partition([1, 2], 3, 1)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=7), st.data())
def test_partition_route_matches_composition_sum(ws, data):
    n = data.draw(st.integers(1, len(ws)))
    k = data.draw(st.integers(1, n))
    assert count_parts_partition(ws, n, k) == weighted_count(ws, n, k)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=7), st.integers(0, 3), st.data())
def test_homogeneity(ws, a, data):
    n = data.draw(st.integers(1, len(ws)))
    k = data.draw(st.integers(1, n))
    scaled = [a * x for x in ws]
    assert count_parts_partition(scaled, n, k) == a**k * count_parts_partition(ws, n, k)


def test_check_convolution_examples():
    assert check_convolution([1, 2], [1, 1], 1, 2, 2, 1) == (4, 4)
    assert check_convolution([1, 1], [1, 1], 1, 1, 2, 2) == (4, 4)
    assert check_convolution([1], [1], 3, 2, 0, 0) == (1, 1)
    x = [2, 0, 3, 1]
    for n in range(1, 5):
        for k in range(1, n + 1):
            lhs, rhs = check_convolution(x, [3, 1, 1, 2], 1, 0, n, k)
            assert lhs == rhs == count_parts_partition(x, n, k)
    with pytest.raises(ValueError):
        check_convolution([1, 2, 3], [1, 2], 1, 1, 3, 1)


seq = st.lists(st.integers(0, 3), min_size=6, max_size=6)


@settings(max_examples=200)
@given(seq, seq, st.integers(-2, 2), st.integers(-2, 2), st.data())
def test_convolution_identity(x, y, a, b, data):
    n = data.draw(st.integers(0, 6))
    k = data.draw(st.integers(0, n))
    lhs, rhs = check_convolution(x, y, a, b, n, k)
    assert lhs == rhs


def test_count_domino_stratum_examples():
    assert count_domino_stratum(ColorLaw(1, 2), 2, 1, 1) == 2
    assert count_domino_stratum(ColorLaw(1, 2), 2, 1, 0) == 2
    for n in range(1, 6):
        for k in range(1, n + 1):
            for j in range(k):
                assert count_domino_stratum(ColorLaw(1, 0), n, k, j) == 0
    with pytest.raises(ValueError):
        count_domino_stratum(ColorLaw(1, 2), 3, 1, 2)


@pytest.mark.parametrize("a, b", GRID)
def test_strata_sum_to_closed_form(a, b):
    law = ColorLaw(a, b)
    for n in range(1, 11):
        for k in range(1, n + 1):
            strata = sum(count_domino_stratum(law, n, k, j) for j in range(k + 1))
            assert strata == count_parts_closed(law, n, k)


def test_n_minus_1_examples():
    assert count_parts_n_minus_1(3, 1) == 2
    assert count_parts_n_minus_1(3, 2) == 0
    assert count_parts_n_minus_1(2, 2) == 0


def test_n_minus_2_examples():
    assert count_parts_n_minus_2(5, 5) == -1
    assert count_parts_n_minus_2(3, 1) == 1
    assert count_parts_n_minus_2(3, 3) == -1
    with pytest.raises(ValueError):
        count_parts_n_minus_2(3, 4)


def test_signed_laws_agree_with_closed_form():
    for nu in range(1, 13):
        for k in range(1, nu + 1):
            assert count_parts_closed(ColorLaw(1, -1), nu, k) == count_parts_n_minus_1(nu, k)
            assert count_parts_closed(ColorLaw(1, -2), nu, k) == count_parts_n_minus_2(nu, k)


def test_signed_laws_match_brute_force():
    for nu in range(1, 10):
        for k in range(1, nu + 1):
            no_ones = signed_restricted(nu, k, lambda s: 0 if s == 1 else s - 1)
            assert count_parts_n_minus_1(nu, k) == no_ones >= 0
            parity = signed_restricted(nu, k, lambda s: 1 if s == 1 else max(s - 2, 0))
            assert count_parts_n_minus_2(nu, k) == parity


def test_fibonacci():
    table = fib_table(-12, 40)
    for n, value in table.items():
        assert fibonacci(n) == value
    assert (fibonacci(1), fibonacci(-2), fibonacci(10)) == (1, -1, 55)


def test_fibonacci_identity():
    assert fibonacci_identity_check(1) == (-1, -1)
    assert fibonacci_identity_check(2) == (1, 1)
    assert fibonacci_identity_check(10) == (13, 13)
    for nu in range(1, 31):
        lhs, rhs = fibonacci_identity_check(nu)
        assert lhs == rhs
