from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopebound.counting import ElemDivSeq, TooLarge, count_nh, count_nh_bruteforce, truncation_divisors
from slopebound.rootsystems import build_root_system

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
B2 = build_root_system("B", 2)
G2 = build_root_system("G", 2)


def enumerate_tuples(heights, h):
    """Oracle used to freeze expected values: raw product over [0, h]^s."""
    return sum(
        1
        for tup in product(range(h + 1), repeat=len(heights))
        if sum(n * w for n, w in zip(tup, heights)) == h
    )


def test_a1_table_is_all_ones():
    assert count_nh(A1, 5).values == (1, 1, 1, 1, 1, 1)


def test_a2_small_values():
    table = count_nh(A2, 2)
    assert table.values[1] == 2 == enumerate_tuples(A2.heights, 1)
    assert table.values[2] == 4 == enumerate_tuples(A2.heights, 2)
    assert table.values[2] <= (2 + 1) ** (A2.s - 1)


def test_b2_h3():
    assert count_nh(B2, 3).values[3] == 7 == enumerate_tuples(B2.heights, 3)


@pytest.mark.parametrize("system", [A1, A2, B2, G2], ids=lambda rs: rs.label)
def test_dp_matches_bruteforce(system):
    H = 12
    assert count_nh(system, H).values == count_nh_bruteforce(system, H).values


def test_bruteforce_h0():
    assert count_nh_bruteforce(A1, 0).values == (1,)


@pytest.mark.parametrize("system", [A1, A2, B2, G2], ids=lambda rs: rs.label)
def test_counts_always_positive(system):
    # simple roots have height 1, so every h is reachable
    assert all(v > 0 for v in count_nh(system, 50).values)


def test_bruteforce_guard():
    with pytest.raises(TooLarge):
        count_nh_bruteforce(build_root_system("E", 6), 10)


def test_generating_function_identity():
    # product of 1/(1 - x^ht) over the height multiset, as truncated series
    H = 40
    for system in (A2, B2, G2):
        series = [1] + [0] * H
        for ht in system.heights:
            # multiply by 1/(1 - x^ht): prefix-sum with stride ht
            for i in range(ht, H + 1):
                series[i] += series[i - ht]
        assert tuple(series) == count_nh(system, H).values


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=4))
@settings(max_examples=30, deadline=None)
def test_divisor_sequence_shape(g, r):
    for system in (A1, A2, B2):
        seq = truncation_divisors(system, g, r)
        expected_len = g * sum(count_nh(system, r - 1).values)
        assert len(seq) == expected_len
        assert all(a >= b for a, b in zip(seq.exponents, seq.exponents[1:]))
        assert all(1 <= e <= r for e in seq.exponents)


def test_divisor_sequence_values():
    assert truncation_divisors(A1, 1, 3).exponents == (3, 2, 1)
    assert truncation_divisors(A2, 1, 2).exponents == (2, 1, 1)
    assert truncation_divisors(G2, 2, 1).exponents == (1, 1)


def test_elem_div_seq_validation():
    with pytest.raises(ValueError):
        ElemDivSeq((1, 2))
    with pytest.raises(ValueError):
        ElemDivSeq((2, 0))
    assert ElemDivSeq(()).padded(3) == (0, 0, 0)
    assert ElemDivSeq((3, 1)).padded(4) == (3, 1, 0, 0)
    with pytest.raises(ValueError):
        ElemDivSeq((3, 1)).padded(1)
