from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slopebound.bernoulli import faulhaber_sum
from slopebound.counting import ElemDivSeq, truncation_divisors
from slopebound.plf import (
    BadLength,
    DomainTooShort,
    ExponentExceedsR,
    OutOfDomain,
    PiecewiseLinear,
    f_infinity,
    f_infinity_star,
    f_r,
    from_divisor_sequence,
)
from slopebound.rootsystems import build_root_system


def pts(*pairs):
    return tuple((Fraction(x), Fraction(y)) for x, y in pairs)


@st.composite
def divisor_pairs(draw):
    """(b, a, r, t) with b coordinatewise below a, both non-increasing, entries <= r."""
    r = draw(st.integers(min_value=1, max_value=5))
    t = draw(st.integers(min_value=1, max_value=7))
    a = sorted(
        (draw(st.integers(min_value=0, max_value=r)) for _ in range(t)), reverse=True
    )
    b = sorted((draw(st.integers(min_value=0, max_value=ai)) for ai in a), reverse=True)
    return b, a, r, t


class TestStructure:
    def test_must_start_at_origin(self):
        with pytest.raises(ValueError):
            PiecewiseLinear(breakpoints=pts((1, 0), (2, 1)))

    def test_strictly_increasing_x(self):
        with pytest.raises(ValueError):
            PiecewiseLinear(breakpoints=pts((0, 0), (1, 1), (1, 2)))

    def test_non_negative_values(self):
        with pytest.raises(ValueError):
            PiecewiseLinear(breakpoints=pts((0, 0), (1, -1)))

    def test_eval_breakpoints_and_midpoint(self):
        fn = PiecewiseLinear(breakpoints=pts((0, 0), (2, 1)))
        assert fn.value_at(0) == 0
        assert fn.value_at(2) == 1
        assert fn.value_at(1) == Fraction(1, 2)

    def test_eval_ray_and_domain(self):
        fn = PiecewiseLinear(breakpoints=pts((0, 0), (2, 1)), final_slope=Fraction(3))
        assert fn.value_at(4) == 7
        assert fn.domain_end is None
        bounded = PiecewiseLinear(breakpoints=pts((0, 0), (2, 1)))
        assert bounded.domain_end == 2
        with pytest.raises(OutOfDomain):
            bounded.value_at(3)
        with pytest.raises(OutOfDomain):
            bounded.value_at(-1)

    def test_json_roundtrip(self):
        fn = f_r(2, 3, 4)
        assert PiecewiseLinear.from_json_dict(fn.to_json_dict()) == fn


class TestFromDivisorSequence:
    def test_frozen_examples(self):
        fn = from_divisor_sequence(ElemDivSeq((3, 2, 1)), 3, 3)
        assert fn.breakpoints == pts((0, 0), (1, 0), (2, 1), (3, 3))
        assert from_divisor_sequence(ElemDivSeq(()), 1, 2).breakpoints == pts((0, 0), (1, 1), (2, 2))
        assert from_divisor_sequence(ElemDivSeq((1,)), 1, 1).breakpoints == pts((0, 0), (1, 0))

    def test_errors(self):
        with pytest.raises(ExponentExceedsR):
            from_divisor_sequence(ElemDivSeq((3,)), 2, 3)
        with pytest.raises(BadLength):
            from_divisor_sequence(ElemDivSeq((1, 1)), 1, 1)

    @given(divisor_pairs())
    @settings(max_examples=60, deadline=None)
    def test_convex_and_dominance_transfer(self, pair):
        b, a, r, t = pair
        fb = from_divisor_sequence(ElemDivSeq(tuple(e for e in b if e > 0)), r, t)
        fa = from_divisor_sequence(ElemDivSeq(tuple(e for e in a if e > 0)), r, t)
        assert fb.is_convex() and fa.is_convex()
        assert fb.dominates(fa, t)


class TestRamp:
    def test_frozen_s1(self):
        fn = f_r(1, 1, 2)
        assert fn.breakpoints == pts((0, 0), (1, 0), (2, 1))
        assert fn.final_slope == 2
        assert fn.value_at(3) == 3

    def test_frozen_s2_r1(self):
        fn = f_r(2, 1, 1)
        assert fn.breakpoints == pts((0, 0), (1, 0))
        assert fn.final_slope == 1

    @pytest.mark.parametrize("s,g,r", [(1, 1, 3), (2, 2, 4), (3, 1, 2), (4, 3, 5)])
    def test_zero_through_first_interval(self, s, g, r):
        assert f_r(s, g, r).value_at(g) == 0

    @pytest.mark.parametrize("s,g,r", [(1, 1, 3), (2, 2, 4), (3, 3, 6), (4, 1, 5)])
    def test_convex_with_interval_widths(self, s, g, r):
        fn = f_r(s, g, r)
        assert fn.is_convex()
        xs = [x for x, _ in fn.breakpoints]
        widths = [x1 - x0 for x0, x1 in zip(xs, xs[1:])]
        assert widths == [g * (j + 1) ** (s - 1) for j in range(r)]


class TestLimitProfiles:
    def test_s1_points(self):
        # x-coordinates follow the plain power sums
        fn = f_infinity(1, 1, 6)
        for j in range(7):
            x, y = fn.breakpoints[j + 1]
            assert x == sum((h + 1) ** 0 for h in range(j + 1))
            assert y == sum(h * (h + 1) ** 0 for h in range(j + 1)) == j * (j + 1) // 2

    def test_s2_points(self):
        fn = f_infinity(2, 1, 4)
        assert fn.breakpoints[2] == (Fraction(3), Fraction(2))  # arrival of slope 1
        star = f_infinity_star(2, 1, 4)
        assert star.breakpoints[2] == (Fraction(3), Fraction(1))  # power-sum height 1^2

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_star_origin_height_zero(self, s):
        star = f_infinity_star(s, 2, 3)
        assert star.breakpoints[1][1] == 0

    def test_s1_profiles_coincide(self):
        for g in (1, 2, 3):
            assert f_infinity(1, g, 20).breakpoints == f_infinity_star(1, g, 20).breakpoints

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_strict_dominance_for_higher_s(self, s):
        fn, star = f_infinity(s, 1, 20), f_infinity_star(s, 1, 20)
        assert fn.dominates(star, fn.breakpoints[-1][0])
        for j in range(1, 21):
            assert fn.breakpoints[j + 1][1] > star.breakpoints[j + 1][1]

    @pytest.mark.parametrize("s,g", [(1, 1), (2, 3), (3, 2), (4, 1)])
    def test_convexity(self, s, g):
        assert f_infinity(s, g, 15).is_convex()
        assert f_infinity_star(s, g, 15).is_convex()


class TestDominance:
    def test_reflexive(self):
        fn = f_infinity(2, 1, 5)
        assert fn.dominates(fn, fn.breakpoints[-1][0])

    def test_hand_example(self):
        fb = from_divisor_sequence(ElemDivSeq((1,)), 2, 1)
        fa = from_divisor_sequence(ElemDivSeq((2,)), 2, 1)
        assert fb.breakpoints == pts((0, 0), (1, 1))
        assert fa.breakpoints == pts((0, 0), (1, 0))
        assert fb.dominates(fa, 1)
        assert not fa.dominates(fb, 1)

    def test_domain_too_short(self):
        short = PiecewiseLinear(breakpoints=pts((0, 0), (1, 1)))
        with pytest.raises(DomainTooShort):
            short.dominates(short, 2)

    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    @pytest.mark.parametrize("g", [1, 2, 3])
    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
    def test_ramp_equals_limit_on_window(self, s, g, r):
        window = g * faulhaber_sum(s, r + 1)
        ramp, limit = f_r(s, g, r), f_infinity(s, g, r + 1)
        assert ramp.agrees_with(limit, window)
        # beyond the window the limit profile pulls ahead
        past = window + 1
        assert limit.value_at(past) > ramp.value_at(past)


def test_counting_profile_matches_ramp_when_counts_saturate():
    # for a single height-1 root, N_h = (h+1)^(s-1) = 1 exactly
    system = build_root_system("A", 1)
    for g in (1, 2):
        for r in (1, 2, 3, 4):
            seq = truncation_divisors(system, g, r)
            for extra in (0, 2):
                t = len(seq) + extra
                profile = from_divisor_sequence(seq, r, t)
                assert profile.agrees_with(f_r(system.s, g, r), t)
