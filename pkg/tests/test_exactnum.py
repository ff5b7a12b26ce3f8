import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egyptfrac.errors import RadicandMismatch
from egyptfrac.exactnum import (
    QuadraticValue,
    decimal_digits,
    format_value,
    nearest_int,
    parse_value,
    quad_arith,
    quad_nearest_int,
    quad_sign,
    quad_to_decimal,
    rat_nearest_int,
)

from oracles import interval_nearest_int

MILLIN_SUM = QuadraticValue(Fraction(5, 2), Fraction(-1, 2), 5)


def q5(a, b):
    return QuadraticValue(Fraction(a), Fraction(b), 5)


fractions_st = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**6)


class TestRatNearestInt:
    @pytest.mark.parametrize(
        "x, expected",
        [
            (Fraction(40, 11), 4),  # 29/11 + 1, the first 11/29 term
            (Fraction(7, 2), 4),    # tie rounds toward +inf
            (Fraction(-1, 2), 0),
            (Fraction(0), 0),
            (Fraction(-7, 2), -3),
        ],
    )
    def test_examples(self, x, expected):
        assert rat_nearest_int(x) == expected

    def test_difference_in_half_open_window(self):
        rng = random.Random(1234)
        for _ in range(10**4):
            x = Fraction(rng.randint(-(10**9), 10**9), rng.randint(1, 10**9))
            n = rat_nearest_int(x)
            assert Fraction(-1, 2) <= n - x < Fraction(1, 2)

    @given(fractions_st)
    def test_window_hypothesis(self, x):
        n = rat_nearest_int(x)
        assert Fraction(-1, 2) <= n - x < Fraction(1, 2)


class TestQuadArith:
    def test_millin_sum_inverse(self):
        inv = quad_arith(q5(1, 0), MILLIN_SUM, "div")
        assert inv == q5(Fraction(5, 10), Fraction(1, 10))
        assert quad_arith(MILLIN_SUM, inv, "mul") == q5(1, 0)

    def test_identity(self):
        one = q5(1, 0)
        x = q5(Fraction(3, 7), Fraction(-2, 9))
        assert quad_arith(one, x, "mul") == x

    def test_rational_subtraction_touches_only_a(self):
        assert MILLIN_SUM - 1 == q5(Fraction(3, 2), Fraction(-1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            quad_arith(q5(1, 1), q5(0, 0), "div")

    def test_radicand_mismatch(self):
        with pytest.raises(RadicandMismatch):
            q5(1, 1) + QuadraticValue(1, 1, 2)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            quad_arith(q5(1, 0), q5(1, 0), "pow")

    def test_square_radicand_rejected(self):
        with pytest.raises(ValueError):
            QuadraticValue(1, 1, 9)
        with pytest.raises(ValueError):
            QuadraticValue(1, 1, 0)

    def test_mixed_with_fraction(self):
        x = Fraction(1, 3) + q5(0, Fraction(1, 10))
        assert x == q5(Fraction(1, 3), Fraction(1, 10))

    @given(
        st.fractions(max_denominator=100, min_value=-50, max_value=50),
        st.fractions(max_denominator=100, min_value=-50, max_value=50),
    )
    def test_self_division_round_trip(self, a, b):
        x = q5(a, b)
        if x.is_zero():
            return
        assert quad_arith(x, x, "div") == q5(1, 0)
        assert x * x.inverse() == q5(1, 0)


class TestQuadSign:
    def test_millin_first_three_bound_is_positive(self):
        assert quad_sign(q5(1583, -319)) == 1

    def test_zero(self):
        assert quad_sign(q5(0, 0)) == 0

    def test_two_minus_sqrt5(self):
        # 2^2 = 4 < 5 = rad * b^2
        assert quad_sign(q5(2, -1)) == -1

    @given(
        st.fractions(max_denominator=1000, min_value=-100, max_value=100),
        st.fractions(max_denominator=1000, min_value=-100, max_value=100),
    )
    def test_antisymmetric(self, a, b):
        x = q5(a, b)
        assert quad_sign(-x) == -quad_sign(x)
        assert (quad_sign(x) == 0) == (a == 0 and b == 0)

    @given(
        st.fractions(max_denominator=1000, min_value=-100, max_value=100),
        st.fractions(max_denominator=1000, min_value=-100, max_value=100),
    )
    def test_sign_matches_interval_oracle(self, a, b):
        x = q5(a, b)
        if x.is_zero():
            return
        # the oracle brackets a + b*sqrt(5) between rationals
        n = interval_nearest_int(a * 1000, b * 1000, 5)  # scale away near-zero values
        scaled = x * 1000
        if n != 0:
            assert quad_sign(scaled) == (1 if n > 0 else -1)


class TestQuadNearestInt:
    def test_millin_first_term_value(self):
        x = q5(Fraction(25, 30), Fraction(3, 30))
        assert interval_nearest_int(x.a, x.b, 5) == 1  # oracle agrees
        assert quad_nearest_int(x) == 1

    def test_rational_delegation(self):
        assert quad_nearest_int(q5(Fraction(7, 3), 0)) == 2

    def test_built_from_arithmetic(self):
        x = MILLIN_SUM.inverse() + Fraction(1, 3)
        assert quad_nearest_int(x) == 1

    @given(st.fractions(max_denominator=10**4, min_value=-(10**4), max_value=10**4))
    def test_agrees_with_rational_on_b_zero(self, a):
        assert quad_nearest_int(q5(a, 0)) == rat_nearest_int(a)

    def test_against_interval_oracle(self):
        rng = random.Random(99)
        for _ in range(300):
            a = Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**4))
            b = Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**4))
            if b == 0:
                continue
            got = quad_nearest_int(q5(a, b))
            assert got == interval_nearest_int(a, b, 5)

    def test_other_radicands(self):
        for d in (2, 3, 7, 10, 9999999999):
            x = QuadraticValue(Fraction(1, 3), Fraction(5, 7), d)
            assert quad_nearest_int(x) == interval_nearest_int(x.a, x.b, d)

    def test_huge_b_coefficient(self):
        # the sqrt bracket must adapt to the size of b
        x = q5(0, 10**50)
        assert quad_nearest_int(x) == interval_nearest_int(x.a, x.b, 5)


class TestQuadToDecimal:
    def test_millin_bound(self):
        v = q5(Fraction(1583, 638), Fraction(-319, 638))
        assert quad_to_decimal(v, 7) == "1.3631572"

    def test_millin_sum(self):
        assert quad_to_decimal(MILLIN_SUM, 7) == "1.3819660"

    def test_zero(self):
        assert quad_to_decimal(q5(0, 0), 3) == "0.000"

    def test_negative_value(self):
        assert quad_to_decimal(q5(-2, -1), 4) == "-4.2361"  # -(2+sqrt5) = -4.23606...

    def test_digits_bounds(self):
        with pytest.raises(ValueError):
            quad_to_decimal(MILLIN_SUM, 0)
        with pytest.raises(ValueError):
            quad_to_decimal(MILLIN_SUM, 10**6 + 1)

    def test_reparse_is_close(self):
        rng = random.Random(5)
        for _ in range(100):
            a = Fraction(rng.randint(-(10**4), 10**4), rng.randint(1, 100))
            b = Fraction(rng.randint(-(10**4), 10**4), rng.randint(1, 100))
            x = q5(a, b)
            for digits in (3, 8):
                back = Fraction(quad_to_decimal(x, digits))
                diff = x - back
                tol = Fraction(10) ** (1 - digits)
                assert (tol - diff).sign() > 0 and (diff + tol).sign() > 0


class TestParseFormat:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("11/29", Fraction(11, 29)),
            ("1", Fraction(1)),
            ("-3", Fraction(-3)),
            (" 7 / 2 ", Fraction(7, 2)),
            ("(5-1 sqrt 5)/2", MILLIN_SUM),
            ("(5 - 1 sqrt 5) / 2", MILLIN_SUM),
            ("(0+1 sqrt 5)/5", q5(0, Fraction(1, 5))),
            ("(-3+2 sqrt 7)/4", QuadraticValue(Fraction(-3, 4), Fraction(2, 4), 7)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_value(text) == value

    @pytest.mark.parametrize(
        "text",
        ["", "abc", "1/0", "(5-1 sqrt 5)/0", "(5-0 sqrt 5)/2", "(5-1 sqrt 4)/2",
         "5/2/3", "(5-1 root 5)/2", "1.5"],
    )
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_value(text)

    def test_round_trip(self):
        for text in ("11/29", "(5-1 sqrt 5)/2", "(0+1 sqrt 5)/5", "(-3+2 sqrt 7)/4"):
            v = parse_value(text)
            assert parse_value(format_value(v)) == v

    def test_format_rational(self):
        assert format_value(Fraction(11, 29)) == "11/29"
        assert format_value(Fraction(4)) == "4/1"
        assert format_value(q5(Fraction(1, 2), 0)) == "1/2"


class TestNearestDispatch:
    def test_dispatch(self):
        assert nearest_int(Fraction(7, 2)) == 4
        assert nearest_int(3) == 3
        assert nearest_int(q5(Fraction(7, 2), 0)) == 4


class TestDecimalDigits:
    @pytest.mark.parametrize("n", [0, 1, 9, 10, 999, 1000, 10**17 - 1, 10**17, 7**300])
    def test_matches_str(self, n):
        assert decimal_digits(n) == len(str(n))
        assert decimal_digits(-n) == len(str(n))
