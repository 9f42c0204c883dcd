import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plurigenus.errors import DocumentError, DomainError
from plurigenus.exact import (
    digit_count,
    format_rational,
    lcm_range,
    mod_inverse,
    parse_rational,
    pow_digit_count,
    residue,
    to_decimal_string,
)


class TestLcmRange:
    def test_single_element(self):
        assert lcm_range(2, 2) == 2

    def test_first_decade(self):
        assert lcm_range(2, 10) == 2520

    def test_up_to_25(self):
        # product of maximal prime powers <= 25: 16*9*25*7*11*13*17*19*23
        assert lcm_range(2, 25) == 26771144400

    def test_divisible_by_every_member(self):
        for hi in range(2, 40):
            value = lcm_range(2, hi)
            assert all(value % n == 0 for n in range(2, hi + 1))

    @pytest.mark.parametrize("lo,hi", [(5, 3), (0, 10), (-2, 2)])
    def test_rejects_bad_bounds(self, lo, hi):
        with pytest.raises(DomainError):
            lcm_range(lo, hi)


class TestModInverse:
    def test_identity(self):
        assert mod_inverse(1, 7) == 1

    def test_small_case(self):
        assert mod_inverse(3, 26) == 9

    def test_non_unit_rejected(self):
        with pytest.raises(DomainError):
            mod_inverse(2, 4)

    def test_modulus_too_small(self):
        with pytest.raises(DomainError):
            mod_inverse(1, 1)

    def test_involution_on_all_units(self):
        for r in range(2, 501):
            for a in range(1, r):
                if math.gcd(a, r) == 1:
                    b = mod_inverse(a, r)
                    assert 1 <= b < r
                    assert a * b % r == 1
                    assert mod_inverse(b, r) == a % r


class TestResidue:
    @pytest.mark.parametrize("j,r,want", [(30, 26, 4), (26, 26, 0), (-1, 26, 25)])
    def test_examples(self, j, r, want):
        assert residue(j, r) == want

    def test_bad_modulus(self):
        with pytest.raises(DomainError):
            residue(3, 0)

    @given(st.integers(-10_000, 10_000), st.integers(1, 500))
    def test_canonical_representative(self, j, r):
        value = residue(j, r)
        assert 0 <= value < r
        assert (value - j) % r == 0


class TestDigitCount:
    @pytest.mark.parametrize("x,want", [(0, 1), (2520, 4), (15848517485244, 14)])
    def test_examples(self, x, want):
        assert digit_count(x) == want

    def test_sign_ignored(self):
        assert digit_count(-2520) == 4

    @given(st.integers(min_value=0, max_value=10**40))
    def test_matches_str_length(self, x):
        assert digit_count(x) == len(str(x))

    def test_huge_value_without_str(self):
        assert digit_count(10**100_000) == 100_001
        assert digit_count(10**100_000 - 1) == 100_000


class TestPowDigitCount:
    def test_trivial_cases(self):
        assert pow_digit_count(1, 10**30) == 1
        assert pow_digit_count(7, 0) == 1
        assert pow_digit_count(0, 5) == 1

    def test_powers_of_ten(self):
        for k in (1, 5, 17, 100):
            assert pow_digit_count(10, k) == k + 1

    def test_small_sweep_against_str(self):
        for base in range(2, 40):
            for exponent in range(0, 30):
                estimate = pow_digit_count(base, exponent)
                actual = len(str(base**exponent))
                assert abs(estimate - actual) <= 1

    def test_huge_exponent_stays_symbolic(self):
        # 10^13 to the 10^6: exactly 13_000_000 + 1 digits
        assert pow_digit_count(10**13, 10**6) == 13_000_001

    def test_negative_exponent_rejected(self):
        with pytest.raises(DomainError):
            pow_digit_count(2, -1)


class TestRationalWireFormat:
    @pytest.mark.parametrize(
        "text,want",
        [
            ("1/26", Fraction(1, 26)),
            ("2", Fraction(2)),
            ("-3/4", Fraction(-3, 4)),
            ("−3/4", Fraction(-3, 4)),
            (" 7/2 ", Fraction(7, 2)),
            ("+5", Fraction(5)),
        ],
    )
    def test_parse(self, text, want):
        assert parse_rational(text) == want

    @pytest.mark.parametrize("bad", ["1.5", "", "3/0", "1/2/3", "0x10", "1e3", "/3", "2/-3"])
    def test_rejects_non_exact(self, bad):
        with pytest.raises(DocumentError):
            parse_rational(bad)

    def test_format_reduces(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(Fraction(-8, 2)) == "-4"

    @given(st.fractions())
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q

    @given(st.fractions(), st.fractions())
    def test_arithmetic_stays_normalized(self, a, b):
        for value in (a + b, a - b, a * b):
            assert value.denominator > 0
            assert math.gcd(abs(value.numerator), value.denominator) == 1
        if b != 0:
            value = a / b
            assert value.denominator > 0
            assert math.gcd(abs(value.numerator), value.denominator) == 1


def test_to_decimal_string_lifts_str_guard():
    x = 10**5000 + 7
    assert to_decimal_string(x) == str(x)
    big = 10**20_000
    text = to_decimal_string(big)
    assert len(text) == 20_001 and text[0] == "1" and set(text[1:]) == {"0"}
