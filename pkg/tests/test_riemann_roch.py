import random
from fractions import Fraction

import pytest

from plurigenus.basket import Basket, QuotientSingularity
from plurigenus.errors import DataConsistencyError, DomainError
from plurigenus.oracle import random_threefold
from plurigenus.riemann_roch import (
    ThreefoldData,
    chi_mK,
    hilbert_coefficients,
    plurigenus,
    plurigenus_lower_bound,
    validate,
)


def smooth(chi_O, K3):
    return ThreefoldData(chi_O, Fraction(K3), Basket())


def index26(chi_O=1):
    return ThreefoldData(chi_O, Fraction(1, 26), Basket([(QuotientSingularity(26, 1), 1)]))


class TestChiMK:
    def test_reduces_to_chi_at_zero(self):
        assert chi_mK(smooth(-1, 2), 0) == -1

    def test_smooth_bigenus(self):
        assert chi_mK(smooth(-1, 2), 2) == 4

    def test_with_basket_term(self):
        # 25*13/26 - 25 + 53/2
        assert chi_mK(index26(), 13) == 14

    def test_negative_m_rejected(self):
        with pytest.raises(DomainError):
            chi_mK(smooth(-1, 2), -1)


class TestPlurigenus:
    def test_examples(self):
        assert plurigenus(index26(), 13) == 14
        assert plurigenus(smooth(-1, 2), 2) == 4

    def test_m_below_vanishing_rejected(self):
        with pytest.raises(DomainError):
            plurigenus(smooth(-1, 2), 1)

    def test_inconsistent_data_raises(self):
        with pytest.raises(DataConsistencyError):
            plurigenus(smooth(0, 1), 2)  # chi(2K) = 1/2

    def test_lower_bound_drops_volume_term(self):
        X = index26()
        assert plurigenus_lower_bound(X, 13) == Fraction(3, 2)
        for m in range(2, 30):
            assert plurigenus_lower_bound(X, m) <= chi_mK(X, m)


class TestValidate:
    def test_passes_consistent_smooth_data(self):
        report = validate(smooth(-1, 2))
        assert report.ok and report.check is None
        assert str(report) == "pass"

    def test_fails_odd_volume_at_m2(self):
        report = validate(smooth(-1, 1))
        assert not report.ok
        assert report.check == "integrality"
        assert "chi(2K)" in report.detail

    def test_fails_fractional_cartier_volume(self):
        report = validate(ThreefoldData(1, Fraction(1, 26), Basket()))
        assert not report.ok
        assert report.check == "cartier-volume"

    def test_index26_instance_is_impossible(self):
        # chi(2K) = 1/52 + 25/52 - 3*chi = 1/2 - 3*chi: half-integral for
        # every integer chi, so no chi makes this basket/volume pair valid
        for chi_O in range(-5, 6):
            report = validate(index26(chi_O))
            assert not report.ok
            assert report.check == "integrality"
            assert "chi(2K)" in report.detail

    def test_passing_baskets_exist(self):
        # X with one ordinary double point flavor entry: found by sweep
        b = Basket([(QuotientSingularity(2, 1), 2)])
        hits = [
            t
            for t in range(1, 17)
            if validate(ThreefoldData(-1, Fraction(t, 8), b)).ok
        ]
        assert hits, "no valid volume found for a basket that should admit one"


class TestHilbertCoefficients:
    def test_smooth_example(self):
        c3, c2, c1, c0 = hilbert_coefficients(smooth(-1, 2))
        assert (c3, c2) == (Fraction(1, 3), Fraction(-1, 2))
        assert c0 == -1

    def test_index26_leading_coefficient(self):
        c3, c2, _, _ = hilbert_coefficients(index26())
        assert c3 == Fraction(338, 3)
        assert c2 == -Fraction(26**2, 4) * Fraction(1, 26)

    def test_leading_terms_ignore_basket_composition(self):
        # same index, same r^3 K^3, different baskets
        k = Fraction(5, 216)
        one = ThreefoldData(1, k, Basket([(QuotientSingularity(6, 1), 1)]))
        two = ThreefoldData(
            -3, k, Basket([(QuotientSingularity(2, 1), 2), (QuotientSingularity(3, 2), 1)])
        )
        assert one.basket.index() == two.basket.index() == 6
        assert hilbert_coefficients(one)[:2] == hilbert_coefficients(two)[:2]

    @pytest.mark.parametrize("seed", range(6))
    def test_cubic_reconstructs_chi(self, seed):
        X = random_threefold(random.Random(seed), want_valid=True)
        r = X.basket.index()
        c3, c2, c1, c0 = hilbert_coefficients(X)
        for t in range(7):
            assert c3 * t**3 + c2 * t**2 + c1 * t + c0 == chi_mK(X, r * t)


class TestThreefoldData:
    def test_requires_positive_volume(self):
        with pytest.raises(DomainError):
            smooth(1, 0)
        with pytest.raises(DomainError):
            smooth(1, -2)

    def test_coerces_integer_volume(self):
        assert smooth(1, 2).K3 == Fraction(2)

    def test_normalization_identities_on_random_instances(self):
        rng = random.Random(11)
        for _ in range(50):
            X = random_threefold(rng, want_valid=True)
            assert chi_mK(X, 0) == X.chi_O
            assert chi_mK(X, 1) == -X.chi_O
