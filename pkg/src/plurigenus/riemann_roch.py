"""The plurigenus formula for projective threefolds with canonical singularities.

For such a threefold the Euler characteristic of the pluricanonical
sheaves is

    chi(mK) = (1/12)(2m-1)m(m-1) K^3 - (2m-1) chi(O) + sum_Q l(Q, m),

summing local contributions over the basket; vanishing for ample K gives
h^0(mK) = chi(mK) once m >= 2, which is the plurigenus.  A triple
(chi(O), K^3, basket) is only consistent threefold data when rK is
Cartier (r^3 K^3 integral for the basket index r) and every chi(mK) is
an integer; validate() checks exactly that.
"""

from dataclasses import dataclass
from fractions import Fraction

from .basket import Basket
from .errors import DataConsistencyError, DomainError


@dataclass(frozen=True)
class ThreefoldData:
    """Everything the plurigenus formula needs: chi(O), K^3 > 0, and the basket."""

    chi_O: int
    K3: Fraction
    basket: Basket

    def __post_init__(self):
        object.__setattr__(self, "K3", Fraction(self.K3))
        if self.K3 <= 0:
            raise DomainError(
                f"K^3 must be positive (general type), got {self.K3}"
            )


def chi_mK(X: ThreefoldData, m: int) -> Fraction:
    """chi(Y, mK_Y), exact; integrality is reported by validate(), not here."""
    if m < 0:
        raise DomainError(f"chi_mK needs m >= 0, got {m}")
    poly = Fraction((2 * m - 1) * m * (m - 1), 12) * X.K3 - (2 * m - 1) * X.chi_O
    return poly + X.basket.l_sum(m)


def plurigenus(X: ThreefoldData, m: int) -> int:
    """h^0(mK) = chi(mK) for m >= 2 (vanishing on the canonical model).

    Assumes X passes validate(); a non-integral value exposes an
    impossible (chi(O), K^3, basket) triple and raises.
    """
    if m < 2:
        raise DomainError(f"plurigenus needs m >= 2 (vanishing), got m={m}")
    value = chi_mK(X, m)
    if value.denominator != 1:
        raise DataConsistencyError(
            f"chi({m}K) = {value} is not an integer; "
            "(chi_O, K3, basket) is not consistent threefold data"
        )
    return int(value)


def plurigenus_lower_bound(X: ThreefoldData, m: int) -> Fraction:
    """chi(mK) with the positive volume term dropped: -(2m-1)chi(O) + sum l(Q,m).

    Since K^3 > 0 this lower-bounds the plurigenus for m >= 2; it is the
    conservative estimate used to certify h^0 >= 2 without knowing K^3.
    """
    if m < 0:
        raise DomainError(f"plurigenus_lower_bound needs m >= 0, got {m}")
    return -(2 * m - 1) * X.chi_O + X.basket.l_sum(m)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(): ok, or the name and detail of the first failure."""

    ok: bool
    check: str | None = None
    detail: str | None = None

    def __str__(self):
        return "pass" if self.ok else f"fail [{self.check}]: {self.detail}"


def validate(X: ThreefoldData) -> ValidationReport:
    """Check that X is arithmetically possible threefold data.

    In order: (i) r^3 K^3 is an integer (rK is Cartier); (ii) chi(0K)
    equals chi(O); (iii) chi(1K) equals -chi(O); (iv) chi(mK) is an
    integer for m = 0..2r.  One full period past the first determines
    integrality for all m, since consecutive period differences of
    chi(mK) form a quadratic that is integer-valued as soon as r+1 >= 3
    consecutive values are (r = 1 is settled by m <= 2 directly).
    """
    r = X.basket.index()
    vol = r**3 * X.K3
    if vol.denominator != 1:
        return ValidationReport(
            False, "cartier-volume", f"r^3 * K^3 = {vol} is not an integer (r = {r})"
        )
    if chi_mK(X, 0) != X.chi_O:
        return ValidationReport(
            False, "chi-at-0", f"chi(0K) = {chi_mK(X, 0)} != chi(O) = {X.chi_O}"
        )
    if chi_mK(X, 1) != -X.chi_O:
        return ValidationReport(
            False, "chi-at-1", f"chi(1K) = {chi_mK(X, 1)} != -chi(O) = {-X.chi_O}"
        )
    for m in range(2 * r + 1):
        value = chi_mK(X, m)
        if value.denominator != 1:
            return ValidationReport(
                False, "integrality", f"chi({m}K) = {value} is not an integer"
            )
    return ValidationReport(True)


def hilbert_coefficients(X: ThreefoldData) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients (c3, c2, c1, c0) of the cubic t -> chi(X, t*rK).

    At multiples of the index r every local term is linear in t, so the
    map is an honest cubic with

        c3 = r^3 K^3 / 6,   c2 = -r^2 K^3 / 4,
        c1 = r K^3 / 12 - 2r chi(O) + sum_Q (r_Q^2 - 1)(r/r_Q)/12,
        c0 = chi(O).

    The two leading coefficients depend on the basket only through
    r^3 K^3.
    """
    r = X.basket.index()
    c3 = Fraction(r**3, 6) * X.K3
    c2 = -Fraction(r**2, 4) * X.K3
    slope = sum(
        (Fraction(count * (q.r**2 - 1) * (r // q.r), 12) for q, count in X.basket),
        Fraction(0),
    )
    c1 = Fraction(r, 12) * X.K3 - 2 * r * X.chi_O + slope
    c0 = Fraction(X.chi_O)
    return c3, c2, c1, c0
