"""Effective bounds: dual-variety degrees, map counts, and birationality exponents.

The counting bound for dominant rational maps between n-folds with very
ample E, F is deg(X^V) ** (h^0(X,E)^2 - 1), where the dual-variety degree
comes from Chern numbers:

    deg Z^V = sum_{i=0}^{n} (-1)^(n+i) (1+i) c1^i(L) c_{n-i}(Z).

Such powers are astronomically large by design (they provably cannot be
polynomial in K^n), so BoundReport keeps them symbolic as base^exponent
with an exact digit estimate, and only materializes the decimal value
below a configurable digit threshold.

The threefold birationality exponents are assembled here as well: the
Hanamura table, the 11l+5 rule, the lcm-based exponent m(C) for bounded
chi(O) <= C, and the exact certificate that its plurigenus lower bound
clears 2.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .basket import Basket, l_onewave
from .errors import DataConsistencyError, DomainError
from .exact import lcm_range, pow_digit_count, to_decimal_string
from .riemann_roch import ThreefoldData, chi_mK

DEFAULT_EXPAND_THRESHOLD = 10**6


@dataclass(frozen=True)
class ChernData:
    """Intersection numbers v[i] = c1^i(L) . c_{n-i}(Z) of an embedded n-fold."""

    n: int
    v: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "v", tuple(self.v))
        if len(self.v) != self.n + 1:
            raise DomainError(
                f"need exactly n+1 = {self.n + 1} intersection numbers, got {len(self.v)}"
            )


@dataclass(frozen=True)
class HodgeData:
    """The h^i(X, O_X) for 2i <= n; h[0] = 1 for connected projective X."""

    n: int
    h: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"dimension must be >= 1, got {self.n}")
        object.__setattr__(self, "h", tuple(self.h))
        want = self.n // 2 + 1
        if len(self.h) != want:
            raise DomainError(
                f"need h^i for 2i <= n, i.e. {want} values, got {len(self.h)}"
            )
        if self.h[0] != 1:
            raise DomainError(f"h^0(X, O_X) must be 1, got {self.h[0]}")
        if any(x < 0 for x in self.h):
            raise DomainError("Hodge numbers must be nonnegative")


@dataclass(frozen=True)
class BoundReport:
    """A bound of the form base**exponent, expanded only when small enough.

    digits_estimate is exact up to +1 (interval arithmetic on integer
    bounds); expanded is present iff digits_estimate is at most the
    expansion threshold the report was built with.
    """

    base: int
    exponent: int
    digits_estimate: int
    expanded: int | None

    def text(self) -> str:
        unit = "digit" if self.digits_estimate == 1 else "digits"
        head = f"{self.base}^{self.exponent} ({self.digits_estimate} {unit})"
        if self.expanded is not None:
            return f"{head} = {to_decimal_string(self.expanded)}"
        return head

    def record(self) -> dict:
        return {
            "base": str(self.base),
            "exponent": str(self.exponent),
            "digits_estimate": self.digits_estimate,
            "expanded": None if self.expanded is None else to_decimal_string(self.expanded),
        }


def bound_report(base: int, exponent: int, *, expand_threshold: int = DEFAULT_EXPAND_THRESHOLD) -> BoundReport:
    """Build a BoundReport, materializing base**exponent below the threshold."""
    if base < 1:
        raise DomainError(f"a degree bound must be positive, got base {base}")
    if exponent < 0:
        raise DomainError(f"exponent must be >= 0, got {exponent}")
    digits = pow_digit_count(base, exponent)
    expanded = base**exponent if digits <= expand_threshold else None
    return BoundReport(base, exponent, digits, expanded)


def dual_degree(c: ChernData) -> int:
    """deg Z^V from Chern numbers; may be <= 0 for degenerate inputs.

    A nonpositive value means the data cannot come from a smooth variety
    of nonnegative Kodaira dimension; callers that need positivity must
    check it (defranchis_threefold_bound does).
    """
    return sum((-1) ** (c.n + i) * (1 + i) * c.v[i] for i in range(c.n + 1))


def bezout_bound(a: int, d: int, i: int) -> int:
    """Total degree a * d^i of an i-dimensional degree-a variety cut by degree-d forms."""
    if a < 1 or d < 1:
        raise DomainError(f"bezout_bound needs positive a and d, got a={a}, d={d}")
    if i < 0:
        raise DomainError(f"bezout_bound needs i >= 0, got {i}")
    return a * d**i


def map_count_bound(base: int, h0: int, *, expand_threshold: int = DEFAULT_EXPAND_THRESHOLD) -> BoundReport:
    """base ** (h0^2 - 1): the bound on maps induced by h0 sections."""
    if base < 1:
        raise DomainError(f"a degree bound must be positive, got base {base}")
    if h0 < 1:
        raise DomainError(f"map_count_bound needs h0 >= 1, got {h0}")
    return bound_report(base, h0 * h0 - 1, expand_threshold=expand_threshold)


def defranchis_threefold_bound(
    s: int,
    K3,
    c1c2: int,
    c3: int,
    chi_O: int,
    *,
    expand_threshold: int = DEFAULT_EXPAND_THRESHOLD,
) -> BoundReport:
    """Map-count bound for a smooth threefold X with sK_X very ample.

    The base is the dual-variety degree of X embedded by |sK|,

        -[c3 + 2s c1c2 + (3s^2 + 4s^3) c1^3]   with c1^3 = -K^3,

    and the exponent is h^0(sK)^2 - 1 with h^0 computed exactly from the
    plurigenus formula (smooth X, empty basket).  Inconsistent Chern data
    (nonpositive base, non-integral or nonpositive h^0) is rejected.
    """
    K3 = Fraction(K3)
    if s < 2:
        raise DomainError(f"defranchis_threefold_bound needs s >= 2, got {s}")
    c1_cubed = -K3
    base = -(c3 + 2 * s * c1c2 + (3 * s**2 + 4 * s**3) * c1_cubed)
    if base.denominator != 1:
        raise DataConsistencyError(
            f"dual degree {base} is not an integer; Chern data is inconsistent"
        )
    if base <= 0:
        raise DataConsistencyError(
            f"dual degree must be positive, got {base}; Chern data is inconsistent"
        )
    h0 = chi_mK(ThreefoldData(chi_O, K3, Basket()), s)
    if h0.denominator != 1:
        raise DataConsistencyError(
            f"h^0({s}K) = {h0} is not an integer; (K3, chi_O) is inconsistent"
        )
    if h0 < 1:
        raise DataConsistencyError(
            f"h^0({s}K) = {h0} < 1 is impossible for very ample {s}K"
        )
    return bound_report(int(base), int(h0) ** 2 - 1, expand_threshold=expand_threshold)


def hanamura_m0(r: int) -> int:
    """Hanamura's stability threshold: mK is birational for all m >= m0(r)."""
    if r < 1:
        raise DomainError(f"hanamura_m0 needs r >= 1, got {r}")
    if r <= 2:
        return 4 * r + 5
    if r <= 5:
        return 4 * r + 4
    return 4 * r + 3


def kollar_exponent(l: int) -> int:
    """If h^0(lK) >= 2 then the (11l+5)-canonical map is birational."""
    if l < 1:
        raise DomainError(f"kollar_exponent needs l >= 1, got {l}")
    return 11 * l + 5


def birationality_exponent(C: int) -> tuple[int, int]:
    """(R, m) with m-canonical birationality for all threefolds with chi(O) <= C.

    R = lcm(2, ..., 26C-1) covers every index that can avoid a large
    singularity; m = lcm(4R+3, 143C+5) then works both when the index
    divides R (Hanamura) and when it does not (h^0(13C K) >= 2 plus the
    11l+5 rule at l = 13C).
    """
    if C < 1:
        raise DomainError(f"birationality_exponent needs C >= 1, got {C}")
    R = lcm_range(2, 26 * C - 1)
    return R, math.lcm(4 * R + 3, 143 * C + 5)


def birationality_certificate(C: int) -> tuple[Fraction, bool]:
    """The exact lower bound (1-26C)C + l((1/26C)(1,-1,1), 13C), and whether it clears 3/2.

    The value must equal the closed form (52C^2 - 15C - 1)/24; both are
    computed independently and a mismatch raises (it would mean an
    l-function bug, not bad input).  ok means the bound is >= 3/2, which
    forces the integer h^0(13C K) to be at least 2.
    """
    if C < 1:
        raise DomainError(f"birationality_certificate needs C >= 1, got {C}")
    lower = (1 - 26 * C) * C + l_onewave(26 * C, 13 * C)
    closed = Fraction(52 * C * C - 15 * C - 1, 24)
    if lower != closed:
        raise RuntimeError(
            f"internal consistency failure at C={C}: basket evaluation gives "
            f"{lower} but the closed form gives {closed}"
        )
    return lower, lower >= Fraction(3, 2)


def chi_upper_bound(h: HodgeData) -> int:
    """chi(Y, O_Y) <= sum of h^i(X, O_X) over 2i <= n, for any dominated Y."""
    return sum(h.h)


def validate_p(p: int, r: int) -> bool:
    """True iff r divides p and p >= 9r."""
    if p < 1 or r < 1:
        raise DomainError(f"validate_p needs positive integers, got p={p}, r={r}")
    return p % r == 0 and p >= 9 * r


@dataclass(frozen=True)
class Section4Bounds:
    """Embedding-dimension and degree bounds from index r, volume K^3, and exponent p."""

    N_max: int
    degX_max: int
    degY_max: int
    graph_deg_max: int


def section4_bounds(r: int, K3, p: int) -> Section4Bounds:
    """Exact bounds N <= 729 r^3 K^3 + 3, deg X' <= 729 r^3 K^3, deg Y' <= p^3 K^3,
    deg(graph) <= 8 p^3 K^3, for p divisible by r with p >= 9r."""
    K3 = Fraction(K3)
    if r < 1:
        raise DomainError(f"section4_bounds needs r >= 1, got {r}")
    if K3 <= 0:
        raise DomainError(f"K^3 must be positive, got {K3}")
    vol = r**3 * K3
    if vol.denominator != 1:
        raise DataConsistencyError(f"r^3 * K^3 = {vol} is not an integer (r = {r})")
    if not validate_p(p, r):
        raise DomainError(f"p = {p} must be divisible by r = {r} and at least 9r = {9 * r}")
    deg_y = p**3 * K3
    if deg_y.denominator != 1:
        raise DataConsistencyError(f"p^3 * K^3 = {deg_y} is not an integer")
    deg_x = 729 * int(vol)
    return Section4Bounds(deg_x + 3, deg_x, int(deg_y), 8 * int(deg_y))
