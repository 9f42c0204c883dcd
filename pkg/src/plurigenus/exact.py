"""Exact integer and rational arithmetic helpers.

Every quantity in this package is a Python int or a fractions.Fraction,
so arithmetic is exact at any magnitude and Fractions are always stored
normalized (positive denominator, coprime components).  This module adds
the elementary number theory the other modules consume: lcm over a range,
residues, modular inverses, and decimal-digit bookkeeping for integers
too large to materialize.
"""

import math
import re
import sys
from fractions import Fraction
from functools import reduce

from .errors import DocumentError, DomainError

# significant decimal digits carried by the interval mantissas in
# pow_digit_count; the accumulated truncation error stays far below one
# digit for any exponent with fewer than ~10^30 bits
_GUARD_DIGITS = 40

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def lcm_range(lo: int, hi: int) -> int:
    """lcm of all integers in [lo, hi], by running lcm with gcd reduction."""
    if lo < 1:
        raise DomainError(f"lcm_range needs lo >= 1, got {lo}")
    if lo > hi:
        raise DomainError(f"lcm_range needs lo <= hi, got [{lo}, {hi}]")
    return reduce(math.lcm, range(lo, hi + 1), 1)


def mod_inverse(a: int, r: int) -> int:
    """The b in [1, r-1] with a*b == 1 (mod r).

    A noninvertible a signals an invalid singularity type, so it is a
    domain error rather than a value.
    """
    if r < 2:
        raise DomainError(f"mod_inverse needs modulus >= 2, got {r}")
    g = math.gcd(a, r)
    if g != 1:
        raise DomainError(f"{a} is not invertible mod {r} (gcd = {g})")
    return pow(a, -1, r)


def residue(j: int, r: int) -> int:
    """Smallest nonnegative residue of j modulo r, for any sign of j."""
    if r < 1:
        raise DomainError(f"residue needs modulus >= 1, got {r}")
    return j % r


def digit_count(x: int) -> int:
    """Number of decimal digits of |x|; digit_count(0) == 1.

    Works on integers of millions of digits without going through str()
    (which CPython caps by default).
    """
    x = abs(x)
    if x == 0:
        return 1
    # 30103/100000 slightly exceeds log10(2), so d starts at or just above
    # the true count and the loops settle it with O(1) comparisons
    d = max(1, x.bit_length() * 30103 // 100000)
    while 10**d <= x:
        d += 1
    while d > 1 and 10 ** (d - 1) > x:
        d -= 1
    return d


def _shrink(m: int, e: int, round_up: bool) -> tuple[int, int]:
    # keep mantissas at _GUARD_DIGITS significant digits, rounding outward
    d = digit_count(m)
    if d <= _GUARD_DIGITS:
        return m, e
    shift = 10 ** (d - _GUARD_DIGITS)
    if round_up:
        return -(-m // shift), e + d - _GUARD_DIGITS
    return m // shift, e + d - _GUARD_DIGITS


def pow_digit_count(base: int, exponent: int) -> int:
    """Decimal digits of base**exponent, without materializing the power.

    Square-and-multiply on a pair of outward-rounded scaled-integer
    bounds.  The result is exact unless the power sits within the
    accumulated truncation error of a power of ten, in which case it may
    exceed the true count by one.
    """
    base = abs(base)
    if exponent < 0:
        raise DomainError(f"pow_digit_count needs exponent >= 0, got {exponent}")
    if base == 1 or exponent == 0 or base == 0:
        return 1
    lo = hi = (1, 0)
    cur_lo = _shrink(base, 0, round_up=False)
    cur_hi = _shrink(base, 0, round_up=True)
    e = exponent
    while e:
        if e & 1:
            lo = _shrink(lo[0] * cur_lo[0], lo[1] + cur_lo[1], round_up=False)
            hi = _shrink(hi[0] * cur_hi[0], hi[1] + cur_hi[1], round_up=True)
        e >>= 1
        if e:
            cur_lo = _shrink(cur_lo[0] * cur_lo[0], 2 * cur_lo[1], round_up=False)
            cur_hi = _shrink(cur_hi[0] * cur_hi[0], 2 * cur_hi[1], round_up=True)
    d_lo = digit_count(lo[0]) + lo[1]
    d_hi = digit_count(hi[0]) + hi[1]
    assert d_hi - d_lo <= 1, "digit interval wider than one decade"
    return d_hi


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction.

    Accepts an optional leading minus (ASCII or U+2212); rejects anything
    with a decimal point so floating-point literals can never sneak in.
    """
    s = text.strip().replace("−", "-")
    if not _RATIONAL_RE.match(s):
        raise DocumentError(f"not an exact rational: {text!r} (expected 'p' or 'p/q')")
    num, _, den = s.partition("/")
    if den:
        if int(den) == 0:
            raise DocumentError(f"zero denominator in rational: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q" in lowest terms, or "p" when integral."""
    return str(q)


def to_decimal_string(x: int) -> str:
    """str(x), lifting the interpreter's int-to-str digit guard as needed."""
    need = digit_count(x) + 2
    if hasattr(sys, "get_int_max_str_digits"):
        limit = sys.get_int_max_str_digits()
        if 0 < limit < need:
            sys.set_int_max_str_digits(need)
    return str(x)
