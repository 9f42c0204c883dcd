"""Baskets of quotient singularities and their Riemann-Roch contributions.

A canonical threefold contributes, for each basket entry of type
(1/r)(a,-a,1), the local term

    l(Q, m) = sum_{k=1}^{m-1} bk~(r - bk~) / (2r),

where b is the inverse of a mod r and x~ is the smallest nonnegative
residue of x mod r.  The sum is periodic up to a linear drift: one full
period adds (r^2 - 1)/12, which gives the closed form

    l(Q, m) = (r^2 - 1)/12 * (m - m~)/r  +  sum_{k=1}^{m~-1} bk~(r - bk~)/(2r)

and, for weight a = 1, the one-parameter specialization

    l((1/r)(1,-1,1), m) = m~(m~ - 1)(3r + 1 - 2m~)/(12r) + (r^2 - 1)/12 * [m/r].

All three are implemented here and cross-checked against each other by
the oracle module; the basket type aggregates entries with multiplicity.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exact import mod_inverse


@dataclass(frozen=True)
class QuotientSingularity:
    """A cyclic quotient singularity of type (1/r)(a, -a, 1).

    Requires r >= 2, 1 <= a < r and gcd(a, r) = 1; the inverse weight b
    with a*b == 1 (mod r) is derived at construction.
    """

    r: int
    a: int
    b: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.r < 2:
            raise DomainError(f"singularity order must be >= 2, got r={self.r}")
        if not 1 <= self.a < self.r:
            raise DomainError(f"weight must satisfy 1 <= a < r, got a={self.a}, r={self.r}")
        if math.gcd(self.a, self.r) != 1:
            raise DomainError(
                f"invalid singularity type: gcd(a={self.a}, r={self.r}) != 1"
            )
        object.__setattr__(self, "b", mod_inverse(self.a, self.r))

    def canonical(self) -> "QuotientSingularity":
        """The representative with a <= r - a; l(Q, m) is invariant under a <-> r-a."""
        return QuotientSingularity(self.r, min(self.a, self.r - self.a))

    def __str__(self):
        return f"(1/{self.r})({self.a},-{self.a},1)"


def l_direct(q: QuotientSingularity, m: int) -> Fraction:
    """l(Q, m) by direct summation; 0 for m in {0, 1} (empty sum)."""
    if m < 0:
        raise DomainError(f"l_direct needs m >= 0, got {m}")
    r, b = q.r, q.b
    total = 0
    for k in range(1, m):
        t = b * k % r
        total += t * (r - t)
    return Fraction(total, 2 * r)


def l_closed(q: QuotientSingularity, m: int) -> Fraction:
    """l(Q, m) in closed form: complete periods plus a partial sum.

    (m - m~)/r complete periods contribute (r^2 - 1)/12 each; the
    remaining m~ - 1 terms are summed directly.  Agrees with l_direct for
    every m.
    """
    if m < 0:
        raise DomainError(f"l_closed needs m >= 0, got {m}")
    r, b = q.r, q.b
    mbar = m % r
    total = 0
    for k in range(1, mbar):
        t = b * k % r
        total += t * (r - t)
    return Fraction((r * r - 1) * (m - mbar), 12 * r) + Fraction(total, 2 * r)


def l_onewave(r: int, m: int) -> Fraction:
    """l((1/r)(1,-1,1), m) in closed form; r = 1 is a smooth point (0)."""
    if r < 1:
        raise DomainError(f"l_onewave needs r >= 1, got {r}")
    if m < 0:
        raise DomainError(f"l_onewave needs m >= 0, got {m}")
    mbar = m % r
    partial = Fraction(mbar * (mbar - 1) * (3 * r + 1 - 2 * mbar), 12 * r)
    return partial + Fraction((r * r - 1) * (m // r), 12)


def fletcher_dominates(alpha: int, beta: int, m: int) -> bool:
    """Does l((1/alpha)(a,-a,1), m) >= l((1/beta)(1,-1,1), m) for every valid a?

    Fletcher's comparison holds whenever 0 <= beta <= alpha and
    1 <= m <= [(alpha+1)/2]; this enumerates all weights a coprime to
    alpha and verifies it.  beta <= 1 contributes nothing (a smooth
    point), and m outside the stated range is a domain error since the
    inequality is not claimed there.
    """
    if alpha < 1:
        raise DomainError(f"fletcher_dominates needs alpha >= 1, got {alpha}")
    if not 0 <= beta <= alpha:
        raise DomainError(f"fletcher_dominates needs 0 <= beta <= alpha, got beta={beta}")
    hi = (alpha + 1) // 2
    if not 1 <= m <= hi:
        raise DomainError(f"fletcher_dominates needs 1 <= m <= {hi}, got m={m}")
    bound = l_onewave(beta, m) if beta >= 2 else Fraction(0)
    return all(
        l_direct(QuotientSingularity(alpha, a), m) >= bound
        for a in range(1, alpha)
        if math.gcd(a, alpha) == 1
    )


class Basket:
    """A multiset of quotient singularities with multiplicities.

    Entries are stored canonically: weights are folded to min(a, r-a)
    (justified by the a <-> r-a symmetry of l), duplicates are merged,
    and the result is sorted, so basket equality is structural.
    """

    __slots__ = ("entries",)

    def __init__(self, entries=()):
        merged: dict[QuotientSingularity, int] = {}
        for q, count in entries:
            if count < 1:
                raise DomainError(f"multiplicity must be >= 1, got {count} for {q}")
            q = q.canonical()
            merged[q] = merged.get(q, 0) + count
        object.__setattr__(
            self,
            "entries",
            tuple(sorted(merged.items(), key=lambda item: (item[0].r, item[0].a))),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Basket is immutable")

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, Basket) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{q} x{count}" for q, count in self.entries)
        return f"Basket({{{inner}}})"

    def index(self) -> int:
        """lcm of the entry orders; 1 for the empty basket."""
        return math.lcm(*(q.r for q, _ in self.entries))

    def l_sum(self, m: int) -> Fraction:
        """Multiplicity-weighted sum of l(Q, m) over the basket."""
        return sum((count * l_closed(q, m) for q, count in self.entries), Fraction(0))

    def to_records(self) -> list[dict]:
        """Serialize as [{r, a, count}, ...] in canonical order."""
        return [{"r": q.r, "a": q.a, "count": count} for q, count in self.entries]

    @classmethod
    def from_records(cls, records) -> "Basket":
        """Build from {r, a, count} records; canonicalization happens here."""
        return cls(
            (QuotientSingularity(rec["r"], rec["a"]), rec.get("count", 1))
            for rec in records
        )
