"""Independent brute-force verification of every closed form in the package.

Each check recomputes its target from first principles (direct
summation with a linear-search inverse, sieve factorization, naive
repeated multiplication) and compares against the production code; the
only shared machinery is int and Fraction.  Reports are deterministic
given the recorded seed.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import basket as _basket
from . import bounds as _bounds
from . import riemann_roch as _rr
from .basket import Basket, QuotientSingularity
from .exact import digit_count, lcm_range
from .riemann_roch import ThreefoldData


@dataclass(frozen=True)
class VerificationReport:
    """One check's outcome: ranges swept, case count, first counterexample if any."""

    check: str
    params: dict
    cases: int
    counterexample: dict | None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def describe(self) -> str:
        ranges = ", ".join(f"{k}={v}" for k, v in self.params.items())
        if self.passed:
            return f"{self.check}: pass ({self.cases} cases; {ranges})"
        return f"{self.check}: FAIL at {self.counterexample} ({ranges})"

    def record(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "cases": self.cases,
            "counterexample": self.counterexample,
            "seed": self.seed,
            "passed": self.passed,
        }


def _raw_l(r: int, a: int, m: int) -> Fraction:
    # direct summation from the definition; inverse found by linear search
    # so nothing is shared with the production path
    if r < 2:
        return Fraction(0)
    b = next(x for x in range(1, r) if a * x % r == 1)
    total = 0
    for k in range(1, m):
        t = b * k % r
        total += t * (r - t)
    return Fraction(total, 2 * r)


def l_closed_unscaled(r: int, a: int, m: int) -> Fraction:
    """Closed-form variant whose period term is NOT divided by r.

    This form appears in print but disagrees with the direct sum (e.g.
    r=3, a=1, m=5 gives 7/3 instead of 1); it is kept only so the
    discrepancy stays documented by a failing comparison.
    """
    b = next(x for x in range(1, r) if a * x % r == 1)
    mbar = m % r
    total = sum(b * k % r * (r - b * k % r) for k in range(1, mbar))
    return Fraction((r * r - 1) * (m - mbar), 12) + Fraction(total, 2 * r)


def verify_l_equivalence(r_max: int, m_span: int = 3, use_unscaled_period: bool = False) -> VerificationReport:
    """Sweep l_direct, l_closed and (a=1) l_onewave against raw summation.

    With use_unscaled_period the unscaled closed form is compared instead,
    which exhibits its first counterexample at (r=3, a=1, m=5).
    """
    params = {"r_max": r_max, "m_span": m_span, "use_unscaled_period": use_unscaled_period}
    cases = 0
    for r in range(2, r_max + 1):
        for a in (x for x in range(1, r) if math.gcd(x, r) == 1):
            q = QuotientSingularity(r, a)
            for m in range(m_span * r + 1):
                cases += 1
                raw = _raw_l(r, a, m)
                closed = (
                    l_closed_unscaled(r, a, m)
                    if use_unscaled_period
                    else _basket.l_closed(q, m)
                )
                direct = _basket.l_direct(q, m)
                wave = _basket.l_onewave(r, m) if a == 1 else raw
                if not raw == direct == closed == wave:
                    return VerificationReport(
                        "l-equivalence",
                        params,
                        cases,
                        {
                            "r": r,
                            "a": a,
                            "m": m,
                            "raw": str(raw),
                            "direct": str(direct),
                            "closed": str(closed),
                            "onewave": str(wave),
                        },
                    )
    return VerificationReport("l-equivalence", params, cases, None)


def verify_fletcher_domination(alpha_max: int) -> VerificationReport:
    """Raw-sum sweep of l((1/a)(a,-a,1), m) >= l((1/b)(1,-1,1), m) on its stated domain."""
    params = {"alpha_max": alpha_max}
    cases = 0
    for alpha in range(2, alpha_max + 1):
        m_hi = (alpha + 1) // 2
        rights = [
            [_raw_l(beta, 1, m) for m in range(m_hi + 1)]
            for beta in range(alpha + 1)
        ]
        for a in (x for x in range(1, alpha) if math.gcd(x, alpha) == 1):
            for m in range(1, m_hi + 1):
                left = _raw_l(alpha, a, m)
                for beta in range(alpha + 1):
                    cases += 1
                    if left < rights[beta][m]:
                        return VerificationReport(
                            "domination",
                            params,
                            cases,
                            {
                                "alpha": alpha,
                                "beta": beta,
                                "a": a,
                                "m": m,
                                "lhs": str(left),
                                "rhs": str(rights[beta][m]),
                            },
                        )
    return VerificationReport("domination", params, cases, None)


def lcm_by_factorization(hi: int) -> int:
    """lcm(2..hi) as the product of maximal prime powers <= hi, via a sieve."""
    if hi < 2:
        raise ValueError(f"lcm_by_factorization needs hi >= 2, got {hi}")
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    result = 1
    for p in range(2, hi + 1):
        if not sieve[p]:
            continue
        for multiple in range(p * p, hi + 1, p):
            sieve[multiple] = 0
        power = p
        while power * p <= hi:
            power *= p
        result *= power
    return result


def verify_lcm_factorization(hi_max: int) -> VerificationReport:
    """Compare lcm_range(2, h) with the sieve factorization product for all h <= hi_max."""
    params = {"hi_max": hi_max}
    cases = 0
    for h in range(2, hi_max + 1):
        cases += 1
        got = lcm_range(2, h)
        want = lcm_by_factorization(h)
        if got != want:
            return VerificationReport(
                "lcm-factorization",
                params,
                cases,
                {"hi": h, "lcm_range": str(got), "factorization": str(want)},
            )
    return VerificationReport("lcm-factorization", params, cases, None)


def _first_nonintegral(X: ThreefoldData, hi: int) -> int | None:
    for m in range(2, hi + 1):
        if _rr.chi_mK(X, m).denominator != 1:
            return m
    return None


def random_threefold(rng: random.Random, want_valid: bool) -> ThreefoldData:
    """Draw threefold data: basket first, then K^3 = t/r^3, then chi(O).

    Redraws until the chi(mK) integrality sweep agrees with want_valid,
    so invalid draws become explicit negative controls instead of being
    silently discarded.
    """
    for _ in range(10_000):
        entries = []
        for _ in range(rng.randint(0, 3)):
            order = rng.randint(2, 6)
            weight = rng.choice([x for x in range(1, order) if math.gcd(x, order) == 1])
            entries.append((QuotientSingularity(order, weight), rng.randint(1, 3)))
        b = Basket(entries)
        r = b.index()
        t = rng.randint(1, 100 * r**3)
        X = ThreefoldData(rng.randint(-20, 20), Fraction(t, r**3), b)
        if (_first_nonintegral(X, 4 * r) is None) == want_valid:
            return X
    raise RuntimeError("could not draw a matching random threefold")


def verify_chi_identities(samples: int, seed: int = 0) -> VerificationReport:
    """Randomized identity checks for chi(mK) and the Hilbert coefficients.

    For each valid instance: chi(0K) = chi(O), chi(1K) = -chi(O),
    integrality to 4r, c3 = r^3 K^3/6, c2 = -r^2 K^3/4, and the cubic
    from hilbert_coefficients reproduces chi(trK) at t = 1..6.  Roughly
    5% of instances are negative controls whose validate() must fail.
    Plurigenus monotonicity in m is tallied but not asserted.
    """
    if samples < 1:
        raise ValueError(f"verify_chi_identities needs samples >= 1, got {samples}")
    rng = random.Random(seed)
    negative_controls = 0
    monotonicity_flags = 0
    params = {"samples": samples, "negative_controls": 0, "monotonicity_flags": 0}

    def failure(X, reason):
        params.update(negative_controls=negative_controls, monotonicity_flags=monotonicity_flags)
        return VerificationReport(
            "chi-identities",
            params,
            n + 1,
            {"chi_O": X.chi_O, "K3": str(X.K3), "basket": X.basket.to_records(), "reason": reason},
            seed=seed,
        )

    for n in range(samples):
        control = rng.random() < 0.05
        X = random_threefold(rng, want_valid=not control)
        if control:
            negative_controls += 1
            if _rr.validate(X).ok:
                return failure(X, "validate() passed a negative control")
            continue
        r = X.basket.index()
        if _rr.chi_mK(X, 0) != X.chi_O:
            return failure(X, f"chi(0K) = {_rr.chi_mK(X, 0)} != chi(O)")
        if _rr.chi_mK(X, 1) != -X.chi_O:
            return failure(X, f"chi(1K) = {_rr.chi_mK(X, 1)} != -chi(O)")
        bad_m = _first_nonintegral(X, 4 * r)
        if bad_m is not None:
            return failure(X, f"chi({bad_m}K) is not an integer")
        c3, c2, c1, c0 = _rr.hilbert_coefficients(X)
        if c3 != Fraction(r**3, 6) * X.K3:
            return failure(X, f"c3 = {c3} != r^3 K^3 / 6")
        if c2 != -Fraction(r**2, 4) * X.K3:
            return failure(X, f"c2 = {c2} != -r^2 K^3 / 4")
        for t in range(1, 7):
            cubic = c3 * t**3 + c2 * t**2 + c1 * t + c0
            if cubic != _rr.chi_mK(X, r * t):
                return failure(X, f"Hilbert cubic disagrees with chi({r * t}K)")
        previous = None
        for m in range(2, 4 * r + 1):
            value = _rr.plurigenus(X, m)
            if previous is not None and value < previous:
                monotonicity_flags += 1
                break
            previous = value
    params.update(negative_controls=negative_controls, monotonicity_flags=monotonicity_flags)
    return VerificationReport("chi-identities", params, samples, None, seed=seed)


def verify_power_expansion(base_max: int, exp_max: int) -> VerificationReport:
    """Naive repeated multiplication against BoundReport expansion and digit estimate."""
    params = {"base_max": base_max, "exp_max": exp_max}
    cases = 0
    for base in range(1, base_max + 1):
        naive = 1
        for exponent in range(exp_max + 1):
            cases += 1
            report = _bounds.bound_report(base, exponent)
            if report.expanded != naive:
                return VerificationReport(
                    "power-expansion",
                    params,
                    cases,
                    {"base": base, "exponent": exponent, "expanded": str(report.expanded), "naive": str(naive)},
                )
            if abs(report.digits_estimate - digit_count(naive)) > 1:
                return VerificationReport(
                    "power-expansion",
                    params,
                    cases,
                    {
                        "base": base,
                        "exponent": exponent,
                        "digits_estimate": report.digits_estimate,
                        "digits_actual": digit_count(naive),
                    },
                )
            naive *= base
    return VerificationReport("power-expansion", params, cases, None)


# default sweep sizes for the CLI's `verify`; they match the ranges the
# acceptance suite pins
CHECKS = {
    "l-equivalence": lambda seed: verify_l_equivalence(60, 3),
    "domination": lambda seed: verify_fletcher_domination(40),
    "lcm-factorization": lambda seed: verify_lcm_factorization(200),
    "chi-identities": lambda seed: verify_chi_identities(200, seed=seed),
    "power-expansion": lambda seed: verify_power_expansion(100, 50),
}


def run_checks(names=None, seed: int = 0) -> list[VerificationReport]:
    """Run the named checks (all by default) and return their reports."""
    if names is None:
        names = list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    return [CHECKS[name](seed) for name in names]
