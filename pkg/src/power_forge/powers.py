"""Perfect-power membership and maximal-exponent decomposition.

Integer perfect powers are values a**n with integer a and n >= 2; rational
perfect powers allow a rational base.  Conventions at the fringe fixed here
once and reused everywhere:

* 0 = 0**2 and 1 = 1**2 decompose with exponent 2,
* -1 = (-1)**3 decomposes with exponent 3,
* negative values require an odd exponent.

``decompose_*`` functions return the decomposition with the largest
attainable exponent (so the base itself is never again a perfect power,
apart from the fixed points 0, 1, -1), or None when the value is not a
perfect power at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntheory import integer_nth_root

__all__ = [
    "PowerDecomposition",
    "decompose_integer_power",
    "decompose_rational_power",
    "is_integer_perfect_power",
    "is_rational_perfect_power",
]

# Strip-and-measure primes; any prime power p**e with p above these has
# e <= log_17(|m|) once m is coprime to all of them.
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

_ODD_PRIMES_CACHE = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]


def _odd_primes_below(limit: int) -> list[int]:
    """Odd primes p <= limit, extending a shared cache on demand."""
    cache = _ODD_PRIMES_CACHE
    candidate = cache[-1] + 2
    while cache[-1] < limit:
        if all(candidate % p for p in cache if p * p <= candidate):
            cache.append(candidate)
        candidate += 2
    return [p for p in cache if p <= limit]


@dataclass(frozen=True, slots=True)
class PowerDecomposition:
    """A witnessed representation value == base ** exponent, exponent >= 2."""

    base: Fraction
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 2:
            raise ValueError(f"exponent must be >= 2, got {self.exponent}")
        if not isinstance(self.base, Fraction):
            object.__setattr__(self, "base", Fraction(self.base))

    @property
    def value(self) -> Fraction:
        return self.base**self.exponent

    def is_integral(self) -> bool:
        return self.base.denominator == 1


def _candidate_prime_exponents(m: int) -> list[int]:
    """Primes p that could divide the maximal exponent of |m| >= 2.

    Strips the small primes, intersecting the valuation gcd; whatever
    survives coprime to them has every prime factor >= 17, bounding the
    exponent by 17**p <= survivor.
    """
    residual = m
    val_gcd = 0
    for p in _SMALL_PRIMES:
        if residual % p == 0:
            v = 0
            while residual % p == 0:
                residual //= p
                v += 1
            val_gcd = gcd(val_gcd, v)
            if val_gcd == 1:
                return []
    if residual == 1:
        if val_gcd < 2:
            return []
        return [p for p in _odd_primes_below(val_gcd) if val_gcd % p == 0] + (
            [2] if val_gcd % 2 == 0 else []
        )
    # residual has only prime factors >= 17
    bound = 1
    seventeen = 17
    while seventeen <= residual:
        seventeen *= 17
        bound += 1
    bound -= 1  # largest p with 17**p <= residual
    if bound < 2:
        return []
    cands = [2] + _odd_primes_below(bound)
    if val_gcd:
        cands = [p for p in cands if val_gcd % p == 0]
    return cands


def decompose_integer_power(n: int) -> PowerDecomposition | None:
    """Maximal-exponent decomposition of an integer, or None.

    >>> decompose_integer_power(64)
    PowerDecomposition(base=Fraction(2, 1), exponent=6)
    >>> decompose_integer_power(-8)
    PowerDecomposition(base=Fraction(-2, 1), exponent=3)
    >>> decompose_integer_power(12) is None
    True
    """
    if n == 0:
        return PowerDecomposition(Fraction(0), 2)
    if n == 1:
        return PowerDecomposition(Fraction(1), 2)
    if n == -1:
        return PowerDecomposition(Fraction(-1), 3)
    sign = 1 if n > 0 else -1
    m = abs(n)
    best_base, best_exp = None, 1
    for p in _candidate_prime_exponents(m):
        if sign < 0 and p == 2:
            continue
        root, exact = integer_nth_root(m, p)
        if exact:
            inner = decompose_integer_power(sign * root)
            if inner is not None and (sign > 0 or inner.exponent % 2 == 1):
                base, exp = inner.base, inner.exponent * p
            else:
                base, exp = Fraction(sign * root), p
            if exp > best_exp:
                best_base, best_exp = base, exp
    if best_base is None:
        return None
    return PowerDecomposition(best_base, best_exp)


def decompose_rational_power(q: Fraction | int) -> PowerDecomposition | None:
    """Maximal-exponent decomposition of a rational, or None.

    A rational u/v in lowest terms is a p-th power exactly when u and v
    are both (with matching sign handling); v >= 2 caps usable primes at
    log2(v), so the search is cheap even for huge numerators.

    >>> decompose_rational_power(Fraction(9, 25))
    PowerDecomposition(base=Fraction(3, 5), exponent=2)
    >>> decompose_rational_power(Fraction(-8, 27))
    PowerDecomposition(base=Fraction(-2, 3), exponent=3)
    >>> decompose_rational_power(Fraction(2, 3)) is None
    True
    """
    q = Fraction(q)
    u, v = q.numerator, q.denominator
    if v == 1:
        return decompose_integer_power(u)
    sign = 1 if u > 0 else -1
    mu = abs(u)
    # usable prime exponents divide valuations of v, all <= log2(v)
    best: tuple[Fraction, int] | None = None
    for p in [2] + _odd_primes_below(v.bit_length()):
        if sign < 0 and p == 2:
            continue
        vroot, vexact = integer_nth_root(v, p)
        if not vexact:
            continue
        uroot, uexact = integer_nth_root(mu, p)
        if not uexact:
            continue
        inner = decompose_rational_power(Fraction(sign * uroot, vroot))
        if inner is not None and (sign > 0 or inner.exponent % 2 == 1):
            base, exp = inner.base, inner.exponent * p
        else:
            base, exp = Fraction(sign * uroot, vroot), p
        if best is None or exp > best[1]:
            best = (base, exp)
    if best is None:
        return None
    return PowerDecomposition(best[0], best[1])


def is_integer_perfect_power(n: int) -> bool:
    """Membership in {a**n : a integer, n >= 2}."""
    return decompose_integer_power(n) is not None


def is_rational_perfect_power(q: Fraction | int) -> bool:
    """Membership in {r**n : r rational, n >= 2}."""
    return decompose_rational_power(q) is not None
