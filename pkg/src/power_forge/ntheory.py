"""Exact integer and rational kernels: primality, factorization, roots, valuations.

Arbitrary-precision integers are plain Python ``int``; rationals are
``fractions.Fraction`` (always lowest terms, positive denominator).  Every
function here is exact -- no floating point is used anywhere.

A factorization is a tuple of ``(prime, exponent)`` pairs with strictly
increasing primes whose product recomposes the factored magnitude.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from random import Random

__all__ = [
    "normalize_rational",
    "integer_nth_root",
    "is_prime",
    "factor_integer",
    "divisors",
    "padic_valuation",
    "primes_up_to",
]


def normalize_rational(num: int, den: int) -> Fraction:
    """Return num/den in lowest terms with positive denominator.

    >>> normalize_rational(6, -4)
    Fraction(-3, 2)
    >>> normalize_rational(0, 7)
    Fraction(0, 1)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def integer_nth_root(n: int, e: int) -> tuple[int, bool]:
    """Floor e-th root of n with an exactness flag.

    For n >= 0 returns the unique r with r**e <= n < (r+1)**e; negative n
    requires odd e and is handled sign-symmetrically (the root of -n,
    negated).  The second component is True iff root**e == n.  Bit-exact:
    binary search over the bracket given by the bit length, with
    ``math.isqrt`` as the square-root fast path.

    >>> integer_nth_root(64, 3)
    (4, True)
    >>> integer_nth_root(65, 3)
    (4, False)
    >>> integer_nth_root(-27, 3)
    (-3, True)
    """
    if e < 1:
        raise ValueError(f"root exponent must be >= 1, got {e}")
    if n < 0:
        if e % 2 == 0:
            raise ValueError(f"even root ({e}) of negative integer {n}")
        r, exact = integer_nth_root(-n, e)
        return -r, exact
    if n == 0:
        return 0, True
    if e == 1:
        return n, True
    if e == 2:
        r = isqrt(n)
        return r, r * r == n
    bits = n.bit_length()
    # 2^floor((bits-1)/e) <= root < 2^(floor((bits-1)/e) + 1)
    lo = 1 << ((bits - 1) // e)
    hi = (lo << 1) - 1
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if mid**e <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**e == n


# Deterministic Miller-Rabin base set, valid for all n < 3,317,044,064,679,887,385,961,981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981
_MR_EXTRA_ROUNDS = 24


def _mr_witness(a: int, d: int, twos: int, n: int) -> bool:
    """True if a proves n composite."""
    a %= n
    if a <= 1:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(twos - 1):
        x = (x * x) % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below ~3.3e24.

    Larger inputs additionally get extra rounds with bases drawn from a
    PRNG seeded by n itself, so results stay reproducible.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d, twos = n - 1, 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    if any(_mr_witness(a, d, twos, n) for a in _MR_BASES):
        return False
    if n >= _MR_DETERMINISTIC_LIMIT:
        rng = Random(n)
        extra = (rng.randrange(2, n - 1) for _ in range(_MR_EXTRA_ROUNDS))
        if any(_mr_witness(a, d, twos, n) for a in extra):
            return False
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit by sieve."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = b"\x00" * ((limit - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_LIMIT = 10_000
_TRIAL_PRIMES = tuple(primes_up_to(_TRIAL_LIMIT))


def _pollard_brent(n: int) -> int:
    """Nontrivial divisor of odd composite n (Brent's cycle variant).

    Deterministic: the polynomial increment c walks 1, 2, 3, ... until a
    divisor shows up, so repeated runs factor identically.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, n):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = (q * abs(x - y)) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


def factor_integer(n: int) -> tuple[tuple[int, int], ...]:
    """Complete factorization of |n| as ((prime, exponent), ...), primes ascending.

    Trial division by primes below 10^4, then recursive Pollard-Brent
    splitting with Miller-Rabin certification of every reported prime.

    >>> factor_integer(1225)
    ((5, 2), (7, 2))
    >>> factor_integer(1)
    ()
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    m = abs(n)
    counts: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1:
        pending = [m]
        while pending:
            v = pending.pop()
            if v <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(v):
                # below the trial square every survivor is prime
                counts[v] = counts.get(v, 0) + 1
            else:
                d = _pollard_brent(v)
                pending.append(d)
                pending.append(v // d)
    return tuple(sorted(counts.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of |n|, ascending (n must be nonzero)."""
    divs = [1]
    for p, e in factor_integer(n):
        pk = 1
        block = list(divs)
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    return sorted(divs)


def _int_valuation(m: int, p: int) -> int:
    """Exponent of p in nonzero m."""
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def padic_valuation(q: Fraction | int, p: int) -> int:
    """Exponent of the prime p in the rational q (numerator minus denominator).

    >>> padic_valuation(Fraction(2417, 16), 2)
    -4
    >>> padic_valuation(Fraction(9, 25), 5)
    -2
    """
    q = Fraction(q)
    if q == 0:
        raise ValueError("valuation of 0 is undefined")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _int_valuation(abs(q.numerator), p) - _int_valuation(q.denominator, p)
