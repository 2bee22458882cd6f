"""Dense integer polynomials in one variable, exact throughout.

Coefficients are arbitrary-precision ints stored ascending (coeffs[i] is
the coefficient of X**i).  The zero polynomial is the empty tuple and has
degree -1.  Evaluation at a rational point uses homogeneous Horner so the
result is built from integer arithmetic only and lands in ``Fraction``
exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Union

from .ntheory import divisors

__all__ = ["IntPoly", "rational_roots"]

_Scalar = Union[int, "IntPoly"]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPoly:
    """Immutable dense polynomial over the integers.

    >>> p = IntPoly([1, 0, 1])        # X**2 + 1
    >>> p(3)
    10
    >>> (p * p).coeffs
    (1, 0, 2, 0, 1)
    >>> p(Fraction(1, 2))
    Fraction(5, 4)
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        clean = _trim(coeffs)
        for c in clean:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "IntPoly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        return cls((0,) * degree + (c,))

    @classmethod
    def linear(cls, c: int, a: int) -> "IntPoly":
        """The polynomial c*X - a."""
        return cls((-a, c))

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def __reduce__(self):
        # default pickling would setattr into the frozen instance
        return (IntPoly, (self.coeffs,))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}X" if i == 1 else f"{mag}X^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(value: _Scalar) -> "IntPoly":
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly((value,))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: _Scalar) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: _Scalar) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: _Scalar) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other: _Scalar) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- evaluation ------------------------------------------------------

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        if isinstance(x, int):
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = Fraction(x)
        num = self.eval_pair(x.numerator, x.denominator)
        d = max(self.degree, 0)
        return Fraction(num, x.denominator**d)

    def eval_pair(self, u: int, v: int) -> int:
        """Homogenized value v**deg * self(u/v), computed without division."""
        if not self.coeffs:
            return 0
        acc = 0
        vp = 1
        for c in reversed(self.coeffs):
            acc = acc * u + c * vp
            vp *= v
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g


def rational_roots(p: IntPoly) -> list[Fraction]:
    """All rational roots of a nonzero integer polynomial, sorted ascending.

    Candidates r/s with r | constant term and s | leading coefficient
    (coprime, s >= 1), each confirmed by exact evaluation; a zero constant
    term contributes the root 0 after factoring out X.

    >>> rational_roots(IntPoly([-9, 0, 25]))       # 25 X^2 - 9
    [Fraction(-3, 5), Fraction(3, 5)]
    """
    if not p:
        raise ValueError("zero polynomial has all rationals as roots")
    coeffs = list(p.coeffs)
    roots: set[Fraction] = set()
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    if shift:
        roots.add(Fraction(0))
    q = IntPoly(coeffs)
    if q.degree >= 1:
        const, lead = q.coeffs[0], q.lead
        for s in divisors(lead):
            for r in divisors(const):
                if gcd(r, s) != 1:
                    continue
                for cand_num in (r, -r):
                    if q.eval_pair(cand_num, s) == 0:
                        roots.add(Fraction(cand_num, s))
    return sorted(roots)
