"""Build integer polynomials whose perfect-power values are a chosen finite set.

Given a finite set S of perfect powers, ``construct`` produces f with
integer coefficients such that the perfect powers among the values of f
are exactly the elements of S, each sitting at a fixed point (f(b) = b
for b in S).  Two variants:

* integer: S inside {a**n : a in Z, n >= 2}, squared factors and unit
  offset: g = prod (X - b_i)**2 + 1, h = (X - 1) g + 1, f = g h.
* rational: S inside {r**n : r in Q, n >= 2} with b_i = a_i / c_i in
  lowest terms.  The exponent k = lcm(4, p - 1 over primes p dividing
  some c_i) makes k-th powers trivial mod those primes; the offset 2**s
  needs s = 2**kappa - 1 at least as large as a capacity estimate D for
  each value 4*delta, delta ranging over the nonzero rational roots of
  prod(c_i X - a_i) -+ 1.  Then g = prod (c_i X - a_i)**k + 1 and
  h = (X - 2**s) g + 2**s.

The empty set gets the constant polynomial 2, which is never a perfect
power; the product formulas degenerate there (they would give a linear f
hitting every rational).

The capacity estimate is a bounded stand-in for a quantity defined
through a finiteness theorem without an effective formula: D(gamma) is
estimated as max(0, ceil(log2 |gamma|), last t <= t_max with
gamma - 2**t a perfect power).  The scan depth t_max is a policy knob;
see ``SelectionPolicy``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Union

from .ntheory import factor_integer
from .oracles import scan_gamma_minus_pow2
from .poly import IntPoly, rational_roots
from .powers import is_integer_perfect_power, is_rational_perfect_power

__all__ = [
    "ValidationError",
    "CapacityError",
    "SelectionPolicy",
    "DEFAULT_POLICY",
    "PowerSetInput",
    "CapacityEstimate",
    "ConstructionArtifacts",
    "element_pairs",
    "compute_k",
    "build_root_product",
    "find_deltas",
    "estimate_capacity",
    "select_offset_exponent",
    "build_g_h_f",
    "construct",
    "construct_integer",
]

VARIANTS = ("rational", "integer")


class ValidationError(ValueError):
    """Input set rejected before any construction work."""


class CapacityError(RuntimeError):
    """No offset of the form 2**kappa - 1 within policy covers the estimates."""


@dataclass(frozen=True, slots=True)
class SelectionPolicy:
    """Knobs for the offset selection.

    t_max caps the gamma - 2**t scan depth; kappa_cap caps the offset
    search (s = 2**kappa - 1, 1 <= kappa <= kappa_cap).
    """

    t_max: int = 64
    kappa_cap: int = 20

    def __post_init__(self) -> None:
        if self.t_max < 0 or self.kappa_cap < 1:
            raise ValueError("need t_max >= 0 and kappa_cap >= 1")


DEFAULT_POLICY = SelectionPolicy()


def _format_values(values: Iterable[Fraction]) -> str:
    return ", ".join(str(v) for v in values)


@dataclass(frozen=True)
class PowerSetInput:
    """A validated finite set of perfect powers, elements sorted ascending."""

    elements: tuple[Fraction, ...]
    variant: str = "rational"

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ValidationError(
                f"unknown variant {self.variant!r}, expected one of {VARIANTS}"
            )
        elems = tuple(sorted(Fraction(e) for e in self.elements))
        seen: set[Fraction] = set()
        dupes = sorted({e for e in elems if e in seen or seen.add(e)})
        if dupes:
            raise ValidationError(f"duplicate elements: {_format_values(dupes)}")
        if self.variant == "integer":
            broken = [e for e in elems if e.denominator != 1]
            if broken:
                raise ValidationError(
                    f"integer variant requires integers, got: {_format_values(broken)}"
                )
            non_powers = [e for e in elems if not is_integer_perfect_power(e.numerator)]
        else:
            non_powers = [e for e in elems if not is_rational_perfect_power(e)]
        if non_powers:
            raise ValidationError(
                f"not perfect powers ({self.variant} sense): {_format_values(non_powers)}"
            )
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_values(
        cls,
        values: Iterable[Union[int, str, Fraction]],
        variant: str = "rational",
    ) -> "PowerSetInput":
        parsed = []
        for v in values:
            try:
                parsed.append(Fraction(v))
            except (ValueError, ZeroDivisionError) as exc:
                raise ValidationError(f"cannot parse {v!r} as a rational") from exc
        return cls(elements=tuple(parsed), variant=variant)

    def __len__(self) -> int:
        return len(self.elements)


def element_pairs(inp: PowerSetInput) -> tuple[tuple[int, int], ...]:
    """Lowest-terms pairs (a_i, c_i) with b_i = a_i / c_i, c_i >= 1."""
    return tuple((e.numerator, e.denominator) for e in inp.elements)


def compute_k(pairs: Iterable[tuple[int, int]]) -> int:
    """lcm of 4 and p - 1 over primes p dividing any denominator."""
    k = 4
    primes: set[int] = set()
    for _, c in pairs:
        if c > 1:
            primes.update(p for p, _ in factor_integer(c))
    for p in primes:
        k = lcm(k, p - 1)
    return k


def build_root_product(pairs: Iterable[tuple[int, int]]) -> IntPoly:
    """P = prod (c_i X - a_i)."""
    out = IntPoly((1,))
    for a, c in pairs:
        out = out * IntPoly.linear(c, a)
    return out


def find_deltas(pairs: Iterable[tuple[int, int]]) -> tuple[Fraction, ...]:
    """Nonzero rational roots of P**2 - 1, i.e. of P - 1 and P + 1, sorted.

    Each root is confirmed against P**2 - 1 by exact evaluation before
    being reported.
    """
    P = build_root_product(pairs)
    F = P * P - 1
    deltas = set()
    for shifted in (P - 1, P + 1):
        for r in rational_roots(shifted):
            if r != 0 and F(r) == 0:
                deltas.add(r)
    return tuple(sorted(deltas))


@dataclass(frozen=True, slots=True)
class CapacityEstimate:
    """Bounded estimate of D(gamma) for one scanned value."""

    gamma: Fraction
    log2_bound: int
    last_power_index: Optional[int]
    value: int


def estimate_capacity(gamma: Fraction, policy: SelectionPolicy = DEFAULT_POLICY) -> CapacityEstimate:
    """max(0, ceil(log2 |gamma|), last t <= t_max with gamma - 2**t a perfect power)."""
    gamma = Fraction(gamma)
    if gamma == 0:
        raise ValueError("capacity estimate needs gamma != 0")
    num, den = abs(gamma.numerator), gamma.denominator
    log2_bound = 0
    while (den << log2_bound) < num:
        log2_bound += 1
    hits = scan_gamma_minus_pow2(gamma, policy.t_max)
    last = hits[-1].index if hits else None
    return CapacityEstimate(
        gamma=gamma,
        log2_bound=log2_bound,
        last_power_index=last,
        value=max(log2_bound, last if last is not None else 0),
    )


def select_offset_exponent(
    deltas: Iterable[Fraction], policy: SelectionPolicy = DEFAULT_POLICY
) -> tuple[int, int, tuple[CapacityEstimate, ...]]:
    """Smallest s = 2**kappa - 1 (kappa >= 1) covering every estimate D(4 delta).

    Returns (s, kappa, estimates).  Raises CapacityError naming the worst
    delta when kappa_cap is not enough.
    """
    estimates = tuple(estimate_capacity(4 * d, policy) for d in deltas)
    need = max((e.value for e in estimates), default=0)
    for kappa in range(1, policy.kappa_cap + 1):
        s = (1 << kappa) - 1
        if s >= need:
            return s, kappa, estimates
    worst = max(estimates, key=lambda e: e.value)
    raise CapacityError(
        f"no s = 2**kappa - 1 with kappa <= {policy.kappa_cap} reaches "
        f"capacity estimate {need} (worst gamma = {worst.gamma})"
    )


def _linear_power(c: int, a: int, k: int) -> IntPoly:
    """(c X - a)**k expanded by binomials."""
    from math import comb

    neg = -a
    coeffs = [comb(k, j) * pow(c, j) * pow(neg, k - j) for j in range(k + 1)]
    return IntPoly(coeffs)


def build_g_h_f(
    pairs: Iterable[tuple[int, int]], k: int, s: int
) -> tuple[IntPoly, IntPoly, IntPoly]:
    """g = prod (c_i X - a_i)**k + 1, h = (X - 2**s) g + 2**s, f = g h."""
    pairs = tuple(pairs)
    if not pairs:
        raise ValueError("empty set has no product construction; use construct()")
    g = IntPoly((1,))
    for a, c in pairs:
        g = g * _linear_power(c, a, k)
    g = g + 1
    offset = 1 << s
    h = IntPoly.linear(1, offset) * g + offset
    return g, h, g * h


@dataclass(frozen=True)
class ConstructionArtifacts:
    """Everything construct() decided, sufficient to re-verify every step."""

    input: PowerSetInput
    f: IntPoly
    g: Optional[IntPoly] = None
    h: Optional[IntPoly] = None
    k: Optional[int] = None
    kappa: Optional[int] = None
    s: Optional[int] = None
    deltas: Optional[tuple[Fraction, ...]] = None
    estimates: Optional[tuple[CapacityEstimate, ...]] = None
    notes: str = ""

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return element_pairs(self.input)


def construct_integer(values: Iterable[int]) -> tuple[IntPoly, IntPoly, IntPoly]:
    """The squared-factor construction for a nonempty integer set."""
    pairs = tuple((int(b), 1) for b in values)
    return build_g_h_f(pairs, k=2, s=0)


def construct(
    inp: PowerSetInput, policy: SelectionPolicy = DEFAULT_POLICY
) -> ConstructionArtifacts:
    """Construct f for a validated input set; see the module docstring.

    >>> art = construct(PowerSetInput.from_values(["9/25"]))
    >>> art.k, art.s, art.f.degree
    (4, 1, 9)
    >>> art.f(Fraction(9, 25))
    Fraction(9, 25)
    """
    if len(inp) == 0:
        return ConstructionArtifacts(
            input=inp,
            f=IntPoly((2,)),
            notes="empty set: constant 2 is never a perfect power; "
            "the product construction degenerates to a linear polynomial here",
        )
    pairs = element_pairs(inp)
    if inp.variant == "integer":
        g, h, f = build_g_h_f(pairs, k=2, s=0)
        return ConstructionArtifacts(
            input=inp,
            f=f,
            g=g,
            h=h,
            k=2,
            s=0,
            notes="integer variant: squared factors, offset 2**0 = 1",
        )
    k = compute_k(pairs)
    deltas = find_deltas(pairs)
    s, kappa, estimates = select_offset_exponent(deltas, policy)
    g, h, f = build_g_h_f(pairs, k, s)
    return ConstructionArtifacts(
        input=inp,
        f=f,
        g=g,
        h=h,
        k=k,
        kappa=kappa,
        s=s,
        deltas=deltas,
        estimates=estimates,
        notes=f"offset 2**{s} with s = 2**{kappa} - 1 covering "
        f"{len(estimates)} capacity estimates (scan depth {policy.t_max})",
    )
