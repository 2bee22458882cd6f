"""Exhaustive bounded searches for the Diophantine facts the construction leans on.

Three classical equations get desk-scale scans with exact root extraction:

* ``X^2 + 1 = Y^n``        (only X = 0 in any range),
* ``X^m - Y^n = 1``        (bases and exponents >= 2: only 3^2 - 2^3),
* quartic Fermat variants  (``A^4 + B^4 = C^n``, ``A^4 + B^4 = 2*C^n``,
  and ``A^2 + B^4 = C^n`` with nonzero coprime A, B and n >= 4).

Each search reports every solution inside its stated box, so the expected
answer can be compared set-for-set rather than trusted.  Alongside these
sit two power scans used by the constructor's capacity estimate: perfect
powers in a binary recurrence, and perfect powers among gamma - 2^t.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .ntheory import integer_nth_root
from .powers import PowerDecomposition, decompose_rational_power

__all__ = [
    "SolutionList",
    "PowerHit",
    "search_lebesgue",
    "search_catalan",
    "search_fermat_quartic",
    "lebesgue_expected",
    "catalan_expected",
    "fermat_quartic_expected",
    "scan_recurrence_powers",
    "scan_gamma_minus_pow2",
    "FERMAT_VARIANTS",
]

FERMAT_VARIANTS = ("cn", "2cn", "24n")


@dataclass(frozen=True, slots=True)
class SolutionList:
    """Outcome of one exhaustive box search."""

    equation: str
    bounds: dict
    solutions: tuple[tuple[int, ...], ...]
    exhaustive: bool = True
    notes: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "solutions", tuple(sorted(self.solutions)))


@dataclass(frozen=True, slots=True)
class PowerHit:
    """One index of a scanned sequence whose value is a perfect power."""

    index: int
    value: Fraction
    power: PowerDecomposition


def _split_range(start: int, stop: int, parts: int) -> list[range]:
    """Split range(start, stop) into <= parts contiguous nonempty chunks."""
    total = stop - start
    parts = max(1, min(parts, total)) if total > 0 else 1
    step, extra = divmod(total, parts)
    chunks = []
    lo = start
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        if hi > lo:
            chunks.append(range(lo, hi))
        lo = hi
    return chunks


def _map_chunks(worker, payloads, workers: int):
    if workers <= 1 or len(payloads) <= 1:
        return [worker(p) for p in payloads]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, payloads))


# -- X^2 + 1 = Y^n -----------------------------------------------------------


def _lebesgue_chunk(payload: tuple[range, int]) -> list[tuple[int, int, int]]:
    xs, n_max = payload
    found = []
    for x in xs:
        m = x * x + 1
        for n in range(2, n_max + 1):
            if m > 1 and (m.bit_length() - 1) < n:
                break  # 2^n already exceeds m, no root >= 2 and 1 is ruled out
            y, exact = integer_nth_root(m, n)
            if not exact:
                continue
            found.append((x, y, n))
            if x:
                found.append((-x, y, n))
            if n % 2 == 0:
                found.append((x, -y, n))
                if x:
                    found.append((-x, -y, n))
    return found


def search_lebesgue(x_bound: int, n_max: int, workers: int = 1) -> SolutionList:
    """All (X, Y, n) with X^2 + 1 = Y^n, |X| <= x_bound, 2 <= n <= n_max."""
    if x_bound < 0 or n_max < 2:
        raise ValueError("need x_bound >= 0 and n_max >= 2")
    chunks = _split_range(0, x_bound + 1, workers)
    found: list[tuple[int, int, int]] = []
    for part in _map_chunks(_lebesgue_chunk, [(c, n_max) for c in chunks], workers):
        found.extend(part)
    return SolutionList(
        equation="X^2 + 1 = Y^n",
        bounds={"x_bound": x_bound, "n_max": n_max},
        solutions=tuple(found),
        notes="X scanned over |X| <= x_bound; Y unconstrained, recovered by exact roots",
    )


def lebesgue_expected(x_bound: int, n_max: int) -> tuple[tuple[int, int, int], ...]:
    """The X = 0 family: 0^2 + 1 = 1^n always, plus (-1)^n for even n."""
    out = []
    for n in range(2, n_max + 1):
        out.append((0, 1, n))
        if n % 2 == 0:
            out.append((0, -1, n))
    return tuple(sorted(out))


# -- X^m - Y^n = 1 -----------------------------------------------------------


def search_catalan(base_bound: int, exp_bound: int, workers: int = 1) -> SolutionList:
    """All (X, m, Y, n) with X^m - Y^n = 1, 2 <= X, Y <= base_bound, 2 <= m, n <= exp_bound.

    Builds the table of in-range perfect powers once and joins it against
    itself shifted by one, so runtime is table-sized, not box-sized.
    """
    if base_bound < 2 or exp_bound < 2:
        raise ValueError("need base_bound >= 2 and exp_bound >= 2")
    table: dict[int, list[tuple[int, int]]] = {}
    for base in range(2, base_bound + 1):
        value = base
        for exp in range(2, exp_bound + 1):
            value *= base
            table.setdefault(value, []).append((base, exp))
    found = [
        (x, m, y, n)
        for value, reps in table.items()
        if value - 1 in table
        for x, m in reps
        for y, n in table[value - 1]
    ]
    return SolutionList(
        equation="X^m - Y^n = 1",
        bounds={"base_bound": base_bound, "exp_bound": exp_bound},
        solutions=tuple(found),
        notes="join of the perfect-power table against itself shifted by 1",
    )


def catalan_expected(base_bound: int, exp_bound: int) -> tuple[tuple[int, int, int, int], ...]:
    """9 - 8 = 1 is the lone consecutive pair of nontrivial powers."""
    if base_bound >= 3 and exp_bound >= 3:
        return ((3, 2, 2, 3),)
    return ()


# -- quartic Fermat variants --------------------------------------------------

_FERMAT_FORMS = {
    "cn": ("A^4 + B^4 = C^n", 4, 4, 1, 2),
    "2cn": ("A^4 + B^4 = 2*C^n", 4, 4, 2, 2),
    "24n": ("A^2 + B^4 = C^n", 2, 4, 1, 4),
}


def _fermat_chunk(payload) -> list[tuple[int, int, int, int]]:
    a_range, ab_bound, n_min, n_max, pa, pb, rhs_mult, nonzero = payload
    found = []
    for a in a_range:
        for b in range(ab_bound + 1):
            if gcd(a, b) != 1:
                continue
            if nonzero and (a == 0 or b == 0):
                continue
            lhs = a**pa + b**pb
            if lhs % rhs_mult:
                continue
            target = lhs // rhs_mult
            if target == 0:
                continue
            for n in range(n_min, n_max + 1):
                c, exact = integer_nth_root(target, n)
                if not exact:
                    continue
                a_signs = (a,) if a == 0 else (a, -a)
                b_signs = (b,) if b == 0 else (b, -b)
                for sa in a_signs:
                    for sb in b_signs:
                        found.append((sa, sb, c, n))
    return found


def search_fermat_quartic(
    ab_bound: int, n_max: int, variant: str = "cn", workers: int = 1
) -> SolutionList:
    """Coprime solutions of one quartic Fermat variant inside a box.

    Variants: "cn" is A^4 + B^4 = C^n, "2cn" is A^4 + B^4 = 2*C^n (both
    with n >= 2), "24n" is A^2 + B^4 = C^n with A, B nonzero and n >= 4.
    C is reported in its canonical positive form; for even n the sign
    mirror -C solves too.
    """
    if variant not in _FERMAT_FORMS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {FERMAT_VARIANTS}")
    equation, pa, pb, rhs_mult, n_min = _FERMAT_FORMS[variant]
    if ab_bound < 1 or n_max < n_min:
        raise ValueError(f"need ab_bound >= 1 and n_max >= {n_min} for {variant!r}")
    nonzero = variant == "24n"
    chunks = _split_range(0, ab_bound + 1, workers)
    payloads = [(c, ab_bound, n_min, n_max, pa, pb, rhs_mult, nonzero) for c in chunks]
    found: list[tuple[int, int, int, int]] = []
    for part in _map_chunks(_fermat_chunk, payloads, workers):
        found.extend(part)
    return SolutionList(
        equation=equation,
        bounds={"ab_bound": ab_bound, "n_min": n_min, "n_max": n_max},
        solutions=tuple(found),
        notes="gcd(A, B) = 1 required; C canonicalized positive"
        + ("; A, B nonzero required" if nonzero else ""),
    )


def fermat_quartic_expected(
    ab_bound: int, n_max: int, variant: str = "cn"
) -> tuple[tuple[int, int, int, int], ...]:
    """Known full solution sets: trivial families for cn/2cn, empty for 24n."""
    if variant not in _FERMAT_FORMS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {FERMAT_VARIANTS}")
    _, _, _, _, n_min = _FERMAT_FORMS[variant]
    out: list[tuple[int, int, int, int]] = []
    if variant == "cn":
        for n in range(n_min, n_max + 1):
            out.extend([(0, 1, 1, n), (0, -1, 1, n), (1, 0, 1, n), (-1, 0, 1, n)])
    elif variant == "2cn":
        for n in range(n_min, n_max + 1):
            out.extend([(1, 1, 1, n), (1, -1, 1, n), (-1, 1, 1, n), (-1, -1, 1, n)])
    return tuple(sorted(out))


# -- power scans --------------------------------------------------------------


def scan_recurrence_powers(
    a: Fraction | int,
    b: Fraction | int,
    alpha: Fraction | int,
    beta: Fraction | int,
    t_max: int,
) -> tuple[PowerHit, ...]:
    """Perfect powers among u_t = a*alpha^t + b*beta^t for 0 <= t <= t_max.

    Degenerate data (a zero coefficient or root, or alpha = +-beta) is
    rejected: those sequences collapse and their power count is not the
    finite quantity of interest.
    """
    a, b, alpha, beta = Fraction(a), Fraction(b), Fraction(alpha), Fraction(beta)
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    if a == 0 or b == 0 or alpha == 0 or beta == 0 or alpha == beta or alpha == -beta:
        raise ValueError("degenerate recurrence (zero datum or alpha = +-beta)")
    hits = []
    pa, pb = Fraction(1), Fraction(1)
    for t in range(t_max + 1):
        u = a * pa + b * pb
        dec = decompose_rational_power(u)
        if dec is not None:
            hits.append(PowerHit(index=t, value=u, power=dec))
        pa *= alpha
        pb *= beta
    return tuple(hits)


def scan_gamma_minus_pow2(gamma: Fraction | int, t_max: int) -> tuple[PowerHit, ...]:
    """Perfect powers among gamma - 2^t for 0 <= t <= t_max (gamma nonzero).

    This is the recurrence scan specialized to u_t = gamma*1^t - 1*2^t, kept
    separate because the capacity estimate consumes exactly this sequence.
    """
    gamma = Fraction(gamma)
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    hits = []
    pw = 1
    for t in range(t_max + 1):
        u = gamma - pw
        dec = decompose_rational_power(u)
        if dec is not None:
            hits.append(PowerHit(index=t, value=u, power=dec))
        pw <<= 1
    return tuple(hits)
