"""Exact evaluation of the closed-form threshold bounds.

Every verdict that involves a fractional exponent is restated as an integer
power comparison (N^m vs (2m+1)^(rm) * r!, N^2 vs 9^r (r+1)!, ...), so no
float ever decides anything.  Decimals appear only for display and caps, at
50 significant digits with the stated rounding direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import factorial
from typing import Optional, Union

SIG_DIGITS = 50
_WORK_PREC = SIG_DIGITS + 15

DecimalLike = Union[Decimal, int, str]


def iroot(x: int, k: int) -> int:
    """Largest r with r**k <= x, in exact integer arithmetic."""
    if x < 0 or k < 1:
        raise ValueError("need x >= 0 and k >= 1")
    if x == 0 or k == 1:
        return x
    r = 1 << -(-x.bit_length() // k)  # 2^ceil(bits/k) >= x^(1/k)
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def efloor_factorial(n: int) -> int:
    """floor(e * n!) for n >= 1, as the exact partial sum of n!/k!."""
    if n < 1:
        raise ValueError("identity holds for n >= 1 only")
    acc, total = 1, 1
    for k in range(n, 0, -1):
        acc *= k
        total += acc
    return total


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (n - 1).bit_length()


def _sig(value: Decimal, rounding: str = ROUND_HALF_EVEN) -> Decimal:
    with localcontext() as ctx:
        ctx.prec = SIG_DIGITS
        ctx.rounding = rounding
        return +value


def balanced_bound_holds(n: int, m: int, r: int) -> bool:
    """Exact truth of n <= (2m+1)^r * (r!)^(1/m), tested as n^m <= (2m+1)^(rm) * r!."""
    if n < 1 or m < 1 or r < 1:
        raise ValueError("all parameters must be positive")
    return n ** m <= (2 * m + 1) ** (r * m) * factorial(r)


def balanced_cap(m: int, r: int) -> int:
    """Least integer exceeding (2m+1)^r * (r!)^(1/m); a terminating search cap."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    return iroot((2 * m + 1) ** (r * m) * factorial(r), m) + 1


def balanced_bound_decimal(m: int, r: int) -> Decimal:
    """(2m+1)^r * (r!)^(1/m) at 50 significant digits, rounded up."""
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        value = Decimal((2 * m + 1) ** (r * m) * factorial(r)) ** (Decimal(1) / m)
    return _sig(value, ROUND_CEILING)


def balanced_reduction(a: int, b: int) -> Optional[tuple[int, int, int]]:
    """(d, m, w) with d = a - b and b = d*m + w, 0 <= w < d, when m >= 1.

    Applicable exactly when a <= 2b; the (a vs b) threshold then inherits the
    balanced-m cap.  None otherwise.
    """
    if b < 1 or a <= b:
        raise ValueError("need a > b >= 1")
    d = a - b
    m, w = divmod(b, d)
    return (d, m, w) if m >= 1 else None


def repeated_schur_cap(a: int, b: int, r: int) -> int:
    """floor(e * (rL)!) + 1 with L = max(ceil(log2 a), ceil(log2 b) + 1)."""
    if b < 1 or a <= b or r < 1:
        raise ValueError("need a > b >= 1 and r >= 1")
    level = max(ceil_log2(a), ceil_log2(b) + 1)
    return efloor_factorial(r * level) + 1


def schur_bounds(r: int) -> tuple[Fraction, int]:
    """The classic bracket ((3^r + 1)/2, floor(e * r!) + 1) around S_1(r).

    The lower value is exclusive in general, though the smallest cases attain
    it; callers should not assume strictness.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    return Fraction(3 ** r + 1, 2), efloor_factorial(r) + 1


def kosciuszko_holds(n: int, r: int) -> bool:
    """Exact truth of n <= 3^r * sqrt((r+1)!), tested as n^2 <= 9^r * (r+1)!."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    return n * n <= 9 ** r * factorial(r + 1)


def kosciuszko_bound(r: int) -> Decimal:
    """3^r * sqrt((r+1)!) at 50 significant digits, rounded up."""
    if r < 1:
        raise ValueError("r must be >= 1")
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        value = Decimal(9 ** r * factorial(r + 1)).sqrt()
    return _sig(value, ROUND_CEILING)


def odd_cycle_ramsey_cap(ell: int, q: int) -> int:
    """floor(((4*ell - 2)^(q*ell) * q!)^(1/ell)) + 1, by exact integer root."""
    if ell < 1 or q < 1:
        raise ValueError("ell and q must be positive")
    return iroot((4 * ell - 2) ** (q * ell) * factorial(q), ell) + 1


def refined_schur_upper(r: int) -> Decimal:
    """(e - 1/6) * r! at 50 significant digits; display only, no exact form."""
    if r < 1:
        raise ValueError("r must be >= 1")
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        value = (Decimal(1).exp() - Decimal(1) / 6) * factorial(r)
    return _sig(value)


def _as_decimal(value: DecimalLike) -> Decimal:
    if isinstance(value, Decimal):
        return value
    if isinstance(value, (int, str)):
        return Decimal(value)
    raise TypeError("pass the interval base as Decimal, int, or str")


def forced_m_threshold(r: int, base: DecimalLike) -> Decimal:
    """ln(r) / (ln(base/(2 ln r)) + ln ln(base/(2 ln r))) at 50 digits.

    Defined for r >= 3 and base >= 2e ln r; below that the inner logarithms
    lose their meaning and the call is rejected.
    """
    if r < 3:
        raise ValueError("needs r >= 3")
    b = _as_decimal(base)
    with localcontext() as ctx:
        ctx.prec = _WORK_PREC
        ln_r = Decimal(r).ln()
        # the floor-of-boundary comparison admits inputs that were themselves
        # rounded to the published 50-digit precision
        if b < _sig(2 * Decimal(1).exp() * ln_r, ROUND_FLOOR):
            raise ValueError("needs base >= 2e ln r")
        ratio = b / (2 * ln_r)
        value = ln_r / (ratio.ln() + ratio.ln().ln())
    return _sig(value)


@dataclass(frozen=True)
class ForcedMStatement:
    """For r colors and interval [base^r]: every coloring has a one-class
    balanced solution with at most `threshold` right-hand terms."""

    r: int
    base: str
    threshold: str

    def describe(self) -> str:
        return (f"every {self.r}-coloring of [1..{self.base}^{self.r}] contains a "
                f"one-class solution to a balanced equation with m <= {self.threshold}")

    def to_json_dict(self) -> dict:
        return {"r": self.r, "base": self.base, "m_threshold": self.threshold}


def forced_m_statement(r: int, base: DecimalLike) -> ForcedMStatement:
    return ForcedMStatement(r, str(_as_decimal(base)), str(forced_m_threshold(r, base)))


def _exact(name: str, value: int) -> dict:
    return {"name": name, "kind": "exact", "value": value}


def _decimal_entry(name: str, value: Decimal, rounding: str) -> dict:
    return {"name": name, "kind": "decimal", "value": str(value), "rounding": rounding}


def bound_report(r: int, m: Optional[int] = None,
                 a: Optional[int] = None, b: Optional[int] = None) -> dict:
    """All applicable bound values for the given parameters.

    Exact entries are reproducible by integer arithmetic alone; decimal
    entries carry their rounding direction and are safe as caps only when
    rounded up.
    """
    if (m is None) == (a is None or b is None):
        raise ValueError("give either m or both a and b")
    entries: list[dict] = [_exact("any_coloring_lower", 2 ** r)]
    params: dict = {"r": r}
    if m is not None:
        params["m"] = m
        entries.append(_exact("balanced_cap", balanced_cap(m, r)))
        entries.append(_decimal_entry("balanced_bound", balanced_bound_decimal(m, r), "up"))
        if m == 1:
            lower, upper = schur_bounds(r)
            entries.append(_exact("schur_lower", int(lower)))
            entries.append(_exact("schur_upper", upper))
            entries.append(_decimal_entry("schur_upper_refined", refined_schur_upper(r), "nearest"))
        if m == 2:
            entries.append(_decimal_entry("sqrt_factorial_upper", kosciuszko_bound(r), "up"))
    else:
        params["a"], params["b"] = a, b
        reduction = balanced_reduction(a, b)
        if reduction is not None:
            d, mm, w = reduction
            params["reduction"] = {"d": d, "m": mm, "w": w}
            entries.append(_exact("balanced_cap", balanced_cap(mm, r)))
            entries.append(_decimal_entry("balanced_bound", balanced_bound_decimal(mm, r), "up"))
        entries.append(_exact("repeated_schur_cap", repeated_schur_cap(a, b, r)))
    return {"parameters": params, "entries": entries}
