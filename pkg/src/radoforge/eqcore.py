"""Core types and exact decision procedures for sum equations on integer sets.

The driving question: does a set of positive integers contain a solution to

    x_1 + ... + x_a  =  y_1 + ... + y_b        (a > b >= 1, repetition allowed)

with every value drawn from the set?  The balanced shape a = m + 1, b = m is
the important special case, and "any m" asks whether some balanced equation
has a solution.  Any-m avoidance is decided exactly through residue
obstructions: a set confined to d*Z + rem with d >= 2 and rem != 0 can never
balance the two sides (they disagree by rem modulo d), and an unconfined set
always can, with m at most max(A) - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd
from typing import Iterable, Optional

BALANCED = "balanced"
GENERAL = "general"
ANY_M = "any-m"


class ResourceLimitError(RuntimeError):
    """An operation refused to run past its documented desk-scale cap."""


@dataclass(frozen=True)
class EquationSpec:
    """Shape of a sum equation: side sizes (a, b), or the any-m question."""

    kind: str
    a: Optional[int] = None
    b: Optional[int] = None

    def __post_init__(self):
        if self.kind == ANY_M:
            if self.a is not None or self.b is not None:
                raise ValueError("any-m carries no side sizes")
        elif self.kind in (BALANCED, GENERAL):
            if not isinstance(self.a, int) or not isinstance(self.b, int):
                raise ValueError("side sizes must be integers")
            if self.b < 1 or self.a <= self.b:
                raise ValueError(f"need a > b >= 1, got a={self.a} b={self.b}")
            if self.kind == BALANCED and self.a != self.b + 1:
                raise ValueError("balanced shape needs a = b + 1")
        else:
            raise ValueError(f"unknown equation kind {self.kind!r}")

    def sides(self) -> tuple[int, int]:
        if self.kind == ANY_M:
            raise ValueError("any-m has no fixed side sizes")
        return self.a, self.b

    @property
    def is_any_m(self) -> bool:
        return self.kind == ANY_M


def balanced(m: int) -> EquationSpec:
    """The (m+1 vs m)-term equation."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return EquationSpec(BALANCED, m + 1, m)


def general(a: int, b: int) -> EquationSpec:
    """The (a vs b)-term equation, a > b >= 1."""
    return EquationSpec(GENERAL, a, b)


def any_m() -> EquationSpec:
    """Some balanced equation, any number of terms."""
    return EquationSpec(ANY_M)


def format_spec(spec: EquationSpec) -> str:
    if spec.kind == ANY_M:
        return "any-m"
    if spec.kind == BALANCED:
        return f"balanced:{spec.b}"
    return f"general:{spec.a}:{spec.b}"


def parse_spec(text: str) -> EquationSpec:
    t = text.strip().lower()
    if t in ("any-m", "anym", "any_m"):
        return any_m()
    parts = t.split(":")
    if parts[0] == "balanced" and len(parts) == 2:
        return balanced(int(parts[1]))
    if parts[0] == "general" and len(parts) == 3:
        return general(int(parts[1]), int(parts[2]))
    raise ValueError(f"cannot parse equation spec {text!r} "
                     "(use any-m, balanced:M, or general:A:B)")


@dataclass(frozen=True)
class Coloring:
    """Assignment of one of `colors` colors to each integer in [1..n]."""

    n: int
    colors: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if self.n < 1 or self.colors < 1:
            raise ValueError("n and colors must be positive")
        if len(self.assignment) != self.n:
            raise ValueError("assignment length must equal n")
        if any(not 1 <= c <= self.colors for c in self.assignment):
            raise ValueError("colors must lie in [1..colors]")

    def color_of(self, i: int) -> int:
        return self.assignment[i - 1]

    def class_of(self, c: int) -> set[int]:
        return {i for i in range(1, self.n + 1) if self.assignment[i - 1] == c}

    def classes(self) -> list[set[int]]:
        return [self.class_of(c) for c in range(1, self.colors + 1)]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "colors": self.colors, "assignment": list(self.assignment)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Coloring":
        return cls(data["n"], data["colors"], tuple(data["assignment"]))


@dataclass(frozen=True)
class SolutionWitness:
    """Two multisets with equal sums certifying a solution; sides stay sorted."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    color: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(sorted(self.left)))
        object.__setattr__(self, "right", tuple(sorted(self.right)))
        if not self.left or not self.right:
            raise ValueError("both sides must be nonempty")
        if any(v < 1 for v in self.left + self.right):
            raise ValueError("witness values must be positive")
        if sum(self.left) != sum(self.right):
            raise ValueError("side sums differ")

    @property
    def sizes(self) -> tuple[int, int]:
        return len(self.left), len(self.right)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.left) | frozenset(self.right)

    def matches(self, spec: EquationSpec) -> bool:
        return self.sizes == spec.sides()

    def with_color(self, c: Optional[int]) -> "SolutionWitness":
        return replace(self, color=c)

    def to_json_dict(self) -> dict:
        return {"color": self.color, "left": list(self.left), "right": list(self.right)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SolutionWitness":
        return cls(tuple(data["left"]), tuple(data["right"]), data.get("color"))


@dataclass(frozen=True)
class ResidueObstruction:
    """Containment of a set in modulus*Z + remainder with remainder != 0."""

    modulus: int
    remainder: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not 0 < self.remainder < self.modulus:
            raise ValueError("remainder must lie strictly between 0 and modulus")

    def contains(self, x: int) -> bool:
        return x % self.modulus == self.remainder

    def to_json_dict(self) -> dict:
        return {"modulus": self.modulus, "remainder": self.remainder}


def sums_with_count(values: Iterable[int], k: int, cap: int) -> set[int]:
    """All sums of size-k multisets over `values`, truncated at `cap`.

    Bitset dynamic program: layer j holds achievable j-term sums as bits of
    one big integer, so each extension is a handful of shifts and ors.
    """
    if k < 0 or cap < 0:
        raise ValueError("k and cap must be nonnegative")
    vals = sorted(set(values))
    if any(v < 1 for v in vals):
        raise ValueError("values must be positive integers")
    vals = [v for v in vals if v <= cap]
    mask = (1 << (cap + 1)) - 1
    layer = 1  # bit 0: the empty sum
    for _ in range(k):
        nxt = 0
        for v in vals:
            nxt |= layer << v
        layer = nxt & mask
        if layer == 0:
            return set()
    return {s for s in range(cap + 1) if layer >> s & 1}


def has_solution(values: Iterable[int], a: int, b: int) -> bool:
    """Whether some a-multiset and some b-multiset over `values` share a sum."""
    if b < 1 or a <= b:
        raise ValueError("need a > b >= 1")
    vs = set(values)
    if not vs:
        return False
    cap = max(a, b) * max(vs)
    return bool(sums_with_count(vs, a, cap) & sums_with_count(vs, b, cap))


def _least_with_sum(pool: list[int], k: int, target: int) -> tuple[int, ...]:
    """Lexicographically least nondecreasing k-multiset over `pool` summing to
    `target`; greedy smallest-first with a DP feasibility check per step."""
    out: list[int] = []
    start, s = 0, target
    for remaining in range(k, 0, -1):
        for idx in range(start, len(pool)):
            v = pool[idx]
            if v > s:
                break
            if (s - v) in sums_with_count(pool[idx:], remaining - 1, s - v):
                out.append(v)
                s -= v
                start = idx
                break
        else:
            raise AssertionError("target sum certified reachable but greedy failed")
    return tuple(out)


def _least_side(pool: list[int], k: int, target_sums: set[int], cap: int) -> tuple[int, ...]:
    """Least k-multiset whose total lands in `target_sums`."""
    out: list[int] = []
    start, prefix = 0, 0
    for remaining in range(k, 0, -1):
        for idx in range(start, len(pool)):
            v = pool[idx]
            tails = sums_with_count(pool[idx:], remaining - 1, cap - prefix - v)
            if any(prefix + v + t in target_sums for t in tails):
                out.append(v)
                prefix += v
                start = idx
                break
        else:
            raise AssertionError("matching sum certified reachable but greedy failed")
    return tuple(out)


def find_solution(values: Iterable[int], a: int, b: int) -> Optional[SolutionWitness]:
    """Solution to the (a vs b)-term equation over `values`, or None.

    When solutions exist, returns the lexicographically least one (by sorted
    left side, then sorted right side), reconstructed by walking the sum
    layers smallest-element-first.
    """
    if b < 1 or a <= b:
        raise ValueError("need a > b >= 1")
    pool = sorted(set(values))
    if not pool:
        return None
    cap = max(a, b) * pool[-1]
    sums_b = sums_with_count(pool, b, cap)
    if not sums_with_count(pool, a, cap) & sums_b:
        return None
    left = _least_side(pool, a, sums_b, cap)
    right = _least_with_sum(pool, b, sum(left))
    return SolutionWitness(left, right)


def min_m(values: Iterable[int], m_max: int) -> Optional[tuple[int, SolutionWitness]]:
    """Least m <= m_max whose balanced equation has a solution, with witness."""
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    vs = set(values)
    for m in range(1, m_max + 1):
        if has_solution(vs, m + 1, m):
            witness = find_solution(vs, m + 1, m)
            return m, witness
    return None


def residue_obstruction(values: Iterable[int]) -> Optional[ResidueObstruction]:
    """A progression d*Z + rem (d >= 2, rem != 0) trapping every element, or None.

    For two or more elements: with d = gcd(A) and d' = gcd(A - A)/d, an
    obstruction exists exactly when d' > 1, and then gcd(A - A) itself is a
    valid modulus.  Singletons get the conventional (a+1, a) and the empty
    set (2, 1), both of which are genuine obstructions.
    """
    vs = sorted(set(values))
    if any(v < 1 for v in vs):
        raise ValueError("values must be positive integers")
    if not vs:
        return ResidueObstruction(2, 1)
    if len(vs) == 1:
        return ResidueObstruction(vs[0] + 1, vs[0])
    d = gcd(*vs)
    diff_gcd = gcd(*[v - vs[0] for v in vs[1:]])
    if diff_gcd // d <= 1:
        return None
    # diff_gcd divides every pairwise difference but not gcd(A), so the
    # common remainder is nonzero
    return ResidueObstruction(diff_gcd, vs[0] % diff_gcd)


@dataclass(frozen=True)
class BezoutCertificate:
    """Balanced solution built from an extended-gcd combination.

    `k` holds one signed multiplicity per element of the reduced base, with
    sum(k) = 1 and sum(k_i * base_i) = 0; positive entries feed the left
    side, negative ones the right, scaled back by the common divisor.
    """

    m: int
    witness: SolutionWitness
    k: tuple[int, ...]
    base: tuple[int, ...]
    divisor: int


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _gcd_combination(deltas: list[int]) -> list[int]:
    """Coefficients x with sum(x_i * deltas_i) = 1; requires gcd = 1."""
    g, coeffs = deltas[0], [1]
    for delta in deltas[1:]:
        if g == 1:
            coeffs.append(0)
            continue
        g, s, t = _ext_gcd(g, delta)
        coeffs = [c * s for c in coeffs]
        coeffs.append(t)
    if g != 1:
        raise ValueError("differences share a common factor > 1")
    return coeffs


def bezout_witness(values: Iterable[int]) -> BezoutCertificate:
    """Construct a balanced solution for an unobstructed set of >= 2 elements.

    Divides out gcd(A), expresses 1 as an integer combination of the
    differences against the smallest base element, folds the combination
    into per-element multiplicities k, and reads off the two sides from the
    signs of k.  No attempt is made to minimize m.
    """
    vs = sorted(set(values))
    if len(vs) < 2:
        raise ValueError("need at least two elements")
    if residue_obstruction(vs) is not None:
        raise ValueError("set sits in a nonzero residue class; no solution exists")
    d = gcd(*vs)
    base = [v // d for v in vs]
    coeffs = _gcd_combination([bi - base[0] for bi in base[1:]])
    k = [sum(x * bj for x, bj in zip(coeffs, base[1:]))]
    k += [-x * base[0] for x in coeffs]
    assert sum(k) == 1
    assert sum(ki * bi for ki, bi in zip(k, base)) == 0
    m = -sum(ki for ki in k if ki < 0)
    left: list[int] = []
    right: list[int] = []
    for ki, v in zip(k, vs):
        if ki > 0:
            left += [v] * ki
        elif ki < 0:
            right += [v] * (-ki)
    witness = SolutionWitness(left, right)
    return BezoutCertificate(m, witness, tuple(k), tuple(base), d)


def pad_solution(w: SolutionWitness, t: int, pad: int) -> SolutionWitness:
    """Repeat each side t times and append `pad` copies of the smallest left
    element to both sides; sums stay equal and the support does not grow."""
    if t < 1 or pad < 0:
        raise ValueError("need t >= 1 and pad >= 0")
    filler = w.left[0]
    return SolutionWitness(
        w.left * t + (filler,) * pad,
        w.right * t + (filler,) * pad,
        w.color,
    )


def check_coloring(coloring: Coloring, spec: EquationSpec) -> Optional[SolutionWitness]:
    """None when every color class avoids `spec`; otherwise a witness tagged
    with the lowest offending color.

    Fixed shapes are decided by exact per-class search.  Any-m is decided by
    residue obstructions, which characterize any-m avoidance exactly; an
    unobstructed class is guaranteed a solution with m <= n - 1, and its
    least-m witness is returned.
    """
    for c in range(1, coloring.colors + 1):
        cls = coloring.class_of(c)
        if spec.is_any_m:
            if residue_obstruction(cls) is not None:
                continue
            hit = min_m(cls, max(coloring.n - 1, 1))
            if hit is None:
                raise RuntimeError(
                    "unobstructed class with no solution below the guaranteed "
                    "threshold; residue characterization violated")
            return hit[1].with_color(c)
        a, b = spec.sides()
        witness = find_solution(cls, a, b)
        if witness is not None:
            return witness.with_color(c)
    return None
