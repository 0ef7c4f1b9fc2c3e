"""Minimal zero-sum sequences and the balanced-identity bridge.

A least-m balanced witness, zero-padded and sorted, yields two equal-size
equal-sum multisets whose coordinatewise differences form a minimal zero-sum
sequence.  The greedy partial-sum reordering then pins the number of positive
and negative terms, which bounds the least workable m by max(A) - 1 for any
set A without a residue obstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .eqcore import (
    ResidueObstruction,
    ResourceLimitError,
    SolutionWitness,
    min_m,
    residue_obstruction,
)

MAX_MINIMALITY_LEN = 24
MAX_PRIMITIVITY_K = 12
MAX_QUANTITATIVE_M = 14


def is_minimal_zero_sum(seq: Iterable[int]) -> bool:
    """True when the terms sum to zero and no nonempty proper subsequence does.

    Since the whole sequence sums to zero, a proper nonempty zero-sum
    subsequence exists exactly when one avoids the last term, so a bounded
    subset-sum scan over the prefix decides it.
    """
    terms = tuple(seq)
    if len(terms) > MAX_MINIMALITY_LEN:
        raise ResourceLimitError(f"minimality check capped at length {MAX_MINIMALITY_LEN}")
    if not terms or sum(terms) != 0:
        return False
    sums: set[int] = set()
    for x in terms[:-1]:
        sums |= {s + x for s in sums}
        sums.add(x)
        if 0 in sums:
            return False
    return True


@dataclass(frozen=True)
class ReorderResult:
    """A permutation of a zero-sum sequence and its k+1 partial sums."""

    order: tuple[int, ...]
    partial_sums: tuple[int, ...]

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """The sums before each step: s_0 .. s_{k-1}."""
        return self.partial_sums[:-1]


def lambert_reorder(seq: Iterable[int]) -> ReorderResult:
    """Greedy reorder of a zero-sum sequence of nonzero terms.

    After a non-positive partial sum take the largest remaining positive
    term, after a positive one the most negative; so each partial sum rises
    exactly when the previous one was <= 0, which keeps every prefix sum in
    (-b, a] for a = max positive term, b = max negative magnitude.  For
    minimal sequences the prefix sums are in addition pairwise distinct.
    """
    terms = list(seq)
    if sum(terms) != 0:
        raise ValueError("terms must sum to zero")
    if any(t == 0 for t in terms):
        raise ValueError("terms must be nonzero")
    positives = sorted(t for t in terms if t > 0)
    negatives = sorted((t for t in terms if t < 0), reverse=True)
    order: list[int] = []
    partial = [0]
    s = 0
    while positives or negatives:
        if s <= 0:
            if not positives:
                raise AssertionError("zero-sum input cannot run out of positive terms here")
            e = positives.pop()
        else:
            if not negatives:
                raise AssertionError("zero-sum input cannot run out of negative terms here")
            e = negatives.pop()
        order.append(e)
        s += e
        partial.append(s)
    return ReorderResult(tuple(order), tuple(partial))


@dataclass(frozen=True)
class BalancedIdentity:
    """Two sorted equal-size multisets with equal sums and their differences."""

    p: tuple[int, ...]
    q: tuple[int, ...]
    diffs: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.p)

    @property
    def max_positive(self) -> int:
        return max(x for x in self.diffs if x > 0)

    @property
    def max_negative(self) -> int:
        return max(-x for x in self.diffs if x < 0)

    def to_json_dict(self) -> dict:
        return {"p": list(self.p), "q": list(self.q), "diffs": list(self.diffs)}


class NotPrimitiveError(ValueError):
    """Equal-size equal-sum proper sub-pair found; the witness was not
    produced at a minimal m."""


def balanced_identity_from_witness(w: SolutionWitness,
                                   bound: Optional[int] = None) -> BalancedIdentity:
    """Zero-pad the short side, sort both, and take coordinatewise differences.

    Demands primitivity, checked exhaustively for k <= 12: a proper sub-pair
    of equal size and equal sum would shrink to a smaller solution, so its
    presence means the witness did not come from a minimal m.  Also enforces
    k <= a + b <= bound (default: the witness's largest element); both hold
    whenever the witness is genuinely minimal.
    """
    if len(w.left) != len(w.right) + 1:
        raise ValueError("witness must have balanced shape (m+1 vs m)")
    p = tuple(sorted(w.left))
    q = tuple(sorted((0,) + w.right))
    k = len(p)
    if k > MAX_PRIMITIVITY_K:
        raise ResourceLimitError(f"primitivity check capped at k = {MAX_PRIMITIVITY_K}")
    for size in range(1, k):
        p_sums = {sum(c) for c in combinations(p, size)}
        q_sums = {sum(c) for c in combinations(q, size)}
        common = p_sums & q_sums
        if common:
            raise NotPrimitiveError(
                f"size-{size} sub-multisets share the sum {min(common)}")
    diffs = tuple(pi - qi for pi, qi in zip(p, q))
    assert sum(diffs) == 0
    identity = BalancedIdentity(p, q, diffs)
    limit = bound if bound is not None else max(w.support)
    spread = identity.max_positive + identity.max_negative
    if not k <= spread <= limit:
        raise RuntimeError(
            f"difference structure out of range: k={k}, a+b={spread}, bound={limit}")
    return identity


@dataclass(frozen=True)
class QuantitativeCheck:
    """Either a residue obstruction or the least-m solution below max(A)."""

    obstruction: Optional[ResidueObstruction]
    m: Optional[int]
    witness: Optional[SolutionWitness]

    @property
    def obstructed(self) -> bool:
        return self.obstruction is not None

    def to_json_dict(self) -> dict:
        return {
            "obstruction": self.obstruction.to_json_dict() if self.obstruction else None,
            "m": self.m,
            "witness": self.witness.to_json_dict() if self.witness else None,
        }


def quantitative_bound_check(values: Iterable[int]) -> QuantitativeCheck:
    """Exhibit a residue obstruction or a solution with m <= max(A) - 1.

    An unobstructed set must admit one; failing to find it would contradict
    the residue characterization and raises loudly.
    """
    vs = set(values)
    if not vs:
        raise ValueError("need a nonempty set")
    top = max(vs)
    if top > MAX_QUANTITATIVE_M:
        raise ResourceLimitError(f"exhaustive check capped at max element {MAX_QUANTITATIVE_M}")
    obstruction = residue_obstruction(vs)
    if obstruction is not None:
        return QuantitativeCheck(obstruction, None, None)
    if top == 1:
        raise AssertionError("the set {1} is obstructed; unreachable")
    hit = min_m(vs, top - 1)
    if hit is None:
        raise RuntimeError(
            "unobstructed set with no solution up to m = max - 1; "
            "residue characterization violated")
    return QuantitativeCheck(None, hit[0], hit[1])
