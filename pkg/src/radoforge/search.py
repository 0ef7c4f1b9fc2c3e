"""Exact forcing thresholds by pruned backtracking.

rado_number finds the least N such that every r-coloring of [1..N] puts a
solution of the given equation inside one color class; any_m_number does the
same for "some balanced equation".  Both walk integers 1..N in order,
assigning colors depth-first with canonical color introduction (color c may
appear only after 1..c-1 have), and prune a branch the moment a class stops
being extendable.  The first coloring reaching each new depth is recorded, so
results are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .eqcore import (
    ANY_M,
    Coloring,
    EquationSpec,
    residue_obstruction,
    sums_with_count,
)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a capped threshold search.

    value is the least forcing N, or None when an avoidance coloring of the
    full [1..cap] exists (cap exceeded); extremal certifies the reported
    bound either way.
    """

    value: Optional[int]
    cap: int
    extremal: Optional[Coloring]
    nodes: int
    millis: int

    @property
    def capped(self) -> bool:
        return self.value is None

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "cap": self.cap,
            "extremal": self.extremal.to_json_dict() if self.extremal else None,
            "nodes": self.nodes,
            "millis": self.millis,
        }


class _SchurState:
    """Per-class bitmasks with accumulated pair sums for x + y = z.

    Elements arrive in increasing order, so any solution created by a new
    element must use it as the sum z; the violation test is one bit probe
    of the class's pair-sum mask, and the update is two shifts.
    """

    def __init__(self, r: int):
        self._members = [0] * r
        self._pair_sums = [0] * r
        self._trail: list[tuple[int, int, int]] = []

    def try_add(self, color: int, x: int) -> bool:
        idx = color - 1
        if self._pair_sums[idx] >> x & 1:
            return False
        self._trail.append((idx, self._members[idx], self._pair_sums[idx]))
        self._pair_sums[idx] |= (self._members[idx] << x) | (1 << (2 * x))
        self._members[idx] |= 1 << x
        return True

    def undo(self) -> None:
        idx, members, pair_sums = self._trail.pop()
        self._members[idx] = members
        self._pair_sums[idx] = pair_sums


class _GeneralState:
    """Classes as plain sets; a new element is admitted when the extended
    class still has no (a vs b) solution.

    The class was solution-free before the element joined, so existence on
    the extension is exactly the forced-use check.
    """

    def __init__(self, r: int, a: int, b: int):
        self._classes: list[set[int]] = [set() for _ in range(r)]
        self._a, self._b = a, b
        self._trail: list[tuple[int, int]] = []

    def _solvable(self, cls: set[int], x: int) -> bool:
        ext = set(cls)
        ext.add(x)
        cap = min(self._a, self._b) * max(ext)  # a shared sum fits both sides
        return bool(sums_with_count(ext, self._a, cap)
                    & sums_with_count(ext, self._b, cap))

    def try_add(self, color: int, x: int) -> bool:
        cls = self._classes[color - 1]
        if self._solvable(cls, x):
            return False
        cls.add(x)
        self._trail.append((color - 1, x))
        return True

    def undo(self) -> None:
        idx, x = self._trail.pop()
        self._classes[idx].remove(x)


class _AnyMState:
    """Classes must keep a residue obstruction to stay avoidance-extendable."""

    def __init__(self, r: int):
        self._classes: list[set[int]] = [set() for _ in range(r)]
        self._trail: list[tuple[int, int]] = []

    def try_add(self, color: int, x: int) -> bool:
        cls = self._classes[color - 1]
        if residue_obstruction(cls | {x}) is None:
            return False
        cls.add(x)
        self._trail.append((color - 1, x))
        return True

    def undo(self) -> None:
        idx, x = self._trail.pop()
        self._classes[idx].remove(x)


def _state_for(spec: EquationSpec, r: int):
    if spec.kind == ANY_M:
        return _AnyMState(r)
    a, b = spec.sides()
    if (a, b) == (2, 1):
        return _SchurState(r)
    return _GeneralState(r, a, b)


def _dfs_extremal(r: int, cap: int, state) -> tuple[bool, int, tuple[int, ...], int]:
    """Depth-first scan over canonical colorings of 1..cap.

    Returns (reached_cap, best_depth, best_assignment, nodes).  Stops as soon
    as some branch colors all of [1..cap].
    """
    assignment: list[int] = []
    best_depth = 0
    best_assignment: tuple[int, ...] = ()
    nodes = 0

    def rec(x: int, used: int) -> bool:
        nonlocal best_depth, best_assignment, nodes
        if x - 1 > best_depth:
            best_depth = x - 1
            best_assignment = tuple(assignment)
        if x > cap:
            return True
        for c in range(1, min(used + 1, r) + 1):
            if state.try_add(c, x):
                nodes += 1
                assignment.append(c)
                if rec(x + 1, max(used, c)):
                    return True
                assignment.pop()
                state.undo()
        return False

    reached = rec(1, 0)
    return reached, best_depth, best_assignment, nodes


def _run(spec: EquationSpec, r: int, cap: int) -> SearchResult:
    if r < 1 or cap < 1:
        raise ValueError("r and cap must be positive")
    t0 = time.perf_counter()
    reached, depth, assignment, nodes = _dfs_extremal(r, cap, _state_for(spec, r))
    millis = int((time.perf_counter() - t0) * 1000)
    if reached:
        return SearchResult(None, cap, Coloring(cap, r, assignment), nodes, millis)
    extremal = Coloring(depth, r, assignment) if depth else None
    return SearchResult(depth + 1, cap, extremal, nodes, millis)


def rado_number(spec: EquationSpec, r: int, cap: int) -> SearchResult:
    """Least N <= cap forcing a one-class solution of `spec`, with an
    avoidance coloring of [N-1]; value None when [cap] is still avoidable."""
    if spec.kind == ANY_M:
        raise ValueError("use any_m_number for the any-m threshold")
    return _run(spec, r, cap)


def any_m_number(r: int, cap: int) -> SearchResult:
    """Least N <= cap forcing a one-class solution of some balanced equation.

    A class avoids every balanced equation exactly when it has a residue
    obstruction, so that is the per-node pruning test.
    """
    return _run(EquationSpec(ANY_M), r, cap)


def extremal_coloring(spec: EquationSpec, r: int, n: int) -> Optional[Coloring]:
    """First canonical avoidance r-coloring of [1..n], or None if none exists."""
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    reached, _, assignment, _ = _dfs_extremal(r, n, _state_for(spec, r))
    return Coloring(n, r, assignment) if reached else None


def nu2_coloring(r: int) -> Coloring:
    """Color [1..2^r - 1] by 1 + the 2-adic valuation.

    Each class lives in 2^(c-1) * (2Z + 1), a nonzero residue class mod 2^c,
    so no class solves any balanced equation; this certifies that the any-m
    threshold is at least 2^r.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = 2 ** r - 1
    return Coloring(n, r, tuple((i & -i).bit_length() for i in range(1, n + 1)))
