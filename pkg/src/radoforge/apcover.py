"""Finite families of arithmetic progressions and coverage checks.

Whole-line coverage is periodic with period lcm(moduli), so one sieved window
decides it exactly.  The instance checker pits interval coverage of [1..2^k]
against line coverage: k progressions covering [1..2^k] always cover all of
Z, so the combination (interval covered, line uncovered) can only mean an
implementation bug, and is reported as a contradiction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional

from .eqcore import Coloring, ResourceLimitError, residue_obstruction

MAX_CVE_K = 20


@dataclass(frozen=True)
class APFamily:
    """Progressions d*Z + rem as (modulus, remainder) pairs, remainders reduced."""

    progressions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        normalized = []
        for d, rem in self.progressions:
            if d < 1:
                raise ValueError("modulus must be >= 1")
            normalized.append((d, rem % d))
        object.__setattr__(self, "progressions", tuple(normalized))

    def __len__(self) -> int:
        return len(self.progressions)

    def contains(self, x: int) -> bool:
        return any(x % d == rem for d, rem in self.progressions)

    def moduli_lcm(self) -> int:
        return lcm(*(d for d, _ in self.progressions)) if self.progressions else 1

    def to_json_list(self) -> list:
        return [[d, rem] for d, rem in self.progressions]

    @classmethod
    def from_json_list(cls, data: Iterable) -> "APFamily":
        return cls(tuple((int(d), int(rem)) for d, rem in data))


@dataclass(frozen=True)
class IntervalCoverage:
    covered: bool
    uncovered: tuple[int, ...]


def covers_interval(family: APFamily, lo: int, hi: int) -> IntervalCoverage:
    """Whether every integer in [lo, hi] lies in some progression, with the
    full list of uncovered points otherwise."""
    if lo > hi:
        raise ValueError("need lo <= hi")
    uncovered = tuple(x for x in range(lo, hi + 1) if not family.contains(x))
    return IntervalCoverage(not uncovered, uncovered)


def covers_all_integers(family: APFamily) -> bool:
    """Exact line coverage via one sieved window of residues 0..lcm-1.

    The window starts at 0 so a family of nonzero-remainder progressions
    shows its hole immediately.  Empty families cover nothing.
    """
    if not family.progressions:
        return False
    period = family.moduli_lcm()
    window = bytearray(period)
    for d, rem in family.progressions:
        window[rem::d] = b"\x01" * len(range(rem, period, d))
    return 0 not in window


class CoveringContradiction(RuntimeError):
    """[1..2^k] covered but the line is not; impossible, hence a bug."""


@dataclass(frozen=True)
class CveVerdict:
    k: int
    interval_covered: bool
    uncovered: tuple[int, ...]
    covers_integers: bool
    classification: str  # "confirmed" | "vacuous"

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "interval": [1, 2 ** self.k],
            "interval_covered": self.interval_covered,
            "uncovered": list(self.uncovered),
            "covers_integers": self.covers_integers,
            "classification": self.classification,
        }


def cve_instance_check(family: APFamily) -> CveVerdict:
    """Classify one family: vacuous (interval [1..2^k] not covered) or
    confirmed (interval and line both covered)."""
    k = len(family)
    if k > MAX_CVE_K:
        raise ResourceLimitError(f"interval 2^k out of reach past k = {MAX_CVE_K}")
    interval = covers_interval(family, 1, 2 ** k)
    line = covers_all_integers(family)
    if interval.covered and not line:
        raise CoveringContradiction(
            f"family {family.to_json_list()} covers [1..2^{k}] but not the whole line")
    return CveVerdict(k, interval.covered, interval.uncovered, line,
                      "confirmed" if interval.covered else "vacuous")


def coloring_to_apfamily(coloring: Coloring) -> Optional[APFamily]:
    """One obstruction progression per color class, or None when some class
    has no residue obstruction.

    When it exists, the family covers [1..n] by construction, yet every
    remainder is nonzero, so 0 stays uncovered and the family can never
    cover the whole line.
    """
    progressions = []
    for c in range(1, coloring.colors + 1):
        obstruction = residue_obstruction(coloring.class_of(c))
        if obstruction is None:
            return None
        progressions.append((obstruction.modulus, obstruction.remainder))
    return APFamily(tuple(progressions))


def random_family(rng: random.Random, max_len: int = 4, max_modulus: int = 12) -> APFamily:
    k = rng.randint(1, max_len)
    progressions = []
    for _ in range(k):
        d = rng.randint(1, max_modulus)
        progressions.append((d, rng.randint(0, d - 1)))
    return APFamily(tuple(progressions))


def cve_random_harness(trials: int, seed: int = 0,
                       max_len: int = 4, max_modulus: int = 12) -> dict:
    """Run seeded random instances and tally classifications.

    Each trial derives its own generator from the root seed, so trials can
    be distributed or re-run individually without changing outcomes.  Any
    contradiction propagates as an exception.
    """
    counts = {"confirmed": 0, "vacuous": 0}
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        verdict = cve_instance_check(random_family(rng, max_len, max_modulus))
        counts[verdict.classification] += 1
    return counts
