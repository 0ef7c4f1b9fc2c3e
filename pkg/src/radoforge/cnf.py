"""DIMACS CNF export of avoidance-coloring existence, plus a small DPLL solver.

Variables: v(i, c) = (i - 1) * r + c for integer i in [1..n] and color c in
[1..r].  Clauses: one at-least-one-color clause per integer, and for every
inclusion-minimal solution support S and every color c the blocking clause
OR_{i in S} not v(i, c).  No at-most-one clauses are needed: blocking
constrains each color independently, so picking any asserted color per
integer projects a model onto an avoidance coloring.  The formula is
satisfiable exactly when an avoidance coloring exists.
"""

from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .eqcore import (
    ANY_M,
    Coloring,
    EquationSpec,
    ResourceLimitError,
    format_spec,
    has_solution,
)

SUPPORT_SUBSET_LIMIT = 1 << 22


@dataclass(frozen=True)
class CnfProblem:
    spec: EquationSpec
    n: int
    r: int
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    supports: tuple[tuple[int, ...], ...]

    def var(self, i: int, c: int) -> int:
        return (i - 1) * self.r + c

    def var_meaning(self, v: int) -> tuple[int, int]:
        """(integer, color) encoded by variable v."""
        return (v - 1) // self.r + 1, (v - 1) % self.r + 1

    def to_dimacs(self) -> str:
        """Byte-stable DIMACS text: sorted clauses, metadata comment first."""
        lines = [
            f"c rado-forge spec={format_spec(self.spec)} n={self.n} r={self.r}",
            f"p cnf {self.num_vars} {len(self.clauses)}",
        ]
        lines += [" ".join(map(str, clause)) + " 0" for clause in self.clauses]
        return "\n".join(lines) + "\n"


def minimal_supports(spec: EquationSpec, n: int,
                     subset_limit: int = SUPPORT_SUBSET_LIMIT) -> list[tuple[int, ...]]:
    """Inclusion-minimal sets in [1..n] that force a solution of `spec`.

    Scans subsets by increasing size.  A set containing no smaller recorded
    support yet admitting a solution must be exactly that solution's support
    (a proper support inside it would already have been recorded), hence
    minimal.  Supports never exceed a + b distinct values.
    """
    a, b = spec.sides()
    found: list[set[int]] = []
    scanned = 0
    for size in range(1, min(n, a + b) + 1):
        for combo in combinations(range(1, n + 1), size):
            scanned += 1
            if scanned > subset_limit:
                raise ResourceLimitError(
                    f"support enumeration passed {subset_limit} subsets "
                    f"({len(found)} supports found so far)")
            s = set(combo)
            if any(f <= s for f in found):
                continue
            if has_solution(s, a, b):
                found.append(s)
    return [tuple(sorted(f)) for f in found]


def export_cnf(spec: EquationSpec, r: int, n: int,
               subset_limit: int = SUPPORT_SUBSET_LIMIT) -> CnfProblem:
    """Encode "an r-coloring of [1..n] avoiding `spec` exists" as CNF."""
    if spec.kind == ANY_M:
        raise ValueError("CNF export needs a fixed equation shape")
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    supports = minimal_supports(spec, n, subset_limit)
    clauses: list[tuple[int, ...]] = []
    for i in range(1, n + 1):
        clauses.append(tuple((i - 1) * r + c for c in range(1, r + 1)))
    for support in supports:
        for c in range(1, r + 1):
            clauses.append(tuple(sorted(-((i - 1) * r + c) for i in support)))
    return CnfProblem(
        spec=spec, n=n, r=r, num_vars=n * r,
        clauses=tuple(sorted(set(clauses))),
        supports=tuple(supports),
    )


def dpll(num_vars: int, clauses: Iterable[tuple[int, ...]]) -> Optional[set[int]]:
    """Satisfying assignment as the set of true variables, or None.

    Recursive DPLL with unit propagation; branches on the lowest variable of
    the first unresolved clause, trying true first.  Deterministic.
    """
    clause_list = [tuple(cl) for cl in clauses]

    def solve(assign: dict[int, bool]) -> Optional[dict[int, bool]]:
        while True:
            unit = None
            done = True
            for clause in clause_list:
                satisfied = False
                free: list[int] = []
                for lit in clause:
                    value = assign.get(abs(lit))
                    if value is None:
                        free.append(lit)
                    elif value == (lit > 0):
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not free:
                    return None  # conflict
                done = False
                if len(free) == 1:
                    unit = free[0]
                    break
            if unit is None:
                break
            assign[abs(unit)] = unit > 0
        if done:
            return assign
        branch = min(abs(lit) for clause in clause_list for lit in clause
                     if abs(lit) not in assign and not any(
                         assign.get(abs(l)) == (l > 0) for l in clause))
        for value in (True, False):
            trial = dict(assign)
            trial[branch] = value
            result = solve(trial)
            if result is not None:
                return result
        return None

    result = solve({})
    if result is None:
        return None
    return {v for v, value in result.items() if value}


def solve(problem: CnfProblem) -> Optional[set[int]]:
    """Run the built-in solver on an exported problem."""
    return dpll(problem.num_vars, problem.clauses)


def decode_model(problem: CnfProblem, true_vars: Iterable[int]) -> Coloring:
    """Project a model onto a coloring via the least asserted color per
    integer; rejects models that do not satisfy the formula."""
    tv = set(true_vars)
    for clause in problem.clauses:
        if not any((abs(lit) in tv) == (lit > 0) for lit in clause):
            raise ValueError(f"model does not satisfy clause {clause}")
    assignment = []
    for i in range(1, problem.n + 1):
        color = next(c for c in range(1, problem.r + 1) if problem.var(i, c) in tv)
        assignment.append(color)
    return Coloring(problem.n, problem.r, tuple(assignment))


def parse_solver_output(text: str) -> Optional[set[int]]:
    """Read a DIMACS solver's stdout: 's'/'v' competition lines, or the bare
    SAT/UNSAT first-token style with literals on following lines."""
    status = None
    literals: list[int] = []
    for line in text.splitlines():
        tokens = line.strip().split()
        if not tokens:
            continue
        if tokens[0] == "s":
            status = tokens[1].upper()
        elif tokens[0] == "v":
            literals += [int(t) for t in tokens[1:]]
        elif tokens[0].upper() in ("SAT", "SATISFIABLE", "UNSAT", "UNSATISFIABLE"):
            status = tokens[0].upper()
        elif status and status.startswith("SAT"):
            try:
                literals += [int(t) for t in tokens]
            except ValueError:
                pass
    if status is None:
        raise ValueError("no solver status line found")
    if status.startswith("UNSAT"):
        return None
    if not status.startswith("SAT"):
        raise ValueError(f"unrecognized solver status {status!r}")
    return {lit for lit in literals if lit > 0}


def run_external_solver(problem: CnfProblem, command: str) -> Optional[set[int]]:
    """Pipe the DIMACS text to `command` and parse its stdout.

    Solver exit codes are conventionally nonzero (10/20) and are ignored;
    only the printed status matters.
    """
    proc = subprocess.run(
        shlex.split(command), input=problem.to_dimacs(),
        capture_output=True, text=True, check=False)
    return parse_solver_output(proc.stdout)
