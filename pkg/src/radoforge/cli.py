"""Command-line workbench.

Subcommands: compute (forcing thresholds), verify (coloring files against an
equation spec), bounds (exact/decimal closed forms), construct (certificate
colorings), export-cnf (DIMACS, optional solving), zerosum reorder, and
apcover check/harness.  Output is JSON on stdout, or plain text tables with
--pretty.  Exit codes: 0 ok, 1 verified violation, 2 usage error, 3 resource
limit refused.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .apcover import (
    APFamily,
    CoveringContradiction,
    cve_instance_check,
    cve_random_harness,
)
from .bounds import bound_report, forced_m_statement, odd_cycle_ramsey_cap
from .cnf import decode_model, export_cnf, run_external_solver, solve
from .eqcore import (
    Coloring,
    ResourceLimitError,
    balanced,
    check_coloring,
    general,
    parse_spec,
)
from .search import any_m_number, nu2_coloring, rado_number
from .zerosum import is_minimal_zero_sum, lambert_reorder

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_compute_rado(args) -> tuple[dict, int]:
    spec = balanced(args.b) if args.a == args.b + 1 else general(args.a, args.b)
    result = rado_number(spec, args.colors, args.cap)
    return result.to_json_dict(), EXIT_OK


def _cmd_compute_any_m(args) -> tuple[dict, int]:
    return any_m_number(args.colors, args.cap).to_json_dict(), EXIT_OK


def _cmd_verify(args) -> tuple[dict, int]:
    coloring = Coloring.from_json_dict(_load_json(args.coloring))
    spec = parse_spec(args.spec)
    witness = check_coloring(coloring, spec)
    if witness is None:
        return {"verdict": "avoids", "n": coloring.n, "colors": coloring.colors}, EXIT_OK
    return {"verdict": "violates", "witness": witness.to_json_dict()}, EXIT_VIOLATION


def _cmd_bounds(args) -> tuple[dict, int]:
    if args.m is not None:
        report = bound_report(args.colors, m=args.m)
    elif args.a is not None and args.b is not None:
        report = bound_report(args.colors, a=args.a, b=args.b)
    else:
        raise ValueError("give --m or both --a and --b")
    if args.odd_cycle_ell is not None and args.odd_cycle_q is not None:
        report["entries"].append({
            "name": "odd_cycle_ramsey_cap",
            "kind": "exact",
            "value": odd_cycle_ramsey_cap(args.odd_cycle_ell, args.odd_cycle_q),
        })
    if args.m0_base is not None:
        statement = forced_m_statement(args.colors, args.m0_base)
        report["entries"].append({
            "name": "forced_m_threshold", "kind": "decimal",
            "value": statement.threshold, "rounding": "nearest",
            "statement": statement.describe(),
        })
    return report, EXIT_OK


def _cmd_construct_nu2(args) -> tuple[dict, int]:
    coloring = nu2_coloring(args.colors)
    payload = coloring.to_json_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    return payload, EXIT_OK


def _cmd_export_cnf(args) -> tuple[dict, int]:
    spec = parse_spec(args.spec)
    problem = export_cnf(spec, args.colors, args.n, subset_limit=args.max_subsets)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(problem.to_dimacs())
    payload = {
        "out": args.out,
        "vars": problem.num_vars,
        "clauses": len(problem.clauses),
        "supports": len(problem.supports),
    }
    if args.solve or args.external_solver:
        if args.external_solver:
            model = run_external_solver(problem, args.external_solver)
        else:
            model = solve(problem)
        payload["satisfiable"] = model is not None
        if model is not None:
            payload["coloring"] = decode_model(problem, model).to_json_dict()
    return payload, EXIT_OK


def _cmd_zerosum_reorder(args) -> tuple[dict, int]:
    try:
        terms = [int(t) for t in args.seq.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"cannot parse integer sequence {args.seq!r}")
    result = lambert_reorder(terms)
    return {
        "order": list(result.order),
        "partial_sums": list(result.partial_sums),
        "minimal": is_minimal_zero_sum(terms),
    }, EXIT_OK


def _cmd_apcover_check(args) -> tuple[dict, int]:
    family = APFamily.from_json_list(_load_json(args.family))
    verdict = cve_instance_check(family)
    return verdict.to_json_dict(), EXIT_OK


def _cmd_apcover_harness(args) -> tuple[dict, int]:
    counts = cve_random_harness(args.trials, seed=args.seed,
                                max_len=args.k_max, max_modulus=args.d_max)
    payload = {"trials": args.trials, "seed": args.seed, "contradictions": 0}
    payload.update(counts)
    return payload, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rado-forge",
        description="exact workbench for sum-equation colorings")
    parser.add_argument("--pretty", action="store_true",
                        help="plain-text output instead of JSON")
    # the flag is repeated on every leaf so it works on either side of the
    # subcommand; SUPPRESS keeps the leaf default from clobbering the root one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="plain-text output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="forcing thresholds by exact search")
    compute_sub = compute.add_subparsers(dest="what", required=True)
    rado = compute_sub.add_parser("rado", parents=[common],
                                  help="least forcing N for a fixed (a vs b) equation")
    rado.add_argument("--a", type=int, required=True)
    rado.add_argument("--b", type=int, required=True)
    rado.add_argument("--colors", type=int, required=True)
    rado.add_argument("--cap", type=int, required=True)
    rado.add_argument("--threads", type=int, default=1,
                      help="accepted for interface parity; the search runs sequentially")
    rado.set_defaults(handler=_cmd_compute_rado)
    anym = compute_sub.add_parser("any-m", parents=[common], help="least N forcing some balanced equation")
    anym.add_argument("--colors", type=int, required=True)
    anym.add_argument("--cap", type=int, required=True)
    anym.add_argument("--threads", type=int, default=1,
                      help="accepted for interface parity; the search runs sequentially")
    anym.set_defaults(handler=_cmd_compute_any_m)

    verify = sub.add_parser("verify", parents=[common], help="check a coloring file against a spec")
    verify.add_argument("--coloring", required=True, help="coloring JSON file")
    verify.add_argument("--spec", required=True, help="any-m, balanced:M, or general:A:B")
    verify.set_defaults(handler=_cmd_verify)

    bounds = sub.add_parser("bounds", parents=[common], help="closed-form bound values")
    bounds.add_argument("--m", type=int)
    bounds.add_argument("--a", type=int)
    bounds.add_argument("--b", type=int)
    bounds.add_argument("--colors", type=int, required=True)
    bounds.add_argument("--odd-cycle-ell", type=int, dest="odd_cycle_ell")
    bounds.add_argument("--odd-cycle-q", type=int, dest="odd_cycle_q")
    bounds.add_argument("--m0-base", dest="m0_base",
                        help="interval base for the forced-m threshold (decimal string)")
    bounds.set_defaults(handler=_cmd_bounds)

    construct = sub.add_parser("construct", help="certificate colorings")
    construct_sub = construct.add_subparsers(dest="what", required=True)
    nu2 = construct_sub.add_parser("nu2", parents=[common], help="dyadic-valuation coloring of [2^r - 1]")
    nu2.add_argument("--colors", type=int, required=True)
    nu2.add_argument("--out", help="also write the coloring JSON to this file")
    nu2.set_defaults(handler=_cmd_construct_nu2)

    cnf = sub.add_parser("export-cnf", parents=[common], help="DIMACS encoding of avoidance existence")
    cnf.add_argument("--spec", required=True, help="balanced:M or general:A:B")
    cnf.add_argument("--colors", type=int, required=True)
    cnf.add_argument("--n", type=int, required=True)
    cnf.add_argument("--out", required=True)
    cnf.add_argument("--solve", action="store_true", help="run the built-in DPLL solver")
    cnf.add_argument("--external-solver", dest="external_solver",
                     help="pipe the DIMACS text to this command and parse its output")
    cnf.add_argument("--max-subsets", dest="max_subsets", type=int, default=1 << 22,
                     help="cap on subsets scanned during support enumeration")
    cnf.set_defaults(handler=_cmd_export_cnf)

    zerosum = sub.add_parser("zerosum", help="zero-sum sequence tools")
    zerosum_sub = zerosum.add_subparsers(dest="what", required=True)
    reorder = zerosum_sub.add_parser("reorder", parents=[common], help="greedy partial-sum reorder")
    reorder.add_argument("--seq", required=True,
                         help="comma- or space-separated integers, e.g. 3,-2,3,-2,-2")
    reorder.set_defaults(handler=_cmd_zerosum_reorder)

    apcover = sub.add_parser("apcover", help="arithmetic-progression covers")
    apcover_sub = apcover.add_subparsers(dest="what", required=True)
    check = apcover_sub.add_parser("check", parents=[common], help="classify one family from a JSON file")
    check.add_argument("--family", required=True, help="JSON file: [[modulus, remainder], ...]")
    check.set_defaults(handler=_cmd_apcover_check)
    harness = apcover_sub.add_parser("harness", parents=[common], help="seeded random instance sweep")
    harness.add_argument("--trials", type=int, required=True)
    harness.add_argument("--seed", type=int, default=0)
    harness.add_argument("--k-max", dest="k_max", type=int, default=4)
    harness.add_argument("--d-max", dest="d_max", type=int, default=12)
    harness.set_defaults(handler=_cmd_apcover_harness)

    return parser


def _render_pretty(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "entries" and isinstance(value, list):
            lines.append("entries:")
            width = max(len(e["name"]) for e in value)
            for entry in value:
                suffix = f"  (rounded {entry['rounding']})" if "rounding" in entry else ""
                lines.append(f"  {entry['name']:<{width}}  {entry['value']}{suffix}")
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines += [f"  {k}: {v}" for k, v in value.items()]
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return int(exc.code or 0)
    try:
        payload, code = args.handler(args)
    except ResourceLimitError as exc:
        print(json.dumps({"error": str(exc), "kind": "resource-limit"}), file=sys.stderr)
        return EXIT_RESOURCE
    except CoveringContradiction as exc:
        print(json.dumps({"error": str(exc), "kind": "contradiction"}), file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    print(_render_pretty(payload) if args.pretty else json.dumps(payload))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
