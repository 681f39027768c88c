"""Command-line entry point producing machine-readable reports.

Every report embeds the parsed configuration (reproducibility header)
and is byte-identical for identical config and seed.  Exit codes:
0 success, 2 verification failure (dimension mismatch against
--expect, failed cocycle checks, decomposition errors), 1 usage error.

Ladder rungs of `scan` may run in parallel processes; the integer
environment variable COCYCLE_ENGINE_THREADS caps the worker count
(default 1, serial).  Results are assembled in rung order either way.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import ModuleTag, algebra_by_name, check_jacobi
from .cochains import HomogeneousCochain
from .cohomology import (
    CohomologySetup,
    WindowConfig,
    cohomology_dim,
    crosscheck_sequences,
    default_source_window,
    scan_rung,
    stabilization_scan,
)
from .knowncocycles import GODBILLON_VEY, GODBILLON_VEY_HAT, verify_cocycle, verify_nontrivial
from .normalizer import (
    NotACocycle,
    ProfileViolation,
    RecursionGap,
    ResidualNonZero,
    decompose,
    symbolic_table,
    verify_final_relations,
)

USAGE_ERROR, VERIFICATION_FAILURE = 1, 2

MODULE_FLAGS = {
    "trivial": ModuleTag.TRIVIAL,
    "adjoint": ModuleTag.ADJOINT,
    "witt-quotient": ModuleTag.WITT_QUOTIENT,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; usage errors are 1 here
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, "%s: error: %s\n" % (self.prog, message))


def _parse_ladder(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("ladder must look like 4..10")
    lo, hi = int(lo), int(hi)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError("ladder bounds must satisfy 1 <= a <= b")
    return list(range(lo, hi + 1))


def _thread_cap() -> int:
    raw = os.environ.get("COCYCLE_ENGINE_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        raise SystemExit("COCYCLE_ENGINE_THREADS must be an integer, got %r" % raw)
    return max(1, cap)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cocycle-engine", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="recorded in the report header")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("dims", help="cohomology dimensions at one window pair")
    p.add_argument("--algebra", choices=("witt", "virasoro"), required=True)
    p.add_argument("--module", choices=tuple(MODULE_FLAGS), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--expect", type=int)
    common(p)

    p = sub.add_parser("scan", help="stabilization scan over a window ladder")
    p.add_argument("--algebra", choices=("witt", "virasoro"), required=True)
    p.add_argument("--module", choices=tuple(MODULE_FLAGS), required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--ladder", type=_parse_ladder, required=True, help="e.g. 4..10")
    p.add_argument("--expect", type=int)
    common(p)

    p = sub.add_parser("verify-gv", help="cocycle and nontriviality checks for the degree-three generator")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("decompose", help="split a 3-cocycle as lambda * Psi + d(phi)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--algebra", choices=("witt", "virasoro"), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("recursion-table", help="seed multiples forced by the level recursions")
    p.add_argument("--n", type=int, default=7)
    common(p)

    p = sub.add_parser("jacobi", help="Jacobi identity sweep over a generator window")
    p.add_argument("--algebra", choices=("witt", "virasoro"), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("crosscheck", help="exact-sequence dimension comparisons")
    p.add_argument("--ladder", type=_parse_ladder, required=True)
    common(p)

    return parser


def _config_dict(args: argparse.Namespace) -> dict:
    cfg = {}
    for k, v in sorted(vars(args).items()):
        if k in ("out",):
            continue
        cfg[k] = v
    return cfg


def _emit(args, payload: dict, csv_rows=None) -> None:
    if args.format == "csv":
        if csv_rows is None:
            raise SystemExit("--format csv is only available for dims and scan")
        text = "N,M,dimZ,dimB,dimH\n" + "".join(
            "%d,%d,%d,%d,%d\n" % (r["N"], r["M"], r["dimZ"], r["dimB"], r["dimH"]) for r in csv_rows
        )
    else:
        text = json.dumps({"config": _config_dict(args), **payload}, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _cmd_dims(args) -> int:
    alg = algebra_by_name(args.algebra)
    m = args.m if args.m is not None else default_source_window(args.n)
    setup = CohomologySetup(alg, MODULE_FLAGS[args.module], args.q, args.d, WindowConfig(args.n, m))
    row = cohomology_dim(setup)
    report = stabilization_scan(alg, setup.module, args.q, args.d, [(args.n, m)], rows=[row])
    payload = report.to_json_dict()
    _emit(args, payload, csv_rows=payload["ladder"])
    if args.expect is not None and row.dimH != args.expect:
        return VERIFICATION_FAILURE
    return 0


def _cmd_scan(args) -> int:
    alg = algebra_by_name(args.algebra)
    module = MODULE_FLAGS[args.module]
    pairs = [(n, default_source_window(n)) for n in args.ladder]
    cap = _thread_cap()
    if cap > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=min(cap, len(pairs))) as pool:
            rows = list(
                pool.map(
                    scan_rung,
                    [args.algebra] * len(pairs),
                    [module] * len(pairs),
                    [args.q] * len(pairs),
                    [args.d] * len(pairs),
                    [n for n, _ in pairs],
                    [m for _, m in pairs],
                )
            )
    else:
        rows = None
    report = stabilization_scan(alg, module, args.q, args.d, pairs, rows=rows)
    payload = report.to_json_dict()
    _emit(args, payload, csv_rows=payload["ladder"])
    if args.expect is not None and not (report.stabilized and report.stable_dim == args.expect):
        return VERIFICATION_FAILURE
    return 0


def _cmd_verify_gv(args) -> int:
    details = {}
    for named in (GODBILLON_VEY, GODBILLON_VEY_HAT):
        is_cocycle = verify_cocycle(named, args.n)
        verdict = verify_nontrivial(named, args.n)
        details[named.name] = {
            "cocycle": is_cocycle,
            "probe_value": str(verdict.probe_value),
            "in_windowed_image": verdict.in_windowed_image,
            "nontrivial": verdict.nontrivial,
            "checks_agree": verdict.checks_agree,
        }
    cocycle = all(d["cocycle"] for d in details.values())
    nontrivial = all(d["nontrivial"] and d["checks_agree"] for d in details.values())
    _emit(args, {"cocycle": cocycle, "nontrivial": nontrivial, "details": details})
    return 0 if (cocycle and nontrivial) else VERIFICATION_FAILURE


def _cmd_decompose(args) -> int:
    alg = algebra_by_name(args.algebra)
    with open(args.infile) as f:
        lines = f.readlines()
    psi = HomogeneousCochain.from_lines(alg, ModuleTag.TRIVIAL, 3, 0, lines)
    try:
        result = decompose(psi, args.n)
    except (NotACocycle, ResidualNonZero, RecursionGap, ProfileViolation) as exc:
        _emit(args, {"error": type(exc).__name__, "message": str(exc)})
        return VERIFICATION_FAILURE
    _emit(args, result.to_json_dict())
    return 0


def _frac_str(x: Fraction) -> str:
    return "%d/%d" % (x.numerator, x.denominator)


def _cmd_recursion_table(args) -> int:
    table = symbolic_table(args.n)
    relations = verify_final_relations(table)
    entries = [
        {"key": list(triple), "psi_mult": _frac_str(v.a), "c_mult": _frac_str(v.b)}
        for triple, v in sorted(table.psi.items())
    ]
    profile = [{"k": k, "factor": _frac_str(v.a)} for k, v in sorted(table.c.items())]
    payload = {
        "seeds": ["psi(-2,2,0)", "c(2,-2)"],
        "psi": entries,
        "c_profile": profile,
        "relations": {
            "relation1": list(relations.reduced1),
            "relation2": list(relations.reduced2),
            "forces_seeds_zero": relations.forces_seeds_zero,
        },
    }
    _emit(args, payload)
    return 0 if relations.forces_seeds_zero else VERIFICATION_FAILURE


def _cmd_jacobi(args) -> int:
    bad = check_jacobi(algebra_by_name(args.algebra), args.n)
    _emit(args, {"violations": [[str(g) for g in triple] for triple in bad]})
    return 0 if not bad else VERIFICATION_FAILURE


def _cmd_crosscheck(args) -> int:
    ladder = [(n, default_source_window(n)) for n in args.ladder]
    report = crosscheck_sequences(ladder)
    _emit(args, report)
    return 0 if report["all_equal"] else VERIFICATION_FAILURE


COMMANDS = {
    "dims": _cmd_dims,
    "scan": _cmd_scan,
    "verify-gv": _cmd_verify_gv,
    "decompose": _cmd_decompose,
    "recursion-table": _cmd_recursion_table,
    "jacobi": _cmd_jacobi,
    "crosscheck": _cmd_crosscheck,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SystemExit:
        raise
    except FileNotFoundError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_ERROR
    except (ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
