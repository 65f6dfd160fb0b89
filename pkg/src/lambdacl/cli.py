"""Command-line interface.

Exit statuses: 0 pass, 1 verification failure, 2 usage or parse error, 3 data validation error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import chartab
from .chartab import TableValidationError, abelian_char_table, load_table, table_to_json
from .classgroup import build_classgroup, ind_subgroup, reduce_matrix, sigma_on_cl
from .lambda_ops import (adams, adams_adjoint, exterior_power, power_pullback, sigma_difference_expansion,
                         symmetric_power)
from .lattice import AbGroup
from .local_cover import (check_chase_identity, check_different_identity, check_resolvent_structure,
                          resolvent_cokernel, setup_cover)
from .report import Check, build_report, encode, write_report
from .suites import ANCHOR_DIFF, SuiteConfig, expand_suites, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")] if text.strip() else []
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _matrix(text: str) -> list[list[int]]:
    # rows separated by ';'
    return [_ints(r, "--phi") for r in text.split(";")]


def _table(spec: str):
    try:
        return load_table(spec)
    except (OSError, json.JSONDecodeError) as exc:
        raise TableValidationError([f"cannot read table {spec!r}: {exc}"]) from None


def _char(table, text: str):
    coords = _ints(text, "--char")
    if len(coords) != table.rank:
        raise UsageError(f"--char needs {table.rank} coordinates for {table.name}, got {len(coords)}")
    return table.character(coords)


def _fmt(v) -> str:
    return ",".join(str(x) for x in v)


def _emit_report(args, checks, config, result=None) -> int:
    report = build_report(checks, config)
    if result is not None:
        report["result"] = encode(result)
    if args.report:
        write_report(report, args.report)
    return EXIT_OK if report["summary"]["failed"] == 0 else EXIT_FAIL


# --- commands ---------------------------------------------------------------------------

def cmd_chartab(args) -> int:
    if args.action == "gen":
        inv = _ints(args.abelian, "--abelian")
        if any(n < 1 for n in inv):
            raise UsageError("--abelian needs positive orders")
        table = chartab.validate_char_table(table_to_json(abelian_char_table(inv)))
        data = table_to_json(table)
        text = json.dumps(data)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        print(text)
    else:
        try:
            with open(args.file) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise TableValidationError([f"cannot read {args.file}: {exc}"]) from None
        table = chartab.validate_char_table(data)
        print(f"valid: {table.name} (order {table.order}, {table.nclasses} classes)")
    return _emit_report(args, [], {"command": "chartab", "action": args.action},
                        {"table": table.name, "order": table.order})


def cmd_ops(args) -> int:
    table = _table(args.table)
    x = _char(table, args.char)
    k = args.k
    if args.op == "adams":
        y = adams(k, x)
    elif args.op == "sigma":
        y = symmetric_power(k, x)
    elif args.op == "lambda":
        y = exterior_power(k, x)
    elif args.op == "adjoint":
        y = adams_adjoint(k, x)
    elif args.op == "pullback":
        y = power_pullback(k, x)
    else:
        if args.other is None:
            raise UsageError("ops diff needs --other")
        y = _char(table, args.other)
        d = sigma_difference_expansion(k, x, y)
        print(f"lhs {_fmt(d.lhs.coords)}")
        print(f"rhs {_fmt(d.rhs.coords)}")
        print("equal" if d.equal else "DIFFERENT")
        check = Check(f"ops/diff/{table.name}/i={k}", ANCHOR_DIFF,
                      {"table": table.name, "i": k, "x": list(x.coords), "y": list(y.coords)},
                      list(d.rhs.coords), list(d.lhs.coords))
        return _emit_report(args, [check], {"command": "ops", "op": "diff", "k": k, "table": table.name})
    print(_fmt(y.coords))
    return _emit_report(args, [], {"command": "ops", "op": args.op, "k": k, "table": table.name,
                                   "char": list(x.coords)}, {"coords": list(y.coords)})


def cmd_classgroup(args) -> int:
    table = _table(args.table)
    try:
        C = AbGroup.parse(args.clgroup)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    phi = _matrix(args.phi) if args.phi else None
    model = build_classgroup(table, args.q, C, phi)
    H = model.H
    print(f"H = {H if H.ngens else '0'}  (invariants {_fmt(H.invariants) or '1'})")
    result = {"H": list(H.orders), "invariants": list(H.invariants)}
    for i, F in enumerate(model.generator_matrices()):
        print(f"  gen {i}: " + " | ".join(_fmt(F[r][a] for r in range(C.ngens)) for a in range(table.rank)))
    if args.sigma_k is not None:
        sig = reduce_matrix(H, sigma_on_cl(args.sigma_k, model)) if H.ngens else []
        print(f"sigma^{args.sigma_k} on H:")
        for row in sig:
            print("  " + " ".join(f"{v:>3}" for v in row))
        result["sigma"] = sig
    if args.ind:
        ind = ind_subgroup(model)
        print(f"Ind generators: {[list(g) for g in ind.generators]}")
        print(f"H / Ind = {ind.quotient.group if ind.quotient.group.ngens else '0'}")
        result["quotient"] = list(ind.quotient.group.orders)
    return _emit_report(args, [], {"command": "classgroup", "table": table.name, "q": args.q,
                                   "C": args.clgroup, "sigma_k": args.sigma_k}, result)


def cmd_cover(args) -> int:
    cover = setup_cover(args.q, args.e, args.zeta)
    res = resolvent_cokernel(cover, args.j)
    print(f"cover q={cover.q} e={cover.e} zeta={cover.zeta}")
    print(f"v_s(det) = {res.det_valuation}, cokernel dim = {res.cokernel_dim}")
    print(f"resolvent class  {_fmt(res.torsion_class.multiplicities)}")
    checks = check_resolvent_structure(cover, args.j, res).checks
    if args.check in ("chase", "both"):
        c = check_chase_identity(cover, args.j, res).checks
        print(f"chase sum        {_fmt(c[0].expected)}  {'PASS' if c[0].passed else 'FAIL'}")
        checks += c
    if args.check in ("different", "both"):
        if args.j > 0:
            print("different check skipped: needs j <= 0")
        else:
            c = check_different_identity(cover, args.j, res).checks
            print(f"different sum    {_fmt(c[0].inputs['rhs'])}  (mod r_G) {'PASS' if c[0].passed else 'FAIL'}")
            checks += c
    return _emit_report(args, checks, {"command": "cover", "q": args.q, "e": args.e, "j": args.j,
                                       "check": args.check},
                        {"class": list(res.torsion_class.multiplicities), "det_valuation": res.det_valuation})


def cmd_verify(args) -> int:
    config = SuiteConfig(suites=expand_suites(args.suite), seed=args.seed, corrupt_expected=args.corrupt_expected)
    t0 = time.perf_counter()
    checks = run_suites(config)
    report = build_report(checks, config.echo())
    report["total_seconds"] = round(time.perf_counter() - t0, 3)
    if args.report:
        write_report(report, args.report)
    s = report["summary"]
    for rec in report["records"]:
        if not rec["pass"]:
            print(f"FAIL {rec['id']}: expected {rec['expected']} actual {rec['actual']}")
    print(f"{s['passed']}/{s['total']} checks passed")
    return EXIT_OK if s["failed"] == 0 else EXIT_FAIL


# --- parser ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lambdacl", description="Character-ring lambda operations, classgroup models "
                                             "and tame local cover checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_report(sp):
        sp.add_argument("--report", metavar="PATH", help="write a JSON report")
        return sp

    ct = sub.add_parser("chartab", help="generate or validate character tables")
    cts = ct.add_subparsers(dest="action", required=True, parser_class=_Parser)
    g = with_report(cts.add_parser("gen", help="character table of an abelian group"))
    g.add_argument("--abelian", required=True, metavar="N1,N2,...")
    g.add_argument("--out", metavar="PATH")
    v = with_report(cts.add_parser("validate", help="validate a table JSON file"))
    v.add_argument("file")

    ops = sub.add_parser("ops", help="evaluate an operation on a virtual character")
    opss = ops.add_subparsers(dest="op", required=True, parser_class=_Parser)
    for name in ("adams", "sigma", "lambda", "adjoint", "pullback", "diff"):
        o = with_report(opss.add_parser(name))
        o.add_argument("-k", type=int, required=True)
        o.add_argument("--table", required=True)
        o.add_argument("--char", required=True, metavar="C1,C2,...")
        if name == "diff":
            o.add_argument("--other", metavar="C1,C2,...", help="the subtracted character y")

    cg = with_report(sub.add_parser("classgroup", help="Hom-description classgroup model"))
    cg.add_argument("--table", required=True)
    cg.add_argument("--clgroup", required=True, metavar="N1,N2,...", help="C as orders, 0 for Z")
    cg.add_argument("--q", type=int, default=1)
    cg.add_argument("--phi", metavar="ROWS", help="endomorphism of C, rows separated by ';'")
    cg.add_argument("--sigma-k", type=int)
    cg.add_argument("--ind", action="store_true", help="also print the induced subgroup quotient")

    cv = with_report(sub.add_parser("cover", help="tame local cover resolvent class"))
    cv.add_argument("--q", type=int, required=True)
    cv.add_argument("--e", type=int, required=True)
    cv.add_argument("--j", type=int, default=0)
    cv.add_argument("--zeta", type=int)
    cv.add_argument("--check", choices=("chase", "different", "both"), default="both")

    vf = with_report(sub.add_parser("verify", help="run verification suites"))
    vf.add_argument("--suite", action="append", default=None,
                    help="suite name or 'all'; repeatable")
    vf.add_argument("--seed", type=int, default=0)
    vf.add_argument("--corrupt-expected", action="store_true",
                    help="test mode: perturb one expected value per suite")
    return p


COMMANDS = {"chartab": cmd_chartab, "ops": cmd_ops, "classgroup": cmd_classgroup,
            "cover": cmd_cover, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify" and args.suite is None:
            args.suite = []
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TableValidationError as exc:
        print("table validation failed:", file=sys.stderr)
        for e in exc.errors:
            print(f"  - {e}", file=sys.stderr)
        return EXIT_DATA
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
