"""Command-line interface.

Exit codes: 0 every check passed, 1 a mathematical check failed,
2 invalid input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import HHVError, InvariantViolation
from .grid import DEFAULT_M_MAX, DEFAULT_P, build_grid
from .inequalities import (IneqId, applicable_corollaries, sharpness_probe, verify,
                           verify_31, verify_32, verify_corollaries, verify_yang13)
from .report import render
from .sequences import generate
from .weights import (HolderParams, bound_24, bound_25, check_negativity_chain,
                      check_weight_bounds, weight_omega, weight_omega_dual)
from .zeta import EmSettings, zeta_em

ZETA_COLUMNS = ["rho", "m", "l", "lo", "hi", "width"]
WEIGHT_COLUMNS = ["p", "q", "lambda", "m", "omega_lo", "omega_hi", "bound24", "margin24",
                  "omega_dual_lo", "omega_dual_hi", "bound25_sym", "margin25",
                  "bound25_literal", "margin25_literal"]
CHECK_COLUMNS = ["p", "q", "lambda", "m", "omega_lo", "omega_hi", "bound24", "margin24",
                 "bound25_sym", "margin25", "negativity_gap", "status"]
VERIFY_COLUMNS = ["inequality", "p", "q", "lambda", "a", "b", "n_max", "lhs", "rhs",
                  "rhs_baseline", "improvement", "holds"]
PROBE_COLUMNS = ["p", "q", "lambda", "eps", "n_terms", "ratio", "k_lambda", "gap"]
DEFAULT_SWEEP_SEQS = ["unit:8", "powerlaw:-0.5:64", "random:1:128", "random:2:256"]


class UsageError(HHVError):
    pass


def _emit(args, rows, columns):
    text = render(rows, columns, args.out, args.command)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_zeta(args) -> int:
    st = EmSettings(args.m, args.l)
    iv = zeta_em(args.rho, st)
    _emit(args, [{"rho": args.rho, "m": st.m, "l": st.l, "lo": iv.lo, "hi": iv.hi,
                  "width": iv.width}], ZETA_COLUMNS)
    return 0


def cmd_weight(args) -> int:
    params = HolderParams(args.p, args.lam)
    m = args.m
    om, od = weight_omega(m, params), weight_omega_dual(m, params)
    b24, b25, b25l = bound_24(m, params), bound_25(m, params), bound_25(m, params, literal=True)
    row = {"p": params.p, "q": params.q, "lambda": params.lam, "m": m,
           "omega_lo": om.lo, "omega_hi": om.hi, "bound24": b24, "margin24": b24 - om.hi,
           "omega_dual_lo": od.lo, "omega_dual_hi": od.hi,
           "bound25_sym": b25, "margin25": b25 - od.hi,
           "bound25_literal": b25l, "margin25_literal": b25l - od.hi}
    _emit(args, [row], WEIGHT_COLUMNS)
    return 0 if row["margin24"] > 0 and row["margin25"] > 0 else 1


def cmd_check_weights(args) -> int:
    grid, skipped = build_grid(args.p, args.lam)
    rows = []
    failed = False
    for params in grid:
        w24 = check_weight_bounds(params, args.m_max)
        w25 = check_weight_bounds(params, args.m_max, dual=True)
        chain = check_negativity_chain(params, args.m_max)
        for e24, e25, g in zip(w24, w25, chain):
            ok = e24.confirmed and e25.confirmed and g.ok
            failed |= not ok
            rows.append({"p": params.p, "q": params.q, "lambda": params.lam, "m": e24.m,
                         "omega_lo": e24.value.lo, "omega_hi": e24.value.hi,
                         "bound24": e24.bound, "margin24": e24.margin,
                         "bound25_sym": e25.bound, "margin25": e25.margin,
                         "negativity_gap": g.gap, "status": "ok" if ok else "violation"})
    for p, lam, reason in skipped:
        rows.append({"p": p, "lambda": lam, "status": f"skipped: {reason}"})
        print(f"skipped p={p:g} lambda={lam:g}: {reason}", file=sys.stderr)
    _emit(args, rows, CHECK_COLUMNS)
    if not grid:
        return 2
    return 1 if failed else 0


def _params_for(ineq: IneqId, args) -> HolderParams:
    params = HolderParams(args.p, args.lam)
    if ineq in (IneqId.I35, IneqId.I36, IneqId.I37, IneqId.I38) and ineq not in applicable_corollaries(params):
        need = "p = q = 2 and lambda = 1" if ineq in (IneqId.I37, IneqId.I38) else "lambda = 1"
        raise UsageError(f"inequality {ineq.value} requires {need}")
    return params


def cmd_verify(args) -> int:
    ineq = IneqId(args.ineq)
    params = _params_for(ineq, args)
    a = generate(args.a)
    b = generate(args.b if args.b else args.a)
    rep = verify(ineq, a, b, params, args.nmax)
    _emit(args, [rep.as_row()], VERIFY_COLUMNS)
    return 0 if rep.holds else 1


def cmd_sweep(args) -> int:
    grid, skipped = build_grid(args.p, args.lam)
    for p, lam, reason in skipped:
        print(f"skipped p={p:g} lambda={lam:g}: {reason}", file=sys.stderr)
    if not grid:
        return 2
    a_specs = args.a or DEFAULT_SWEEP_SEQS
    b_specs = args.b or a_specs
    if len(b_specs) != len(a_specs):
        raise UsageError("--a and --b must list the same number of sequences")
    pairs = [(generate(x), generate(y)) for x, y in zip(a_specs, b_specs)]
    reports = []
    for params in grid:
        for a, b in pairs:
            reports.append(verify_31(a, b, params))
            reports.append(verify_yang13(a, b, params))
            reports.append(verify_32(a, params, args.nmax))
            reports.extend(verify_corollaries(a, b, params, args.nmax))
    reports.sort(key=lambda r: (r.inequality_id.value, r.params.p, r.params.lam, r.a, r.b))
    _emit(args, [r.as_row() for r in reports], VERIFY_COLUMNS)
    return 0 if all(r.holds for r in reports) else 1


def cmd_probe(args) -> int:
    params = HolderParams(args.p, args.lam)
    rows = []
    for eps in args.eps:
        res = sharpness_probe(params, eps, args.n_terms)
        rows.append({"p": params.p, "q": params.q, "lambda": params.lam, "eps": eps,
                     "n_terms": args.n_terms, "ratio": res.ratio, "k_lambda": res.constant,
                     "gap": res.gap})
    _emit(args, rows, PROBE_COLUMNS)
    return 0 if all(r["gap"] > 0 for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=["csv", "json"], default="csv", help="report format")
    common.add_argument("--output", help="write the report here instead of stdout")

    def holder(sp, p=2.0, lam=1.0):
        sp.add_argument("--p", type=float, default=p, help=f"Hoelder exponent p (default {p:g})")
        sp.add_argument("--lambda", dest="lam", type=float, default=lam,
                        help=f"kernel exponent lambda (default {lam:g})")

    parser = argparse.ArgumentParser(prog="hhv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("zeta", parents=[common], help="bracket zeta(rho)")
    sp.add_argument("--rho", type=float, required=True)
    sp.add_argument("--m", type=int, default=16, help="split point")
    sp.add_argument("--l", type=int, default=8, help="remainder order")
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("weight", parents=[common], help="weight coefficients at one index")
    sp.add_argument("--m", type=int, required=True)
    holder(sp, lam=2.0)
    sp.set_defaults(func=cmd_weight)

    sp = sub.add_parser("check-weights", parents=[common],
                        help="check the weight bounds and the negativity chain over a grid")
    sp.add_argument("--p", type=float, nargs="+", default=list(DEFAULT_P))
    sp.add_argument("--lambda", dest="lam", type=float, nargs="+", default=None,
                    help="lambda values (default: admissible range in steps of 0.1)")
    sp.add_argument("--m-max", type=int, default=DEFAULT_M_MAX)
    sp.set_defaults(func=cmd_check_weights)

    sp = sub.add_parser("verify", parents=[common], help="verify one inequality")
    sp.add_argument("--ineq", required=True, choices=[i.value for i in IneqId])
    sp.add_argument("--a", default="unit:1", help="sequence spec (unit:N, powerlaw:t:N, random:seed:N, file:path)")
    sp.add_argument("--b", default=None, help="second sequence spec (default: same as --a)")
    holder(sp)
    sp.add_argument("--nmax", type=int, default=None, help="truncation of the outer sum in 3.2/3.4/3.6/3.8")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", parents=[common], help="verify every inequality over a grid")
    sp.add_argument("--p", type=float, nargs="+", default=list(DEFAULT_P))
    sp.add_argument("--lambda", dest="lam", type=float, nargs="+", default=None)
    sp.add_argument("--a", nargs="+", default=None)
    sp.add_argument("--b", nargs="+", default=None)
    sp.add_argument("--nmax", type=int, default=None)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("probe", parents=[common], help="sharpness probe toward k_lambda")
    holder(sp)
    sp.add_argument("--eps", type=float, nargs="+", default=[0.2, 0.1, 0.05])
    sp.add_argument("--n-terms", "--nmax", dest="n_terms", type=int, default=100_000)
    sp.set_defaults(func=cmd_probe)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"hhv: check failed: {exc}", file=sys.stderr)
        return 1
    except HHVError as exc:
        print(f"hhv: error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
