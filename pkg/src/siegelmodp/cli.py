"""Command-line front end.

Subcommands::

    theta --op scalar|big|t1|t2|t3 [--iterations M] IN -o OUT
    hecke --ell L --power I --targets FILE [--assume-complete] IN -o OUT
    hecke eigen --ell L --power I IN
    cycle --scalar|--vector --p P --k K
          [--semi-ordinary|--non-semi-ordinary] [--branch B]
    strata order --phi A,B [--variant 1|2] --p P [--cutoff K]
    strata tables
    charpoly --ell L --lam1 X --lam2 Y --chi2 Z --k1 A --k2 B --p P
    plan --k1 A --k2 B --p P
    check --suite NAME --p LIST

Exit codes: 0 success, 1 domain error (the module's message, verbatim, on
stderr), 2 usage error.  JSON is the only structured output format; form
files use the SMF1 text format.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import cycles, galois, hecke, qexp, strata, theta
from .qexp import QExpError


class CliError(ValueError):
    pass


_DOMAIN_ERRORS = (CliError, QExpError, hecke.HeckeError,
                  theta.ThetaError, cycles.CycleError, strata.StrataError,
                  galois.GaloisError, ValueError, OSError)


def _read_form(path: str) -> qexp.QExpansion:
    with open(path, "r", encoding="utf-8") as fh:
        return qexp.parse(fh.read())


def _write_form(F: qexp.QExpansion, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(qexp.serialize(F))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_theta(args) -> int:
    F = _read_form(args.input)
    m = args.iterations
    if args.op == "scalar":
        G = F
        for _ in range(m):
            G = theta.theta_scalar(G)
    elif args.op == "big":
        G = theta.big_theta(F, m)
    else:
        j = {"t1": 1, "t2": 2, "t3": 3}[args.op]
        G = F
        for _ in range(m):
            G = theta.theta_j(G, j)
    _write_form(G, args.output)
    return 0


def _read_targets(path: str):
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            a, b, c = (int(x) for x in line.split())
            out.append((a, b, c))
    return out


def _cmd_hecke(args) -> int:
    F = _read_form(args.input)
    targets = _read_targets(args.targets)
    support = {}
    for T in targets:
        vec = hecke.hecke_coefficient(F, args.ell, args.power, T,
                                      assume_complete=args.assume_complete)
        if any(vec.coords):
            support[T] = vec.coords
    G = dataclasses.replace(F, support=support)
    _write_form(G, args.output)
    return 0


def _cmd_hecke_eigen(args) -> int:
    F = _read_form(args.input)
    lam, report = hecke.eigenvalue(F, args.ell, args.power,
                                   assume_complete=args.assume_complete)
    _emit({"lambda": lam, "ell": args.ell, "power": args.power,
           "report": [{"index": list(T), "matches": ok}
                      for T, ok in report]})
    return 0


def _cmd_cycle(args) -> int:
    if args.semi_ordinary == args.non_semi_ordinary:
        raise CliError("choose exactly one of --semi-ordinary / "
                       "--non-semi-ordinary")
    semi = args.semi_ordinary
    if args.vector:
        rep = cycles.predict_vector_cycle(args.p, args.k, semi)
    else:
        rep = cycles.predict_scalar_cycle(args.p, args.k, semi,
                                          branch=args.branch)
    _emit(rep.to_json())
    return 0


def _cmd_strata_order(args) -> int:
    phi = tuple(int(x) for x in args.phi.split(","))
    if len(phi) != 2:
        raise CliError("--phi expects two comma-separated integers")
    variant = args.variant if phi == (1, 1) else None
    order = strata.partial_hasse_order(phi, args.p, variant=variant,
                                       K=args.cutoff)
    formula, fn = strata.ORDER_FORMULA[(phi, variant)]
    _emit({"phi": list(phi), "variant": variant, "p": args.p,
           "order": order, "expected": formula,
           "match": order == fn(args.p)})
    return 0


def _cmd_strata_tables(args) -> int:
    out = {}
    for phi, rec in strata.eo_tables().items():
        ct = rec.canonical
        out[f"{phi[0]},{phi[1]}"] = {
            "f": rec.elementary.f, "a": rec.elementary.a,
            "psi": list(rec.final.psi),
            "s": ct.s, "r": ct.r, "rho": list(ct.rho), "v": list(ct.v),
            "fmap": list(ct.f), "pi": list(ct.pi), "n": ct.n,
        }
    _emit(out)
    return 0


def _cmd_charpoly(args) -> int:
    fp = galois.frob_charpoly(args.lam1, args.lam2, args.chi2, args.ell,
                              (args.k1, args.k2), args.p)
    _emit(fp.to_json())
    return 0


def _cmd_plan(args) -> int:
    plan = galois.reduction_plan((args.k1, args.k2), args.p)
    _emit(plan.to_json())
    return 0


# ---------------------------------------------------------------------------
# invariant suites
# ---------------------------------------------------------------------------

def _suite_pieri(p: int) -> dict:
    import random
    from .rep import (RepVector, Weight, pieri_reassemble, pieri_split,
                      rep_apply)
    rng = random.Random(p)
    checked = 0
    for n in range(0, p - 2):
        x = {(i, t): rng.randrange(p) for i in range(n + 1) for t in range(3)}
        split = pieri_split(n, p, x)
        dims = sum(c.coords and len(c.coords) or 0
                   for c in (split.x0, split.x1, split.x2) if c is not None)
        if n <= p - 4 and dims != 3 * (n + 1):
            return {"ok": False, "detail": f"dimension failure at n={n}"}
        back = pieri_reassemble(split, n, p)
        if back != {k: v % p for k, v in x.items() if v % p}:
            return {"ok": False, "detail": f"round-trip failure at n={n}"}
        checked += 1
    return {"ok": True, "checked": checked}


def _suite_theta(p: int) -> dict:
    import random
    from .qexp import QExpansion
    from .rep import Weight
    rng = random.Random(p)
    N = 4 if p != 2 else 3
    while N % p == 0:
        N += 1
    for trial in range(10):
        support = {}
        for _ in range(4):
            a, c = rng.randrange(4), rng.randrange(4)
            bmax = int((4 * a * c) ** 0.5)
            b = rng.randrange(-bmax, bmax + 1) if bmax else 0
            support[(a, b, c)] = (rng.randrange(p),)
        k = rng.randrange(2, 9)
        F = QExpansion(p=p, N=N, weight=Weight(k, k), support=support)
        lhs = theta.big_theta(F, 1)
        rhs = theta.big_theta_composite(F)
        if lhs.support != rhs.support:
            return {"ok": False, "detail": f"composite mismatch, trial {trial}"}
    return {"ok": True, "checked": 10}


def _suite_hecke(p: int) -> dict:
    for ell in (2, 3):
        for k in range(2, 9):
            want = hecke.constant_term_multiplier(ell, k, p)
            got = _hecke_constant_term(p, ell, k)
            if want != got:
                return {"ok": False,
                        "detail": f"constant term ell={ell} k={k}"}
    return {"ok": True, "checked": 14}


def _hecke_constant_term(p: int, ell: int, k: int) -> int:
    from .qexp import QExpansion
    from .rep import Weight
    N = 3 if ell != 3 else 4
    F = QExpansion(p=p, N=N, weight=Weight(k, k), support={(0, 0, 0): (1,)})
    vec = hecke.hecke_coefficient(F, ell, 1, (0, 0, 0), assume_complete=True)
    return vec.coords[0]


def _suite_cycles(p: int) -> dict:
    count = 0
    for k in range(2, 2 * p + 2):
        rep = cycles.predict_scalar_cycle(p, k, False)
        res = cycles.analyze_cycle(rep.entries, p, "scalar", start_weight=k)
        if not res["ok"]:
            return {"ok": False, "detail": f"scalar k={k}"}
        repv = cycles.predict_vector_cycle(p, k, False)
        resv = cycles.analyze_cycle(repv.entries, p, "vector", start_weight=k)
        if not resv["ok"]:
            return {"ok": False, "detail": f"vector k={k}"}
        count += 2
    return {"ok": True, "checked": count}


def _suite_strata(p: int) -> dict:
    orders = {}
    for phi, variant in (((1, 2), None), ((1, 1), 1), ((1, 1), 2),
                         ((0, 1), None)):
        rep = strata.partial_hasse_report(phi, p, variant=variant)
        orders[f"{phi} v{variant}"] = rep["order"]
        if not rep["formula_check"]["match"]:
            return {"ok": False, "detail": f"order mismatch at {phi}",
                    "orders": orders}
    for phi, rec in strata.eo_tables().items():
        if strata.canonical_filtration_compute(phi, p) != rec.canonical:
            return {"ok": False, "detail": f"filtration mismatch at {phi}"}
    return {"ok": True, "orders": orders}


_SUITES = {"pieri": _suite_pieri, "theta": _suite_theta,
           "hecke": _suite_hecke, "cycles": _suite_cycles,
           "strata": _suite_strata}


def _cmd_check(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    unknown = [s for s in names if s not in _SUITES]
    if unknown:
        raise CliError(f"unknown suite {unknown[0]!r}; choose from "
                       f"{sorted(_SUITES)} or 'all'")
    primes = [int(x) for x in args.p.split(",")]
    results = {}
    ok = True
    for name in names:
        for p in primes:
            res = _SUITES[name](p)
            results[f"{name}@p={p}"] = res
            ok = ok and res["ok"]
    _emit({"ok": ok, "results": results})
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegelmodp",
        description="Exact-arithmetic toolkit for mod p Siegel modular "
                    "forms of degree 2")
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="apply a theta operator")
    p_theta.add_argument("--op", required=True,
                         choices=["scalar", "big", "t1", "t2", "t3"])
    p_theta.add_argument("--iterations", type=int, default=1)
    p_theta.add_argument("input")
    p_theta.add_argument("-o", "--output", required=True)
    p_theta.set_defaults(fn=_cmd_theta)

    p_h = sub.add_parser("hecke", help="apply T(ell^i) at target indices")
    p_h.add_argument("--ell", type=int, required=True)
    p_h.add_argument("--power", type=int, default=1)
    p_h.add_argument("--targets", required=True)
    p_h.add_argument("--assume-complete", action="store_true")
    p_h.add_argument("input")
    p_h.add_argument("-o", "--output", required=True)
    p_h.set_defaults(fn=_cmd_hecke)

    p_he = sub.add_parser("hecke-eigen", help="eigenvalue of T(ell^i)")
    p_he.add_argument("--ell", type=int, required=True)
    p_he.add_argument("--power", type=int, default=1)
    p_he.add_argument("--assume-complete", action="store_true")
    p_he.add_argument("input")
    p_he.set_defaults(fn=_cmd_hecke_eigen)

    p_c = sub.add_parser("cycle", help="predict a theta cycle")
    kind = p_c.add_mutually_exclusive_group(required=True)
    kind.add_argument("--scalar", action="store_true")
    kind.add_argument("--vector", action="store_true")
    p_c.add_argument("--p", type=int, required=True)
    p_c.add_argument("--k", type=int, required=True)
    p_c.add_argument("--semi-ordinary", action="store_true")
    p_c.add_argument("--non-semi-ordinary", action="store_true")
    p_c.add_argument("--branch", type=int, default=None)
    p_c.set_defaults(fn=_cmd_cycle)

    p_so = sub.add_parser("strata-order",
                          help="vanishing order of a partial Hasse invariant")
    p_so.add_argument("--phi", required=True)
    p_so.add_argument("--variant", type=int, choices=[1, 2], default=1)
    p_so.add_argument("--p", type=int, required=True)
    p_so.add_argument("--cutoff", type=int, default=None)
    p_so.set_defaults(fn=_cmd_strata_order)

    p_st = sub.add_parser("strata-tables", help="print the stratum tables")
    p_st.set_defaults(fn=_cmd_strata_tables)

    p_cp = sub.add_parser("charpoly", help="Frobenius characteristic polynomial")
    for flag in ("--ell", "--lam1", "--lam2", "--chi2", "--k1", "--k2", "--p"):
        p_cp.add_argument(flag, type=int, required=True)
    p_cp.set_defaults(fn=_cmd_charpoly)

    p_pl = sub.add_parser("plan", help="weight-reduction plan")
    for flag in ("--k1", "--k2", "--p"):
        p_pl.add_argument(flag, type=int, required=True)
    p_pl.set_defaults(fn=_cmd_plan)

    p_ck = sub.add_parser("check", help="run module invariant suites")
    p_ck.add_argument("--suite", required=True)
    p_ck.add_argument("--p", required=True,
                      help="comma-separated list of primes")
    p_ck.set_defaults(fn=_cmd_check)
    return parser


def _preprocess(argv):
    """Fold the documented two-word subcommands into one token."""
    if len(argv) >= 2:
        pair = (argv[0], argv[1])
        if pair == ("hecke", "eigen"):
            return ["hecke-eigen"] + list(argv[2:])
        if pair == ("strata", "order"):
            return ["strata-order"] + list(argv[2:])
        if pair == ("strata", "tables"):
            return ["strata-tables"] + list(argv[2:])
    return list(argv)


def run(argv) -> int:
    parser = _build_parser()
    args = parser.parse_args(_preprocess(argv))
    try:
        return args.fn(args)
    except _DOMAIN_ERRORS as e:
        print(str(e), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
