"""Command-line surface: every verification and computation as a
reproducible, scriptable run with machine-readable output.

Exit codes: 0 all checks pass, 1 verified violation, 2 invalid
configuration, 3 inconclusive (horizon or tail-bound guard tripped).
Errors are also emitted as structured JSON on stderr.
"""

from __future__ import annotations

import argparse
import sys

from .asymptotics import (
    PROFILES,
    bias_constant,
    boundary_check,
    convergence_report,
    tauberian_predict_log,
)
from .biasspec import BiasSpec
from .checks import (
    conjecture_scan,
    cross_check_matrix,
    default_jobs,
    distinct_dominance_sweep,
    dominance_sweep,
    doubling_orbit_witness,
    nonneg_suite,
    random_nonneg_params,
)
from .engine import (
    bias_series_gf,
    bias_series_dp,
    bias_series_symmetric,
    compare_bias,
    monotonicity_check,
)
from .identities import verify_identity
from .oracle import oracle_bias, oracle_total
from .reports import canonical_json, render_csv, render_human
from .scalars import (
    QbiasError,
    InvalidParameterError,
    TailBoundError,
    format_rational,
    parse_rational,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3


def _rational_list(text):
    return [parse_rational(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text):
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _float_list(text):
    return [float(tok) for tok in text.split(",") if tok.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")
    common.add_argument("--out", help="write the report to this path instead of stdout")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes for sweeps (default: QBIAS_JOBS or all cores)")
    top = argparse.ArgumentParser(
        prog="qbias",
        description="Exact residue-class bias computations and verifications.",
        parents=[common],
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("compute-bias", help="bias sequence by a chosen method")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--x", default="1")
    p.add_argument("--y", default="0")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--method", choices=("gf", "dp", "symmetric"), default="gf")

    p = add_parser("verify", help="theorem sweeps, non-negativity suites, identities")
    p.add_argument("check", choices=("thm1", "thm2", "lemma2-1", "nonneg", "identities"))
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--N", type=int, default=200)
    p.add_argument("--x-grid", default="1,3/2,2,3")
    p.add_argument("--y-grid", default="0,1/2,1,2")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--x", default="1")
    p.add_argument("--y", default="0")
    p.add_argument("--kind", choices=("f_series", "maino", "chern_corollary", "andrews"))
    p.add_argument("--draws", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--names", default="jacobi,fine,heine,theta_reciprocal,kronecker")

    p = add_parser("scan-conjecture", help="finite-horizon threshold scan")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    guard = p.add_mutually_exclusive_group()
    guard.add_argument("--horizon-guard", dest="horizon_guard", action="store_true",
                       default=True)
    guard.add_argument("--no-horizon-guard", dest="horizon_guard", action="store_false")

    p = add_parser("asymptotics", help="constants, predictions, convergence, boundary")
    p.add_argument("task", choices=("constants", "predict", "convergence", "boundary"))
    p.add_argument("--a", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--flavor", choices=("01", "10", "11"), default=None)
    p.add_argument("--profile", choices=tuple(PROFILES))
    p.add_argument("--n-values", default="1000")
    p.add_argument("--samples", default="500,1000,2000")
    p.add_argument("--z", default="0.5,0.4,0.3")
    p.add_argument("--h", type=int, default=0)
    p.add_argument("--N", type=int, default=None)

    p = add_parser("oracle", help="brute-force values from the definitions")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--x", default="1")
    p.add_argument("--y", default="0")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--total", action="store_true",
                   help="total weighted count instead of the bias count")

    p = add_parser("cross-check", help="method-agreement matrix gf/dp/oracle")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=12)

    return top


def _fmt_exact(v):
    return str(v) if isinstance(v, int) else format_rational(v)


def _run_compute_bias(args):
    spec = BiasSpec(args.a, args.b, args.m,
                    parse_rational(args.x), parse_rational(args.y))
    if args.method == "symmetric":
        if spec.b != spec.m - spec.a:
            raise InvalidParameterError("symmetric method needs b = m - a")
        flavor = {(1, 0): "10", (0, 1): "01", (1, 1): "11"}.get(
            (int(spec.x) if spec.x.denominator == 1 else -1,
             int(spec.y) if spec.y.denominator == 1 else -1))
        if flavor is None:
            raise InvalidParameterError(
                "symmetric closed forms exist for (x,y) in {(1,0),(0,1),(1,1)}")
        series = bias_series_symmetric(spec.a, spec.m, flavor, args.N)
    elif args.method == "dp":
        series = bias_series_dp(spec, args.N)
    else:
        series = bias_series_gf(spec, args.N)
    obj = {
        "spec": spec.to_json_obj(),
        "method": args.method,
        "N": args.N,
        "values": [_fmt_exact(v) for v in series.coeffs],
    }
    rows = [("n", "value")] + [(n, v) for n, v in enumerate(series.coeffs)]
    return obj, rows, EXIT_PASS


def _run_verify(args):
    if args.check == "thm1":
        rep = dominance_sweep(args.m_max, _rational_list(args.x_grid),
                              _rational_list(args.y_grid), args.N, jobs=args.jobs)
        obj = rep.to_json_obj()
        rows = [("spec", "violations")] + [(s, " ".join(map(str, v)))
                                           for s, v in rep.violations]
        return obj, rows, EXIT_PASS if rep.passed else EXIT_VIOLATION
    if args.check == "thm2":
        rep = distinct_dominance_sweep(args.m_max, _rational_list(args.x_grid),
                                       args.N, jobs=args.jobs)
        obj = rep.to_json_obj()
        rows = [("spec", "violations")] + [(s, " ".join(map(str, v)))
                                           for s, v in rep.violations]
        return obj, rows, EXIT_PASS if rep.passed else EXIT_VIOLATION
    if args.check == "lemma2-1":
        if args.a is None or args.b is None or args.m is None:
            raise InvalidParameterError("lemma2-1 needs --a --b --m")
        spec = BiasSpec(args.a, args.b, args.m,
                        parse_rational(args.x), parse_rational(args.y))
        series = bias_series_gf(spec, args.N)
        ok, bad = monotonicity_check(series.coeffs, spec.m)
        obj = {
            "check": "lemma2-1",
            "spec": spec.to_json_obj(),
            "N": args.N,
            "passed": ok,
            "first_failure": bad,
        }
        rows = [("n", "value")] + [(n, _fmt_exact(v)) for n, v in enumerate(series.coeffs)]
        return obj, rows, EXIT_PASS if ok else EXIT_VIOLATION
    if args.check == "nonneg":
        import random as _random

        kinds = [args.kind] if args.kind else [
            "f_series", "maino", "chern_corollary", "andrews"]
        rng = _random.Random(args.seed)
        results = []
        all_ok = True
        for kind in kinds:
            for _ in range(args.draws):
                params = random_nonneg_params(kind, rng)
                rep = nonneg_suite(kind, params, args.N)
                all_ok = all_ok and rep.passed
                results.append(rep.to_json_obj())
        obj = {"check": "nonneg", "N": args.N, "draws": args.draws,
               "seed": args.seed, "passed": all_ok, "results": results}
        rows = [("kind", "passed", "first_negative")] + [
            (r["kind"], r["passed"], r["first_negative"]) for r in results]
        return obj, rows, EXIT_PASS if all_ok else EXIT_VIOLATION
    # identities
    names = [s.strip() for s in args.names.split(",") if s.strip()]
    results = []
    all_ok = True
    for name in names:
        if name == "jacobi":
            subs = [{"c": c, "s": s} for (c, s) in ((1, 1), (1, 2), (-1, 2), (2, 3), (-3, 1))]
            order = max(args.N, 1)
        elif name == "fine":
            subs = [
                {"alpha": (1, 2), "gamma": (1, 3), "z": (1, 1)},
                {"alpha": (2, 1), "gamma": (1, 2), "z": (1, 1)},
                {"alpha": (1, 1), "gamma": (parse_rational("1/2"), 2), "z": (1, 2)},
            ]
            order = max(args.N, 1)
        elif name == "heine":
            subs = [
                {"alpha": (1, 1), "beta": (1, 1), "gamma": (1, 2), "z": (1, 1)},
                {"alpha": (1, 2), "beta": (1, 1), "gamma": (1, 2), "z": (1, 1)},
                {"alpha": (2, 1), "beta": (1, 1), "gamma": (1, 3), "z": (1, 2)},
            ]
            order = max(args.N, 1)
        else:
            subs = [{"points": [(0.2, 0.5), (0.15, 0.4), (0.1, 0.3)]}]
            order = None
        for sub_params in subs:
            rep = verify_identity(name, sub_params, order)
            all_ok = all_ok and rep.passed
            results.append(rep.to_json_obj())
    obj = {"check": "identities", "passed": all_ok, "results": results}
    rows = [("identity", "mode", "passed", "max_discrepancy")] + [
        (r["identity"], r["mode"], r["passed"], r["max_discrepancy"]) for r in results]
    return obj, rows, EXIT_PASS if all_ok else EXIT_VIOLATION


def _run_scan(args):
    rep = conjecture_scan(args.a, args.b, args.m, args.N)
    obj = rep.to_json_obj()
    obj["horizon_guard"] = args.horizon_guard
    rows = [("quantity", "value"),
            ("threshold", rep.threshold),
            ("inconclusive", rep.inconclusive),
            ("violations", " ".join(map(str, rep.violations)))]
    code = EXIT_PASS
    if rep.inconclusive and args.horizon_guard:
        code = EXIT_INCONCLUSIVE
    return obj, rows, code


def _run_asymptotics(args):
    if args.task == "constants":
        if args.a is None or args.m is None:
            raise InvalidParameterError("constants needs --a --m")
        flavors = (args.flavor,) if args.flavor else ("01", "10", "11")
        consts = [bias_constant(args.a, args.m, f) for f in flavors]
        obj = {"task": "constants",
               "values": [{"a": c.a, "m": c.m, "flavor": c.flavor, "value": c.value}
                          for c in consts]}
        rows = [("a", "m", "flavor", "value")] + [
            (c.a, c.m, c.flavor, c.value) for c in consts]
        return obj, rows, EXIT_PASS
    if args.task == "predict":
        if not args.profile:
            raise InvalidParameterError("predict needs --profile")
        profile = PROFILES[args.profile]
        ns = _int_list(args.n_values)
        vals = [(n, tauberian_predict_log(profile, n)) for n in ns]
        obj = {"task": "predict", "profile": args.profile,
               "rows": [{"n": n, "log_main_term": v} for n, v in vals]}
        rows = [("n", "log_main_term")] + vals
        return obj, rows, EXIT_PASS
    if args.task == "convergence":
        if args.a is None or args.m is None:
            raise InvalidParameterError("convergence needs --a --m")
        rep = convergence_report(args.a, args.m, args.flavor or "01",
                                 _int_list(args.samples), args.N)
        obj = {"task": "convergence"}
        obj.update(rep.to_json_obj())
        rows = rep.to_csv_rows()
        code = EXIT_PASS if rep.trend_ok in (True, None) else EXIT_VIOLATION
        return obj, rows, code
    # boundary
    if args.a is None or args.m is None:
        raise InvalidParameterError("boundary needs --a --m")
    rep = boundary_check(args.a, args.m, args.flavor or "01", _float_list(args.z),
                         args.h, args.N)
    obj = {"task": "boundary"}
    obj.update(rep.to_json_obj())
    rows = rep.to_csv_rows()
    return obj, rows, EXIT_PASS


def _run_oracle(args):
    if args.total:
        value = oracle_total(parse_rational(args.x), parse_rational(args.y), args.n)
        obj = {"oracle": "total", "x": args.x, "y": args.y, "n": args.n,
               "value": _fmt_exact(value)}
    else:
        if args.a is None or args.b is None or args.m is None:
            raise InvalidParameterError("bias oracle needs --a --b --m")
        spec = BiasSpec(args.a, args.b, args.m,
                        parse_rational(args.x), parse_rational(args.y))
        value = oracle_bias(spec, args.n)
        obj = {"oracle": "bias", "spec": spec.to_json_obj(), "n": args.n,
               "value": _fmt_exact(value)}
    rows = [("n", "value"), (args.n, value)]
    return obj, rows, EXIT_PASS


def _run_cross_check(args):
    rows_data, all_ok = cross_check_matrix(args.m_max, args.n_max)
    obj = {"check": "cross-check", "m_max": args.m_max, "n_max": args.n_max,
           "passed": all_ok, "rows": rows_data}
    rows = [("spec", "gf_eq_dp", "gf_eq_oracle")] + [
        (r["spec"], r["gf_eq_dp"], r["gf_eq_oracle"]) for r in rows_data]
    return obj, rows, EXIT_PASS if all_ok else EXIT_VIOLATION


_RUNNERS = {
    "compute-bias": _run_compute_bias,
    "verify": _run_verify,
    "scan-conjecture": _run_scan,
    "asymptotics": _run_asymptotics,
    "oracle": _run_oracle,
    "cross-check": _run_cross_check,
}


def _emit(args, obj, rows) -> None:
    if args.format == "json":
        text = canonical_json(obj)
    elif args.format == "csv":
        text = render_csv(rows)
    else:
        text = render_human(obj) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code not in (0, None):
            sys.stderr.write(canonical_json({"error": "invalid arguments"}))
            return EXIT_INVALID
        return 0
    try:
        obj, rows, code = _RUNNERS[args.command](args)
    except QbiasError as exc:
        sys.stderr.write(canonical_json(
            {"error": str(exc), "type": type(exc).__name__}))
        return EXIT_INVALID
    _emit(args, obj, rows)
    return code


if __name__ == "__main__":
    sys.exit(main())
