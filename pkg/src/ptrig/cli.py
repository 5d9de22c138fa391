"""``ptrig`` command line: eval, solve, table and check.

Records go to stdout as JSON lines (default) or CSV; diagnostics go to
stderr.  Exit codes: 0 ok, 1 usage or domain error, 2 non-convergence,
3 residual gate failed.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

from . import checks, gentrig, hyperseries, polysolve, special_core
from .config import DEFAULT, DomainError, NoConvergence, PtrigError, ResidualGateFailed, SingularPoint, ToleranceConfig
from .numerics import horner

EXIT_OK, EXIT_USAGE, EXIT_NOCONV, EXIT_RESIDUAL = 0, 1, 2, 3

FUNCTIONS = ("cosp", "sinp", "cosm", "sinm", "hps", "genc", "gens", "gent", "cheb")
EVAL_COLUMNS = ("fn", "phi", "p", "q", "value", "c", "s", "residual", "method",
                "terms_used", "elapsed_us", "status", "error")
ROOT_COLUMNS = ("kind", "index", "re", "im", "residual", "method", "status")
CHECK_COLUMNS = ("suite", "check", "max_error", "tolerance", "status")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# --------------------------------------------------------------------------
# rendering


def fmt_float(x: float) -> str:
    text = format(x, ".17g")
    # keep integral values (and -0.0) floats after parsing
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def to_json(obj) -> str:
    """JSON with every float written to 17 significant digits (lossless for binary64)."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, complex):
        return to_json({"re": obj.real, "im": obj.imag})
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__}")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return fmt_float(v)
    if isinstance(v, complex):
        return f"{fmt_float(v.real)}{'+' if v.imag >= 0 or math.isnan(v.imag) else '-'}{fmt_float(abs(v.imag))}j"
    if isinstance(v, (list, tuple)):
        return ";".join(_csv_cell(x) for x in v)
    return str(v)


class Emitter:
    def __init__(self, fmt: str, columns, stream=None):
        self.fmt = fmt
        self.columns = columns
        self.stream = stream or sys.stdout
        self._writer = None

    def emit(self, record: dict):
        if self.fmt == "json":
            self.stream.write(to_json(record) + "\n")
            return
        if self._writer is None:
            self._writer = csv.writer(self.stream, lineterminator="\n")
            self._writer.writerow(self.columns)
        self._writer.writerow([_csv_cell(record.get(c)) for c in self.columns])


# --------------------------------------------------------------------------
# evaluation


def _gen_params(args) -> gentrig.GenTrigParams:
    if args.p is None or args.q is None:
        raise UsageError(f"--fn {args.fn} needs --p and --q")
    return gentrig.GenTrigParams(int(args.p), int(args.q))


def evaluate(fn: str, phi: float, cfg: ToleranceConfig, p=None, q=None,
             branch: str = "principal", series: bool = False) -> dict:
    """One evaluation record; raises library errors unchanged."""
    rec = {"fn": fn, "phi": phi}
    terms = None
    if fn in ("cosp", "sinp"):
        if series:
            res = special_core.cos_p_series(phi, cfg)
            c, terms, method = res.value, res.terms_used, "series"
        else:
            c, method = special_core.cos_p(phi), "closed_form"
        s = special_core.sin_p(phi)
        residual = max(abs(special_core.ptf_cubic_residual(phi, c)) / max(1.0, abs(3 * phi - 4)),
                       abs(c * c + s - 1.0) / max(1.0, c * c))
        rec.update(value=c if fn == "cosp" else s, c=c, s=s)
    elif fn in ("cosm", "sinm"):
        theta = 5.0 * phi - 8.0
        if series:
            res = hyperseries.cos_m_series(phi, cfg)
            c, terms, method = res.real, res.terms_used, "series"
        else:
            c, method = gentrig.cos_m_theta(theta, cfg), "newton"
        s = 1.0 - c ** 4
        residual = abs(gentrig.quintic_residual(phi, c)) / max(1.0, abs(theta))
        rec.update(value=c if fn == "cosm" else s, c=c, s=s)
    elif fn == "hps":
        value = special_core.hyper_parabolic_sin(phi, branch)
        roots = value if isinstance(value, list) else [value]
        residual = max(abs(special_core.hps_residual(phi, r)) for r in roots) / max(1.0, abs(phi))
        method = "closed_form"
        rec.update(branch=branch, value=value)
    elif fn in ("genc", "gens", "gent"):
        params = gentrig.GenTrigParams(int(p), int(q))
        pt = gentrig.gen_point(params, phi, cfg)
        rec.update(p=params.p, q=params.q)
        if params.q == 1:
            coeffs = gentrig.q1_polynomial(params.p, phi)
            residual = abs(horner(coeffs, pt.c)[0]) / max(1.0, abs(coeffs[-1]))
        else:
            residual = gentrig.area_residual(pt)
        on_branch = 0.0 <= phi <= gentrig.phi_max(params, cfg) * (1 + 1e-9)
        method = "quadrature" if on_branch else "polynomial"
        value = {"genc": pt.c, "gens": pt.s}.get(fn)
        if fn == "gent":
            value = gentrig.gen_tan(pt)
        rec.update(value=value, c=pt.c, s=pt.s)
    elif fn == "cheb":
        r = special_core.chebyshev_radical(phi)
        if r.imag == 0.0:
            r = r.real
        residual = abs(r ** 3 - 3 * r - phi) / max(1.0, abs(phi))
        method = "closed_form"
        rec.update(value=r)
    else:
        raise UsageError(f"unknown function {fn!r}")
    rec.update(residual=residual, method=method, terms_used=terms)
    return rec


def _timed_eval(args, phi, cfg):
    t0 = time.perf_counter()
    try:
        rec = evaluate(args.fn, phi, cfg, args.p, args.q, args.branch, args.series)
        code = EXIT_OK
        rec["status"] = "ok"
        if not rec["residual"] <= cfg.eps_residual:
            rec["status"], code = "failed", EXIT_RESIDUAL
    except NoConvergence as exc:
        rec, code = {"fn": args.fn, "phi": phi, "status": "failed", "error": str(exc)}, EXIT_NOCONV
    except (DomainError, SingularPoint) as exc:
        rec, code = {"fn": args.fn, "phi": phi, "status": "failed", "error": str(exc)}, EXIT_USAGE
    rec["elapsed_us"] = int(round((time.perf_counter() - t0) * 1e6))
    return rec, code


def cmd_eval(args, cfg) -> int:
    if args.fn in ("genc", "gens", "gent"):
        _gen_params(args)
    rec, code = _timed_eval(args, args.phi, cfg)
    Emitter(args.format, EVAL_COLUMNS).emit(rec)
    if "error" in rec:
        print(f"ptrig eval: {rec['error']}", file=sys.stderr)
    return code


def cmd_table(args, cfg) -> int:
    if args.steps < 2 or not args.start < args.stop:
        raise UsageError("table needs --steps >= 2 and --from < --to")
    if args.fn in ("genc", "gens", "gent"):
        _gen_params(args)
    out = Emitter(args.format, EVAL_COLUMNS)
    worst = EXIT_OK
    n = args.steps
    for k in range(n):
        phi = args.start + (args.stop - args.start) * k / (n - 1)
        if k == n - 1:
            phi = args.stop
        rec, code = _timed_eval(args, phi, cfg)
        out.emit(rec)
        worst = max(worst, code)
    return worst


def _root_set_record(kind: str, coeffs: dict, rs, status: str, t0: float) -> dict:
    roots = [{"re": z.real, "im": z.imag, "residual": r, "method": m}
             for z, r, m in zip(rs.roots, rs.residuals, rs.methods)]
    return {"kind": kind, "input": coeffs, "roots": roots, "real_roots": rs.real_roots,
            "status": status, "elapsed_us": int(round((time.perf_counter() - t0) * 1e6))}


def solve_record(kind: str, coeffs: dict, cfg: ToleranceConfig) -> dict:
    """Solve and describe; uncertified roots come back with ``status = "failed"``."""
    t0 = time.perf_counter()
    try:
        if kind == "cubic":
            rs = polysolve.solve_cubic(polysolve.CubicEquation(coeffs["a"], coeffs["b"], coeffs["c"]), cfg)
        else:
            rs = polysolve.solve_quintic_trinomial(polysolve.QuinticTrinomial(coeffs["p"], coeffs["lambda"]), cfg)
    except ResidualGateFailed as exc:
        return _root_set_record(kind, coeffs, exc.result, "failed", t0)
    return _root_set_record(kind, coeffs, rs, "ok", t0)


def cmd_solve(args, cfg) -> int:
    if args.kind == "cubic":
        if None in (args.a, args.b, args.c):
            raise UsageError("solve cubic needs --a --b --c")
        coeffs = {"a": args.a, "b": args.b, "c": args.c}
    else:
        if None in (args.p, args.lam):
            raise UsageError("solve quintic needs --p --lambda")
        coeffs = {"p": args.p, "lambda": args.lam}
    try:
        rec = solve_record(args.kind, coeffs, cfg)
    except NoConvergence as exc:
        print(f"ptrig solve: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    if args.format == "json":
        Emitter("json", ()).emit(rec)
    else:
        out = Emitter("csv", ROOT_COLUMNS)
        for i, r in enumerate(rec["roots"]):
            out.emit({"kind": args.kind, "index": i, **r, "status": rec["status"]})
    if rec["status"] != "ok":
        print("ptrig solve: residual gate failed", file=sys.stderr)
        return EXIT_RESIDUAL
    return EXIT_OK


def cmd_check(args, cfg) -> int:
    results = checks.run(args.suite, cfg)
    out = Emitter(args.format, CHECK_COLUMNS)
    for r in results:
        out.emit({"suite": r.suite, "check": r.name, "max_error": r.max_error,
                  "tolerance": r.tolerance, "status": "pass" if r.passed else "fail"})
    failed = [r for r in results if not r.passed]
    print(f"ptrig check: {len(results) - len(failed)}/{len(results)} passed", file=sys.stderr)
    return EXIT_RESIDUAL if failed else EXIT_OK


# --------------------------------------------------------------------------
# argument handling


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tol", type=float, default=None, help="residual gate (overrides PTRIG_TOL)")
    common.add_argument("--max-terms", type=int, default=None)
    common.add_argument("--max-iter", type=int, default=None)

    parser = _Parser(prog="ptrig", description="Parabolic and generalized trigonometric functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fn_args(sp):
        sp.add_argument("--fn", required=True, choices=FUNCTIONS)
        sp.add_argument("--p", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--branch", choices=("principal", "largest", "all"), default="principal")
        sp.add_argument("--series", action="store_true",
                        help="evaluate cosp/sinp/cosm/sinm through their hypergeometric series")

    ev = sub.add_parser("eval", parents=[common], help="evaluate one function value")
    fn_args(ev)
    ev.add_argument("--phi", type=float, required=True)

    tb = sub.add_parser("table", parents=[common], help="tabulate a function on a uniform grid")
    fn_args(tb)
    tb.add_argument("--from", dest="start", type=float, required=True)
    tb.add_argument("--to", dest="stop", type=float, required=True)
    tb.add_argument("--steps", type=int, required=True)

    sv = sub.add_parser("solve", parents=[common], help="solve a cubic or trinomial quintic")
    sv.add_argument("kind", choices=("cubic", "quintic"))
    sv.add_argument("--a", type=float)
    sv.add_argument("--b", type=float)
    sv.add_argument("--c", type=float)
    sv.add_argument("--p", type=float)
    sv.add_argument("--lambda", dest="lam", type=float)

    ck = sub.add_parser("check", parents=[common], help="run the cross-validation suites")
    ck.add_argument("--suite", choices=("identities", "series", "quadrature", "solvers", "all"),
                    default="all")
    return parser


def config_from(args, environ=None) -> ToleranceConfig:
    environ = os.environ if environ is None else environ
    changes = {}
    if environ.get("PTRIG_TOL"):
        try:
            changes["eps_residual"] = float(environ["PTRIG_TOL"])
        except ValueError:
            raise UsageError(f"PTRIG_TOL={environ['PTRIG_TOL']!r} is not a number")
    if args.tol is not None:
        changes["eps_residual"] = args.tol
    if args.max_terms is not None:
        changes["max_terms"] = args.max_terms
    if args.max_iter is not None:
        changes["max_iter"] = args.max_iter
    try:
        return DEFAULT.with_(**changes)
    except ValueError as exc:
        raise UsageError(str(exc))


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "solve": cmd_solve, "check": cmd_check}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"ptrig: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"ptrig: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except PtrigError as exc:
        print(f"ptrig: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
