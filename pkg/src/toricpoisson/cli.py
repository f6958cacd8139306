"""Command-line front end.

Exit codes: 0 success, 2 invalid fan (or failed verification), 3 parse error,
4 fan/bivector dimension mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from math import comb

from . import fan as fanmod
from .cohomology import demazure_roots, multivector_dims, poisson_cohomology
from .errors import DimensionMismatch, InvalidFan, NotAFace, ParseError, ToricError
from .exterior import Bivector, load_bivector
from .oracle import SCOPE, verify
from .polytope import build_polytope, stratify

log = logging.getLogger("toricpoisson")

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_MISMATCH = 0, 2, 3, 4


def _read_fan(path, normalize):
    if path in (None, "-"):
        return fanmod.loads(sys.stdin.read(), normalize=normalize)
    try:
        return fanmod.load(path, normalize=normalize)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _read_bivector(args, n):
    if args.pi is not None and args.bivector is not None:
        raise ParseError("give either --pi or --bivector, not both")
    if args.pi is not None:
        return Bivector.parse_inline(args.pi, n)
    if args.bivector is not None:
        try:
            return load_bivector(args.bivector, n)
        except OSError as exc:
            raise ParseError(f"cannot read {args.bivector}: {exc.strerror}") from None
    return Bivector.zero(n)


def _emit(out, args, obj, table):
    if args.json:
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(table)


def _fmt_point(p):
    return "(" + ", ".join(str(x) for x in p) + ")"


def _dims_table(rep):
    lines = [" k  dim H^0(X, wedge^k T_X)"]
    lines += [f"{k:2d}  {d}" for k, d in enumerate(rep.dims)]
    lines.append("strata #S(i): " + " ".join(str(c) for c in rep.strata))
    return "\n".join(lines) + "\n"


def cmd_check(args, out):
    f = _read_fan(args.fan, args.normalize)
    report = f.validate()
    table = "fan is valid (smooth, complete)\n" if report.ok else \
        "".join(f"{issue}\n" for issue in report.issues)
    _emit(out, args, report.to_json(), table)
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_dims(args, out):
    f = _read_fan(args.fan, args.normalize).require_valid()
    rep = multivector_dims(f)
    _emit(out, args, rep.to_json(), _dims_table(rep))
    return EXIT_OK


def cmd_weights(args, out):
    f = _read_fan(args.fan, args.normalize).require_valid()
    strat = stratify(f, build_polytope(f))
    n = f.dim
    weights = []
    for wc in strat.all():
        dims = [comb(n - wc.level, k - wc.level) if k >= wc.level else 0 for k in range(n + 1)]
        weights.append({"I": list(wc.point), "level": wc.level,
                        "active": list(wc.active), "dims": dims})
    obj = strat.to_json()
    obj["weights"] = weights
    lines = ["I                 level  dim V_I^k (k=0..n)"]
    for w in weights:
        lines.append(f"{_fmt_point(w['I']):<18}{w['level']:<7}{' '.join(map(str, w['dims']))}")
    lines.append("strata #S(i): " + " ".join(str(c) for c in strat.counts))
    _emit(out, args, obj, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_roots(args, out):
    f = _read_fan(args.fan, args.normalize).require_valid()
    roots = demazure_roots(f)
    table = f"{len(roots)} Demazure roots\n" + "".join(_fmt_point(r) + "\n" for r in roots)
    _emit(out, args, {"count": len(roots), "roots": [list(r) for r in roots]}, table)
    return EXIT_OK


def cmd_poisson(args, out):
    f = _read_fan(args.fan, args.normalize).require_valid()
    pi = _read_bivector(args, f.dim)
    rep = poisson_cohomology(f, pi)
    if rep.conditional:
        log.warning("fan is not Fano: dimensions are those of the global-section complex; "
                    "higher cohomology vanishing is not certified")
    lines = [f"bivector: {pi!r}", " k  dim H^0(wedge^k T)  dim H^k_pi"]
    lines += [f"{k:2d}  {a:<19d}{b}" for k, (a, b) in enumerate(zip(rep.multivector.dims, rep.dims))]
    lines.append("strata #S(i):    " + " ".join(map(str, rep.multivector.strata)))
    lines.append("strata #S^pi(i): " + " ".join(map(str, rep.strata_pi)))
    lines.append(f"fano: {str(rep.fano).lower()}  conditional: {str(rep.conditional).lower()}")
    _emit(out, args, rep.to_json(), "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    f = _read_fan(args.fan, args.normalize).require_valid()
    pi = _read_bivector(args, f.dim)
    rep = verify(f, pi)
    lines = [f"scope: {SCOPE}",
             "oracle dims:  " + " ".join(map(str, rep.oracle_dims)),
             "formula dims: " + " ".join(map(str, rep.formula_dims)),
             "agrees: " + str(rep.agrees).lower()]
    lines += [f"mismatch at {_fmt_point(p)}" for p in rep.mismatches]
    _emit(out, args, rep.to_json(), "\n".join(lines) + "\n")
    return EXIT_OK if rep.agrees else EXIT_INVALID


def _parse_cone(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"bad cone {text!r}; expected comma-separated ray indices") from None


def _int_arg(text, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def cmd_make(args, out):
    kind, params = args.kind, args.params
    need = {"pn": 1, "hirzebruch": 1, "product": 2, "blowup": 2}
    if len(params) != need[kind]:
        raise ParseError(f"make {kind} takes {need[kind]} argument(s)")
    if kind == "pn":
        f = fanmod.projective_space(_int_arg(params[0], "n"))
    elif kind == "hirzebruch":
        f = fanmod.hirzebruch(_int_arg(params[0], "a"))
    elif kind == "product":
        f = fanmod.product(_read_fan(params[0], args.normalize), _read_fan(params[1], args.normalize))
    else:
        f = fanmod.star_subdivide(_read_fan(params[0], args.normalize).require_valid(),
                                  _parse_cone(params[1]))
    out.write(fanmod.dumps(f) + "\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="toricpoisson",
                                description="Multivector fields and Poisson cohomology of toric varieties.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def fan_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("fan", nargs="?", default="-", help="fan JSON file ('-' or omitted: stdin)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--normalize", action="store_true",
                        help="replace non-primitive rays by their primitive generators")
        sp.set_defaults(func=func)
        return sp

    fan_cmd("check", cmd_check, "validate a fan")
    fan_cmd("dims", cmd_dims, "dimensions of holomorphic multivector fields")
    fan_cmd("weights", cmd_weights, "lattice points with levels and weight-space dimensions")
    fan_cmd("roots", cmd_roots, "Demazure roots")
    for name, func, help_ in [("poisson", cmd_poisson, "Poisson cohomology dimensions"),
                              ("verify", cmd_verify, "cross-check the formula with the strand oracle")]:
        sp = fan_cmd(name, func, help_)
        sp.add_argument("--bivector", help="bivector JSON file")
        sp.add_argument("--pi", help='inline bivector, e.g. "a12=1, a13=1/2+1i" (1-based)')

    mk = sub.add_parser("make", help="print a standard fan as JSON")
    mk.add_argument("kind", choices=["pn", "hirzebruch", "product", "blowup"])
    mk.add_argument("params", nargs="*")
    mk.add_argument("--normalize", action="store_true")
    mk.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    mk.set_defaults(func=cmd_make)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except InvalidFan as exc:
        for issue in exc.report.issues:
            err.write(f"{issue}\n")
        return EXIT_INVALID
    except DimensionMismatch as exc:
        err.write(f"dimension mismatch: {exc}\n")
        return EXIT_MISMATCH
    except NotAFace as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except ToricError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main():
    sys.exit(run())
