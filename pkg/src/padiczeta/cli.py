"""Command-line surface: zeta, laurent, apply, solve, verify, pair-e, oracle.

Outputs are JSON (exact values as strings, numeric renders with 17
significant digits) or short text.  Runs are deterministic given the same
arguments and seed, and the optional result cache is write-temp-then-rename
atomic; a warm cache must reproduce a cold run byte for byte.

Exit codes: 0 ok, 1 usage, 2 uncertified/partial output, 3 verification
failure.
"""

import argparse
import hashlib
import json
import os
import random
import sys
import tempfile
from fractions import Fraction

from .characters import MultCharacter
from .fundamental import UncertifiedError, pair_e, solve, verify_division
from .laurent import laurent_expand
from .oracle import truncated_zeta
from .padic import Ball, PrimeContext
from .parsing import ParseError, format_polynomial, parse_polynomial
from .pdo import SymbolSpec, apply_operator
from .ratfunc import format_ratfunc
from .schwartz import Resolution, random_sbfunction
from .serialize import (
    fmt_float,
    grid_to_json,
    ratfunc_to_json,
    sbfunction_from_json,
    sbfunction_to_json,
)
from .zeta import zeta_ball, zeta_of

CACHE_FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARTIAL = 2
EXIT_VERIFY_FAILED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _parse_beta(text):
    try:
        return Fraction(text)
    except ValueError:
        return complex(float(text))


def _parse_ball(text, p):
    try:
        centers, level = text.rsplit("@", 1)
        coords = [Fraction(c.strip()) for c in centers.split(",")]
        return Ball(p, int(level), coords)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad ball spec %r: %s" % (text, exc), 0)


def _parse_chi(text, p):
    d, g = (int(x) for x in text.split(","))
    return MultCharacter(p, d, g)


def _load_phi(path):
    with open(path) as fh:
        return sbfunction_from_json(json.load(fh))


def _dump(obj, args):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def _atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class ResultCache:
    """Keyed JSON blobs on disk; atomic writes, format-versioned keys."""

    def __init__(self, directory):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key_obj):
        blob = json.dumps([CACHE_FORMAT_VERSION, key_obj], sort_keys=True)
        digest = hashlib.sha256(blob.encode()).hexdigest()
        return os.path.join(self.directory, digest + ".json")

    def get(self, key_obj):
        path = self._path(key_obj)
        if os.path.exists(path):
            with open(path) as fh:
                return json.load(fh)
        return None

    def put(self, key_obj, value_obj):
        _atomic_write(self._path(key_obj), json.dumps(value_obj, sort_keys=True))


def _zeta_payload(f, chi, ball, depth, memo):
    zr = zeta_ball(f, chi, ball, depth, memo)
    payload = {
        "value": ratfunc_to_json(zr.value),
        "certified": zr.certified,
        "undecided": [
            {"level": b.level, "center": [str(c) for c in b.center], "sup_bound": str(s)}
            for b, s in zr.undecided
        ],
    }
    return zr, payload


def cmd_zeta(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    ball = _parse_ball(args.ball, args.p)
    cache = ResultCache(args.cache_dir) if args.cache_dir else None
    key = {
        "cmd": "zeta",
        "p": args.p,
        "f": format_polynomial(f),
        "n": args.n,
        "chi": chi.key() if chi else None,
        "ball": {"level": ball.level, "center": [str(c) for c in ball.center]},
        "depth": args.depth,
    }
    payload = cache.get(key) if cache else None
    if payload is None:
        zr, payload = _zeta_payload(f, chi, ball, args.depth, {})
        if cache:
            cache.put(key, payload)
    certified = payload["certified"]
    if args.json:
        _dump(payload, args)
    else:
        from .serialize import ratfunc_from_json

        r = ratfunc_from_json(payload["value"])
        print("Z(s) =", format_ratfunc(r))
        poles = r.poles()
        if poles:
            print("poles: " + ", ".join("Re(s) = %s (x%d)" % (loc, len(facs)) for loc, facs in poles))
        else:
            print("poles: none")
        if not certified:
            print("undecided balls: %d" % len(payload["undecided"]))
    if not certified and not args.allow_partial:
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_laurent(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    ball = _parse_ball(args.ball, args.p)
    zr = zeta_ball(f, chi, ball, args.depth, {})
    if not zr.certified and not args.allow_partial:
        return EXIT_PARTIAL
    beta = _parse_beta(args.beta)
    if not isinstance(beta, Fraction):
        print("error: laurent expansion needs rational beta", file=sys.stderr)
        return EXIT_USAGE
    ls = laurent_expand(zr.value, beta, args.order)
    coeffs = {}
    for m in range(ls.order, args.order + 1):
        c = ls.c(m)
        if not c.is_zero():
            coeffs[str(m)] = {
                "lambda_terms": {str(k): repr(v) for k, v in sorted(c.terms.items())},
                "numeric": fmt_float(c.render().real)
                if abs(c.render().imag) < 1e-15
                else [fmt_float(c.render().real), fmt_float(c.render().imag)],
            }
    _dump({"beta": str(beta), "order": ls.order, "coefficients": coeffs}, args)
    return EXIT_OK


def cmd_apply(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    phi = _load_phi(getattr(args, "in"))
    if phi.p != args.p:
        print("error: phi has p=%d, flag says %d" % (phi.p, args.p), file=sys.stderr)
        return EXIT_USAGE
    sym = SymbolSpec(f, _parse_beta(args.beta), chi)
    report = apply_operator(sym, phi, args.depth)
    payload = {
        "result": sbfunction_to_json(report.result),
        "exact": report.exact,
        "l2_error_bound": fmt_float(report.l2_error_bound),
    }
    _dump(payload, args)
    if not report.exact and not args.allow_partial:
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_solve(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    g = _load_phi(args.g)
    sym = SymbolSpec(f, _parse_beta(args.beta), chi)
    M, N = (int(x) for x in args.window.split(","))
    try:
        res = solve(sym, g, Resolution(M, N), args.depth)
    except UncertifiedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARTIAL
    payload = grid_to_json(res.grid)
    payload["exact"] = res.exact
    _dump(payload, args)
    return EXIT_OK


def cmd_verify(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    sym = SymbolSpec(f, _parse_beta(args.beta), chi)
    memo = {}
    reports = []
    failures = 0
    if args.phi:
        phis = [_load_phi(args.phi)]
    else:
        rng = random.Random(args.seed)
        phis = [
            random_sbfunction(rng, args.p, args.n, max_balls=8, min_level=-1, max_level=3)
            for _ in range(args.trials)
        ]
    for i, phi in enumerate(phis):
        try:
            rep = verify_division(sym, phi, args.depth, memo=memo)
        except UncertifiedError as exc:
            print("trial %d: uncertified (%s)" % (i, exc), file=sys.stderr)
            return EXIT_PARTIAL
        reports.append(
            {
                "trial": i,
                "ok": rep.ok,
                "left": fmt_float(rep.left_numeric.real),
                "right": fmt_float(rep.right_numeric.real),
                "pole_order": rep.pole_order,
            }
        )
        if not rep.ok:
            failures += 1
    _dump({"beta": str(args.beta), "trials": len(phis), "failures": failures, "reports": reports}, args)
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_pair_e(args):
    f = parse_polynomial(args.f, args.n)
    chi = _parse_chi(args.chi, args.p) if args.chi else None
    phi = _load_phi(args.phi)
    sym = SymbolSpec(f, _parse_beta(args.beta), chi)
    try:
        res = pair_e(sym, phi, args.depth)
    except UncertifiedError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_PARTIAL
    payload = {
        "numeric": [fmt_float(res.numeric.real), fmt_float(res.numeric.imag)],
        "pole_order": res.pole_order,
    }
    if res.exact is not None:
        payload["exact_lambda_terms"] = {str(k): repr(v) for k, v in sorted(res.exact.terms.items())}
    _dump(payload, args)
    return EXIT_OK


def cmd_oracle(args):
    f = parse_polynomial(args.f, args.n)
    if args.phi:
        phi = _load_phi(args.phi)
    else:
        from .schwartz import SBFunction

        phi = SBFunction.indicator(_parse_ball(args.ball, args.p))
    parts = [float(x) for x in args.s0.split(",")]
    s0 = complex(parts[0], parts[1] if len(parts) > 1 else 0.0)
    bracket = truncated_zeta(f, phi, s0, args.depth)
    _dump(
        {
            "value": [fmt_float(bracket.value.real), fmt_float(bracket.value.imag)],
            "err": fmt_float(bracket.err),
        },
        args,
    )
    return EXIT_OK


def _add_common(sp, need_f=True):
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    if need_f:
        sp.add_argument("--f", required=True)
    sp.add_argument("--chi", default=None, help="character as 'order,image'")
    sp.add_argument("--depth", type=int, default=40)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--allow-partial", action="store_true")
    sp.add_argument("--cache-dir", default=None)
    sp.add_argument("--out", default=None)


def build_parser():
    parser = _Parser(prog="padiczeta")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("zeta")
    _add_common(sp)
    sp.add_argument("--ball", required=True, help="'c1,..,cn@e'")
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("laurent")
    _add_common(sp)
    sp.add_argument("--ball", required=True)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--order", type=int, default=2)
    sp.set_defaults(func=cmd_laurent)

    sp = sub.add_parser("apply")
    _add_common(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--in", dest="in", required=True)
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("solve")
    _add_common(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--window", required=True, help="'M,N'")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify")
    _add_common(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--phi", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("pair-e")
    _add_common(sp)
    sp.add_argument("--beta", required=True)
    sp.add_argument("--phi", required=True)
    sp.set_defaults(func=cmd_pair_e)

    sp = sub.add_parser("oracle")
    _add_common(sp)
    sp.add_argument("--ball", default=None)
    sp.add_argument("--phi", default=None)
    sp.add_argument("--s0", required=True, help="'re' or 're,im'")
    sp.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
