"""Command line interface.

Subcommands: gegenbauer, singular, solve, branch, juhl, verify.
Rationals on the command line use num/den syntax and "symbolic" selects
the formal density parameter; there is no floating point anywhere.
Exit codes: 0 success, 1 verification failure (first counterexample on
stdout), 2 usage error.  Identical arguments and seed produce byte
identical output; long-running suites report progress on stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import branching, gegenbauer, juhl, scalar, spinor, suites
from .polynomial import Signature

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r} ({exc})")


def _parse_lambda(text: str):
    if text == "symbolic":
        return scalar.SYMBOLIC
    return _parse_rational(text)


def _signature(args) -> Signature:
    try:
        sig = Signature(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    if sig.n < 3:
        raise UsageError(f"p + q - 2 must be >= 3, got {sig.n}")
    return sig


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "emit", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_gegenbauer(args) -> int:
    if args.l < (-1 if args.variant in ("Cscript", "CscriptTilde") else 0):
        raise UsageError("degree out of range for the requested variant")
    p = gegenbauer.gegenbauer(args.l, args.variant)
    body = p.body
    if args.alpha is not None:
        body = gegenbauer.instantiate_alpha(p, _parse_rational(args.alpha))
    var = "t" if args.variant in ("Cscript", "CscriptTilde") else "x"
    coeffs = {}
    from .polynomial import GX, T
    code = T if var == "t" else GX
    top = body.degree({code}) if body else 0
    for k in range(0, max(top, 0) + 1):
        ck = _coefficient_in(body, code, k)
        if not ck.is_zero():
            coeffs[str(k)] = ck.text()
    payload = {"l": args.l, "variant": args.variant, "coefficients": coeffs}
    if args.alpha is not None:
        payload["alpha"] = args.alpha
    _emit(args, payload, body.text())
    return 0


def _coefficient_in(body, code, k):
    from .polynomial import MultiPolynomial
    out = {}
    for m, c in body._terms.items():
        d = dict(m)
        if d.get(code, 0) == k:
            d.pop(code, None)
            out[tuple(sorted(d.items()))] = c
    return MultiPolynomial(out)


def cmd_singular(args) -> int:
    sig = _signature(args)
    lam = _parse_lambda(args.lam)
    if args.K < 0:
        raise UsageError("K must be >= 0")
    if args.spinor:
        F = spinor.spinor_singular_F(args.K, lam, sig)
        payload = {
            "p": sig.p, "q": sig.q, "lambda": args.lam, "K": args.K,
            "spinor": True,
            "components": {"".join(map(str, b)) or "1": p.text()
                           for b, p in F.components()},
        }
        _emit(args, payload, F.text())
    else:
        w = scalar.closed_form_w(args.K, lam, sig)
        payload = {"p": sig.p, "q": sig.q, "lambda": args.lam, "K": args.K,
                   "spinor": False, "polynomial": w.text()}
        _emit(args, payload, w.text())
    return 0


def cmd_solve(args) -> int:
    sig = _signature(args)
    lam = _parse_rational(args.lam)
    if args.degree < 0:
        raise UsageError("degree must be >= 0")
    if args.spinor:
        if args.ambient:
            raise UsageError("ambient spinor solving is not provided")
        sol = spinor.brute_force_spinor_sol(args.degree, lam, sig)
        payload = {
            "p": sig.p, "q": sig.q, "lambda": str(lam), "degree": args.degree,
            "spinor": True,
            "dimension": sol.dimension,
            "even_block_dim": sol.even_block_dim,
            "odd_block_dim": sol.odd_block_dim,
            "blades": ["".join(map(str, b)) or "1"
                       for F in sol.entries for b in F.blades()],
            "basis": [F.text() for F in sol.entries],
        }
        text = "\n".join(F.text() for F in sol.entries) if sol.entries else "(empty)"
    else:
        sol = scalar.brute_force_sol(args.degree, lam, sig, ambient=args.ambient)
        payload = {
            "p": sig.p, "q": sig.q, "lambda": str(lam), "degree": args.degree,
            "ambient": args.ambient,
            "dimension": sol.dimension,
            "kinds": [e.kind for e in sol.entries],
            "basis": [e.vector.text() for e in sol.entries],
        }
        text = "\n".join(f"[{e.kind}] {e.vector.text()}" for e in sol.entries) \
            if sol.entries else "(empty)"
    payload["dimension"] = sol.dimension
    _emit(args, payload, f"dimension {sol.dimension}\n{text}")
    return 0


def cmd_branch(args) -> int:
    sig = _signature(args)
    lam = _parse_rational(args.lam)
    if args.spinor:
        rep = branching.spinor_branch_report(lam, sig.n, args.bmax)
    else:
        rep = branching.scalar_branch_report(lam, sig.n, args.bmax)
    payload = rep.to_json_dict()
    lines = [f"lambda = {lam}, n = {sig.n}, verdict: {rep.verdict}",
             f"truncated at b = {rep.truncated_at}"]
    for s in rep.summands:
        eps = "" if s.epsilon is None else (" eps=+" if s.epsilon == 1 else " eps=-")
        partner = "" if s.partner is None else f" partner={s.partner}"
        lines.append(f"  b={s.b}{eps} character=({', '.join(s.character.as_strings())})"
                     f"{partner}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_juhl(args) -> int:
    sig = _signature(args)
    lam = _parse_lambda(args.lam)
    if args.K < 0:
        raise UsageError("K must be >= 0")
    st = juhl.build_operator(args.K, lam, sig, spinor=args.spinor)
    if args.emit == "csv":
        sys.stdout.write(st.to_csv())
    elif args.emit == "latex":
        print(st.to_latex())
    elif args.emit == "json":
        print(json.dumps(st.to_json_dict(), indent=2, sort_keys=True))
    else:
        sign = "-Box'" if st.boxprime_sign() < 0 else "Box'"
        for t in st.terms:
            cf = f" {t.clifford_factor}" if t.clifford_factor else ""
            print(f"({t.coeff.text()}) * ({sign})^{t.boxprime_power} "
                  f"* d_n^{t.dn_power}{cf}")
    return 0


def cmd_verify(args) -> int:
    config = {}
    if args.Kmax is not None:
        config["Kmax"] = args.Kmax
    if args.dmax is not None:
        config["dmax"] = args.dmax
    if args.seed is not None:
        config["seed"] = args.seed
    if args.p is not None:
        config["p"] = args.p
    if args.q is not None:
        config["q"] = args.q
    try:
        print(f"running suite {args.suite} ...", file=sys.stderr)
        result = suites.run_suite(args.suite, config)
    except KeyError as exc:
        raise UsageError(str(exc))
    payload = {
        "suite": result.name,
        "passed": result.passed,
        "cases": result.cases,
        "failures": result.failures[:20],
        "details": result.details,
    }
    if args.emit == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name}: {status} ({result.cases} cases)")
        for f in result.failures[:20]:
            print(f"  counterexample: {f}")
    return 0 if result.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermaops",
        description="exact singular vectors, operator stencils and "
                    "decomposition reports")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sig(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("gegenbauer", help="print one Gegenbauer family member")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--variant", choices=["C", "Ctilde", "Cscript", "CscriptTilde"],
                    default="C")
    sp.add_argument("--alpha", type=str, default=None)
    sp.add_argument("--emit", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_gegenbauer)

    sp = sub.add_parser("singular", help="closed-form singular vector")
    add_sig(sp)
    sp.add_argument("--lambda", dest="lam", type=str, required=True)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--spinor", action="store_true")
    sp.add_argument("--emit", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_singular)

    sp = sub.add_parser("solve", help="brute-force solution space at one degree")
    add_sig(sp)
    sp.add_argument("--lambda", dest="lam", type=str, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--ambient", action="store_true")
    sp.add_argument("--spinor", action="store_true")
    sp.add_argument("--emit", choices=["text", "json"], default="json")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("branch", help="decomposition report")
    add_sig(sp)
    sp.add_argument("--lambda", dest="lam", type=str, required=True)
    sp.add_argument("--bmax", type=int, default=None)
    sp.add_argument("--spinor", action="store_true")
    sp.add_argument("--emit", choices=["text", "json"], default="json")
    sp.set_defaults(func=cmd_branch)

    sp = sub.add_parser("juhl", help="operator stencil table")
    add_sig(sp)
    sp.add_argument("--K", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", type=str, required=True)
    sp.add_argument("--spinor", action="store_true")
    sp.add_argument("--emit", choices=["text", "json", "csv", "latex"], default="text")
    sp.set_defaults(func=cmd_juhl)

    sp = sub.add_parser("verify", help="run a named verification suite")
    sp.add_argument("--suite", type=str, required=True)
    sp.add_argument("--Kmax", type=int, default=None)
    sp.add_argument("--dmax", type=int, default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--q", type=int, default=None)
    sp.add_argument("--emit", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("suites", help="list the verification suites")
    sp.set_defaults(func=lambda args: (print("\n".join(suites.suite_registry())), 0)[1])
    return parser


def _join_value_flags(argv: list[str]) -> list[str]:
    # let values like -1/2 follow --lambda / --alpha without being
    # mistaken for option flags
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--lambda", "--alpha") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_join_value_flags(list(argv)))
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
