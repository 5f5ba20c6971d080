"""Command-line front end: every computation behind one subcommand, JSON in
and out, plus `verify` for the named identity suites.

Output is deterministic: polynomials print in the canonical monomial order,
JSON keys are sorted, and randomized suites take an explicit --seed."""

import argparse
import sys

from . import jsonio, verify
from .alternant import schur_via_alternants
from .boxball import trajectory
from .crystal import (
    OneRowTableau,
    cocharge,
    comb_R,
    energy,
    reading_word,
    trop_eval,
    tropicalize,
    word_from_string,
    word_to_string,
)
def _print(value):
    print(value)
    return 0


def _json_arg(text):
    return jsonio.loads(text)


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_e(args):
    from .lsym import loop_e

    vars = _vars_from_args(args, args.n, args.m)
    out = loop_e(args.n, args.m, args.k, args.r, vars)
    return _print(out)


def cmd_schur(args):
    from .lsym import loop_schur_jt, loop_schur_tableaux
    from .ring import as_ratexpr, rational_eq

    shape = jsonio.shape_from_json(_json_arg(args.shape))
    vars = _vars_from_args(args, args.n, args.m)
    if args.method == "tableaux":
        out = loop_schur_tableaux(args.n, shape, args.r, args.m, vars)
    elif args.method == "jt":
        out = loop_schur_jt(args.n, shape, args.r, args.m, vars)
    else:
        if shape.inner.parts:
            raise ValueError("the alternant route needs a straight shape")
        ratio = schur_via_alternants(args.n, args.m, shape.outer, args.r + 1, vars)
        out = loop_schur_jt(args.n, shape, args.r, args.m, vars)
        if not rational_eq(ratio, as_ratexpr(out)):
            raise RuntimeError("alternant ratio disagrees with the determinant")
    return _print(out)


def cmd_powersum(args):
    from .lsym import loop_powersum

    vars = _vars_from_args(args, args.n, args.m)
    return _print(loop_powersum(args.n, args.m, args.k, vars))


def cmd_mn(args):
    from .lsym import mn_expand

    lam = jsonio.partition_from_json(_json_arg(args.lam))
    rows = [
        {"mu": list(mu.parts), "sign": sign}
        for mu, sign in mn_expand(args.n, args.k, lam, args.r, args.m)
    ]
    return _print(jsonio.dumps(rows))


def cmd_rmatrix(args):
    from .rmatrix import apply_word, parse_word

    vars = _vars_from_args(args, args.n, args.m)
    grid = apply_word(vars, parse_word(args.word))
    if vars.is_symbolic():
        payload = {
            "n": vars.n,
            "m": vars.m,
            "exprs": [[str(e) for e in row] for row in grid],
        }
    else:
        payload = {
            "n": vars.n,
            "m": vars.m,
            "values": [[jsonio.scalar_to_json(v) for v in row] for row in grid],
        }
    return _print(jsonio.dumps(payload))


def cmd_hopf_check(args):
    from .hopf import antipode_axiom_check, coassociativity_check, counit_check

    failed = False
    for i in range(1, args.max_i + 1):
        for label, ok in [
            ("antipode", antipode_axiom_check(i, args.k, args.n, not args.unsigned)),
            ("coassociativity", coassociativity_check(i, args.k, args.n)),
            ("counit", counit_check(i, args.k, args.n)),
        ]:
            print("%s i=%d: %s" % (label, i, "ok" if ok else "FAIL"))
            failed = failed or not ok
    return 1 if failed else 0


def cmd_trop(args):
    from .ring import var
    from .rmatrix import swap
    from .lsym import LoopVarArray

    vars = LoopVarArray.symbolic(args.n, 2)
    xs = [vars.value(1, j) for j in range(1, args.n + 1)]
    ys = [vars.value(2, j) for j in range(1, args.n + 1)]
    result = swap(args.n, xs, ys)
    column = result.x_out if args.component == "x" else result.y_out
    expr = tropicalize(column[args.color - 1])
    if args.point is None:
        return _print(expr)
    point_json = _json_arg(args.point)
    point = {}
    for site, key in ((1, "x"), (2, "y")):
        values = point_json[key]
        if len(values) != args.n:
            raise ValueError("point column %r must have n entries" % key)
        for j, v in enumerate(values, 1):
            point[var(site, j, args.n)] = int(v)
    return _print(trop_eval(expr, point))


def cmd_comb_r(args):
    b1 = OneRowTableau.from_letters(word_from_string(args.b1), args.n)
    b2 = OneRowTableau.from_letters(word_from_string(args.b2), args.n)
    method = {"trop": "tropical", "jdt": "jdt"}[args.method]
    c1, c2 = comb_R(b1, b2, method)
    return _print(jsonio.dumps({"c1": str(c1), "c2": str(c2)}))


def cmd_cocharge(args):
    word = word_from_string(args.word)
    return _print(cocharge(word, rule=args.rule))


def cmd_energy(args):
    tab = jsonio.tableau_from_json(_json_arg(args.tableau))
    return _print(energy(tab, n=args.n, convention=args.convention))


def cmd_boxball(args):
    state = jsonio.state_from_json(_json_arg(args.state))
    frames = trajectory(state, args.steps, rule=args.rule)
    if args.render == "json":
        return _print(jsonio.dumps(jsonio.state_to_json(frames[-1])))
    width = max(len(f.boxes) for f in frames)
    for f in frames:
        print(f.render().ljust(width, "."))
    return 0


def cmd_factor(args):
    from .factorize import whirl_factorize

    P = jsonio.matrixpoly_from_json(_json_arg(args.poly))
    result = whirl_factorize(
        P, args.m, tol=args.tol, max_iter=args.max_iter, seed=args.seed
    )
    payload = {
        "params": jsonio.loopvars_to_json(result.params),
        "residual": result.residual,
        "converged": result.converged,
    }
    return _print(jsonio.dumps(payload))


def cmd_tnn(args):
    from .factorize import tnn_check

    P = jsonio.matrixpoly_from_json(_json_arg(args.poly))
    report = tnn_check(P, args.window, args.order)
    payload = {
        "window_blocks": report.window_blocks,
        "max_order": report.max_order,
        "checked": report.checked,
        "passed": report.passed,
        "violations": [
            {
                "rows": list(rows),
                "cols": list(cols),
                "value": jsonio.scalar_to_json(value),
            }
            for rows, cols, value in report.violations
        ],
    }
    return _print(jsonio.dumps(payload))


def cmd_certify_schur(args):
    from .factorize import skew_schur_certificate
    from .matpoly import extract_e
    from .shapes import SkewShape, partitions_in_box

    P = jsonio.matrixpoly_from_json(_json_arg(args.poly))
    table = extract_e(P)
    shapes = []
    for outer in partitions_in_box(args.box, args.box):
        for inner in partitions_in_box(args.box, args.box):
            if outer.contains(inner):
                shapes.append(SkewShape(outer, inner))
    report = skew_schur_certificate(table, shapes, P.n)
    payload = {
        "checked": report.checked,
        "passed": report.passed,
        "negatives": [
            {
                "shape": jsonio.shape_to_json(shape),
                "r": r,
                "value": jsonio.scalar_to_json(value),
            }
            for shape, r, value in report.negatives
        ],
    }
    return _print(jsonio.dumps(payload))


def cmd_verify(args):
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    rows = verify.run_suites(names, seed=args.seed, points=args.points)
    failed = 0
    for suite, case, ok in rows:
        print("%s %s.%s" % ("ok  " if ok else "FAIL", suite, case))
        failed += not ok
    print("%d/%d passed" % (len(rows) - failed, len(rows)))
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# wiring


def _vars_from_args(args, n, m):
    from .lsym import LoopVarArray

    raw = getattr(args, "vars", None)
    if raw is None:
        return LoopVarArray.symbolic(n, m)
    arr = jsonio.loopvars_from_json(_json_arg(raw))
    if (arr.n, arr.m) != (n, m):
        raise ValueError("--vars shape disagrees with --n/--m")
    return arr


def _add_vars_flags(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--vars", help="numeric variable array as JSON")
    group.add_argument(
        "--symbolic", action="store_true", help="compute over symbolic variables"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="loopsym",
        description="Loop symmetric functions, R-matrices, box-ball, whirl factorization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("e", help="loop elementary symmetric polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_vars_flags(p)
    p.set_defaults(func=cmd_e)

    p = sub.add_parser("schur", help="loop Schur polynomial by a chosen route")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--shape", required=True, help="partition or skew shape JSON")
    p.add_argument(
        "--method", choices=["tableaux", "jt", "alternant"], default="tableaux"
    )
    _add_vars_flags(p)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("powersum", help="loop power sum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_vars_flags(p)
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("mn", help="powersum-times-Schur ribbon expansion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lam", required=True, help="partition JSON")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_mn)

    p = sub.add_parser("rmatrix", help="apply a word of column swaps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--word", required=True, help='e.g. "s1 s2" or "1 2"')
    _add_vars_flags(p)
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("hopf-check", help="antipode, coassociativity, counit checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--max-i", type=int, default=3)
    p.add_argument("--unsigned", action="store_true")
    p.set_defaults(func=cmd_hopf_check)

    p = sub.add_parser("trop", help="tropicalized swap component")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--component", choices=["x", "y"], default="y")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--point", help='integer point JSON {"x":[...],"y":[...]}')
    p.set_defaults(func=cmd_trop)

    p = sub.add_parser("comb-r", help="combinatorial R-matrix on two rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b1", required=True, help="row as a digit string")
    p.add_argument("--b2", required=True, help="row as a digit string")
    p.add_argument("--method", choices=["trop", "jdt"], default="trop")
    p.set_defaults(func=cmd_comb_r)

    p = sub.add_parser("cocharge", help="cocharge of a word")
    p.add_argument("word", help="digit string")
    p.add_argument("--rule", choices=["right", "left"], default="right")
    p.set_defaults(func=cmd_cocharge)

    p = sub.add_parser("energy", help="energy of a straight tableau")
    p.add_argument("--tableau", required=True, help="tableau JSON")
    p.add_argument("--n", type=int)
    p.add_argument("--convention", choices=["direct", "reversed"], default="direct")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("boxball", help="evolve a box-ball state")
    p.add_argument("--state", required=True, help='{"boxes":[0,1,...]}')
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--render", choices=["ascii", "json"], default="ascii")
    p.add_argument("--rule", choices=["carrier", "leftmost"], default="carrier")
    p.set_defaults(func=cmd_boxball)

    p = sub.add_parser("factor", help="factor a matrix polynomial into whirls")
    p.add_argument("--poly", required=True, help="matrix polynomial JSON")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("tnn", help="minor sweep of the block-Toeplitz window")
    p.add_argument("--poly", required=True, help="matrix polynomial JSON")
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_tnn)

    p = sub.add_parser("certify-schur", help="skew Schur nonnegativity certificate")
    p.add_argument("--poly", required=True, help="matrix polynomial JSON")
    p.add_argument("--box", type=int, default=3, help="shape box side")
    p.set_defaults(func=cmd_certify_schur)

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--suite", default="all", choices=["all"] + sorted(verify.SUITES))
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--points", type=int, default=20)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, RuntimeError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
