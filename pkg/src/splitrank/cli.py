"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 failed
precondition, 4 budget exhausted without an answer.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction

from . import builtins as bi
from .cuts import ClosureBudget, cg_closure_budgeted, enumerate_effective_splits, rank_budgeted, split_closure_budgeted
from .exact import ExactError
from .lattice import integer_hull, is_relatively_lattice_free, lattice_width
from .polyhedra import PolyhedronError, barycenter
from .reverse import (
    ReverseRankError,
    find_certificate,
    find_cg_certificate,
    growth_experiment,
    make_P_eps,
    make_QF_lambda,
    make_Qt,
    mi_infinite_rank_check,
    prop72_construct,
    survival_check,
)
from .textio import ParseError, format_number, format_point, format_polyhedron, parse_point, parse_polyhedron

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(args):
    name = args.builtin or args.input
    if name is None:
        raise UsageError("an --input file or --builtin name is required")
    if args.builtin is None and os.path.exists(name):
        with open(name) as fh:
            return parse_polyhedron(fh.read())
    if name in bi.BUILTINS:
        return bi.builtin(name)
    if args.builtin is not None:
        raise UsageError("unknown builtin %r" % name)
    raise UsageError("no such file or builtin: %r" % name)


def _fractions(text):
    return [Fraction(x) for x in text.replace(",", " ").split()]


def _vectors(text):
    """Vectors separated by ';', coordinates by spaces or commas."""
    if not text:
        return []
    return [tuple(parse_point(part.replace(",", " "))) for part in text.split(";") if part.strip()]


def _emit(P, args, header=()):
    out = ["# " + h for h in header]
    sys.stdout.write("\n".join(out) + ("\n" if out else ""))
    sys.stdout.write(format_polyhedron(P, args.to))


def _budget(args):
    return ClosureBudget(norm_bound=args.norm_bound, max_rounds=args.max_rounds,
                         mixed_k=getattr(args, "mixed_k", None))


# ---------------------------------------------------------------------------
# verbs


def cmd_convert(args):
    _emit(_load(args), args)
    return EXIT_OK


def cmd_hull(args):
    P = _load(args)
    _emit(integer_hull(P), args, ["integer hull"])
    return EXIT_OK


def cmd_closure(args):
    P = _load(args)
    b = _budget(args)
    cur = P
    for _ in range(args.rounds):
        cur = split_closure_budgeted(cur, b, threads=args.threads) if args.kind == "split" \
            else cg_closure_budgeted(cur, b)
    hdr = ["%s closure, rounds=%d, norm_bound=%d, mixed_k=%s" % (args.kind, args.rounds, b.norm_bound, b.mixed_k)]
    _emit(cur, args, hdr)
    return EXIT_OK


def cmd_rank(args):
    P = _load(args)
    res = rank_budgeted(P, _budget(args), args.kind, threads=args.threads)
    print("# kind=%s norm_bound=%d max_rounds=%d" % (args.kind, args.norm_bound, args.max_rounds))
    print("rank %d" % res.rank)
    print("reached_hull %s" % ("yes" if res.reached_hull else "no"))
    print("status %s" % res.status)
    return EXIT_OK if res.reached_hull else EXIT_BUDGET


def cmd_width(args):
    P = _load(args)
    w = lattice_width(P, args.budget)
    print("# budget=%d" % args.budget)
    if w.infinite:
        print("width inf")
        return EXIT_BUDGET
    print("width %s" % format_number(w.width))
    print("direction %s" % format_point(w.direction))
    return EXIT_OK


def cmd_lattice_free(args):
    P = _load(args)
    free, w = is_relatively_lattice_free(P)
    if free:
        print("lattice-free")
    else:
        print("not lattice-free")
        print("witness %s" % format_point(w))
    return EXIT_OK


def cmd_certify(args):
    P = _load(args)
    cert = find_certificate(P, args.entry_budget, args.dir_budget, max_dim=args.max_dim,
                            prune=not args.no_prune, threads=args.threads)
    if cert is None:
        print("no certificate within budgets: entry=%d dir=%d" % (args.entry_budget, args.dir_budget))
        return EXIT_BUDGET
    sys.stdout.write(cert.to_text())
    return EXIT_OK


def cmd_cg_certify(args):
    P = _load(args)
    L = find_cg_certificate(P, args.entry_budget)
    if L is None:
        print("no direction within budget: entry=%d" % args.entry_budget)
        return EXIT_BUDGET
    print("# entry_budget=%d" % args.entry_budget)
    print("direction %s" % format_point(L.basis[0]))
    return EXIT_OK


def cmd_mi_check(args):
    Q = _load(args)
    if args.c is None or args.delta is None or args.k is None:
        raise UsageError("mi-check needs --k, --c and --delta")
    c = _fractions(args.c)
    if len(c) != Q.n:
        raise UsageError("--c must have %d entries" % Q.n)
    res = mi_infinite_rank_check(Q, args.k, c, Fraction(args.delta), args.dir_budget)
    print("# k=%d dir_budget=%d" % (args.k, args.dir_budget))
    if res.infinite:
        print("infinite split rank: qualifying face found (split search budget %d)" % args.dir_budget)
        M = res.face.polyhedron
        for v in M.vertices:
            print("face vertex %s" % format_point(v))
        return EXIT_OK
    print("no qualifying face")
    return EXIT_OK


def cmd_construct(args):
    what = args.what
    if what == "qt":
        _emit(make_Qt(Fraction(args.t)), args, ["Q_t with t=%s" % args.t])
        return EXIT_OK
    P = _load(args)
    if what == "qf":
        basis = _vectors(args.basis)
        xbar = tuple(_fractions(args.xbar)) if args.xbar else barycenter(P)
        Q = make_QF_lambda(P, xbar, basis, Fraction(args.lam))
        _emit(Q, args, ["lambda=%s xbar=%s" % (args.lam, format_point(xbar))])
        return EXIT_OK
    if what == "peps":
        basis = _vectors(args.basis)
        xbar = tuple(_fractions(args.xbar)) if args.xbar else barycenter(P)
        Q, kept = make_P_eps(P, xbar, basis, Fraction(args.eps))
        flag = "unknown" if kept is None else ("yes" if kept else "no")
        _emit(Q, args, ["eps=%s xbar=%s" % (args.eps, format_point(xbar)), "integer points preserved: %s" % flag])
        return EXIT_OK
    if what == "mixed":
        cert = find_certificate(P, args.entry_budget, args.dir_budget)
        if cert is None:
            print("no certificate within budgets: entry=%d dir=%d" % (args.entry_budget, args.dir_budget))
            return EXIT_BUDGET
        xbar = tuple(_fractions(args.xbar)) if args.xbar else None
        inst = prop72_construct(P, cert.face, cert.subspace, xbar)
        hdr = ["k=%d" % inst.k, "c=%s" % format_point(inst.c), "delta=%s" % format_number(inst.delta),
               "x_tilde=%s" % format_point(inst.x_tilde),
               "budgets: entry=%d dir=%d" % (args.entry_budget, args.dir_budget)]
        _emit(inst.Q, args, hdr)
        return EXIT_OK
    raise UsageError("unknown construction %r" % what)


def cmd_experiment(args):
    w = csv.writer(sys.stdout, lineterminator="\n")
    if args.name == "growth":
        ts = [Fraction(x) for x in args.t.split(",")]
        rows = growth_experiment(ts, args.norm_bound, args.max_rounds, threads=args.threads)
        w.writerow(["t", "rank", "reached_hull", "rounds", "budget", "max_rounds"])
        for r in rows:
            w.writerow([format_number(r["t"]), "" if r["rank"] is None else r["rank"],
                        "yes" if r["reached_hull"] else "no", r["rounds"], r["budget"], r["max_rounds"]])
        return EXIT_OK
    if args.name == "survival":
        P = bi.builtin("triangle3d") if args.input is None and args.builtin is None else _load(args)
        basis = _vectors(args.basis) or [(0, 0, 1)]
        xbar = barycenter(P)
        w.writerow(["lambda", "split", "direction", "sign", "contained", "budget"])
        for lam in [Fraction(x) for x in args.lam.split(",")]:
            Q = make_QF_lambda(P, xbar, basis, lam)
            for S in enumerate_effective_splits(Q, args.norm_bound):
                for v, sgn, ok in survival_check(P, xbar, basis, lam, S, Q=Q):
                    w.writerow([format_number(lam), str(S), format_point(v), sgn, "yes" if ok else "no",
                                args.norm_bound])
        return EXIT_OK
    raise UsageError("unknown experiment %r" % args.name)


def cmd_examples(args):
    for name in bi.BUILTINS:
        print("%-18s %s" % (name, bi.describe(name)))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="splitrank", description="Exact split closures, ranks and reverse split rank certificates.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    def add(name, fn, help, source=True):
        sp = sub.add_parser(name, help=help)
        if source:
            sp.add_argument("--input", help="polyhedron file or builtin name")
            sp.add_argument("--builtin", help="builtin name (see 'examples')")
        sp.add_argument("--to", choices=["H", "V"], default="H", help="output representation")
        sp.add_argument("--threads", type=int, default=1)
        sp.set_defaults(func=fn)
        return sp

    add("convert", cmd_convert, "print a polyhedron in H or V form")
    add("hull", cmd_hull, "integer hull of a polytope")
    for name, fn, hlp in (("closure", cmd_closure, "budgeted split or CG closure"),
                          ("rank", cmd_rank, "budgeted split or CG rank")):
        sp = add(name, fn, hlp)
        sp.add_argument("--kind", choices=["split", "cg"], default="split")
        sp.add_argument("--norm-bound", type=int, default=1)
        sp.add_argument("--max-rounds", type=int, default=20)
        sp.add_argument("--mixed-k", type=int, default=None)
        if name == "closure":
            sp.add_argument("--rounds", type=int, default=1)
    sp = add("width", cmd_width, "lattice width with a direction budget")
    sp.add_argument("--budget", type=int, default=3)
    add("lattice-free", cmd_lattice_free, "test relative lattice-freeness")
    sp = add("certify", cmd_certify, "search for an infinite reverse split rank certificate")
    sp.add_argument("--entry-budget", type=int, default=2)
    sp.add_argument("--dir-budget", type=int, default=2)
    sp.add_argument("--max-dim", type=int, default=None)
    sp.add_argument("--no-prune", action="store_true", help="also try faces of dimension < 2")
    sp = add("cg-certify", cmd_cg_certify, "search for a direction v with P + <v> lattice-free")
    sp.add_argument("--entry-budget", type=int, default=2)
    sp = add("mi-check", cmd_mi_check, "infinite split rank test for a mixed-integer inequality")
    sp.add_argument("--k", type=int)
    sp.add_argument("--c")
    sp.add_argument("--delta")
    sp.add_argument("--dir-budget", type=int, default=2)
    sp = add("construct", cmd_construct, "build Q_t, Q_F^lambda, P(xbar, eps) or the mixed instance")
    sp.add_argument("what", choices=["qt", "qf", "peps", "mixed"])
    sp.add_argument("--t", default="1")
    sp.add_argument("--lambda", dest="lam", default="2")
    sp.add_argument("--eps", default="1/4")
    sp.add_argument("--basis", default="", help="vectors separated by ';'")
    sp.add_argument("--xbar", default=None)
    sp.add_argument("--entry-budget", type=int, default=2)
    sp.add_argument("--dir-budget", type=int, default=2)
    sp = add("experiment", cmd_experiment, "growth of budgeted ranks, or survival of the two points")
    sp.add_argument("name", choices=["growth", "survival"])
    sp.add_argument("--t", default="1,2,4,8,16")
    sp.add_argument("--lambda", dest="lam", default="4,16")
    sp.add_argument("--basis", default="")
    sp.add_argument("--norm-bound", type=int, default=2)
    sp.add_argument("--max-rounds", type=int, default=50)
    add("examples", cmd_examples, "list builtin polyhedra", source=False)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise UsageError("a command is required")
        return args.func(args)
    except UsageError as e:
        sys.stderr.write("usage error: %s\n" % e)
        return EXIT_USAGE
    except ParseError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return EXIT_PARSE
    except (PolyhedronError, ReverseRankError, ExactError, ValueError, KeyError) as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
