"""Command-line entry point.

Exit codes: 0 when everything requested passed, 1 when any check failed,
2 for usage or input errors.  Reports are plain text by default or JSON
behind --format json; JSON reports are byte-identical across runs for the
same input and seeds (apart from elapsed_ms).
"""

import argparse
import json
import os
import sys
import time

from . import dsl
from .datum import (LEVELS, default_level, load_path, verify)
from .derived import big_f, gamma, delta
from .drinfeld import drinfeld_u, u_tilde
from .errors import BudgetExceeded, ParseError, QhopfError, ShapeError
from .examples import (FiniteAbelianGroup, Cocycle3, cocycle_for, dpr_double,
                       function_algebra, group_algebra, sweedler)
from .ribbon import (check_main_theorem, check_ribbon_lemma, find_ribbon,
                     is_ribbon, rtwist_elements)
from .scalars import PrimeField, RationalField
from .twisting import (check_twist_elements, check_u_twist_invariance,
                       random_twist, twist)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (ParseError, ShapeError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return 2
    except QhopfError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def build_parser():
    p = argparse.ArgumentParser(prog="qhopf",
                                description="exact quasi-Hopf algebra toolkit")
    sub = p.add_subparsers(dest="command")

    q = sub.add_parser("verify", help="run the axiom verifiers on a datum")
    q.add_argument("file")
    q.add_argument("--level", choices=LEVELS)
    q.add_argument("--verbose", action="store_true",
                   help="full coordinate diffs instead of the first witness")
    _common(q)
    q.set_defaults(handler=cmd_verify)

    q = sub.add_parser("derive", help="print a derived element")
    q.add_argument("file")
    q.add_argument("--element", required=True,
                   choices=["gamma", "delta", "F", "Finv", "u",
                            "uhat", "ucheck", "utilde"])
    q.set_defaults(handler=cmd_derive)

    q = sub.add_parser("twist", help="twist a datum by a seeded random twist")
    q.add_argument("file")
    q.add_argument("--seed", type=int, default=None)
    q.add_argument("--emit", default=None, metavar="OUT.json")
    q.set_defaults(handler=cmd_twist)

    q = sub.add_parser("ribbon", help="ribbon element search and checks")
    q.add_argument("action", choices=["find", "check"])
    q.add_argument("file")
    q.add_argument("--budget", type=int, default=10 ** 6)
    q.add_argument("--method", choices=["auto", "enumerate", "blocks"],
                   default="auto")
    _common(q)
    q.set_defaults(handler=cmd_ribbon)

    q = sub.add_parser("example", help="emit a built-in example datum")
    q.add_argument("--kind", required=True,
                   choices=["dpr", "function", "group", "sweedler"])
    q.add_argument("--group", default="Z2")
    q.add_argument("--q", type=int, default=0)
    q.add_argument("--field", default="p:7")
    q.add_argument("--out", default=None)
    q.set_defaults(handler=cmd_example)

    q = sub.add_parser("check", help="expression, corpus and property checks")
    q.add_argument("what", choices=["expr", "corpus", "twist-props",
                                    "ribbon-theorem"])
    q.add_argument("file")
    q.add_argument("--expr", default=None)
    q.add_argument("--corpus", default=None, metavar="PATH")
    q.add_argument("--seeds", default="0..9", metavar="A..B")
    _common(q)
    q.set_defaults(handler=cmd_check)
    return p


def _common(q):
    q.add_argument("--format", choices=["text", "json"], default="text")
    q.add_argument("--jobs", type=int, default=1)


def emit_report(args, d, level, rep, t0):
    elapsed = int((time.time() - t0) * 1000)
    if getattr(args, "format", "text") == "json":
        doc = {"datum": d.content_hash(), "level": level,
               "checks": rep.to_dict(), "elapsed_ms": elapsed}
        print(json.dumps(doc, sort_keys=True, indent=1))
    else:
        print(rep.pretty())
        bad = len(rep.failures())
        print("%d checks, %d failing (%d ms)" % (len(rep.checks), bad, elapsed))
    return 0 if rep.ok else 1


def cmd_verify(args):
    t0 = time.time()
    d = load_path(args.file)
    level = args.level or default_level(d)
    rep = verify(d, level=level,
                 witness_limit=None if args.verbose else 1)
    return emit_report(args, d, level, rep, t0)


def cmd_derive(args):
    d = load_path(args.file)
    name = args.element
    if name in ("gamma", "delta"):
        t = gamma(d) if name == "gamma" else delta(d)
    elif name in ("F", "Finv"):
        de = big_f(d)
        t = de.F if name == "F" else de.F_inv
    elif name == "u":
        t = drinfeld_u(d).u
    elif name == "utilde":
        t = u_tilde(d)
    else:
        el = rtwist_elements(d)
        t = el.u_hat if name == "uhat" else el.u_check
    print(json.dumps(t.to_json(), sort_keys=True, indent=1))
    return 0


def _default_seed(args):
    if getattr(args, "seed", None) is not None:
        return args.seed
    return int(os.environ.get("QHOPF_SEED", "0"))


def cmd_twist(args):
    d = load_path(args.file)
    tw = random_twist(d, _default_seed(args))
    dt = twist(d, tw)
    text = dt.dumps()
    if args.emit:
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print("wrote %s (datum %s)" % (args.emit, dt.content_hash()))
    else:
        print(text)
    return 0


def cmd_ribbon(args):
    t0 = time.time()
    d = load_path(args.file)
    if args.action == "find":
        res = find_ribbon(d, args.budget, method=args.method)
        doc = {"datum": d.content_hash(), "region": res.region,
               "candidates": [{"v": c.v.to_json(), "provenance": c.provenance}
                              for c in res.candidates],
               "elapsed_ms": int((time.time() - t0) * 1000)}
        print(json.dumps(doc, sort_keys=True, indent=1))
        return 0
    if d.v is None:
        print("input error: datum carries no ribbon candidate v",
              file=sys.stderr)
        return 2
    rep = is_ribbon(d, d.v)
    rep.extend(check_ribbon_lemma(d, d.v))
    rep.extend(check_main_theorem(d, d.v))
    return emit_report(args, d, "ribbon", rep, t0)


def _parse_group(text):
    parts = text.upper().split("X")
    factors = []
    for part in parts:
        part = part.strip()
        if not part.startswith("Z") or not part[1:].isdigit():
            raise ParseError("bad group %r (expected e.g. Z2, Z3, Z2xZ2)" % text)
        factors.append(int(part[1:]))
    return FiniteAbelianGroup(tuple(factors))


def _parse_field(text):
    if text.upper() in ("Q", "RATIONAL"):
        return RationalField()
    if text.startswith("p:"):
        return PrimeField(int(text[2:]))
    raise ParseError("bad field %r (expected p:<prime> or Q)" % text)


def cmd_example(args):
    if args.kind == "sweedler":
        d = sweedler()
    else:
        group = _parse_group(args.group)
        field = _parse_field(args.field)
        if args.kind == "group":
            d = group_algebra(group, field)
        else:
            omega = (cocycle_for(group, args.q, field) if args.q
                     else Cocycle3.trivial(group, field))
            d = (dpr_double(group, omega) if args.kind == "dpr"
                 else function_algebra(group, omega))
    text = d.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print("wrote %s (datum %s)" % (args.out, d.content_hash()))
    else:
        print(text)
    return 0


def cmd_check(args):
    t0 = time.time()
    d = load_path(args.file)
    if args.what == "expr":
        if not args.expr:
            print("usage error: check expr requires --expr", file=sys.stderr)
            return 2
        expr = dsl.parse(args.expr)
        if isinstance(expr, dsl.Eq):
            status, witness = dsl.check_line(d, args.expr)
            rep_ok = status == "pass"
            if getattr(args, "format", "text") == "json":
                doc = {"datum": d.content_hash(), "expr": args.expr,
                       "status": status, "witness": witness,
                       "elapsed_ms": int((time.time() - t0) * 1000)}
                print(json.dumps(doc, sort_keys=True, indent=1))
            else:
                print("%s  %s" % (status.upper(), args.expr))
                if witness:
                    print("  witness: %r" % (witness,))
            if status == "skipped":
                return 2
            return 0 if rep_ok else 1
        value = dsl.evaluate(expr, d)
        print(json.dumps(value.to_json(), sort_keys=True, indent=1))
        return 0
    if args.what == "corpus":
        rep = dsl.run_corpus(d, path=args.corpus, jobs=args.jobs)
        return emit_report(args, d, "corpus", rep, t0)
    if args.what == "twist-props":
        first, last = _parse_seed_range(args.seeds)
        from .report import CheckReport
        rep = CheckReport()
        for seed in range(first, last + 1):
            tw = random_twist(d, seed)
            sub = check_twist_elements(d, tw)
            sub.extend(check_u_twist_invariance(d, tw))
            for c in sub.checks:
                rep.add("seed %d: %s" % (seed, c.name), c.status, c.witness)
        return emit_report(args, d, "twist-props", rep, t0)
    # ribbon-theorem
    if d.v is None:
        print("input error: datum carries no ribbon candidate v", file=sys.stderr)
        return 2
    rep = check_ribbon_lemma(d, d.v)
    rep.extend(check_main_theorem(d, d.v))
    return emit_report(args, d, "ribbon-theorem", rep, t0)


def _parse_seed_range(text):
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    n = int(text)
    return n, n


if __name__ == "__main__":
    raise SystemExit(main())
