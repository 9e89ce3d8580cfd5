"""Command-line interface.

Subcommands: parse, reduce, superdev, superstep, label, mark, creations,
check. Exit status 0 on success, 1 on property failure, 2 on usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import WeaklamError
from .generate import GenConfig
from .labeled import (check_chain, erase_labels, label_initial,
                      labeled_normalize)
from .marked import detect_creations, marked_redexes
from .parsing import parse, print_term
from .reduction import weak_normalize
from .suites import run_all, run_suite, suite_names
from .supersteps import (SuperstepEngine, chain_from_superstep,
                         full_superdev, lift_derivation)
from .terms import Barrier, LAbs, LApp


def _barrier(text):
    return Barrier(tuple(n for n in text.split(",") if n)) if text else Barrier()


def _build_parser():
    top = argparse.ArgumentParser(prog="weaklam",
                                  description="weak lambda calculus toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, term=True):
        if term:
            p.add_argument("term", help="a term in the concrete syntax")
        p.add_argument("--barrier", default="", metavar="x,y,z",
                       help="variables blocking reduction")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("parse", help="parse and reprint a term")
    p.add_argument("term")
    p.add_argument("--grammar", choices=("plain", "labeled", "marked"),
                   default="plain")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="weak-reduce to normal form")
    common(p)
    p.add_argument("--fuel", type=int, default=1000)

    p = sub.add_parser("superdev",
                       help="full weak superdevelopment of an initial labeling")
    common(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--labeled", action="store_true",
                   help="the input is already a labeled term")
    p.add_argument("--witness", action="store_true",
                   help="also print the superstep derivation and chain witness")

    p = sub.add_parser("superstep", help="enumerate one-superstep reducts")
    common(p)
    p.add_argument("--k", type=int, default=0)

    p = sub.add_parser("label", help="initially label a plain term")
    p.add_argument("term")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mark", help="star the weak redexes of a plain term")
    p.add_argument("term")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("creations",
                       help="classify the redexes each marked contraction creates")
    p.add_argument("term", help="a marked term")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("--suite", action="append", default=None,
                   help="suite name (repeatable; default: all)")
    p.add_argument("--list", action="store_true", help="list suite names")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-size", type=int, default=12)
    p.add_argument("--json", action="store_true")
    return top


def main(argv=None):
    top = _build_parser()
    try:
        args = top.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _dispatch(args)
    except WeaklamError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args):
    if args.command == "parse":
        t = parse(args.term, args.grammar)
        if args.json:
            print(json.dumps({"term": print_term(t)}))
        else:
            print(print_term(t))
        return 0

    if args.command == "reduce":
        t = parse(args.term)
        trace = weak_normalize(t, _barrier(args.barrier), args.fuel)
        if args.json:
            print(json.dumps(trace.to_json()))
        else:
            for step in trace.steps:
                print(f"{print_term(step.before)}   [redex at "
                      f"{list(step.redex_position)}]")
            print(f"{print_term(trace.final)}   [{trace.status}, "
                  f"{len(trace.steps)} steps]")
        return 0

    if args.command == "superdev":
        barrier = _barrier(args.barrier)
        if args.labeled:
            labeled = parse(args.term, "labeled")
        else:
            labeled = label_initial(parse(args.term))
        result = full_superdev(labeled, barrier, args.k)
        payload = {"input": print_term(labeled), "k": args.k,
                   "barrier": list(barrier.vars)}
        if result is None:
            payload["result"] = None
            if not args.json:
                print("undefined")
        else:
            payload["result"] = print_term(result)
            payload["erasure"] = print_term(erase_labels(result))
            if not args.json:
                print(print_term(result))
                print(f"erasure: {print_term(erase_labels(result))}")
            if args.witness:
                eng = SuperstepEngine()
                d = eng.derive(labeled, result, barrier, args.k)
                w = chain_from_superstep(d)
                payload["witness"] = {"derivation": _derivation_json(d),
                                      "chain": w.to_json()}
                if not args.json:
                    print(json.dumps(payload["witness"], indent=2))
        if args.json:
            print(json.dumps(payload))
        return 0

    if args.command == "superstep":
        t = parse(args.term)
        barrier = _barrier(args.barrier)
        results = sorted(print_term(n) for n in
                         SuperstepEngine().enumerate(t, barrier, args.k))
        if args.json:
            print(json.dumps({"term": print_term(t), "k": args.k,
                              "barrier": list(barrier.vars),
                              "results": results}))
        else:
            for r in results:
                print(r)
        return 0

    if args.command == "label":
        t = label_initial(parse(args.term))
        print(json.dumps({"term": print_term(t)}) if args.json
              else print_term(t))
        return 0

    if args.command == "mark":
        from .marked import mark_initial
        t = mark_initial(parse(args.term))
        print(json.dumps({"term": print_term(t)}) if args.json
              else print_term(t))
        return 0

    if args.command == "creations":
        t = parse(args.term, "marked")
        records = []
        for p in sorted(marked_redexes(t)):
            for c in detect_creations(t, p):
                records.append({"case": c.tag,
                                "created": list(c.created_position),
                                "contracted": list(c.contracted_position)})
        if args.json:
            print(json.dumps(records))
        else:
            for r in records:
                print(f"case {r['case']}: created at {r['created']}, "
                      f"contracted at {r['contracted']}")
            if not records:
                print("no creations")
        return 0

    if args.command == "check":
        if args.list:
            for n in suite_names():
                print(n)
            return 0
        cfg = GenConfig(seed=args.seed, count=args.count,
                        max_size=args.max_size)
        names = args.suite or suite_names()
        reports = [run_suite(n, cfg) for n in names]
        if args.json:
            print(json.dumps([r.to_json() for r in reports]))
        else:
            for r in reports:
                print(r.line())
                for f in r.failures[:5]:
                    print(f"      case {f.case}: {f.clause}")
                    if f.shrunk:
                        print(f"      shrunk: {f.shrunk}")
        return 0 if all(r.ok for r in reports) else 1

    raise AssertionError(f"unhandled command {args.command}")


def _derivation_json(d):
    return {"rule": d.rule, "k": d.k,
            "source": print_term(d.source), "target": print_term(d.target),
            "split": list(d.split) if d.split else None,
            "premises": [_derivation_json(p) for p in d.premises]}


if __name__ == "__main__":
    sys.exit(main())
