"""Command-line interface.

Exit codes: 0 YES / pass / found, 1 NO / fail / none, 2 input error,
3 UNDECIDED.  ``--format json`` prints the report record; the schema ships
as ``report_schema.json`` inside the package.
"""

import argparse
import inspect
import sys
import time

from . import constructions as cons
from . import finite as fe
from .classifier import classify, rule_table
from .errors import NoWitness, SGBError
from .expr import parse, render, render_mult, summary
from .report import Report
from .verify import SUITES


def _mult(m):
    return m if isinstance(m, int) else render_mult(m)


# -- commands ----------------------------------------------------------------

def cmd_classify(args):
    expr = parse(args.expr)
    v = classify(expr, args.property, args.mode)
    return Report(
        command="classify",
        inputs={"expr": render(expr), "property": args.property, "mode": args.mode},
        result=v.value.value,
        verdict={"value": v.value.value, "rule_id": v.rule_id, "mode": args.mode, "property": args.property},
        trail=[t.to_dict() for t in v.trail],
    )


def cmd_invariants(args):
    expr = parse(args.expr)
    s = summary(expr)
    profiles = {}
    for p, prof in s.profiles.items():
        profiles[str(p)] = {
            "ulm": {str(a): _mult(m) for a, m in prof.f.items()},
            "div_rank": _mult(prof.div_rank),
            "rank": _mult(prof.rank),
            "final_rank": _mult(prof.final_rank),
        }
    data = {
        "canonical": render(expr),
        "primes": sorted(s.primes),
        "profiles": profiles,
        "tf_rank": _mult(s.tf_rank),
        "tf_rank_reduced": _mult(s.tf_rank_reduced),
        "tf_rank_divisible": _mult(s.tf_rank_divisible),
        "reduced_tf_types": [t.render() for t in s.reduced_tf_types],
        "opaque_tf": s.has_opaque_tf,
    }
    return Report(command="invariants", inputs={"expr": args.expr}, result="ok", data=data)


def _suite_kwargs(suite, args):
    params = inspect.signature(SUITES[suite]).parameters
    kwargs = {}
    for name in ("p", "max_weight", "seed", "trials", "max_exp", "max_depth"):
        value = getattr(args, name, None)
        if value is None:
            continue
        if name not in params:
            raise SGBError(f"suite {suite} takes no --{name.replace('_', '-')}")
        kwargs[name] = value
    return kwargs


def cmd_verify(args):
    kwargs = _suite_kwargs(args.suite, args)
    res = SUITES[args.suite](**kwargs)
    return Report(
        command=f"verify {args.suite}",
        inputs=res.params,
        result="pass" if res.passed else "fail",
        counterexamples=res.counterexamples,
        stats={"cases": res.cases, **res.info},
        seed=res.params.get("seed"),
    )


def _group_and_subgroup(args):
    G = fe.parse_group(args.group)
    gens = fe.parse_elements(G, args.gens) if args.gens else []
    return G, fe.span(G, gens)


def cmd_oracle(args):
    G, H = _group_and_subgroup(args)
    inputs = {"group": str(G), "subgroup": str(H)}
    if args.query == "ess-summand":
        S = fe.essential_summand_oracle(G, H)
        data = {"summand": str(S) if S is not None else None}
        result = "found" if S is not None else "none"
    elif args.query == "max-extension":
        B = fe.max_socle_extension(G, H)
        data = {"extension": str(B), "structure": list(fe.structure(G, B)), "pure": fe.is_pure(G, B)}
        result = "found"
    elif args.query == "complement":
        C = fe.find_complement(G, H)
        data = {"complement": str(C) if C is not None else None}
        result = "found" if C is not None else "none"
    elif args.query == "pure":
        ok = fe.is_pure(G, H)
        data = {"pure": ok}
        result = "YES" if ok else "NO"
    else:
        ok = fe.is_essential(G, H)
        data = {"essential": ok, "socle": str(fe.socle(G))}
        result = "YES" if ok else "NO"
    return Report(command=f"oracle {args.query}", inputs=inputs, result=result, data=data)


def cmd_witness(args):
    G = fe.parse_group(args.group)
    inputs = {"group": str(G), "i": args.i, "j": args.j}
    try:
        x = cons.two_gap_witness(G, args.i, args.j, verify_oracle=True)
    except NoWitness as exc:
        return Report(command="witness two-gap", inputs=inputs, result="none", data={"reason": str(exc)})
    seq = fe.height_sequence(G, x)
    data = {"element": fe.format_element(x), "height_sequence": str(seq), "gaps": list(seq.gaps),
            "essential_summand": None}
    return Report(command="witness two-gap", inputs=inputs, result="found", data=data)


def cmd_demo(args):
    if args.demo == "homocyclic-hull":
        G, H = _group_and_subgroup(args)
        X = cons.homocyclic_hull(G, H)
        bad = cons.hull_failures(G, H, X)
        data = {"hull": str(X), "structure": list(fe.structure(G, X))}
        return Report(command="demo homocyclic-hull", inputs={"group": str(G), "subgroup": str(H)},
                      result="fail" if bad else "pass", data=data,
                      counterexamples=[{"failures": bad}] if bad else [])
    if args.demo == "simplify-a":
        rep = cons.simplify_a_demo(args.p, args.n, args.m, depth=args.depth)
    else:
        rep = cons.simplify_b_demo(args.p, args.n, depth=args.depth)
    d = rep.to_dict()
    failed = [c for c in d["checks"] if not c["passed"]]
    return Report(command=f"demo {args.demo}", inputs=d["parameters"],
                  result="pass" if rep.passed else "fail",
                  counterexamples=failed, stats={"checks": len(d["checks"])},
                  data={"checks": d["checks"], "witnesses": d["witnesses"]})


def cmd_rules(args):
    return Report(command="rules", inputs={}, result="ok", data={"rules": rule_table()})


# -- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="sgbassian", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="decide a property of a group expression")
    c.add_argument("expr")
    c.add_argument("--property", choices=["sgb", "ess", "bassian-tf"], default="sgb")
    c.add_argument("--mode", choices=["strict", "extended"], default="strict")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("invariants", parents=[common], help="Ulm profiles, ranks and types")
    c.add_argument("expr")
    c.set_defaults(func=cmd_invariants)

    c = sub.add_parser("verify", parents=[common], help="run a verification suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--p", type=int)
    c.add_argument("--max-weight", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--trials", type=int)
    c.add_argument("--max-exp", type=int)
    c.add_argument("--max-depth", type=int)
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("oracle", parents=[common], help="finite-group queries")
    c.add_argument("query", choices=["ess-summand", "max-extension", "pure", "essential", "complement"])
    c.add_argument("--group", required=True, help='e.g. "2:[1,3]"')
    c.add_argument("--gens", default="", help='e.g. "(1,2); (0,4)"')
    c.set_defaults(func=cmd_oracle)

    c = sub.add_parser("witness", parents=[common], help="elements with prescribed height sequences")
    c.add_argument("kind", choices=["two-gap"])
    c.add_argument("--group", required=True)
    c.add_argument("--i", type=int)
    c.add_argument("--j", type=int)
    c.set_defaults(func=cmd_witness)

    c = sub.add_parser("demo", parents=[common], help="run a construction with its checks")
    c.add_argument("demo", choices=["simplify-a", "simplify-b", "homocyclic-hull"])
    c.add_argument("--p", type=int, default=2)
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--m", type=int, default=3)
    c.add_argument("--depth", type=int, default=3)
    c.add_argument("--group")
    c.add_argument("--gens", default="")
    c.set_defaults(func=cmd_demo)

    c = sub.add_parser("rules", parents=[common], help="print the classifier rule table")
    c.set_defaults(func=cmd_rules)
    return parser


def run(argv=None):
    """Parse, run and return (report, exit code)."""
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        if getattr(args, "demo", None) == "homocyclic-hull" and not args.group:
            raise SGBError("homocyclic-hull needs --group")
        report = args.func(args)
    except SGBError as exc:
        report = Report(command=args.command, inputs={k: v for k, v in vars(args).items()
                                                      if k not in ("func", "format", "command")},
                        result="error", data={"error": str(exc), "kind": type(exc).__name__})
    return report.stamp(time.perf_counter() - start), args


def main(argv=None):
    report, args = run(argv)
    if args.format == "json":
        print(report.to_json())
    else:
        out = report.to_text()
        if report.result == "error":
            print(f"error: {report.data['error']}", file=sys.stderr)
        else:
            print(out)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
