"""Command-line front end.

Exit codes: 0 success / nothing found, 1 usage error, 2 invalid instance,
3 a claim violation was found (greedy ratio above the steepness bound, or a
failing per-step inequality).
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import audit as _audit
from .gen import DUAL_KINDS, FUNCTION_KINDS, paper_instance, random_instance
from .greedy import TiePolicy, TraceLimitExceeded, enumerate_traces, greedy_descent
from .serialize import (InstanceError, dumps, emit_instance, findings_to_json,
                        format_rational, instance_digest, parse_instance,
                        report_to_dict, step_audit_to_dict, trace_to_dict)
from .setfn import elements, format_set, validate_function

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_FOUND = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _approx(v) -> str:
    if v is None:
        return "n/a"
    s = format_rational(v)
    if "/" in s:
        return f"{s} (≈{float(v):.6g})"
    return s


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: Optional[str]) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args):
    return parse_instance(_read(args.instance), check_function=not args.no_check)


def cmd_validate(args):
    f, c = parse_instance(_read(args.instance), check_function=False)
    verdict = validate_function(f)
    out = {
        "digest": instance_digest(f, c),
        "nonincreasing": verdict.nonincreasing,
        "supermodular": verdict.supermodular,
        "normalized": verdict.normalized,
        "failures": [{"property": k, "detail": m} for k, m in verdict.failures()],
        "girth": c.girth,
        "circuits": [list(elements(m)) for m in c.circuits],
    }
    _write(dumps(out), args.output)
    return EXIT_OK if verdict.ok else EXIT_INVALID


def cmd_greedy(args):
    f, c = _load(args)
    policy = TiePolicy(args.policy)
    if policy is TiePolicy.ALL:
        traces = enumerate_traces(f, c)
    else:
        traces = [greedy_descent(f, c, policy)]
    _write(dumps({"digest": instance_digest(f, c), "policy": policy.value,
                  "traces": [trace_to_dict(f, t) for t in traces]}), args.output)
    return EXIT_OK


def cmd_opt(args):
    f, c = _load(args)
    opt = _audit.brute_force_opt(f, c)
    _write(dumps({
        "digest": instance_digest(f, c),
        "opt_set": list(elements(opt.opt_set)),
        "opt_value": format_rational(opt.opt_value),
        "all_optima": [list(elements(m)) for m in opt.all_optima],
    }), args.output)
    return EXIT_OK


def cmd_report(args):
    f, c = _load(args)
    r = _audit.ratio_report(f, c, TiePolicy(args.policy))
    if args.human:
        lines = [f"policy      {r.policy}", f"q           {r.q}",
                 f"s           {_approx(r.s)}", f"t           {_approx(r.t)}",
                 f"bound       {_approx(r.bound)}",
                 f"f(GR)       {_approx(r.gr_value)}  GR={format_set(r.gr_set)}",
                 f"f(OPT)      {_approx(r.opt_value)}  OPT={format_set(r.opt_set)}",
                 f"ratio       {_approx(r.ratio)}",
                 f"violated    {r.theorem1_violated}"]
        _write("\n".join(lines) + "\n", args.output)
    else:
        _write(dumps({"digest": instance_digest(f, c), "report": report_to_dict(r)}),
               args.output)
    return EXIT_FOUND if r.theorem1_violated else EXIT_OK


def cmd_audit(args):
    f, c = _load(args)
    a = _audit.audit_instance(f, c)
    out = {
        "digest": instance_digest(f, c),
        "traces": len(a.traces),
        "reports": {p: report_to_dict(r) for p, r in a.reports.items()},
        "ineq1_violations": a.ineq1_violations,
        "ineq2_violations": a.ineq2_violations,
        "theorem1_policies": a.theorem1_policies,
    }
    if args.steps:
        out["steps"] = [step_audit_to_dict(k, s) for k, s in a.steps]
    _write(dumps(out), args.output)
    return EXIT_FOUND if a.has_findings or a.ineq2_violations else EXIT_OK


def cmd_gen(args):
    if args.kind == "paper":
        f, c = paper_instance()
    else:
        if args.n is None:
            raise _UsageError("--n is required for random instances")
        f, c = random_instance(args.kind, args.n, args.seed, dual=args.dual)
    _write(emit_instance(f, c), args.output)
    return EXIT_OK


def cmd_search(args):
    config = _audit.SearchConfig(
        kinds=tuple(args.kind or FUNCTION_KINDS),
        n_values=tuple(args.n or (4, 5, 6, 7, 8)),
        duals=tuple(args.dual or DUAL_KINDS),
        include_paper=args.include_paper,
    )
    findings = _audit.search_counterexamples(config, args.seed, args.count, jobs=args.jobs)
    _write(findings_to_json(findings), args.output)
    return EXIT_FOUND if findings else EXIT_OK


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stingy", description="Greedy descent over comatroid circuits: "
                "reports, audits and counterexample search.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    policies = [t.value for t in TiePolicy]

    def with_instance(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("instance", help="instance JSON file, or - for stdin")
        sp.add_argument("-o", "--output", help="write to file instead of stdout")
        sp.add_argument("--no-check", action="store_true",
                        help="skip set-function validation")
        return sp

    sp = with_instance("validate", "check the set function and dependence family")
    sp.set_defaults(func=cmd_validate)

    sp = with_instance("greedy", "run greedy descent")
    sp.add_argument("--policy", choices=policies, default="lex-min")
    sp.set_defaults(func=cmd_greedy)

    sp = with_instance("opt", "exact optimum over circuits")
    sp.set_defaults(func=cmd_opt)

    sp = with_instance("report", "greedy ratio against the steepness bound")
    sp.add_argument("--policy", choices=[x for x in policies if x != "all"], default="worst")
    sp.add_argument("--human", action="store_true", help="plain-text table")
    sp.set_defaults(func=cmd_report)

    sp = with_instance("audit", "per-step inequality audit over all trajectories")
    sp.add_argument("--steps", action="store_true", help="include the full step table")
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("gen", help="write an instance file")
    sp.add_argument("--kind", choices=("paper",) + FUNCTION_KINDS, default="paper")
    sp.add_argument("--n", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--dual", choices=DUAL_KINDS)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("search", help="audit seeded random instances for violations")
    sp.add_argument("--kind", choices=FUNCTION_KINDS, action="append")
    sp.add_argument("--n", type=int, action="append")
    sp.add_argument("--dual", choices=DUAL_KINDS, action="append")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--include-paper", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceError as exc:
        print(f"invalid instance ({exc.category}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (_UsageError, OSError, TraceLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
