"""Exact optimum, greedy-vs-bound reports and per-step inequality audits.

Two per-step inequalities are checked at greedy step i against an optimal
circuit OPT, with lhs = sum of d_b(X_{i-1}) over b in X_{i-1} - OPT:

* the original claim, lhs >= |X_{i-1} - OPT| * d_{x_i}(X_{i-1}), which can
  fail because not every b in X_{i-1} - OPT is a feasible removal;
* the corrected form, lhs >= (q - (i - 1)) * d_{x_i}(X_{i-1}), which always
  holds: the exchange witnesses R give q - (i - 1) feasible removals in
  X_{i-1} - OPT, each costing at least the greedy choice.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .comatroid import Comatroid, exchange_witnesses
from .gen import DUAL_KINDS, FUNCTION_KINDS, paper_instance, random_instance
from .greedy import (GreedyTrace, TiePolicy, enumerate_traces, greedy_descent,
                     pick_extreme)
from .serialize import instance_to_dict
from .setfn import (NoSteepElement, Rational, SetFunction, bit, elements,
                    size, steepness, theorem1_bound)

REPORT_POLICIES = (TiePolicy.LEX_MIN, TiePolicy.LEX_MAX, TiePolicy.BEST, TiePolicy.WORST)


@dataclass(frozen=True)
class OptResult:
    opt_set: int
    opt_value: Fraction
    all_optima: Tuple[int, ...]


def brute_force_opt(f: SetFunction, c: Comatroid) -> OptResult:
    """Minimum of f over the circuits of c; ties listed in mask order."""
    if f.n != c.n:
        raise ValueError("ground set mismatch")
    best = min(f.values[C] for C in c.circuits)
    optima = tuple(sorted(C for C in c.circuits if f.values[C] == best))
    return OptResult(optima[0], best, optima)


@dataclass(frozen=True)
class BoundReport:
    """Greedy value against the claimed steepness bound.

    Fields that do not apply (no steep element, q = 0, zero optimum) are None.
    """

    policy: str
    q: int
    s: Optional[Fraction]
    t: Optional[Rational]
    bound: Optional[Rational]
    gr_set: int
    gr_value: Fraction
    opt_set: int
    opt_value: Fraction
    ratio: Optional[Fraction]
    theorem1_violated: Optional[bool]


def _bound_report(f, c, policy, gr: GreedyTrace, opt: OptResult) -> BoundReport:
    q = c.q
    try:
        st = steepness(f)
        s, t = st.s, st.t
    except NoSteepElement:
        s = t = None
    bound = None
    if s is not None and q >= 1 and 0 <= s <= 1:
        bound = theorem1_bound(s, q)
    gr_value = f.values[gr.final_set]
    ratio = gr_value / opt.opt_value if opt.opt_value > 0 else None
    violated = None
    if ratio is not None and bound is not None:
        violated = bool(ratio > bound)
    return BoundReport(TiePolicy(policy).value, q, s, t, bound, gr.final_set,
                       gr_value, opt.opt_set, opt.opt_value, ratio, violated)


def ratio_report(f: SetFunction, c: Comatroid,
                 policy: TiePolicy = TiePolicy.WORST) -> BoundReport:
    gr = greedy_descent(f, c, policy)
    return _bound_report(f, c, policy, gr, brute_force_opt(f, c))


@dataclass(frozen=True)
class StepAudit:
    step: int
    before: int
    chosen: int
    opt_set: int
    lhs: Fraction
    rhs1: Fraction
    rhs2: Fraction
    ineq1_holds: bool
    ineq2_holds: bool
    witnesses: Tuple[int, ...]


@dataclass(frozen=True)
class Ineq1Check:
    step: int
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class Ineq2Check:
    step: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    witnesses: Tuple[int, ...]


def _step_lhs(f: SetFunction, X: int, opt_set: int) -> Fraction:
    fX = f.values[X]
    return sum((f.values[X & ~bit(b)] - fX for b in elements(X & ~opt_set)),
               Fraction(0))


def _step(trace: GreedyTrace, i: int):
    if not 1 <= i <= len(trace.steps):
        raise IndexError(f"step {i} outside 1..{len(trace.steps)}")
    return trace.steps[i - 1]


def check_inequality1(f: SetFunction, c: Comatroid, trace: GreedyTrace,
                      i: int, opt_set: int) -> Ineq1Check:
    st = _step(trace, i)
    lhs = _step_lhs(f, st.before, opt_set)
    rhs = size(st.before & ~opt_set) * st.d_value
    return Ineq1Check(i, lhs, rhs, lhs >= rhs)


def check_inequality2(f: SetFunction, c: Comatroid, trace: GreedyTrace,
                      i: int, opt_set: int) -> Ineq2Check:
    st = _step(trace, i)
    lhs = _step_lhs(f, st.before, opt_set)
    rhs = (c.q - (i - 1)) * st.d_value
    R = exchange_witnesses(c, st.before, opt_set)
    return Ineq2Check(i, lhs, rhs, lhs >= rhs, R)


def audit_step(f, c, trace, i, opt_set) -> StepAudit:
    one = check_inequality1(f, c, trace, i, opt_set)
    two = check_inequality2(f, c, trace, i, opt_set)
    st = trace.steps[i - 1]
    return StepAudit(i, st.before, st.chosen, opt_set, one.lhs, one.rhs,
                     two.rhs, one.holds, two.holds, two.witnesses)


@dataclass
class InstanceAudit:
    opt: OptResult
    traces: List[GreedyTrace]
    reports: Dict[str, BoundReport]
    # (trace index, StepAudit) for every trace, step and optimal circuit
    steps: List[Tuple[int, StepAudit]] = field(default_factory=list)
    ineq1_violations: int = 0
    ineq2_violations: int = 0

    @property
    def theorem1_policies(self) -> List[str]:
        return [p for p, r in self.reports.items() if r.theorem1_violated]

    @property
    def has_findings(self) -> bool:
        return self.ineq1_violations > 0 or bool(self.theorem1_policies)


def audit_instance(f: SetFunction, c: Comatroid, *, cap: int = None) -> InstanceAudit:
    """Check both inequalities on every trajectory, step and optimal circuit.

    Step audits depend only on (X_{i-1}, OPT), so they are computed once per
    distinct pair and shared between trajectories.
    """
    opt = brute_force_opt(f, c)
    traces = enumerate_traces(f, c, cap=cap)
    reports = {}
    for policy in REPORT_POLICIES:
        if policy is TiePolicy.BEST or policy is TiePolicy.WORST:
            gr = pick_extreme(f, traces, worst=policy is TiePolicy.WORST)
        else:
            gr = greedy_descent(f, c, policy)
        reports[policy.value] = _bound_report(f, c, policy, gr, opt)

    result = InstanceAudit(opt, traces, reports)
    memo = {}
    for k, trace in enumerate(traces):
        for i, st in enumerate(trace.steps, start=1):
            for O in opt.all_optima:
                key = (st.before, st.chosen, O)
                if key not in memo:
                    memo[key] = audit_step(f, c, trace, i, O)
                sa = memo[key]
                result.steps.append((k, sa))
                result.ineq1_violations += not sa.ineq1_holds
                result.ineq2_violations += not sa.ineq2_holds
    return result


@dataclass(frozen=True)
class SearchConfig:
    kinds: Tuple[str, ...] = ("coverage", "pmedian", "modular")
    n_values: Tuple[int, ...] = (4, 5, 6, 7, 8)
    duals: Tuple[str, ...] = ("uniform", "partition")
    include_paper: bool = False

    def validate(self) -> None:
        if not self.kinds or any(k not in FUNCTION_KINDS for k in self.kinds):
            raise ValueError(f"kinds must be drawn from {FUNCTION_KINDS}")
        if not self.duals or any(d not in DUAL_KINDS for d in self.duals):
            raise ValueError(f"duals must be drawn from {DUAL_KINDS}")
        if not self.n_values or any(not 2 <= n <= 8 for n in self.n_values):
            raise ValueError("n values must lie in 2..8")


@dataclass(frozen=True)
class Finding:
    index: int
    label: str
    theorem1_policies: Tuple[str, ...]
    ineq1_violations: int
    ineq2_violations: int
    worst: BoundReport
    instance: dict


def corpus_entry(config: SearchConfig, seed: int, index: int):
    """Instance number ``index`` of the corpus: (label, f, c)."""
    if config.include_paper:
        if index == 0:
            return ("paper",) + paper_instance()
        index -= 1
    rng = random.Random(f"{seed}:{index}")
    kind = rng.choice(config.kinds)
    n = rng.choice(config.n_values)
    dual = rng.choice(config.duals)
    sub = rng.getrandbits(32)
    f, c = random_instance(kind, n, sub, dual=dual)
    return f"{kind}/{dual}/n={n}/seed={sub}", f, c


def _search_one(args) -> Optional[Finding]:
    config, seed, index = args
    label, f, c = corpus_entry(config, seed, index)
    audit = audit_instance(f, c)
    if not audit.has_findings:
        return None
    return Finding(index, label, tuple(audit.theorem1_policies),
                   audit.ineq1_violations, audit.ineq2_violations,
                   audit.reports[TiePolicy.WORST.value], instance_to_dict(f, c))


def search_counterexamples(config: SearchConfig, seed: int, budget: int,
                           jobs: int = 1) -> List[Finding]:
    """Audit ``budget`` seeded instances; keep those violating the claims.

    The result depends only on (config, seed, budget), never on ``jobs``.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    config.validate()
    work = [(config, seed, i) for i in range(budget)]
    if jobs <= 1 or budget < 2:
        results = map(_search_one, work)
        return [r for r in results if r is not None]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = pool.map(_search_one, work, chunksize=max(1, budget // (4 * jobs)))
        return [r for r in results if r is not None]
