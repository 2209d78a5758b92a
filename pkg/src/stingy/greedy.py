"""Greedy descent (reverse greedy / stingy) over comatroid circuits.

Starting from U, each step drops the element whose removal keeps the set
dependent and raises f the least.  After q = n - p steps a circuit remains.
Ties are resolved by a :class:`TiePolicy`; ``best``/``worst`` look at every
tie resolution and keep the trajectory ending at the lowest/highest value.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .comatroid import Comatroid, _removable_mask
from .setfn import SetFunction, bit, elements, validate_function

DEFAULT_TRACE_CAP = 10 ** 6
TRACE_CAP_ENV = "STINGY_TRACE_CAP"


class TiePolicy(str, enum.Enum):
    LEX_MIN = "lex-min"
    LEX_MAX = "lex-max"
    BEST = "best"
    WORST = "worst"
    ALL = "all"


class TraceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Step:
    before: int
    chosen: int
    d_value: Fraction
    candidates: Tuple[int, ...]


@dataclass(frozen=True)
class GreedyTrace:
    steps: Tuple[Step, ...]
    final_set: int

    @property
    def sequence(self) -> Tuple[int, ...]:
        return tuple(s.chosen for s in self.steps)

    def sets(self) -> List[int]:
        """X_0, X_1, ..., X_q."""
        return [s.before for s in self.steps] + [self.final_set]


def trace_cap() -> int:
    raw = os.environ.get(TRACE_CAP_ENV)
    return int(raw) if raw else DEFAULT_TRACE_CAP


def _check_inputs(f: SetFunction, c: Comatroid, check: bool) -> None:
    if f.n != c.n:
        raise ValueError(f"ground set mismatch: f has n={f.n}, comatroid has n={c.n}")
    if check:
        verdict = validate_function(f)
        if not verdict.ok:
            raise ValueError("set function failed validation: "
                             + "; ".join(f"{k}: {m}" for k, m in verdict.failures()))


def _minimizers(f: SetFunction, c: Comatroid, X: int):
    """Feasible candidates of X, the minimum marginal and the elements attaining it."""
    cand = elements(_removable_mask(c.members, X))
    if not cand:
        raise RuntimeError(f"greedy stalled: nothing removable from mask {X}")
    fX = f.values[X]
    d = {x: f.values[X & ~bit(x)] - fX for x in cand}
    low = min(d.values())
    return cand, low, [x for x in cand if d[x] == low]


def enumerate_traces(f: SetFunction, c: Comatroid, *, check: bool = False,
                     cap: int = None) -> List[GreedyTrace]:
    """Every trajectory reachable by resolving ties in every possible way.

    Traces come back sorted by their removal sequence.
    """
    _check_inputs(f, c, check)
    cap = trace_cap() if cap is None else cap
    q = c.q
    out: List[GreedyTrace] = []
    cache = {}

    def expand(X):
        if X not in cache:
            cache[X] = _minimizers(f, c, X)
        return cache[X]

    def walk(X, steps):
        if len(steps) == q:
            if len(out) >= cap:
                raise TraceLimitExceeded(f"more than {cap} greedy trajectories")
            out.append(GreedyTrace(tuple(steps), X))
            return
        cand, low, ties = expand(X)
        for x in ties:
            steps.append(Step(X, x, low, cand))
            walk(X & ~bit(x), steps)
            steps.pop()

    walk(c.full, [])
    return out


def greedy_descent(f: SetFunction, c: Comatroid,
                   policy: TiePolicy = TiePolicy.LEX_MIN, *,
                   check: bool = False, cap: int = None) -> GreedyTrace:
    policy = TiePolicy(policy)
    if policy is TiePolicy.ALL:
        raise ValueError("policy 'all' returns many traces; use enumerate_traces")
    _check_inputs(f, c, check)

    if policy in (TiePolicy.BEST, TiePolicy.WORST):
        traces = enumerate_traces(f, c, cap=cap)
        return pick_extreme(f, traces, worst=policy is TiePolicy.WORST)

    X = c.full
    steps = []
    for _ in range(c.q):
        cand, low, ties = _minimizers(f, c, X)
        x = ties[0] if policy is TiePolicy.LEX_MIN else ties[-1]
        steps.append(Step(X, x, low, cand))
        X &= ~bit(x)
    return GreedyTrace(tuple(steps), X)


def pick_extreme(f: SetFunction, traces, worst: bool) -> GreedyTrace:
    """Lowest (or highest) endpoint value; the earliest trace wins ties."""
    target = (max if worst else min)(f.values[t.final_set] for t in traces)
    return next(t for t in traces if f.values[t.final_set] == target)
