"""JSON instance and report files.

Rationals are always written as strings (``"3"`` or ``"3/2"``), never as
floats, so files round-trip bit-exactly.  An instance file looks like::

    {
      "n": 4,
      "f": ["6", "4", "5", ...],          # 2**n values, indexed by mask
      "dependent_sets": [[1, 2], ...]     # or "matroid_dual": {...}
    }

where ``matroid_dual`` is ``{"kind": "uniform", "rank": k}`` or
``{"kind": "partition", "blocks": [[1, 3], [2, 4]], "capacities": [1, 1]}``.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from fractions import Fraction
from typing import Tuple

from .comatroid import Comatroid, MatroidSpec, from_matroid_dual, validate_comatroid
from .setfn import MAX_N, SetFunction, elements, validate_function

_RATIONAL = re.compile(r"-?[0-9]+(/[0-9]+)?")


class InstanceError(ValueError):
    """Bad instance input.

    ``category`` is ``syntax``, ``length``, ``dependence`` (bad matroid spec),
    a comatroid failure (``missing-U``, ``contains-empty``, ``upward-closure``,
    ``exchange``) or a function failure (``nonincreasing``, ``supermodular``,
    ``normalized``).  ``witness`` holds the offending masks, if any.
    """

    def __init__(self, category: str, message: str, witness=None):
        super().__init__(message)
        self.category = category
        self.witness = witness


def format_rational(v) -> str:
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(raw) -> Fraction:
    if isinstance(raw, bool):
        raise InstanceError("syntax", f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if not isinstance(raw, str) or not _RATIONAL.fullmatch(raw):
        raise InstanceError("syntax", f"not an integer or p/q string: {raw!r}")
    try:
        return Fraction(raw)
    except ZeroDivisionError:
        raise InstanceError("syntax", f"zero denominator in {raw!r}") from None


def _opt(v):
    return None if v is None else format_rational(v)


def _set(mask: int) -> list:
    return list(elements(mask))


def instance_to_dict(f: SetFunction, c: Comatroid) -> dict:
    return {
        "n": f.n,
        "f": [format_rational(v) for v in f.values],
        "dependent_sets": [_set(m) for m in sorted(c.members, key=lambda m: (-len(elements(m)), m))],
    }


def emit_instance(f: SetFunction, c: Comatroid) -> str:
    return json.dumps(instance_to_dict(f, c), indent=2) + "\n"


def instance_digest(f: SetFunction, c: Comatroid) -> str:
    canon = json.dumps(instance_to_dict(f, c), separators=(",", ":"))
    return hashlib.sha256(canon.encode()).hexdigest()


def _matroid_spec(n: int, raw) -> MatroidSpec:
    if not isinstance(raw, dict):
        raise InstanceError("syntax", "matroid_dual must be an object")
    kind = raw.get("kind")
    try:
        if kind == "uniform":
            spec = MatroidSpec.uniform(n, raw["rank"])
        elif kind == "partition":
            spec = MatroidSpec.partition(n, raw["blocks"], raw["capacities"])
        else:
            raise InstanceError("syntax", f"unknown matroid kind {kind!r}")
        spec.validate()
    except KeyError as exc:
        raise InstanceError("syntax", f"matroid_dual is missing {exc}") from None
    except TypeError as exc:
        raise InstanceError("syntax", f"bad matroid_dual: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, InstanceError):
            raise
        raise InstanceError("dependence", str(exc)) from None
    return spec


def instance_from_dict(data, check_function: bool = True) -> Tuple[SetFunction, Comatroid]:
    if not isinstance(data, dict):
        raise InstanceError("syntax", "instance must be a JSON object")
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise InstanceError("syntax", f"n must be an integer in 1..{MAX_N}, got {n!r}")
    raw = data.get("f")
    if not isinstance(raw, list):
        raise InstanceError("syntax", "f must be a list of values")
    if len(raw) != 1 << n:
        raise InstanceError("length", f"f has {len(raw)} values, expected {1 << n} for n={n}")
    f = SetFunction(n, tuple(parse_rational(v) for v in raw))

    has_sets = "dependent_sets" in data
    has_dual = "matroid_dual" in data
    if has_sets == has_dual:
        raise InstanceError("syntax", "give exactly one of dependent_sets, matroid_dual")
    if has_dual:
        spec = _matroid_spec(n, data["matroid_dual"])
        try:
            c = from_matroid_dual(spec)
        except ValueError as exc:
            raise InstanceError("dependence", str(exc)) from None
    else:
        sets = data["dependent_sets"]
        if not isinstance(sets, list):
            raise InstanceError("syntax", "dependent_sets must be a list of element lists")
        masks = []
        for s in sets:
            if not isinstance(s, list) or any(
                    isinstance(x, bool) or not isinstance(x, int) or not 1 <= x <= n for x in s):
                raise InstanceError("syntax", f"bad dependent set {s!r}; labels run 1..{n}")
            m = 0
            for x in s:
                m |= 1 << (x - 1)
            masks.append(m)
        check = validate_comatroid(n, masks)
        if not check.ok:
            raise InstanceError(check.category, f"{check.category}: {check.message}",
                                witness=check.witness)
        c = check.comatroid

    if check_function:
        verdict = validate_function(f)
        if not verdict.ok:
            name, msg = verdict.failures()[0]
            raise InstanceError(name, f"{name}: {msg}",
                                witness=getattr(verdict, f"{name}_witness"))
    return f, c


def parse_instance(text: str, check_function: bool = True) -> Tuple[SetFunction, Comatroid]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError("syntax", f"malformed JSON: {exc}") from None
    return instance_from_dict(data, check_function)


def report_to_dict(r) -> dict:
    return {
        "policy": r.policy,
        "q": r.q,
        "s": _opt(r.s),
        "t": _opt(r.t),
        "bound": _opt(r.bound),
        "gr_set": _set(r.gr_set),
        "gr_value": format_rational(r.gr_value),
        "opt_set": _set(r.opt_set),
        "opt_value": format_rational(r.opt_value),
        "ratio": _opt(r.ratio),
        "theorem1_violated": r.theorem1_violated,
    }


def trace_to_dict(f: SetFunction, t) -> dict:
    return {
        "sequence": list(t.sequence),
        "steps": [{"before": _set(s.before), "chosen": s.chosen,
                   "d": format_rational(s.d_value), "candidates": list(s.candidates)}
                  for s in t.steps],
        "final_set": _set(t.final_set),
        "final_value": format_rational(f.values[t.final_set]),
    }


def step_audit_to_dict(trace_index: int, a) -> dict:
    return {
        "trace": trace_index,
        "step": a.step,
        "before": _set(a.before),
        "chosen": a.chosen,
        "opt_set": _set(a.opt_set),
        "lhs": format_rational(a.lhs),
        "rhs1": format_rational(a.rhs1),
        "rhs2": format_rational(a.rhs2),
        "ineq1_holds": a.ineq1_holds,
        "ineq2_holds": a.ineq2_holds,
        "witnesses": list(a.witnesses),
    }


def finding_to_dict(x) -> dict:
    return {
        "index": x.index,
        "label": x.label,
        "theorem1_policies": list(x.theorem1_policies),
        "ineq1_violations": x.ineq1_violations,
        "ineq2_violations": x.ineq2_violations,
        "worst": report_to_dict(x.worst),
        "instance": x.instance,
    }


def findings_to_json(findings) -> str:
    return json.dumps([finding_to_dict(x) for x in findings], indent=2) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
