"""Exact set functions on a small ground set.

Subsets of U = {1, ..., n} are plain ``int`` bitmasks: bit (i - 1) set means
element i is present.  A :class:`SetFunction` stores one exact
:class:`~fractions.Fraction` per mask, so every quantity derived from it
(marginals, steepness, the greedy bound) is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Tuple, Union

MAX_N = 24

INFINITE = math.inf

Rational = Union[Fraction, float]  # float only ever carries INFINITE


def bit(x: int) -> int:
    return 1 << (x - 1)


def subset(*elements: int) -> int:
    """Mask holding the given 1-based element labels."""
    mask = 0
    for x in elements:
        if x < 1:
            raise ValueError(f"element labels start at 1, got {x}")
        mask |= bit(x)
    return mask


def mask_of(elements: Iterable[int]) -> int:
    return subset(*elements)


def elements(mask: int) -> Tuple[int, ...]:
    """Sorted element labels of ``mask``."""
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def format_set(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def _check_n(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise ValueError(f"ground set size must be in 1..{MAX_N}, got {n!r}")


class NoSteepElement(ValueError):
    """No element x has f({x}) < f(empty set), so steepness is undefined."""


@dataclass(frozen=True)
class SetFunction:
    """Value table of f over all 2**n subsets, indexed by mask."""

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        _check_n(self.n)
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(
                f"expected {1 << self.n} values for n={self.n}, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[int], object]) -> "SetFunction":
        _check_n(n)
        return cls(n, tuple(Fraction(fn(m)) for m in range(1 << n)))

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def __call__(self, mask: int) -> Fraction:
        return evaluate(self, mask)

    def scaled(self, c) -> "SetFunction":
        c = Fraction(c)
        return SetFunction(self.n, tuple(c * v for v in self.values))


def evaluate(f: SetFunction, X: int) -> Fraction:
    if not 0 <= X <= f.full:
        raise ValueError(f"mask {X} out of range for n={f.n}")
    return f.values[X]


def marginal(f: SetFunction, X: int, x: int) -> Fraction:
    """d_x(X) = f(X - {x}) - f(X), the increase in f caused by removing x."""
    if not 1 <= x <= f.n or not X & bit(x):
        raise ValueError(f"element {x} is not in {format_set(X)}")
    return evaluate(f, X & ~bit(x)) - evaluate(f, X)


@dataclass(frozen=True)
class FunctionVerdict:
    """Outcome of :func:`validate_function`.

    Each failing property carries a witness: ``(smaller, larger)`` masks for
    monotonicity, ``(X, Y, x)`` for supermodularity and the offending mask for
    normalization.
    """

    nonincreasing: bool
    supermodular: bool
    normalized: bool
    nonincreasing_witness: Optional[Tuple[int, int]] = None
    supermodular_witness: Optional[Tuple[int, int, int]] = None
    normalized_witness: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.nonincreasing and self.supermodular and self.normalized

    def failures(self) -> list:
        out = []
        if not self.nonincreasing:
            a, b = self.nonincreasing_witness
            out.append(("nonincreasing",
                        f"f({format_set(a)}) < f({format_set(b)})"))
        if not self.supermodular:
            X, Y, x = self.supermodular_witness
            out.append(("supermodular",
                        f"adding {x} to {format_set(X)} gains more than adding it to {format_set(Y)}"))
        if not self.normalized:
            out.append(("normalized",
                        f"bad value at {format_set(self.normalized_witness)}"))
        return out


def validate_function(f: SetFunction) -> FunctionVerdict:
    """Check monotonicity, supermodularity and normalization of ``f``.

    Supermodularity uses the local form
    f(X+x) - f(X) <= f(X+x+y) - f(X+y) for all X and distinct x, y outside X,
    which is equivalent to the inequality over all pairs X <= Y.
    """
    vals = f.values
    n = f.n
    full = f.full

    mono_w = None
    for X in range(1, full + 1):
        for x in elements(X):
            if vals[X & ~bit(x)] < vals[X]:
                mono_w = (X & ~bit(x), X)
                break
        if mono_w is not None:
            break

    super_w = None
    for X in range(full + 1):
        outside = [x for x in range(1, n + 1) if not X & bit(x)]
        for x in outside:
            gain = vals[X | bit(x)] - vals[X]
            for y in outside:
                if y == x:
                    continue
                Y = X | bit(y)
                if gain > vals[Y | bit(x)] - vals[Y]:
                    super_w = (X, Y, x)
                    break
            if super_w is not None:
                break
        if super_w is not None:
            break

    norm_w = None
    if vals[full] != 0:
        norm_w = full
    else:
        for X, v in enumerate(vals):
            if v < 0:
                norm_w = X
                break

    return FunctionVerdict(
        nonincreasing=mono_w is None,
        supermodular=super_w is None,
        normalized=norm_w is None,
        nonincreasing_witness=mono_w,
        supermodular_witness=super_w,
        normalized_witness=norm_w,
    )


@dataclass(frozen=True)
class SteepnessReport:
    s: Fraction
    t: Rational  # INFINITE when s == 1
    argmax_element: int


def steepness(f: SetFunction) -> SteepnessReport:
    """Largest relative drop between an element's first and last removal gain.

    For each x with f({x}) < f(empty), compares the gain of adding x to the
    empty set with the gain of adding it last (to U - {x}).
    """
    empty = f.values[0]
    full = f.full
    best = None
    best_x = None
    for x in range(1, f.n + 1):
        first = empty - f.values[bit(x)]
        if first <= 0:
            continue
        last = f.values[full & ~bit(x)] - f.values[full]
        ratio = (first - last) / first
        if best is None or ratio > best:
            best, best_x = ratio, x
    if best is None:
        raise NoSteepElement("no element x with f({x}) < f(empty set)")
    t = INFINITE if best == 1 else best / (1 - best)
    return SteepnessReport(best, t, best_x)


def theorem1_bound(s, q: int) -> Rational:
    """(1/t)((1 + t/q)^q - 1) with t = s/(1 - s), exact.

    Returns 1 at s = 0 (the t -> 0 limit) and INFINITE at s = 1.
    """
    s = Fraction(s)
    if not 0 <= s <= 1:
        raise ValueError(f"steepness must lie in [0, 1], got {s}")
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"bound needs at least one greedy step, got q={q!r}")
    if s == 1:
        return INFINITE
    if s == 0:
        return Fraction(1)
    t = s / (1 - s)
    return ((1 + t / q) ** q - 1) / t

