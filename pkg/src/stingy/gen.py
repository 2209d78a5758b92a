"""Instance generators.

Functions come from three supermodular, nonincreasing families with
f(U) = 0 (weighted coverage complements, p-median costs, modular weights);
comatroids come from duals of uniform and partition matroids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .comatroid import Comatroid, MatroidSpec, from_matroid_dual, make_comatroid
from .setfn import SetFunction, elements, subset, validate_function

FUNCTION_KINDS = ("coverage", "pmedian", "modular")
DUAL_KINDS = ("uniform", "partition")
RETRY_CAP = 100

PAPER_VALUES = {
    (): 6,
    (1,): 4, (2,): 5, (3,): 4, (4,): 4,
    (3, 4): 2, (1, 2): 3, (2, 4): 3, (2, 3): 3, (1, 4): 2, (1, 3): 2,
    (1, 2, 3): 1, (2, 3, 4): 1, (1, 3, 4): 1, (1, 2, 4): 1,
    (1, 2, 3, 4): 0,
}

PAPER_DEPENDENT = [
    (1, 2, 3, 4),
    (2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3),
    (1, 2), (1, 4), (2, 3), (3, 4),
]


def paper_instance() -> Tuple[SetFunction, Comatroid]:
    """Four-element counterexample on which greedy can end at 3 while the optimum is 2."""
    vals = [0] * 16
    for s, v in PAPER_VALUES.items():
        vals[subset(*s)] = v
    return SetFunction(4, tuple(vals)), make_comatroid(4, PAPER_DEPENDENT)


def modular_instance(weights: Sequence) -> SetFunction:
    """f(X) = total weight of the elements outside X."""
    w = [Fraction(v) for v in weights]
    if any(v < 0 for v in w):
        raise ValueError("weights must be nonnegative")
    return SetFunction.from_callable(
        len(w), lambda X: sum((w[x - 1] for x in range(1, len(w) + 1)
                               if not X >> (x - 1) & 1), Fraction(0)))


@dataclass(frozen=True)
class CoverageSpec:
    """Element i (1-based) covers ``covers[i-1]``, a set of item indices < m."""

    m: int
    covers: Tuple[Tuple[int, ...], ...]
    weights: Tuple[Fraction, ...]

    def validate(self) -> None:
        if self.m < 0 or len(self.weights) != self.m:
            raise ValueError("need one weight per item")
        if any(Fraction(w) < 0 for w in self.weights):
            raise ValueError("item weights must be nonnegative")
        covered = set()
        for items in self.covers:
            for j in items:
                if not 0 <= j < self.m:
                    raise ValueError(f"item index {j} outside 0..{self.m - 1}")
                covered.add(j)
        for j, w in enumerate(self.weights):
            if Fraction(w) > 0 and j not in covered:
                raise ValueError(f"item {j} has positive weight but no element covers it")


def coverage_instance(spec: CoverageSpec) -> SetFunction:
    """f(X) = g(U) - g(X) where g is the weight covered by X."""
    spec.validate()
    n = len(spec.covers)
    w = [Fraction(v) for v in spec.weights]
    cover_bits = [sum(1 << j for j in set(items)) for items in spec.covers]

    def covered(X):
        bits = 0
        for x in elements(X):
            bits |= cover_bits[x - 1]
        return sum((w[j] for j in range(spec.m) if bits >> j & 1), Fraction(0))

    total = covered((1 << n) - 1)
    return SetFunction.from_callable(n, lambda X: total - covered(X))


@dataclass(frozen=True)
class PMedianSpec:
    """``cost[i][j]`` is the cost of serving client j from facility i (0-based)."""

    cost: Tuple[Tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cost)

    def validate(self) -> None:
        n = self.n
        if any(len(row) != n for row in self.cost):
            raise ValueError("cost matrix must be square")
        for i, row in enumerate(self.cost):
            if Fraction(row[i]) != 0:
                raise ValueError("cost matrix must have a zero diagonal")
            if any(Fraction(v) < 0 for v in row):
                raise ValueError("costs must be nonnegative")


def pmedian_instance(spec: PMedianSpec) -> SetFunction:
    """f(X) = sum over clients of the cheapest open facility in X.

    The empty set gets sum_j max_i cost(i, j), the smallest completion that
    keeps f nonincreasing.
    """
    spec.validate()
    n = spec.n
    c = [[Fraction(v) for v in row] for row in spec.cost]
    empty = sum((max(c[i][j] for i in range(n)) for j in range(n)), Fraction(0))

    def value(X):
        if X == 0:
            return empty
        open_ = [x - 1 for x in elements(X)]
        return sum((min(c[i][j] for i in open_) for j in range(n)), Fraction(0))

    return SetFunction.from_callable(n, value)


def _rational(rng: random.Random, hi: int = 40) -> Fraction:
    return Fraction(rng.randint(1, hi), rng.choice((1, 1, 2, 3, 4)))


def random_function(kind: str, n: int, rng: random.Random) -> SetFunction:
    if kind == "modular":
        return modular_instance([_rational(rng) for _ in range(n)])
    if kind == "coverage":
        m = rng.randint(n, 3 * n)
        covers = [tuple(sorted(rng.sample(range(m), rng.randint(1, max(1, m // 2)))))
                  for _ in range(n)]
        covered = {j for items in covers for j in items}
        weights = tuple(_rational(rng) if j in covered else Fraction(0) for j in range(m))
        return coverage_instance(CoverageSpec(m, tuple(covers), weights))
    if kind == "pmedian":
        cost = tuple(tuple(Fraction(0) if i == j else _rational(rng) for j in range(n))
                     for i in range(n))
        return pmedian_instance(PMedianSpec(cost))
    raise ValueError(f"unknown function kind {kind!r}; expected one of {FUNCTION_KINDS}")


def random_matroid(dual: str, n: int, rng: random.Random) -> MatroidSpec:
    if dual == "uniform":
        return MatroidSpec.uniform(n, rng.randint(0, n - 1))
    if dual == "partition":
        while True:
            k = rng.randint(1, n)
            labels = list(range(1, n + 1))
            rng.shuffle(labels)
            cuts = sorted(rng.sample(range(1, n), k - 1))
            blocks = [sorted(labels[a:b]) for a, b in zip([0] + cuts, cuts + [n])]
            caps = [rng.randint(0, len(b)) for b in blocks]
            spec = MatroidSpec.partition(n, blocks, caps)
            if spec.matroid_rank() < n:
                return spec
    raise ValueError(f"unknown dual kind {dual!r}; expected one of {DUAL_KINDS}")


def random_instance(kind: str, n: int, seed, dual: str = None
                    ) -> Tuple[SetFunction, Comatroid]:
    """Seeded random (f, comatroid); ``dual`` defaults to a random choice."""
    if kind not in FUNCTION_KINDS:
        raise ValueError(f"unknown function kind {kind!r}; expected one of {FUNCTION_KINDS}")
    if dual is not None and dual not in DUAL_KINDS:
        raise ValueError(f"unknown dual kind {dual!r}; expected one of {DUAL_KINDS}")
    if not 2 <= n <= 8:
        raise ValueError("random instances need 2 <= n <= 8")
    rng = random.Random(f"{kind}:{n}:{seed}:{dual}")
    for _ in range(RETRY_CAP):
        f = random_function(kind, n, rng)
        c = from_matroid_dual(random_matroid(dual or rng.choice(DUAL_KINDS), n, rng))
        if validate_function(f).ok:
            return f, c
    raise RuntimeError(f"no valid {kind} instance after {RETRY_CAP} draws")
