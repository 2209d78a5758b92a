"""Comatroids: upward-closed dependence families with an exchange property.

A family D of subsets of U (as masks) is accepted when

* U is in D and the empty set is not,
* D is upward closed, and
* for all A, B in D with |B| < |A| some x in A - B has A - {x} in D.

Under these axioms the complements of D form the independent sets of a
matroid, circuits (minimal members of D) all share one size, the girth p,
and any member larger than p always has a removable element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

from .setfn import _check_n, bit, elements, format_set, full_mask, size

CATEGORIES = ("missing-U", "contains-empty", "upward-closure", "exchange")


class ComatroidError(ValueError):
    """Raised when a dependence family fails validation."""

    def __init__(self, category: str, witness, message: str):
        super().__init__(message)
        self.category = category
        self.witness = witness


@dataclass(frozen=True)
class Comatroid:
    n: int
    members: FrozenSet[int]
    circuits: Tuple[int, ...]
    girth: int

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def __contains__(self, X: int) -> bool:
        return X in self.members

    @property
    def q(self) -> int:
        """Number of greedy removal steps, n - p."""
        return self.n - self.girth


@dataclass(frozen=True)
class ComatroidCheck:
    """Result of :func:`validate_comatroid`; ``comatroid`` is set iff ok."""

    comatroid: Optional[Comatroid] = None
    category: Optional[str] = None
    witness: Optional[tuple] = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.comatroid is not None

    def unwrap(self) -> Comatroid:
        if self.comatroid is None:
            raise ComatroidError(self.category, self.witness, self.message)
        return self.comatroid


def _removable_mask(members, X: int) -> int:
    out = 0
    rest = X
    while rest:
        low = rest & -rest
        if X & ~low in members:
            out |= low
        rest &= rest - 1
    return out


def _minimal_members(members) -> Tuple[int, ...]:
    found = [X for X in members if _removable_mask(members, X) == 0]
    return tuple(sorted(found, key=lambda m: (size(m), m)))


def validate_comatroid(n: int, members: Iterable[int]) -> ComatroidCheck:
    _check_n(n)
    full = full_mask(n)
    members = frozenset(members)
    bad = [m for m in members if not 0 <= m <= full]
    if bad:
        raise ValueError(f"mask {min(bad)} out of range for n={n}")

    if full not in members:
        return ComatroidCheck(category="missing-U", witness=(full,),
                              message="the ground set itself is not dependent")
    if 0 in members:
        return ComatroidCheck(category="contains-empty", witness=(0,),
                              message="the empty set is listed as dependent")

    ordered = sorted(members)
    for X in ordered:
        for x in range(1, n + 1):
            Y = X | bit(x)
            if Y != X and Y not in members:
                return ComatroidCheck(
                    category="upward-closure", witness=(X, Y),
                    message=f"{format_set(X)} is dependent but its superset "
                            f"{format_set(Y)} is not")

    # Exchange for (A, B) holds iff some removable element of A lies outside B.
    by_size = {}
    for m in ordered:
        by_size.setdefault(size(m), []).append(m)
    sizes = sorted(by_size)
    for A in ordered:
        rem = _removable_mask(members, A)
        k = size(A)
        for s in sizes:
            if s >= k:
                break
            for B in by_size[s]:
                if rem & ~B == 0:
                    return ComatroidCheck(
                        category="exchange", witness=(A, B),
                        message=f"no element of {format_set(A & ~B)} can be "
                                f"dropped from {format_set(A)} while staying "
                                f"dependent (against {format_set(B)})")

    circ = _minimal_members(members)
    return ComatroidCheck(Comatroid(n, members, circ, size(circ[0])))


def make_comatroid(n: int, sets: Iterable[Iterable[int]]) -> Comatroid:
    """Validate a family given as element lists; raise ComatroidError on failure."""
    masks = []
    for s in sets:
        m = 0
        for x in s:
            if not 1 <= x <= n:
                raise ValueError(f"element {x} outside 1..{n}")
            m |= bit(x)
        masks.append(m)
    return validate_comatroid(n, masks).unwrap()


def circuits(c: Comatroid) -> Tuple[int, ...]:
    """Inclusion-minimal members, sorted by (size, mask)."""
    return c.circuits


def removable(c: Comatroid, X: int) -> Tuple[int, ...]:
    """Elements x of X with X - {x} still dependent."""
    if X not in c.members:
        raise ValueError(f"{format_set(X)} is not in the dependence family")
    return elements(_removable_mask(c.members, X))


def exchange_witnesses(c: Comatroid, A: int, B: int) -> Tuple[int, ...]:
    """|A| - |B| distinct elements of A - B that can be dropped one by one.

    Removing the returned elements from A in order keeps every intermediate
    set dependent.  The smallest feasible label is taken at each step.
    """
    if A not in c.members or B not in c.members:
        raise ValueError("both sets must be dependent")
    if size(B) > size(A):
        raise ValueError("B must not be larger than A")
    out = []
    cur = A
    for _ in range(size(A) - size(B)):
        choices = _removable_mask(c.members, cur) & ~B
        if not choices:
            raise ComatroidError(
                "exchange", (cur, B),
                f"exchange fails for {format_set(cur)} against {format_set(B)}")
        low = choices & -choices
        out.append(low.bit_length())
        cur &= ~low
    return tuple(out)


@dataclass(frozen=True)
class MatroidSpec:
    """Uniform or partition matroid on {1..n}."""

    n: int
    kind: str
    rank: Optional[int] = None
    blocks: Optional[Tuple[Tuple[int, ...], ...]] = None
    capacities: Optional[Tuple[int, ...]] = None

    @classmethod
    def uniform(cls, n: int, k: int) -> "MatroidSpec":
        return cls(n, "uniform", rank=k)

    @classmethod
    def partition(cls, n: int, blocks: Sequence[Sequence[int]],
                  capacities: Sequence[int]) -> "MatroidSpec":
        return cls(n, "partition", blocks=tuple(tuple(b) for b in blocks),
                   capacities=tuple(capacities))

    def validate(self) -> None:
        _check_n(self.n)
        if self.kind == "uniform":
            if not isinstance(self.rank, int) or not 0 <= self.rank <= self.n:
                raise ValueError(f"uniform rank must be in 0..{self.n}, got {self.rank!r}")
        elif self.kind == "partition":
            if self.blocks is None or self.capacities is None:
                raise ValueError("partition matroid needs blocks and capacities")
            if len(self.blocks) != len(self.capacities):
                raise ValueError("one capacity per block is required")
            seen = sorted(x for b in self.blocks for x in b)
            if seen != list(range(1, self.n + 1)):
                raise ValueError(f"blocks must partition 1..{self.n}")
            if any(not b for b in self.blocks):
                raise ValueError("blocks must be nonempty")
            if any(not isinstance(k, int) or k < 0 for k in self.capacities):
                raise ValueError("capacities must be nonnegative integers")
        else:
            raise ValueError(f"unknown matroid kind {self.kind!r}")

    def matroid_rank(self) -> int:
        if self.kind == "uniform":
            return self.rank
        return sum(min(k, len(b)) for b, k in zip(self.blocks, self.capacities))

    def independent(self, I: int) -> bool:
        if self.kind == "uniform":
            return size(I) <= self.rank
        for b, k in zip(self.blocks, self.capacities):
            if sum(1 for x in b if I & bit(x)) > k:
                return False
        return True


def from_matroid_dual(spec: MatroidSpec) -> Comatroid:
    """Family of sets whose complement is independent in ``spec``.

    The matroid must have rank < n; otherwise the empty set would be
    dependent.
    """
    spec.validate()
    if spec.matroid_rank() >= spec.n:
        raise ValueError("matroid rank must be below n so that the girth is positive")
    full = full_mask(spec.n)
    members = [A for A in range(full + 1) if spec.independent(full & ~A)]
    return validate_comatroid(spec.n, members).unwrap()
