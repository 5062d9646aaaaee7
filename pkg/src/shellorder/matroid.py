"""Matroid and Coxeter-matroid axioms.

Basis exchange, the quasi-exchange weakening, unique-maximum tests, the
full symmetric-group maximality sweep, shifts, and underlying flag
matroids.  Verdicts carry replayable counterexample witnesses.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .bruhat import OrderKind, leq, prefix_projection
from .core import FlagTuple, KSubset, PureComplex, canonical_key


@dataclass(frozen=True)
class ExchangeWitness:
    """A failed exchange: no partner in second for ``element`` of first."""

    first: KSubset
    second: KSubset
    element: int


@dataclass(frozen=True)
class MatroidVerdict:
    holds: bool
    witness: Optional[ExchangeWitness] = None

    def __post_init__(self) -> None:
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when the axiom fails")

    def __bool__(self) -> bool:
        return self.holds


def _sorted_ksubsets(facets: Iterable) -> list[KSubset]:
    elems = sorted(set(facets), key=canonical_key)
    if elems and not isinstance(elems[0], KSubset):
        raise TypeError("expected KSubset facets")
    return elems


def is_matroid(facets: Iterable[KSubset]) -> MatroidVerdict:
    """Basis exchange: every a in A\\B trades for some b in B\\A inside the family."""
    elems = _sorted_ksubsets(facets)
    masks = {x.mask for x in elems}
    for a_set in elems:
        for b_set in elems:
            cut = a_set.mask & ~b_set.mask
            if not cut:
                continue
            swap_in = b_set.mask & ~a_set.mask
            for a in a_set.members:
                abit = 1 << (a - 1)
                if not cut & abit:
                    continue
                base = a_set.mask ^ abit
                if not any(
                    base | (1 << (b - 1)) in masks
                    for b in b_set.members
                    if swap_in >> (b - 1) & 1
                ):
                    return MatroidVerdict(False, ExchangeWitness(a_set, b_set, a))
    return MatroidVerdict(True)


def has_quasi_exchange(facets: Iterable[KSubset]) -> MatroidVerdict:
    """Exchange demanded only for i in x\\y exceeding max(y\\x)."""
    elems = _sorted_ksubsets(facets)
    masks = {x.mask for x in elems}
    for x in elems:
        for y in elems:
            gain = y.mask & ~x.mask
            if not gain:
                continue
            top = gain.bit_length()  # max(y\x), 1-indexed
            for i in x.members:
                if i <= top or y.mask >> (i - 1) & 1:
                    continue
                base = x.mask ^ (1 << (i - 1))
                if not any(
                    base | (1 << (j - 1)) in masks
                    for j in y.members
                    if gain >> (j - 1) & 1
                ):
                    return MatroidVerdict(False, ExchangeWitness(x, y, i))
    return MatroidVerdict(True)


def unique_maximum(elements: Iterable, kind: OrderKind):
    """The greatest element of the set if one exists, else None."""
    elems = sorted(set(elements), key=canonical_key)
    if not elems:
        raise ValueError("empty set has no maximum")
    candidate = elems[0]
    for x in elems[1:]:
        if leq(candidate, x, kind):
            candidate = x
    if all(leq(x, candidate, kind) for x in elems):
        return candidate
    return None


def _dominates(p: tuple, q: tuple) -> bool:
    return all(a <= b for a, b in zip(p, q))


def _has_unique_max(profiles: list[tuple]) -> bool:
    # One-pass candidate scan; valid because a greatest element, when it
    # exists, absorbs the candidate and survives every later comparison.
    candidate = profiles[0]
    for p in profiles[1:]:
        if _dominates(candidate, p):
            candidate = p
    return all(_dominates(p, candidate) for p in profiles)


def _conf_profile(values: tuple[int, ...]) -> tuple:
    flat: list[int] = []
    prefix: list[int] = []
    for v in values:
        bisect.insort(prefix, v)
        flat.extend(prefix)
    return tuple(flat)


def _gale_profile(values: tuple[int, ...]) -> tuple:
    return tuple(sorted(values))


def is_coxeter_matroid(elements: Iterable) -> bool:
    """Maximality property: every w-shifted image has a unique maximum.

    Accepts a set of FlagTuples (configuration order, image is entrywise
    application of w) or of KSubsets (Gale order, image is the sorted
    value set).  Sweeps all of S_n, so n <= 8 is enforced.
    """
    elems = sorted(set(elements), key=canonical_key)
    if not elems:
        raise ValueError("empty set cannot be tested for maximality")
    n = elems[0].n
    if n > 8:
        raise ValueError(f"full S_n sweep requires n <= 8, got n = {n}")
    if isinstance(elems[0], KSubset):
        points = [x.members for x in elems]
        profile = _gale_profile
    elif isinstance(elems[0], FlagTuple):
        points = [x.entries for x in elems]
        profile = _conf_profile
    else:
        raise TypeError("expected KSubset or FlagTuple elements")
    for w in itertools.permutations(range(1, n + 1)):
        images = [profile(tuple(w[v - 1] for v in pt)) for pt in points]
        if not _has_unique_max(images):
            return False
    return True


def canonical_completion(x: KSubset) -> FlagTuple:
    """x as a permutation: sorted members followed by the sorted complement."""
    tail = KSubset.from_mask(x.n, ~x.mask & (1 << x.n) - 1)
    return FlagTuple(x.n, x.members + tail.members)


def shift(elements: Iterable, i: int) -> PureComplex:
    """The family of i-th prefix projections.

    KSubsets are first completed to permutations (ascending tail), so a
    rank-k family may be shifted to any rank i <= n.
    """
    elems = list(elements)
    if not elems:
        raise ValueError("cannot shift an empty family")
    if isinstance(elems[0], KSubset):
        tuples = [canonical_completion(x) for x in elems]
    else:
        tuples = elems
    if not 1 <= i <= len(tuples[0]):
        raise ValueError(f"shift rank {i} not within [1, {len(tuples[0])}]")
    return PureComplex.of(prefix_projection(x, i) for x in tuples)


def underlying_flag_matroid(facets: Iterable[KSubset]) -> set[FlagTuple]:
    """Union over the family of right cosets of the parabolic subgroup
    fixing the first k positions setwise: all permutations whose k-prefix
    uses exactly the members of some facet."""
    out: set[FlagTuple] = set()
    for x in set(facets):
        tail = KSubset.from_mask(x.n, ~x.mask & (1 << x.n) - 1)
        for head in itertools.permutations(x.members):
            for back in itertools.permutations(tail.members):
                out.add(FlagTuple(x.n, head + back))
    return out
