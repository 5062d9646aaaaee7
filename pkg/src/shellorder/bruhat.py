"""Order-theoretic layer.

Block sorting into parabolic quotients, prefix projections, the three
orders used downstream (Gale order on sorted k-subsets, the configuration
order on injective tuples, the full permutation order via the tableau
criterion), induced cover relations, order-ideal tests, and
linear-extension verification and enumeration.

The order kind is always an explicit parameter; nothing is inferred from
whether a tuple happens to be sorted.
"""

from __future__ import annotations

import bisect
from enum import Enum
from typing import Iterable, Iterator

from .core import (
    FacetSequence,
    FlagTuple,
    KSubset,
    all_flag_tuples,
    all_ksubsets,
    all_permutations,
    canonical_key,
)


class OrderKind(Enum):
    GALE = "gale"  # sorted k-subsets, componentwise domination
    CONF = "conf"  # injective k-tuples, all sorted prefixes dominate
    PERM = "perm"  # full permutations (CONF with k = n)


DescentSet = frozenset  # positions i in [n-1]


def _require_permutation(w: FlagTuple, name: str = "w") -> None:
    if not w.is_permutation():
        raise ValueError(f"{name} must be a full permutation of [{w.n}]")


def sort_blocks(w: FlagTuple, positions: Iterable[int]) -> FlagTuple:
    """Sort each maximal run of positions {i, i+1 : i in positions} increasingly.

    >>> sort_blocks(FlagTuple(7, (4, 3, 1, 7, 6, 2, 5)), {1, 2, 4, 6}).entries
    (1, 3, 4, 6, 7, 2, 5)
    """
    _require_permutation(w)
    n = w.n
    positions = frozenset(positions)
    if any(not 1 <= i <= n - 1 for i in positions):
        raise ValueError(f"positions {sorted(positions)} leave [{n - 1}]")
    entries = list(w.entries)
    i = 1
    while i <= n:
        j = i
        while j < n and j in positions:
            j += 1
        if j > i:
            entries[i - 1 : j] = sorted(entries[i - 1 : j])
        i = j + 1
    return FlagTuple(n, tuple(entries))


def prefix_projection(x: FlagTuple, i: int) -> KSubset:
    """The first i entries of x, forgetting their order."""
    if not 1 <= i <= len(x):
        raise ValueError(f"prefix length {i} not within [1, {len(x)}]")
    return KSubset(x.n, x.entries[:i])


def _check_shapes(a, b) -> None:
    if type(a) is not type(b):
        raise TypeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    if a.n != b.n or len(a) != len(b):
        raise ValueError("operands live in different quotients")


def gale_leq(a: KSubset, b: KSubset) -> bool:
    """Componentwise domination of sorted members.

    >>> gale_leq(KSubset(8, (3, 4, 5, 6)), KSubset(8, (4, 5, 6, 8)))
    True
    """
    if not isinstance(a, KSubset):
        raise TypeError(f"expected KSubset operands, got {type(a).__name__}")
    _check_shapes(a, b)
    return all(u <= v for u, v in zip(a.members, b.members))


def conf_leq(x: FlagTuple, y: FlagTuple) -> bool:
    """Domination of every sorted prefix.

    >>> conf_leq(FlagTuple(5, (3, 1, 2, 5)), FlagTuple(5, (4, 2, 5, 1)))
    True
    >>> conf_leq(FlagTuple(5, (3, 1, 5, 2)), FlagTuple(5, (4, 2, 1, 5)))
    False
    """
    if not isinstance(x, FlagTuple):
        raise TypeError(f"expected FlagTuple operands, got {type(x).__name__}")
    _check_shapes(x, y)
    px: list[int] = []
    py: list[int] = []
    for u, v in zip(x.entries, y.entries):
        bisect.insort(px, u)
        bisect.insort(py, v)
        if any(s > t for s, t in zip(px, py)):
            return False
    return True


def perm_leq(u: FlagTuple, v: FlagTuple) -> bool:
    """Bruhat order on S_n: every sorted k-prefix of u dominated by v's."""
    _require_permutation(u, "u")
    _require_permutation(v, "v")
    return conf_leq(u, v)


def leq(a, b, kind: OrderKind) -> bool:
    if kind is OrderKind.GALE:
        return gale_leq(a, b)
    if kind is OrderKind.CONF:
        return conf_leq(a, b)
    if kind is OrderKind.PERM:
        return perm_leq(a, b)
    raise ValueError(f"unknown order kind {kind!r}")


def descent_set(w: FlagTuple) -> DescentSet:
    """Positions i with w(i) > w(i+1)."""
    _require_permutation(w)
    e = w.entries
    return frozenset(i + 1 for i in range(len(e) - 1) if e[i] > e[i + 1])


def induced_covers(elements: Iterable, kind: OrderKind) -> set[tuple]:
    """Cover relations of the subposet induced on ``elements``.

    Returns pairs (lower, upper).  Covers are taken within the given set,
    not within the ambient quotient.
    """
    elems = sorted(set(elements), key=canonical_key)
    m = len(elems)
    lt = [[i != j and leq(elems[i], elems[j], kind) for j in range(m)] for i in range(m)]
    covers = set()
    for i in range(m):
        for j in range(m):
            if lt[i][j] and not any(lt[i][t] and lt[t][j] for t in range(m)):
                covers.add((elems[i], elems[j]))
    return covers


def _ambient(kind: OrderKind, n: int, k: int) -> Iterator:
    if kind is OrderKind.GALE:
        return all_ksubsets(n, k)
    if kind is OrderKind.CONF:
        return all_flag_tuples(n, k)
    return all_permutations(n)


def is_order_ideal(elements: Iterable, kind: OrderKind) -> bool:
    """True iff the set is downward closed in its ambient quotient."""
    elems = set(elements)
    if not elems:
        return True
    sample = next(iter(elems))
    n, k = sample.n, len(sample)
    for y in _ambient(kind, n, k):
        if y not in elems and any(leq(y, x, kind) for x in elems):
            return False
    return True


def is_linear_extension(seq: FacetSequence, elements: Iterable, kind: OrderKind) -> bool:
    """True iff no element of the sequence is preceded by a strictly larger one."""
    items = seq.items
    if set(items) != set(elements):
        raise ValueError("sequence is not a permutation of the given facets")
    for j in range(1, len(items)):
        for i in range(j):
            if leq(items[j], items[i], kind):
                return False
    return True


def strictly_below_masks(elems: list, kind: OrderKind) -> list[int]:
    """For each index i, the bitmask of indices strictly below elems[i]."""
    m = len(elems)
    below = [0] * m
    for i in range(m):
        for j in range(m):
            if i != j and leq(elems[j], elems[i], kind):
                below[i] |= 1 << j
    return below


def linear_extensions(elements: Iterable, kind: OrderKind) -> Iterator[FacetSequence]:
    """Every linear extension exactly once, minimal candidates tried in
    canonical ascending order at each step."""
    elems = sorted(set(elements), key=canonical_key)
    if not elems:
        raise ValueError("cannot extend an empty set")
    h = len(elems)
    below = strictly_below_masks(elems, kind)
    acc: list = []

    def rec(placed: int) -> Iterator[FacetSequence]:
        if len(acc) == h:
            yield FacetSequence(tuple(acc))
            return
        for t in range(h):
            bit = 1 << t
            if not placed & bit and below[t] & ~placed == 0:
                acc.append(elems[t])
                yield from rec(placed | bit)
                acc.pop()

    return rec(0)
