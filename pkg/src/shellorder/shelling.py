"""Shelling-order verification and search, dual graphs, relabeling.

Facets are compared by vertex-set intersection.  KSubsets use their own
bitmasks; flag-vertex facets get their vertices interned into a
per-sequence bitmask universe, so one checker serves both alphabets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random
from typing import Iterator, Optional

from .core import (
    FacetSequence,
    FlagTuple,
    FlagVertexFacet,
    KSubset,
    LabeledGraph,
    PureComplex,
    canonical_key,
)


@dataclass(frozen=True)
class ShellingWitness:
    """Certificates (i, j, z), 1-indexed: position z < j glues facet j onto
    the earlier complex along a ridge covering its overlap with facet i.
    ``failing`` is the least (j, i) pair with no certificate, if any."""

    holds: bool
    certificates: tuple[tuple[int, int, int], ...]
    failing: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if self.holds == (self.failing is not None):
            raise ValueError("failing pair must be present exactly on failure")

    def __bool__(self) -> bool:
        return self.holds


def facet_masks(items: tuple) -> tuple[list[int], int]:
    """Bitmask encodings of set-like facets plus the common facet size."""
    first = items[0]
    if isinstance(first, KSubset):
        return [f.mask for f in items], len(first)
    if isinstance(first, FlagVertexFacet):
        index: dict[KSubset, int] = {}
        masks = []
        for f in items:
            m = 0
            for v in f:
                m |= 1 << index.setdefault(v, len(index))
            masks.append(m)
        return masks, len(first)
    raise TypeError(
        f"facets must be vertex sets (KSubset or FlagVertexFacet), got {type(first).__name__}"
    )


def is_shelling_order(seq: FacetSequence) -> ShellingWitness:
    """Check the gluing condition for every pair i < j.

    For each pair the certifying z is searched descending from j - 1; the
    first failure (least j, then least i) stops the scan.
    """
    masks, k = facet_masks(seq.items)
    h = len(masks)
    certs: list[tuple[int, int, int]] = []
    for j in range(1, h):
        bj = masks[j]
        for i in range(j):
            need = masks[i] & bj
            for z in range(j - 1, -1, -1):
                inter = masks[z] & bj
                if inter.bit_count() == k - 1 and need & ~inter == 0:
                    certs.append((i + 1, j + 1, z + 1))
                    break
            else:
                return ShellingWitness(False, tuple(certs), (i + 1, j + 1))
    return ShellingWitness(True, tuple(certs), None)


def _append_ok(placed: list[int], cand: int, k: int) -> bool:
    # Valid next facet: every earlier overlap sits inside some ridge overlap.
    if not placed:
        return True
    ridges = [m & cand for m in placed if (m & cand).bit_count() == k - 1]
    if not ridges:
        return False
    for m in placed:
        need = m & cand
        if not any(need & ~r == 0 for r in ridges):
            return False
    return True


def shelling_orders(complex_: PureComplex) -> Iterator[FacetSequence]:
    """Every shelling order of the complex, candidates in canonical order.

    Prefix pruning is sound: a prefix of a shelling order is a shelling
    order of its support, since the condition at j only mentions z < j.
    """
    facets = sorted(complex_, key=canonical_key)
    if not facets:
        raise ValueError("empty complex has no facet orders")
    masks, k = facet_masks(tuple(facets))
    h = len(facets)
    order: list[int] = []
    placed: list[int] = []

    def rec(used: int) -> Iterator[FacetSequence]:
        if len(order) == h:
            yield FacetSequence(tuple(facets[t] for t in order))
            return
        for t in range(h):
            if used >> t & 1:
                continue
            if _append_ok(placed, masks[t], k):
                order.append(t)
                placed.append(masks[t])
                yield from rec(used | 1 << t)
                order.pop()
                placed.pop()

    return rec(0)


def find_shelling_order(
    complex_: PureComplex, rng: Random | None = None
) -> Optional[FacetSequence]:
    """First shelling order found, or None.

    Deterministic (canonical candidate order) unless an rng is supplied to
    shuffle candidates, for sampling harnesses.
    """
    facets = sorted(complex_, key=canonical_key)
    if not facets:
        raise ValueError("empty complex has no facet orders")
    masks, k = facet_masks(tuple(facets))
    h = len(facets)
    order: list[int] = []
    placed: list[int] = []

    def rec(used: int) -> bool:
        if len(order) == h:
            return True
        candidates = [t for t in range(h) if not used >> t & 1]
        if rng is not None:
            rng.shuffle(candidates)
        for t in candidates:
            if _append_ok(placed, masks[t], k):
                order.append(t)
                placed.append(masks[t])
                if rec(used | 1 << t):
                    return True
                order.pop()
                placed.pop()
        return False

    if rec(0):
        return FacetSequence(tuple(facets[t] for t in order))
    return None


def dual_graph(seq: FacetSequence) -> LabeledGraph:
    """Positions i, j are adjacent iff the facets share all but one vertex."""
    masks, k = facet_masks(seq.items)
    h = len(masks)
    edges = {
        (i + 1, j + 1)
        for i in range(h)
        for j in range(i + 1, h)
        if (masks[i] & masks[j]).bit_count() == k - 1
    }
    return LabeledGraph(h, frozenset(edges))


def relabel(sigma: FlagTuple, seq: FacetSequence) -> FacetSequence:
    """Rename every vertex through the permutation sigma, re-sorting facets."""
    if not sigma.is_permutation():
        raise ValueError("sigma must be a full permutation")
    if not isinstance(seq.items[0], KSubset):
        raise TypeError("relabeling is defined for KSubset facets")
    if sigma.n != seq.items[0].n:
        raise ValueError("sigma acts on a different universe")
    return FacetSequence(
        tuple(KSubset(f.n, tuple(sigma(v) for v in f.members)) for f in seq.items)
    )


def are_isomorphic(a: FacetSequence, b: FacetSequence) -> bool:
    """True iff some relabeling carries a onto b position by position.

    Exhaustive sweep of S_n; n <= 8 is enforced.
    """
    if not isinstance(a.items[0], KSubset) or not isinstance(b.items[0], KSubset):
        raise TypeError("isomorphism is defined for KSubset facets")
    first_a, first_b = a.items[0], b.items[0]
    if first_a.n != first_b.n or len(a) != len(b) or len(first_a) != len(first_b):
        raise ValueError("sequences have mismatched shapes")
    n = first_a.n
    if n > 8:
        raise ValueError(f"relabeling sweep requires n <= 8, got n = {n}")
    targets = [f.members for f in b.items]
    sources = [f.members for f in a.items]
    for w in itertools.permutations(range(1, n + 1)):
        if all(
            tuple(sorted(w[v - 1] for v in src)) == tgt
            for src, tgt in zip(sources, targets)
        ):
            return True
    return False
