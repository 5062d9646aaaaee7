"""Barycentric subdivision as a coset union, flag complexes, flag
shellability, and the face-poset cross-check.

A family of sorted k-subsets subdivides into the injective tuples obtained
by permuting each facet's members.  The flag complex of a tuple family has
one facet per tuple: the chain of its prefix sets, encoded as a set of
KSubsets of cardinalities 1..k.  With that encoding the generic shelling
checker applies unchanged.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .bruhat import prefix_projection
from .core import (
    FacetSequence,
    FlagTuple,
    FlagVertexFacet,
    KSubset,
    PureComplex,
)
from .shelling import find_shelling_order, is_shelling_order


def barycentric(complex_: PureComplex) -> set[FlagTuple]:
    """All orderings of every facet's members; |X| * k! tuples."""
    out: set[FlagTuple] = set()
    for facet in complex_:
        if not isinstance(facet, KSubset):
            raise TypeError("barycentric subdivision expects KSubset facets")
        for arrangement in itertools.permutations(facet.members):
            out.add(FlagTuple(facet.n, arrangement))
    return out


def flag_facet(y: FlagTuple) -> FlagVertexFacet:
    """The chain of prefix sets of y, as a flag-complex facet."""
    return FlagVertexFacet(
        frozenset(prefix_projection(y, i) for i in range(1, len(y) + 1))
    )


def flag_complex(elements: Iterable[FlagTuple]) -> PureComplex:
    """The complex whose facets are the prefix chains of the given tuples."""
    return PureComplex.of(flag_facet(y) for y in set(elements))


def is_flag_shelling_order(seq: FacetSequence) -> bool:
    """True iff the prefix-chain images form a shelling order."""
    if not isinstance(seq.items[0], FlagTuple):
        raise TypeError("flag shelling orders are sequences of FlagTuples")
    image = FacetSequence(tuple(flag_facet(y) for y in seq.items))
    return is_shelling_order(image).holds


def is_flag_shellable(elements: Iterable[FlagTuple]) -> bool:
    """True iff the flag complex of the set admits some shelling order."""
    elems = set(elements)
    if not elems:
        raise ValueError("empty set cannot be tested for flag shellability")
    return find_shelling_order(flag_complex(elems)) is not None


def face_poset_order_complex(complex_: PureComplex) -> PureComplex:
    """Order complex of the face poset, built by walking maximal chains.

    Enumerates the nonempty faces explicitly and extends chains one vertex
    at a time; independent of the coset construction, and must agree with
    ``flag_complex(barycentric(complex_))``.
    """
    facets = list(complex_)
    if not facets:
        return PureComplex.of(())
    if not isinstance(facets[0], KSubset):
        raise TypeError("face posets are built over KSubset facets")
    n = facets[0].n
    faces: set[int] = set()
    for facet in facets:
        members = facet.members
        for size in range(1, len(members) + 1):
            for combo in itertools.combinations(members, size):
                m = 0
                for v in combo:
                    m |= 1 << (v - 1)
                faces.add(m)

    chains: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...], top: int) -> None:
        ups = [
            top | 1 << b
            for b in range(n)
            if not top >> b & 1 and top | 1 << b in faces
        ]
        if not ups:
            chains.append(chain)
            return
        for up in ups:
            extend(chain + (up,), up)

    for m in faces:
        if m.bit_count() == 1:
            extend((m,), m)

    return PureComplex.of(
        FlagVertexFacet(frozenset(KSubset.from_mask(n, m) for m in chain))
        for chain in chains
    )
