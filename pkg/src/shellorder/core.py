"""Immutable value types shared by every module.

Three facet alphabets appear throughout: ``KSubset`` (a k-element subset
of {1, ..., n}, kept sorted), ``FlagTuple`` (a tuple of k distinct values
of {1, ..., n}, order significant), and ``FlagVertexFacet`` (a nested
chain of KSubsets, the facet alphabet of flag complexes).  ``PureComplex``
and ``FacetSequence`` are thin containers enforcing pure dimension and
distinctness.  Positions in graphs, witnesses and position permutations
are 1-indexed; plain Python indexing of sequence items stays 0-indexed.

Universe sizes are capped at 64 so that facet intersection cardinality
reduces to constant-time bitmask arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

MAX_UNIVERSE = 64


class UniverseTooLargeError(ValueError):
    """Universe size exceeds the 64-bit facet mask bound."""


def _check_universe(n: int) -> None:
    if n < 1:
        raise ValueError(f"universe size must be a positive integer, got {n!r}")
    if n > MAX_UNIVERSE:
        raise UniverseTooLargeError(
            f"universe size {n} exceeds the supported bound of {MAX_UNIVERSE}"
        )


@dataclass(frozen=True)
class KSubset:
    """A subset of {1, ..., n}; members are canonicalized to sorted order.

    The empty subset is permitted as the single rank-0 element.
    """

    n: int
    members: tuple[int, ...]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_universe(self.n)
        members = tuple(sorted(self.members))
        for a, b in zip(members, members[1:]):
            if a == b:
                raise ValueError(f"duplicate member {a}")
        if members and (members[0] < 1 or members[-1] > self.n):
            raise ValueError(f"members {members} not within [{self.n}]")
        object.__setattr__(self, "members", members)
        mask = 0
        for v in members:
            mask |= 1 << (v - 1)
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "KSubset":
        return cls(n, tuple(v for v in range(1, n + 1) if mask >> (v - 1) & 1))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


@dataclass(frozen=True)
class FlagTuple:
    """A tuple of pairwise distinct values of {1, ..., n}; order matters.

    With k = n this is a permutation in one-line notation, and calling the
    value applies it: ``FlagTuple(3, (2, 1, 3))(1) == 2``.
    """

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_universe(self.n)
        entries = tuple(self.entries)
        if not 1 <= len(entries) <= self.n:
            raise ValueError(f"tuple length {len(entries)} not within [1, {self.n}]")
        if len(set(entries)) != len(entries):
            raise ValueError(f"entries {entries} contain a repeat")
        if min(entries) < 1 or max(entries) > self.n:
            raise ValueError(f"entries {entries} not within [{self.n}]")
        object.__setattr__(self, "entries", entries)

    def is_permutation(self) -> bool:
        return len(self.entries) == self.n

    def __call__(self, v: int) -> int:
        if not self.is_permutation():
            raise ValueError("only full permutations act on values")
        return self.entries[v - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class FlagVertexFacet:
    """A facet of a flag complex: a nested chain of KSubsets of sizes 1..k."""

    vertices: frozenset[KSubset]

    def __post_init__(self) -> None:
        vertices = frozenset(self.vertices)
        if not vertices:
            raise ValueError("flag facet needs at least one vertex")
        chain = sorted(vertices, key=len)
        if [len(v) for v in chain] != list(range(1, len(chain) + 1)):
            raise ValueError("vertex cardinalities must be exactly 1..k")
        if len({v.n for v in chain}) != 1:
            raise ValueError("vertices drawn from different universes")
        for small, big in zip(chain, chain[1:]):
            if small.mask & ~big.mask:
                raise ValueError(f"{small.members} not nested in {big.members}")
        object.__setattr__(self, "vertices", vertices)

    @property
    def n(self) -> int:
        return next(iter(self.vertices)).n

    def chain(self) -> tuple[KSubset, ...]:
        return tuple(sorted(self.vertices, key=len))

    def to_flag_tuple(self) -> FlagTuple:
        """Recover the unique tuple whose prefix sets form this chain."""
        chain = self.chain()
        entries = list(chain[0].members)
        for small, big in zip(chain, chain[1:]):
            entries.extend(KSubset.from_mask(big.n, big.mask & ~small.mask).members)
        return FlagTuple(chain[0].n, tuple(entries))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[KSubset]:
        return iter(self.chain())


Facet = KSubset | FlagTuple | FlagVertexFacet


def canonical_key(facet: Facet):
    """Deterministic sort key; comparable within one facet alphabet."""
    if isinstance(facet, KSubset):
        return (len(facet.members), facet.members)
    if isinstance(facet, FlagTuple):
        return (len(facet.entries), facet.entries)
    if isinstance(facet, FlagVertexFacet):
        return tuple(v.members for v in facet.chain())
    raise TypeError(f"not a facet: {facet!r}")


def _check_homogeneous(facets: Iterable[Facet], what: str) -> None:
    facets = list(facets)
    first = facets[0]
    if not isinstance(first, (KSubset, FlagTuple, FlagVertexFacet)):
        raise TypeError(f"not a facet: {first!r}")
    for f in facets[1:]:
        if type(f) is not type(first):
            raise TypeError(f"{what} mixes facet alphabets")
        if f.n != first.n or len(f) != len(first):
            raise ValueError(f"{what} mixes universes or facet sizes")


@dataclass(frozen=True)
class PureComplex:
    """A finite set of equal-size facets over one vertex universe."""

    facets: frozenset

    def __post_init__(self) -> None:
        facets = frozenset(self.facets)
        if facets:
            _check_homogeneous(facets, "complex")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def of(cls, facets: Iterable[Facet]) -> "PureComplex":
        return cls(frozenset(facets))

    def __len__(self) -> int:
        return len(self.facets)

    def __iter__(self) -> Iterator[Facet]:
        return iter(sorted(self.facets, key=canonical_key))

    def __contains__(self, facet: object) -> bool:
        return facet in self.facets


@dataclass(frozen=True)
class FacetSequence:
    """An ordered, duplicate-free, nonempty tuple of equal-size facets."""

    items: tuple

    def __post_init__(self) -> None:
        items = tuple(self.items)
        if not items:
            raise ValueError("facet sequence must be nonempty")
        if len(set(items)) != len(items):
            raise ValueError("facet sequence repeats a facet")
        _check_homogeneous(items, "sequence")
        object.__setattr__(self, "items", items)

    def support(self) -> frozenset:
        return frozenset(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Facet]:
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]


@dataclass(frozen=True)
class LabeledGraph:
    """A simple undirected graph on the vertex set {1, ..., order}."""

    order: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"graph order must be positive, got {self.order}")
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= self.order and 1 <= b <= self.order):
                raise ValueError(f"edge ({a}, {b}) leaves [{self.order}]")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return tuple(sorted(out))


def sort_to_ksubset(x: FlagTuple) -> KSubset:
    """Forget the order of a tuple's entries."""
    return KSubset(x.n, x.entries)


def symmetric_difference_update(x: KSubset, drop: int, add: int) -> KSubset:
    """One-element exchange: x + {drop, add} with drop in x and add outside."""
    if drop not in x:
        raise ValueError(f"{drop} is not a member of {x.members}")
    if add in x:
        raise ValueError(f"{add} is already a member of {x.members}")
    if not 1 <= add <= x.n:
        raise ValueError(f"{add} outside the universe [{x.n}]")
    return KSubset(x.n, tuple(m for m in x.members if m != drop) + (add,))


def all_ksubsets(n: int, k: int) -> Iterator[KSubset]:
    """All k-subsets of {1, ..., n}, in lexicographic order."""
    for combo in itertools.combinations(range(1, n + 1), k):
        yield KSubset(n, combo)


def all_flag_tuples(n: int, k: int) -> Iterator[FlagTuple]:
    """All injective k-tuples over {1, ..., n}, in lexicographic order."""
    for arrangement in itertools.permutations(range(1, n + 1), k):
        yield FlagTuple(n, arrangement)


def all_permutations(n: int) -> Iterator[FlagTuple]:
    """All of S_n in one-line notation, lexicographic order."""
    return all_flag_tuples(n, n)


def identity_permutation(n: int) -> FlagTuple:
    return FlagTuple(n, tuple(range(1, n + 1)))
