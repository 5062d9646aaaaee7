"""Promotion and evacuation of facet sequences through labeled graphs.

The track of a graph on {1, ..., h} is the greedy increasing neighbor
path from vertex 1.  Promotion shifts off-track positions down by one,
sends each track vertex to just below its successor, and sends the last
track vertex to h.  Specializing the graph to the dual graph of a facet
sequence gives shelling-order promotion; specializing to the Hasse
diagram of the order induced on the support gives classical poset
promotion of linear extensions.
"""

from __future__ import annotations

from enum import Enum

from .bruhat import OrderKind, induced_covers
from .core import FacetSequence, FlagTuple, KSubset, LabeledGraph
from .shelling import dual_graph

PositionPermutation = tuple  # one-line notation, a bijection of [h]
Track = tuple  # strictly increasing vertices, starting at 1


class GraphKind(Enum):
    DUAL = "dual"
    HASSE = "hasse"


def track(graph: LabeledGraph) -> Track:
    """Greedy path: from each vertex, step to its least larger neighbor."""
    vertices = [1]
    while True:
        v = vertices[-1]
        bigger = [u for u in graph.neighbors(v) if u > v]
        if not bigger:
            return tuple(vertices)
        vertices.append(min(bigger))


def promotion_permutation(graph: LabeledGraph) -> PositionPermutation:
    """One-line notation of the promotion induced by the graph's track."""
    h = graph.order
    path = track(graph)
    image = list(range(0, h))  # off-track: i -> i - 1
    for a, b in zip(path, path[1:]):
        image[a - 1] = b - 1
    image[path[-1] - 1] = h
    return tuple(image)


def apply_positions(sigma: PositionPermutation, seq: FacetSequence) -> FacetSequence:
    """Rearrange so the item at position p was at position sigma^{-1}(p)."""
    h = len(seq)
    if len(sigma) != h:
        raise ValueError(f"permutation length {len(sigma)} != sequence length {h}")
    if sorted(sigma) != list(range(1, h + 1)):
        raise ValueError(f"{sigma} is not a bijection of [{h}]")
    out: list = [None] * h
    for i, item in enumerate(seq.items):
        out[sigma[i] - 1] = item
    return FacetSequence(tuple(out))


def _default_order(seq: FacetSequence) -> OrderKind:
    first = seq.items[0]
    if isinstance(first, KSubset):
        return OrderKind.GALE
    if isinstance(first, FlagTuple):
        return OrderKind.CONF
    raise TypeError(
        "Hasse graphs need an ordered facet alphabet (KSubset or FlagTuple)"
    )


def graph_of(
    seq: FacetSequence, kind: GraphKind, order: OrderKind | None = None
) -> LabeledGraph:
    """The dual graph, or the Hasse diagram of the order induced on the
    support with elements replaced by their positions."""
    if kind is GraphKind.DUAL:
        return dual_graph(seq)
    order = order if order is not None else _default_order(seq)
    position = {item: i + 1 for i, item in enumerate(seq.items)}
    edges = {
        (position[lo], position[hi])
        for lo, hi in induced_covers(seq.support(), order)
    }
    return LabeledGraph(len(seq), frozenset(edges))


def promote(
    seq: FacetSequence,
    kind: GraphKind = GraphKind.DUAL,
    order: OrderKind | None = None,
) -> FacetSequence:
    return apply_positions(promotion_permutation(graph_of(seq, kind, order)), seq)


def elementary_move(
    seq: FacetSequence,
    i: int,
    kind: GraphKind = GraphKind.DUAL,
    order: OrderKind | None = None,
) -> FacetSequence:
    """Swap positions i, i+1 unless they are adjacent in the graph."""
    h = len(seq)
    if not 1 <= i <= h - 1:
        raise ValueError(f"move position {i} not within [1, {h - 1}]")
    if graph_of(seq, kind, order).has_edge(i, i + 1):
        return seq
    items = list(seq.items)
    items[i - 1], items[i] = items[i], items[i - 1]
    return FacetSequence(tuple(items))


def promote_via_moves(seq: FacetSequence) -> FacetSequence:
    """Dual-graph promotion as the chain of elementary moves at positions
    1, ..., h-1, the graph recomputed from the current sequence each time."""
    for i in range(1, len(seq)):
        seq = elementary_move(seq, i, GraphKind.DUAL)
    return seq


def r_promote(
    seq: FacetSequence,
    r: int,
    kind: GraphKind = GraphKind.DUAL,
    order: OrderKind | None = None,
) -> FacetSequence:
    """Promote the length-r prefix as a standalone sequence."""
    h = len(seq)
    if not 1 <= r <= h:
        raise ValueError(f"prefix length {r} not within [1, {h}]")
    prefix = FacetSequence(seq.items[:r])
    promoted = promote(prefix, kind, order)
    return FacetSequence(promoted.items + seq.items[r:])


def evacuate(
    seq: FacetSequence,
    kind: GraphKind = GraphKind.DUAL,
    order: OrderKind | None = None,
) -> FacetSequence:
    """Compose the r-promotions for r = h down to 2; an involution for
    the dual graph."""
    for r in range(len(seq), 1, -1):
        seq = r_promote(seq, r, kind, order)
    return seq
