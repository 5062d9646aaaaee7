"""Exhaustive and randomized verification sweeps.

Each suite scans a bounded universe of instances, applies an independent
check to every one, and returns a ``RunReport``.  Sweeps are deterministic:
instances are visited in a fixed order, randomized corpora are driven by a
seeded generator, and the first counterexample is selected in visit order
regardless of worker count.
"""

from __future__ import annotations

import functools
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from random import Random
from typing import Iterable, Optional

from .bruhat import (
    OrderKind,
    gale_leq,
    induced_covers,
    is_order_ideal,
    prefix_projection,
    strictly_below_masks,
)
from .core import (
    FacetSequence,
    FlagTuple,
    KSubset,
    PureComplex,
    all_flag_tuples,
    all_ksubsets,
    canonical_key,
)
from .matroid import (
    canonical_completion,
    has_quasi_exchange,
    is_coxeter_matroid,
    is_matroid,
)
from .promotion import GraphKind, promote, promote_via_moves, evacuate
from .shelling import (
    _append_ok,
    facet_masks,
    is_shelling_order,
    shelling_orders,
)
from .subdivision import barycentric, flag_facet

EXHAUSTIVE_MAX_N = 6


@dataclass(frozen=True)
class RunReport:
    suite: str
    instances: int
    checks: int
    failures: int
    first_counterexample: Optional[str]
    duration: float

    def __post_init__(self) -> None:
        if (self.failures > 0) != (self.first_counterexample is not None):
            raise ValueError("counterexample recorded iff failures > 0")

    @property
    def passed(self) -> int:
        return self.checks - self.failures


def _guard_exhaustive(n: int) -> None:
    if n > EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive sweeps are guarded at n <= {EXHAUSTIVE_MAX_N}")


def _fmt_facet(f) -> str:
    if isinstance(f, KSubset):
        vals = f.members
    else:
        vals = f.entries
    if f.n <= 9:
        return "".join(str(v) for v in vals)
    return " ".join(str(v) for v in vals)


def _fmt_seq(items: Iterable) -> str:
    return "(" + ",".join(_fmt_facet(f) for f in items) + ")"


def _fmt_set(items: Iterable) -> str:
    return "{" + ",".join(_fmt_facet(f) for f in sorted(items, key=canonical_key)) + "}"


def _bits(mask: int) -> list[int]:
    out = []
    t = 0
    while mask:
        if mask & 1:
            out.append(t)
        mask >>= 1
        t += 1
    return out


def _chunks(total: int, pieces: int = 64) -> list[tuple[int, int]]:
    pieces = min(pieces, total) or 1
    step = -(-total // pieces)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_chunked(worker, args_list: list, jobs: int) -> list:
    if jobs <= 1:
        return [worker(a) for a in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, args_list))


def _merge(suite: str, parts: list, started: float, instances: int) -> RunReport:
    checks = sum(p[0] for p in parts)
    failures = sum(p[1] for p in parts)
    first = next((p[2] for p in parts if p[2] is not None), None)
    return RunReport(suite, instances, checks, failures, first, time.perf_counter() - started)


def _walk_extensions_checking(
    below: list[int], fmasks: list[int], k: int, describe
) -> tuple[int, int, Optional[str]]:
    """Enumerate all linear extensions given per-index below-masks and
    verify the shelling condition incrementally at every append.

    A failed append dooms every completion of that prefix, so the branch
    is counted once and pruned.  Returns (extensions checked, failures,
    first counterexample)."""
    h = len(below)
    checks = failures = 0
    first: Optional[str] = None
    prefix: list[int] = []
    placed: list[int] = []

    def rec(used: int) -> None:
        nonlocal checks, failures, first
        if len(prefix) == h:
            checks += 1
            return
        for t in range(h):
            bit = 1 << t
            if used & bit or below[t] & ~used:
                continue
            if _append_ok(placed, fmasks[t], k):
                prefix.append(t)
                placed.append(fmasks[t])
                rec(used | bit)
                prefix.pop()
                placed.pop()
            else:
                checks += 1
                failures += 1
                if first is None:
                    first = describe(prefix + [t])

    rec(0)
    return checks, failures, first


# --- extensions-shell -------------------------------------------------------


def _extensions_shell_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, lo, hi = args
    facets = list(all_ksubsets(n, k))
    checks = failures = 0
    first: Optional[str] = None
    for mask in range(lo, hi):
        X = [facets[t] for t in _bits(mask)]
        if not X:
            continue
        if not has_quasi_exchange(X).holds:
            # matroids and order ideals always have quasi-exchange
            if is_matroid(X).holds or is_order_ideal(X, OrderKind.GALE):
                checks += 1
                failures += 1
                if first is None:
                    first = f"matroid/ideal without quasi-exchange: {_fmt_set(X)}"
            continue
        elems = sorted(X, key=canonical_key)
        below = strictly_below_masks(elems, OrderKind.GALE)
        fmasks = [x.mask for x in elems]

        def describe(prefix_idx, elems=elems, X=X):
            return (
                f"X={_fmt_set(X)} extension prefix "
                f"{_fmt_seq(elems[t] for t in prefix_idx)} is not a shelling prefix"
            )

        c, f, cex = _walk_extensions_checking(below, fmasks, k, describe)
        checks += c
        failures += f
        if first is None:
            first = cex
    return checks, failures, first


def extensions_shell(n: int, k: int, jobs: int = 1) -> RunReport:
    """Every subset with the quasi-exchange property: each of its linear
    extensions must be a shelling order."""
    _guard_exhaustive(n)
    started = time.perf_counter()
    total = 1 << sum(1 for _ in all_ksubsets(n, k))
    args = [(n, k, lo, hi) for lo, hi in _chunks(total)]
    parts = _run_chunked(_extensions_shell_chunk, args, jobs)
    return _merge("extensions-shell", parts, started, total)


# --- barycentric-coxeter ----------------------------------------------------


def _barycentric_coxeter_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, lo, hi = args
    facets = list(all_ksubsets(n, k))
    checks = failures = 0
    first: Optional[str] = None
    for mask in range(lo, hi):
        X = [facets[t] for t in _bits(mask)]
        if not X:
            continue
        checks += 1
        lhs = is_matroid(X).holds
        rhs = is_coxeter_matroid(barycentric(PureComplex.of(X)))
        if lhs != rhs:
            failures += 1
            if first is None:
                first = (
                    f"X={_fmt_set(X)}: exchange={lhs} but subdivision maximality={rhs}"
                )
    return checks, failures, first


def barycentric_coxeter(n: int, k: int, jobs: int = 1) -> RunReport:
    """Exchange property of X must coincide with the maximality property
    of its barycentric subdivision, for every subset."""
    _guard_exhaustive(n)
    started = time.perf_counter()
    total = 1 << sum(1 for _ in all_ksubsets(n, k))
    args = [(n, k, lo, hi) for lo, hi in _chunks(total)]
    parts = _run_chunked(_barycentric_coxeter_chunk, args, jobs)
    return _merge("barycentric-coxeter", parts, started, total)


# --- conf-ideals-flagshell --------------------------------------------------


def _conf_ideals_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, lo, hi = args
    elems_all = list(all_flag_tuples(n, k))
    m = len(elems_all)
    below_all = strictly_below_masks(elems_all, OrderKind.CONF)
    checks = failures = 0
    first: Optional[str] = None
    for mask in range(lo, hi):
        if not mask:
            continue
        idx = _bits(mask)
        # downward closed in the ambient quotient
        if any(below_all[t] & ~mask for t in idx):
            continue
        elems = sorted((elems_all[t] for t in idx), key=canonical_key)
        below = strictly_below_masks(elems, OrderKind.CONF)
        # intern flag vertices across the ideal
        vertex_index: dict[KSubset, int] = {}
        fmasks = []
        for y in elems:
            fm = 0
            for v in flag_facet(y):
                fm |= 1 << vertex_index.setdefault(v, len(vertex_index))
            fmasks.append(fm)

        def describe(prefix_idx, elems=elems):
            return (
                f"Y={_fmt_set(elems)} extension prefix "
                f"{_fmt_seq(elems[t] for t in prefix_idx)} is not a flag shelling prefix"
            )

        c, f, cex = _walk_extensions_checking(below, fmasks, k, describe)
        checks += c
        failures += f
        if first is None:
            first = cex
    return checks, failures, first


def conf_ideals_flagshell(n: int, k: int, jobs: int = 1) -> RunReport:
    """Every order ideal of the configuration quotient: each of its linear
    extensions must be a flag shelling order."""
    _guard_exhaustive(n)
    started = time.perf_counter()
    total = 1 << sum(1 for _ in all_flag_tuples(n, k))
    args = [(n, k, lo, hi) for lo, hi in _chunks(total)]
    parts = _run_chunked(_conf_ideals_chunk, args, jobs)
    return _merge("conf-ideals-flagshell", parts, started, total)


# --- shelling-order corpus (promotion / evacuation / eq2 / swap) ------------


@functools.lru_cache(maxsize=8)
def exhaustive_corpus(n: int, k: int, max_facets: int) -> tuple[FacetSequence, ...]:
    """All shelling orders of all complexes with at most max_facets facets."""
    facets = list(all_ksubsets(n, k))
    out: list[FacetSequence] = []
    for size in range(1, max_facets + 1):
        for combo in itertools.combinations(facets, size):
            out.extend(shelling_orders(PureComplex.of(combo)))
    return tuple(out)


@functools.lru_cache(maxsize=8)
def random_corpus(
    n: int, k: int, samples: int, seed: int, h_max: int
) -> tuple[FacetSequence, ...]:
    """Seeded growth sampling: start from a random facet and keep appending
    a random facet that preserves the gluing condition, up to a random
    target length.  Every sample is a shelling order by construction."""
    rng = Random(seed)
    facets = list(all_ksubsets(n, k))
    out: list[FacetSequence] = []
    while len(out) < samples:
        target = rng.randint(1, h_max)
        pool = list(facets)
        rng.shuffle(pool)
        chosen = [pool.pop()]
        placed = [chosen[0].mask]
        k_size = len(chosen[0])
        while len(chosen) < target:
            candidates = [f for f in pool if _append_ok(placed, f.mask, k_size)]
            if not candidates:
                break
            follower = rng.choice(candidates)
            pool.remove(follower)
            chosen.append(follower)
            placed.append(follower.mask)
        out.append(FacetSequence(tuple(chosen)))
    return tuple(out)


def check_promotion(seq: FacetSequence) -> Optional[str]:
    image = promote(seq, GraphKind.DUAL)
    if not is_shelling_order(image):
        return f"promotion of {_fmt_seq(seq)} gives non-shelling {_fmt_seq(image)}"
    return None


def check_evacuation(seq: FacetSequence) -> Optional[str]:
    image = evacuate(seq, GraphKind.DUAL)
    if not is_shelling_order(image):
        return f"evacuation of {_fmt_seq(seq)} gives non-shelling {_fmt_seq(image)}"
    return None


def check_involution(seq: FacetSequence) -> Optional[str]:
    twice = evacuate(evacuate(seq, GraphKind.DUAL), GraphKind.DUAL)
    if twice != seq:
        return f"evacuation applied twice moves {_fmt_seq(seq)} to {_fmt_seq(twice)}"
    return None


def check_eq2(seq: FacetSequence) -> Optional[str]:
    via_moves = promote_via_moves(seq)
    direct = promote(seq, GraphKind.DUAL)
    if via_moves != direct:
        return (
            f"elementary moves give {_fmt_seq(via_moves)} but promotion "
            f"gives {_fmt_seq(direct)} on {_fmt_seq(seq)}"
        )
    return None


def check_appending_swap(seq: FacetSequence) -> Optional[str]:
    if len(seq) < 3:
        return None
    masks, k = facet_masks(seq.items)
    if (masks[-2] & masks[-1]).bit_count() >= k - 1:
        return None
    swapped = FacetSequence(seq.items[:-2] + (seq.items[-1], seq.items[-2]))
    if not is_shelling_order(swapped):
        return f"swapping the last two of {_fmt_seq(seq)} breaks the shelling"
    return None


CORPUS_CHECKS = {
    "promotion": check_promotion,
    "evacuation": check_evacuation,
    "involution": check_involution,
    "eq2": check_eq2,
    "appending-swap": check_appending_swap,
}


def _corpus_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, max_facets, lo, hi, check_names = args
    corpus = exhaustive_corpus(n, k, max_facets)
    checks = failures = 0
    first: Optional[str] = None
    fns = [CORPUS_CHECKS[name] for name in check_names]
    for seq in corpus[lo:hi]:
        for fn in fns:
            checks += 1
            cex = fn(seq)
            if cex is not None:
                failures += 1
                if first is None:
                    first = cex
    return checks, failures, first


def sweep_shelling_corpus(
    suite: str,
    check_names: tuple[str, ...],
    n: int,
    k: int,
    max_facets: int = 5,
    samples: int = 0,
    seed: int = 0,
    jobs: int = 1,
) -> RunReport:
    """Run the named checks over every shelling order in the corpus.

    ``samples == 0`` sweeps the exhaustive corpus; a positive value runs
    the seeded random corpus instead (sequentially: the sampler state is
    inherently ordered)."""
    started = time.perf_counter()
    if samples > 0:
        corpus = random_corpus(n, k, samples, seed, max_facets)
        checks = failures = 0
        first: Optional[str] = None
        fns = [CORPUS_CHECKS[name] for name in check_names]
        for seq in corpus:
            for fn in fns:
                checks += 1
                cex = fn(seq)
                if cex is not None:
                    failures += 1
                    if first is None:
                        first = cex
        return RunReport(
            suite, len(corpus), checks, failures, first, time.perf_counter() - started
        )
    _guard_exhaustive(n)
    corpus_len = len(exhaustive_corpus(n, k, max_facets))
    args = [
        (n, k, max_facets, lo, hi, check_names) for lo, hi in _chunks(corpus_len)
    ]
    parts = _run_chunked(_corpus_chunk, args, jobs)
    return _merge(suite, parts, started, corpus_len)


def promotion_shell(
    n: int, k: int, max_facets: int = 5, samples: int = 0, seed: int = 0, jobs: int = 1
) -> RunReport:
    """Promotion of every shelling order must be a shelling order."""
    return sweep_shelling_corpus(
        "promotion-shell", ("promotion",), n, k, max_facets, samples, seed, jobs
    )


def evacuation_shell(
    n: int, k: int, max_facets: int = 5, samples: int = 0, seed: int = 0, jobs: int = 1
) -> RunReport:
    """Evacuation of every shelling order must be a shelling order, and
    applying it twice must give the order back."""
    return sweep_shelling_corpus(
        "evacuation-shell",
        ("evacuation", "involution"),
        n,
        k,
        max_facets,
        samples,
        seed,
        jobs,
    )


def eq2_oracle(
    n: int, k: int, max_facets: int = 5, samples: int = 0, seed: int = 0, jobs: int = 1
) -> RunReport:
    """Promotion must factor into the chain of elementary moves."""
    return sweep_shelling_corpus(
        "eq2-oracle", ("eq2",), n, k, max_facets, samples, seed, jobs
    )


# --- hasse-vs-dual ----------------------------------------------------------


def _ideal_and_interval_masks(n: int, k: int) -> list[int]:
    facets = list(all_ksubsets(n, k))
    m = len(facets)
    below = strictly_below_masks(facets, OrderKind.GALE)
    supports: list[int] = []
    seen: set[int] = set()
    for mask in range(1, 1 << m):
        if all(not below[t] & ~mask for t in _bits(mask)):
            supports.append(mask)
            seen.add(mask)
    for i in range(m):
        for j in range(m):
            if i != j and not gale_leq(facets[i], facets[j]):
                continue
            mask = 0
            for t in range(m):
                lo_ok = t == i or gale_leq(facets[i], facets[t])
                hi_ok = t == j or gale_leq(facets[t], facets[j])
                if lo_ok and hi_ok:
                    mask |= 1 << t
            if mask and mask not in seen:
                supports.append(mask)
                seen.add(mask)
    return supports


def _hasse_vs_dual_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, masks = args
    facets = list(all_ksubsets(n, k))
    checks = failures = 0
    first: Optional[str] = None
    for mask in masks:
        elems = sorted((facets[t] for t in _bits(mask)), key=canonical_key)
        cover_pairs = induced_covers(set(elems), OrderKind.GALE)
        dual_ok = all(
            (a.mask & b.mask).bit_count() == k - 1 for a, b in cover_pairs
        )
        below = strictly_below_masks(elems, OrderKind.GALE)
        h = len(elems)
        prefix: list[int] = []

        def rec(used: int):
            nonlocal checks, failures, first
            if len(prefix) == h:
                checks += 1
                seq = FacetSequence(tuple(elems[t] for t in prefix))
                bad = None
                if not dual_ok:
                    bad = f"cover pair not a ridge pair in {_fmt_set(elems)}"
                elif promote(seq, GraphKind.DUAL) != promote(seq, GraphKind.HASSE):
                    bad = f"promotions disagree on extension {_fmt_seq(seq)}"
                if bad is not None:
                    failures += 1
                    if first is None:
                        first = bad
                return
            for t in range(h):
                bit = 1 << t
                if used & bit or below[t] & ~used:
                    continue
                prefix.append(t)
                rec(used | bit)
                prefix.pop()

        rec(0)
    return checks, failures, first


def hasse_vs_dual(n: int, k: int, jobs: int = 1) -> RunReport:
    """On every order ideal and every interval, the induced Hasse graph of
    a linear extension must be a subgraph of its dual graph and the two
    promotions must agree."""
    _guard_exhaustive(n)
    started = time.perf_counter()
    supports = _ideal_and_interval_masks(n, k)
    pieces = _chunks(len(supports))
    args = [(n, k, tuple(supports[lo:hi])) for lo, hi in pieces]
    parts = _run_chunked(_hasse_vs_dual_chunk, args, jobs)
    return _merge("hasse-vs-dual", parts, started, len(supports))


# --- remark-bruhat-graph ----------------------------------------------------


def _transposition_neighbors(y: KSubset) -> set[KSubset]:
    """Images of y under every transposition, through the permutation
    completion: the independent route to ridge adjacency."""
    n = y.n
    w = canonical_completion(y)
    k = len(y)
    out: set[KSubset] = set()
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            swapped = tuple(
                q if v == p else p if v == q else v for v in w.entries
            )
            out.add(prefix_projection(FlagTuple(n, swapped), k))
    return out


def _remark_chunk(args: tuple) -> tuple[int, int, Optional[str]]:
    n, k, lo, hi = args
    facets = list(all_ksubsets(n, k))
    exchange = {y: _transposition_neighbors(y) for y in facets}
    checks = failures = 0
    first: Optional[str] = None
    for mask in range(lo, hi):
        idx = _bits(mask)
        elems = [facets[t] for t in idx]
        for a, b in itertools.combinations(elems, 2):
            checks += 1
            is_ridge = (a.mask & b.mask).bit_count() == k - 1
            via_reflection = a in exchange[b]
            bad = None
            if is_ridge != via_reflection:
                bad = f"ridge/reflection mismatch on ({_fmt_facet(a)},{_fmt_facet(b)})"
            elif is_ridge and not (gale_leq(a, b) or gale_leq(b, a)):
                bad = f"ridge pair ({_fmt_facet(a)},{_fmt_facet(b)}) incomparable"
            if bad is not None:
                failures += 1
                if first is None:
                    first = bad
    return checks, failures, first


def remark_bruhat_graph(n: int, k: int, jobs: int = 1) -> RunReport:
    """Dual-graph edges must be exactly the single-exchange (reflection)
    pairs, and every edge must join comparable facets."""
    _guard_exhaustive(n)
    started = time.perf_counter()
    total = 1 << sum(1 for _ in all_ksubsets(n, k))
    args = [(n, k, lo, hi) for lo, hi in _chunks(total)]
    parts = _run_chunked(_remark_chunk, args, jobs)
    return _merge("remark-bruhat-graph", parts, started, total)


SUITES = {
    "extensions-shell": extensions_shell,
    "barycentric-coxeter": barycentric_coxeter,
    "conf-ideals-flagshell": conf_ideals_flagshell,
    "promotion-shell": promotion_shell,
    "evacuation-shell": evacuation_shell,
    "hasse-vs-dual": hasse_vs_dual,
    "eq2-oracle": eq2_oracle,
    "remark-bruhat-graph": remark_bruhat_graph,
}
