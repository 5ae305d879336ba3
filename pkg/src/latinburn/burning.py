"""Lazy burning on hypergraphs and exhaustive minimum-seed oracles.

A vertex burns in round t when it is the only vertex of some hyperedge of
size >= 2 that was unburned at the end of round t-1. Singleton hyperedges
never propagate, so a vertex covered only by singletons (or by nothing) has
to be seeded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import BadSeed, NoSolutionInRange, OrderTooLarge
from .latin import Entry, LatinSquare, LineRef

COMPLEMENT_SEARCH_GUARD = 5
_BATCH = 1 << 16


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    hyperedges: tuple[frozenset[int], ...]
    vertex_labels: tuple[Any, ...] | None = None

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.hyperedges)
        for i, e in enumerate(edges):
            if not e:
                raise ValueError(f"hyperedge {i} is empty")
            if min(e) < 0 or max(e) >= self.vertex_count:
                raise ValueError(f"hyperedge {i} has a vertex outside [0, {self.vertex_count})")
        object.__setattr__(self, "hyperedges", edges)
        if self.vertex_labels is not None:
            labels = tuple(self.vertex_labels)
            if len(labels) != self.vertex_count:
                raise ValueError("need exactly one label per vertex")
            object.__setattr__(self, "vertex_labels", labels)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, e in enumerate(self.hyperedges):
            for v in e:
                inc[v].append(i)
        return tuple(map(tuple, inc))

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Bitmask per hyperedge of size >= 2 (singletons never propagate)."""
        return tuple(sum(1 << v for v in e) for e in self.hyperedges if len(e) >= 2)

    @cached_property
    def _label_index(self) -> dict:
        if self.vertex_labels is None:
            return {}
        return {lab: i for i, lab in enumerate(self.vertex_labels)}

    def label(self, v: int):
        return v if self.vertex_labels is None else self.vertex_labels[v]

    def index_of(self, label) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise BadSeed(f"no vertex labelled {label!r}") from None


def build_HL(square: LatinSquare) -> Hypergraph:
    """Entries as vertices (row-major), lines as hyperedges (rows, columns, symbols)."""
    n = square.order
    edges = [frozenset(r * n + c for c in range(n)) for r in range(n)]
    edges += [frozenset(r * n + c for r in range(n)) for c in range(n)]
    edges += [frozenset(r * n + square.col_of[r][s] for r in range(n)) for s in range(n)]
    return Hypergraph(n * n, tuple(edges), square.entries())


def build_H3L(square: LatinSquare) -> Hypergraph:
    """Lines as vertices (rows 0..n-1, columns n..2n-1, symbols 2n..3n-1), entries as hyperedges."""
    n = square.order
    edges = tuple(frozenset((e.row, n + e.col, 2 * n + e.sym)) for e in square.entries())
    return Hypergraph(3 * n, edges, square.lines())


@dataclass(frozen=True)
class BurnTrace:
    seed: frozenset[int]
    round_of: dict[int, int] = field(hash=False)
    rounds: int
    complete: bool

    @property
    def burned(self) -> frozenset[int]:
        return frozenset(self.round_of)

    def layers(self) -> list[list[int]]:
        """Vertices burned in each propagation round 1..rounds, sorted."""
        out: list[list[int]] = [[] for _ in range(self.rounds)]
        for v, t in self.round_of.items():
            if t:
                out[t - 1].append(v)
        return [sorted(layer) for layer in out]

    def to_json(self, hypergraph: Hypergraph | None = None) -> dict:
        def lab(v):
            return label_to_json(hypergraph.label(v) if hypergraph is not None else v)

        return {
            "seed": [lab(v) for v in sorted(self.seed)],
            "rounds": [[lab(v) for v in layer] for layer in self.layers()],
            "complete": self.complete,
        }


def label_to_json(label):
    if isinstance(label, Entry):
        return [label.row, label.col, label.sym]
    if isinstance(label, LineRef):
        return str(label)
    return label


def _seed_indices(hypergraph: Hypergraph, seed: Iterable) -> frozenset[int]:
    out = set()
    for v in seed:
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            if not 0 <= v < hypergraph.vertex_count:
                raise BadSeed(f"vertex {v} outside [0, {hypergraph.vertex_count})")
            out.add(int(v))
        else:
            out.add(hypergraph.index_of(v))
    return frozenset(out)


def lazy_burn(hypergraph: Hypergraph, seed: Iterable) -> BurnTrace:
    """Run synchronous lazy burning from ``seed`` until a round burns nothing.

    ``seed`` holds vertex indices or vertex labels (Entry / LineRef).
    """
    seed = _seed_indices(hypergraph, seed)
    edges = hypergraph.hyperedges
    incidence = hypergraph.incidence
    round_of = dict.fromkeys(seed, 0)
    unburned = [len(e) - sum(v in round_of for v in e) for e in edges]
    candidates = [i for i, e in enumerate(edges) if len(e) >= 2 and unburned[i] == 1]
    t = 0
    while True:
        fresh = set()
        for i in candidates:
            if unburned[i] == 1:
                fresh.update(v for v in edges[i] if v not in round_of)
        if not fresh:
            break
        t += 1
        candidates = []
        for v in fresh:
            round_of[v] = t
        for v in fresh:
            for i in incidence[v]:
                unburned[i] -= 1
                if unburned[i] == 1 and len(edges[i]) >= 2:
                    candidates.append(i)
    return BurnTrace(seed, round_of, t, len(round_of) == hypergraph.vertex_count)


def is_lazy_burning_set(hypergraph: Hypergraph, seed: Iterable) -> bool:
    return lazy_burn(hypergraph, seed).complete


def burn_closure_masks(hypergraph: Hypergraph, seeds: np.ndarray) -> np.ndarray:
    """Final burned set, as a bitmask, for each seed bitmask in ``seeds``.

    Vectorised fixpoint iteration over all seeds at once; vertices are
    absorbed edge by edge rather than in synchronous rounds, which reaches
    the same final set. Requires at most 64 vertices.
    """
    if hypergraph.vertex_count > 64:
        raise ValueError("bitmask closure supports at most 64 vertices")
    burned = np.asarray(seeds, dtype=np.uint64)
    one = np.uint64(1)
    zero = np.uint64(0)
    masks = [np.uint64(m) for m in hypergraph.edge_masks]
    while True:
        before = burned
        for e in masks:
            left = e & ~burned
            single = (left != zero) & ((left & (left - one)) == zero)
            burned = burned | np.where(single, left, zero)
        if np.array_equal(burned, before):
            return burned


def _combination_masks(vertex_count: int, k: int):
    """Yield arrays of k-subset bitmasks in lexicographic subset order."""
    combos = itertools.combinations(range(vertex_count), k)
    if k == 0:
        yield np.zeros(1, dtype=np.uint64)
        return
    while True:
        chunk = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(combos, _BATCH)), dtype=np.uint64
        )
        if not len(chunk):
            return
        yield np.bitwise_or.reduce(np.uint64(1) << chunk.reshape(-1, k), axis=1)


def _first_burning_subset(hypergraph: Hypergraph, k: int) -> tuple[int, ...] | None:
    full = np.uint64((1 << hypergraph.vertex_count) - 1)
    for masks in _combination_masks(hypergraph.vertex_count, k):
        done = np.flatnonzero(burn_closure_masks(hypergraph, masks) == full)
        if len(done):
            m = int(masks[done[0]])
            return tuple(v for v in range(hypergraph.vertex_count) if m >> v & 1)
    return None


def min_lazy_burning_set(
    hypergraph: Hypergraph, lower_bound: int = 0, upper_bound: int | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exhaustive lazy burning number with the lexicographically least witness.

    Subsets are tried by increasing size from ``lower_bound``. The bounds
    only steer the search: if a witness appears already at ``lower_bound``,
    smaller sizes are checked until one fails. Burning sets are closed under
    supersets, so one failing size certifies minimality.
    """
    v_count = hypergraph.vertex_count
    if upper_bound is None:
        upper_bound = v_count
    if not 0 <= lower_bound <= upper_bound <= v_count:
        raise ValueError(f"need 0 <= {lower_bound} <= {upper_bound} <= {v_count}")
    for k in range(lower_bound, upper_bound + 1):
        witness = _first_burning_subset(hypergraph, k)
        if witness is None:
            continue
        if k == lower_bound:
            while k > 0:
                smaller = _first_burning_subset(hypergraph, k - 1)
                if smaller is None:
                    break
                k, witness = k - 1, smaller
        return k, witness
    raise NoSolutionInRange(f"no lazy burning set of size {lower_bound}..{upper_bound}")


def _entry_line_masks(square: LatinSquare) -> list[int]:
    n = square.order
    return [1 << e.row | 1 << (n + e.col) | 1 << (2 * n + e.sym) for e in square.entries()]


def min_lbs_complement_search(
    square: LatinSquare, guard: int = COMPLEMENT_SEARCH_GUARD, allow_large: bool = False
) -> tuple[int, tuple[int, ...]]:
    """Lazy burning number of H_L via the longest weak cover-sequence.

    A sequence is grown one entry at a time, each entry adding at least one
    new line. An entry with an uncovered line cannot have been used yet, so
    the set of covered lines is a complete search state and is memoised.
    Returns ``(n^2 - longest, seed)`` where ``seed`` is the complement of a
    longest sequence, as H_L vertex indices.
    """
    n = square.order
    if n > guard and not allow_large:
        raise OrderTooLarge(f"order {n} exceeds complement-search guard {guard}")
    lines = _entry_line_masks(square)
    best: dict[int, tuple[int, int]] = {}

    def longest(state: int) -> int:
        hit = best.get(state)
        if hit is not None:
            return hit[0]
        top, choice = 0, -1
        for i, m in enumerate(lines):
            if m & ~state:
                got = 1 + longest(state | m)
                if got > top:
                    top, choice = got, i
        best[state] = (top, choice)
        return top

    length = longest(0)
    used = set()
    state = 0
    while True:
        _, choice = best[state]
        if choice < 0:
            break
        used.add(choice)
        state |= lines[choice]
    seed = tuple(v for v in range(n * n) if v not in used)
    return n * n - length, seed


def lazy_burn_async(hypergraph: Hypergraph, seed: Iterable) -> frozenset[int]:
    """Final burned set, burning one eligible vertex at a time.

    Independent slow reference for the confluence property of ``lazy_burn``.
    """
    burned = set(_seed_indices(hypergraph, seed))
    changed = True
    while changed:
        changed = False
        for e in hypergraph.hyperedges:
            if len(e) < 2:
                continue
            left = [v for v in e if v not in burned]
            if len(left) == 1:
                burned.add(left[0])
                changed = True
                break
    return frozenset(burned)


def seed_from_labels(hypergraph: Hypergraph, labels: Sequence) -> frozenset[int]:
    return _seed_indices(hypergraph, labels)


def line_vertex(square_order: int, line: LineRef) -> int:
    """H^L vertex index of a line."""
    return line.flat(square_order)


def entry_vertex(square_order: int, e: Entry) -> int:
    """H_L vertex index of an entry."""
    return e.row * square_order + e.col

