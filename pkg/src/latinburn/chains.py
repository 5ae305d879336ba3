"""Subsquare closure, connected chains and cover-sequences.

A subsquare is stored as three index sets (rows, columns, symbols). The
closure of some rows/columns/symbols is the least subsquare touching all of
them; it is also exactly what lazy burning on H^L burns from those lines.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .burning import build_HL, lazy_burn
from .errors import (
    DuplicateEntry,
    InvalidOrder,
    MalformedChain,
    MultipleWeight3,
    NotABurningSet,
    NotACover,
    NotAnEntry,
    NotASequence,
    OrderTooLarge,
    UnderdeterminedClosure,
)
from .latin import Entry, LatinSquare, LineKind, LineRef

MCS_GUARD = 4
MCS_HARD_LIMIT = 5


@dataclass(frozen=True)
class Subsquare:
    rows: frozenset[int]
    cols: frozenset[int]
    syms: frozenset[int]

    @classmethod
    def empty(cls) -> "Subsquare":
        return cls(frozenset(), frozenset(), frozenset())

    @classmethod
    def full(cls, n: int) -> "Subsquare":
        everything = frozenset(range(n))
        return cls(everything, everything, everything)

    @classmethod
    def cell(cls, e: Sequence[int]) -> "Subsquare":
        r, c, s = e
        return cls(frozenset([r]), frozenset([c]), frozenset([s]))

    @property
    def order(self) -> int:
        return len(self.rows)

    def index_set(self, kind: LineKind) -> frozenset[int]:
        return (self.rows, self.cols, self.syms)[kind]

    def contains_line(self, line: LineRef) -> bool:
        return line.index in self.index_set(line.kind)

    def contains_entry(self, e: Sequence[int]) -> bool:
        return e[0] in self.rows and e[1] in self.cols and e[2] in self.syms

    def issubset(self, other: "Subsquare") -> bool:
        return self.rows <= other.rows and self.cols <= other.cols and self.syms <= other.syms

    def entries(self, square: LatinSquare) -> tuple[Entry, ...]:
        return tuple(
            square.entry(r, c) for r in sorted(self.rows) for c in sorted(self.cols)
        )

    def to_json(self) -> dict:
        return {"rows": sorted(self.rows), "cols": sorted(self.cols), "syms": sorted(self.syms)}


def is_subsquare(square: LatinSquare, sub: Subsquare) -> bool:
    """Equal sizes and closed under the three Latin completion rules."""
    if not len(sub.rows) == len(sub.cols) == len(sub.syms):
        return False
    g = square.grid
    return all(g[r][c] in sub.syms for r in sub.rows for c in sub.cols) and all(
        square.col_of[r][s] in sub.cols for r in sub.rows for s in sub.syms
    )


def closure(
    square: LatinSquare,
    base: Subsquare | Entry | Iterable[Entry] | None = None,
    extra_lines: Iterable[LineRef] = (),
) -> Subsquare:
    """Least subsquare containing ``base`` and touching every line in ``extra_lines``.

    Raises UnderdeterminedClosure when the input touches exactly one line
    kind (e.g. only rows), since no completion rule can fire.
    """
    sets: tuple[set[int], set[int], set[int]] = (set(), set(), set())
    if isinstance(base, Subsquare):
        for k in LineKind:
            sets[k].update(base.index_set(k))
    elif base is not None:
        entries = [base] if isinstance(base, Entry) else list(base)
        for e in entries:
            if not square.has_entry(e):
                raise NotAnEntry(f"{tuple(e)} is not an entry of the square")
            for k in LineKind:
                sets[k].add(e[k])
    for line in extra_lines:
        if not 0 <= line.index < square.order:
            raise ValueError(f"line {line} out of range")
        sets[line.kind].add(line.index)
    if sum(1 for s in sets if s) == 1:
        raise UnderdeterminedClosure("input touches only one kind of line")
    return _close(square, *sets)


def _close(square: LatinSquare, rows: set, cols: set, syms: set) -> Subsquare:
    grid, col_of, row_of = square.grid, square.col_of, square.row_of
    queue = deque([(LineKind.ROW, r) for r in rows])
    queue += [(LineKind.COL, c) for c in cols]
    queue += [(LineKind.SYM, s) for s in syms]
    found: list[tuple[LineKind, int]] = []

    def push(kind, idx, target):
        if idx not in target:
            target.add(idx)
            found.append((kind, idx))

    while queue:
        kind, i = queue.popleft()
        if kind == LineKind.ROW:
            for c in list(cols):
                push(LineKind.SYM, grid[i][c], syms)
            for s in list(syms):
                push(LineKind.COL, col_of[i][s], cols)
        elif kind == LineKind.COL:
            for r in list(rows):
                push(LineKind.SYM, grid[r][i], syms)
            for s in list(syms):
                push(LineKind.ROW, row_of[i][s], rows)
        else:
            for r in list(rows):
                push(LineKind.COL, col_of[r][i], cols)
            for c in list(cols):
                push(LineKind.ROW, row_of[c][i], rows)
        queue.extend(found)
        found.clear()
    return Subsquare(frozenset(rows), frozenset(cols), frozenset(syms))


@dataclass(frozen=True)
class ConnectedChain:
    """Nested subsquares ``∅ ⊂ cell ⊂ ... ⊂ L``.

    ``witness_lines[j]`` is the line whose closure with ``squares[j + 1]``
    gives ``squares[j + 2]``; the first step is fixed by the cell itself.
    """

    squares: tuple[Subsquare, ...]
    witness_lines: tuple[LineRef, ...]

    @property
    def length(self) -> int:
        return len(self.squares) - 1

    def to_json(self) -> dict:
        return {
            "kind": "connected_chain",
            "length": self.length,
            "squares": [s.to_json() for s in self.squares],
            "witness_lines": [line_to_json(l) for l in self.witness_lines],
        }


def line_to_json(line: LineRef) -> dict:
    return {"kind": line.kind.name.lower(), "index": line.index}


def check_chain(square: LatinSquare, chain: ConnectedChain) -> None:
    """Raise MalformedChain unless ``chain`` is a connected chain of ``square``."""
    sq = chain.squares
    if len(sq) < 2:
        raise MalformedChain("a chain needs at least the empty square and a cell")
    if sq[0] != Subsquare.empty():
        raise MalformedChain("chain must start at the empty square")
    first = sq[1]
    if first.order != 1 or not is_subsquare(square, first):
        raise MalformedChain("second square must be a single cell of the square")
    if sq[-1] != Subsquare.full(square.order):
        raise MalformedChain("chain must end at the full square")
    if len(chain.witness_lines) != len(sq) - 2:
        raise MalformedChain("need one witness line per step after the first cell")
    for i, line in enumerate(chain.witness_lines, start=2):
        prev, cur = sq[i - 1], sq[i]
        if not prev.issubset(cur):
            raise MalformedChain(f"square {i} does not contain square {i - 1}")
        if prev.contains_line(line):
            raise MalformedChain(f"witness line {line} already meets square {i - 1}")
        if closure(square, prev, [line]) != cur:
            raise MalformedChain(f"square {i} is not the closure of square {i - 1} with {line}")


def scc(square: LatinSquare) -> tuple[int, ConnectedChain]:
    """Length of a shortest connected chain, with a witness.

    Breadth-first search over distinct subsquares: the single cells sit at
    distance 1 and each move closes the current subsquare with one line it
    does not meet. Cells and lines are scanned in a fixed order, so the
    witness is deterministic.
    """
    n = square.order
    if n < 2:
        raise InvalidOrder("scc is defined here for order >= 2")
    full = Subsquare.full(n)
    lines = square.lines()
    parent: dict[Subsquare, tuple[Subsquare, LineRef | None]] = {}
    frontier = []
    for e in square.entries():
        cell = Subsquare.cell(e)
        parent[cell] = (Subsquare.empty(), None)
        frontier.append(cell)
    depth = 1
    while frontier:
        depth += 1
        nxt = []
        for cur in frontier:
            for line in lines:
                if cur.contains_line(line):
                    continue
                grown = closure(square, cur, [line])
                if grown in parent:
                    continue
                parent[grown] = (cur, line)
                if grown == full:
                    return depth, _unwind(parent, full)
                nxt.append(grown)
        frontier = nxt
    raise AssertionError("full square unreachable")  # pragma: no cover


def _unwind(parent, last: Subsquare) -> ConnectedChain:
    squares, lines = [last], []
    cur = last
    while cur in parent:
        prev, line = parent[cur]
        if line is not None:
            lines.append(line)
        squares.append(prev)
        cur = prev
    return ConnectedChain(tuple(reversed(squares)), tuple(reversed(lines)))


def _log2_floor(n: int) -> int:
    return n.bit_length() - 1


def _need_order(n: int):
    if n < 2:
        raise InvalidOrder(f"order must be >= 2, got {n}")


def scc_bounds(n: int) -> tuple[int, int]:
    _need_order(n)
    return 2, _log2_floor(n) + 1


def bl_HL_bounds(n: int) -> tuple[int, int]:
    """Range of the lazy burning number of H_L over all squares of order n."""
    lo, hi = scc_bounds(n)
    return n * n - 3 * n + 1 + lo, n * n - 3 * n + 1 + hi


def bl_H3L_bounds(n: int) -> tuple[int, int]:
    lo, hi = scc_bounds(n)
    return lo + 1, hi + 1


def _scc_of(square, scc_value):
    _need_order(square.order)
    return scc(square)[0] if scc_value is None else scc_value


def bl_HL_formula(square: LatinSquare, scc_value: int | None = None) -> int:
    n = square.order
    return n * n - 3 * n + 1 + _scc_of(square, scc_value)


def bl_H3L_formula(square: LatinSquare, scc_value: int | None = None) -> int:
    return _scc_of(square, scc_value) + 1


def mcs_formula(square: LatinSquare, scc_value: int | None = None) -> int:
    return 3 * square.order - 1 - _scc_of(square, scc_value)


@dataclass(frozen=True)
class CoverSequence:
    entries: tuple[Entry, ...]
    weights: tuple[int, ...]
    strict: bool

    def __len__(self):
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "kind": "cover_sequence",
            "entries": [{"row": e.row, "col": e.col, "sym": e.sym} for e in self.entries],
            "weights": list(self.weights),
            "strict": self.strict,
        }


def _as_entries(square: LatinSquare, items: Iterable) -> list[Entry]:
    """Accept Entry triples, (row, col) pairs or H_L vertex indices."""
    n = square.order
    out = []
    for item in items:
        if isinstance(item, int):
            if not 0 <= item < n * n:
                raise NotAnEntry(f"vertex {item} out of range")
            out.append(square.entry(*divmod(item, n)))
            continue
        item = tuple(item)
        if len(item) == 2:
            r, c = item
            if not (0 <= r < n and 0 <= c < n):
                raise NotAnEntry(f"cell {item} out of range")
            out.append(square.entry(r, c))
        elif len(item) == 3 and square.has_entry(item):
            out.append(Entry(*item))
        else:
            raise NotAnEntry(f"{item} is not an entry of the square")
    return out


def sequence_weights(entries: Sequence[Entry]) -> list[int]:
    seen: set[LineRef] = set()
    weights = []
    for e in entries:
        new = [l for l in e.lines() if l not in seen]
        weights.append(len(new))
        seen.update(new)
    return weights


def validate_cover_sequence(
    square: LatinSquare, entries: Iterable, strict: bool = False
) -> CoverSequence:
    """Annotate ``entries`` with weights and check the sequence property.

    With ``strict`` the entries must also touch all 3n lines. The returned
    ``strict`` flag records whether they do, whatever mode was asked for.
    """
    seq = _as_entries(square, entries)
    seen_entries = set()
    for e in seq:
        if e in seen_entries:
            raise DuplicateEntry(f"{tuple(e)} appears twice")
        seen_entries.add(e)
    weights = sequence_weights(seq)
    for i, w in enumerate(weights):
        if w == 0:
            raise NotASequence(i)
    covered = {l for e in seq for l in e.lines()}
    uncovered = [l for l in square.lines() if l not in covered]
    if strict and uncovered:
        raise NotACover(uncovered)
    return CoverSequence(tuple(seq), tuple(weights), not uncovered)


def cover_sequence_from_lbs(square: LatinSquare, seed: Iterable) -> CoverSequence:
    """Order the unseeded entries latest-burned first (ties by row, column)."""
    seed_entries = set(_as_entries(square, seed))
    trace = lazy_burn(build_HL(square), seed_entries)
    if not trace.complete:
        raise NotABurningSet("seed does not burn H_L")
    n = square.order
    rest = [e for e in square.entries() if e not in seed_entries]
    rest.sort(key=lambda e: (-trace.round_of[e.row * n + e.col], e.row, e.col))
    return validate_cover_sequence(square, rest)


def lbs_from_weak_cover_sequence(square: LatinSquare, seq) -> frozenset[Entry]:
    entries = seq.entries if isinstance(seq, CoverSequence) else seq
    checked = validate_cover_sequence(square, entries)
    return frozenset(square.entries()) - set(checked.entries)


@dataclass(frozen=True)
class PeelResult:
    success: bool
    ordering: tuple[Entry, ...]
    residue: frozenset[Entry]


def peel_ordering(square: LatinSquare, subset: Iterable) -> PeelResult:
    """Try to order ``subset`` as a weak cover-sequence.

    Burns H_L from the complement of ``subset``. On success the ordering is
    latest-burned first; otherwise ``residue`` holds the entries that never
    burn.
    """
    target = set(_as_entries(square, subset))
    n = square.order
    trace = lazy_burn(build_HL(square), [e for e in square.entries() if e not in target])
    residue = frozenset(e for e in target if e.row * n + e.col not in trace.round_of)
    if residue:
        return PeelResult(False, (), residue)
    order = sorted(target, key=lambda e: (-trace.round_of[e.row * n + e.col], e.row, e.col))
    return PeelResult(True, tuple(order), frozenset())


def _check_mcs_order(n, guard, allow_large):
    limit = max(guard, MCS_HARD_LIMIT) if allow_large else guard
    if n > limit:
        raise OrderTooLarge(f"order {n} exceeds mcs search guard {limit}")


def mcs_exhaustive(
    square: LatinSquare, guard: int = MCS_GUARD, allow_large: bool = False
) -> tuple[int, CoverSequence]:
    """Longest cover-sequence by depth-first branch and bound.

    States are sets of used entries (a bitmask), visited once. A branch is
    cut when its length plus the number of uncovered lines cannot beat the
    best so far, since each further entry covers at least one new line.
    """
    n = square.order
    _check_mcs_order(n, guard, allow_large)
    entries = square.entries()
    line_mask = [1 << e.row | 1 << (n + e.col) | 1 << (2 * n + e.sym) for e in entries]
    full = (1 << 3 * n) - 1
    best: list = [0, ()]
    visited: set[int] = set()
    path: list[int] = []

    def dfs(used: int, covered: int):
        if covered == full:
            if len(path) > best[0]:
                best[0], best[1] = len(path), tuple(path)
            return
        if len(path) + (full & ~covered).bit_count() <= best[0] or used in visited:
            return
        visited.add(used)
        options = []
        for i, m in enumerate(line_mask):
            new = m & ~covered
            if new and not used >> i & 1:
                options.append((new.bit_count(), i))
        options.sort()
        for _, i in options:
            path.append(i)
            dfs(used | 1 << i, covered | line_mask[i])
            path.pop()

    dfs(0, 0)
    seq = validate_cover_sequence(square, [entries[i] for i in best[1]], strict=True)
    return best[0], seq


def _bridge_entry(square: LatinSquare, prev: Subsquare, line: LineRef) -> Entry:
    """Entry on ``line`` sharing exactly one other line with ``prev``."""
    if line.kind == LineKind.ROW:
        return square.entry(line.index, min(prev.cols))
    if line.kind == LineKind.COL:
        return square.entry(min(prev.rows), line.index)
    r = min(prev.rows)
    return Entry(r, square.col_of[r][line.index], line.index)


def chain_to_cover_sequence(square: LatinSquare, chain: ConnectedChain) -> CoverSequence:
    """Cover-sequence of length 3n - 1 - (chain length) built from a connected chain.

    Emits the chain's cell, then for each step the bridging entry on the
    witness line followed by every weight-1 entry of the new subsquare
    (row-major passes until none is left).
    """
    check_chain(square, chain)
    seq: list[Entry] = []
    used: set[Entry] = set()
    covered: set[LineRef] = set()

    def push(e):
        seq.append(e)
        used.add(e)
        covered.update(e.lines())

    def fill(sub: Subsquare):
        cells = sub.entries(square)
        grew = True
        while grew:
            grew = False
            for e in cells:
                if e not in used and sum(l not in covered for l in e.lines()) == 1:
                    push(e)
                    grew = True

    first = chain.squares[1]
    push(first.entries(square)[0])
    fill(first)
    for i, line in enumerate(chain.witness_lines, start=2):
        push(_bridge_entry(square, chain.squares[i - 1], line))
        fill(chain.squares[i])
    return validate_cover_sequence(square, seq, strict=True)


def cover_sequence_to_chain(square: LatinSquare, seq) -> ConnectedChain:
    """Connected chain read off a strict cover-sequence.

    Starting from the first entry's cell, repeatedly take the first entry
    outside the current subsquare and close over its outside lines. The
    witness line is one of those lines whose closure alone gives the same
    subsquare; if none does, the step closes over the first outside line
    only and the entry is picked up again later, so the chain stays connected.
    """
    entries = seq.entries if isinstance(seq, CoverSequence) else seq
    checked = validate_cover_sequence(square, entries, strict=True)
    for i, w in enumerate(checked.weights[1:], start=1):
        if w == 3:
            raise MultipleWeight3(i)
    full = Subsquare.full(square.order)
    current = Subsquare.cell(checked.entries[0])
    squares, lines = [Subsquare.empty(), current], []
    while current != full:
        e = next(x for x in checked.entries if not current.contains_entry(x))
        outside = [l for l in e.lines() if not current.contains_line(l)]
        target = closure(square, current, outside)
        witness = next((l for l in outside if closure(square, current, [l]) == target), None)
        if witness is None:
            witness = outside[0]
            target = closure(square, current, [witness])
        squares.append(target)
        lines.append(witness)
        current = target
    chain = ConnectedChain(tuple(squares), tuple(lines))
    check_chain(square, chain)
    return chain
