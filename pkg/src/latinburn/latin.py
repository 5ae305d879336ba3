"""Latin squares: representation, validation, generators and the ``.ls`` format.

All indices (rows, columns, symbols) are 0-based. A product of squares of
orders ``n1`` and ``n2`` flattens the pair ``(a, b)`` to ``a * n2 + b`` for
rows, columns and symbols alike.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    ColViolation,
    InvalidOrder,
    OrderTooLarge,
    ParseError,
    RowViolation,
    ShapeError,
)

ENUMERATION_GUARD = 4
ENUMERATION_HARD_LIMIT = 5


class Entry(NamedTuple):
    row: int
    col: int
    sym: int

    def lines(self) -> tuple["LineRef", "LineRef", "LineRef"]:
        return (
            LineRef(LineKind.ROW, self.row),
            LineRef(LineKind.COL, self.col),
            LineRef(LineKind.SYM, self.sym),
        )


class LineKind(enum.IntEnum):
    ROW = 0
    COL = 1
    SYM = 2

    @property
    def tag(self) -> str:
        return "RCS"[self.value]


class LineRef(NamedTuple):
    kind: LineKind
    index: int

    def __str__(self):
        return f"{self.kind.tag}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "LineRef":
        """Parse ``R3`` / ``C0`` / ``S12`` (case-insensitive)."""
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in "RCS" or not text[1:].isdigit():
            raise ValueError(f"bad line reference {text!r}")
        return cls(LineKind("RCS".index(text[0].upper())), int(text[1:]))

    def flat(self, n: int) -> int:
        """Index among the 3n lines: rows, then columns, then symbols."""
        return self.kind * n + self.index


def row(i: int) -> LineRef:
    return LineRef(LineKind.ROW, i)


def col(i: int) -> LineRef:
    return LineRef(LineKind.COL, i)


def sym(i: int) -> LineRef:
    return LineRef(LineKind.SYM, i)


@dataclass(frozen=True)
class LatinSquare:
    """An order-``n`` Latin square on symbols ``0..n-1``.

    Construction validates the grid, so every instance satisfies the Latin
    property. The grid is stored as a tuple of tuples; ``array`` gives a
    numpy copy.
    """

    order: int
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "grid", _check_grid(self.order, self.grid))

    def __getitem__(self, rc):
        r, c = rc
        return self.grid[r][c]

    def __repr__(self):
        return f"LatinSquare(order={self.order}, grid={[list(r) for r in self.grid]})"

    @property
    def array(self) -> np.ndarray:
        return np.array(self.grid, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def col_of(self) -> tuple[tuple[int, ...], ...]:
        """``col_of[r][s]`` is the column holding symbol ``s`` in row ``r``."""
        n = self.order
        table = [[0] * n for _ in range(n)]
        for r in range(n):
            for c, s in enumerate(self.grid[r]):
                table[r][s] = c
        return tuple(map(tuple, table))

    @cached_property
    def row_of(self) -> tuple[tuple[int, ...], ...]:
        """``row_of[c][s]`` is the row holding symbol ``s`` in column ``c``."""
        n = self.order
        table = [[0] * n for _ in range(n)]
        for r in range(n):
            for c, s in enumerate(self.grid[r]):
                table[c][s] = r
        return tuple(map(tuple, table))

    def entries(self) -> tuple[Entry, ...]:
        """All n^2 entries in row-major order."""
        return tuple(
            Entry(r, c, s) for r, line in enumerate(self.grid) for c, s in enumerate(line)
        )

    def entry(self, r: int, c: int) -> Entry:
        return Entry(r, c, self.grid[r][c])

    def entry_index(self, r: int, c: int) -> int:
        return r * self.order + c

    def lines(self) -> tuple[LineRef, ...]:
        n = self.order
        return tuple(LineRef(k, i) for k in LineKind for i in range(n))

    def line_entries(self, line: LineRef) -> tuple[Entry, ...]:
        n, i = self.order, line.index
        if line.kind == LineKind.ROW:
            return tuple(self.entry(i, c) for c in range(n))
        if line.kind == LineKind.COL:
            return tuple(self.entry(r, i) for r in range(n))
        return tuple(Entry(r, self.col_of[r][i], i) for r in range(n))

    def has_entry(self, e: Sequence[int]) -> bool:
        r, c, s = e
        n = self.order
        return 0 <= r < n and 0 <= c < n and self.grid[r][c] == s


def _check_grid(order, grid) -> tuple[tuple[int, ...], ...]:
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool) or order < 1:
        raise ShapeError(f"order must be a positive integer, got {order!r}")
    order = int(order)
    try:
        arr = np.asarray(grid)
    except ValueError as exc:  # ragged input
        raise ShapeError(f"grid is not {order}x{order}") from exc
    if arr.shape != (order, order):
        raise ShapeError(f"grid is not {order}x{order} (shape {arr.shape})")
    if arr.dtype.kind not in "iu":
        if arr.dtype.kind == "f" and np.all(np.mod(arr, 1) == 0):
            arr = arr.astype(np.int64)
        else:
            raise ShapeError("grid symbols must be integers")
    bad = np.argwhere((arr < 0) | (arr >= order))
    if len(bad):
        r, c = bad[0]
        raise ShapeError(f"symbol {arr[r, c]} at ({r},{c}) out of range [0,{order})")
    for r in range(order):
        seen = np.bincount(arr[r], minlength=order)
        if seen.max() > 1:
            raise RowViolation(r, int(np.argmax(seen)))
    for c in range(order):
        seen = np.bincount(arr[:, c], minlength=order)
        if seen.max() > 1:
            raise ColViolation(c, int(np.argmax(seen)))
    return tuple(tuple(int(x) for x in line) for line in arr)


def validate(order: int, grid) -> LatinSquare:
    """Check ``grid`` and wrap it as a :class:`LatinSquare`.

    Raises ShapeError, RowViolation or ColViolation.
    """
    return LatinSquare(order, grid)


def cyclic(n: int) -> LatinSquare:
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    idx = np.arange(n)
    return LatinSquare(n, np.add.outer(idx, idx) % n)


def product(first: LatinSquare, second: LatinSquare) -> LatinSquare:
    """Direct product; pair ``(a, b)`` becomes index ``a * n2 + b``."""
    n1, n2 = first.order, second.order
    a, b = first.array, second.array
    grid = a[:, None, :, None] * n2 + b[None, :, None, :]
    return LatinSquare(n1 * n2, grid.reshape(n1 * n2, n1 * n2))


INTERCALATE = LatinSquare(2, ((0, 1), (1, 0)))


def intercalate_power(k: int) -> LatinSquare:
    """The k-fold product of intercalates, i.e. grid ``r XOR c`` of order 2^k."""
    if k < 1:
        raise InvalidOrder(f"k must be >= 1, got {k}")
    square = INTERCALATE
    for _ in range(k - 1):
        square = product(square, INTERCALATE)
    return square


def _check_enum_order(n, allow_large):
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    limit = ENUMERATION_HARD_LIMIT if allow_large else ENUMERATION_GUARD
    if n > limit:
        raise OrderTooLarge(
            f"enumeration of order {n} exceeds guard {limit}"
            + ("" if allow_large else " (use allow_large for order 5)")
        )


def enumerate_all(n: int, allow_large: bool = False) -> Iterator[LatinSquare]:
    """Yield every order-``n`` Latin square once, in lexicographic grid order.

    Cells are filled row by row with ascending candidate symbols. Order 5
    (161280 squares) requires ``allow_large=True``.
    """
    _check_enum_order(n, allow_large)
    full = (1 << n) - 1
    grid = [[0] * n for _ in range(n)]
    row_used = [0] * n
    col_used = [0] * n

    def fill(cell):
        if cell == n * n:
            yield LatinSquare(n, tuple(tuple(r) for r in grid))
            return
        r, c = divmod(cell, n)
        free = full & ~(row_used[r] | col_used[c])
        while free:
            bit = free & -free
            free ^= bit
            grid[r][c] = bit.bit_length() - 1
            row_used[r] |= bit
            col_used[c] |= bit
            yield from fill(cell + 1)
            row_used[r] ^= bit
            col_used[c] ^= bit

    yield from fill(0)


def random_square(n: int, seed: int) -> LatinSquare:
    """A Latin square that depends only on ``(n, seed)``.

    Rows are added one at a time; each new row is a perfect matching between
    columns and their still-allowed symbols, found by augmenting-path search
    with seed-shuffled candidate orders. A Latin rectangle always extends, so
    no global backtracking is needed. The distribution is not uniform.
    """
    if n < 1:
        raise InvalidOrder(f"order must be >= 1, got {n}")
    rng = random.Random(seed)
    grid: list[list[int]] = []
    col_used = [set() for _ in range(n)]
    for _ in range(n):
        allowed = [[s for s in range(n) if s not in col_used[c]] for c in range(n)]
        for options in allowed:
            rng.shuffle(options)
        owner = [-1] * n  # symbol -> column

        def augment(c, seen):
            for s in allowed[c]:
                if s in seen:
                    continue
                seen.add(s)
                if owner[s] < 0 or augment(owner[s], seen):
                    owner[s] = c
                    return True
            return False

        order = list(range(n))
        rng.shuffle(order)
        for c in order:
            if not augment(c, set()):  # pragma: no cover - Hall's theorem
                raise RuntimeError("Latin rectangle failed to extend")
        line = [0] * n
        for s, c in enumerate(owner):
            line[c] = s
            col_used[c].add(s)
        grid.append(line)
    return LatinSquare(n, tuple(map(tuple, grid)))


def parse(text: str) -> LatinSquare:
    """Read the ``.ls`` format.

    First non-comment line is the order n, followed by n rows of n
    whitespace-separated symbols. Lines starting with ``#`` and blank lines
    are skipped.
    """
    rows: list[list[int]] = []
    order = None
    last = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
                raise ParseError(lineno, f"expected a positive order, got {line!r}")
            order = int(tokens[0])
            continue
        if len(rows) == order:
            raise ParseError(lineno, "unexpected content after the last row")
        if len(tokens) != order:
            raise ParseError(lineno, f"expected {order} symbols, got {len(tokens)}")
        try:
            rows.append([int(t) for t in tokens])
        except ValueError:
            raise ParseError(lineno, f"non-integer symbol in {line!r}") from None
    if order is None:
        raise ParseError(last + 1, "missing order line")
    if len(rows) < order:
        raise ParseError(last + 1, f"expected {order} rows, got {len(rows)}")
    return validate(order, rows)


def serialize(square: LatinSquare) -> str:
    lines = [str(square.order)]
    lines += [" ".join(map(str, r)) for r in square.grid]
    return "\n".join(lines) + "\n"
