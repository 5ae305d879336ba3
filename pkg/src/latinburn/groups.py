"""Finite groups as multiplication tables, and their Cayley-table squares.

Elements are the indices ``0..order-1``; ``table[a][b]`` is the product
``a * b``. Rows, columns and symbols of the Cayley square are identified with
group elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .chains import Subsquare, closure
from .errors import (
    BadElement,
    BadLine,
    NoIdentity,
    NotAssociative,
    NotLatin,
    OrderTooLarge,
    ParamTooLarge,
)
from .latin import LatinSquare, LineKind, LineRef, col, row

GENERATING_GUARD = 64


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    name: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))


def group_from_table(table, name: str = "") -> FiniteGroup:
    """Validate a multiplication table and wrap it as a group.

    Raises NotLatin, NoIdentity or NotAssociative. A Latin table with an
    identity that is associative has two-sided inverses, which are read off
    the identity's positions.
    """
    rows = [list(r) for r in table]
    n = len(rows)
    try:
        square = LatinSquare(n, rows)
    except ValueError as exc:
        raise NotLatin(str(exc)) from exc
    t = square.grid
    ident = next(
        (e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))), None
    )
    if ident is None:
        raise NoIdentity("no two-sided identity element")
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative(a, b, c)
    inverse = tuple(square.col_of[x][ident] for x in range(n))
    return FiniteGroup(n, t, ident, inverse, name)


def _perm_group(perms: Sequence[tuple[int, ...]], name: str) -> FiniteGroup:
    """Group of the given permutations (listed in index order), composed as ``(a*b)(i) = a[b[i]]``."""
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[i] for i in b)] for b in perms] for a in perms]
    return group_from_table(table, name)


def z(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return group_from_table([[(a + b) % n for b in range(n)] for a in range(n)], f"Z{n}")


def z2_pow(k: int) -> FiniteGroup:
    """``Z_2^k`` under bitwise XOR."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > 6:
        raise ParamTooLarge(f"Z2^{k} is larger than the supported 64 elements")
    n = 1 << k
    return group_from_table([[a ^ b for b in range(n)] for a in range(n)], f"Z2^{k}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Pairs ``(a, b)`` flattened to ``a * |g2| + b``, as for square products."""
    n2 = g2.order
    table = [
        [g1.table[a1][b1] * n2 + g2.table[a2][b2] for b1 in range(g1.order) for b2 in range(n2)]
        for a1 in range(g1.order)
        for a2 in range(n2)
    ]
    return group_from_table(table, f"{g1.name}x{g2.name}")


def sym(m: int) -> FiniteGroup:
    """Symmetric group on m points; elements are permutations in lexicographic order."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > 4:
        raise ParamTooLarge("sym() supports m <= 4")
    return _perm_group(list(itertools.permutations(range(m))), f"S{m}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon (order 2m): element ``i + m*j`` is rotation i, then reflection if j."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > 6:
        raise ParamTooLarge("dihedral() supports m <= 6")
    if m <= 2:
        # D1 = Z2, D2 = Z2 x Z2; the polygon picture degenerates
        return z(2) if m == 1 else direct_product(z(2), z(2))
    rot = [tuple((v + i) % m for v in range(m)) for i in range(m)]
    ref = [tuple((i - v) % m for v in range(m)) for i in range(m)]
    return _perm_group(rot + ref, f"D{m}")


NAMED_GROUPS = {
    "s3": lambda: sym(3),
    "s4": lambda: sym(4),
    "d4": lambda: dihedral(4),
    "z2xz4": lambda: direct_product(z(2), z(4)),
}


def named_group(spec: str) -> FiniteGroup:
    """Look up ``z7``, ``z2^3``, ``s3``, ``d4``, ``z2xz4`` and similar names."""
    key = spec.strip().lower()
    if key in NAMED_GROUPS:
        return NAMED_GROUPS[key]()
    if key.startswith("z2^"):
        return z2_pow(int(key[3:]))
    if key.startswith("z") and key[1:].isdigit():
        return z(int(key[1:]))
    if key.startswith("s") and key[1:].isdigit():
        return sym(int(key[1:]))
    if key.startswith("d") and key[1:].isdigit():
        return dihedral(int(key[1:]))
    raise ValueError(f"unknown group {spec!r}")


def _check_elements(group: FiniteGroup, elems: Iterable[int]) -> list[int]:
    out = list(elems)
    for x in out:
        if not isinstance(x, int) or not 0 <= x < group.order:
            raise BadElement(f"{x!r} is not an element of a group of order {group.order}")
    return out


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Closure of ``gens`` and the identity under multiplication."""
    gens = _check_elements(group, gens)
    found = {group.identity}
    frontier = [group.identity]
    t = group.table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


def min_generating_size(
    group: FiniteGroup, guard: int = GENERATING_GUARD
) -> tuple[int, tuple[int, ...]]:
    """Smallest generating set, lexicographically least among those of that size.

    The identity is left out of candidate sets; it never helps.
    """
    if group.order > guard:
        raise OrderTooLarge(f"group order {group.order} exceeds guard {guard}")
    candidates = [x for x in group.elements() if x != group.identity]
    for k in range(len(candidates) + 1):
        for gens in itertools.combinations(candidates, k):
            if len(subgroup_generated(group, gens)) == group.order:
                return k, gens
    raise AssertionError("the whole group generates itself")  # pragma: no cover


def cayley_square(group: FiniteGroup) -> LatinSquare:
    return LatinSquare(group.order, group.table)


def coset_columns_predicate(
    group: FiniteGroup, r: int, c: int, lines: Iterable[LineRef]
) -> tuple[frozenset[int], bool]:
    """Predict the closure of row r, column c and ``lines`` via cosets, then check it.

    Each extra line is mapped to a column element: a column stays itself, a
    symbol x becomes ``r^-1 x``, a row x becomes ``r^-1 x c``. With
    ``s_i = col_i c^-1`` and ``H = <s_1..s_k>``, the predicted columns are
    ``H c`` and the predicted rows ``r H``. Returns the predicted columns
    and whether both predictions match the actual closure.
    """
    r, c = _check_elements(group, [r, c])
    lines = list(lines)
    t, inv = group.table, group.inverse
    for line in lines:
        if not 0 <= line.index < group.order:
            raise BadLine(f"line {line} out of range")
        if line == row(r) or line == col(c):
            raise BadLine(f"line {line} repeats the fixed row/column")
    gens = []
    for line in lines:
        if line.kind == LineKind.COL:
            target = line.index
        elif line.kind == LineKind.SYM:
            target = t[inv[r]][line.index]
        else:
            target = t[t[inv[r]][line.index]][c]
        gens.append(t[target][inv[c]])
    sub = subgroup_generated(group, gens)
    cols = frozenset(t[h][c] for h in sub)
    rows = frozenset(t[r][h] for h in sub)
    actual: Subsquare = closure(cayley_square(group), None, [row(r), col(c), *lines])
    return cols, actual.cols == cols and actual.rows == rows


def random_coset_case(group: FiniteGroup, rng: random.Random, max_lines: int = 3):
    """A random ``(r, c, lines)`` argument for ``coset_columns_predicate``."""
    r = rng.randrange(group.order)
    c = rng.randrange(group.order)
    pool = [
        LineRef(k, i)
        for k in LineKind
        for i in range(group.order)
        if LineRef(k, i) not in (row(r), col(c))
    ]
    lines = rng.sample(pool, rng.randint(1, max_lines))
    return r, c, lines


def scc_group_formula(group: FiniteGroup, guard: int = GENERATING_GUARD) -> int:
    return min_generating_size(group, guard)[0] + 1
