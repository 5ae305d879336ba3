"""Brute-force reference implementations used only by the tests.

Nothing here calls into the closure / BFS / search code it is compared with.
"""

import itertools

import numpy as np


def all_subsquares(grid):
    """Every nonempty subsquare as (rows, cols, syms) frozensets, by subset enumeration."""
    n = len(grid)
    found = []
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                syms = {grid[r][c] for r in rows for c in cols}
                if len(syms) == k:
                    found.append((frozenset(rows), frozenset(cols), frozenset(syms)))
    return found


def smallest_containing(subsquares, rows=(), cols=(), syms=()):
    """Least subsquare whose index sets contain the given indices."""
    rows, cols, syms = set(rows), set(cols), set(syms)
    best = None
    for sq in subsquares:
        if rows <= sq[0] and cols <= sq[1] and syms <= sq[2]:
            if best is None or len(sq[0]) < len(best[0]):
                best = sq
    return best


def scc_brute(grid):
    """Shortest connected chain length from an explicit list of subsquares."""
    n = len(grid)
    subs = all_subsquares(grid)
    full = (frozenset(range(n)),) * 3
    frontier = {(frozenset([r]), frozenset([c]), frozenset([grid[r][c]])) for r in range(n) for c in range(n)}
    seen = set(frontier)
    depth = 1
    while full not in frontier:
        depth += 1
        nxt = set()
        for sq in frontier:
            for kind in range(3):
                for i in range(n):
                    if i in sq[kind]:
                        continue
                    need = [set(sq[0]), set(sq[1]), set(sq[2])]
                    need[kind].add(i)
                    t = smallest_containing(subs, *need)
                    if t not in seen:
                        seen.add(t)
                        nxt.add(t)
        frontier = nxt
    return depth


def enumerate_by_columns(n):
    """Count Latin squares filling column by column (cross-check for row-major enumeration)."""
    grids = []
    grid = [[None] * n for _ in range(n)]

    def fill(cell):
        if cell == n * n:
            grids.append(tuple(tuple(r) for r in grid))
            return
        c, r = divmod(cell, n)
        used = {grid[r][j] for j in range(c)} | {grid[i][c] for i in range(r)}
        for s in range(n):
            if s not in used:
                grid[r][c] = s
                fill(cell + 1)
        grid[r][c] = None

    fill(0)
    return grids


def burn_brute(n_vertices, edges, seed):
    """Naive synchronous lazy burning returning the list of per-round new sets."""
    burned = set(seed)
    layers = []
    while True:
        new = set()
        for e in edges:
            left = [v for v in e if v not in burned]
            if len(e) >= 2 and len(left) == 1:
                new.add(left[0])
        if not new:
            return burned, layers
        burned |= new
        layers.append(new)


def min_burning_brute(n_vertices, edges):
    for k in range(n_vertices + 1):
        for seed in itertools.combinations(range(n_vertices), k):
            if len(burn_brute(n_vertices, edges, seed)[0]) == n_vertices:
                return k, seed
    raise AssertionError


def longest_cover_sequence_brute(entries, n):
    """Longest strict cover-sequence by unpruned DFS over all orderings."""
    best = 0

    def go(used, seen, length):
        nonlocal best
        if len(seen) == 3 * n:
            best = max(best, length)
        for e in entries:
            if e in used:
                continue
            lines = {("r", e[0]), ("c", e[1]), ("s", e[2])}
            if lines - seen:
                go(used | {e}, seen | lines, length + 1)

    go(frozenset(), frozenset(), 0)
    return best


def xor_grid(n):
    idx = np.arange(n)
    return np.bitwise_xor.outer(idx, idx)
