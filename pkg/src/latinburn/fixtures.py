"""Worked examples, 0-based.

``ORDER3_*``: the cyclic square of order 3 with a 3-entry seed that burns
H_L in two propagation rounds.

``ORDER5_*``: an order-5 square with a minimum lazy burning set of H_L
(13 entries), a larger non-minimum one (14 entries), and an 11-entry
cover-sequence ordering of the larger set's complement.
"""

from .latin import Entry, LatinSquare

ORDER3_SQUARE = LatinSquare(3, ((0, 1, 2), (1, 2, 0), (2, 0, 1)))
ORDER3_SEED = ((0, 0), (0, 1), (1, 0))
ORDER3_ROUND1 = ((0, 2), (2, 0), (2, 2))

ORDER5_SQUARE = LatinSquare(
    5,
    (
        (0, 1, 2, 3, 4),
        (1, 3, 0, 4, 2),
        (2, 4, 3, 1, 0),
        (3, 0, 4, 2, 1),
        (4, 2, 1, 0, 3),
    ),
)
ORDER5_MIN_SEED = ((0, 0),) + tuple((r, c) for r in (2, 3, 4) for c in range(4))
ORDER5_LARGER_SEED = ORDER5_MIN_SEED + ((0, 2),)
ORDER5_SEQUENCE = (
    (0, 3), (1, 3), (1, 1), (0, 1), (0, 4), (1, 0), (1, 2), (1, 4), (2, 4), (3, 4), (4, 4),
)


def cells_to_entries(square: LatinSquare, cells) -> tuple[Entry, ...]:
    return tuple(square.entry(r, c) for r, c in cells)
