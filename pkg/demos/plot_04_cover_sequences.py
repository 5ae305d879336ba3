"""
Cover-sequences and burning sets
================================

Unseeded entries, read latest-burned first, form a sequence in which
every entry touches a new line. Conversely, the complement of such a
sequence always burns.
"""

from latinburn import (
    build_HL,
    chain_to_cover_sequence,
    cover_sequence_from_lbs,
    cover_sequence_to_chain,
    cyclic,
    is_lazy_burning_set,
    lbs_from_weak_cover_sequence,
    mcs_exhaustive,
    peel_ordering,
    scc,
)
from latinburn.fixtures import ORDER5_MIN_SEED, ORDER5_SQUARE, cells_to_entries

L = ORDER5_SQUARE
seed = cells_to_entries(L, ORDER5_MIN_SEED)
seq = cover_sequence_from_lbs(L, seed)
print(len(seq), seq.weights, seq.strict)

# a chain gives a long sequence, and its complement is a small burning set
length, chain = scc(L)
long_seq = chain_to_cover_sequence(L, chain)
M = lbs_from_weak_cover_sequence(L, long_seq)
print(len(long_seq), len(M), is_lazy_burning_set(build_HL(L), M))
print(cover_sequence_to_chain(L, long_seq).length == length)

# peeling decides whether a set of entries can be ordered this way
print(peel_ordering(L, L.entries()[:5]).success, peel_ordering(L, L.entries()).success)

# small orders can be searched exhaustively
print(mcs_exhaustive(cyclic(4))[0])
