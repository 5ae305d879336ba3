"""
Cayley tables of finite groups
==============================

For the multiplication table of a group, scc is one more than the size of
a smallest generating set, and closures are cosets of generated subgroups.
"""

import random

from latinburn import build_H3L, cayley_square, min_lazy_burning_set, scc
from latinburn.groups import (
    coset_columns_predicate,
    dihedral,
    direct_product,
    min_generating_size,
    random_coset_case,
    sym,
    z,
    z2_pow,
)

for g in (z(12), z2_pow(3), direct_product(z(2), z(4)), sym(3), dihedral(4)):
    L = cayley_square(g)
    alpha, gens = min_generating_size(g)
    print(f"{g.name:8} order {g.order:2}  alpha {alpha} via {gens}  scc {scc(L)[0]}", end="")
    if g.order <= 8:
        print(f"  b(H^L) {min_lazy_burning_set(build_H3L(L))[0]}", end="")
    print()

rng = random.Random(1)
g = dihedral(5)
hits = sum(coset_columns_predicate(g, *random_coset_case(g, rng))[1] for _ in range(100))
print(hits, "of 100 coset predictions match the closure")
