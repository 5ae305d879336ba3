"""
Lazy burning on the two hypergraphs of a square
===============================================

In H_L the entries are vertices and the lines are edges; in H^L it is the
other way round. An unburned vertex catches fire when it is the last
unburned vertex of some edge.
"""

from latinburn import build_H3L, build_HL, cyclic, lazy_burn, min_lazy_burning_set
from latinburn.latin import col, row, sym

L = cyclic(3)
HL = build_HL(L)

# three corner-ish entries burn everything in two rounds
trace = lazy_burn(HL, [L.entry(0, 0), L.entry(0, 1), L.entry(1, 0)])
for t, layer in enumerate(trace.layers(), start=1):
    print("round", t, [HL.label(v)[:2] for v in layer])
print("complete:", trace.complete)

# on H^L one row, one column and one symbol are enough
H3 = build_H3L(L)
print(lazy_burn(H3, [row(0), col(0), sym(1)]).to_json(H3))

# exhaustive minimum: 3 for both hypergraphs of cyclic(3)
print(min_lazy_burning_set(HL)[0], min_lazy_burning_set(H3)[0])
