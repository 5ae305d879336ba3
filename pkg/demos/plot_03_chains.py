"""
Subsquare closure and shortest connected chains
===============================================

A connected chain grows from one cell to the whole square, each step
closing the current subsquare together with one new line. Its shortest
length, scc, controls every burning number.
"""

from latinburn import analyze, closure, cyclic, intercalate_power, scc
from latinburn.latin import row, sym

L = cyclic(5)
# two consecutive symbols already generate all of Z_5
print(closure(L, L.entry(0, 0), [sym(1)]).order)

# in the XOR square a new row only doubles the block
I = intercalate_power(2)
print(closure(I, I.entry(0, 0), [row(1)]).to_json())

for square in (cyclic(8), intercalate_power(3)):
    length, chain = scc(square)
    print(square.order, length, [s.order for s in chain.squares], [str(l) for l in chain.witness_lines])

# one report ties scc to mcs and both burning numbers
rep = analyze(intercalate_power(2), oracle=True)
print(rep.scc, rep.mcs, rep.bl_HL, rep.bl_HL_oracle, rep.bl_H3L, rep.bl_H3L_oracle)
