"""
Building Latin squares
======================

Cyclic squares, products, intercalate powers and random squares, and the
plain-text ``.ls`` format they are stored in.
"""

import numpy as np

from latinburn import cyclic, intercalate_power, parse, product, random_square, serialize

# the cyclic square of order 5: symbol (r + c) mod 5
c5 = cyclic(5)
print(c5.array)

# a product square, flattened so that pair (a, b) becomes a * n2 + b
p = product(cyclic(2), cyclic(3))
print(p.order, p[(4, 5)])

# intercalate powers are the XOR tables
i3 = intercalate_power(3)
idx = np.arange(8)
assert (i3.array == np.bitwise_xor.outer(idx, idx)).all()

# random squares are reproducible from their seed
r = random_square(6, seed=42)
assert r == random_square(6, seed=42)

# round trip through the text format
text = serialize(r)
print(text)
assert parse(text) == r
