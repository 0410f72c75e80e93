"""
The kelp-bed product
====================

Two biword matrices are multiplied by repeatedly picking an up-down pair of
kelps and fusing it.  This script walks through the small running example.
"""

import numpy as np

from kelpbed import matrix_to_biword, star, star_steps, weight

X = np.array([[0, 0, 0, 0], [1, 0, 1, 0], [0, 0, 3, 0], [0, 1, 0, 0]])
Y = np.array([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 0, 0]])

###############################################################################
# A biword matrix is just a table of multiplicities; the biword lists its
# columns in lexicographic order.
w = matrix_to_biword(X)
print("top   :", w.top)
print("bottom:", w.bottom)

###############################################################################
# The weight is the most disjoint up-down pairs we can find, and it equals
# the number of fusion steps.
print("weight:", weight(X, Y))
for (a, b), (c, d) in star_steps(X, Y):
    print(f"  fuse ({a},{b}) with ({c},{d})  ->  kelp ({a},{d})")

###############################################################################
# The product collects the fused kelps.
print(star(X, Y))

###############################################################################
# It is associative, which is easy to spot-check.
rng = np.random.default_rng(0)
A, B, C = (rng.integers(0, 3, (4, 4)) for _ in range(3))
print("associative here:", np.array_equal(star(star(A, B), C), star(A, star(B, C))))
