"""
Monge matrices and the map phi
==============================

Every biword matrix has a simple Monge image, and the product of biword
matrices becomes the min-plus product of those images.
"""

import numpy as np

from kelpbed import density, distance_product, distribution, is_monge, phi, phi_inverse, star

X = np.array([[0, 0, 0, 0], [1, 0, 1, 0], [0, 0, 3, 0], [0, 1, 0, 0]])
Y = np.array([[0, 0, 1, 1], [0, 0, 0, 1], [1, 0, 0, 0], [0, 0, 0, 0]])

###############################################################################
# phi pads the matrix with an empty first column and bottom row, then takes
# southwest sums.  The result has zero first column and zero bottom row.
PX, PY = phi(X), phi(Y)
print(PX)
print("Monge:", is_monge(PX))

###############################################################################
# density undoes distribution on the interior.
print(density(distribution(np.array([[3, 0, 2], [1, 4, 0], [2, 3, 1]]))))

###############################################################################
# The central identity: phi turns the kelp product into the min-plus product.
lhs = phi(star(X, Y))
rhs = distance_product(PX, PY)
print(rhs)
print("phi(X*Y) == phi(X) (min,+) phi(Y):", np.array_equal(lhs, rhs))
print("and back again:\n", phi_inverse(rhs))
