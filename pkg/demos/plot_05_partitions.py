"""
Density matrices and partitions
===============================

A density matrix of weight k corresponds to two kinds of decorated integer
partitions of k, and to a plane partition when the shape is boxed.
"""

import numpy as np

from kelpbed.bijections import (DensityClass, PlanePartition, density_to_p, density_to_r,
                                has_weakly_decreasing_faces, p_to_density, psi, sigma_bar,
                                southern_faces, star_algebra_signature)
from kelpbed.monge import is_monge

M = DensityClass.from_matrix(np.array([[2, 0, 0, 1], [0, 1, 1, 2], [1, 1, 3, 1], [0, 0, 0, 3]]))
print("weight k =", M.k)

###############################################################################
# Divisor-labelled and copy-labelled partitions.
pi, rho = density_to_p(M), density_to_r(M)
print("pi :", pi)
print("rho:", rho)
print("round trip:", p_to_density(pi) == M)
print("signature:", star_algebra_signature(rho))

###############################################################################
# The simple Monge matrix carried by this density.
print(sigma_bar(M)[:5, :5])

###############################################################################
# Plane partitions: the image is Monge exactly when every southern face is
# weakly decreasing.
pp = PlanePartition(((8, 5, 2, 1), (5, 3, 1), (3, 2), (1, 1)))
print("faces:", southern_faces(pp))
print("decreasing:", has_weakly_decreasing_faces(pp), " Monge:", is_monge(psi(pp, 4, 8)))
