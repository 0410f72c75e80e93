"""Demazure products of biwords and the min-plus semigroup of simple Monge matrices."""
from .biword import (Biword, DomainError, OracleCapacityError, SubBed, biword_matrix,
                     biword_to_matrix, count_kelps, matrix_to_biword, total_kelps)
from .demazure import (Permutation, hecke_product, is_up_down_pair, permutation_to_matrix,
                       star, star_steps, star_via_monge, weight, weight_oracle)
from .monge import (decompose, density, distance_product, distance_product_monge, distribution,
                    is_monge, is_simple_monge, norm_l11, norm_max, pad_L, phi, phi_inverse,
                    sum_matrix)
from .growth import (enumerate_graded, partial_sum_series, series_l11, series_l11_infinity,
                     series_max)

__version__ = "0.1.0"
