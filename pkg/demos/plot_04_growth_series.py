"""
Counting simple Monge matrices
==============================

Graded by the max norm or by the entry sum, simple Monge matrices of each
size have rational generating functions; we read off exact coefficients and
compare with direct enumeration.
"""

from kelpbed import enumerate_graded, series_l11, series_l11_infinity, series_max

###############################################################################
# Max norm: binomial coefficients.
print("max, n=2:", series_max(2, 8))

###############################################################################
# Entry-sum norm, for growing n; the coefficients stabilise.
for n in range(1, 6):
    print(f"l11, n={n}:", series_l11(n, 10))
print("l11, n=inf:", series_l11_infinity(10))

###############################################################################
# Enumeration agrees with the series.
for k in range(5):
    mats = enumerate_graded(3, k, "l11")
    print(f"n=3, k={k}: {len(mats)} matrices")
print(enumerate_graded(2, 2, "l11"))
