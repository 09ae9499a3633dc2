"""Do two coefficients agree about a data set?

Concordance counts rows whose nearest-neighbor sets coincide; correlation
treats the two distance matrices as random variables over the index grid.
"""

import math

import numpy as np

from distchar import (
    PNorm,
    SampleSpace,
    SquaredEuclidean,
    augment_constant_columns,
    build,
    concordance,
    correlation,
    expectation,
    hadamard,
    matrix_correlation,
)

p1, p2, pinf = PNorm(1), PNorm(2), PNorm(math.inf)
L = SquaredEuclidean()

s = math.sqrt(3)
triangle = np.array([[2, 0], [-1, s], [-1, -s]])

# only the apex row keeps the same neighbors under the 1- and 2-norms
score = concordance(p1, p2, triangle)
print(f"concordance(p1, p2) on the triangle = {score.numerator}/{score.denominator}")

# correlations of the triangle's three distance matrices
for m, n in ((p1, p2), (p1, pinf), (p2, pinf)):
    print(f"rho({m}, {n}) = {correlation(m, n, triangle).rho:.6f}")

# the squared-Euclidean matrix is the Hadamard square of the Euclidean one
x = np.array([[1.0], [2.0], [3.0]])
d = build(p2, x)
assert np.array_equal(hadamard(d, d), build(L, x))
print(f"\nrho(p2, L) on a 3-point line = {correlation(p2, L, x).rho:.6f}")
print(f"E(D) over the full grid = {expectation(d):.6f}")
print(f"E(D) over the upper triangle = {expectation(d, SampleSpace.UPPER_TRIANGLE):.6f}")

# the two sample spaces weigh the diagonal differently, so rho differs too
a, b = build(p1, triangle), build(pinf, triangle)
print(f"grid rho = {matrix_correlation(a, b).rho:.6f}, upper rho = "
      f"{matrix_correlation(a, b, SampleSpace.UPPER_TRIANGLE).rho:.6f}")

# degenerate geometry has no correlation to speak of
flat = np.ones((3, 2))
print("duplicate rows:", correlation(p1, p2, flat).rho)

# and, as always, constant columns change nothing
padded = augment_constant_columns(triangle, [9.0, 9.0])
assert correlation(p1, p2, padded).rho == correlation(p1, p2, triangle).rho
print("rho is untouched by constant-column padding")
