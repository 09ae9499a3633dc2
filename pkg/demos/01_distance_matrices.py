"""Distance matrices under the coefficient family, and the manipulations
that leave them alone.

A coefficient turns each pair of rows of a data matrix into a distance:
the p-norms N_p for p in [1, inf], plus the squared-Euclidean L = N_2^2.
"""

import math

import numpy as np

from distchar import (
    PNorm,
    SquaredEuclidean,
    augment_constant_columns,
    build,
    evaluate,
    parse_coefficient,
    permute_rows,
    remove_row,
)

p1, p2, pinf = PNorm(1), PNorm(2), PNorm(math.inf)

# the same vector, measured four ways
v = [3.0, -4.0]
for c in (p1, p2, pinf, SquaredEuclidean()):
    print(f"{c}: size of {v} = {evaluate(c, v):g}")

# an equilateral triangle plus the circle's center, radius 2
s = math.sqrt(3)
x = np.array([[0, 0], [2, 0], [-1, s], [-1, -s]])
print("\nEuclidean distance matrix (center + triangle):")
print(build(p2, x))

# the center is at distance 2 from each vertex; the vertices are 2*sqrt(3)
# apart.  Under the 1-norm the picture changes:
print("\nManhattan distance matrix of the same points:")
print(build(p1, x))

# constant columns never matter: within a column all differences vanish
padded = augment_constant_columns(x, [7.0, -1.5, 42.0])
assert np.array_equal(build(p2, padded), build(p2, x))
print(f"\nafter padding to {padded.shape[1]} columns the matrix is identical")

# shuffling rows conjugates the matrix by the permutation
perm = [2, 0, 3, 1]
d = build(p2, x)
assert np.array_equal(build(p2, permute_rows(x, perm)), d[np.ix_(perm, perm)])
print("row shuffles only relabel the matrix")

# dropping a row drops the matching row and column
triangle = remove_row(x, 0)
assert np.array_equal(build(p2, triangle), d[1:, 1:])
print("dropping the center leaves the triangle's 3x3 block")

# the textual syntax used by the command line
for text in ("p1", "p2.5", "pinf", "L"):
    print(f"parse_coefficient({text!r}) -> {parse_coefficient(text)}")
