"""How fragile is nearest-neighbor structure under column changes?

Appending one column can destroy every neighbor relation (robustness 0),
and a single engineered column always forces each row down to one unique
neighbor, capping the surviving fraction at n / (neighbor total).
"""

import math
from fractions import Fraction

import numpy as np

from distchar import (
    PNorm,
    adversarial_augment,
    augment_constant_columns,
    build,
    nearest_sets,
    rob_minus,
    rob_plus,
    spacing_values,
)

p1, p2, pinf = PNorm(1), PNorm(2), PNorm(math.inf)

# a 3-point data set and a second column that reverses every preference
x = np.array([[2.0], [5.0], [1.0]])
pair = np.array([[2.0, 50.0], [5.0, 20.0], [1.0, 10.0]])
for c in (p1, p2, PNorm(7), pinf):
    score = rob_plus(c, x, pair)
    print(f"{c}: robustness of the extension = {score.numerator}/{score.denominator}")

# a constant column is the harmless extension
harmless = augment_constant_columns(x, [0.0])
print("constant column:", rob_plus(p1, x, harmless).as_fraction())

# leave-one-column-out robustness of the triangle's coordinates
s = math.sqrt(3)
triangle = np.array([[2, 0], [-1, s], [-1, -s]])
for c in (p1, pinf):
    print(f"{c}: leave-one-out robustness = {rob_minus(c, triangle).as_fraction()}")

# the engineered column: scaled powers of two.  All pairwise gaps
# |2^j - 2^i| are distinct, so every tie breaks.
print("\nspacing gaps for n=4:", sorted(
    spacing_values(4)[i, j] for i in range(4) for j in range(i + 1, 4)))

before = nearest_sets(build(p2, triangle)).total
result = adversarial_augment(p2, triangle)
print(f"triangle neighbor total: {before} -> {result.achieved_near_total} "
      f"(appended column = {result.t:g} * {list(result.spacing)})")
cap = Fraction(3, before)
print(f"surviving fraction {rob_plus(p2, triangle, result.augmented).as_fraction()} "
      f"<= {cap} as guaranteed")
