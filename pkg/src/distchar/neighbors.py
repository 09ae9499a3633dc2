"""Nearest-neighbor sets of a distance matrix, with explicit tie handling.

For n > 1, row j is a nearest neighbor of row i when d(i, j) equals the
smallest off-diagonal entry of row i.  Exact arithmetic has exact ties;
floating point needs a tolerance, supplied by ``TiePolicy``.  Duplicate rows
(distance 0) count as nearest neighbors by default; ``positive_only=True``
switches to the "smallest positive entry" variant, under which a row all of
whose distances are zero has no neighbors at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .coefficients import Coefficient
from .distance import build, validate_distance_matrix
from .errors import DomainError

__all__ = [
    "NeighborSets",
    "SearchBudget",
    "TiePolicy",
    "achievable_near_totals",
    "near_total",
    "nearest_sets",
]


@dataclass(frozen=True)
class TiePolicy:
    """Tolerance for recognizing tied distances.

    A distance d in row i ties the row minimum m when
    d <= m + max(absolute_tolerance, relative_tolerance * m).
    The default relative 1e-9 recognizes algebraically equal values computed
    by different float routes while keeping generic distinct values apart.
    Both tolerances zero gives exact comparison (use with rational builds).
    """

    relative_tolerance: float = 1e-9
    absolute_tolerance: float = 0.0

    def __post_init__(self) -> None:
        if self.relative_tolerance < 0 or self.absolute_tolerance < 0:
            raise DomainError("tie tolerances must be nonnegative")


EXACT_TIES = TiePolicy(relative_tolerance=0.0, absolute_tolerance=0.0)


@dataclass(frozen=True)
class NeighborSets:
    """Per-row nearest-neighbor index sets (0-based) plus their total count.

    Invariants checked on construction: with the default convention each row
    of an n > 1 matrix has between 1 and n-1 neighbors, so
    n <= total <= n(n-1); and total = n(n-1) - 1 is impossible (symmetry of
    the distance matrix rules it out), which is asserted for every instance.
    """

    order: int
    sets: tuple[frozenset[int], ...]
    positive_only: bool = False

    def __post_init__(self) -> None:
        n = self.order
        if len(self.sets) != n:
            raise DomainError("one neighbor set per row required")
        for i, s in enumerate(self.sets):
            if i in s or not s <= set(range(n)):
                raise DomainError(f"invalid neighbor set for row {i}: {sorted(s)}")
            if not self.positive_only and n > 1 and not s:
                raise DomainError(f"row {i} must have at least one neighbor")
        if n == 1 and self.total != 0:
            raise DomainError("a 1-row matrix has no neighbors")
        if self.total > n * (n - 1):
            raise DomainError("neighbor total exceeds n(n-1)")
        if not self.positive_only and n > 1 and self.total < n:
            raise DomainError("neighbor total below n")
        if self.total == n * (n - 1) - 1:
            raise DomainError("neighbor total n(n-1)-1 contradicts symmetry")

    @property
    def total(self) -> int:
        return sum(len(s) for s in self.sets)


def nearest_sets(d, tie: TiePolicy = TiePolicy(), positive_only: bool = False) -> NeighborSets:
    """Nearest-neighbor sets of a distance matrix.

    ``positive_only=True`` restricts candidates to strictly positive
    distances, the variant in which duplicate rows are not neighbors.
    """
    D = validate_distance_matrix(d)
    n = D.shape[0]
    sets = []
    for i in range(n):
        candidates = [(j, D[i, j]) for j in range(n) if j != i]
        if positive_only:
            candidates = [(j, v) for j, v in candidates if v > 0]
        if not candidates:
            sets.append(frozenset())
            continue
        m = min(v for _, v in candidates)
        slack = max(tie.absolute_tolerance, tie.relative_tolerance * m)
        bound = m if slack == 0 else m + slack  # keep exact types exact
        sets.append(frozenset(j for j, v in candidates if v <= bound))
    return NeighborSets(order=n, sets=tuple(sets), positive_only=positive_only)


def near_total(sets: NeighborSets) -> int:
    """Sum of the per-row nearest-neighbor counts."""
    return sets.total


@dataclass(frozen=True)
class SearchBudget:
    """Bounds for the empirical search over n-row data matrices."""

    random_samples: int = 200
    random_cols: int = 2
    grid_extent: int = 3
    grid_limit: int = 20000
    include_probes: bool = True


def achievable_near_totals(
    n: int,
    coefficient: Coefficient,
    budget: SearchBudget = SearchBudget(),
    seed: int = 0,
) -> set[int]:
    """Neighbor totals observed over a searched family of n-row matrices.

    This is an empirical search, not a characterization: the result is the
    set of distinct totals seen across random matrices, small 1-D integer
    grids, and structured probes (duplicate rows, simplex vertices, evenly
    spaced points).  Deterministic for a given seed.  Every observed value
    lies in {n, ..., n(n-1)} minus {n(n-1)-1}.
    """
    if n < 2:
        raise DomainError("search requires n >= 2")
    rng = np.random.default_rng(seed)
    totals: set[int] = set()

    def observe(x) -> None:
        totals.add(nearest_sets(build(coefficient, x)).total)

    if budget.include_probes:
        observe(np.zeros((n, 1)))          # all rows equal: total n(n-1)
        observe(np.eye(n))                 # simplex vertices: all pairs tie
        observe(np.arange(n, dtype=float).reshape(n, 1))
        spaced = np.cumsum([0.0] + [2.0**i for i in range(n - 1)])
        observe(spaced.reshape(n, 1))      # strictly growing gaps: total n

    if budget.grid_extent >= 1 and (budget.grid_extent + 1) ** n <= budget.grid_limit:
        for values in itertools.product(range(budget.grid_extent + 1), repeat=n):
            observe(np.array(values, dtype=float).reshape(n, 1))

    for _ in range(budget.random_samples):
        observe(rng.standard_normal((n, budget.random_cols)))

    return totals
