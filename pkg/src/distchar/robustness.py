"""Robustness of nearest-neighbor structure under column changes.

Two scores, both exact fractions:

* ``rob_plus``: one column is appended.  The score is the fraction of
  nearest-neighbor relations of X that survive in the extended matrix,
  with denominator the neighbor total of X.
* ``rob_minus``: leave-one-column-out.  The score is 1 minus the fraction of
  (row, removed column) pairs whose neighbor set changes, with denominator
  n*k.

``adversarial_augment`` realizes the guarantee that a single appended column
of the form t * (1, 2, 4, ..., 2^(n-1)) can always force every row down to a
unique nearest neighbor, certifying rob_plus <= n / near_total(X).  The
power-of-two spacing makes all pairwise gaps |2^j - 2^i| distinct, which is
what breaks every tie.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coefficients import Coefficient, PNorm
from .distance import as_data_matrix, build, remove_column
from .errors import DomainError
from .neighbors import TiePolicy, nearest_sets

__all__ = [
    "AdversarialResult",
    "RationalScore",
    "adversarial_augment",
    "rob_minus",
    "rob_plus",
    "spacing_values",
]


@dataclass(frozen=True)
class RationalScore:
    """An exact score numerator/denominator in [0, 1].

    The denominator is the defining count (neighbor total of X for rob_plus,
    n*k for rob_minus, row count for concordance) and is not reduced; use
    ``as_fraction`` for normalized comparisons.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise DomainError("score denominator must be positive")
        if not 0 <= self.numerator <= self.denominator:
            raise DomainError(
                f"score {self.numerator}/{self.denominator} outside [0, 1]"
            )

    @property
    def value(self) -> float:
        return self.numerator / self.denominator

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)


def _one_column_extension(x, x_aug) -> tuple[np.ndarray, np.ndarray]:
    X = as_data_matrix(x)
    Xp = as_data_matrix(x_aug)
    n, k = X.shape
    if n < 2:
        raise DomainError("robustness needs n > 1 so that neighbors exist")
    if Xp.shape != (n, k + 1):
        raise DomainError(
            f"augmented matrix must be {n}x{k + 1}, got {Xp.shape[0]}x{Xp.shape[1]}"
        )
    if not (Xp[:, :k] == X).all():
        raise DomainError("augmented matrix must agree with x on its first columns")
    return X, Xp


def rob_plus(
    coefficient: Coefficient,
    x,
    x_aug,
    tie: TiePolicy = TiePolicy(),
    positive_only: bool = False,
) -> RationalScore:
    """Fraction of neighbor relations of ``x`` preserved in ``x_aug``.

    ``x_aug`` must be ``x`` with exactly one appended column.  The numerator
    counts, over rows i, the indices that are nearest neighbors of i in both
    matrices; the denominator is the neighbor total of ``x``.
    """
    X, Xp = _one_column_extension(x, x_aug)
    base = nearest_sets(build(coefficient, X), tie, positive_only)
    aug = nearest_sets(build(coefficient, Xp), tie, positive_only)
    kept = sum(len(b & a) for b, a in zip(base.sets, aug.sets))
    return RationalScore(kept, base.total)


def rob_minus(
    coefficient: Coefficient,
    x,
    tie: TiePolicy = TiePolicy(),
    positive_only: bool = False,
) -> RationalScore:
    """Leave-one-column-out robustness 1 - (sum of change counts)/(n*k).

    For each column j, count the rows whose nearest-neighbor set changes when
    column j is removed.  Requires n > 1 and k > 1.
    """
    X = as_data_matrix(x)
    n, k = X.shape
    if n < 2:
        raise DomainError("robustness needs n > 1 so that neighbors exist")
    if k < 2:
        raise DomainError("leave-one-column-out robustness needs k > 1")
    base = nearest_sets(build(coefficient, X), tie, positive_only)
    changed = 0
    for j in range(k):
        reduced = nearest_sets(build(coefficient, remove_column(X, j)), tie, positive_only)
        changed += sum(1 for b, r in zip(base.sets, reduced.sets) if b != r)
    return RationalScore(n * k - changed, n * k)


def spacing_values(n: int) -> np.ndarray:
    """The spacing matrix u with u[i, j] = |2^(j+1) - 2^(i+1)| (0-based).

    All off-diagonal values over unordered pairs are pairwise distinct: two
    equal values would share both their lowest and highest powers of two.
    Python integers are arbitrary precision, so any n is exact.
    """
    if n < 2:
        raise DomainError("spacing values need n >= 2")
    u = np.zeros((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            u[i, j] = abs(2 ** (j + 1) - 2 ** (i + 1))
    return u


@dataclass(frozen=True)
class AdversarialResult:
    """Outcome of the tie-breaking augmentation.

    ``augmented`` agrees with the input on its first k columns and appends
    the column t * spacing; ``achieved_near_total`` equals the row count n,
    i.e. every row ends up with a unique nearest neighbor.
    """

    augmented: np.ndarray
    t: float
    spacing: tuple[int, ...]
    achieved_near_total: int


def adversarial_augment(
    coefficient: Coefficient,
    x,
    tie: TiePolicy = TiePolicy(),
) -> AdversarialResult:
    """Append a column t * (1, 2, 4, ...) that gives every row a unique neighbor.

    Defined for p-norms only.  The scale t is found by verified search: start
    at t = 1 and double (p = inf, where the new column must dominate) or
    halve (finite p, where it must merely break ties) until the recomputed
    neighbor total equals n and rob_plus(x, augmented) <= n / near_total(x).
    The existence of a suitable threshold is guaranteed; the search certifies
    the postcondition computationally rather than deriving t in closed form.
    """
    if not isinstance(coefficient, PNorm):
        raise DomainError("the tie-breaking augmentation is defined for p-norms only")
    X = as_data_matrix(x)
    if X.dtype == object:
        X = X.astype(float)
    n, _ = X.shape
    if n < 2:
        raise DomainError("augmentation needs n > 1 so that neighbors exist")
    if n > 62:
        raise DomainError("appended column 2^(n-1) exceeds exact float range for n > 62")

    spacing = tuple(2**i for i in range(n))
    column = np.array(spacing, dtype=float)
    base = nearest_sets(build(coefficient, X), tie)
    bound = Fraction(n, base.total)
    grow = math.isinf(coefficient.p)

    t = 1.0
    for _ in range(200):
        candidate = np.hstack([X, (t * column).reshape(n, 1)])
        achieved = nearest_sets(build(coefficient, candidate), tie)
        if achieved.total == n:
            score = rob_plus(coefficient, X, candidate, tie)
            if score.as_fraction() <= bound:
                return AdversarialResult(
                    augmented=candidate,
                    t=t,
                    spacing=spacing,
                    achieved_near_total=achieved.total,
                )
        t = t * 2.0 if grow else t / 2.0
    raise DomainError("no scale t found within 200 doublings/halvings")
