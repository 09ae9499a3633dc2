"""Distance matrices and the data-matrix manipulations their invariances
rest on: constant-column augmentation, row removal, column removal, and row
permutation.

The distance matrix of an n x k data matrix X under a coefficient N has
entry (i, j) equal to N(x(j) - x(i)).  It is symmetric with zero diagonal and
nonnegative entries; here symmetry is exact in floating point because each
unordered pair is evaluated once and mirrored.
"""

from __future__ import annotations

import numbers
import math

import numpy as np

from .coefficients import Coefficient, evaluate
from .errors import DomainError

__all__ = [
    "as_data_matrix",
    "augment_constant_columns",
    "build",
    "permute_rows",
    "remove_column",
    "remove_row",
    "validate_distance_matrix",
]


def as_data_matrix(x) -> np.ndarray:
    """Validate and return a data matrix: 2-D, n >= 1, k >= 1, finite entries.

    Object-dtype input (rows of ints / fractions.Fraction) is passed through
    for exact-arithmetic builds; everything else becomes float64.
    """
    arr = np.asarray(x)
    if arr.ndim != 2:
        raise DomainError(f"data matrix must be 2-D, got shape {arr.shape}")
    n, k = arr.shape
    if n < 1 or k < 1:
        raise DomainError(f"data matrix needs at least one row and one column, got {n}x{k}")
    if arr.dtype == object:
        for entry in arr.flat:
            if not isinstance(entry, numbers.Real):
                raise DomainError(f"non-numeric entry {entry!r}")
            if isinstance(entry, float) and not math.isfinite(entry):
                raise DomainError("data entries must be finite")
        return arr
    arr = np.asarray(arr, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("data entries must be finite")
    return arr


def build(coefficient: Coefficient, x) -> np.ndarray:
    """Distance matrix of ``x`` under ``coefficient``.

    Each unordered pair is computed once and mirrored, so symmetry and the
    zero diagonal hold exactly.  With object-dtype (rational) input the
    entries are exact for p = 1, p = inf and L.
    """
    X = as_data_matrix(x)
    n = X.shape[0]
    if X.dtype == object:
        D = np.zeros((n, n), dtype=object)
    else:
        D = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            d = evaluate(coefficient, X[j] - X[i])
            D[i, j] = d
            D[j, i] = d
    return D


def validate_distance_matrix(d) -> np.ndarray:
    """Check the distance-matrix invariants: square, symmetric (exactly),
    zero diagonal, nonnegative entries."""
    arr = np.asarray(d)
    if arr.dtype != object:
        arr = np.asarray(arr, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"distance matrix must be square, got shape {arr.shape}")
    if not (arr == arr.T).all():
        raise DomainError("distance matrix must be symmetric")
    n = arr.shape[0]
    if not all(arr[i, i] == 0 for i in range(n)):
        raise DomainError("distance matrix must have a zero diagonal")
    if not (arr >= 0).all():
        raise DomainError("distance matrix entries must be nonnegative")
    return arr


def augment_constant_columns(x, constants) -> np.ndarray:
    """Append one constant column per entry of ``constants``.

    Appending constant columns never changes the distance matrix: the
    within-column differences are zero and zero entries never contribute.
    """
    X = as_data_matrix(x)
    values = list(constants)
    if not values:
        return X.copy()
    if X.dtype != object:
        for c in values:
            if not math.isfinite(float(c)):
                raise DomainError("constant-column values must be finite")
    cols = np.empty((X.shape[0], len(values)), dtype=X.dtype)
    for j, c in enumerate(values):
        cols[:, j] = c
    return np.hstack([X, cols])


def remove_row(x, i: int) -> np.ndarray:
    """Data matrix without row ``i`` (0-based).  Requires n >= 2.

    Building a distance matrix commutes with this: the result's distance
    matrix is the original with row and column ``i`` deleted.
    """
    X = as_data_matrix(x)
    n = X.shape[0]
    if n < 2:
        raise DomainError("cannot remove the only row")
    if not 0 <= i < n:
        raise DomainError(f"row index {i} out of range for {n} rows")
    return np.delete(X, i, axis=0)


def remove_column(x, j: int) -> np.ndarray:
    """Data matrix without column ``j`` (0-based).  Requires k >= 2."""
    X = as_data_matrix(x)
    k = X.shape[1]
    if k < 2:
        raise DomainError("cannot remove the only column")
    if not 0 <= j < k:
        raise DomainError(f"column index {j} out of range for {k} columns")
    return np.delete(X, j, axis=1)


def permute_rows(x, perm) -> np.ndarray:
    """Reorder rows so that row i of the result is row perm[i] of ``x``.

    ``perm`` must be a bijection on 0..n-1.  Distance matrices transform by
    conjugation: build(c, permute_rows(x, s)) = P build(c, x) P^T.
    """
    X = as_data_matrix(x)
    n = X.shape[0]
    order = [int(p) for p in perm]
    if sorted(order) != list(range(n)):
        raise DomainError(f"not a permutation of 0..{n - 1}: {list(perm)!r}")
    return X[order]
