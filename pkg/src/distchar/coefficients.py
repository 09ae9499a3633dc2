"""The coefficient family: p-norms for p in [1, inf] and the squared-Euclidean
pseudo-coefficient L.

A coefficient assigns a nonnegative size to a row vector.  Every ``PNorm`` is
a true norm (homogeneous, subadditive, zero only at zero, insensitive to zero
entries, and normalized so that a single 1 has size 1).  ``SquaredEuclidean``
is L(v) = sum(v_i^2) = N_2(v)^2; it violates homogeneity and the triangle
inequality but is accepted everywhere a coefficient is, because distance
matrices and correlations built from it are still well defined.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "Coefficient",
    "PNorm",
    "SquaredEuclidean",
    "coefficient_name",
    "evaluate",
    "is_true_norm",
    "parse_coefficient",
]


@dataclass(frozen=True)
class PNorm:
    """The p-norm N_p; ``p`` is a float in [1, inf], with ``math.inf`` allowed.

    p = inf is the genuine IEEE infinity, not a large float, so the max-norm
    code path is selected exactly.
    """

    p: float

    def __post_init__(self) -> None:
        p = self.p
        if not isinstance(p, numbers.Real) or math.isnan(p) or p < 1:
            raise DomainError(f"p-norm requires p >= 1 or p = inf, got {p!r}")
        object.__setattr__(self, "p", float(p))


@dataclass(frozen=True)
class SquaredEuclidean:
    """The pseudo-coefficient L(v) = sum(v_i^2).  Not a norm."""


Coefficient = PNorm | SquaredEuclidean


def is_true_norm(coefficient: Coefficient) -> bool:
    """True iff the coefficient satisfies all norm axioms (every p-norm does)."""
    if isinstance(coefficient, PNorm):
        return True
    if isinstance(coefficient, SquaredEuclidean):
        return False
    raise DomainError(f"not a coefficient: {coefficient!r}")


def parse_coefficient(text: str) -> Coefficient:
    """Parse the textual coefficient syntax: "p1", "p2", "p3.5", "pinf", "L".

    Case-insensitive.  Raises DomainError on anything else.
    """
    s = text.strip().lower()
    if s == "l":
        return SquaredEuclidean()
    if s.startswith("p"):
        body = s[1:]
        if body in ("inf", "infinity"):
            return PNorm(math.inf)
        try:
            p = float(body)
        except ValueError:
            raise DomainError(f"unrecognized coefficient syntax: {text!r}") from None
        if math.isnan(p) or math.isinf(p):
            raise DomainError(f"unrecognized coefficient syntax: {text!r}")
        return PNorm(p)
    raise DomainError(f"unrecognized coefficient syntax: {text!r}")


def coefficient_name(coefficient: Coefficient) -> str:
    """Inverse of parse_coefficient, for reports and JSON provenance."""
    if isinstance(coefficient, SquaredEuclidean):
        return "L"
    p = coefficient.p
    if math.isinf(p):
        return "pinf"
    if p == int(p):
        return f"p{int(p)}"
    return f"p{p:g}"


def _validate_vector(v) -> np.ndarray:
    arr = np.asarray(v)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("coefficient argument must be a nonempty 1-D vector")
    if arr.dtype == object:
        for entry in arr:
            if not isinstance(entry, numbers.Real):
                raise DomainError(f"non-numeric entry {entry!r}")
            if isinstance(entry, float) and not math.isfinite(entry):
                raise DomainError("vector entries must be finite")
        return arr
    arr = np.asarray(arr, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError("vector entries must be finite")
    return arr


def evaluate(coefficient: Coefficient, v) -> float:
    """Evaluate the coefficient on a row vector.

    Accepts any 1-D array-like of finite reals.  An object-dtype vector
    (e.g. of ``fractions.Fraction``) is evaluated in exact arithmetic, which
    is possible for p = 1, p = inf and L; other p require floats.

    Finite p > 1 uses the scaled form m * (sum((|w_i|/m)^p))^(1/p) with
    m = max|w_i|, so large entries and large p cannot overflow.  Sums are
    correctly rounded (math.fsum), which makes the result independent of
    entry order and of appended zero entries.
    """
    arr = _validate_vector(v)
    if arr.dtype == object:
        entries = [abs(e) for e in arr.tolist()]
        if isinstance(coefficient, SquaredEuclidean):
            return sum(e * e for e in entries)
        if math.isinf(coefficient.p):
            return max(entries)
        if coefficient.p == 1.0:
            return sum(entries)
        raise DomainError("exact evaluation supports only p = 1, p = inf, and L")

    a = np.abs(arr)
    if isinstance(coefficient, SquaredEuclidean):
        return math.fsum(x * x for x in a)
    p = coefficient.p
    if math.isinf(p):
        return float(a.max())
    if p == 1.0:
        return math.fsum(a)
    m = float(a.max())
    if m == 0.0:
        return 0.0
    return m * math.fsum((x / m) ** p for x in a) ** (1.0 / p)
