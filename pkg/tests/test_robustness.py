import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from distchar import (
    DomainError,
    PNorm,
    RationalScore,
    SquaredEuclidean,
    adversarial_augment,
    augment_constant_columns,
    build,
    nearest_sets,
    rob_minus,
    rob_plus,
    spacing_values,
)

P1, P2, PINF = PNorm(1), PNorm(2), PNorm(math.inf)
SQRT3 = math.sqrt(3)

EX6_X = np.array([[2.0], [5.0], [1.0]])
EX6_PAIR = np.array([[2.0, 50.0], [5.0, 20.0], [1.0, 10.0]])
EX7_Z = np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]])
TRIANGLE = np.array([[2, 0], [-1, SQRT3], [-1, -SQRT3]])


def brute_rob_plus(coefficient, x, x_aug):
    """Independent recomputation: per-row argmin sets of both matrices."""

    def sets_of(m):
        d = build(coefficient, m)
        n = d.shape[0]
        out = []
        for i in range(n):
            vals = [(j, d[i, j]) for j in range(n) if j != i]
            least = min(v for _, v in vals)
            out.append({j for j, v in vals if v <= least * (1 + 1e-9)})
        return out

    base, aug = sets_of(x), sets_of(x_aug)
    return Fraction(
        sum(len(b & a) for b, a in zip(base, aug)),
        sum(len(b) for b in base),
    )


class TestRationalScore:
    def test_value_and_fraction(self):
        score = RationalScore(2, 6)
        assert score.value == pytest.approx(1 / 3)
        assert score.as_fraction() == Fraction(1, 3)

    def test_denominator_is_not_reduced(self):
        assert RationalScore(2, 6).denominator == 6

    def test_range_enforced(self):
        with pytest.raises(DomainError):
            RationalScore(7, 6)
        with pytest.raises(DomainError):
            RationalScore(-1, 6)
        with pytest.raises(DomainError):
            RationalScore(0, 0)


class TestRobPlus:
    @pytest.mark.parametrize("p", [1.0, 2.0, 7.0, math.inf])
    def test_ex6_augmentation_destroys_all_neighbors(self, p):
        score = rob_plus(PNorm(p), EX6_X, EX6_PAIR)
        assert (score.numerator, score.denominator) == (0, 3)

    def test_ex6_power_inequality_chain(self):
        for p in (1.0, 2.0, 7.0):
            assert 4**p + 10**p < 3**p + 30**p < 1 + 40**p

    def test_constant_column_preserves_everything(self):
        rng = np.random.default_rng(31)
        for c in (P1, P2, PINF, SquaredEuclidean()):
            x = rng.standard_normal((4, 2))
            extended = augment_constant_columns(x, [3.25])
            score = rob_plus(c, x, extended)
            assert score.numerator == score.denominator
            assert score.as_fraction() == 1

    def test_matches_independent_recomputation(self):
        rng = np.random.default_rng(32)
        for _ in range(25):
            x = rng.standard_normal((4, 2))
            extended = np.hstack([x, rng.standard_normal((4, 1))])
            got = rob_plus(P1, x, extended).as_fraction()
            assert got == brute_rob_plus(P1, x, extended)

    def test_score_is_a_fraction_over_near_total(self):
        rng = np.random.default_rng(33)
        for _ in range(20):
            x = rng.standard_normal((5, 2))
            extended = np.hstack([x, rng.standard_normal((5, 1))])
            score = rob_plus(P2, x, extended)
            assert score.denominator == nearest_sets(build(P2, x)).total
            assert 0 <= score.numerator <= score.denominator

    def test_preconditions(self):
        with pytest.raises(DomainError):
            rob_plus(P1, [[1.0]], [[1.0, 2.0]])  # n = 1
        with pytest.raises(DomainError):
            rob_plus(P1, EX6_X, EX6_X)  # not one column longer
        wrong = EX6_PAIR.copy()
        wrong[0, 0] = 99.0
        with pytest.raises(DomainError):
            rob_plus(P1, EX6_X, wrong)  # first columns differ


class TestRobMinus:
    def test_ex7_under_positive_only_convention(self):
        # the worked example's numbers: 0 for finite p, 1/3 for the max norm
        assert rob_minus(P1, EX7_Z, positive_only=True).as_fraction() == 0
        assert rob_minus(P2, EX7_Z, positive_only=True).as_fraction() == 0
        assert rob_minus(PINF, EX7_Z, positive_only=True).as_fraction() == Fraction(1, 3)

    def test_ex7_under_default_convention(self):
        # with duplicate rows counting as neighbors, row 1's set {2} survives
        # the first-column removal and row 3's survives the second, so 4 of
        # the 6 (row, column) incidents change for every p
        for p in (P1, P2, PINF):
            assert rob_minus(p, EX7_Z).as_fraction() == Fraction(1, 3)

    def test_triangle_one_and_max_norms(self):
        assert rob_minus(P1, TRIANGLE).as_fraction() == Fraction(2, 3)
        assert rob_minus(PINF, TRIANGLE).as_fraction() == Fraction(2, 3)

    def test_triangle_euclidean_has_an_exact_tie(self):
        # rows 2 and 3 of the Euclidean matrix tie at 2*sqrt(3) (the distance
        # to row 1 equals the distance between them), so removing either
        # column changes rows 2 and 3: 4 changes out of 6, not 2
        d = build(P2, TRIANGLE)
        assert d[1, 0] == pytest.approx(d[1, 2], rel=1e-15)
        assert rob_minus(P2, TRIANGLE).as_fraction() == Fraction(1, 3)

    def test_identical_rows_score_one(self):
        x = np.ones((4, 3))
        for c in (P1, P2, PINF, SquaredEuclidean()):
            assert rob_minus(c, x).as_fraction() == 1

    def test_denominator_is_nk(self):
        score = rob_minus(P1, EX7_Z)
        assert score.denominator == 6

    def test_preconditions(self):
        with pytest.raises(DomainError):
            rob_minus(P1, [[1.0], [2.0]])  # k = 1
        with pytest.raises(DomainError):
            rob_minus(P1, [[1.0, 2.0]])  # n = 1


class TestSpacingValues:
    def test_smallest_case(self):
        u = spacing_values(2)
        assert u[0, 1] == 2  # |2^2 - 2^1|

    def test_four_rows(self):
        u = spacing_values(4)
        upper = {u[i, j] for i in range(4) for j in range(i + 1, 4)}
        assert upper == {2, 6, 14, 4, 12, 8}

    def test_ten_rows_all_distinct(self):
        u = spacing_values(10)
        values = [u[i, j] for i in range(10) for j in range(i + 1, 10)]
        assert len(values) == 45
        assert len(set(values)) == 45

    def test_symmetric_zero_diagonal(self):
        u = spacing_values(5)
        assert (u == u.T).all()
        assert all(u[i, i] == 0 for i in range(5))

    def test_requires_two(self):
        with pytest.raises(DomainError):
            spacing_values(1)


class TestAdversarialAugment:
    def test_triangle_euclidean(self):
        # all six distances tie, so the neighbor total starts at 6 = n(n-1)
        assert nearest_sets(build(P2, TRIANGLE)).total == 6
        result = adversarial_augment(P2, TRIANGLE)
        assert result.achieved_near_total == 3
        assert rob_plus(P2, TRIANGLE, result.augmented).as_fraction() <= Fraction(3, 6)
        assert np.array_equal(result.augmented[:, :2], TRIANGLE)
        assert result.spacing == (1, 2, 4)

    def test_max_norm_dominant_column_follows_spacing(self):
        result = adversarial_augment(PINF, EX6_X)
        assert result.achieved_near_total == 3
        # once t is large the appended column decides everything: each row's
        # unique neighbor minimizes |2^(j-1) - 2^(i-1)|
        y = np.array(result.spacing, dtype=float)
        gaps = np.abs(y[:, None] - y[None, :])
        np.fill_diagonal(gaps, np.inf)
        expected = [frozenset({int(np.argmin(gaps[i]))}) for i in range(3)]
        d = build(PINF, result.augmented)
        if result.t * gaps[gaps < np.inf].min() > build(PINF, EX6_X).max():
            assert list(nearest_sets(d).sets) == expected

    def test_identical_rows_all_ties_broken(self):
        x = np.zeros((3, 2))
        assert nearest_sets(build(P1, x)).total == 6
        result = adversarial_augment(P1, x)
        assert result.achieved_near_total == 3
        assert rob_plus(P1, x, result.augmented).as_fraction() <= Fraction(3, 6)

    @pytest.mark.parametrize("p", [1.0, 2.0, 3.0, math.inf])
    def test_random_matrices(self, p):
        rng = np.random.default_rng(34)
        for _ in range(5):
            n = int(rng.integers(2, 7))
            x = rng.standard_normal((n, 2))
            result = adversarial_augment(PNorm(p), x)
            assert result.achieved_near_total == n
            near = nearest_sets(build(PNorm(p), x)).total
            assert rob_plus(PNorm(p), x, result.augmented).as_fraction() <= Fraction(n, near)

    def test_rejects_squared_euclidean(self):
        with pytest.raises(DomainError):
            adversarial_augment(SquaredEuclidean(), TRIANGLE)

    def test_rejects_single_row(self):
        with pytest.raises(DomainError):
            adversarial_augment(P1, [[1.0, 2.0]])


def test_rob_plus_invariant_under_constant_column_padding():
    # padding X with constant columns changes neither neighbor structure, so
    # the score against a correspondingly padded extension is unchanged
    rng = np.random.default_rng(35)
    for _ in range(10):
        x = rng.standard_normal((4, 2))
        new_col = rng.standard_normal((4, 1))
        padded = augment_constant_columns(x, [1.5, -2.0])
        base = rob_plus(P2, x, np.hstack([x, new_col]))
        shifted = rob_plus(P2, padded, np.hstack([padded, new_col]))
        assert base.as_fraction() == shifted.as_fraction()
        assert base.denominator == shifted.denominator
