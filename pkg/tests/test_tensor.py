import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartpd.cyclic import CyclicTernary, embed
from quartpd.tensor import (
    SymmetricTensor4,
    diag_ones,
    multiplicity,
    rank_one,
    symmetrize,
)

from conftest import dense_form_reference, rand_fraction, rand_tensor, rand_vector

fractions_st = st.fractions(min_value=-3, max_value=3, max_denominator=8)


def test_multiplicity_table():
    assert multiplicity((1, 1, 1, 1)) == 1
    assert multiplicity((1, 1, 1, 2)) == 4
    assert multiplicity((1, 1, 2, 2)) == 6
    assert multiplicity((1, 1, 2, 3)) == 12
    assert multiplicity((1, 2, 3, 4)) == 24


def test_canonical_slot_count():
    # C(n+3, 4) canonical slots
    assert sum(1 for _ in itertools.combinations_with_replacement(range(2), 4)) == 5
    T = rand_tensor(random.Random(1), 3)
    assert len(T.entries()) <= 15


def test_permuted_lookup():
    T = SymmetricTensor4(3, {(1, 2, 2, 3): Fraction(5, 7)})
    for perm in itertools.permutations((1, 2, 2, 3)):
        assert T[perm] == Fraction(5, 7)
    assert T[(1, 1, 1, 1)] == 0


def test_evaluate_form_diag_ones():
    assert diag_ones(3).evaluate_form((1, 1, 1)) == 3


def test_evaluate_form_paper_values():
    case1 = embed(CyclicTernary.of(1, 1, 1, 1, "-7/12"))
    assert case1.evaluate_form((1, 1, -5)) == -204
    case2 = embed(CyclicTernary.of(1, -1, -1, 1, "-7/12"))
    assert case2.evaluate_form((1, 1, 1)) == -24


def test_evaluate_form_matches_dense_reference(rng):
    for _ in range(50):
        n = rng.choice([2, 3])
        T = rand_tensor(rng, n)
        x = rand_vector(rng, n)
        assert T.evaluate_form(x) == dense_form_reference(T, x)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        diag_ones(3).evaluate_form((1, 1))
    with pytest.raises(ValueError):
        diag_ones(2).inner_product(diag_ones(3))


def test_gradient_trivial():
    assert diag_ones(3).evaluate_gradient((1, 0, 0)) == (1, 0, 0)
    T = rand_tensor(random.Random(2), 3)
    assert T.evaluate_gradient((0, 0, 0)) == (0, 0, 0)


def test_gradient_euler_identity(rng):
    # sum_k (Tx^3)_k x_k = Tx^4
    for _ in range(30):
        n = rng.choice([2, 3])
        T = rand_tensor(rng, n)
        x = rand_vector(rng, n)
        g = T.evaluate_gradient(x)
        assert sum(gk * xk for gk, xk in zip(g, x)) == T.evaluate_form(x)


def test_gradient_boundary_tensor():
    T = embed(CyclicTernary.of(1, -1, -1, 1, "-7/12"))
    g = T.evaluate_gradient((1, 1, 1))
    assert sum(g) == -24
    # totally symmetric tensor at a symmetric point: equal components
    assert g == (Fraction(-8), Fraction(-8), Fraction(-8))


def test_mixed_collapses_to_form(rng):
    T = rand_tensor(rng, 3)
    x = rand_vector(rng, 3)
    y = rand_vector(rng, 3)
    assert T.evaluate_mixed(x, 4, y) == T.evaluate_form(x)
    assert T.evaluate_mixed(x, 0, y) == T.evaluate_form(y)


def test_mixed_diag_ones_orthogonal():
    assert diag_ones(2).evaluate_mixed((1, 0), 2, (0, 1)) == 0


def test_mixed_k_out_of_range():
    with pytest.raises(ValueError):
        diag_ones(2).evaluate_mixed((1, 0), 5, (0, 1))


def test_inner_product_examples(rng):
    d3 = diag_ones(3)
    assert d3.inner_product(d3) == 3
    T = rand_tensor(rng, 3)
    x = rand_vector(rng, 3)
    assert T.inner_product(rank_one(x)) == T.evaluate_form(x)


def test_frobenius():
    assert SymmetricTensor4(3, {}).frobenius_norm() == 0
    assert diag_ones(3).frobenius_norm() == pytest.approx(3**0.5)
    x = (Fraction(1, 2), Fraction(-2), Fraction(3))
    norm_sq = sum(v * v for v in x) ** 4
    assert rank_one(x).frobenius_norm_squared() == norm_sq


@given(
    alpha=fractions_st,
    beta=fractions_st,
    seed=st.integers(0, 10**6),
)
@settings(max_examples=60, deadline=None)
def test_binomial_expansion(alpha, beta, seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    T = rand_tensor(rng, n)
    x = rand_vector(rng, n)
    y = rand_vector(rng, n)
    z = tuple(alpha * xi + beta * yi for xi, yi in zip(x, y))
    expansion = (
        alpha**4 * T.evaluate_mixed(x, 4, y)
        + 4 * alpha**3 * beta * T.evaluate_mixed(x, 3, y)
        + 6 * alpha**2 * beta**2 * T.evaluate_mixed(x, 2, y)
        + 4 * alpha * beta**3 * T.evaluate_mixed(x, 1, y)
        + beta**4 * T.evaluate_mixed(x, 0, y)
    )
    assert T.evaluate_form(z) == expansion


@given(lam=fractions_st, seed=st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_homogeneity(lam, seed):
    rng = random.Random(seed)
    T = rand_tensor(rng, 3)
    x = rand_vector(rng, 3)
    assert T.evaluate_form(tuple(lam * v for v in x)) == lam**4 * T.evaluate_form(x)


def test_symmetrize_identity(rng):
    T = rand_tensor(rng, 2)
    raw = {}
    for idx, v in T.entries().items():
        for perm in set(itertools.permutations(idx)):
            raw[perm] = v
    S, diag = symmetrize(raw, 2)
    assert S == T
    assert diag == 0


def test_symmetrize_averages():
    raw = {(1, 1, 1, 2): 2, (1, 1, 2, 1): 0, (1, 2, 1, 1): 0, (2, 1, 1, 1): 0}
    S, diag = symmetrize(raw, 2)
    assert S[(1, 1, 1, 2)] == Fraction(1, 2)
    assert diag == Fraction(3, 2)


def test_symmetrize_random_permuted(rng):
    for _ in range(20):
        T = rand_tensor(rng, 3)
        raw = {}
        for idx, v in T.entries().items():
            for perm in set(itertools.permutations(idx)):
                raw[perm] = v
        S, diag = symmetrize(raw, 3)
        assert S == T and diag == 0
