import math
import random
from fractions import Fraction

import pytest

from quartpd.inequalities import (
    WeightedInequality,
    builtin_catalog,
    exact_spot_check,
    verify,
)
from quartpd.oracle import OracleConfig

from conftest import rand_fraction, rand_vector


def by_label(label):
    matches = [q for q in builtin_catalog() if q.label == label]
    assert len(matches) == 1, label
    return matches[0]


class TestCatalog:
    def test_uniform_19_nonstrict(self):
        q = by_label("19u")
        assert not q.strict and not q.expected_fail
        assert q.equality_line == (1, 1, 1)

    def test_expected_fail_entries(self):
        q = by_label("19-14-14")
        assert q.expected_fail
        assert q.fail_point == (Fraction(-6, 5), 5, 1)
        q = by_label("41/3-15-15")
        assert q.expected_fail
        assert q.fail_point == (Fraction(-47, 5), -2, Fraction(23, 10))

    def test_labels_unique(self):
        labels = [q.label for q in builtin_catalog()]
        assert len(labels) == len(set(labels))

    def test_strict_uniforms_present(self):
        for c in ("14", "15", "16", "17", "18", "41/3"):
            assert by_label(f"{c}u").strict


class TestExactSpotCheck:
    def test_uniform_19_at_ones(self):
        assert exact_spot_check(by_label("19u"), (1, 1, 1)) == 0

    def test_fail_point_value(self):
        v = exact_spot_check(by_label("19-14-14"), (Fraction(-6, 5), 5, 1))
        assert v == Fraction(-145240, 6250)
        assert float(v) == -23.2384

    def test_uniform_14_sample(self):
        assert exact_spot_check(by_label("14u"), (1, 1, -5)) == 903

    def test_second_fail_point_negative(self):
        q = by_label("41/3-15-15")
        assert exact_spot_check(q, q.fail_point) < 0

    def test_tensor_matches_polynomial(self, rng):
        for q in builtin_catalog():
            T = q.to_tensor()
            for _ in range(10):
                x = rand_vector(rng, 3)
                assert T.evaluate_form(x) == q.value(x)


class TestVerify:
    def test_uniform_19_boundary(self):
        rep = verify(by_label("19u"))
        assert rep.holds and rep.as_expected
        assert abs(rep.sphere_min) <= 1e-8
        expect = 1 / math.sqrt(3)
        assert len(rep.equality_points) == 2
        for p in rep.equality_points:
            assert all(abs(abs(v) - expect) <= 1e-4 for v in p)

    def test_uniform_14_strict(self):
        rep = verify(by_label("14u"))
        assert rep.holds and rep.sphere_min > 1e-8

    def test_expected_fail_certified(self):
        rep = verify(by_label("19-14-14"))
        assert not rep.holds and rep.as_expected
        assert rep.sphere_min < -1e-8

    def test_all_catalog_as_expected(self):
        for q in builtin_catalog():
            assert verify(q).as_expected, q.label


class TestProperties:
    def test_exchange_variant_holds(self):
        # mirrored cubic monomials: the exchanged strict inequalities hold too
        for label in ("14u", "17u", "19-17-15"):
            base = by_label(label)
            ex = WeightedInequality(
                base.label + "x", base.weights, base.strict, exchanged=True
            )
            rep = verify(ex)
            assert rep.holds, label

    def test_exchange_equals_reflected_argument(self, rng):
        # swapping the cubic set equals evaluating at reversed coordinates
        base = by_label("19-17-15")
        ex = WeightedInequality("x", base.weights[::-1], True, exchanged=True)
        for _ in range(50):
            x = rand_vector(rng, 3)
            assert base.value(x) == ex.value(x[::-1])

    def test_monotone_in_uniform_weight(self, rng):
        # larger uniform weight only subtracts more where the weight term
        # is positive
        c19, c14 = by_label("19u"), by_label("14u")
        found = 0
        for _ in range(300):
            x = rand_vector(rng, 3)
            x1, x2, x3 = x
            if x1 * x2 * x3 * (x1 + x2 + x3) > 0:
                found += 1
                assert c19.value(x) <= c14.value(x)
        assert found > 20
