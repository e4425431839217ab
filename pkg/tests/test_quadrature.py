import math

import numpy as np
import pytest

from oseenbench.quadrature import (MAX_EDGE_DEGREE, MAX_TRIANGLE_DEGREE,
                                   TRI_DEGREES, edge_rule, triangle_rule)


def reference_monomial_integral(a, b):
    # int_T x^a y^b over the unit reference triangle
    return math.factorial(a) * math.factorial(b) / math.factorial(a + b + 2)


def _centroid_sum(f, n):
    """Centroid rule on 4^k congruent subtriangles (n per side)."""
    j, i = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    keep = (i + j) < n
    i, j = i[keep], j[keep]
    h = 1.0 / n
    xs = [(i + 1.0 / 3.0) * h]
    ys = [(j + 1.0 / 3.0) * h]
    keep2 = (i + j) < n - 1
    xs.append((i[keep2] + 2.0 / 3.0) * h)
    ys.append((j[keep2] + 2.0 / 3.0) * h)
    x = np.concatenate(xs)
    y = np.concatenate(ys)
    return float(np.sum(f(x, y)) * 0.5 * h * h)


def subdivision_oracle(f, level=9):
    """Brute-force subdivision quadrature: centroid sums on three nested
    subdivisions, twice Richardson-extrapolated (error O(h^6))."""
    i0 = _centroid_sum(f, 2 ** (level - 2))
    i1 = _centroid_sum(f, 2 ** (level - 1))
    i2 = _centroid_sum(f, 2 ** level)
    r01 = (4.0 * i1 - i0) / 3.0
    r12 = (4.0 * i2 - i1) / 3.0
    return (16.0 * r12 - r01) / 15.0


@pytest.mark.parametrize("degree", TRI_DEGREES)
def test_triangle_exactness_sweep(degree):
    rule = triangle_rule(degree)
    x, y = rule.points[:, 1], rule.points[:, 2]
    for total in range(degree + 1):
        for a in range(total + 1):
            b = total - a
            got = float(np.dot(rule.weights, x ** a * y ** b))
            want = reference_monomial_integral(a, b)
            assert abs(got - want) <= 1e-14 * abs(want)


@pytest.mark.parametrize("degree", TRI_DEGREES)
def test_triangle_rule_basics(degree):
    rule = triangle_rule(degree)
    assert np.all(rule.weights > 0.0)
    assert abs(rule.weights.sum() - 0.5) < 1e-15
    lam = rule.points
    assert np.all(lam >= -1e-15) and np.all(lam <= 1.0 + 1e-15)
    assert np.allclose(lam.sum(axis=1), 1.0, atol=1e-14)


def test_triangle_rule_selects_smallest_sufficient():
    assert triangle_rule(1).degree == 2
    assert triangle_rule(3).degree == 5
    assert triangle_rule(7).degree == 8
    assert triangle_rule(12).degree == 12


def test_triangle_rule_degree_range():
    with pytest.raises(ValueError):
        triangle_rule(MAX_TRIANGLE_DEGREE + 1)
    with pytest.raises(ValueError):
        triangle_rule(0)


def test_degree2_on_x_squared():
    rule = triangle_rule(2)
    got = float(np.dot(rule.weights, rule.points[:, 1] ** 2))
    assert abs(got - 1.0 / 12.0) < 1e-15


def test_constant_integrates_to_area():
    for degree in TRI_DEGREES:
        rule = triangle_rule(degree)
        assert abs(rule.weights.sum() - 0.5) < 1e-15


def test_degree10_against_subdivision_oracle():
    rule = triangle_rule(10)
    got = float(np.dot(rule.weights,
                       rule.points[:, 1] ** 4 * rule.points[:, 2] ** 6))
    oracle = subdivision_oracle(lambda x, y: x ** 4 * y ** 6, level=10)
    exact = reference_monomial_integral(4, 6)
    assert exact == pytest.approx(1.0 / 27720.0, rel=1e-15)
    assert abs(got - oracle) <= 1e-13 * abs(exact)
    assert abs(got - exact) <= 1e-14 * abs(exact)


def test_edge_rule_two_point_cubic():
    rule = edge_rule(3)
    assert len(rule.weights) == 2
    got = float(np.dot(rule.weights, rule.points ** 3))
    assert abs(got - 0.25) < 1e-15


def test_edge_rule_weights_sum_to_one():
    for degree in range(1, MAX_EDGE_DEGREE + 1):
        rule = edge_rule(degree)
        assert abs(rule.weights.sum() - 1.0) < 1e-14
        assert len(rule.weights) == (degree + 2) // 2


def test_edge_rule_five_point_degree9():
    rule = edge_rule(9)
    assert len(rule.weights) == 5
    got = float(np.dot(rule.weights, rule.points ** 9))
    assert abs(got - 0.1) < 1e-15


def test_edge_rule_exactness_sweep():
    for degree in range(1, MAX_EDGE_DEGREE + 1):
        rule = edge_rule(degree)
        for k in range(rule.degree + 1):
            got = float(np.dot(rule.weights, rule.points ** k))
            want = 1.0 / (k + 1)
            assert abs(got - want) <= 1e-14 * want


def test_edge_rule_range():
    with pytest.raises(ValueError):
        edge_rule(0)
    with pytest.raises(ValueError):
        edge_rule(MAX_EDGE_DEGREE + 1)
