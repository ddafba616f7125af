"""Basis evaluation, Gauss quadrature, and coefficient-space differentiation."""

import math

import numpy as np
import pytest

from crossdiff.legendre import (
    eval_phi,
    gauss_rule,
    iterate_derivative,
    mueller_first_derivative,
    phi_matrix,
    synthesize,
)


def test_phi0_is_normalized_constant():
    t = np.linspace(-1.0, 1.0, 11)
    assert np.allclose(phi_matrix(0, t)[0], 1.0 / math.sqrt(2.0), atol=1e-15)


def test_phi1_endpoint_value():
    assert eval_phi(1, 1.0) == pytest.approx(math.sqrt(1.5), rel=1e-15)


def test_phi5_against_rodrigues_polynomial():
    # P_5(t) = (63 t^5 - 70 t^3 + 15 t)/8, independent of the recurrence
    for t in (0.3, -0.77, 0.995):
        p5 = (63.0 * t**5 - 70.0 * t**3 + 15.0 * t) / 8.0
        assert eval_phi(5, t) == pytest.approx(math.sqrt(5.5) * p5, abs=1e-13)


def test_phi_matrix_shape_and_negative_degree():
    t = np.linspace(-1.0, 1.0, 5)
    assert phi_matrix(7, t).shape == (8, 5)
    with pytest.raises(ValueError):
        phi_matrix(-1, t)


def test_orthonormality_to_degree_40():
    rule = gauss_rule(64)
    P = phi_matrix(40, rule.nodes)
    gram = (P * rule.weights) @ P.T
    assert np.abs(gram - np.eye(41)).max() < 1e-10


def test_gauss_rule_smallest_sizes():
    r1 = gauss_rule(1)
    assert np.allclose(r1.nodes, [0.0], atol=1e-15)
    assert np.allclose(r1.weights, [2.0], atol=1e-15)
    r2 = gauss_rule(2)
    assert np.allclose(r2.nodes, [-1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0)], atol=1e-15)
    assert np.allclose(r2.weights, [1.0, 1.0], atol=1e-14)
    with pytest.raises(ValueError):
        gauss_rule(0)


def test_gauss_rule_five_nodes_closed_form():
    # classical closed form for the 5-point rule
    a = math.sqrt(5.0 - 2.0 * math.sqrt(10.0 / 7.0)) / 3.0
    b = math.sqrt(5.0 + 2.0 * math.sqrt(10.0 / 7.0)) / 3.0
    nodes = np.array([-b, -a, 0.0, a, b])
    w_a = (322.0 + 13.0 * math.sqrt(70.0)) / 900.0
    w_b = (322.0 - 13.0 * math.sqrt(70.0)) / 900.0
    weights = np.array([w_b, w_a, 128.0 / 225.0, w_a, w_b])
    rule = gauss_rule(5)
    assert np.abs(rule.nodes - nodes).max() < 1e-14
    assert np.abs(rule.weights - weights).max() < 1e-14


def test_gauss_rule_matches_numpy_reference():
    for m in (3, 8, 17, 33):
        x_ref, w_ref = np.polynomial.legendre.leggauss(m)
        rule = gauss_rule(m)
        assert np.abs(rule.nodes - x_ref).max() < 1e-13
        assert np.abs(rule.weights - w_ref).max() < 1e-13


def test_gauss_weights_sum_to_two():
    for m in (1, 2, 3, 7, 12, 33, 64):
        assert abs(gauss_rule(m).weights.sum() - 2.0) < 1e-12


def test_gauss_monomial_exactness():
    # an m-point rule integrates t^d exactly for d <= 2m-1
    rule = gauss_rule(7)
    for d in range(14):
        exact = 2.0 / (d + 1) if d % 2 == 0 else 0.0
        assert rule.weights @ rule.nodes**d == pytest.approx(exact, abs=1e-13)


def test_first_derivative_operator_columns():
    op = mueller_first_derivative(6)
    M = op.matrix
    assert op.order == 1
    # column 2: only entry l=1, value 2*sqrt(5/2)*sqrt(3/2) = sqrt(15)
    col2 = M[:, 2].copy()
    assert col2[1] == pytest.approx(math.sqrt(15.0), rel=1e-15)
    col2[1] = 0.0
    assert np.all(col2 == 0.0)
    # column 1: only entry l=0, value sqrt(3)
    assert M[0, 1] == pytest.approx(math.sqrt(3.0), rel=1e-15)
    assert np.count_nonzero(M[:, 1]) == 1
    # column 0: derivative of a constant
    assert np.all(M[:, 0] == 0.0)


def test_first_derivative_operator_sparsity_pattern():
    M = mueller_first_derivative(25).matrix
    for k in range(26):
        nz = np.nonzero(M[:, k])[0]
        assert len(nz) == (k + 1) // 2
        for l in nz:
            assert l < k and (k + l) % 2 == 1


def test_iterate_derivative_identity_and_validation():
    op1 = mueller_first_derivative(8)
    same = iterate_derivative(op1, 1)
    assert same.order == 1
    assert np.array_equal(same.matrix, op1.matrix)
    with pytest.raises(ValueError):
        iterate_derivative(op1, 0)
    with pytest.raises(ValueError):
        iterate_derivative(iterate_derivative(op1, 2), 2)


def test_second_derivative_of_cubic():
    # t^3 = (3/5) P_1 + (2/5) P_3; second derivative is 6t
    c = np.zeros(5)
    c[1] = (3.0 / 5.0) / math.sqrt(1.5)
    c[3] = (2.0 / 5.0) / math.sqrt(3.5)
    op2 = iterate_derivative(mueller_first_derivative(4), 2)
    out = op2.matrix @ c
    expect = np.zeros(5)
    expect[1] = 6.0 / math.sqrt(1.5)
    assert np.abs(out - expect).max() < 1e-12


def test_second_derivative_operator_column_2():
    op2 = iterate_derivative(mueller_first_derivative(4), 2)
    col = op2.matrix[:, 2].copy()
    assert col[0] == pytest.approx(math.sqrt(45.0), rel=1e-14)
    col[0] = 0.0
    assert np.all(col == 0.0)


def test_coefficient_space_derivatives_match_polynomial_calculus():
    # random degree-30 polynomials, r = 1..3, synthesized on 33 points
    rng = np.random.default_rng(7)
    rule = gauss_rule(64)
    deg = 40
    P = phi_matrix(deg, rule.nodes)
    pts = np.linspace(-1.0, 1.0, 33)
    P_pts = phi_matrix(deg, pts)
    op1 = mueller_first_derivative(deg)
    for trial in range(5):
        coeffs = rng.uniform(-1.0, 1.0, 31)
        qvals = np.polynomial.polynomial.polyval(rule.nodes, coeffs)
        c = (P * rule.weights) @ qvals
        for r in (1, 2, 3):
            d_coeffs = np.polynomial.polynomial.polyder(coeffs, r)
            exact = np.polynomial.polynomial.polyval(pts, d_coeffs)
            approx = P_pts.T @ (iterate_derivative(op1, r).matrix @ c)
            scale = max(1.0, np.abs(exact).max())
            assert np.abs(approx - exact).max() < 1e-8 * scale


def test_endpoint_derivative_closed_form():
    # phi_k^{(r)}(1) = sqrt(k+1/2) * prod_{i=0}^{r-1} (k-i)(k+i+1) / (2^r r!)
    deg = 40
    op1 = mueller_first_derivative(deg)
    one = np.array([1.0])
    for k in (1, 3, 7, 12, 20, 40):
        for r in (1, 2, 3):
            num = 1.0
            for i in range(r):
                num *= (k - i) * (k + i + 1)
            expect = math.sqrt(k + 0.5) * num / (2.0**r * math.factorial(r))
            c = np.zeros(deg + 1)
            c[k] = 1.0
            d = iterate_derivative(op1, r).matrix @ c
            val = float((phi_matrix(deg, one).T @ d)[0])
            if expect == 0.0:
                assert abs(val) < 1e-10
            else:
                assert val == pytest.approx(expect, rel=1e-8)


def test_synthesize_constant_surface():
    data = np.zeros((1, 1))
    data[0, 0] = 1.0
    t = np.linspace(-1.0, 1.0, 9)
    out = synthesize(data, t, t)
    assert np.allclose(out, 0.5, atol=1e-15)


def test_synthesize_linear_function():
    data = np.zeros((2, 1))
    data[1, 0] = (2.0 / 3.0) * math.sqrt(3.0)
    t = np.linspace(-1.0, 1.0, 21)
    tau = np.linspace(-1.0, 1.0, 5)
    out = synthesize(data, t, tau)
    assert np.abs(out - t[:, None]).max() < 1e-14


def test_synthesize_rejects_non_2d():
    with pytest.raises(ValueError):
        synthesize(np.zeros(4), np.zeros(3), np.zeros(3))
