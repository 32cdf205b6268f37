"""Dunkl operators: derivatives, Laplacian, sl2, conjugation, heat flow."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_hermite.errors import MathPrecondition
from dunkl_hermite.groups import builtin_root_system
from dunkl_hermite.operators import (DunklContext, WeightedFunction, conjugated_dunkl,
                                     conjugated_laplacian, dunkl_derivative, dunkl_laplacian,
                                     euler_operator, heat_semigroup, laplace_beltrami,
                                     multiply_by_norm_squared, sl2_e, sl2_f, sl2_h)
from dunkl_hermite.poly import Polynomial, monomial_basis


def ctx_z2(m, kappas):
    return DunklContext(builtin_root_system("z2", m, kappas))


def test_dunkl_derivative_on_the_line():
    ctx = ctx_z2(1, [1])
    x3 = Polynomial.monomial(1, (3,))
    # derivative part 3x^2 plus difference part 2x^2
    assert dunkl_derivative(ctx, 0, x3) == Polynomial(1, {(2,): Fraction(5)})
    assert dunkl_laplacian(ctx, x3) == Polynomial(1, {(1,): Fraction(10)})


def test_dunkl_derivative_even_function_matches_classical():
    ctx = ctx_z2(1, [Fraction(5, 2)])
    x4 = Polynomial.monomial(1, (4,))
    assert dunkl_derivative(ctx, 0, x4) == Polynomial(1, {(3,): Fraction(4)})


def test_dunkl_derivative_swap_group():
    # single root e1 - e2: T_1 x1 = 1 + kappa
    ctx = DunklContext(builtin_root_system("a", 2, [Fraction(1, 3)]))
    x1 = Polynomial.variable(2, 0)
    assert dunkl_derivative(ctx, 0, x1) == Polynomial.constant(2, Fraction(4, 3))


def test_kappa_zero_reduces_to_partial_derivative():
    ctx = ctx_z2(2, [0, 0])
    for degree in range(5):
        for e in monomial_basis(2, degree):
            p = Polynomial.monomial(2, e)
            for axis in range(2):
                assert dunkl_derivative(ctx, axis, p) == p.derivative(axis)


def test_dunkl_operators_commute_spot_check():
    ctx = DunklContext(builtin_root_system("b", 2, [Fraction(1, 2), Fraction(2, 3)]))
    for degree in range(5):
        for e in monomial_basis(2, degree):
            p = Polynomial.monomial(2, e)
            assert (dunkl_derivative(ctx, 0, dunkl_derivative(ctx, 1, p))
                    == dunkl_derivative(ctx, 1, dunkl_derivative(ctx, 0, p)))


def test_laplacian_of_norm_squared_is_two_mu():
    for family, m, kappas in (("z2", 2, [1, 1]), ("b", 2, [1, 2]), ("a", 3, [1])):
        ctx = DunklContext(builtin_root_system(family, m, kappas))
        expected = Polynomial.constant(m, 2 * ctx.mu)
        assert dunkl_laplacian(ctx, Polynomial.norm_squared(m)) == expected


def test_euler_operator_scales_by_degree():
    p = Polynomial(2, {(2, 1): Fraction(4), (1, 0): Fraction(-1)})
    assert euler_operator(p) == Polynomial(2, {(2, 1): Fraction(12), (1, 0): Fraction(-1)})


def test_sl2_relations_on_monomials():
    ctx = DunklContext(builtin_root_system("b", 2, [Fraction(3, 4), Fraction(1, 2)]))
    for degree in range(5):
        for e in monomial_basis(2, degree):
            f = Polynomial.monomial(2, e)
            assert sl2_h(ctx, sl2_e(f)) - sl2_e(sl2_h(ctx, f)) == 2 * sl2_e(f)
            assert sl2_h(ctx, sl2_f(ctx, f)) - sl2_f(ctx, sl2_h(ctx, f)) == -2 * sl2_f(ctx, f)
            assert sl2_e(sl2_f(ctx, f)) - sl2_f(ctx, sl2_e(f)) == sl2_h(ctx, f)


def test_radial_commutation_lemma():
    ctx = DunklContext(builtin_root_system("a", 3, [Fraction(1, 2)]))
    mu = ctx.mu
    norm2 = Polynomial.norm_squared(3)
    for ell, e in ((2, (2, 0, 0)), (3, (1, 1, 1))):
        R = Polynomial.monomial(3, e)
        for s in (1, 2):
            lhs = dunkl_laplacian(ctx, (norm2 ** s) * R)
            factor = 2 * s * (2 * ell + mu + 2 * s - 2)
            rhs = factor * ((norm2 ** (s - 1)) * R) + (norm2 ** s) * dunkl_laplacian(ctx, R)
            assert lhs == rhs


def test_laplace_beltrami_annihilates_constants_and_eigenvalue():
    ctx = ctx_z2(2, [1, 2])
    mu = ctx.mu
    one = Polynomial.constant(2, Fraction(1))
    assert laplace_beltrami(ctx, one) == Polynomial.zero(2)
    # x1 x2 is Dunkl-harmonic for Z2 x Z2; eigenvalue -ell(mu - 2 + ell), ell = 2
    h = Polynomial.monomial(2, (1, 1))
    assert laplace_beltrami(ctx, h) == (-2 * (mu - 2 + 2)) * h


def test_conjugated_dunkl_adds_multiplication_term():
    ctx = ctx_z2(1, [1])
    x2 = Polynomial.monomial(1, (2,))
    plain = dunkl_derivative(ctx, 0, x2)
    assert conjugated_dunkl(ctx, Fraction(-1), 0, x2) == plain - 2 * Polynomial.monomial(1, (3,))


def test_conjugated_laplacian_on_constants():
    ctx = ctx_z2(2, [Fraction(1, 2), Fraction(1, 2)])
    one = Polynomial.constant(2, Fraction(1))
    # (T_i - 2x_i)^2 applied to 1 gives 4|x|^2 - 2mu
    expected = 4 * Polynomial.norm_squared(2) - Polynomial.constant(2, 2 * ctx.mu)
    assert conjugated_laplacian(ctx, Fraction(-1), one) == expected


def test_heat_semigroup_on_norm_squared():
    ctx = DunklContext(builtin_root_system("b", 2, [1, 2]))
    result = heat_semigroup(ctx, Polynomial.norm_squared(2))
    assert result == Polynomial.norm_squared(2) - Polynomial.constant(2, ctx.mu / 2)


def test_heat_semigroup_inverse():
    ctx = ctx_z2(2, [1, Fraction(1, 2)])
    for degree in range(7):
        for e in monomial_basis(2, degree):
            p = Polynomial.monomial(2, e)
            cooled = heat_semigroup(ctx, p, Fraction(-1, 4))
            assert heat_semigroup(ctx, cooled, Fraction(1, 4)) == p


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3))
@settings(max_examples=16, deadline=None)
def test_heat_semigroup_additive_in_rate(a, b):
    ctx = ctx_z2(2, [1, 1])
    p = Polynomial.monomial(2, (a, b))
    two_steps = heat_semigroup(ctx, heat_semigroup(ctx, p, Fraction(-1, 8)), Fraction(-1, 8))
    assert two_steps == heat_semigroup(ctx, p, Fraction(-1, 4))


def test_weighted_function_laplacian_of_gaussian():
    ctx = ctx_z2(2, [1, 2])
    gaussian = WeightedFunction(Polynomial.constant(2, Fraction(1)), Fraction(-1, 2))
    result = gaussian.laplacian(ctx)
    assert result.gaussian_rate == Fraction(-1, 2)
    expected = Polynomial.norm_squared(2) - Polynomial.constant(2, ctx.mu)
    assert result.polynomial_part == expected


def test_weighted_function_rate_mismatch():
    a = WeightedFunction(Polynomial.constant(1, Fraction(1)), Fraction(-1, 2))
    b = WeightedFunction(Polynomial.constant(1, Fraction(1)), Fraction(-1, 4))
    with pytest.raises(MathPrecondition):
        a - b


def test_multiply_by_norm_squared():
    p = Polynomial.variable(2, 0)
    assert multiply_by_norm_squared(p) == Polynomial.norm_squared(2) * p
