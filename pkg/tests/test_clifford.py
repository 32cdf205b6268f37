"""Clifford layer: blade products, Dirac operator, monogenics."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_hermite.clifford import (CliffordPolynomial, blade_product, d_plus,
                                    d_plus_squared_scalar, dunkl_dirac, monogenic_basis,
                                    vector_multiply)
from dunkl_hermite.groups import builtin_root_system, trivial_root_system
from dunkl_hermite.operators import DunklContext, dunkl_laplacian, euler_operator
from dunkl_hermite.poly import Polynomial, dim_homogeneous, monomial_basis


def classical(m):
    return DunklContext(trivial_root_system(m))


def test_blade_product_signs():
    assert blade_product(0b01, 0b01) == (-1, 0)          # e1 e1 = -1
    assert blade_product(0b01, 0b10) == (1, 0b11)        # e1 e2 = e12
    assert blade_product(0b10, 0b01) == (-1, 0b11)       # e2 e1 = -e12
    assert blade_product(0b11, 0b10) == (-1, 0b01)       # e12 e2 = -e1
    assert blade_product(0b11, 0b11) == (-1, 0)          # e12 e12 = -1
    assert blade_product(0, 0b101) == (1, 0b101)
    assert blade_product(0b101, 0) == (1, 0b101)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=0, max_value=7),
       st.integers(min_value=0, max_value=7))
@settings(max_examples=100, deadline=None)
def test_blade_product_associative(a, b, c):
    s1, ab = blade_product(a, b)
    s2, left = blade_product(ab, c)
    s3, bc = blade_product(b, c)
    s4, right = blade_product(a, bc)
    assert (s1 * s2, left) == (s3 * s4, right)


def test_vector_variable_squares_to_minus_norm():
    for m in (1, 2, 3):
        x = CliffordPolynomial.vector_variable(m)
        assert x * x == CliffordPolynomial.from_polynomial(-Polynomial.norm_squared(m))


def test_clifford_product_mixed_blades():
    x = CliffordPolynomial.vector_variable(2)
    e1 = CliffordPolynomial.unit_blade(2, 0b01)
    product = x * e1
    assert product.blade(0) == -Polynomial.variable(2, 0)
    assert product.blade(0b11) == -Polynomial.variable(2, 1)


def test_dirac_of_vector_variable_classical():
    for m in (2, 3):
        ctx = classical(m)
        x = CliffordPolynomial.vector_variable(m)
        expected = CliffordPolynomial.from_polynomial(Polynomial.constant(m, Fraction(-m)))
        assert dunkl_dirac(ctx, x) == expected


def test_dirac_of_scalar_coordinate_on_the_line():
    ctx = DunklContext(builtin_root_system("z2", 1, [1]))
    x1 = CliffordPolynomial.from_polynomial(Polynomial.variable(1, 0))
    result = dunkl_dirac(ctx, x1)
    assert result.blade(0b01) == Polynomial.constant(1, ctx.mu)
    assert result.blade(0) == Polynomial.zero(1)


def test_dirac_squared_is_minus_laplacian():
    ctx = DunklContext(builtin_root_system("b", 2, [Fraction(1, 2), Fraction(1, 3)]))
    for mask in range(4):
        for degree in range(4):
            for e in monomial_basis(2, degree):
                F = CliffordPolynomial(2, {mask: Polynomial.monomial(2, e)})
                lhs = dunkl_dirac(ctx, dunkl_dirac(ctx, F))
                rhs = F.apply_scalar_operator(lambda p: -dunkl_laplacian(ctx, p))
                assert lhs == rhs


def test_anticommutator_identity():
    ctx = DunklContext(builtin_root_system("a", 3, [Fraction(2, 3)]))
    for mask in (0, 0b001, 0b011, 0b111):
        for e in ((1, 0, 0), (1, 1, 1), (2, 0, 1)):
            F = CliffordPolynomial(3, {mask: Polynomial.monomial(3, e)})
            lhs = dunkl_dirac(ctx, vector_multiply(F)) + vector_multiply(dunkl_dirac(ctx, F))
            rhs = F.apply_scalar_operator(lambda p: -(2 * euler_operator(p) + ctx.mu * p))
            assert lhs == rhs


def test_d_plus_squared_scalar_form():
    ctx = DunklContext(builtin_root_system("z2", 2, [1, 2]))
    for mask in range(4):
        for e in ((0, 0), (1, 0), (2, 1)):
            F = CliffordPolynomial(2, {mask: Polynomial.monomial(2, e)})
            assert d_plus(ctx, d_plus(ctx, F)) == d_plus_squared_scalar(ctx, F)


def test_d_plus_on_constants():
    ctx = classical(2)
    one = CliffordPolynomial.from_polynomial(Polynomial.constant(2, Fraction(1)))
    assert d_plus(ctx, one) == 2 * CliffordPolynomial.vector_variable(2)


def test_monogenic_basis_degree_one_classical():
    ctx = classical(2)
    x1 = Polynomial.variable(2, 0)
    x2 = Polynomial.variable(2, 1)
    basis = monogenic_basis(ctx, 1)
    assert basis == [
        CliffordPolynomial(2, {0b01: x2, 0b10: x1}),
        CliffordPolynomial(2, {0b01: x1, 0b10: -x2}),
        CliffordPolynomial(2, {0: x2, 0b11: x1}),
        CliffordPolynomial(2, {0: x1, 0b11: -x2}),
    ]


def test_monogenic_dimension_classical():
    # kernel of the surjective Dirac map on blade-valued homogeneous polynomials
    for m in (2, 3):
        ctx = classical(m)
        for ell in (1, 2, 3):
            expected = (2 ** m) * (dim_homogeneous(m, ell) - dim_homogeneous(m, ell - 1))
            assert len(monogenic_basis(ctx, ell)) == expected


def test_monogenics_are_annihilated_dunkl_case():
    ctx = DunklContext(builtin_root_system("z2", 2, [Fraction(1, 2), Fraction(3, 4)]))
    for ell in (1, 2):
        basis = monogenic_basis(ctx, ell)
        assert basis
        for M in basis:
            assert not dunkl_dirac(ctx, M)


def test_json_round_trip():
    F = CliffordPolynomial(2, {0: Polynomial.variable(2, 0),
                               0b11: -3 * Polynomial.norm_squared(2)})
    data = F.to_json()
    assert [b["mask"] for b in data["blades"]] == [0, 3]
    assert CliffordPolynomial.from_json(data) == F


def test_zero_blades_are_dropped():
    F = CliffordPolynomial(2, {0b01: Polynomial.zero(2)})
    assert not F
    assert F.max_degree() is None
