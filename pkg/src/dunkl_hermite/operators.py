"""Dunkl operators and the operator calculus built on them.

For a root system R+ with multiplicities kappa, the Dunkl operator along
axis i sends f to

    df/dx_i  +  sum over alpha in R+ of  kappa_alpha * alpha_i * (f - f o r_alpha) / <alpha, x>

where r_alpha is the reflection in the hyperplane orthogonal to alpha.  The
difference f - f o r_alpha vanishes on that hyperplane, so the division is
exact; a remainder aborts loudly.  Everything downstream (Laplacian, Euler
operator, sl2 action, Gaussian conjugation, heat semigroup) is assembled from
these exact pieces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, MathPrecondition
from .groups import Matrix, RootSystem, Vector, reflection_matrix
from .poly import Polynomial, compose_linear, divide_by_linear_form


class DunklContext:
    """A root system together with precomputed reflection matrices.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("root_system", "reflections", "_active")

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self.reflections: tuple[Matrix, ...] = tuple(
            reflection_matrix(alpha) for alpha in root_system.positive_roots)
        # roots with kappa = 0 contribute nothing and are skipped up front
        self._active: tuple[tuple[Vector, Fraction, Matrix], ...] = tuple(
            (alpha, kappa, refl)
            for alpha, kappa, refl in zip(root_system.positive_roots, root_system.multiplicities,
                                          self.reflections)
            if kappa)

    @property
    def m(self) -> int:
        return self.root_system.m

    @property
    def mu(self) -> Fraction:
        return self.root_system.mu

    @property
    def gamma(self) -> Fraction:
        return self.root_system.gamma

    def __repr__(self) -> str:
        return f"DunklContext(m={self.m}, roots={len(self.root_system.positive_roots)}, mu={self.mu})"


def dunkl_derivative(ctx: DunklContext, axis: int, f: Polynomial) -> Polynomial:
    """Apply the Dunkl operator along one axis (0-based)."""
    _check(ctx, f)
    if not 0 <= axis < ctx.m:
        raise DimensionMismatch(f"axis {axis} out of range for dimension {ctx.m}")
    out = f.derivative(axis)
    if not f:
        return out
    for alpha, kappa, refl in ctx._active:
        if not alpha[axis]:
            continue
        difference = f - compose_linear(f, refl)
        if difference:
            out = out + (kappa * alpha[axis]) * divide_by_linear_form(difference, alpha)
    return out


def dunkl_laplacian(ctx: DunklContext, f: Polynomial) -> Polynomial:
    """Sum over axes of the squared Dunkl operator."""
    _check(ctx, f)
    out = Polynomial.zero(ctx.m)
    for i in range(ctx.m):
        out = out + dunkl_derivative(ctx, i, dunkl_derivative(ctx, i, f))
    return out


def euler_operator(f: Polynomial) -> Polynomial:
    """Degree-weighting operator: x^e maps to |e| * x^e."""
    return Polynomial(f.m, {e: c * sum(e) for e, c in f.terms.items() if sum(e)})


def multiply_by_norm_squared(f: Polynomial) -> Polynomial:
    return f * Polynomial.norm_squared(f.m)


def sl2_e(f: Polynomial) -> Polynomial:
    """Raising element: multiplication by |x|^2 / 2."""
    return multiply_by_norm_squared(f) * Fraction(1, 2)


def sl2_f(ctx: DunklContext, f: Polynomial) -> Polynomial:
    """Lowering element: -1/2 times the Dunkl Laplacian."""
    return dunkl_laplacian(ctx, f) * Fraction(-1, 2)


def sl2_h(ctx: DunklContext, f: Polynomial) -> Polynomial:
    """Neutral element: Euler operator plus mu/2."""
    _check(ctx, f)
    return euler_operator(f) + f * (ctx.mu / 2)


def laplace_beltrami(ctx: DunklContext, f: Polynomial) -> Polynomial:
    """|x|^2 Delta - E(mu - 2 + E) with E the Euler operator; degree preserving."""
    _check(ctx, f)
    ef = euler_operator(f)
    return multiply_by_norm_squared(dunkl_laplacian(ctx, f)) - (ctx.mu - 2) * ef - euler_operator(ef)


def conjugated_dunkl(ctx: DunklContext, rate: Fraction, axis: int, f: Polynomial) -> Polynomial:
    """Dunkl operator conjugated by exp(rate * |x|^2): T_i + 2 * rate * x_i."""
    return dunkl_derivative(ctx, axis, f) + (2 * Fraction(rate)) * f.times_variable(axis)


def conjugated_laplacian(ctx: DunklContext, rate: Fraction, f: Polynomial) -> Polynomial:
    """Dunkl Laplacian conjugated by exp(rate * |x|^2): sum of squared conjugated operators."""
    _check(ctx, f)
    rate = Fraction(rate)
    out = Polynomial.zero(ctx.m)
    for i in range(ctx.m):
        out = out + conjugated_dunkl(ctx, rate, i, conjugated_dunkl(ctx, rate, i, f))
    return out


def heat_semigroup(ctx: DunklContext, f: Polynomial, rate: Fraction = Fraction(-1, 4)) -> Polynomial:
    """exp(rate * Delta) f as the finite sum over rate^n Delta^n f / n!.

    The series terminates because each Laplacian application drops the degree
    by two.  rate = -1/4 gives the semigroup used by the Hermite construction;
    rate = +1/4 is its inverse on polynomials.
    """
    _check(ctx, f)
    rate = Fraction(rate)
    out = f
    power = f
    factor = Fraction(1)
    n = 0
    while power:
        n += 1
        power = dunkl_laplacian(ctx, power)
        factor *= rate / n
        if power:
            out = out + factor * power
    return out


@dataclass(frozen=True)
class WeightedFunction:
    """A polynomial times a Gaussian exp(gaussian_rate * |x|^2).

    Operator application happens on the polynomial part through Gaussian
    conjugation, which is exactly the product rule for the Gaussian factor.
    """

    polynomial_part: Polynomial
    gaussian_rate: Fraction

    def dunkl(self, ctx: DunklContext, axis: int) -> "WeightedFunction":
        return WeightedFunction(conjugated_dunkl(ctx, self.gaussian_rate, axis, self.polynomial_part),
                                self.gaussian_rate)

    def laplacian(self, ctx: DunklContext) -> "WeightedFunction":
        return WeightedFunction(conjugated_laplacian(ctx, self.gaussian_rate, self.polynomial_part),
                                self.gaussian_rate)

    def times_norm_squared(self) -> "WeightedFunction":
        return WeightedFunction(multiply_by_norm_squared(self.polynomial_part), self.gaussian_rate)

    def scale(self, c) -> "WeightedFunction":
        return WeightedFunction(self.polynomial_part * Fraction(c), self.gaussian_rate)

    def __sub__(self, other: "WeightedFunction") -> "WeightedFunction":
        if self.gaussian_rate != other.gaussian_rate:
            raise MathPrecondition("cannot combine weighted functions with different Gaussian rates")
        return WeightedFunction(self.polynomial_part - other.polynomial_part, self.gaussian_rate)


def _check(ctx: DunklContext, f: Polynomial) -> None:
    if f.m != ctx.m:
        raise DimensionMismatch(f"dimension mismatch: polynomial in {f.m} variables vs context dimension {ctx.m}")
