"""Clifford-Hermite polynomials by three routes, plus Fischer decomposition.

A Hermite element of index (t, ell) is a radial polynomial of degree t in
|x|^2 times a Dunkl-harmonic polynomial of degree ell.  Three independent
constructions are implemented and cross-checked:

  recursion: t-fold application of the scalar square of the raising operator,
  rodrigues: Gaussian conjugation of the t-th Laplacian power,
  laguerre:  closed-form radial profile from a generalized Laguerre polynomial.

The same module carries the Fischer decomposition of homogeneous polynomials
into harmonic layers, the heat-semigroup Hermite family, and the exact
verdict-producing checks that tie all of these together.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence, Union

from .errors import MathPrecondition
from .linalg import materialize_on_degree, matrix_rank, rational_nullspace, solve_in_frame
from .operators import (DunklContext, WeightedFunction, conjugated_laplacian, dunkl_laplacian,
                        euler_operator, heat_semigroup, laplace_beltrami, multiply_by_norm_squared)
from .poly import (Polynomial, deglex_key, dim_homogeneous, monomial_basis, rational_str,
                   parse_rational)


def mu_is_degenerate(mu: Fraction) -> bool:
    """True when mu lies in {0, -2, -4, ...}, where Fischer theory fails."""
    mu = Fraction(mu)
    return mu.denominator == 1 and mu <= 0 and mu.numerator % 2 == 0


def _require_mu(ctx: DunklContext, what: str) -> None:
    if mu_is_degenerate(ctx.mu):
        raise MathPrecondition(f"{what} requires mu not in -2N; got mu = {ctx.mu}")


@dataclass(frozen=True)
class HarmonicBasis:
    """Canonical basis of the Dunkl-harmonic polynomials of one degree."""

    degree: int
    elements: tuple[Polynomial, ...]


@lru_cache(maxsize=None)
def _harmonic_basis_cached(ctx: DunklContext, degree: int) -> HarmonicBasis:
    matrix = materialize_on_degree(lambda p: dunkl_laplacian(ctx, p), ctx.m, degree,
                                   codomain_degree=degree - 2)
    vectors = rational_nullspace(matrix)
    basis = monomial_basis(ctx.m, degree)
    elements = tuple(Polynomial(ctx.m, {e: Fraction(v) for e, v in zip(basis, vec) if v})
                     for vec in vectors)
    return HarmonicBasis(degree=degree, elements=elements)


def harmonic_basis(ctx: DunklContext, degree: int) -> HarmonicBasis:
    """Kernel of the Dunkl Laplacian on the homogeneous component of one degree."""
    if degree < 0:
        raise MathPrecondition(f"degree must be >= 0, got {degree}")
    return _harmonic_basis_cached(ctx, degree)


def harmonic_dimension_classical(m: int, degree: int) -> int:
    """dim of degree-d harmonics expected from the Fischer count."""
    return dim_homogeneous(m, degree) - dim_homogeneous(m, degree - 2)


# -- Fischer decomposition -------------------------------------------------

def fischer_frame(ctx: DunklContext, degree: int) -> list[tuple[int, int, Polynomial]]:
    """Basis (i, harmonic index, |x|^{2i} h) of the degree-k component."""
    frame = []
    norm2 = Polynomial.norm_squared(ctx.m)
    for i in range(degree // 2 + 1):
        radial = norm2 ** i
        hb = harmonic_basis(ctx, degree - 2 * i)
        for j, h in enumerate(hb.elements):
            frame.append((i, j, radial * h))
    return frame


def fischer_decompose(ctx: DunklContext, p: Polynomial) -> list[tuple[int, Polynomial]]:
    """Split homogeneous p into its |x|^{2i} x harmonic layers (nonzero ones only)."""
    _require_mu(ctx, "Fischer decomposition")
    if not p:
        return []
    degree = p.homogeneous_degree()
    frame = fischer_frame(ctx, degree)
    coords = solve_in_frame([q for _, _, q in frame], p)
    layers: dict[int, Polynomial] = {}
    for (i, _, q), c in zip(frame, coords):
        if c:
            layers[i] = layers.get(i, Polynomial.zero(ctx.m)) + c * q
    return [(i, layers[i]) for i in sorted(layers) if layers[i]]


def fischer_project(ctx: DunklContext, i: int, degree: int, p: Polynomial) -> Polynomial:
    """Projection onto the |x|^{2i} harmonic layer via the spherical operator.

    Built as the product over l != i of
        (L + (k-2l)(mu-2+k-2l)) / (2(i-l)(2k-2i-2l+mu-2))
    where L = |x|^2 Delta - E(mu-2+E); every denominator is checked.
    """
    _require_mu(ctx, "Fischer projection")
    if p and p.homogeneous_degree() != degree:
        raise MathPrecondition(
            f"polynomial of degree {p.homogeneous_degree()} fed to projection on degree {degree}")
    if not 0 <= i <= degree // 2:
        raise MathPrecondition(f"layer index {i} out of range for degree {degree}")
    mu = ctx.mu
    out = p
    for l in range(degree // 2 + 1):
        if l == i:
            continue
        denominator = 2 * (i - l) * (2 * degree - 2 * i - 2 * l + mu - 2)
        if denominator == 0:
            raise MathPrecondition(
                f"projection denominator vanishes at (i={i}, l={l}, mu={mu})")
        shift = (degree - 2 * l) * (mu - 2 + degree - 2 * l)
        out = (laplace_beltrami(ctx, out) + shift * out) * (1 / Fraction(denominator))
    return out


# -- Hermite records and the three constructions ----------------------------

@dataclass(frozen=True)
class HermiteRecord:
    """One Hermite element: radial profile coefficients and the full polynomial.

    radial_coeffs[i] multiplies |x|^{2i} * harmonic; index 0 first; the top
    coefficient always equals (-4)^t.
    """

    t: int
    ell: int
    mu: Fraction
    harmonic: Polynomial
    radial_coeffs: tuple[Fraction, ...]
    polynomial: Polynomial

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "ell": self.ell,
            "mu": rational_str(self.mu),
            "radial_coeffs": [rational_str(c) for c in self.radial_coeffs],
            "harmonic": self.harmonic.to_json(),
            "polynomial": self.polynomial.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "HermiteRecord":
        return cls(
            t=int(data["t"]),
            ell=int(data["ell"]),
            mu=parse_rational(data["mu"]),
            harmonic=Polynomial.from_json(data["harmonic"]),
            radial_coeffs=tuple(parse_rational(c) for c in data["radial_coeffs"]),
            polynomial=Polynomial.from_json(data["polynomial"]),
        )


def _validated_harmonic(ctx: DunklContext, harmonic: Polynomial) -> int:
    if not harmonic:
        raise MathPrecondition("harmonic factor must be nonzero")
    if not harmonic.is_homogeneous():
        raise MathPrecondition("harmonic factor must be homogeneous")
    if dunkl_laplacian(ctx, harmonic):
        raise MathPrecondition("polynomial is not Dunkl-harmonic: its Laplacian is nonzero")
    return harmonic.homogeneous_degree()


def _record_from_polynomial(ctx: DunklContext, t: int, ell: int, harmonic: Polynomial,
                            result: Polynomial) -> HermiteRecord:
    norm2 = Polynomial.norm_squared(ctx.m)
    frame = [(norm2 ** i) * harmonic for i in range(t + 1)]
    coords = solve_in_frame(frame, result)
    return HermiteRecord(t=t, ell=ell, mu=ctx.mu, harmonic=harmonic,
                         radial_coeffs=tuple(coords), polynomial=result)


def ch_recursion(ctx: DunklContext, t: int, harmonic: Polynomial) -> HermiteRecord:
    """t-fold application of the scalar operator -Delta - 4|x|^2 + 2(2E + mu)."""
    if t < 0:
        raise MathPrecondition(f"index t must be >= 0, got {t}")
    ell = _validated_harmonic(ctx, harmonic)
    out = harmonic
    for _ in range(t):
        out = (-dunkl_laplacian(ctx, out) - 4 * multiply_by_norm_squared(out)
               + 4 * euler_operator(out) + (2 * ctx.mu) * out)
    return _record_from_polynomial(ctx, t, ell, harmonic, out)


def ch_rodrigues(ctx: DunklContext, t: int, harmonic: Polynomial) -> HermiteRecord:
    """t-fold application of the Gaussian-conjugated negated Laplacian.

    exp(|x|^2) (-Delta)^t exp(-|x|^2) acts on polynomials as the t-th power of
    the negated Laplacian conjugated at rate -1; no symbolic exponentials.
    """
    if t < 0:
        raise MathPrecondition(f"index t must be >= 0, got {t}")
    ell = _validated_harmonic(ctx, harmonic)
    out = harmonic
    for _ in range(t):
        out = -conjugated_laplacian(ctx, Fraction(-1), out)
    return _record_from_polynomial(ctx, t, ell, harmonic, out)


def laguerre_poly(t: int, a: Fraction) -> tuple[Fraction, ...]:
    """Coefficients (constant first) of the generalized Laguerre polynomial L_t^a.

    Gamma-function ratios are evaluated as exact rising products; parameters a
    in {-1, ..., -t} collapse those products and are refused.
    """
    if t < 0:
        raise MathPrecondition(f"index t must be >= 0, got {t}")
    a = Fraction(a)
    if a.denominator == 1 and -t <= a <= -1:
        raise MathPrecondition(f"Laguerre parameter pole: a = {a} lies in {{-1, ..., -{t}}}")
    coeffs = []
    for i in range(t + 1):
        rising = Fraction(1)
        for j in range(i + 1, t + 1):
            rising *= a + j
        sign = -1 if i & 1 else 1
        coeffs.append(sign * rising / (factorial(i) * factorial(t - i)))
    return tuple(coeffs)


def ch_laguerre(ctx: DunklContext, t: int, ell: int, harmonic: Polynomial) -> HermiteRecord:
    """Closed-form radial profile 2^{2t} t! L_t^{mu/2 + ell - 1}(|x|^2) times the harmonic."""
    if t < 0:
        raise MathPrecondition(f"index t must be >= 0, got {t}")
    actual = _validated_harmonic(ctx, harmonic)
    if actual != ell:
        raise MathPrecondition(f"harmonic has degree {actual}, expected ell = {ell}")
    a = ctx.mu / 2 + ell - 1
    lag = laguerre_poly(t, a)
    scale = Fraction(4) ** t * factorial(t)
    radial = tuple(scale * c for c in lag)
    norm2 = Polynomial.norm_squared(ctx.m)
    out = Polynomial.zero(ctx.m)
    for i, c in enumerate(radial):
        if c:
            out = out + c * ((norm2 ** i) * harmonic)
    return HermiteRecord(t=t, ell=ell, mu=ctx.mu, harmonic=harmonic,
                         radial_coeffs=radial, polynomial=out)


@dataclass(frozen=True)
class RecursionCheck:
    """Exact verdict for the two radial-coefficient recurrences."""

    ok: bool
    step_failures: tuple[tuple[int, Fraction], ...]   # (i, residual) linking t-1 to t
    internal_failures: tuple[tuple[int, Fraction], ...]  # (i, residual) within one record


def coefficient_recursions_check(previous: HermiteRecord, current: HermiteRecord) -> RecursionCheck:
    """Check the step recurrence against the previous record and the internal
    two-term recurrence of the current record; residuals are exact rationals."""
    if current.t != previous.t + 1:
        raise MathPrecondition(f"records are not consecutive: t = {previous.t} then {current.t}")
    if current.ell != previous.ell or current.mu != previous.mu:
        raise MathPrecondition("records belong to different (ell, mu) families")
    ell, mu, t = current.ell, current.mu, current.t

    def coeff(record: HermiteRecord, i: int) -> Fraction:
        if 0 <= i < len(record.radial_coeffs):
            return record.radial_coeffs[i]
        return Fraction(0)

    step = []
    for i in range(t + 1):
        expected = (-(2 * i + 2) * (2 * ell + mu + 2 * i) * coeff(previous, i + 1)
                    + 2 * (2 * ell + 4 * i + mu) * coeff(previous, i)
                    - 4 * coeff(previous, i - 1))
        residual = coeff(current, i) - expected
        if residual:
            step.append((i, residual))
    internal = []
    for i in range(t + 1):
        lhs = -2 * (2 * t - 2 * i) * coeff(current, i)
        rhs = (2 * i + 2) * (2 * ell + mu + 2 * i) * coeff(current, i + 1)
        residual = lhs - rhs
        if residual:
            internal.append((i, residual))
    return RecursionCheck(ok=not step and not internal,
                          step_failures=tuple(step), internal_failures=tuple(internal))


# -- heat-semigroup Hermite family ------------------------------------------

def rosler_hermite(ctx: DunklContext, p: Polynomial) -> Polynomial:
    """2^n exp(-Delta/4) p for homogeneous p of degree n."""
    if not p:
        raise MathPrecondition("input must be a nonzero homogeneous polynomial")
    n = p.homogeneous_degree()
    return (Fraction(2) ** n) * heat_semigroup(ctx, p)


@dataclass(frozen=True)
class EigenspaceReport:
    """Verdict of the eigenvalue and span checks for one total degree."""

    degree: int
    cases: int
    failures: tuple[dict, ...]
    heat_family_rank: int
    hermite_family_rank: int
    combined_rank: int
    expected_rank: int

    @property
    def ok(self) -> bool:
        return (not self.failures
                and self.heat_family_rank == self.expected_rank
                and self.hermite_family_rank == self.expected_rank
                and self.combined_rank == self.expected_rank)


def _coefficient_rows(polys: Sequence[Polynomial]) -> list[list[Fraction]]:
    support = set()
    for p in polys:
        support.update(p.terms)
    order = sorted(support, key=deglex_key, reverse=True)
    return [[p.coefficient(e) for e in order] for p in polys]


def eigenspace_checks(ctx: DunklContext, degree: int) -> EigenspaceReport:
    """(Delta - 2E) q = -2n q for both Hermite families of total degree n,
    plus the rank comparison showing the two families span the same dimension."""
    _require_mu(ctx, "eigenspace comparison")
    heat_family = [rosler_hermite(ctx, Polynomial.monomial(ctx.m, e))
                   for e in monomial_basis(ctx.m, degree)]
    hermite_family = []
    failures = []
    cases = 0
    for t in range(degree // 2 + 1):
        ell = degree - 2 * t
        for h in harmonic_basis(ctx, ell).elements:
            hermite_family.append(ch_recursion(ctx, t, h).polynomial)
    for label, family in (("heat", heat_family), ("hermite", hermite_family)):
        for q in family:
            cases += 1
            residual = dunkl_laplacian(ctx, q) - 2 * euler_operator(q) + (2 * degree) * q
            if residual:
                failures.append({"family": label, "input": q.to_json(), "residual": residual.to_json()})
    expected = dim_homogeneous(ctx.m, degree)
    heat_rank = matrix_rank(_coefficient_rows(heat_family)) if heat_family else 0
    herm_rank = matrix_rank(_coefficient_rows(hermite_family)) if hermite_family else 0
    combined = matrix_rank(_coefficient_rows(heat_family + hermite_family)) if heat_family else 0
    return EigenspaceReport(degree=degree, cases=cases, failures=tuple(failures),
                            heat_family_rank=heat_rank, hermite_family_rank=herm_rank,
                            combined_rank=combined, expected_rank=expected)


def proportionality_constant(ctx: DunklContext, i: int, n: int, harmonic: Polynomial) -> Fraction:
    """Exact constant c with 2^n exp(-Delta/4)(|x|^{2i} H) = c * (radial Hermite profile) * H.

    Computed by coefficient comparison; failure to be exactly proportional is
    a hard error.  The constant depends only on (i, n, mu), never on which
    basis harmonic is supplied.
    """
    ell = _validated_harmonic(ctx, harmonic)
    if ell != n - 2 * i:
        raise MathPrecondition(f"harmonic degree {ell} does not match n - 2i = {n - 2 * i}")
    norm2 = Polynomial.norm_squared(ctx.m)
    heat_image = rosler_hermite(ctx, (norm2 ** i) * harmonic)
    hermite = ch_recursion(ctx, i, harmonic).polynomial
    lead_exp, lead_coeff = hermite.leading_term()
    c = heat_image.coefficient(lead_exp) / lead_coeff
    if heat_image - c * hermite:
        raise MathPrecondition(
            f"heat image of |x|^{{{2 * i}}} * harmonic is not proportional to the Hermite element "
            f"(i={i}, n={n})")
    return c


@dataclass(frozen=True)
class WeightedCheck:
    """Verdict of the Gaussian-weighted eigenfunction equation for one input."""

    ok: bool
    degree: int
    eigenvalue: Fraction
    residual: Polynomial


def weighted_eigenfunction_check(ctx: DunklContext, q: Polynomial) -> WeightedCheck:
    """Check (Delta - |x|^2) (q exp(-|x|^2/2)) = -(2n + mu) q exp(-|x|^2/2).

    The input must already satisfy the unweighted eigenvalue equation at its
    top degree n; this is verified first.
    """
    if not q:
        raise MathPrecondition("input must be nonzero")
    n = q.total_degree()
    precondition = dunkl_laplacian(ctx, q) - 2 * euler_operator(q) + (2 * n) * q
    if precondition:
        raise MathPrecondition(
            f"input does not satisfy the degree-{n} eigenvalue equation; "
            f"residual {precondition}")
    weighted = WeightedFunction(q, Fraction(-1, 2))
    lhs = weighted.laplacian(ctx) - weighted.times_norm_squared()
    eigenvalue = -(2 * n + ctx.mu)
    residual = lhs.polynomial_part - eigenvalue * q
    return WeightedCheck(ok=not residual, degree=n, eigenvalue=eigenvalue, residual=residual)
