"""Exact rational linear algebra for graded operator matrices.

Matrices are dense lists of Fraction rows; columns of an operator matrix are
indexed by the deg-lex (largest first) monomial basis of the domain degree,
rows by that of the codomain degree.  Kernels come back canonicalized: free
variables taken in column order, denominators cleared, content 1, leading
nonzero coefficient positive.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from .errors import DimensionMismatch, MathPrecondition
from .poly import Polynomial, deglex_key, dim_homogeneous, monomial_basis

Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class OperatorMatrix:
    """Matrix of a graded linear operator between homogeneous components."""

    m: int
    domain_degree: int
    codomain_degree: int
    entries: tuple[Row, ...]

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return dim_homogeneous(self.m, self.domain_degree)

    def apply_vector(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"dimension mismatch: vector of length {len(vec)} vs {self.ncols} columns")
        return tuple(sum((r[j] * vec[j] for j in range(len(vec))), Fraction(0)) for r in self.entries)

    def apply_poly(self, p: Polynomial) -> Polynomial:
        """Apply via matrix-vector product; p must be homogeneous of the domain degree."""
        if not p:
            return Polynomial.zero(self.m)
        if p.homogeneous_degree() != self.domain_degree:
            raise MathPrecondition(
                f"polynomial of degree {p.homogeneous_degree()} fed to matrix on degree {self.domain_degree}")
        basis = monomial_basis(self.m, self.domain_degree)
        vec = [p.coefficient(e) for e in basis]
        image = self.apply_vector(vec)
        cod = monomial_basis(self.m, self.codomain_degree)
        return Polynomial(self.m, {e: c for e, c in zip(cod, image) if c})


def materialize_on_degree(op: Callable[[Polynomial], Polynomial], m: int, degree: int,
                          codomain_degree: int | None = None) -> OperatorMatrix:
    """Apply op to every basis monomial of the given degree and assemble the matrix.

    The operator must send the whole component into one homogeneous degree;
    the offending monomial is named otherwise.
    """
    basis = monomial_basis(m, degree)
    images = []
    inferred = codomain_degree
    for e in basis:
        image = op(Polynomial.monomial(m, e))
        if image and not image.is_homogeneous():
            raise MathPrecondition(f"operator is not graded: image of x^{list(e)} mixes degrees")
        if image:
            d = image.homogeneous_degree()
            if inferred is None:
                inferred = d
            elif d != inferred:
                raise MathPrecondition(
                    f"operator is not degree-homogeneous: image of x^{list(e)} has degree {d}, expected {inferred}")
        images.append(image)
    if inferred is None or inferred < 0:
        return OperatorMatrix(m, degree, -1 if inferred is None else inferred, ())
    cod = monomial_basis(m, inferred)
    rows = tuple(tuple(img.coefficient(e) for img in images) for e in cod)
    return OperatorMatrix(m, degree, inferred, rows)


def reduced_row_echelon(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Unique RREF over the rationals; returns (rows, pivot column indices)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(reduced_row_echelon(rows)[1])


def _canonical_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators, reduce to content 1, make the leading entry positive."""
    den = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * den) for x in vec]
    content = 0
    for x in ints:
        content = gcd(content, abs(x))
    if content > 1:
        ints = [x // content for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def kernel_vectors(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[int, ...]]:
    """Canonical basis of the kernel of the matrix with the given column count."""
    if ncols == 0:
        return []
    if not rows:
        rref: list[list[Fraction]] = []
        pivots: list[int] = []
    else:
        rref, pivots = reduced_row_echelon(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -rref[r][f]
        basis.append(_canonical_integer(vec))
    return basis


def rational_nullspace(matrix: OperatorMatrix) -> list[tuple[int, ...]]:
    """Canonical exact kernel basis of an operator matrix."""
    return kernel_vectors(matrix.entries, matrix.ncols)


def solve_in_frame(frame: Sequence[Polynomial], target: Polynomial) -> list[Fraction]:
    """Exact coordinates of target in a linearly independent polynomial frame.

    Raises if the frame is dependent or the target lies outside its span.
    """
    if not frame:
        raise ValueError("empty frame")
    m = frame[0].m
    if target.m != m:
        raise DimensionMismatch(f"dimension mismatch: {target.m} vs {m}")
    support = set(target.terms)
    for q in frame:
        support.update(q.terms)
    order = sorted(support, key=deglex_key, reverse=True)
    rows = [[q.coefficient(e) for q in frame] + [target.coefficient(e)] for e in order]
    rref, pivots = reduced_row_echelon(rows)
    n = len(frame)
    if n in pivots:
        raise MathPrecondition("target polynomial is not in the span of the frame")
    if pivots != list(range(n)):
        raise MathPrecondition("frame polynomials are linearly dependent")
    solution = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        solution[p] = rref[r][n]
    return solution
