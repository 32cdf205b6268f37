"""Clifford algebra layer with polynomial coefficients.

Basis blades of Cl(0, m) are bitmasks: bit i set means the generator e_{i+1}
is present, generators multiply with e_i e_j = -e_j e_i (i != j) and
e_i^2 = -1.  A CliffordPolynomial maps blade masks to scalar polynomials;
the Dunkl-Dirac operator, vector variable multiplication, and their
combination D+ = -D + 2x act on these.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Union

from .errors import DimensionMismatch, MathPrecondition
from .linalg import kernel_vectors
from .operators import DunklContext, dunkl_derivative, dunkl_laplacian, euler_operator
from .poly import Polynomial, monomial_basis

ScalarLike = Union[int, Fraction]


def blade_product(mask_a: int, mask_b: int) -> tuple[int, int]:
    """Sign and mask of the product of two basis blades (ascending index order)."""
    swaps = 0
    b = mask_b
    while b:
        low = b & -b
        j = low.bit_length() - 1
        swaps += (mask_a >> (j + 1)).bit_count()
        b ^= low
    sign = -1 if swaps & 1 else 1
    if (mask_a & mask_b).bit_count() & 1:
        sign = -sign
    return sign, mask_a ^ mask_b


class CliffordPolynomial:
    """Polynomial-coefficient element of Cl(0, m); blade masks to polynomials."""

    __slots__ = ("m", "_blades")

    def __init__(self, m: int, blades: Mapping[int, Polynomial] = ()):
        if m < 1:
            raise DimensionMismatch(f"dimension must be >= 1, got {m}")
        items = blades.items() if isinstance(blades, Mapping) else blades
        clean: dict[int, Polynomial] = {}
        for mask, poly in items:
            mask = int(mask)
            if not 0 <= mask < (1 << m):
                raise DimensionMismatch(f"blade mask {mask} out of range for dimension {m}")
            if poly.m != m:
                raise DimensionMismatch(f"dimension mismatch: {poly.m} vs {m}")
            if poly:
                acc = clean.get(mask)
                merged = poly if acc is None else acc + poly
                if merged:
                    clean[mask] = merged
                else:
                    clean.pop(mask, None)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "_blades", clean)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> "CliffordPolynomial":
        return cls(m)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "CliffordPolynomial":
        return cls(p.m, {0: p})

    @classmethod
    def unit_blade(cls, m: int, mask: int) -> "CliffordPolynomial":
        return cls(m, {mask: Polynomial.constant(m, 1)})

    @classmethod
    def vector_variable(cls, m: int) -> "CliffordPolynomial":
        """The element x = sum_i e_i x_i."""
        return cls(m, {1 << i: Polynomial.variable(m, i) for i in range(m)})

    # -- inspection --------------------------------------------------------

    @property
    def blades(self) -> Mapping[int, Polynomial]:
        """Blade map; callers must not mutate it."""
        return self._blades

    def blade(self, mask: int) -> Polynomial:
        return self._blades.get(mask, Polynomial.zero(self.m))

    def __bool__(self) -> bool:
        return bool(self._blades)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.m == other.m and self._blades == other._blades

    def max_degree(self) -> Union[int, None]:
        degrees = [p.total_degree() for p in self._blades.values()]
        return max(degrees) if degrees else None

    # -- algebra -----------------------------------------------------------

    def _require_same_dim(self, other: "CliffordPolynomial") -> None:
        if self.m != other.m:
            raise DimensionMismatch(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "CliffordPolynomial") -> "CliffordPolynomial":
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        self._require_same_dim(other)
        blades = dict(self._blades)
        for mask, poly in other._blades.items():
            acc = blades.get(mask)
            merged = poly if acc is None else acc + poly
            if merged:
                blades[mask] = merged
            else:
                blades.pop(mask, None)
        return CliffordPolynomial(self.m, blades)

    def __sub__(self, other: "CliffordPolynomial") -> "CliffordPolynomial":
        return self + (-other)

    def __neg__(self) -> "CliffordPolynomial":
        return CliffordPolynomial(self.m, {mask: -p for mask, p in self._blades.items()})

    def __mul__(self, other: Union["CliffordPolynomial", Polynomial, ScalarLike]) -> "CliffordPolynomial":
        if isinstance(other, CliffordPolynomial):
            self._require_same_dim(other)
            blades: dict[int, Polynomial] = {}
            for ma, pa in self._blades.items():
                for mb, pb in other._blades.items():
                    sign, mask = blade_product(ma, mb)
                    piece = pa * pb if sign > 0 else -(pa * pb)
                    acc = blades.get(mask)
                    merged = piece if acc is None else acc + piece
                    if merged:
                        blades[mask] = merged
                    else:
                        blades.pop(mask, None)
            return CliffordPolynomial(self.m, blades)
        if isinstance(other, Polynomial):
            # scalar polynomials commute with every blade
            return CliffordPolynomial(self.m, {mask: p * other for mask, p in self._blades.items()})
        if isinstance(other, (int, Fraction)):
            return CliffordPolynomial(self.m, {mask: p * Fraction(other) for mask, p in self._blades.items()})
        return NotImplemented

    def __rmul__(self, other: Union[Polynomial, ScalarLike]) -> "CliffordPolynomial":
        if isinstance(other, (int, Fraction, Polynomial)):
            return self * other
        return NotImplemented

    def apply_scalar_operator(self, op: Callable[[Polynomial], Polynomial]) -> "CliffordPolynomial":
        """Apply a scalar operator blade-wise (scalar operators commute with blades)."""
        return CliffordPolynomial(self.m, {mask: op(p) for mask, p in self._blades.items()})

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "blades": [{"mask": mask, "poly": self._blades[mask].to_json()}
                       for mask in sorted(self._blades)],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CliffordPolynomial":
        m = int(data["m"])
        return cls(m, {int(entry["mask"]): Polynomial.from_json(entry["poly"])
                       for entry in data.get("blades", ())})

    def __str__(self) -> str:
        if not self._blades:
            return "0"
        parts = []
        for mask in sorted(self._blades):
            label = "".join(f"e{i + 1}" for i in range(self.m) if mask >> i & 1) or "1"
            parts.append(f"({self._blades[mask]})*{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CliffordPolynomial(m={self.m}, {self!s})"


def dunkl_dirac(ctx: DunklContext, F: CliffordPolynomial) -> CliffordPolynomial:
    """D F = sum_i e_i (T_i F), Dunkl operators acting blade-wise."""
    _check(ctx, F)
    out = CliffordPolynomial.zero(F.m)
    for i in range(ctx.m):
        partial = F.apply_scalar_operator(lambda p, axis=i: dunkl_derivative(ctx, axis, p))
        out = out + CliffordPolynomial.unit_blade(F.m, 1 << i) * partial
    return out


def vector_multiply(F: CliffordPolynomial) -> CliffordPolynomial:
    """Left multiplication by the vector variable x."""
    return CliffordPolynomial.vector_variable(F.m) * F


def d_plus(ctx: DunklContext, F: CliffordPolynomial) -> CliffordPolynomial:
    """The raising operator -D + 2x; its square is scalar."""
    _check(ctx, F)
    return -dunkl_dirac(ctx, F) + 2 * vector_multiply(F)


def d_plus_squared_scalar(ctx: DunklContext, F: CliffordPolynomial) -> CliffordPolynomial:
    """(-Delta - 4|x|^2 + 2(2E + mu)) F, the scalar form of (D+)^2."""
    _check(ctx, F)
    norm2 = Polynomial.norm_squared(ctx.m)

    def scalar_part(p: Polynomial) -> Polynomial:
        return (-dunkl_laplacian(ctx, p) - 4 * (p * norm2)
                + 4 * euler_operator(p) + (2 * ctx.mu) * p)

    return F.apply_scalar_operator(scalar_part)


def monogenic_basis(ctx: DunklContext, degree: int) -> list[CliffordPolynomial]:
    """Canonical basis of the kernel of the Dirac operator on homogeneous
    Clifford polynomials of the given degree.

    Columns are ordered blade-mask-major, monomials deg-lex largest first
    within each blade; kernel vectors get the shared canonicalization.
    """
    if degree < 0:
        raise MathPrecondition(f"degree must be >= 0, got {degree}")
    m = ctx.m
    dom_basis = monomial_basis(m, degree)
    cod_basis = monomial_basis(m, degree - 1)
    columns = [(mask, e) for mask in range(1 << m) for e in dom_basis]
    row_index = {(mask, e): idx for idx, (mask, e) in enumerate(
        ((mask, e) for mask in range(1 << m) for e in cod_basis))}
    rows = [[Fraction(0)] * len(columns) for _ in row_index]
    for col, (mask, e) in enumerate(columns):
        image = dunkl_dirac(ctx, CliffordPolynomial(m, {mask: Polynomial.monomial(m, e)}))
        for bmask, poly in image.blades.items():
            for ee, c in poly.terms.items():
                rows[row_index[(bmask, ee)]][col] = c
    vectors = kernel_vectors(rows, len(columns))
    out = []
    for vec in vectors:
        blades: dict[int, dict] = {}
        for val, (mask, e) in zip(vec, columns):
            if val:
                blades.setdefault(mask, {})[e] = Fraction(val)
        out.append(CliffordPolynomial(m, {mask: Polynomial(m, terms) for mask, terms in blades.items()}))
    return out


def _check(ctx: DunklContext, F: CliffordPolynomial) -> None:
    if F.m != ctx.m:
        raise DimensionMismatch(f"dimension mismatch: element in {F.m} variables vs context dimension {ctx.m}")
