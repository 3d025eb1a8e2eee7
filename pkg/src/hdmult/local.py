"""Local Dirichlet integrals via linear factorization.

For a point zeta in the closed unit disk, a polynomial f splits uniquely
as ``f(z) = a + (z - zeta) g(z)``.  The local Dirichlet integral of f at
zeta equals the squared Hardy-space norm of g, i.e. the sum of squared
moduli of g's coefficients.  Integrals against a finite atomic measure
are mass-weighted sums of local integrals.

The quotient g is computed by top-down synthetic division (highest
coefficient first), which is exact for polynomials at every |zeta| <= 1.
The bottom-up recurrence ``b_k = (b_{k-1} - a_k)/zeta`` is never used:
it is unstable on the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import CoefficientSeries, Scalar, _is_finite, abs2, hadamard

BOUNDARY_TOL = 1e-12

#: interior points with modulus above this are flagged as numerically delicate
NEAR_BOUNDARY_TOL = 1e-9


@dataclass(frozen=True)
class LocalPoint:
    """A point of the closed unit disk, classified as interior or boundary.

    A point is ``boundary`` when its modulus is within 1e-12 of 1 (the
    kernel dichotomy for weights is exact in the mathematics; numerics
    need a rule).  Moduli up to 1 + 1e-12 are accepted to absorb
    rounding in inputs like exp(i*theta).
    """

    zeta: Scalar

    def __post_init__(self):
        if not _is_finite(self.zeta):
            raise ValueError("point must be finite")
        if abs(self.zeta) > 1 + BOUNDARY_TOL:
            raise ValueError(f"point {self.zeta!r} lies outside the closed unit disk")

    @classmethod
    def of(cls, value) -> "LocalPoint":
        return value if isinstance(value, LocalPoint) else cls(value)

    @property
    def is_boundary(self) -> bool:
        return abs(abs(self.zeta) - 1) <= BOUNDARY_TOL

    @property
    def region(self) -> str:
        return "boundary" if self.is_boundary else "interior"

    @property
    def near_boundary(self) -> bool:
        """Interior but within 1e-9 of the circle; kept as metadata only."""
        return not self.is_boundary and abs(self.zeta) > 1 - NEAR_BOUNDARY_TOL

    def as_complex(self) -> complex:
        return complex(self.zeta)


@dataclass(frozen=True)
class LocalFactorization:
    """The split ``f(z) = a + (z - zeta) g(z)``."""

    a: Scalar
    g: CoefficientSeries
    point: LocalPoint

    @property
    def zeta(self) -> Scalar:
        return self.point.zeta

    def reconstruct(self) -> CoefficientSeries:
        """Multiply the factorization back out."""
        b = self.g.coeffs
        z = self.point.zeta
        if not b:
            return CoefficientSeries((self.a,))
        coeffs = [self.a - z * b[0]]
        for k in range(1, len(b)):
            coeffs.append(b[k - 1] - z * b[k])
        coeffs.append(b[-1])
        return CoefficientSeries(coeffs)

    def h2_norm_squared(self):
        return self.g.h2_norm_squared()


def _divide_by_linear(coeffs: tuple, zeta):
    """Quotient and remainder of division by (z - zeta), highest term first.

    The remainder equals the value of the polynomial at zeta.
    """
    n = len(coeffs) - 1
    while n >= 0 and coeffs[n] == 0:
        n -= 1
    if n < 0:
        return (), 0
    q = [0] * n
    acc = coeffs[n]
    for k in range(n, 0, -1):
        q[k - 1] = acc
        acc = coeffs[k - 1] + zeta * acc
    return tuple(q), acc


def factorize_local(f: CoefficientSeries, zeta) -> LocalFactorization:
    """Split f as ``a + (z - zeta) g`` with g a polynomial.

    For interior points a equals f(zeta); on the boundary the same
    number arises as ``a_0 + zeta b_0`` from the division.  Both are the
    division remainder, so a single exact routine serves both regions.
    """
    point = LocalPoint.of(zeta)
    for c in f.coeffs:
        if not _is_finite(c):
            raise ValueError("series coefficients must be finite")
    q, rem = _divide_by_linear(f.coeffs, point.zeta)
    return LocalFactorization(a=rem, g=CoefficientSeries(q), point=point)


def local_dirichlet_integral(f: CoefficientSeries, zeta):
    """The local Dirichlet integral of f at zeta: ||g||^2 in the Hardy space.

    Exact (int/Fraction) whenever f's coefficients and zeta are exact.
    """
    return factorize_local(f, zeta).h2_norm_squared()


@dataclass(frozen=True)
class AtomicWeightMeasure:
    """Finitely many point masses on the closed unit disk.

    Represents a superharmonic weight via its Riesz measure restricted
    to finitely many atoms; interior atoms contribute a logarithmic
    kernel and boundary atoms a Poisson kernel (see the quadrature
    module for pointwise evaluation).
    """

    atoms: tuple

    def __post_init__(self):
        norm = []
        for point, mass in self.atoms:
            point = LocalPoint.of(point)
            if not mass > 0:
                raise ValueError("atom masses must be positive")
            norm.append((point, mass))
        if not norm:
            raise ValueError("measure needs at least one atom")
        object.__setattr__(self, "atoms", tuple(norm))

    @classmethod
    def point_mass(cls, zeta, mass=1) -> "AtomicWeightMeasure":
        return cls(((LocalPoint.of(zeta), mass),))

    @classmethod
    def from_pairs(cls, pairs) -> "AtomicWeightMeasure":
        return cls(tuple((LocalPoint.of(z), m) for z, m in pairs))

    @classmethod
    def from_json(cls, data) -> "AtomicWeightMeasure":
        pairs = []
        for item in data:
            z = item["zeta"]
            if isinstance(z, (list, tuple)):
                z = complex(float(z[0]), float(z[1]))
            else:
                z = float(z)
            pairs.append((z, float(item["mass"])))
        return cls.from_pairs(pairs)

    def to_json(self) -> list:
        return [
            {"zeta": [p.as_complex().real, p.as_complex().imag], "mass": float(m)}
            for p, m in self.atoms
        ]

    @property
    def total_mass(self):
        total = 0
        for _, m in self.atoms:
            total = total + m
        return total

    @property
    def has_boundary_atoms(self) -> bool:
        return any(p.is_boundary for p, _ in self.atoms)

    def interior_atoms(self):
        return [(p, m) for p, m in self.atoms if not p.is_boundary]

    def boundary_atoms(self):
        return [(p, m) for p, m in self.atoms if p.is_boundary]


def weighted_dirichlet_integral(f: CoefficientSeries, mu: AtomicWeightMeasure):
    """Mass-weighted sum of local Dirichlet integrals over the atoms of mu."""
    total = 0
    for point, mass in mu.atoms:
        total = total + mass * local_dirichlet_integral(f, point)
    return total


def hadamard_factorization(h: CoefficientSeries, f: CoefficientSeries, zeta) -> LocalFactorization:
    """Factorize the Hadamard product h*f at zeta from the factors' data.

    Writing f = a + (z - zeta) g with g's coefficients b_k and h's
    coefficients c_k, the product satisfies h*f = A + (z - zeta) F where

        F_j = c_{j+1} b_j + sum_{k>j} (c_{k+1} - c_k) b_k zeta^(k-j).

    This is an independent route to the same factorization that
    ``factorize_local(hadamard(h, f), zeta)`` produces by division, and
    the two are cross-checked against each other in the test suite.
    """
    point = LocalPoint.of(zeta)
    base = factorize_local(f, point)
    b = base.g.coeffs
    z = point.zeta
    m = len(b)
    F = []
    for j in range(m):
        acc = h.coeff(j + 1) * b[j]
        zpow = z
        for k in range(j + 1, m):
            acc = acc + (h.coeff(k + 1) - h.coeff(k)) * b[k] * zpow
            zpow = zpow * z
        F.append(acc)
    series = CoefficientSeries(F)
    A = h.coeff(0) * f.coeff(0) + (z * F[0] if F else 0)
    return LocalFactorization(a=A, g=series, point=point)
