"""Finite coefficient series and the classical summability kernels.

A :class:`CoefficientSeries` is a finitely truncated formal power series
``a_0 + a_1 z + a_2 z^2 + ...`` stored as a tuple of scalar coefficients.
Coefficients may be ``int``, ``Fraction``, ``float`` or ``complex``; the
arithmetic in this module preserves exact types, so kernel coefficients
(which are rational) and any computation built from integer inputs stay
exact until explicitly converted to floating point.  Exactness matters:
the sharp-constant checks in the test suite compare integer-valued
Dirichlet integrals for equality, not just to a tolerance.

The kernels provided are the Dirichlet kernel (partial-sum window), the
Fejér kernel (Cesàro-mean window), the de la Vallée Poussin kernel and
truncations of the Poisson kernel (radial dilation).  All of them act on
a series by Hadamard product, i.e. coefficientwise multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

import numpy as np

Scalar = int | float | complex | Fraction

KERNEL_KINDS = ("dirichlet", "fejer", "vallee_poussin", "poisson")


def abs2(x: Scalar):
    """|x|^2, computed without square roots so exact types stay exact."""
    if isinstance(x, complex):
        return x.real * x.real + x.imag * x.imag
    return x * x


def _is_finite(x: Scalar) -> bool:
    if isinstance(x, complex):
        return math.isfinite(x.real) and math.isfinite(x.imag)
    if isinstance(x, Fraction):
        return True
    return math.isfinite(x)


@dataclass(frozen=True, eq=False)
class CoefficientSeries:
    """A finitely truncated power series, indexed from 0.

    Trailing zero coefficients are irrelevant: two series are equal iff
    they agree coefficientwise after zero padding.  The zero series is a
    first-class value; its :meth:`degree` is ``None`` rather than a
    numeric sentinel, so truncation logic can never misuse it.
    """

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def zero(cls) -> "CoefficientSeries":
        return cls(())

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "CoefficientSeries":
        """The series ``coeff * z^k``."""
        if k < 0:
            raise ValueError("monomial index must be >= 0")
        return cls((0,) * k + (coeff,))

    @classmethod
    def from_json(cls, data) -> "CoefficientSeries":
        """Parse a JSON array of [re, im] pairs (bare reals accepted)."""
        coeffs = []
        for item in data:
            if isinstance(item, (list, tuple)):
                if len(item) != 2:
                    raise ValueError("coefficient entries must be [re, im] pairs")
                re, im = float(item[0]), float(item[1])
                coeffs.append(complex(re, im) if im != 0.0 else re)
            else:
                coeffs.append(float(item))
        return cls(coeffs)

    def to_json(self) -> list:
        return [[complex(c).real, complex(c).imag] for c in self.coeffs]

    def degree(self):
        """Largest index with a nonzero coefficient, or None for the zero series."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return None

    @property
    def is_zero(self) -> bool:
        return self.degree() is None

    def coeff(self, k: int) -> Scalar:
        """Coefficient of z^k; zero beyond the stored truncation."""
        if k < 0:
            raise ValueError("coefficient index must be >= 0")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def truncated(self, n: int) -> "CoefficientSeries":
        return CoefficientSeries(self.coeffs[: n + 1])

    def h2_norm_squared(self):
        """Sum of squared coefficient moduli (exact for exact coefficients)."""
        total = 0
        for c in self.coeffs:
            total = total + abs2(c)
        return total

    def derivative(self) -> "CoefficientSeries":
        return CoefficientSeries(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def as_array(self, length: int | None = None) -> np.ndarray:
        """Coefficients as a complex numpy vector, zero padded to ``length``."""
        n = len(self.coeffs) if length is None else length
        out = np.zeros(n, dtype=complex)
        for k, c in enumerate(self.coeffs[:n]):
            out[k] = complex(c)
        return out

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0):
            if x != y:
                return False
        return True

    def __hash__(self):
        trimmed = list(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return hash(tuple(trimmed))

    def __add__(self, other):
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        return CoefficientSeries(
            x + y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other):
        if not isinstance(other, CoefficientSeries):
            return NotImplemented
        return CoefficientSeries(
            x - y for x, y in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self):
        return CoefficientSeries(-c for c in self.coeffs)

    def __mul__(self, scalar):
        return CoefficientSeries(c * scalar for c in self.coeffs)

    __rmul__ = __mul__

    def __repr__(self):
        head = ", ".join(repr(c) for c in self.coeffs[:6])
        tail = ", ..." if len(self.coeffs) > 6 else ""
        return f"CoefficientSeries(({head}{tail}))"


def hadamard(f: CoefficientSeries, g: CoefficientSeries) -> CoefficientSeries:
    """Coefficientwise product of two series.

    The result has degree at most the smaller of the two degrees, since
    any coefficient beyond either truncation is zero.
    """
    n = min(len(f.coeffs), len(g.coeffs))
    return CoefficientSeries(f.coeffs[k] * g.coeffs[k] for k in range(n))


def partial_sum(f: CoefficientSeries, n: int) -> CoefficientSeries:
    """The n-th partial sum: coefficients 0..n of ``f``."""
    if n < 0:
        raise ValueError("partial sum order must be >= 0")
    return CoefficientSeries(f.coeffs[: n + 1])


def cesaro_mean(f: CoefficientSeries, n: int) -> CoefficientSeries:
    """Average of the partial sums of orders 0..n.

    Derived by counting how many partial sums retain each coefficient:
    coefficient j survives in s_j, ..., s_n, i.e. n+1-j times.  The final
    weights are applied as exact rationals, which makes the result agree
    coefficient-exactly with the Hadamard product against the Fejér
    kernel of the same order.
    """
    if n < 0:
        raise ValueError("mean order must be >= 0")
    m = min(n + 1, len(f.coeffs))
    counts = [0] * m
    for k in range(n + 1):
        for j in range(min(k, m - 1) + 1):
            counts[j] += 1
    return CoefficientSeries(
        f.coeffs[j] * Fraction(counts[j], n + 1) for j in range(m)
    )


def _powers(r, n: int) -> list:
    """[1, r, r^2, ..., r^n] by iterated multiplication.

    Shared by :func:`dilate` and :func:`poisson_kernel` so the two routes
    to a dilated series produce bit-identical coefficients.
    """
    out = [1]
    acc = 1
    for _ in range(n):
        acc = acc * r
        out.append(acc)
    return out


def dilate(f: CoefficientSeries, r) -> CoefficientSeries:
    """Radial dilation: coefficient k becomes ``a_k * r^k`` for 0 <= r < 1."""
    if not 0 <= r < 1:
        raise ValueError("dilation radius must lie in [0, 1)")
    if len(f.coeffs) == 0:
        return CoefficientSeries.zero()
    pw = _powers(r, len(f.coeffs) - 1)
    return CoefficientSeries(c * p for c, p in zip(f.coeffs, pw))


@dataclass(frozen=True)
class KernelSpec:
    """Which summability kernel to build.

    ``dirichlet``, ``fejer`` and ``vallee_poussin`` carry an integer
    ``order`` (>= 0, >= 0 and >= 1 respectively); ``poisson`` carries a
    ``radius`` in [0, 1) together with a truncation ``degree`` >= 1.
    """

    kind: str
    order: int | None = None
    radius: float | None = None
    degree: int | None = None

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.kind == "poisson":
            if self.radius is None or not 0 <= self.radius < 1:
                raise ValueError("poisson kernel needs a radius in [0, 1)")
            if self.degree is None or self.degree < 1:
                raise ValueError("poisson kernel needs a truncation degree >= 1")
        else:
            if self.order is None or self.order < 0:
                raise ValueError(f"{self.kind} kernel needs an order >= 0")
            if self.kind == "vallee_poussin" and self.order < 1:
                raise ValueError("vallee_poussin kernel needs an order >= 1")


def dirichlet_kernel(n: int) -> CoefficientSeries:
    """All-ones window of degree n: 1 + z + ... + z^n."""
    if n < 0:
        raise ValueError("kernel order must be >= 0")
    return CoefficientSeries((1,) * (n + 1))


def fejer_kernel(n: int) -> CoefficientSeries:
    """Triangular window of degree n with weights 1 - k/(n+1), exact rationals."""
    if n < 0:
        raise ValueError("kernel order must be >= 0")
    return CoefficientSeries(Fraction(n + 1 - k, n + 1) for k in range(n + 1))


def vallee_poussin_kernel(n: int) -> CoefficientSeries:
    """Flat-then-ramp window: 1 for k < n, 2 - k/n for n <= k <= 2n - 1."""
    if n < 1:
        raise ValueError("vallee_poussin order must be >= 1")
    coeffs = [1] * n
    coeffs += [Fraction(2 * n - k, n) for k in range(n, 2 * n)]
    return CoefficientSeries(coeffs)


def poisson_kernel(r, degree: int) -> CoefficientSeries:
    """Truncated geometric window 1 + r z + r^2 z^2 + ... + r^degree z^degree."""
    if not 0 <= r < 1:
        raise ValueError("poisson radius must lie in [0, 1)")
    if degree < 1:
        raise ValueError("poisson truncation degree must be >= 1")
    return CoefficientSeries(_powers(r, degree))


def make_kernel(spec: KernelSpec) -> CoefficientSeries:
    if spec.kind == "dirichlet":
        return dirichlet_kernel(spec.order)
    if spec.kind == "fejer":
        return fejer_kernel(spec.order)
    if spec.kind == "vallee_poussin":
        return vallee_poussin_kernel(spec.order)
    return poisson_kernel(spec.radius, spec.degree)


def parse_kernel_spec(text: str) -> KernelSpec:
    """Parse CLI syntax like ``dirichlet:5``, ``vallee-poussin:4``, ``poisson:0.9:64``."""
    parts = text.split(":")
    kind = parts[0].strip().lower().replace("-", "_")
    if kind == "poisson":
        if len(parts) != 3:
            raise ValueError("poisson kernel syntax is poisson:<radius>:<degree>")
        return KernelSpec(kind, radius=float(parts[1]), degree=int(parts[2]))
    if len(parts) != 2:
        raise ValueError(f"kernel syntax is <kind>:<order>, got {text!r}")
    return KernelSpec(kind, order=int(parts[1]))


def poisson_tail_bound(r, degree: int) -> float:
    """Certified bound on the dropped multiplier tail of a Poisson window.

    The tail sum_{k>degree} sqrt(k(k+1)) (1-r)^2 r^k is at most
    (1-r)^2 sum_{k>degree} (k+1) r^k = r^(degree+1) ((degree+2)(1-r) + r),
    using sqrt(k(k+1)) <= k+1 and the closed form of the derivative of a
    geometric tail.
    """
    if not 0 <= r < 1:
        raise ValueError("radius must lie in [0, 1)")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if r == 0:
        return 0.0
    return float(r ** (degree + 1) * ((degree + 2) * (1 - r) + r))


def poisson_degree_for_tolerance(r, tol: float) -> int:
    """Smallest truncation degree whose certified tail is below ``tol``."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = 1
    while poisson_tail_bound(r, n) > tol:
        n += 1
    return n
