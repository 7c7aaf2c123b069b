"""Truncated exponential generating functions over Fraction or RatPoly.

A series of order ``N`` stands for ``sum(a[j] * t**j / j!)`` for ``j <= N``.
Multiplication is binomial convolution, and every operation keeps the order
it was given; nothing silently extends precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import binomial
from .poly import RatPoly


def _is_poly_ring(coeffs) -> bool:
    return any(isinstance(c, RatPoly) for c in coeffs)


@dataclass(frozen=True)
class EgfSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )
        # one ring per series: a single RatPoly promotes the rest
        if _is_poly_ring(self.coeffs):
            coeffs = tuple(RatPoly.coerce(c) for c in self.coeffs)
        else:
            coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> EgfSeries:
        return cls(len(coeffs) - 1, tuple(coeffs))

    @property
    def is_polynomial(self) -> bool:
        return _is_poly_ring(self.coeffs)

    def __getitem__(self, j: int):
        return self.coeffs[j]

    def __mul__(self, other: EgfSeries) -> EgfSeries:
        return cauchy_product(self, other)


def cauchy_product(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """EGF product: ``c[n] = sum_j C(n, j) a[j] b[n-j]``."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    poly = a.is_polynomial or b.is_polynomial
    ac = [RatPoly.coerce(c) for c in a.coeffs] if poly else a.coeffs
    bc = [RatPoly.coerce(c) for c in b.coeffs] if poly else b.coeffs
    out = []
    for n in range(a.order + 1):
        acc = RatPoly() if poly else Fraction(0)
        for j in range(n + 1):
            if ac[j] == 0 or bc[n - j] == 0:
                continue
            acc = acc + ac[j] * bc[n - j] * binomial(n, j)
        out.append(acc)
    return EgfSeries(a.order, tuple(out))


def _leading_inverse(a0) -> Fraction:
    if isinstance(a0, RatPoly):
        if not a0.is_constant() or a0.is_zero():
            raise ZeroDivisionError("leading coefficient is not a nonzero constant")
        a0 = a0.constant_term()
    if a0 == 0:
        raise ZeroDivisionError("leading coefficient is zero")
    return 1 / a0


def reciprocal(a: EgfSeries) -> EgfSeries:
    """Series ``b`` with ``a * b = 1`` up to ``a.order``."""
    inv0 = _leading_inverse(a.coeffs[0])
    poly = a.is_polynomial
    b = [RatPoly.constant(inv0) if poly else inv0]
    for n in range(1, a.order + 1):
        acc = RatPoly() if poly else Fraction(0)
        for j in range(1, n + 1):
            if a.coeffs[j] == 0:
                continue
            acc = acc + a.coeffs[j] * b[n - j] * binomial(n, j)
        b.append(-acc * inv0)
    return EgfSeries(a.order, tuple(b))


def scale_t(a: EgfSeries, lam) -> EgfSeries:
    """Substitute ``t -> lam * t``."""
    lam = Fraction(lam)
    out = []
    power = Fraction(1)
    for c in a.coeffs:
        out.append(c * power)
        power *= lam
    return EgfSeries(a.order, tuple(out))


def coefficients_as_polynomials(a: EgfSeries) -> tuple[RatPoly, ...]:
    return tuple(RatPoly.coerce(c) for c in a.coeffs)


def unit(order: int) -> EgfSeries:
    return EgfSeries(order, (Fraction(1),) + (Fraction(0),) * order)


def exp_xt(order: int) -> EgfSeries:
    """``exp(x t)``: coefficient ``j`` is the monomial ``x**j``."""
    return EgfSeries(order, tuple(RatPoly.monomial(j) for j in range(order + 1)))


def _even_only(order: int, even_value) -> EgfSeries:
    return EgfSeries(
        order,
        tuple(even_value(j) if j % 2 == 0 else Fraction(0) for j in range(order + 1)),
    )


def cosh_half(order: int) -> EgfSeries:
    """``cosh(t/2)``."""
    return _even_only(order, lambda j: Fraction(1, 2**j))


def sinhc_half(order: int) -> EgfSeries:
    """``2 sinh(t/2) / t``."""
    return _even_only(order, lambda j: Fraction(1, 2**j * (j + 1)))


def cosh(order: int) -> EgfSeries:
    return _even_only(order, lambda j: Fraction(1))


def sinhc(order: int) -> EgfSeries:
    """``sinh(t) / t``."""
    return _even_only(order, lambda j: Fraction(1, j + 1))


def exp_plus_one_half(order: int) -> EgfSeries:
    """``(e^t + 1) / 2``."""
    return EgfSeries(
        order, (Fraction(1),) + tuple(Fraction(1, 2) for _ in range(order))
    )


def expm1_over_t(order: int) -> EgfSeries:
    """``(e^t - 1) / t``."""
    return EgfSeries(order, tuple(Fraction(1, j + 1) for j in range(order + 1)))
