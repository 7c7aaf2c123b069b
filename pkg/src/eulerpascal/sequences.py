"""Euler/Bernoulli numbers and polynomials, plus the substituted families.

Each table has a primary construction by explicit recurrence and a second,
independent construction through the EGF machinery in :mod:`.egf`
(the ``*_from_egf`` functions). Tests and the acceptance suite compare the two.

Bernoulli numbers use the convention ``B_1 = -1/2`` (``B_n = B_n(0)``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import egf
from .exact_arith import binomial
from .poly import RatPoly


class SequenceKind(enum.Enum):
    BERNOULLI_NUMBER = "bernoulli"
    EULER_NUMBER = "euler"
    CENTRAL_BERNOULLI_SUM = "central"


class PolyKind(enum.Enum):
    EULER_POLY = "euler_poly"
    BERNOULLI_POLY = "bernoulli_poly"
    W_POLY = "w_poly"
    V_POLY = "v_poly"


@dataclass(frozen=True)
class SequenceTable:
    kind: SequenceKind
    values: tuple[Fraction, ...]

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class PolyTable:
    kind: PolyKind
    polys: tuple[RatPoly, ...]

    def __getitem__(self, n: int) -> RatPoly:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)


def _check_count(count: int) -> None:
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")


def bernoulli_numbers(count: int) -> SequenceTable:
    """B_0..B_count from ``sum_{k<=n} C(n+1, k) B_k = 0``."""
    _check_count(count)
    b = [Fraction(1)]
    for n in range(1, count + 1):
        acc = sum((binomial(n + 1, k) * b[k] for k in range(n)), Fraction(0))
        b.append(-acc / (n + 1))
    return SequenceTable(SequenceKind.BERNOULLI_NUMBER, tuple(b))


def euler_numbers(count: int) -> SequenceTable:
    """E_0..E_count from ``sum_{k even} C(n, k) E_{n-k} = [n == 0]``."""
    _check_count(count)
    e = [Fraction(1)]
    for n in range(1, count + 1):
        acc = sum(
            (binomial(n, k) * e[n - k] for k in range(2, n + 1, 2)), Fraction(0)
        )
        e.append(-acc)
    return SequenceTable(SequenceKind.EULER_NUMBER, tuple(e))


def central_bernoulli_sums(count: int, bernoulli: SequenceTable | None = None) -> SequenceTable:
    """s_n = sum_j C(n, j) 2^j B_j, by direct summation."""
    _check_count(count)
    if bernoulli is None or len(bernoulli) <= count:
        bernoulli = bernoulli_numbers(count)
    s = []
    for n in range(count + 1):
        s.append(
            sum((binomial(n, j) * 2**j * bernoulli[j] for j in range(n + 1)), Fraction(0))
        )
    return SequenceTable(SequenceKind.CENTRAL_BERNOULLI_SUM, tuple(s))


def euler_polys(max_n: int, euler: SequenceTable | None = None) -> PolyTable:
    """E_k(x) = 2^-k sum_j C(k, j) E_{k-j} (2x - 1)^j."""
    _check_count(max_n)
    if euler is None or len(euler) <= max_n:
        euler = euler_numbers(max_n)
    shift = RatPoly((-1, 2))
    powers = [RatPoly.constant(1)]
    for _ in range(max_n):
        powers.append(powers[-1] * shift)
    polys = []
    for k in range(max_n + 1):
        acc = RatPoly()
        for j in range(k + 1):
            if euler[k - j] != 0:
                acc = acc + powers[j] * (binomial(k, j) * euler[k - j])
        polys.append(acc / 2**k)
    return PolyTable(PolyKind.EULER_POLY, tuple(polys))


def bernoulli_polys(max_n: int, bernoulli: SequenceTable | None = None) -> PolyTable:
    """B_k(x) = sum_j C(k, j) B_{k-j} x^j."""
    _check_count(max_n)
    if bernoulli is None or len(bernoulli) <= max_n:
        bernoulli = bernoulli_numbers(max_n)
    polys = [
        RatPoly([binomial(k, j) * bernoulli[k - j] for j in range(k + 1)])
        for k in range(max_n + 1)
    ]
    return PolyTable(PolyKind.BERNOULLI_POLY, tuple(polys))


def substituted_polys(kind: PolyKind, max_n: int, base: PolyTable | None = None) -> PolyTable:
    """W_n(x) = 2^n E_n((x+1)/2) or V_n(x) = 2^n B_n((x+1)/2).

    ``base`` may supply a prebuilt Euler/Bernoulli polynomial table.
    """
    _check_count(max_n)
    if kind is PolyKind.W_POLY:
        if base is None or len(base) <= max_n:
            base = euler_polys(max_n)
    elif kind is PolyKind.V_POLY:
        if base is None or len(base) <= max_n:
            base = bernoulli_polys(max_n)
    else:
        raise ValueError(f"substituted_polys takes W_POLY or V_POLY, not {kind}")
    half = Fraction(1, 2)
    polys = tuple(base[n].compose_affine(half, half) * 2**n for n in range(max_n + 1))
    return PolyTable(kind, polys)


def substituted_polys_by_expansion(kind: PolyKind, max_n: int) -> PolyTable:
    """W_n(x) = sum_j C(n,j) x^(n-j) E_j and V_n(x) = sum_j C(n,j) x^(n-j) s_j."""
    _check_count(max_n)
    if kind is PolyKind.W_POLY:
        numbers = euler_numbers(max_n)
    elif kind is PolyKind.V_POLY:
        numbers = central_bernoulli_sums(max_n)
    else:
        raise ValueError(f"expected W_POLY or V_POLY, not {kind}")
    polys = tuple(
        RatPoly([binomial(n, n - i) * numbers[n - i] for i in range(n + 1)])
        for n in range(max_n + 1)
    )
    return PolyTable(kind, polys)


# Independent constructions through the EGF oracle.


def bernoulli_numbers_from_egf(count: int) -> SequenceTable:
    """Coefficients of t / (e^t - 1)."""
    _check_count(count)
    series = egf.reciprocal(egf.expm1_over_t(count))
    return SequenceTable(SequenceKind.BERNOULLI_NUMBER, series.coeffs)


def euler_numbers_from_egf(count: int) -> SequenceTable:
    """Coefficients of 1 / cosh(t)."""
    _check_count(count)
    series = egf.reciprocal(egf.cosh(count))
    return SequenceTable(SequenceKind.EULER_NUMBER, series.coeffs)


def central_bernoulli_sums_from_egf(count: int) -> SequenceTable:
    """Coefficients of t / sinh(t)."""
    _check_count(count)
    series = egf.reciprocal(egf.sinhc(count))
    return SequenceTable(SequenceKind.CENTRAL_BERNOULLI_SUM, series.coeffs)


def euler_polys_from_egf(max_n: int) -> PolyTable:
    """Coefficients of 2 e^{xt} / (e^t + 1)."""
    _check_count(max_n)
    series = egf.reciprocal(egf.exp_plus_one_half(max_n)) * egf.exp_xt(max_n)
    return PolyTable(PolyKind.EULER_POLY, egf.coefficients_as_polynomials(series))


def bernoulli_polys_from_egf(max_n: int) -> PolyTable:
    """Coefficients of t e^{xt} / (e^t - 1)."""
    _check_count(max_n)
    series = egf.reciprocal(egf.expm1_over_t(max_n)) * egf.exp_xt(max_n)
    return PolyTable(PolyKind.BERNOULLI_POLY, egf.coefficients_as_polynomials(series))


NUMBER_BUILDERS = {
    SequenceKind.BERNOULLI_NUMBER: bernoulli_numbers,
    SequenceKind.EULER_NUMBER: euler_numbers,
    SequenceKind.CENTRAL_BERNOULLI_SUM: central_bernoulli_sums,
}
