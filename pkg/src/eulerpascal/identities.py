"""Verifiers for the Euler/Bernoulli polynomial identities and matrix inverses.

Polynomial identities are compared coefficient by coefficient for every
degree up to ``max_n``; matrix identities invert the left family exactly and
compare every entry with the right family. Each verifier reports the first
mismatch it meets.

The Euler and Bernoulli polynomials used here come from the EGF definitions
(``2 e^{xt}/(e^t+1)`` and ``t e^{xt}/(e^t-1)``), not from the expansion
formulas, so none of the polynomial checks is true by construction.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .exact_arith import binomial, format_rational
from .matrices import FamilyKind, MatrixFamily, TriMatrix, build, invert
from .poly import RatPoly
from .sequences import (
    bernoulli_numbers,
    bernoulli_polys_from_egf,
    euler_numbers,
    euler_polys_from_egf,
)


class IdentityId(enum.Enum):
    IDE = "IDE"
    IDB_FWD = "IDB_FWD"
    IDB_INV = "IDB_INV"
    IDBE = "IDBE"
    EBYB = "EBYB"
    IDBB = "IDBB"
    BBYB = "BBYB"
    TOZE = "TOZE"
    TOZB = "TOZB"
    PASCAL_INV = "PASCAL_INV"
    PASCAL_INV_SCALED = "PASCAL_INV_SCALED"
    IMB = "IMB"
    IMB_SCALED = "IMB_SCALED"
    INVE = "INVE"
    INVB = "INVB"
    COR_EVEN_E = "COR_EVEN_E"
    COR_EVEN_B = "COR_EVEN_B"
    PE = "PE"
    PBB = "PBB"
    P2E = "P2E"
    P2B = "P2B"

    @classmethod
    def from_name(cls, name: str) -> IdentityId:
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown identity: {name!r}") from None


POLYNOMIAL_IDS = (
    IdentityId.IDE, IdentityId.IDB_FWD, IdentityId.IDB_INV, IdentityId.IDBE,
    IdentityId.EBYB, IdentityId.IDBB, IdentityId.BBYB, IdentityId.TOZE,
    IdentityId.TOZB,
)

DEFAULT_LAMBDAS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 7))


@dataclass(frozen=True)
class Counterexample:
    where: dict
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {
            "where": dict(self.where),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    lam: Fraction | None
    max_index: int
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {
            "id": self.id.value,
            "lambda": format_rational(self.lam) if self.lam is not None else None,
            "max_index": self.max_index,
            "passed": self.passed,
            "counterexample": (
                self.counterexample.to_json() if self.counterexample else None
            ),
        }

    def describe(self) -> str:
        label = self.id.value
        if self.lam is not None:
            label += f"[lambda={format_rational(self.lam)}]"
        if self.passed:
            return f"{label} ok up to n={self.max_index}"
        ce = self.counterexample
        where = ", ".join(f"{k}={v}" for k, v in ce.where.items())
        return (
            f"{label} FAILED at {where}: "
            f"lhs={format_rational(ce.lhs)} rhs={format_rational(ce.rhs)}"
        )


# --- polynomial identities -------------------------------------------------


class _PolyContext:
    """Tables shared by the polynomial verifiers for one ``max_n``."""

    def __init__(self, max_n: int):
        self.max_n = max_n
        self.B = bernoulli_numbers(max_n)
        self.E = euler_numbers(max_n)
        self.Ex = euler_polys_from_egf(max_n)
        self.Bx = bernoulli_polys_from_egf(max_n)
        half = Fraction(1, 2)
        self.Bx_half = [p.compose_affine(half, 0) for p in self.Bx]
        x = RatPoly.x()
        one_minus_x = RatPoly((1, -1))
        self.x_pow = _powers(x, max_n + 1)
        self.omx_pow = _powers(one_minus_x, max_n + 1)
        self.mx_pow = _powers(-x, max_n + 1)
        self.shift_pow = _powers(RatPoly((-1, 2)), max_n)


def _powers(p: RatPoly, top: int) -> list[RatPoly]:
    out = [RatPoly.constant(1)]
    for _ in range(top):
        out.append(out[-1] * p)
    return out


def _sum(terms: Iterable[RatPoly]) -> RatPoly:
    acc = RatPoly()
    for t in terms:
        acc = acc + t
    return acc


def _ide(c: _PolyContext, k: int):
    lhs = c.Ex[k] * 2**k
    rhs = _sum(c.shift_pow[j] * (binomial(k, j) * c.E[k - j]) for j in range(k + 1))
    return lhs, rhs


def _idb_fwd(c: _PolyContext, k: int):
    rhs = _sum(c.x_pow[j] * (binomial(k, j) * c.B[k - j]) for j in range(k + 1))
    return c.Bx[k], rhs


def _idb_inv(c: _PolyContext, k: int):
    rhs = _sum(c.Bx[j] * (binomial(k, j) / (k - j + 1)) for j in range(k + 1))
    return c.x_pow[k], rhs


def _idbe(c: _PolyContext, k: int):
    def tail(m):
        return (c.omx_pow[m + 1] - c.mx_pow[m + 1]) / (m + 1)

    rhs = _sum(c.Bx[j] * tail(k - j) * (binomial(k, j) * 2**j) for j in range(k + 1))
    return c.Ex[k], rhs


def _ebyb(c: _PolyContext, k: int):
    rhs = _sum(
        c.Bx_half[j] * (binomial(k, j) * 2**j / (k - j + 1)) for j in range(k + 1)
    )
    return c.Ex[k], rhs


def _idbb(c: _PolyContext, k: int):
    def tail(m):
        return (c.omx_pow[m] + c.mx_pow[m]) / 2

    rhs = _sum(c.Bx[j] * tail(k - j) * (binomial(k, j) * 2**j) for j in range(k + 1))
    return c.Bx[k], rhs


def _bbyb(c: _PolyContext, k: int):
    rhs = c.Bx_half[k] * 2**k + _sum(
        c.Bx_half[k - j] * (binomial(k, j) * Fraction(2) ** (k - j - 1))
        for j in range(1, k + 1)
    )
    return c.Bx[k], rhs


def _toze(c: _PolyContext, n: int):
    rhs = _sum(c.Ex[n - j] * (binomial(n, j) * 2 ** (n - j)) for j in range(0, n + 1, 2))
    return c.shift_pow[n], rhs


def _tozb(c: _PolyContext, n: int):
    rhs = _sum(
        c.Bx[n - j] * (binomial(n, j) * 2 ** (n - j) / (j + 1))
        for j in range(0, n + 1, 2)
    )
    return c.shift_pow[n], rhs


_POLY_SIDES: dict[IdentityId, Callable[[_PolyContext, int], tuple[RatPoly, RatPoly]]] = {
    IdentityId.IDE: _ide,
    IdentityId.IDB_FWD: _idb_fwd,
    IdentityId.IDB_INV: _idb_inv,
    IdentityId.IDBE: _idbe,
    IdentityId.EBYB: _ebyb,
    IdentityId.IDBB: _idbb,
    IdentityId.BBYB: _bbyb,
    IdentityId.TOZE: _toze,
    IdentityId.TOZB: _tozb,
}


def polynomial_sides(tag: IdentityId, n: int, context: _PolyContext | None = None):
    """Both sides of a polynomial identity at degree ``n``."""
    if tag not in _POLY_SIDES:
        raise ValueError(f"{tag.value} is not a polynomial identity")
    if context is None or context.max_n < n:
        context = _PolyContext(n)
    return _POLY_SIDES[tag](context, n)


def _first_poly_mismatch(n: int, lhs: RatPoly, rhs: RatPoly) -> Counterexample | None:
    if lhs == rhs:
        return None
    for d in range(max(len(lhs.coeffs), len(rhs.coeffs))):
        a, b = lhs.coefficient(d), rhs.coefficient(d)
        if a != b:
            return Counterexample({"n": n, "power": d}, a, b)
    raise AssertionError("unequal polynomials with equal coefficients")


def verify_polynomial_identity(
    tag: IdentityId, max_n: int, context: _PolyContext | None = None
) -> IdentityReport:
    if tag not in _POLY_SIDES:
        raise ValueError(f"{tag.value} is not a polynomial identity")
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    if context is None or context.max_n < max_n:
        context = _PolyContext(max_n)
    sides = _POLY_SIDES[tag]
    for n in range(max_n + 1):
        lhs, rhs = sides(context, n)
        ce = _first_poly_mismatch(n, lhs, rhs)
        if ce is not None:
            return IdentityReport(tag, None, max_n, ce)
    return IdentityReport(tag, None, max_n)


# --- matrix identities -----------------------------------------------------

F = FamilyKind

# tag -> (left kind, right kind, takes lambda, right-hand lambda from lambda)
_MATRIX_SPECS: dict[IdentityId, tuple[FamilyKind, FamilyKind, bool, Callable]] = {
    IdentityId.PASCAL_INV: (F.PASCAL, F.PASCAL_SCALED, False, lambda lam: -lam),
    IdentityId.PASCAL_INV_SCALED: (F.PASCAL_SCALED, F.PASCAL_SCALED, True, lambda lam: -lam),
    IdentityId.IMB: (F.HARMONIC_PASCAL, F.BERNOULLI_PASCAL, False, None),
    IdentityId.IMB_SCALED: (F.HARMONIC_PASCAL, F.BERNOULLI_PASCAL, True, None),
    IdentityId.INVE: (F.EVEN_PASCAL, F.EULER_PASCAL, False, None),
    IdentityId.INVB: (F.EVEN_HARMONIC, F.CENTRAL_PASCAL, False, None),
    IdentityId.COR_EVEN_E: (F.DOUBLE_PASCAL, F.DOUBLE_EULER, False, None),
    IdentityId.COR_EVEN_B: (F.DOUBLE_HARMONIC, F.DOUBLE_CENTRAL, False, None),
    IdentityId.PE: (F.EVEN_PASCAL, F.EULER_PASCAL, True, None),
    IdentityId.PBB: (F.EVEN_HARMONIC, F.CENTRAL_PASCAL, True, None),
    IdentityId.P2E: (F.DOUBLE_PASCAL, F.DOUBLE_EULER, True, None),
    IdentityId.P2B: (F.DOUBLE_HARMONIC, F.DOUBLE_CENTRAL, True, None),
}

MATRIX_IDS = tuple(_MATRIX_SPECS)
ALL_IDS = POLYNOMIAL_IDS + MATRIX_IDS


def takes_lambda(tag: IdentityId) -> bool:
    return tag in _MATRIX_SPECS and _MATRIX_SPECS[tag][2]


def matrix_families(tag: IdentityId, lam=1) -> tuple[MatrixFamily, MatrixFamily]:
    """(left, right) families with ``invert(left) == right``."""
    if tag not in _MATRIX_SPECS:
        raise ValueError(f"{tag.value} is not a matrix identity")
    left, right, scaled, rhs_lam = _MATRIX_SPECS[tag]
    lam = Fraction(lam) if scaled else Fraction(1)
    right_lam = rhs_lam(lam) if rhs_lam else lam
    return MatrixFamily(left, lam), MatrixFamily(right, right_lam)


def first_matrix_mismatch(lhs: TriMatrix, rhs: TriMatrix) -> Counterexample | None:
    if lhs.size != rhs.size:
        raise ValueError(f"size mismatch: {lhs.size} vs {rhs.size}")
    for i, (ra, rb) in enumerate(zip(lhs.rows, rhs.rows)):
        if ra != rb:
            for j, (a, b) in enumerate(zip(ra, rb)):
                if a != b:
                    return Counterexample({"i": i, "j": j}, a, b)
    return None


def verify_matrix_identity(
    tag: IdentityId, size: int, lam=1, rhs: TriMatrix | None = None
) -> IdentityReport:
    """Check ``invert(build(left)) == build(right)`` entry by entry.

    ``rhs`` replaces the built right-hand matrix; useful for checking that a
    tampered matrix is caught.
    """
    if tag not in _MATRIX_SPECS:
        raise ValueError(f"{tag.value} is not a matrix identity")
    if size < 1:
        raise ValueError(f"size must be at least 1, got {size}")
    left, right = matrix_families(tag, lam)
    lhs = invert(build(left, size))
    if rhs is None:
        rhs = build(right, size)
    report_lam = left.lam if takes_lambda(tag) else None
    return IdentityReport(tag, report_lam, size - 1, first_matrix_mismatch(lhs, rhs))


# --- whole suite -----------------------------------------------------------


def _run_matrix_job(job):
    tag, size, lam = job
    return verify_matrix_identity(tag, size, lam)


def verify_all(
    max_n: int,
    lambdas: Iterable = DEFAULT_LAMBDAS,
    tags: Iterable[IdentityId] | None = None,
    jobs: int = 1,
) -> list[IdentityReport]:
    """Run the selected identities (all by default) and return reports in tag order.

    Polynomial identities run for degrees ``0..max_n``; matrix identities at
    size ``max_n + 1``, once per lambda for the lambda-dependent ones.
    ``jobs > 1`` spreads matrix checks over worker processes.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    lambdas = [Fraction(lam) for lam in lambdas]
    if not lambdas:
        raise ValueError("at least one lambda is required")
    selected = ALL_IDS if tags is None else tuple(tags)

    reports = []
    poly_tags = [t for t in selected if t in _POLY_SIDES]
    if poly_tags:
        context = _PolyContext(max_n)
        reports.extend(verify_polynomial_identity(t, max_n, context) for t in poly_tags)

    matrix_jobs = []
    for t in selected:
        if t not in _MATRIX_SPECS:
            continue
        for lam in lambdas if takes_lambda(t) else [Fraction(1)]:
            matrix_jobs.append((t, max_n + 1, lam))
    if jobs > 1 and len(matrix_jobs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports.extend(pool.map(_run_matrix_job, matrix_jobs))
    else:
        reports.extend(map(_run_matrix_job, matrix_jobs))
    return reports
