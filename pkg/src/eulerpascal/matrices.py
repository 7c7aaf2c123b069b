"""Lower-triangular Pascal-style matrix families and exact triangular algebra.

Matrices are stored as the triangle only: row ``i`` holds entries
``(i, 0) .. (i, i)``. Every family matrix of size ``k`` is the leading block
of the same family at any larger size, so entries depend on ``(i, j)`` alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_arith import binomial, format_rational, parity_mask, parse_rational
from .poly import RatPoly
from .sequences import bernoulli_numbers, central_bernoulli_sums, euler_numbers


class SingularMatrixError(ZeroDivisionError):
    def __init__(self, index: int):
        super().__init__(f"zero diagonal entry at index {index}")
        self.index = index


class FamilyKind(enum.Enum):
    PASCAL = "pascal"
    PASCAL_SCALED = "pascal_scaled"
    HARMONIC_PASCAL = "harmonic_pascal"
    EVEN_PASCAL = "even_pascal"
    EVEN_HARMONIC = "even_harmonic"
    DOUBLE_PASCAL = "double_pascal"
    DOUBLE_HARMONIC = "double_harmonic"
    BERNOULLI_PASCAL = "bernoulli_pascal"
    EULER_PASCAL = "euler_pascal"
    CENTRAL_PASCAL = "central_pascal"
    DOUBLE_EULER = "double_euler"
    DOUBLE_CENTRAL = "double_central"

    @classmethod
    def from_name(cls, name: str) -> FamilyKind:
        try:
            return cls(name.lower())
        except ValueError:
            try:
                return cls[name.upper()]
            except KeyError:
                raise ValueError(f"unknown matrix family: {name!r}") from None


# Kinds whose entries use C(2i, 2j) and so need sequence values up to 2(size-1).
_DOUBLED = {FamilyKind.DOUBLE_PASCAL, FamilyKind.DOUBLE_HARMONIC,
            FamilyKind.DOUBLE_EULER, FamilyKind.DOUBLE_CENTRAL}


@dataclass(frozen=True)
class MatrixFamily:
    kind: FamilyKind
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.kind, FamilyKind):
            raise ValueError(f"unknown matrix family: {self.kind!r}")
        object.__setattr__(self, "lam", Fraction(self.lam))

    @property
    def name(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class TriMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    family: MatrixFamily | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i} has {len(row)} entries, expected {i + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if j > i:
            return Fraction(0)
        return self.rows[i][j]

    def leading_block(self, k: int) -> TriMatrix:
        if not 0 < k <= self.size:
            raise ValueError(f"block size {k} outside 1..{self.size}")
        return TriMatrix(self.rows[:k], self.family)

    def with_entry(self, i: int, j: int, value) -> TriMatrix:
        """Copy with entry ``(i, j)`` replaced (``j <= i``)."""
        if not 0 <= j <= i < self.size:
            raise IndexError(f"({i}, {j}) is not in the lower triangle")
        rows = [list(r) for r in self.rows]
        rows[i][j] = Fraction(value)
        return TriMatrix(tuple(tuple(r) for r in rows), None)

    def to_json(self) -> dict:
        fam = self.family
        return {
            "family": fam.name if fam is not None else None,
            "lambda": format_rational(fam.lam) if fam is not None else None,
            "size": self.size,
            "rows": [[format_rational(v) for v in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, doc: dict) -> TriMatrix:
        raw_rows = doc["rows"]
        rows = []
        for i, raw in enumerate(raw_rows):
            vals = [parse_rational(str(v)) for v in raw]
            # full square rows are accepted if the upper part is zero
            if len(vals) > i + 1:
                if any(v != 0 for v in vals[i + 1:]):
                    raise ValueError(f"row {i} has nonzero entries above the diagonal")
                vals = vals[: i + 1]
            rows.append(tuple(vals))
        if "size" in doc and doc["size"] != len(rows):
            raise ValueError(f"size {doc['size']} does not match {len(rows)} rows")
        family = None
        if doc.get("family") and not doc.get("inverted"):
            lam = doc.get("lambda")
            family = MatrixFamily(
                FamilyKind.from_name(doc["family"]),
                parse_rational(lam) if lam is not None else Fraction(1),
            )
        return cls(tuple(rows), family)

    def to_csv(self) -> str:
        return "\n".join(",".join(format_rational(v) for v in row) for row in self.rows)


def identity(size: int) -> TriMatrix:
    return TriMatrix(
        tuple(tuple(Fraction(1 if j == i else 0) for j in range(i + 1)) for i in range(size))
    )


class _Numbers:
    """Sequence values a family needs, built once per ``build`` call."""

    def __init__(self, kind: FamilyKind, size: int):
        top = 2 * (size - 1) if kind in _DOUBLED else size - 1
        self.bernoulli = self.euler = self.central = None
        if kind is FamilyKind.BERNOULLI_PASCAL:
            self.bernoulli = bernoulli_numbers(top)
        elif kind in (FamilyKind.EULER_PASCAL, FamilyKind.DOUBLE_EULER):
            self.euler = euler_numbers(top)
        elif kind in (FamilyKind.CENTRAL_PASCAL, FamilyKind.DOUBLE_CENTRAL):
            self.central = central_bernoulli_sums(top)


def family_entry(family: MatrixFamily, i: int, j: int, numbers: _Numbers) -> Fraction:
    if j > i:
        return Fraction(0)
    d = i - j
    scale = family.lam**d
    k = family.kind
    if k is FamilyKind.PASCAL:
        return binomial(i, j)
    if k is FamilyKind.PASCAL_SCALED:
        return scale * binomial(i, j)
    if k is FamilyKind.HARMONIC_PASCAL:
        return scale * binomial(i, j) / (d + 1)
    if k is FamilyKind.EVEN_PASCAL:
        return parity_mask(d) * scale * binomial(i, j)
    if k is FamilyKind.EVEN_HARMONIC:
        return parity_mask(d) * scale * binomial(i, j) / (d + 1)
    if k is FamilyKind.DOUBLE_PASCAL:
        return scale * binomial(2 * i, 2 * j)
    if k is FamilyKind.DOUBLE_HARMONIC:
        return scale * binomial(2 * i, 2 * j) / (2 * d + 1)
    if k is FamilyKind.BERNOULLI_PASCAL:
        return scale * binomial(i, j) * numbers.bernoulli[d]
    if k is FamilyKind.EULER_PASCAL:
        return scale * binomial(i, j) * numbers.euler[d]
    if k is FamilyKind.CENTRAL_PASCAL:
        return scale * binomial(i, j) * numbers.central[d]
    if k is FamilyKind.DOUBLE_EULER:
        return scale * binomial(2 * i, 2 * j) * numbers.euler[2 * d]
    if k is FamilyKind.DOUBLE_CENTRAL:
        return scale * binomial(2 * i, 2 * j) * numbers.central[2 * d]
    raise ValueError(f"unknown matrix family: {k!r}")


def build(family: MatrixFamily, size: int) -> TriMatrix:
    if size < 1:
        raise ValueError(f"size must be at least 1, got {size}")
    numbers = _Numbers(family.kind, size)
    rows = tuple(
        tuple(family_entry(family, i, j, numbers) for j in range(i + 1))
        for i in range(size)
    )
    return TriMatrix(rows, family)


def invert(m: TriMatrix) -> TriMatrix:
    """Exact inverse by forward substitution, one column at a time."""
    n = m.size
    rows = m.rows
    inv_diag = []
    for i in range(n):
        if rows[i][i] == 0:
            raise SingularMatrixError(i)
        inv_diag.append(1 / rows[i][i])
    out = [[Fraction(0)] * (i + 1) for i in range(n)]
    for j in range(n):
        out[j][j] = inv_diag[j]
        for i in range(j + 1, n):
            row = rows[i]
            acc = Fraction(0)
            for k in range(j, i):
                if row[k]:
                    acc += row[k] * out[k][j]
            out[i][j] = -acc * inv_diag[i]
    return TriMatrix(tuple(tuple(r) for r in out))


def multiply(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} vs {b.size}")
    n = a.size
    out = []
    for i in range(n):
        arow = a.rows[i]
        row = []
        for j in range(i + 1):
            acc = Fraction(0)
            for k in range(j, i + 1):
                if arow[k]:
                    acc += arow[k] * b.rows[k][j]
            row.append(acc)
        out.append(tuple(row))
    return TriMatrix(tuple(out))


def apply_to_vector(m: TriMatrix, v: Sequence[RatPoly]) -> tuple[RatPoly, ...]:
    if len(v) != m.size:
        raise ValueError(f"vector length {len(v)} does not match size {m.size}")
    vec = [RatPoly.coerce(p) for p in v]
    out = []
    for row in m.rows:
        acc = RatPoly()
        for j, c in enumerate(row):
            if c:
                acc = acc + vec[j] * c
        out.append(acc)
    return tuple(out)
