"""Exact linear algebra over the rationals.

Scalars are `fractions.Fraction` throughout; no floats ever enter.
Vectors are plain tuples of Fractions, matrices are immutable row-major
dataclasses, and subspaces are stored in reduced row echelon form, so
subspace equality is literal equality of canonical bases.  Pivot
selection is always the first nonzero column, which fixes every basis
tie-break in the package.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotASubspace, ParseError

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# scalars
# ---------------------------------------------------------------------------

def frac(value: int | str | Fraction, den: int | None = None) -> Fraction:
    """Coerce to an exact rational; floats are deliberately rejected."""
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, float):
        raise ParseError(f"refusing inexact scalar {value!r}; use 'p/q' strings")
    return Fraction(value)


_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_scalar(value: int | str) -> Fraction:
    """Parse the JSON form of a rational: a bare integer or a 'p/q' string.

    Decimal and float forms are rejected, even exact ones, to keep the
    wire format unambiguous.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _SCALAR_RE.match(value.strip()):
            raise ParseError(f"not a rational scalar: {value!r}")
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational scalar: {value!r}") from exc
    raise ParseError(f"not a rational scalar: {value!r}")


def scalar_to_json(x: Fraction) -> int | str:
    """Emit a rational in its JSON form; the denominator is omitted when 1."""
    if x.denominator == 1:
        return int(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vector(values) -> Vector:
    return tuple(frac(v) if not isinstance(v, Fraction) else v for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Immutable rows x cols matrix with row-major rational entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"matrix {self.rows}x{self.cols} needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        rows = [vector(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [vector(c) for c in cols]
        nrows = len(cols[0]) if cols else 0
        return cls.from_rows([[c[i] for c in cols] for i in range(nrows)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols: (i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([self.col(j) for j in range(self.cols)])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = [ZERO] * (self.rows * other.cols)
        for i in range(self.rows):
            base = i * self.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a == 0:
                    continue
                obase = k * other.cols
                rbase = i * other.cols
                for j in range(other.cols):
                    b = other.entries[obase + j]
                    if b != 0:
                        out[rbase + j] += a * b
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product, v given in column coordinates."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.cols} columns")
        out = [ZERO] * self.rows
        for j, x in enumerate(v):
            if x == 0:
                continue
            for i in range(self.rows):
                e = self.entries[i * self.cols + j]
                if e != 0:
                    out[i] += e * x
        return tuple(out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def try_inverse(self) -> "Matrix | None":
        """Exact inverse, or None when singular."""
        if self.rows != self.cols:
            return None
        n = self.rows
        aug = Matrix.from_rows(
            [list(self.row(i)) + list(unit_vector(n, i)) for i in range(n)])
        red, pivots = rref(aug)
        if tuple(pivots) != tuple(range(n)):
            return None
        return Matrix.from_rows([red.row(i)[n:] for i in range(n)])

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns, exactly."""
    work = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        sel = None
        for r in range(pr, m.rows):
            if work[r][pc] != 0:
                sel = r
                break
        if sel is None:
            continue
        work[pr], work[sel] = work[sel], work[pr]
        inv = ONE / work[pr][pc]
        if inv != 1:
            work[pr] = [inv * x for x in work[pr]]
        for r in range(m.rows):
            if r != pr and work[r][pc] != 0:
                c = work[r][pc]
                work[r] = [a - c * b for a, b in zip(work[r], work[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return Matrix.from_rows(work) if m.rows else m, tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n held by its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_spanning(cls, ambient_dim: int, vectors) -> "Subspace":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"spanning vector of length {len(v)} in ambient dim {ambient_dim}")
        if not vecs:
            return cls(ambient_dim, ())
        red, pivots = rref(Matrix.from_rows(vecs))
        rows = tuple(red.row(i) for i in range(len(pivots)))
        return cls(ambient_dim, rows)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        out = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x != 0:
                    out.append(j)
                    break
        return tuple(out)

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after eliminating against the echelon basis."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector/ambient dimension mismatch")
        res = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = res[p]
            if c != 0:
                res = [a - c * b for a, b in zip(res, row)]
        return tuple(res)

    def contains(self, v: Vector) -> bool:
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v: Vector) -> Vector | None:
        """Coefficients of v on the echelon basis, or None if outside."""
        coords = tuple(v[p] for p in self.pivots)
        if not self.contains(v):
            return None
        return coords

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("ambient dimensions differ")
        return all(other.contains(b) for b in self.basis)

    def to_json(self) -> list:
        return [[scalar_to_json(x) for x in row] for row in self.basis]


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the right kernel {v : m v = 0}."""
    red, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red.entry(r, f)
        vecs.append(tuple(v))
    return Subspace.from_spanning(m.cols, vecs)


def column_space(m: Matrix) -> Subspace:
    return Subspace.from_spanning(m.rows, [m.col(j) for j in range(m.cols)])


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """dim(big) - dim(small), after checking small is contained in big."""
    if not small.is_subspace_of(big):
        raise NotASubspace("the claimed small subspace is not contained in the big one")
    return big.dim - small.dim
