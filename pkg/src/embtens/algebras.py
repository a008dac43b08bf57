"""Structure-constant algebras and their axiom checkers.

An algebra is a finite-dimensional bilinear product stored as a table
``sc[i][j]`` holding the coordinates of ``[e_i, e_j]``.  The flavor tag
records what the table is claimed to be; the checkers verify it.  All
checkers scan basis tuples in lexicographic order and report the first
violation, so diagnostics are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DimensionMismatch
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    ZERO,
    is_zero_vector,
    kernel_basis,
    unit_vector,
    vec_add,
    vec_sub,
    vector,
    zero_vector,
)
from .reports import CheckReport, Failure, failing, passing

LIE = "lie"
LEIBNIZ = "leibniz"
UNCHECKED = "unchecked"

FLAVORS = (LIE, LEIBNIZ, UNCHECKED)

ScTable = tuple[tuple[Vector, ...], ...]


def sc_table(rows) -> ScTable:
    return tuple(tuple(vector(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Algebra:
    """A bilinear algebra given by structure constants on a fixed basis."""

    name: str
    dim: int
    sc: ScTable
    flavor: str = UNCHECKED

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if len(self.sc) != self.dim or any(len(row) != self.dim for row in self.sc):
            raise DimensionMismatch(f"structure table of {self.name!r} is not {self.dim}x{self.dim}")
        for row in self.sc:
            for v in row:
                if len(v) != self.dim:
                    raise DimensionMismatch(
                        f"structure vector of length {len(v)} in algebra {self.name!r} of dim {self.dim}")

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension of the structure table."""
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = xi * yj
                for k, s in enumerate(self.sc[i][j]):
                    if s != 0:
                        out[k] += c * s
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def adjoint(self, x: Vector) -> Matrix:
        """Matrix of left multiplication u -> [x, u]."""
        return Matrix.from_columns(
            [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)])

    def renamed(self, name: str) -> "Algebra":
        return Algebra(name, self.dim, self.sc, self.flavor)


def abelian_algebra(name: str, dim: int) -> Algebra:
    zero = zero_vector(dim)
    return Algebra(name, dim, tuple(tuple(zero for _ in range(dim)) for _ in range(dim)), LIE)


def direct_sum(a: Algebra, b: Algebra, name: str, flavor: str = UNCHECKED) -> Algebra:
    """Direct sum with componentwise bracket and no cross terms."""
    n = a.dim + b.dim
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < a.dim and j < a.dim:
                row.append(a.sc[i][j] + zero_vector(b.dim))
            elif i >= a.dim and j >= a.dim:
                row.append(zero_vector(a.dim) + b.sc[i - a.dim][j - a.dim])
            else:
                row.append(zero_vector(n))
        table.append(tuple(row))
    return Algebra(name, n, tuple(table), flavor)


# ---------------------------------------------------------------------------
# axiom checkers
# ---------------------------------------------------------------------------

def check_lie(a: Algebra) -> CheckReport:
    """Antisymmetry on basis pairs plus the Jacobi identity on triples."""
    for i in range(a.dim):
        for j in range(a.dim):
            res = vec_add(a.sc[i][j], a.sc[j][i])
            if not is_zero_vector(res):
                return failing("lie", [Failure("antisymmetry", (i, j), res)])
    for i, j, k in product(range(a.dim), repeat=3):
        ei, ej, ek = (a.basis_vector(t) for t in (i, j, k))
        lhs = a.bracket(ei, a.bracket(ej, ek))
        rhs = vec_add(a.bracket(a.bracket(ei, ej), ek), a.bracket(ej, a.bracket(ei, ek)))
        res = vec_sub(lhs, rhs)
        if not is_zero_vector(res):
            return failing("lie", [Failure("jacobi", (i, j, k), res)])
    return passing("lie")


def check_leibniz(a: Algebra) -> CheckReport:
    """The left Leibniz identity on all basis triples; no antisymmetry."""
    for i, j, k in product(range(a.dim), repeat=3):
        ei, ej, ek = (a.basis_vector(t) for t in (i, j, k))
        lhs = a.bracket(ei, a.bracket(ej, ek))
        rhs = vec_add(a.bracket(a.bracket(ei, ej), ek), a.bracket(ej, a.bracket(ei, ek)))
        res = vec_sub(lhs, rhs)
        if not is_zero_vector(res):
            return failing("leibniz", [Failure("leibniz", (i, j, k), res)])
    return passing("leibniz")


def check_two_step_nilpotent(a: Algebra) -> CheckReport:
    """[[x, y], z] = 0 on all basis triples."""
    for i, j, k in product(range(a.dim), repeat=3):
        res = a.bracket(a.sc[i][j], a.basis_vector(k))
        if not is_zero_vector(res):
            return failing("two-step-nilpotent", [Failure("double-bracket", (i, j, k), res)])
    return passing("two-step-nilpotent")


@dataclass(frozen=True)
class LeibnizRep:
    """A left/right representation pair of a Leibniz algebra."""

    algebra: Algebra
    rep_dim: int
    rho_l: tuple[Matrix, ...]
    rho_r: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.rho_l) != self.algebra.dim or len(self.rho_r) != self.algebra.dim:
            raise DimensionMismatch("one matrix per algebra basis vector is required")
        for m in (*self.rho_l, *self.rho_r):
            if m.rows != self.rep_dim or m.cols != self.rep_dim:
                raise DimensionMismatch(f"representation matrices must be {self.rep_dim}x{self.rep_dim}")

    def rho_l_of(self, x: Vector) -> Matrix:
        return _combine(self.rho_l, x, self.rep_dim)

    def rho_r_of(self, x: Vector) -> Matrix:
        return _combine(self.rho_r, x, self.rep_dim)


def _combine(mats: tuple[Matrix, ...], x: Vector, dim: int) -> Matrix:
    out = Matrix.zero(dim, dim)
    for c, m in zip(x, mats):
        if c != 0:
            out = out + m.scale(c)
    return out


def _commutator(p: Matrix, q: Matrix) -> Matrix:
    return (p @ q) - (q @ p)


def check_leibniz_rep(rep: LeibnizRep) -> CheckReport:
    """The three representation axioms on all basis pairs."""
    a = rep.algebra
    for i in range(a.dim):
        for j in range(a.dim):
            bij = a.sc[i][j]
            r1 = rep.rho_l_of(bij) - _commutator(rep.rho_l[i], rep.rho_l[j])
            if not r1.is_zero():
                return failing("leibniz-rep", [Failure("rho-left-bracket", (i, j), r1.entries)])
            r2 = rep.rho_r_of(bij) - _commutator(rep.rho_l[i], rep.rho_r[j])
            if not r2.is_zero():
                return failing("leibniz-rep", [Failure("rho-right-bracket", (i, j), r2.entries)])
            r3 = (rep.rho_r[j] @ rep.rho_l[i]) + (rep.rho_r[j] @ rep.rho_r[i])
            if not r3.is_zero():
                return failing("leibniz-rep", [Failure("rho-right-left", (i, j), r3.entries)])
    return passing("leibniz-rep")


# ---------------------------------------------------------------------------
# the ideal of squares and the quotient Lie algebra
# ---------------------------------------------------------------------------

def leibniz_kernel(a: Algebra) -> Subspace:
    """Smallest two-sided ideal containing all squares [x, x].

    Seeded by polarization (valid in characteristic zero), then closed
    under left and right bracketing with basis vectors until the
    dimension stops growing.
    """
    seeds = [a.sc[i][i] for i in range(a.dim)]
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            seeds.append(vec_add(a.sc[i][j], a.sc[j][i]))
    space = Subspace.from_spanning(a.dim, seeds)
    while True:
        grown = list(space.basis)
        for b in space.basis:
            for k in range(a.dim):
                ek = a.basis_vector(k)
                grown.append(a.bracket(ek, b))
                grown.append(a.bracket(b, ek))
        bigger = Subspace.from_spanning(a.dim, grown)
        if bigger.dim == space.dim:
            return space
        space = bigger


def _quotient_data(a: Algebra):
    ker = leibniz_kernel(a)
    pivset = set(ker.pivots)
    complement = [c for c in range(a.dim) if c not in pivset]
    qdim = len(complement)

    def project(v: Vector) -> Vector:
        res = ker.reduce(v)
        return tuple(res[c] for c in complement)

    proj = Matrix.from_columns([project(a.basis_vector(j)) for j in range(a.dim)]) \
        if qdim else Matrix.zero(0, a.dim)
    table = tuple(
        tuple(project(a.bracket(a.basis_vector(ci), a.basis_vector(cj))) for cj in complement)
        for ci in complement)
    quotient = Algebra(f"{a.name}_lie", qdim, table, LIE)
    return ker, complement, quotient, proj


def quotient_lie(a: Algebra) -> tuple[Algebra, Matrix]:
    """Quotient by the ideal of squares, on the echelon complement basis.

    Returns the quotient algebra together with the projection matrix;
    the projection intertwines the brackets.
    """
    _, _, quotient, proj = _quotient_data(a)
    return quotient, proj


# ---------------------------------------------------------------------------
# derivation algebras
# ---------------------------------------------------------------------------

def flatten_matrix(m: Matrix) -> Vector:
    return m.entries


def matrix_from_flat(n: int, v: Vector) -> Matrix:
    return Matrix(n, n, tuple(v))


def _derivation_rows(a: Algebra) -> list[list[Fraction]]:
    """Equations D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] on the dim^2 unknowns.

    Unknown (r, c) is entry D[r][c] at flat index r*dim + c, i.e. D maps
    e_c to sum_r D[r][c] e_r.
    """
    n = a.dim
    rows = []
    for i, j, k in product(range(n), repeat=3):
        row = [ZERO] * (n * n)
        for m in range(n):
            s = a.sc[i][j][m]
            if s != 0:
                row[k * n + m] += s
        for r in range(n):
            s = a.sc[r][j][k]
            if s != 0:
                row[r * n + i] -= s
            s = a.sc[i][r][k]
            if s != 0:
                row[r * n + j] -= s
        rows.append(row)
    return rows


def _coherence_rows(a: Algebra) -> list[list[Fraction]]:
    """Extra equations [De_i, e_j] = 0 for all basis pairs."""
    n = a.dim
    rows = []
    for i, j, k in product(range(n), repeat=3):
        row = [ZERO] * (n * n)
        for r in range(n):
            s = a.sc[r][j][k]
            if s != 0:
                row[r * n + i] += s
        rows.append(row)
    return rows


def derivation_algebra(a: Algebra) -> Subspace:
    """All derivations of the bracket, as a subspace of the dim^2 matrix space."""
    rows = _derivation_rows(a)
    return kernel_basis(Matrix.from_rows(rows) if rows else Matrix.zero(0, a.dim * a.dim))


def coherent_derivation_algebra(a: Algebra) -> Subspace:
    """Derivations D with [Du, v] = 0 for all u, v."""
    rows = _derivation_rows(a) + _coherence_rows(a)
    return kernel_basis(Matrix.from_rows(rows) if rows else Matrix.zero(0, a.dim * a.dim))
