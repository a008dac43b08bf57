"""Coherent actions, embedding tensors, and the constructions they induce.

A tensor is stored as a matrix whose column ``u`` holds the coordinates
of ``T(e_u)`` in the source-algebra basis.  All checks quantify over
ordered basis pairs, including the diagonal, since none of the brackets
here are assumed antisymmetric.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebras import (
    Algebra,
    LEIBNIZ,
    coherent_derivation_algebra,
    direct_sum,
    flatten_matrix,
    matrix_from_flat,
    sc_table,
)
from .errors import DimensionMismatch, NotAnEmbeddingTensor, NotCoherentAction
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    ZERO,
    is_zero_vector,
    vec_add,
    vec_sub,
    zero_vector,
)
from .reports import CheckReport, Failure, failing, passing


@dataclass(frozen=True)
class Action:
    """A linear map from the source Lie algebra into gl(target), given per basis vector."""

    source: Algebra
    target: Algebra
    rho: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.rho) != self.source.dim:
            raise DimensionMismatch("one operator per source basis vector is required")
        for m in self.rho:
            if m.rows != self.target.dim or m.cols != self.target.dim:
                raise DimensionMismatch(
                    f"operators must be {self.target.dim}x{self.target.dim}")

    def of(self, x: Vector) -> Matrix:
        """rho(x) for an arbitrary source vector."""
        out = Matrix.zero(self.target.dim, self.target.dim)
        for c, m in zip(x, self.rho):
            if c != 0:
                out = out + m.scale(c)
        return out

    def apply(self, x: Vector, u: Vector) -> Vector:
        """rho(x)u without materializing the combined matrix."""
        out = [ZERO] * self.target.dim
        for c, m in zip(x, self.rho):
            if c == 0:
                continue
            w = m.apply(u)
            for k, val in enumerate(w):
                if val != 0:
                    out[k] += c * val
        return tuple(out)


def adjoint_action(a: Algebra) -> Action:
    """The adjoint action of a Lie algebra on itself."""
    return Action(a, a, tuple(a.adjoint(a.basis_vector(i)) for i in range(a.dim)))


@dataclass(frozen=True)
class EmbeddingTensor:
    """A candidate embedding tensor T: target -> source over a coherent action."""

    action: Action
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.action.source.dim or self.matrix.cols != self.action.target.dim:
            raise DimensionMismatch(
                f"tensor matrix must be {self.action.source.dim}x{self.action.target.dim}")

    def apply(self, u: Vector) -> Vector:
        return self.matrix.apply(u)

    def column(self, j: int) -> Vector:
        return self.matrix.col(j)

    def with_matrix(self, matrix: Matrix) -> "EmbeddingTensor":
        return EmbeddingTensor(self.action, matrix)


@lru_cache(maxsize=None)
def check_coherent_action(action: Action) -> CheckReport:
    """Derivation property, homomorphism property, and coherence, on basis tuples."""
    g, h = action.source, action.target
    for i in range(g.dim):
        d = action.rho[i]
        for a, b in product(range(h.dim), repeat=2):
            ea, eb = h.basis_vector(a), h.basis_vector(b)
            lhs = d.apply(h.sc[a][b])
            rhs = vec_add(h.bracket(d.apply(ea), eb), h.bracket(ea, d.apply(eb)))
            res = vec_sub(lhs, rhs)
            if not is_zero_vector(res):
                return failing("coherent-action", [Failure("derivation", (i, a, b), res)])
    for i, j in product(range(g.dim), repeat=2):
        lhs = action.of(g.sc[i][j])
        rhs = (action.rho[i] @ action.rho[j]) - (action.rho[j] @ action.rho[i])
        res = lhs - rhs
        if not res.is_zero():
            return failing("coherent-action", [Failure("homomorphism", (i, j), res.entries)])
    for i in range(g.dim):
        for a, b in product(range(h.dim), repeat=2):
            res = h.bracket(action.rho[i].col(a), h.basis_vector(b))
            if not is_zero_vector(res):
                return failing("coherent-action", [Failure("coherence", (i, a, b), res)])
    return passing("coherent-action")


def require_coherent(action: Action) -> None:
    report = check_coherent_action(action)
    if not report.ok:
        raise NotCoherentAction(f"action fails {report.witness.law} at {report.witness.where}")


def net_residual(t: EmbeddingTensor, i: int, j: int) -> Vector:
    """[Te_i, Te_j] - T(rho(Te_i)e_j + [e_i, e_j]) in source coordinates."""
    g, h = t.action.source, t.action.target
    ti, tj = t.column(i), t.column(j)
    inner = vec_add(t.action.apply(ti, h.basis_vector(j)), h.sc[i][j])
    return vec_sub(g.bracket(ti, tj), t.apply(inner))


@lru_cache(maxsize=None)
def check_embedding_tensor(t: EmbeddingTensor) -> CheckReport:
    """The defining tensor identity on all ordered basis pairs.

    The report carries the full table of nonzero residuals.  If the
    underlying action is not coherent the report fails with the action's
    own witness first.
    """
    action_report = check_coherent_action(t.action)
    if not action_report.ok:
        return failing("embedding-tensor", list(action_report.failures),
                       notes=("action is not coherent",))
    h = t.action.target
    bad = []
    for i, j in product(range(h.dim), repeat=2):
        res = net_residual(t, i, j)
        if not is_zero_vector(res):
            bad.append(Failure("tensor-identity", (i, j), res))
    if bad:
        return failing("embedding-tensor", bad)
    return passing("embedding-tensor")


def require_embedding_tensor(t: EmbeddingTensor) -> None:
    report = check_embedding_tensor(t)
    if not report.ok:
        raise NotAnEmbeddingTensor(
            f"tensor fails {report.witness.law} at {report.witness.where}")


def check_tensor_homomorphism(t: EmbeddingTensor, t_prime: EmbeddingTensor,
                              phi_g: Matrix, phi_h: Matrix) -> CheckReport:
    """Whether (phi_g, phi_h) is a homomorphism from t_prime to t.

    Both tensors must live over the same action; the conditions are the
    two endomorphism laws, the intertwining T . phi_h = phi_g . T', and
    compatibility with the action.
    """
    if t.action != t_prime.action:
        raise DimensionMismatch("the two tensors must share one action")
    g, h = t.action.source, t.action.target
    if phi_g.rows != g.dim or phi_g.cols != g.dim:
        raise DimensionMismatch("phi_g has the wrong shape")
    if phi_h.rows != h.dim or phi_h.cols != h.dim:
        raise DimensionMismatch("phi_h has the wrong shape")
    for i, j in product(range(g.dim), repeat=2):
        res = vec_sub(phi_g.apply(g.sc[i][j]),
                      g.bracket(phi_g.col(i), phi_g.col(j)))
        if not is_zero_vector(res):
            return failing("tensor-homomorphism", [Failure("phi-source-endomorphism", (i, j), res)])
    for i, j in product(range(h.dim), repeat=2):
        res = vec_sub(phi_h.apply(h.sc[i][j]),
                      h.bracket(phi_h.col(i), phi_h.col(j)))
        if not is_zero_vector(res):
            return failing("tensor-homomorphism", [Failure("phi-target-endomorphism", (i, j), res)])
    lhs = t.matrix @ phi_h
    rhs = phi_g @ t_prime.matrix
    diff = lhs - rhs
    if not diff.is_zero():
        return failing("tensor-homomorphism", [Failure("intertwining", (), diff.entries)])
    for i in range(g.dim):
        for u in range(h.dim):
            left = phi_h.apply(t.action.rho[i].col(u))
            right = t.action.apply(phi_g.col(i), phi_h.col(u))
            res = vec_sub(left, right)
            if not is_zero_vector(res):
                return failing("tensor-homomorphism", [Failure("action-compatibility", (i, u), res)])
    return passing("tensor-homomorphism")


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def hemisemidirect(action: Action, name: str | None = None) -> Algebra:
    """The Leibniz bracket [x+u, y+v] = [x,y] + rho(x)v + [u,v] on source + target."""
    require_coherent(action)
    g, h = action.source, action.target
    n = g.dim + h.dim
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if i < g.dim and j < g.dim:
                row.append(g.sc[i][j] + zero_vector(h.dim))
            elif i < g.dim and j >= g.dim:
                row.append(zero_vector(g.dim) + action.rho[i].col(j - g.dim))
            elif i >= g.dim and j >= g.dim:
                row.append(zero_vector(g.dim) + h.sc[i - g.dim][j - g.dim])
            else:
                row.append(zero_vector(n))
        table.append(tuple(row))
    return Algebra(name or f"{g.name}+{h.name}", n, tuple(table), LEIBNIZ)


def graph_subspace(t: EmbeddingTensor) -> Subspace:
    g, h = t.action.source, t.action.target
    vectors = [t.column(u) + h.basis_vector(u) for u in range(h.dim)]
    return Subspace.from_spanning(g.dim + h.dim, vectors)


def graph_subalgebra_check(t: EmbeddingTensor) -> CheckReport:
    """Whether the graph of T is closed under the hemisemidirect bracket."""
    require_coherent(t.action)
    big = hemisemidirect(t.action)
    graph = graph_subspace(t)
    h = t.action.target
    g = t.action.source
    bad = []
    for i, j in product(range(h.dim), repeat=2):
        vi = t.column(i) + h.basis_vector(i)
        vj = t.column(j) + h.basis_vector(j)
        w = big.bracket(vi, vj)
        res = graph.reduce(w)
        if not is_zero_vector(res):
            bad.append(Failure("graph-closure", (i, j), res))
    if bad:
        return failing("graph-subalgebra", bad, notes=(f"graph dim {graph.dim} in {g.dim + h.dim}",))
    return passing("graph-subalgebra")


def descendent(t: EmbeddingTensor, name: str | None = None) -> Algebra:
    """The Leibniz bracket [u,v]_T = rho(Tu)v + [u,v] induced on the target."""
    require_embedding_tensor(t)
    h = t.action.target
    table = tuple(
        tuple(vec_add(t.action.apply(t.column(i), h.basis_vector(j)), h.sc[i][j])
              for j in range(h.dim))
        for i in range(h.dim))
    return Algebra(name or f"{h.name}_desc", h.dim, table, LEIBNIZ)


def algebra_from_matrix_subspace(name: str, sub: Subspace, n: int) -> tuple[Algebra, tuple[Matrix, ...]]:
    """An abstract Lie algebra on the echelon basis of a commutator-closed matrix subspace."""
    mats = tuple(matrix_from_flat(n, v) for v in sub.basis)
    table = []
    for a in range(len(mats)):
        row = []
        for b in range(len(mats)):
            comm = (mats[a] @ mats[b]) - (mats[b] @ mats[a])
            coords = sub.coordinates(flatten_matrix(comm))
            if coords is None:
                raise DimensionMismatch(
                    f"subspace behind {name!r} is not closed under commutators")
            row.append(coords)
        table.append(tuple(row))
    return Algebra(name, len(mats), sc_table(table), "lie"), mats


def projection_tensor(h: Algebra) -> EmbeddingTensor:
    """The projection from coherent-derivations + h onto its first factor.

    The source is the coherent derivation algebra of ``h`` made abstract
    on its echelon basis; the big algebra is the direct sum, acted on by
    A . (B + v) = Av.
    """
    sub = coherent_derivation_algebra(h)
    g, mats = algebra_from_matrix_subspace(f"cder_{h.name}", sub, h.dim)
    big = direct_sum(g, h, f"cder_{h.name}+{h.name}", flavor="lie")
    m, n = g.dim, h.dim
    rho = []
    for a in range(m):
        op = Matrix.zero(m + n, m + n)
        rows = op.to_rows()
        for r in range(n):
            for c in range(n):
                rows[m + r][m + c] = mats[a].entry(r, c)
        rho.append(Matrix.from_rows(rows))
    action = Action(g, big, tuple(rho))
    if m:
        proj = Matrix.from_rows(
            [[(1 if j == i else 0) for j in range(m + n)] for i in range(m)])
    else:
        proj = Matrix.zero(0, n)
    return EmbeddingTensor(action, proj)
