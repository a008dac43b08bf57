"""Graded brackets on multilinear maps and the Maurer-Cartan checks.

Conventions, fixed once for the whole package:

* a map of arity ``p`` has degree ``p - 1``;
* shuffles are enumerated in lexicographic order of the first block and
  signed by inversion count;
* the composition bracket on maps of a space into itself is

      [P, Q] = P o Q - (-1)^{pq} Q o P,
      (P o_k Q)(x_1..x_{p+q+1}) =
          sum over (k-1, q)-shuffles s of the first k-1+q arguments of
          (-1)^{(k-1)q} sgn(s) P(x_{s(1)}, .., x_{s(k-1)},
                                 Q(x_{s(k)}, .., x_{s(k+q-1)}, x_{k+q}),
                                 x_{k+q+1}, .., x_{p+q+1});

* for maps from a Lie algebra h into a Lie algebra g acted on it, the
  derived bracket and the differential induced by the bracket of h are
  evaluated by their closed formulas below, and are cross-checked in
  the test suite against the composition-bracket route on the direct
  sum, which is where they come from.

Dense coefficient tables make the arity cap (default 4) a hard guard
against the n^p blow-up; the cap is a runtime argument everywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .algebras import Algebra
from .errors import ArityCapExceeded, DimensionMismatch
from .linalg import Matrix, Vector, ZERO, is_zero_vector
from .reports import CheckReport, Failure, failing, passing
from .tensors import Action, EmbeddingTensor, require_coherent, require_embedding_tensor

DEFAULT_ARITY_CAP = 4


# ---------------------------------------------------------------------------
# dense multilinear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultiMap:
    """A dense multilinear map, all tensor factors drawn from one space.

    ``coeffs`` is flat with index ((i_1 n + i_2) n + ...) m + j for the
    e_j-coordinate of f(e_{i_1}, .., e_{i_p}).
    """

    arity: int
    domain_dim: int
    codomain_dim: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise DimensionMismatch("arity must be at least 1")
        expected = (self.domain_dim ** self.arity) * self.codomain_dim
        if len(self.coeffs) != expected:
            raise DimensionMismatch(
                f"coefficient table needs {expected} entries, got {len(self.coeffs)}")

    @classmethod
    def from_function(cls, arity: int, domain_dim: int, codomain_dim: int, fn) -> "MultiMap":
        coeffs: list[Fraction] = []
        for idxs in product(range(domain_dim), repeat=arity):
            v = fn(idxs)
            if len(v) != codomain_dim:
                raise DimensionMismatch("value of the wrong dimension")
            coeffs.extend(v)
        return cls(arity, domain_dim, codomain_dim, tuple(coeffs))

    @classmethod
    def zero(cls, arity: int, domain_dim: int, codomain_dim: int) -> "MultiMap":
        return cls(arity, domain_dim, codomain_dim,
                   (ZERO,) * ((domain_dim ** arity) * codomain_dim))

    def _offset(self, idxs: tuple[int, ...]) -> int:
        off = 0
        for i in idxs:
            off = off * self.domain_dim + i
        return off * self.codomain_dim

    def value(self, idxs: tuple[int, ...]) -> Vector:
        off = self._offset(idxs)
        return self.coeffs[off: off + self.codomain_dim]

    def value_with_vector(self, pre: tuple[int, ...], vec: Vector,
                          post: tuple[int, ...]) -> Vector:
        """Evaluate with one argument slot holding a vector, the rest basis."""
        out = [ZERO] * self.codomain_dim
        for m, c in enumerate(vec):
            if c == 0:
                continue
            val = self.value(pre + (m,) + post)
            for k, x in enumerate(val):
                if x != 0:
                    out[k] += c * x
        return tuple(out)

    def __add__(self, other: "MultiMap") -> "MultiMap":
        self._same_shape(other)
        return MultiMap(self.arity, self.domain_dim, self.codomain_dim,
                        tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "MultiMap") -> "MultiMap":
        self._same_shape(other)
        return MultiMap(self.arity, self.domain_dim, self.codomain_dim,
                        tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "MultiMap":
        return self.scale(-1)

    def scale(self, c) -> "MultiMap":
        c = Fraction(c)
        return MultiMap(self.arity, self.domain_dim, self.codomain_dim,
                        tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def nonzero_entries(self):
        """Yield (index tuple, value vector) over nonzero positions."""
        for idxs in product(range(self.domain_dim), repeat=self.arity):
            v = self.value(idxs)
            if not is_zero_vector(v):
                yield idxs, v

    def to_nested(self):
        from .linalg import scalar_to_json

        def build(prefix: tuple[int, ...], depth: int):
            if depth == self.arity:
                return [scalar_to_json(x) for x in self.value(prefix)]
            return [build(prefix + (i,), depth + 1) for i in range(self.domain_dim)]

        return build((), 0)

    def _same_shape(self, other: "MultiMap") -> None:
        if (self.arity, self.domain_dim, self.codomain_dim) != \
                (other.arity, other.domain_dim, other.codomain_dim):
            raise DimensionMismatch("multilinear maps of different shapes")


def tensor_as_multimap(t: EmbeddingTensor) -> MultiMap:
    return matrix_as_multimap(t.matrix)


def matrix_as_multimap(m: Matrix) -> MultiMap:
    """A matrix seen as an arity-1 map, column u giving the value on e_u."""
    return MultiMap.from_function(1, m.cols, m.rows, lambda idxs: m.col(idxs[0]))


def multimap_as_matrix(f: MultiMap) -> Matrix:
    if f.arity != 1:
        raise DimensionMismatch("only arity-1 maps are matrices")
    return Matrix.from_columns([f.value((i,)) for i in range(f.domain_dim)])


# ---------------------------------------------------------------------------
# shuffles
# ---------------------------------------------------------------------------

def _inversions(perm: tuple[int, ...]) -> int:
    count = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                count += 1
    return count


@lru_cache(maxsize=None)
def shuffles(i: int, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (i, k)-shuffles of {0..i+k-1} with their signs.

    A shuffle is increasing on the first i and on the last k positions;
    when i or k is 0 the only shuffle is the identity.
    """
    if i < 0 or k < 0:
        raise DimensionMismatch("shuffle block sizes must be nonnegative")
    n = i + k
    if i == 0 or k == 0:
        return ((tuple(range(n)), 1),)
    out = []
    universe = range(n)
    for first in combinations(universe, i):
        rest = tuple(x for x in universe if x not in first)
        perm = first + rest
        out.append((perm, -1 if _inversions(perm) % 2 else 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# the composition bracket
# ---------------------------------------------------------------------------

def _circ(p: MultiMap, q: MultiMap) -> MultiMap:
    n = p.domain_dim
    qdeg = q.arity - 1
    res_arity = p.arity + qdeg

    def entry(idxs: tuple[int, ...]) -> Vector:
        acc = [ZERO] * n
        for k in range(1, p.arity + 1):
            ksign = -1 if ((k - 1) * qdeg) % 2 else 1
            for perm, s in shuffles(k - 1, qdeg):
                shuffled = tuple(idxs[perm[t]] for t in range(k - 1 + qdeg))
                qval = q.value(shuffled[k - 1:] + (idxs[k - 1 + qdeg],))
                if is_zero_vector(qval):
                    continue
                val = p.value_with_vector(shuffled[:k - 1], qval, idxs[k + qdeg:])
                sign = ksign * s
                for t, x in enumerate(val):
                    if x != 0:
                        acc[t] += sign * x
        return tuple(acc)

    return MultiMap.from_function(res_arity, n, n, entry)


def balavoine(p: MultiMap, q: MultiMap, arity_cap: int = DEFAULT_ARITY_CAP) -> MultiMap:
    """The graded bracket [P, Q] = P o Q - (-1)^{pq} Q o P on self-maps."""
    if p.domain_dim != p.codomain_dim or q.domain_dim != q.codomain_dim:
        raise DimensionMismatch("the bracket needs maps of a space into itself")
    if p.domain_dim != q.domain_dim:
        raise DimensionMismatch("the two maps live on different spaces")
    pdeg, qdeg = p.arity - 1, q.arity - 1
    res_arity = pdeg + qdeg + 1
    if res_arity > arity_cap:
        raise ArityCapExceeded(f"result arity {res_arity} above cap {arity_cap}")
    first = _circ(p, q)
    second = _circ(q, p)
    if (pdeg * qdeg) % 2:
        return first + second
    return first - second


def mc_check_leibniz(omega: MultiMap, arity_cap: int = DEFAULT_ARITY_CAP) -> CheckReport:
    """Whether an arity-2 table squares to zero under the composition bracket.

    Zero bracket square is exactly the Leibniz identity for the product
    the table defines.
    """
    if omega.arity != 2:
        raise DimensionMismatch("a candidate product has arity 2")
    sq = balavoine(omega, omega, arity_cap=arity_cap)
    bad = [Failure("bracket-square", idxs, v) for idxs, v in sq.nonzero_entries()]
    if bad:
        return failing("maurer-cartan-leibniz", bad)
    return passing("maurer-cartan-leibniz")


def multimap_from_algebra(a: Algebra) -> MultiMap:
    return MultiMap.from_function(2, a.dim, a.dim, lambda ij: a.sc[ij[0]][ij[1]])


def algebra_from_multimap(omega: MultiMap, name: str, flavor: str = "unchecked") -> Algebra:
    if omega.arity != 2 or omega.domain_dim != omega.codomain_dim:
        raise DimensionMismatch("an algebra table is a square arity-2 map")
    n = omega.domain_dim
    table = tuple(tuple(omega.value((i, j)) for j in range(n)) for i in range(n))
    return Algebra(name, n, table, flavor)


# ---------------------------------------------------------------------------
# the differential and the derived bracket on maps h -> g
# ---------------------------------------------------------------------------

def _check_cochain(f: MultiMap, action: Action) -> None:
    if f.domain_dim != action.target.dim or f.codomain_dim != action.source.dim:
        raise DimensionMismatch(
            f"expected a map from the {action.target.dim}-dim space into the "
            f"{action.source.dim}-dim one")


def bracket_differential(f: MultiMap, h: Algebra,
                         arity_cap: int = DEFAULT_ARITY_CAP) -> MultiMap:
    """The degree-one differential inserting the bracket of h pairwise.

    (df)(v_1..v_{n+1}) = sum_{i<j} (-1)^{n-1+i}
                         f(v_1.. v^_i ..v_{j-1}, [v_i,v_j], v_{j+1}..).
    """
    if f.domain_dim != h.dim:
        raise DimensionMismatch("map domain and algebra dimension differ")
    n = f.arity
    if n + 1 > arity_cap:
        raise ArityCapExceeded(f"result arity {n + 1} above cap {arity_cap}")

    def entry(idxs: tuple[int, ...]) -> Vector:
        acc = [ZERO] * f.codomain_dim
        for i0 in range(n + 1):
            sign = -1 if (n + i0) % 2 else 1
            for j0 in range(i0 + 1, n + 1):
                br = h.sc[idxs[i0]][idxs[j0]]
                if is_zero_vector(br):
                    continue
                reduced = idxs[:i0] + idxs[i0 + 1:]
                val = f.value_with_vector(reduced[:j0 - 1], br, reduced[j0:])
                for t, x in enumerate(val):
                    if x != 0:
                        acc[t] += sign * x
        return tuple(acc)

    return MultiMap.from_function(n + 1, f.domain_dim, f.codomain_dim, entry)


def derived_bracket(theta: MultiMap, phi: MultiMap, action: Action,
                    arity_cap: int = DEFAULT_ARITY_CAP) -> MultiMap:
    """The graded bracket on maps h -> g twisted by the action.

    Sum of three shuffle groups: the action of phi-values inserted into
    theta, the source bracket of a theta-value against a phi-value, and
    the action of theta-values inserted into phi.
    """
    _check_cochain(theta, action)
    _check_cochain(phi, action)
    g, h = action.source, action.target
    m, n = theta.arity, phi.arity
    total = m + n
    if total > arity_cap:
        raise ArityCapExceeded(f"result arity {total} above cap {arity_cap}")

    def entry(idxs: tuple[int, ...]) -> Vector:
        acc = [ZERO] * g.dim

        def add(sign: int, val: Vector) -> None:
            for t, x in enumerate(val):
                if x != 0:
                    acc[t] += sign * x

        for k in range(1, m + 1):
            base = -1 if ((k - 1) * n + 1) % 2 else 1
            for perm, s in shuffles(k - 1, n):
                shuffled = tuple(idxs[perm[t]] for t in range(k - 1 + n))
                w = phi.value(shuffled[k - 1:])
                if is_zero_vector(w):
                    continue
                slot = action.apply(w, h.basis_vector(idxs[k - 1 + n]))
                if is_zero_vector(slot):
                    continue
                add(base * s,
                    theta.value_with_vector(shuffled[:k - 1], slot, idxs[k + n:]))
        base = -1 if (m * n + 1) % 2 else 1
        for perm, s in shuffles(m, n):
            a = theta.value(tuple(idxs[perm[t]] for t in range(m)))
            if is_zero_vector(a):
                continue
            b = phi.value(tuple(idxs[perm[t]] for t in range(m, total)))
            if is_zero_vector(b):
                continue
            add(base * s, g.bracket(a, b))
        for k in range(1, n + 1):
            base = -1 if (m * (k + n - 1)) % 2 else 1
            for perm, s in shuffles(k - 1, m):
                shuffled = tuple(idxs[perm[t]] for t in range(k - 1 + m))
                w = theta.value(shuffled[k - 1:])
                if is_zero_vector(w):
                    continue
                slot = action.apply(w, h.basis_vector(idxs[k - 1 + m]))
                if is_zero_vector(slot):
                    continue
                add(base * s,
                    phi.value_with_vector(shuffled[:k - 1], slot, idxs[k + m:]))
        return tuple(acc)

    return MultiMap.from_function(total, h.dim, g.dim, entry)


# ---------------------------------------------------------------------------
# the direct-sum route
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedContext:
    """The two product tables of the direct sum g + h used by the nested route.

    ``mu_g`` is the hemisemidirect bracket [x,y] + rho(x)v + [u,v] and
    ``mu_h`` is the bracket of h alone, both as arity-2 self-maps of the
    direct sum.
    """

    action: Action
    mu_g: MultiMap
    mu_h: MultiMap

    @classmethod
    def from_action(cls, action: Action) -> "GradedContext":
        require_coherent(action)
        g, h = action.source, action.target
        ng, nh = g.dim, h.dim
        ntot = ng + nh

        def mu_g_entry(ij: tuple[int, ...]) -> Vector:
            i, j = ij
            if i < ng and j < ng:
                return g.sc[i][j] + (ZERO,) * nh
            if i < ng and j >= ng:
                return (ZERO,) * ng + action.rho[i].col(j - ng)
            if i >= ng and j >= ng:
                return (ZERO,) * ng + h.sc[i - ng][j - ng]
            return (ZERO,) * ntot

        def mu_h_entry(ij: tuple[int, ...]) -> Vector:
            i, j = ij
            if i >= ng and j >= ng:
                return (ZERO,) * ng + h.sc[i - ng][j - ng]
            return (ZERO,) * ntot

        return cls(action,
                   MultiMap.from_function(2, ntot, ntot, mu_g_entry),
                   MultiMap.from_function(2, ntot, ntot, mu_h_entry))

    def check(self, arity_cap: int = DEFAULT_ARITY_CAP) -> CheckReport:
        """The three vanishing brackets that make the nested route work."""
        pairs = (("mu-g-square", self.mu_g, self.mu_g),
                 ("mu-h-square", self.mu_h, self.mu_h),
                 ("mu-g-mu-h", self.mu_g, self.mu_h))
        for law, a, b in pairs:
            br = balavoine(a, b, arity_cap=arity_cap)
            for idxs, v in br.nonzero_entries():
                return failing("graded-context", [Failure(law, idxs, v)])
        return passing("graded-context")


def embed_cochain(f: MultiMap, action: Action) -> MultiMap:
    """Zero-extension of a map h -> g to a self-map of the direct sum."""
    _check_cochain(f, action)
    ng, nh = action.source.dim, action.target.dim
    ntot = ng + nh

    def entry(idxs: tuple[int, ...]) -> Vector:
        if any(i < ng for i in idxs):
            return (ZERO,) * ntot
        inner = f.value(tuple(i - ng for i in idxs))
        return inner + (ZERO,) * nh

    return MultiMap.from_function(f.arity, ntot, ntot, entry)


def restrict_cochain(big: MultiMap, action: Action) -> MultiMap:
    """Restriction of a direct-sum self-map back to a map h -> g.

    The h-components on h-only arguments must vanish; anything else
    means the map does not come from the embedded subspace.
    """
    ng, nh = action.source.dim, action.target.dim

    def entry(idxs: tuple[int, ...]) -> Vector:
        v = big.value(tuple(i + ng for i in idxs))
        if not is_zero_vector(v[ng:]):
            raise DimensionMismatch("map does not restrict to a map into the source")
        return v[:ng]

    return MultiMap.from_function(big.arity, nh, ng, entry)


def derived_bracket_nested(theta: MultiMap, phi: MultiMap, ctx: GradedContext,
                           arity_cap: int = DEFAULT_ARITY_CAP) -> MultiMap:
    """The derived bracket computed as (-1)^{m-1} [[mu_g, theta], phi] upstairs."""
    inner = balavoine(ctx.mu_g, embed_cochain(theta, ctx.action), arity_cap=arity_cap)
    outer = balavoine(inner, embed_cochain(phi, ctx.action), arity_cap=arity_cap)
    restricted = restrict_cochain(outer, ctx.action)
    if (theta.arity - 1) % 2:
        return -restricted
    return restricted


# ---------------------------------------------------------------------------
# Maurer-Cartan checks for tensors and their deformations
# ---------------------------------------------------------------------------

def _mc_residual(t_map: MultiMap, action: Action, arity_cap: int) -> MultiMap:
    half = Fraction(1, 2)
    return bracket_differential(t_map, action.target, arity_cap=arity_cap) + \
        derived_bracket(t_map, t_map, action, arity_cap=arity_cap).scale(half)


def mc_check_tensor(t: EmbeddingTensor, arity_cap: int = DEFAULT_ARITY_CAP) -> CheckReport:
    """Whether d T + [T,T]/2 vanishes; agrees with the direct tensor check."""
    require_coherent(t.action)
    residual = _mc_residual(tensor_as_multimap(t), t.action, arity_cap)
    bad = [Failure("maurer-cartan", idxs, v) for idxs, v in residual.nonzero_entries()]
    if bad:
        return failing("maurer-cartan-tensor", bad)
    return passing("maurer-cartan-tensor")


def twisted_differential(t: EmbeddingTensor, f: MultiMap,
                         arity_cap: int = DEFAULT_ARITY_CAP) -> MultiMap:
    """The differential twisted by a verified tensor: d f + [T, f]."""
    require_embedding_tensor(t)
    return bracket_differential(f, t.action.target, arity_cap=arity_cap) + \
        derived_bracket(tensor_as_multimap(t), f, t.action, arity_cap=arity_cap)


def mc_check_deformation(t: EmbeddingTensor, t_prime: Matrix,
                         arity_cap: int = DEFAULT_ARITY_CAP) -> CheckReport:
    """Whether d_T T' + [T',T']/2 vanishes; agrees with checking T + T'."""
    require_embedding_tensor(t)
    tp = matrix_as_multimap(t_prime)
    half = Fraction(1, 2)
    residual = twisted_differential(t, tp, arity_cap=arity_cap) + \
        derived_bracket(tp, tp, t.action, arity_cap=arity_cap).scale(half)
    bad = [Failure("maurer-cartan", idxs, v) for idxs, v in residual.nonzero_entries()]
    if bad:
        return failing("maurer-cartan-deformation", bad)
    return passing("maurer-cartan-deformation")
