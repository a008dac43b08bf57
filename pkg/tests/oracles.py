"""Independent oracles the test suite uses to cross-check the package.

Everything here deliberately avoids the package's own linear algebra:
ranks come from fraction-free integer elimination, ideal closures from
a plain Gaussian span, shuffles from filtering full permutation groups,
and the Heisenberg tensor family from its closed polynomial system.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import lcm


def bareiss_rank(rows) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    cleared = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        cleared.append([int(f * mult) for f in fracs])
    m = [row[:] for row in cleared if any(row)]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        sel = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        for i in range(r + 1, n_rows):
            for j in range(c + 1, n_cols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r


def _span_insert(basis: list[list[Fraction]], vec) -> bool:
    """Insert into a forward-eliminated span; True if the span grew."""
    v = [Fraction(x) for x in vec]
    for row in basis:
        piv = next(i for i, x in enumerate(row) if x != 0)
        if v[piv] != 0:
            c = v[piv] / row[piv]
            v = [a - c * b for a, b in zip(v, row)]
    if any(x != 0 for x in v):
        basis.append(v)
        basis.sort(key=lambda row: next(i for i, x in enumerate(row) if x != 0))
        return True
    return False


def span_dim(vectors) -> int:
    basis: list[list[Fraction]] = []
    for v in vectors:
        _span_insert(basis, v)
    return len(basis)


def span_contains(vectors, probe) -> bool:
    basis: list[list[Fraction]] = []
    for v in vectors:
        _span_insert(basis, v)
    return not _span_insert(basis, probe)


def close_ideal(bracket, dim: int, seeds) -> list[list[Fraction]]:
    """Two-sided ideal closure of the seed span under a bilinear bracket.

    ``bracket(x, y)`` takes and returns coordinate sequences.  Returns a
    spanning list (its length is the dimension).
    """
    basis: list[list[Fraction]] = []
    for s in seeds:
        _span_insert(basis, s)
    changed = True
    while changed:
        changed = False
        units = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
        for row in list(basis):
            for e in units:
                if _span_insert(basis, bracket(e, row)):
                    changed = True
                if _span_insert(basis, bracket(row, e)):
                    changed = True
    return basis


def shuffles_by_filter(i: int, k: int):
    """All (i, k)-shuffles found by filtering the full permutation group."""
    n = i + k
    if i == 0 or k == 0:
        return [(tuple(range(n)), 1)]
    out = []
    for perm in permutations(range(n)):
        if all(perm[a] < perm[a + 1] for a in range(i - 1)) and \
                all(perm[a] < perm[a + 1] for a in range(i, n - 1)):
            inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
            out.append((perm, -1 if inv % 2 else 1))
    return out


def heisenberg_net_system(rows) -> bool:
    """The closed polynomial system cutting out the tensor family on the
    3-dim two-step nilpotent algebra under its adjoint action."""
    r = [[Fraction(x) for x in row] for row in rows]
    r11, r12, r13 = r[0]
    r21, r22, r23 = r[1]
    r31, r32, r33 = r[2]
    eqs = [
        r13 * r21, r21 * r23, r21 * r33,
        r12 * r13, r12 * r23, r12 * r33,
        (r11 + 1) * r13, (r11 + 1) * r23,
        r11 * r22 - r12 * r21 - (r11 + 1) * r33,
        (r22 + 1) * r13, (r22 + 1) * r23,
        r12 * r21 - r11 * r22 + (r22 + 1) * r33,
        r11 * r23 - r13 * r21,
        r13 * r23, r23 * r23,
        r13 * r21 - r11 * r23 + r23 * r33,
        r12 * r23 - r13 * r22,
        r13 * r13,
        r13 * r22 - r12 * r23 - r13 * r33,
    ]
    return all(e == 0 for e in eqs)
