"""Exact linear algebra over the rationals.

Matrices are row-major lists of lists, vectors are lists; entries are ints
or ``fractions.Fraction`` (the two interoperate exactly). A subspace is
stored canonically as the reduced row echelon form of any spanning set, as
a tuple of tuples, so equal subspaces compare and hash equal.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, InternalInconsistency

Vec = list
Mat = list
Subspace = tuple


def frac(x) -> Fraction:
    """Coerce an int, Fraction, or "p/q" string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not an exact rational: {x!r}") from exc
    raise DomainError(f"not an exact rational: {x!r}")


def to_vec(entries) -> Vec:
    return [frac(x) for x in entries]


def to_mat(rows) -> Mat:
    m = [[frac(x) for x in row] for row in rows]
    if m and any(len(row) != len(m[0]) for row in m):
        raise DomainError("ragged matrix")
    return m


def identity(d: int) -> Mat:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def zero_vec(d: int) -> Vec:
    return [Fraction(0)] * d


def transpose(a: Mat) -> Mat:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    out = []
    for row in a:
        out.append([sum(x * y for x, y in zip(row, col) if x) for col in bt])
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_pow(a: Mat, k: int) -> Mat:
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(rows) -> tuple[list, list]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[frac(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols: int | None = None) -> list:
    """Basis of {x : A x = 0}; ``ncols`` is required when A has no rows."""
    if ncols is None:
        if not rows:
            raise DomainError("nullspace of empty system needs ncols")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zero_vec(ncols)
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


def solve(a: Mat, b: Vec):
    """One solution of A x = b, or None if the system is inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [row + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = zero_vec(ncols)
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return x


def det(a: Mat) -> Fraction:
    d = len(a)
    m = [[frac(x) for x in row] for row in a]
    sign = 1
    out = Fraction(1)
    for c in range(d):
        pivot = next((i for i in range(c, d) if m[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        out *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, d):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * out


def inverse(a: Mat) -> Mat:
    d = len(a)
    aug = [list(map(frac, row)) + ident for row, ident in zip(a, identity(d))]
    red, pivots = rref(aug)
    if pivots != list(range(d)):
        raise DomainError("matrix is singular")
    return [row[d:] for row in red]


# -- subspaces (canonical row spans) ----------------------------------------

def span(vectors) -> Subspace:
    """Canonical form of the span of the given vectors."""
    red, _ = rref(vectors)
    return tuple(tuple(row) for row in red)


def full_space(d: int) -> Subspace:
    return tuple(tuple(row) for row in identity(d))


def zero_space() -> Subspace:
    return ()


def sub_dim(s: Subspace) -> int:
    return len(s)


def contains(s: Subspace, vec) -> bool:
    v = to_vec(vec)
    for row in s:
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is not None and v[lead]:
            f = v[lead]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def sub_leq(a: Subspace, b: Subspace) -> bool:
    return all(contains(b, row) for row in a)


def sub_add(a: Subspace, b: Subspace) -> Subspace:
    return span(list(a) + list(b))


def sub_intersect(a: Subspace, b: Subspace, d: int) -> Subspace:
    """Intersection of two row spans inside an ambient space of dim d."""
    if not a or not b:
        return zero_space()
    ann_a = nullspace([list(r) for r in a], d)
    ann_b = nullspace([list(r) for r in b], d)
    joint = ann_a + ann_b
    if not joint:
        return full_space(d)
    return span(nullspace(joint, d))


def map_image(x: Mat, s: Subspace) -> Subspace:
    return span([mat_vec(x, list(row)) for row in s])


def map_preimage(x: Mat, s: Subspace, d: int) -> Subspace:
    """{w : x w lies in the row span s}."""
    ann = nullspace([list(r) for r in s], d) if s else identity(d)
    rows = [mat_vec(transpose(x), y) for y in ann]
    if not rows:
        return full_space(d)
    return span(nullspace(rows, d))


# -- exact linear feasibility ------------------------------------------------

def nonneg_combination(columns, target):
    """Exact feasibility of sum_j c_j * columns[j] = target with c_j >= 0.

    Phase-1 simplex with Bland's rule over Fractions. Returns one
    coefficient vector, or None when infeasible.
    """
    m = len(target)
    n = len(columns)
    if m == 0:
        return [Fraction(0)] * n
    rows = [[frac(columns[j][i]) for j in range(n)] for i in range(m)]
    b = [frac(t) for t in target]
    for i in range(m):
        if b[i] < 0:
            rows[i] = [-x for x in rows[i]]
            b[i] = -b[i]
    ncols = n + m
    tableau = [
        rows[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]]
        for i in range(m)
    ]
    basis = list(range(n, n + m))
    # reduced costs for "minimize the sum of artificials"
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(n):
        obj[j] = -sum(tableau[i][j] for i in range(m))
    obj[ncols] = -sum(b)

    while True:
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            if tableau[i][enter] > 0:
                ratio = tableau[i][ncols] / tableau[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best, leave = ratio, i
        if leave is None:
            raise InternalInconsistency("phase-1 objective unbounded")
        inv = 1 / tableau[leave][enter]
        tableau[leave] = [x * inv for x in tableau[leave]]
        for i in range(m):
            if i != leave and tableau[i][enter]:
                f = tableau[i][enter]
                tableau[i] = [
                    x - f * y for x, y in zip(tableau[i], tableau[leave])
                ]
        if obj[enter]:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tableau[leave])]
        basis[leave] = enter

    if obj[ncols] != 0:
        return None
    coeffs = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            coeffs[var] = tableau[i][ncols]
    return coeffs
