"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.
Everything is immutable; subspaces are kept in reduced row echelon form
so that equality of subspaces is equality of representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Q = Fraction

Vec = tuple
Mat = tuple


def q(x) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating point is not allowed in exact computations")
    return Fraction(x)


def vec(*xs) -> Vec:
    return tuple(q(x) for x in xs)


def zero_vec(n: int) -> Vec:
    return (Q(0),) * n


def unit_vec(n: int, i: int) -> Vec:
    return tuple(Q(1) if j == i else Q(0) for j in range(n))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vscale(c, v: Vec) -> Vec:
    c = q(c)
    return tuple(c * a for a in v)


def vdot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Q(0))


def is_zero_vec(v: Vec) -> bool:
    return all(a == 0 for a in v)


def mat(rows) -> Mat:
    return tuple(tuple(q(x) for x in row) for row in rows)


def zero_mat(m: int, n: int) -> Mat:
    return tuple((Q(0),) * n for _ in range(m))


def identity(n: int) -> Mat:
    return tuple(unit_vec(n, i) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_vec(a: Mat, v: Vec) -> Vec:
    return tuple(vdot(row, v) for row in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(vdot(row, col) for col in bt) for row in a)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(vadd(r, s) for r, s in zip(a, b, strict=True))


def mat_scale(c, a: Mat) -> Mat:
    return tuple(vscale(c, row) for row in a)


def mat_eq_zero(a: Mat) -> bool:
    return all(is_zero_vec(row) for row in a)


def _rref_rational(rows) -> tuple[Mat, tuple[int, ...]]:
    work = [list(r) for r in rows]
    if not work:
        return (), ()
    n_cols = len(work[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = Q(1) / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    out = tuple(tuple(row) for row in work[:r])
    return out, tuple(pivots)


def rref(rows: Iterable[Vec], dedup: bool = False) -> tuple[Mat, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Elimination runs fraction-free over primitive integer rows (Bareiss),
    with the final reduced normalization done rationally on the rank-many
    surviving rows.
    """
    from math import gcd

    if dedup:
        seen = set()
        uniq = []
        for r in rows:
            r = tuple(r)
            if r in seen or all(x == 0 for x in r):
                continue
            seen.add(r)
            uniq.append(r)
        rows = uniq
    # scale every row to a primitive integer vector
    work = []
    for r in rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
            elif not isinstance(x, int):
                return _rref_rational(rows)
        ints = [int(x * den) for x in r]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        work.append(ints)
    if not work:
        return (), ()
    n_cols = len(work[0])
    pivots = []
    r = 0
    prev = 1
    for c in range(n_cols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        for i in range(r + 1, len(work)):
            f = work[i][c]
            if f or True:
                ri, rr = work[i], work[r]
                work[i] = [(p * a - f * b) // prev for a, b in zip(ri, rr)]
        pivots.append(c)
        prev = p
        r += 1
        if r == len(work):
            break
    # rational back-substitution on the rank-many rows
    top = [[Q(x) for x in row] for row in work[:r]]
    for i in range(r):
        c = pivots[i]
        inv = Q(1) / top[i][c]
        top[i] = [inv * x for x in top[i]]
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        for j in range(i):
            f = top[j][c]
            if f:
                top[j] = [x - f * y for x, y in zip(top[j], top[i])]
    return tuple(tuple(row) for row in top), tuple(pivots)


def rank(a: Mat) -> int:
    return len(rref(a)[0])


def kernel(a: Mat, n_cols: Optional[int] = None) -> Mat:
    """Canonical basis of the null space of a (rows = basis vectors)."""
    if n_cols is None:
        if not a:
            raise ValueError("kernel of empty matrix needs explicit n_cols")
        n_cols = len(a[0])
    rows = []
    seen = set()
    for r in a:
        r = tuple(r)
        for x in r:
            if x != 0:
                if x < 0:
                    r = tuple(-y for y in r)
                break
        else:
            continue
        if r not in seen:
            seen.add(r)
            rows.append(r)
    red, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n_cols
        v[f] = Q(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][f]
        basis.append(tuple(v))
    red_basis, _ = rref(basis)
    return red_basis


def solve(a: Mat, b: Vec) -> Optional[Vec]:
    """One solution of a x = b with free variables set to zero, or None."""
    if not a:
        return None if not is_zero_vec(b) else ()
    n = len(a[0])
    aug = [list(row) + [bb] for row, bb in zip(a, b, strict=True)]
    red, pivots = rref(aug)
    x = [Q(0)] * n
    for i, c in enumerate(pivots):
        if c == n:
            return None  # pivot in the constant column: inconsistent
        x[c] = red[i][n]
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    aug = [list(row) + list(unit_vec(n, i)) for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(red) != n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)


def is_invertible(a: Mat) -> bool:
    return bool(a) and len(a) == len(a[0]) and rank(a) == len(a)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient, basis rows in canonical RREF."""

    ambient: int
    rows: Mat

    @staticmethod
    def from_rows(ambient: int, rows: Iterable[Vec]) -> "Subspace":
        red, _ = rref(rows)
        return Subspace(ambient, red)

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace(ambient, identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Vec) -> bool:
        if is_zero_vec(v):
            return True
        units = self.unit_row_indices()
        if units is not None:
            uset = set(units)
            return all(x == 0 or j in uset for j, x in enumerate(v))
        red, _ = rref(self.rows + (v,))
        return len(red) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def unit_row_indices(self) -> Optional[tuple]:
        """Pivot indices when every basis row is a standard unit vector."""
        idxs = []
        for row in self.rows:
            nz = [j for j, x in enumerate(row) if x != 0]
            if len(nz) != 1 or row[nz[0]] != 1:
                return None
            idxs.append(nz[0])
        return tuple(idxs)

    def coords(self, v: Vec) -> Vec:
        """Coefficients of v in the RREF basis; raises if v is outside."""
        if self.dim == 0:
            if is_zero_vec(v):
                return ()
            raise ValueError("vector not in subspace")
        units = self.unit_row_indices()
        if units is not None:
            uset = set(units)
            for j, x in enumerate(v):
                if x != 0 and j not in uset:
                    raise ValueError("vector not in subspace")
            return tuple(v[j] for j in units)
        cols = transpose(self.rows)
        sol = solve(cols, v)
        if sol is None or not is_zero_vec(vsub(mat_vec(cols, sol), v)):
            raise ValueError("vector not in subspace")
        return sol

    def add(self, other: "Subspace") -> "Subspace":
        return Subspace.from_rows(self.ambient, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x in both spans: solve [A^T | -B^T] on stacked coefficients
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        cols = tuple(
            tuple(self.rows[i][c] for i in range(self.dim))
            + tuple(-other.rows[j][c] for j in range(other.dim))
            for c in range(self.ambient)
        )
        ker = kernel(cols, self.dim + other.dim)
        vecs = []
        for co in ker:
            v = zero_vec(self.ambient)
            for i in range(self.dim):
                v = vadd(v, vscale(co[i], self.rows[i]))
            vecs.append(v)
        return Subspace.from_rows(self.ambient, vecs)

    def complement_pivots(self) -> tuple[int, ...]:
        """Standard basis indices completing the subspace to the ambient."""
        _, pivots = rref(self.rows)
        return tuple(c for c in range(self.ambient) if c not in pivots)


def signature(m: Mat) -> tuple[int, int, int]:
    """Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Exact congruence diagonalization; zero diagonal pivots are repaired by
    row/column addition, never by perturbation.
    """
    n = len(m)
    a = [list(row) for row in m]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    n_pos = n_neg = n_zero = 0
    idx = list(range(n))

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_row_col(i, j, c):
        # row_i += c row_j, col_i += c col_j (congruence by elementary matrix)
        for k in range(n):
            a[i][k] += c * a[j][k]
        for k in range(n):
            a[k][i] += c * a[k][j]

    p = 0
    while p < n:
        if a[p][p] == 0:
            piv = None
            for i in range(p + 1, n):
                if a[i][i] != 0:
                    piv = i
                    break
            if piv is not None:
                swap(p, piv)
            else:
                off = None
                for i in range(p, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            off = (i, j)
                            break
                    if off:
                        break
                if off is None:
                    n_zero += n - p
                    break
                i, j = off
                add_row_col(i, j, Q(1))  # makes a[i][i] = 2 a[i][j] != 0
                if i != p:
                    swap(p, i)
        d = a[p][p]
        if d > 0:
            n_pos += 1
        else:
            n_neg += 1
        for i in range(p + 1, n):
            if a[i][p] != 0:
                add_row_col(i, p, -a[i][p] / d)
        p += 1
    return n_pos, n_neg, n_zero
