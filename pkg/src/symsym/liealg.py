"""Finite-dimensional Lie algebras over Q given by structure constants.

The structure tensor c[i][j] is the coordinate vector of [b_i, b_j];
antisymmetry is enforced at construction, the Jacobi identity is checked
(never assumed) by jacobi_check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import (
    Mat,
    Q,
    Subspace,
    Vec,
    identity,
    inverse,
    is_zero_vec,
    kernel,
    mat_mul,
    mat_vec,
    q,
    rref,
    transpose,
    unit_vec,
    vadd,
    vscale,
    zero_vec,
)


class LieAlgebraError(ValueError):
    pass


class InternalConsistencyError(RuntimeError):
    """A post-verified structural computation failed its own check."""


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    labels: tuple
    c: tuple  # c[i][j] is a Vec of length dim

    def __post_init__(self):
        if len(self.labels) != self.dim or len(self.c) != self.dim:
            raise LieAlgebraError("dimension mismatch in structure data")
        if len(set(self.labels)) != self.dim:
            raise LieAlgebraError("basis labels must be distinct")
        for i in range(self.dim):
            if len(self.c[i]) != self.dim:
                raise LieAlgebraError("dimension mismatch in structure data")
            for j in range(self.dim):
                row = self.c[i][j]
                if len(row) != self.dim:
                    raise LieAlgebraError("dimension mismatch in structure data")
                for a, b in zip(row, self.c[j][i]):
                    if a != -b:
                        raise LieAlgebraError(
                            "structure constants violate antisymmetry at "
                            f"({self.labels[i]}, {self.labels[j]})"
                        )

    def index(self, label) -> int:
        return self.labels.index(label)

    def sparse(self):
        """c as nested tuples of (k, coeff) nonzeros; cached, used by hot loops."""
        cached = getattr(self, "_sparse_cache", None)
        if cached is None:
            cached = tuple(
                tuple(
                    tuple((k, v) for k, v in enumerate(self.c[i][j]) if v != 0)
                    for j in range(self.dim)
                )
                for i in range(self.dim)
            )
            object.__setattr__(self, "_sparse_cache", cached)
        return cached


def from_table(labels: Sequence[str], table: dict) -> LieAlgebra:
    """Build a LieAlgebra from a sparse bracket table.

    table maps (label_a, label_b) to a dict {label: coeff} or a single
    label string (coefficient 1).  Unspecified brackets are zero; the
    antisymmetric counterparts are filled in automatically.
    """
    labels = tuple(labels)
    n = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    c = [[list(zero_vec(n)) for _ in range(n)] for _ in range(n)]
    for (a, b), rhs in table.items():
        i, j = idx[a], idx[b]
        if isinstance(rhs, str):
            rhs = {rhs: 1}
        for lab, coeff in rhs.items():
            c[i][j][idx[lab]] += q(coeff)
            c[j][i][idx[lab]] -= q(coeff)
    return LieAlgebra(n, labels, tuple(tuple(tuple(r) for r in row) for row in c))


def abelian(labels: Sequence[str]) -> LieAlgebra:
    return from_table(labels, {})


def bracket(A: LieAlgebra, x: Vec, y: Vec) -> Vec:
    """Bilinear extension of the structure tensor."""
    if len(x) != A.dim or len(y) != A.dim:
        raise LieAlgebraError("vector dimension does not match the algebra")
    xs = [(i, xi) for i, xi in enumerate(x) if xi]
    ys = [(j, yj) for j, yj in enumerate(y) if yj]
    out = [Q(0)] * A.dim
    sp = A.sparse()
    for i, xi in xs:
        spi = sp[i]
        for j, yj in ys:
            f = xi * yj
            for k, v in spi[j]:
                out[k] += f * v
    return tuple(out)


def ad_matrix(A: LieAlgebra, x: Vec) -> Mat:
    """Matrix of ad(x) = [x, -] in the algebra basis (columns = images)."""
    cols = [bracket(A, x, unit_vec(A.dim, j)) for j in range(A.dim)]
    return tuple(tuple(cols[j][k] for j in range(A.dim)) for k in range(A.dim))


@dataclass(frozen=True)
class JacobiReport:
    passed: bool
    max_norm: Fraction
    violations: tuple  # triples (i, j, k) with nonzero Jacobiator

    def __bool__(self):
        return self.passed


def jacobi_check(A: LieAlgebra) -> JacobiReport:
    """Exact check of [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj] = 0."""
    n = A.dim
    sp = A.sparse()
    nz = [[bool(sp[i][j]) for j in range(n)] for i in range(n)]
    max_norm = Q(0)
    violations = []

    def term(acc, pair, k, sign):
        for m, v in pair:
            for t, w in sp[m][k]:
                acc[t] = acc.get(t, Q(0)) + sign * v * w

    for i in range(n):
        for j in range(i + 1, n):
            pij = sp[i][j]
            for k in range(j + 1, n):
                if not (nz[i][j] or nz[j][k] or nz[i][k]):
                    continue
                acc = {}
                if pij:
                    term(acc, pij, k, Q(1))  # [[bi,bj],bk]
                if nz[j][k]:
                    term(acc, sp[j][k], i, Q(1))  # [[bj,bk],bi]
                if nz[i][k]:
                    term(acc, sp[i][k], j, Q(-1))  # [[bk,bi],bj] = -[[bi,bk],bj]
                bad = max((abs(v) for v in acc.values()), default=Q(0))
                if bad > 0:
                    violations.append((i, j, k))
                    if bad > max_norm:
                        max_norm = bad
    return JacobiReport(not violations, max_norm, tuple(violations))


def killing_form(A: LieAlgebra) -> Mat:
    """beta(b_i, b_j) = trace(ad b_i . ad b_j), computed sparsely."""
    n = A.dim
    sp = A.sparse()
    out = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = Q(0)
            # tr = sum_m ( ad_i (ad_j b_m) )_m
            for m in range(n):
                for t, v in sp[j][m]:
                    for u, w in sp[i][t]:
                        if u == m:
                            s += v * w
            out[i][j] = s
            out[j][i] = s
    return tuple(tuple(row) for row in out)


def bracket_space(A: LieAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of [s, t] over basis vectors of S and T."""
    vecs = set()
    for s in S.rows:
        for t in T.rows:
            v = bracket(A, s, t)
            for x in v:
                if x != 0:
                    if x < 0:
                        v = tuple(-y for y in v)
                    vecs.add(v)
                    break
    red, _ = rref(sorted(vecs))
    return Subspace(A.dim, red)


def derived_series(A: LieAlgebra) -> tuple:
    """D^0 = G, D^{k+1} = [D^k, D^k]; chain ends at 0 or a stable term."""
    chain = [Subspace.full(A.dim)]
    while True:
        nxt = bracket_space(A, chain[-1], chain[-1])
        stable = nxt.rows == chain[-1].rows
        chain.append(nxt)
        if stable or nxt.dim == 0:
            break
    return tuple(chain)


def lower_central_series(A: LieAlgebra) -> tuple:
    """C^0 = G, C^{k+1} = [G, C^k]; chain ends at 0 or a stable term."""
    full = Subspace.full(A.dim)
    chain = [full]
    while True:
        nxt = bracket_space(A, full, chain[-1])
        stable = nxt.rows == chain[-1].rows
        chain.append(nxt)
        if stable or nxt.dim == 0:
            break
    return tuple(chain)


def centralizer(A: LieAlgebra, S: Subspace) -> Subspace:
    """{x in G : [x, S] = 0}."""
    if S.dim == 0:
        return Subspace.full(A.dim)
    rows = set()
    for t in S.rows:
        # [x, t]_k = sum_i x_i w_i[k] with w_i = [b_i, t]
        ws = [bracket(A, unit_vec(A.dim, i), t) for i in range(A.dim)]
        for k in range(A.dim):
            row = tuple(ws[i][k] for i in range(A.dim))
            if not is_zero_vec(row):
                rows.add(row)
    if not rows:
        return Subspace.full(A.dim)
    return Subspace(A.dim, kernel(tuple(sorted(rows)), A.dim))


def center(A: LieAlgebra) -> Subspace:
    return centralizer(A, Subspace.full(A.dim))


def invariant_closure(A: LieAlgebra, S: Subspace) -> Subspace:
    """Least ideal containing S: fixed point of S -> S + [G, S]."""
    cur = S
    full = Subspace.full(A.dim)
    while True:
        nxt = cur.add(bracket_space(A, full, cur))
        if nxt.rows == cur.rows:
            return cur
        cur = nxt


def is_ideal(A: LieAlgebra, S: Subspace) -> bool:
    return S.contains_space(bracket_space(A, Subspace.full(A.dim), S))


def restrict(A: LieAlgebra, S: Subspace, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """The Lie algebra structure induced on a bracket-closed subspace."""
    m = S.dim
    if labels is None:
        labels = tuple(f"s{i+1}" for i in range(m))
    c = []
    for i in range(m):
        row = []
        for j in range(m):
            w = bracket(A, S.rows[i], S.rows[j])
            if not S.contains(w):
                raise LieAlgebraError("subspace is not closed under the bracket")
            co = S.coords(w)
            row.append(tuple(co))
        c.append(tuple(row))
    return LieAlgebra(m, tuple(labels), tuple(c))


def quotient(A: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Mat]:
    """Quotient algebra by an ideal plus the projection matrix G -> G/I.

    The quotient basis is the image of the standard basis vectors at the
    non-pivot columns of the ideal's echelon form.
    """
    if not is_ideal(A, ideal):
        raise LieAlgebraError("quotient by a non-ideal")
    comp = ideal.complement_pivots()
    m = len(comp)
    # projection: write v = i + sum a_r e_{comp_r}; proj(v) = (a_r)
    basis_rows = ideal.rows + tuple(unit_vec(A.dim, cidx) for cidx in comp)
    big = Subspace.from_rows(A.dim, basis_rows)
    if big.dim != A.dim:
        raise InternalConsistencyError("complement construction failed")
    cols = transpose(basis_rows)

    def proj(v: Vec) -> Vec:
        from .linalg import solve

        sol = solve(cols, v)
        if sol is None:
            raise InternalConsistencyError("projection solve failed")
        return tuple(sol[ideal.dim :])

    proj_mat = tuple(
        tuple(proj(unit_vec(A.dim, j))[r] for j in range(A.dim)) for r in range(m)
    )
    labels = tuple(str(A.labels[cidx]) for cidx in comp)
    c = []
    for i in range(m):
        row = []
        for j in range(m):
            w = bracket(A, unit_vec(A.dim, comp[i]), unit_vec(A.dim, comp[j]))
            row.append(proj(w))
        c.append(tuple(row))
    return LieAlgebra(m, labels, tuple(c)), proj_mat


def is_solvable(A: LieAlgebra) -> bool:
    return derived_series(A)[-1].dim == 0


def radical(A: LieAlgebra) -> Subspace:
    """Solvable radical by Cartan's criterion: {x : beta(x, [G,G]) = 0}.

    The result is post-verified (ideal, solvable, semisimple quotient);
    a failure indicates corrupt structure constants, not bad input.
    """
    if A.dim == 0:
        return Subspace.zero(0)
    beta = killing_form(A)
    derived = bracket_space(A, Subspace.full(A.dim), Subspace.full(A.dim))
    rows = [mat_vec(beta, d) for d in derived.rows]
    rows = [r for r in rows if not is_zero_vec(r)]
    rad = Subspace(A.dim, kernel(tuple(rows), A.dim)) if rows else Subspace.full(A.dim)
    if not is_ideal(A, rad):
        raise InternalConsistencyError("radical candidate is not an ideal")
    if rad.dim:
        if not is_solvable(restrict(A, rad)):
            raise InternalConsistencyError("radical candidate is not solvable")
    if rad.dim < A.dim:
        quo, _ = quotient(A, rad)
        bq = killing_form(quo)
        if len(kernel(bq, quo.dim)) != 0:
            raise InternalConsistencyError("quotient by radical is not semisimple")
    return rad


def change_of_basis(A: LieAlgebra, M: Mat, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Transport structure constants through M (columns = new basis in old coords)."""
    if not len(M) == A.dim or any(len(r) != A.dim for r in M):
        raise LieAlgebraError("change of basis matrix has wrong shape")
    try:
        Minv = inverse(M)
    except ValueError:
        raise LieAlgebraError("change of basis matrix is singular")
    if labels is None:
        labels = tuple(f"b{i+1}" for i in range(A.dim))
    cols = [tuple(M[k][j] for k in range(A.dim)) for j in range(A.dim)]
    c = []
    for i in range(A.dim):
        row = []
        for j in range(A.dim):
            row.append(mat_vec(Minv, bracket(A, cols[i], cols[j])))
        c.append(tuple(row))
    return LieAlgebra(A.dim, tuple(labels), tuple(c))


def direct_sum(A: LieAlgebra, B: LieAlgebra) -> LieAlgebra:
    """Block direct sum; labels are suffixed when the two sets collide."""
    n, m = A.dim, B.dim
    la, lb = list(map(str, A.labels)), list(map(str, B.labels))
    if set(la) & set(lb):
        la = [f"{x}.1" for x in la]
        lb = [f"{x}.2" for x in lb]
    c = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(tuple(A.c[i][j]) + zero_vec(m))
            elif i >= n and j >= n:
                row.append(zero_vec(n) + tuple(B.c[i - n][j - n]))
            else:
                row.append(zero_vec(n + m))
        c.append(tuple(row))
    return LieAlgebra(n + m, tuple(la + lb), tuple(c))
