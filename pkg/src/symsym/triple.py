"""Symplectic symmetric triples (G, sigma, Omega) and their invariants.

sigma is stored as a full matrix (not assumed basis-adapted); the
eigenspace split derives canonical echelon bases for K and P, and Omega
is always indexed by the echelon basis of P in pivot order.

Sign convention, used everywhere: (delta xi)(x, y) = -xi([x, y]).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .liealg import (
    InternalConsistencyError,
    LieAlgebra,
    LieAlgebraError,
    bracket,
    bracket_space,
    center,
    centralizer,
    change_of_basis,
    derived_series,
    direct_sum,
    killing_form,
    lower_central_series,
    radical,
    restrict,
)
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
    rank,
    rref,
    signature,
    solve,
    transpose,
    unit_vec,
    vadd,
    vscale,
    vsub,
    zero_mat,
    zero_vec,
)


class TripleError(ValueError):
    pass


@dataclass(frozen=True)
class SymmetricTriple:
    """Candidate triple; mathematical validity is established by validate_tss."""

    alg: LieAlgebra
    sigma: Mat
    omega: Mat  # over the canonical echelon basis of P

    def __post_init__(self):
        n = self.alg.dim
        if len(self.sigma) != n or any(len(r) != n for r in self.sigma):
            raise TripleError("sigma must be a dim x dim matrix")
        m = len(self.omega)
        if any(len(r) != m for r in self.omega):
            raise TripleError("omega must be square")
        for i in range(m):
            for j in range(m):
                if self.omega[i][j] != -self.omega[j][i]:
                    raise TripleError("omega must be antisymmetric")


@dataclass(frozen=True)
class TwoCochain:
    """Antisymmetric 2-cochain on the full algebra basis."""

    mat: Mat

    def __post_init__(self):
        n = len(self.mat)
        for i in range(n):
            if len(self.mat[i]) != n:
                raise TripleError("cochain matrix must be square")
            for j in range(n):
                if self.mat[i][j] != -self.mat[j][i]:
                    raise TripleError("cochain must be antisymmetric")

    def __call__(self, x: Vec, y: Vec) -> Fraction:
        return sum(
            (xi * self.mat[i][j] * y[j] for i, xi in enumerate(x) if xi for j in range(len(y)) if y[j]),
            Q(0),
        )


def split_sigma(t: SymmetricTriple) -> tuple[Subspace, Subspace]:
    """Eigenspace split K = ker(sigma - id), P = ker(sigma + id)."""
    cached = getattr(t, "_split_cache", None)
    if cached is not None:
        return cached
    n = t.alg.dim
    if n == 0:
        out = Subspace.zero(0), Subspace.zero(0)
        object.__setattr__(t, "_split_cache", out)
        return out
    diag = all(
        t.sigma[i][j] == 0 for i in range(n) for j in range(n) if i != j
    ) and all(t.sigma[i][i] in (1, -1) for i in range(n))
    if diag:
        K = Subspace(n, tuple(unit_vec(n, i) for i in range(n) if t.sigma[i][i] == 1))
        P = Subspace(n, tuple(unit_vec(n, i) for i in range(n) if t.sigma[i][i] == -1))
        out = (K, P)
        object.__setattr__(t, "_split_cache", out)
        return out
    if mat_mul(t.sigma, t.sigma) != identity(n):
        raise TripleError("sigma is not involutive")
    minus = tuple(
        tuple(t.sigma[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    plus = tuple(
        tuple(t.sigma[i][j] + (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    K = Subspace(n, kernel(minus, n))
    P = Subspace(n, kernel(plus, n))
    if K.dim + P.dim != n:
        raise TripleError("sigma eigenspaces do not span the algebra")
    out = (K, P)
    object.__setattr__(t, "_split_cache", out)
    return out


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple  # (name, passed, detail)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def __bool__(self):
        return self.passed

    def failures(self):
        return tuple((n, d) for n, ok, d in self.checks if not ok)


def _sigma_is_automorphism(t: SymmetricTriple) -> tuple[bool, str]:
    A, s = t.alg, t.sigma
    n = A.dim
    sp = A.sparse()
    scols = [tuple((k, s[k][j]) for k in range(n) if s[k][j] != 0) for j in range(n)]

    def apply_sigma(sparse_v):
        out = {}
        for m, v in sparse_v:
            for k, w in scols[m]:
                out[k] = out.get(k, Q(0)) + v * w
        return out

    for i in range(n):
        for j in range(i + 1, n):
            lhs = apply_sigma(sp[i][j])
            rhs = {}
            for a, va in scols[i]:
                for b, vb in scols[j]:
                    f = va * vb
                    for k, w in sp[a][b]:
                        rhs[k] = rhs.get(k, Q(0)) + f * w
            for k in set(lhs) | set(rhs):
                if lhs.get(k, Q(0)) != rhs.get(k, Q(0)):
                    return (
                        False,
                        f"sigma[{A.labels[i]},{A.labels[j]}] != [sigma.,sigma.]",
                    )
    return True, ""


def validate_tss(t: SymmetricTriple) -> ValidationReport:
    """The five Def-level checks; each entry carries a witness on failure."""
    checks = []
    n = t.alg.dim
    # (a) involutive automorphism
    try:
        K, P = split_sigma(t)
        ok, wit = _sigma_is_automorphism(t)
        checks.append(("sigma_involutive_automorphism", ok, wit))
    except TripleError as e:
        checks.append(("sigma_involutive_automorphism", False, str(e)))
        return ValidationReport(tuple(checks))
    # (b) [P, P] = K
    pp = bracket_space(t.alg, P, P)
    checks.append(
        ("bracket_P_P_equals_K", pp.rows == K.rows,
         f"dim [P,P] = {pp.dim}, dim K = {K.dim}")
    )
    # (c) faithful K-action on P
    if K.dim:
        rows = set()
        for p in P.rows:
            ws = [bracket(t.alg, kb, p) for kb in K.rows]
            for out in range(n):
                row = tuple(ws[i][out] for i in range(K.dim))
                for x in row:
                    if x != 0:
                        if x < 0:
                            row = tuple(-y for y in row)
                        rows.add(row)
                        break
        ker_dim = K.dim - rank(tuple(sorted(rows))) if rows else K.dim
        checks.append(("faithful_K_action", ker_dim == 0, f"kernel dim = {ker_dim}"))
    else:
        checks.append(("faithful_K_action", True, ""))
    # (d) omega nondegenerate on P
    if len(t.omega) != P.dim:
        checks.append(
            ("omega_nondegenerate", False,
             f"omega is {len(t.omega)}x{len(t.omega)} but dim P = {P.dim}")
        )
    else:
        r = rank(t.omega) if P.dim else 0
        checks.append(("omega_nondegenerate", r == P.dim, f"rank {r} of {P.dim}"))
    # (e) K-invariance of omega: action(k)^T om + om action(k) = 0, sparsely
    ok, wit = True, ""
    if len(t.omega) == P.dim:
        om_sparse = [
            tuple((j, v) for j, v in enumerate(row) if v) for row in t.omega
        ]
        for kb in K.rows:
            imgs = []
            good = True
            for p in P.rows:
                w = bracket(t.alg, kb, p)
                try:
                    co = P.coords(w)
                except ValueError:
                    ok, wit, good = False, "[K,P] leaves P", False
                    break
                imgs.append(tuple((a, v) for a, v in enumerate(co) if v))
            if not good:
                break
            # imgs[j] is column j of the action matrix A; build its rows too
            rows_a = [[] for _ in range(P.dim)]
            for j in range(P.dim):
                for m, v in imgs[j]:
                    rows_a[m].append((j, v))
            acc = {}
            for i in range(P.dim):
                # (A^T om)_{ij}
                for m, v in imgs[i]:
                    for j, w_ in om_sparse[m]:
                        key = (i, j)
                        acc[key] = acc.get(key, Q(0)) + v * w_
                # (om A)_{ij}
                for m, w_ in om_sparse[i]:
                    for j, v in rows_a[m]:
                        key = (i, j)
                        acc[key] = acc.get(key, Q(0)) + w_ * v
            bad = next((k for k, v in acc.items() if v != 0), None)
            if bad is not None:
                ok, wit = False, f"invariance fails at P-basis pair {bad}"
                break
    else:
        ok, wit = False, "omega size mismatch"
    checks.append(("omega_K_invariant", ok, wit))
    return ValidationReport(tuple(checks))


def _kp_projector(t: SymmetricTriple):
    """Per basis vector: (K-component in K-coords, P-component in P-coords)."""
    K, P = split_sigma(t)
    n = t.alg.dim
    ku, pu = K.unit_row_indices(), P.unit_row_indices()
    if ku is not None and pu is not None:
        kpos = {j: a for a, j in enumerate(ku)}
        ppos = {j: a for a, j in enumerate(pu)}
        kc = tuple(
            tuple(Q(1) if kpos.get(i) == a else Q(0) for a in range(K.dim))
            for i in range(n)
        )
        pc = tuple(
            tuple(Q(1) if ppos.get(i) == a else Q(0) for a in range(P.dim))
            for i in range(n)
        )
        return kc, pc
    cols = transpose(K.rows + P.rows) if (K.dim + P.dim) else ()
    kc, pc = [], []
    for i in range(n):
        sol = solve(cols, unit_vec(n, i))
        if sol is None:
            raise InternalConsistencyError("K + P does not span")
        kc.append(tuple(sol[: K.dim]))
        pc.append(tuple(sol[K.dim :]))
    return tuple(kc), tuple(pc)


def _p_projector(t: SymmetricTriple):
    """For each basis vector, its P-component in P-echelon coordinates."""
    return _kp_projector(t)[1]


def extend_omega(t: SymmetricTriple) -> TwoCochain:
    """The extension of omega by zero against K (i(k) extension = 0)."""
    n = t.alg.dim
    pcoords = _p_projector(t)
    m = len(t.omega)
    # fast path: each basis vector is purely in K or at one P position
    pidx = []
    simple = True
    for i in range(n):
        nz = [a for a in range(m) if pcoords[i][a] != 0]
        if not nz:
            pidx.append(None)
        elif len(nz) == 1 and pcoords[i][nz[0]] == 1:
            pidx.append(nz[0])
        else:
            simple = False
            break
    if simple:
        rows = tuple(
            tuple(
                t.omega[pidx[i]][pidx[j]]
                if pidx[i] is not None and pidx[j] is not None
                else Q(0)
                for j in range(n)
            )
            for i in range(n)
        )
        return TwoCochain(rows)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s = Q(0)
            for a in range(m):
                pa = pcoords[i][a]
                if pa == 0:
                    continue
                for b in range(m):
                    if t.omega[a][b] != 0 and pcoords[j][b] != 0:
                        s += pa * t.omega[a][b] * pcoords[j][b]
            row.append(s)
        rows.append(tuple(row))
    return TwoCochain(tuple(rows))


def coboundary(A: LieAlgebra, xi: Vec) -> TwoCochain:
    """(delta xi)(x, y) = -xi([x, y])."""
    if len(xi) != A.dim:
        raise LieAlgebraError("covector dimension mismatch")
    n = A.dim
    sp = A.sparse()
    rows = tuple(
        tuple(-sum((v * xi[m] for m, v in sp[i][j]), Q(0)) for j in range(n))
        for i in range(n)
    )
    return TwoCochain(rows)


def cocycle_check(A: LieAlgebra, c: TwoCochain) -> bool:
    """True iff c([x,y],z) + c([y,z],x) + c([z,x],y) = 0 on basis triples."""
    n = A.dim
    m = c.mat

    def pair(v: Vec, k: int) -> Fraction:
        return sum((v[a] * m[a][k] for a in range(n) if v[a]), Q(0))

    for i in range(n):
        for j in range(i + 1, n):
            cij = A.c[i][j]
            for k in range(j + 1, n):
                s = pair(cij, k) + pair(A.c[j][k], i) + pair(A.c[k][i], j)
                if s != 0:
                    return False
    return True


def exactness(t: SymmetricTriple) -> Optional[Vec]:
    """A covector xi with delta xi = extended omega, or None.

    The normalization xi(P) = 0 is imposed first; remaining freedom is
    resolved by setting RREF-free coordinates to zero (deterministic).
    """
    A = t.alg
    n = A.dim
    om = extend_omega(t)
    K, _ = split_sigma(t)
    kco, _pco = _kp_projector(t)
    kco_sp = [tuple((a, v) for a, v in enumerate(kco[m]) if v) for m in range(n)]
    sp = A.sparse()
    # unknowns: values of xi on the K basis (xi vanishes on P)
    rows, rhs = [], []
    for i in range(n):
        for j in range(i + 1, n):
            cij = sp[i][j]
            val = -om.mat[i][j]
            if not cij:
                if val != 0:
                    return None
                continue
            row = [Q(0)] * K.dim
            for m, v in cij:
                for a, w in kco_sp[m]:
                    row[a] += v * w
            if all(x == 0 for x in row):
                if val != 0:
                    return None
                continue
            rows.append(tuple(row))
            rhs.append(val)
    if K.dim == 0:
        return zero_vec(n) if not rows else None
    if not rows:
        y = zero_vec(K.dim)
    else:
        y = solve(tuple(rows), tuple(rhs))
        if y is None:
            return None
        if any(
            sum((r[a] * y[a] for a in range(K.dim)), Q(0)) != b
            for r, b in zip(rows, rhs)
        ):
            return None
    xi = tuple(
        sum((kco[m][a] * y[a] for a in range(K.dim)), Q(0)) for m in range(n)
    )
    if coboundary(A, xi).mat != om.mat:
        return None
    return xi


def heisenberg_extension(t: SymmetricTriple) -> SymmetricTriple:
    """Central extension R.E + G with bracket twisted by the extended omega.

    The extension satisfies (extended omega of the result) = -delta(E*),
    so the exactness witness is xi = -E*: the sign is part of the
    construction, not a convention choice.

    E is central, so the (K + R.E)-action on P is never faithful: the
    result is an exact triple in the weaker sense that drops effectivity,
    and validate_tss reports exactly that one failing check.
    """
    A = t.alg
    om = extend_omega(t).mat
    n = A.dim
    elab = "E" if "E" not in A.labels else "E_ext"
    labels = (elab,) + tuple(A.labels)
    c = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == 0 or j == 0:
                row.append(zero_vec(n + 1))
            else:
                row.append((om[i - 1][j - 1],) + tuple(A.c[i - 1][j - 1]))
        c.append(tuple(row))
    alg = LieAlgebra(n + 1, labels, tuple(c))
    sig = [[Q(0)] * (n + 1) for _ in range(n + 1)]
    sig[0][0] = Q(1)
    for i in range(n):
        for j in range(n):
            sig[i + 1][j + 1] = t.sigma[i][j]
    return SymmetricTriple(alg, tuple(tuple(r) for r in sig), t.omega)


def curvature(t: SymmetricTriple, x: Vec, y: Vec, z: Vec) -> Vec:
    """R(x, y)z = -[[x, y], z] for x, y, z in P."""
    _, P = split_sigma(t)
    for v in (x, y, z):
        if not P.contains(v):
            raise TripleError("curvature arguments must lie in P")
    out = vscale(-1, bracket(t.alg, bracket(t.alg, x, y), z))
    if not P.contains(out):
        raise InternalConsistencyError("curvature value escaped P")
    return out


def direct_sum_triples(t1: SymmetricTriple, t2: SymmetricTriple) -> SymmetricTriple:
    alg = direct_sum(t1.alg, t2.alg)
    n1, n2 = t1.alg.dim, t2.alg.dim
    sig = [[Q(0)] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            sig[i][j] = t1.sigma[i][j]
    for i in range(n2):
        for j in range(n2):
            sig[n1 + i][n1 + j] = t2.sigma[i][j]
    sig = tuple(tuple(r) for r in sig)
    # P-echelon of the sum: P1 rows padded, then P2 rows padded; pivot
    # order is P1 pivots (all < n1) before P2 pivots, so omega is block.
    m1, m2 = len(t1.omega), len(t2.omega)
    om = [[Q(0)] * (m1 + m2) for _ in range(m1 + m2)]
    for i in range(m1):
        for j in range(m1):
            om[i][j] = t1.omega[i][j]
    for i in range(m2):
        for j in range(m2):
            om[m1 + i][m1 + j] = t2.omega[i][j]
    return SymmetricTriple(alg, sig, tuple(tuple(r) for r in om))


def transport_triple(t: SymmetricTriple, M: Mat, labels=None) -> SymmetricTriple:
    """Present the same triple in a new basis (columns of M = new basis)."""
    alg = change_of_basis(t.alg, M, labels=labels)
    Minv = inverse(M)
    sig = mat_mul(Minv, mat_mul(t.sigma, M))
    omb = mat_mul(transpose(M), mat_mul(extend_omega(t).mat, M))
    tmp = SymmetricTriple(alg, sig, zero_mat(0, 0))
    _, P = split_sigma(tmp)
    om = tuple(
        tuple(
            sum(
                (P.rows[i][a] * omb[a][b] * P.rows[j][b]
                 for a in range(alg.dim) if P.rows[i][a]
                 for b in range(alg.dim) if P.rows[j][b]),
                Q(0),
            )
            for j in range(P.dim)
        )
        for i in range(P.dim)
    )
    return SymmetricTriple(alg, sig, om)


def center_of_K(t: SymmetricTriple) -> Subspace:
    """Center of the K-subalgebra, as a subspace of G."""
    K, _ = split_sigma(t)
    if K.dim == 0:
        return Subspace.zero(t.alg.dim)
    sub = restrict(t.alg, K)
    zk = center(sub)
    rows = []
    for co in zk.rows:
        v = zero_vec(t.alg.dim)
        for i, a in enumerate(co):
            v = vadd(v, vscale(a, K.rows[i]))
        rows.append(v)
    return Subspace.from_rows(t.alg.dim, rows)


def k_action_nilpotent(t: SymmetricTriple) -> bool:
    """Whether ad(K)|_P is a nilpotent action (chain [K,[K,...P]] hits 0)."""
    A = t.alg
    K, P = split_sigma(t)
    cur = P
    for _ in range(A.dim + 1):
        if cur.dim == 0:
            return True
        cur = bracket_space(A, K, cur)
    return False


@dataclass(frozen=True)
class TripleFingerprint:
    """Isomorphism-invariant record used to certify non-isomorphism."""

    dim_g: int
    dim_k: int
    dim_p: int
    derived_dims: tuple
    lower_central_dims: tuple
    dim_center_g: int
    dim_center_k: int
    killing_signature: tuple  # (n_pos, n_neg, n_zero) on G
    killing_signature_on_k: tuple  # ambient Killing restricted to K
    exact: bool
    dim_p_r: int
    nilpotent_k_action: bool

    @property
    def killing_rank(self) -> int:
        return self.killing_signature[0] + self.killing_signature[1]


def fingerprint(t: SymmetricTriple) -> TripleFingerprint:
    A = t.alg
    K, P = split_sigma(t)
    beta = killing_form(A)
    bk = tuple(
        tuple(
            sum(
                (K.rows[i][a] * beta[a][b] * K.rows[j][b]
                 for a in range(A.dim) if K.rows[i][a]
                 for b in range(A.dim) if K.rows[j][b]),
                Q(0),
            )
            for j in range(K.dim)
        )
        for i in range(K.dim)
    )
    rad = radical(A)
    return TripleFingerprint(
        dim_g=A.dim,
        dim_k=K.dim,
        dim_p=P.dim,
        derived_dims=tuple(s.dim for s in derived_series(A)),
        lower_central_dims=tuple(s.dim for s in lower_central_series(A)),
        dim_center_g=center(A).dim,
        dim_center_k=center_of_K(t).dim,
        killing_signature=signature(beta),
        killing_signature_on_k=signature(bk),
        exact=exactness(t) is not None,
        dim_p_r=P.intersect(rad).dim,
        nilpotent_k_action=k_action_nilpotent(t),
    )


def radical_part(t: SymmetricTriple) -> tuple[Subspace, Optional[bool]]:
    """P_R = P intersect radical(G); bound flag only in the mixed case."""
    A = t.alg
    _, P = split_sigma(t)
    rad = radical(A)
    pr = P.intersect(rad)
    solvable = rad.dim == A.dim
    semisimple = rad.dim == 0
    if solvable or semisimple:
        return pr, None
    return pr, 2 <= pr.dim <= P.dim - 2
