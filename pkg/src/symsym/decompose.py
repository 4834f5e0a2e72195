"""Decomposition of symplectic symmetric triples into indecomposable factors.

flat_split peels off the flat part carried by the center; the remaining
factor search enumerates idempotents in the commutant of the K-action on
P (generalized eigenprojections at rational eigenvalues of commutant
elements) and filters them by the symplectic and bracket conditions a
direct-sum splitting must satisfy.  A factor for which the search finds
no admissible idempotent is attested indecomposable-by-search: the
search is complete at this scale in practice but is not a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .liealg import (
    InternalConsistencyError,
    LieAlgebra,
    bracket,
    bracket_space,
    center,
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
    rref,
    solve,
    transpose,
    unit_vec,
    vadd,
    vscale,
    zero_vec,
)
from .triple import (
    SymmetricTriple,
    TripleError,
    TripleFingerprint,
    extend_omega,
    fingerprint,
    split_sigma,
    transport_triple,
    validate_tss,
)


@dataclass(frozen=True)
class Decomposition:
    flat_factor: SymmetricTriple
    factors: tuple  # SymmetricTriple, non-flat, attested indecomposable
    assembly: Mat  # columns: factor bases in the input presentation

    @property
    def factor_fingerprints(self):
        return tuple(fingerprint(f) for f in self.factors)


def _omega_on_ambient(t: SymmetricTriple):
    """Pairing Omega-bar(u, v) for ambient vectors, as a closure."""
    om = extend_omega(t).mat
    n = t.alg.dim

    def pair(u: Vec, v: Vec) -> Fraction:
        return sum(
            (u[a] * om[a][b] * v[b] for a in range(n) if u[a] for b in range(n) if v[b]),
            Q(0),
        )

    return pair


def subtriple(t: SymmetricTriple, S: Subspace) -> tuple[SymmetricTriple, Mat]:
    """Triple induced on a sigma-stable subalgebra S, plus its embedding.

    The embedding matrix has the S basis as columns (input coordinates).
    """
    A = t.alg
    n = A.dim
    for s in S.rows:
        if not S.contains(mat_vec(t.sigma, s)):
            raise TripleError("subalgebra is not sigma-stable")
    sub = restrict(A, S)
    m = S.dim
    sig = tuple(
        tuple(S.coords(mat_vec(t.sigma, S.rows[j]))[i] for j in range(m))
        for i in range(m)
    )
    tmp = SymmetricTriple(sub, sig, ())
    _, Psub = split_sigma(tmp)
    pair = _omega_on_ambient(t)
    amb = []
    for row in Psub.rows:
        v = zero_vec(n)
        for i, a in enumerate(row):
            if a:
                v = vadd(v, vscale(a, S.rows[i]))
        amb.append(v)
    om = tuple(
        tuple(pair(amb[i], amb[j]) for j in range(Psub.dim)) for i in range(Psub.dim)
    )
    embed = tuple(tuple(S.rows[j][i] for j in range(m)) for i in range(n))
    return SymmetricTriple(sub, sig, om), embed


def flat_split(t: SymmetricTriple) -> tuple[SymmetricTriple, SymmetricTriple, Mat]:
    """Split off the flat factor carried by the symplectic part of Z(G).

    Returns (t0, t1, assembly) with t0 flat, Z(G1) isotropic, and the
    assembly columns listing the t0 then t1 bases in input coordinates.
    """
    rep = validate_tss(t)
    if not rep.passed:
        raise TripleError(f"flat_split needs a valid triple: {rep.failures()}")
    A = t.alg
    n = A.dim
    K, P = split_sigma(t)
    Z = center(A)
    pair = _omega_on_ambient(t)
    # symplectic Gram-Schmidt inside Z: collect hyperbolic pairs
    pool = list(Z.rows)
    pairs = []
    while True:
        hit = None
        for i in range(len(pool)):
            for j in range(i + 1, len(pool)):
                if pair(pool[i], pool[j]) != 0:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        u, v = pool[i], pool[j]
        c = pair(u, v)
        v = vscale(Q(1) / c, v)
        pairs.append((u, v))
        rest = []
        for k, w in enumerate(pool):
            if k in (i, j):
                continue
            w1 = vadd(w, vscale(-pair(w, v), u))
            w1 = vadd(w1, vscale(pair(w1, u), v))
            if not is_zero_vec(w1):
                rest.append(w1)
        pool = rest
    p0_rows = [x for uv in pairs for x in uv]
    P0 = Subspace.from_rows(n, p0_rows)
    # P1 = omega-orthogonal complement of P0 inside P
    if P0.dim:
        rows = tuple(
            tuple(pair(unit_vec(n, a), z) for a in range(n)) for z in P0.rows
        )
        perp = Subspace(n, kernel(rows, n))
        P1 = perp.intersect(P)
    else:
        P1 = P
    G1 = bracket_space(A, P1, P1).add(P1)
    t0, emb0 = subtriple(t, P0.add(Subspace.zero(n))) if P0.dim else (
        SymmetricTriple(LieAlgebra(0, (), ()), (), ()),
        tuple(() for _ in range(n)),
    )
    t1, emb1 = subtriple(t, G1)
    if P0.dim + G1.dim != n:
        raise InternalConsistencyError("flat split does not span the algebra")
    z1 = center(t1.alg)
    pair1 = _omega_on_ambient(t1)
    for a in z1.rows:
        for b in z1.rows:
            if pair1(a, b) != 0:
                raise InternalConsistencyError("center of the non-flat part is not isotropic")
    assembly = tuple(emb0[i] + emb1[i] for i in range(n))
    return t0, t1, assembly


def commutant(t: SymmetricTriple) -> tuple:
    """Basis of {f : P -> P | f ad(k) = ad(k) f for all k in K}."""
    rep = validate_tss(t)
    if not rep.passed:
        raise TripleError(f"commutant needs a valid triple: {rep.failures()}")
    A = t.alg
    K, P = split_sigma(t)
    m = P.dim
    if m == 0:
        return ()
    ads = []
    for k in K.rows:
        cols = [P.coords(bracket(A, k, p)) for p in P.rows]
        ads.append(tuple(tuple(cols[j][i] for j in range(m)) for i in range(m)))
    rows = []
    for ak in ads:
        for r in range(m):
            for s in range(m):
                row = [Q(0)] * (m * m)
                for x in range(m):
                    row[r * m + x] += ak[x][s]
                    row[x * m + s] -= ak[r][x]
                if any(v != 0 for v in row):
                    rows.append(tuple(row))
    if not rows:
        flat = identity(m * m)
    else:
        flat = kernel(tuple(rows), m * m)
    return tuple(
        tuple(tuple(v[r * m + s] for s in range(m)) for r in range(m)) for v in flat
    )


def _min_poly(f: Mat) -> tuple:
    """Monic minimal polynomial coefficients, low degree first."""
    m = len(f)
    powers = [identity(m)]
    flat = [tuple(x for row in powers[0] for x in row)]
    while True:
        powers.append(mat_mul(powers[-1], f))
        flat.append(tuple(x for row in powers[-1] for x in row))
        cols = transpose(tuple(flat))
        sol = solve(tuple(tuple(r[:-1]) for r in cols), tuple(r[-1] for r in cols))
        if sol is not None:
            d = len(flat) - 1
            return tuple(-c for c in sol) + (Q(1),)


def _rational_roots(poly, divisor_cap: int = 10_000) -> tuple:
    """Rational roots of a rational-coefficient polynomial.

    Divisor enumeration is capped; candidates beyond the cap would come
    from numerically huge constant terms and are not worth the search.
    """
    from math import gcd, isqrt

    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    roots = []
    if not ints:
        return ()
    low = 0
    while low < len(ints) and ints[low] == 0:
        low += 1
    if low:
        roots.append(Q(0))
    a0, an = abs(ints[low]), abs(ints[-1])

    def divisors(x):
        out = []
        d = 1
        top = min(isqrt(x), divisor_cap)
        while d <= top:
            if x % d == 0:
                out.append(d)
                if x // d <= divisor_cap:
                    out.append(x // d)
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for qq in divisors(an):
            for cand in (Q(p, qq), Q(-p, qq)):
                val = Q(0)
                for c in reversed(poly):
                    val = val * cand + c
                if val == 0 and cand not in roots:
                    roots.append(cand)
    return tuple(sorted(roots))


def _invariant_subspaces_of(f: Mat, lam: Fraction):
    """Proper kernels and images of powers of (f - lam): all K-invariant."""
    m = len(f)
    g = tuple(
        tuple(f[i][j] - (lam if i == j else 0) for j in range(m)) for i in range(m)
    )
    p = identity(m)
    for _ in range(m):
        p = mat_mul(p, g)
        ker = kernel(p, m)
        if ker and len(ker) < m:
            yield Subspace(m, ker)
        img, _ = rref(transpose(p))
        if img and len(img) < m:
            yield Subspace(m, img)
        if not any(x != 0 for row in p for x in row):
            break


def _try_split(t: SymmetricTriple, E_p: Subspace) -> Optional[tuple]:
    """Attempt a factor split along a K-invariant subspace of P.

    E_p is in P-echelon coordinates; returns (t_a, emb_a, t_b, emb_b).
    """
    A = t.alg
    n = A.dim
    K, P = split_sigma(t)
    m = P.dim
    pair = _omega_on_ambient(t)

    def to_amb(rows):
        out = []
        for row in rows:
            v = zero_vec(n)
            for i, a in enumerate(row):
                if a:
                    v = vadd(v, vscale(a, P.rows[i]))
            out.append(v)
        return out

    E = Subspace.from_rows(n, to_amb(E_p.rows))
    # W = omega-orthogonal complement of E in P (candidate partner)
    rows = tuple(tuple(pair(unit_vec(n, a), e) for a in range(n)) for e in E.rows)
    W = Subspace(n, kernel(rows, n)).intersect(P)
    if E.dim + W.dim != m or E.intersect(W).dim != 0:
        return None
    for e in E.rows:
        for w in W.rows:
            if not is_zero_vec(bracket(A, e, w)):
                return None
    Ka = bracket_space(A, E, E)
    Kb = bracket_space(A, W, W)
    if Ka.intersect(Kb).dim != 0 or Ka.add(Kb).rows != K.rows:
        return None
    Ga = Ka.add(E)
    Gb = Kb.add(W)
    if Ga.intersect(Gb).dim != 0 or Ga.dim + Gb.dim != n:
        return None
    try:
        ta, ea = subtriple(t, Ga)
        tb, eb = subtriple(t, Gb)
    except Exception:
        return None
    if not validate_tss(ta).passed or not validate_tss(tb).passed:
        return None
    return ta, ea, tb, eb


def sigma_centroid(t: SymmetricTriple) -> tuple:
    """Basis of {phi : phi[x,y] = [phi x, y], phi sigma = sigma phi}.

    Projections onto ideal direct summands live here, so rational
    eigenspaces of centroid elements enumerate candidate ideal splits.
    """
    A = t.alg
    n = A.dim
    rows = []
    # phi(c_ij) = [phi b_i, b_j]: coefficient of phi[r][s] in component k:
    #   lhs: c_ij[s] at (k=r) ... build per (i, j, k)
    for i in range(n):
        for j in range(n):
            cij = A.c[i][j]
            for k in range(n):
                row = [Q(0)] * (n * n)
                for s in range(n):
                    row[k * n + s] += cij[s]  # phi[k][s] * c_ij[s]
                    row[s * n + i] -= A.c[s][j][k]  # [phi b_i, b_j]_k
                if any(v != 0 for v in row):
                    rows.append(tuple(row))
    for i in range(n):
        for k in range(n):
            row = [Q(0)] * (n * n)
            for s in range(n):
                row[k * n + s] += t.sigma[s][i]
                row[s * n + i] -= t.sigma[k][s]
            if any(v != 0 for v in row):
                rows.append(tuple(row))
    flat = kernel(tuple(rows), n * n) if rows else identity(n * n)
    return tuple(
        tuple(tuple(v[r * n + s] for s in range(n)) for r in range(n)) for v in flat
    )


def _combos(basis, m, rng, tries):
    cands = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            cands.append(
                tuple(
                    tuple(basis[i][r][s] + basis[j][r][s] for s in range(m))
                    for r in range(m)
                )
            )
            cands.append(mat_mul(basis[i], basis[j]))
    for _ in range(tries):
        coeffs = [Q(rng.randint(-3, 3)) for _ in basis]
        cands.append(
            tuple(
                tuple(
                    sum((c * g[r][s] for c, g in zip(coeffs, basis)), Q(0))
                    for s in range(m)
                )
                for r in range(m)
            )
        )
    return cands


def _split_candidates(t: SymmetricTriple, seed: int, tries: int):
    """Yield K-invariant subspaces of P (in P-echelon coordinates)."""
    A = t.alg
    n = A.dim
    _, P = split_sigma(t)
    m = P.dim
    rng = random.Random(seed)
    seen_f = set()
    seen_sp = set()

    def emit(sp_p):
        if sp_p.rows in seen_sp:
            return None
        seen_sp.add(sp_p.rows)
        return sp_p

    # primary source: sigma-equivariant centroid elements (ideal splits)
    for f in _combos(sigma_centroid(t), n, rng, tries):
        if f in seen_f:
            continue
        seen_f.add(f)
        for lam in _rational_roots(_min_poly(f)):
            for sp in _invariant_subspaces_of(f, lam):
                amb = Subspace.from_rows(n, sp.rows)
                ep = amb.intersect(P)
                if not 0 < ep.dim < m:
                    continue
                try:
                    rows = tuple(P.coords(r) for r in ep.rows)
                except ValueError:
                    continue
                got = emit(Subspace.from_rows(m, rows))
                if got is not None:
                    yield got
    # secondary source: commutant of the K-action on P
    for f in _combos(commutant(t), m, rng, tries):
        if f in seen_f:
            continue
        seen_f.add(f)
        for lam in _rational_roots(_min_poly(f)):
            for sp in _invariant_subspaces_of(f, lam):
                got = emit(sp)
                if got is not None:
                    yield got


def _search(t: SymmetricTriple, embed: Mat, seed: int, tries: int, out: list):
    # a proper split needs two symplectic parts of dimension >= 2 each
    if len(t.omega) >= 4:
        for sp in _split_candidates(t, seed, tries):
            got = _try_split(t, sp)
            if got is None:
                continue
            ta, ea, tb, eb = got
            _search(ta, mat_mul(embed, ea), seed, tries, out)
            _search(tb, mat_mul(embed, eb), seed, tries, out)
            return
    out.append((t, embed))


def decompose(t: SymmetricTriple, seed: int = 0, tries: int = 40) -> Decomposition:
    """Flat factor plus non-flat factors attested indecomposable-by-search."""
    t0, t1, assembly0 = flat_split(t)
    n = t.alg.dim
    emb0 = tuple(tuple(assembly0[i][: t0.alg.dim]) for i in range(n))
    emb1 = tuple(tuple(assembly0[i][t0.alg.dim :]) for i in range(n))
    found: list = []
    if t1.alg.dim:
        _search(t1, emb1, seed, tries, found)
    factors = tuple(f for f, _ in found)
    assembly = tuple(
        tuple(emb0[i]) + tuple(x for _, e in found for x in e[i]) for i in range(n)
    )
    _verify_reassembly(t, t0, factors, assembly)
    return Decomposition(t0, factors, assembly)


def _verify_reassembly(t, t0, factors, assembly):
    from .triple import direct_sum_triples

    total = t0
    for f in factors:
        total = direct_sum_triples(total, f)
    back = transport_triple(total, inverse(assembly))
    if back.alg.c != t.alg.c or back.sigma != t.sigma or back.omega != t.omega:
        raise InternalConsistencyError("reassembly does not reproduce the input")


@dataclass(frozen=True)
class MatchReport:
    match: bool
    detail: str


def _fp_key(fp: TripleFingerprint):
    return (
        fp.dim_g,
        fp.dim_k,
        fp.dim_p,
        fp.derived_dims,
        fp.lower_central_dims,
        fp.dim_center_g,
        fp.dim_center_k,
        fp.killing_signature,
        fp.killing_signature_on_k,
        fp.exact,
        fp.dim_p_r,
        fp.nilpotent_k_action,
    )


def verify_uniqueness_pair(d1: Decomposition, d2: Decomposition) -> MatchReport:
    """Necessary condition for the uniqueness theorem: fingerprints match.

    Compares the flat dimensions and the multisets of factor
    fingerprints; no automorphism is constructed.
    """
    if d1.flat_factor.alg.dim != d2.flat_factor.alg.dim:
        return MatchReport(
            False,
            f"flat dims differ: {d1.flat_factor.alg.dim} vs {d2.flat_factor.alg.dim}",
        )
    m1 = sorted(_fp_key(f) for f in d1.factor_fingerprints)
    m2 = sorted(_fp_key(f) for f in d2.factor_fingerprints)
    if len(m1) != len(m2):
        return MatchReport(False, f"factor counts differ: {len(m1)} vs {len(m2)}")
    if m1 != m2:
        return MatchReport(False, "factor fingerprint multisets differ")
    return MatchReport(True, f"{len(m1)} factors matched by fingerprint")
