"""Root systems, Chevalley bases, admissible nodes and the simple triples.

Cartan matrices follow the Bourbaki numbering; the entry convention is
m[i][j] = <alpha_i, alpha_j-coroot> = 2(a_i, a_j)/(a_j, a_j).

Structure constants use the Chevalley normalization N(-a,-b) = -N(a,b)
with extraspecial signs chosen positive; every other sign is derived
from the two standard bracket identities on root quadruples.  The
construction is never trusted: chevalley_algebra runs an exact Jacobi
self-check and refuses to return on any defect.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

from .liealg import InternalConsistencyError, LieAlgebra, jacobi_check
from .linalg import Mat, Q, Subspace, Vec, inverse, mat, unit_vec, zero_vec
from .triple import SymmetricTriple, center_of_K, split_sigma

RANK_CAP_DEFAULT = 8


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class CartanMatrix:
    kind: str  # "A".."G", or "X" for a raw matrix
    rank: int
    m: Mat

    def label(self) -> str:
        return f"{self.kind}{self.rank}"


def _chain_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def _edges(kind: str, n: int):
    if kind in ("A", "B", "C"):
        return _chain_edges(n)
    if kind == "D":
        return _chain_edges(n - 1) + [(n - 3, n - 1)]
    if kind == "E":
        base = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
        if n >= 7:
            base.append((5, 6))
        if n == 8:
            base.append((6, 7))
        return base
    if kind == "F":
        return _chain_edges(4)
    if kind == "G":
        return [(0, 1)]
    raise RootSystemError(f"unknown type {kind}")


def cartan_matrix(kind: str, rank: int) -> CartanMatrix:
    """Bourbaki Cartan matrix of a finite type."""
    kind = kind.upper()
    limits = {"A": 1, "B": 2, "C": 2, "D": 4, "F": 4, "G": 2}
    if kind == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError("type E has rank 6, 7 or 8")
    elif kind in ("F", "G"):
        if rank != limits[kind]:
            raise RootSystemError(f"type {kind} has rank {limits[kind]}")
    elif kind in limits:
        if rank < limits[kind]:
            raise RootSystemError(f"type {kind} needs rank >= {limits[kind]}")
    else:
        raise RootSystemError(f"unknown type {kind}")
    m = [[Q(2) if i == j else Q(0) for j in range(rank)] for i in range(rank)]
    for i, j in _edges(kind, rank):
        m[i][j] = m[j][i] = Q(-1)
    if kind == "B":  # alpha_n short
        m[rank - 2][rank - 1] = Q(-2)
    if kind == "C":  # alpha_n long
        m[rank - 1][rank - 2] = Q(-2)
    if kind == "F":  # alpha_1, alpha_2 long
        m[1][2] = Q(-2)
    if kind == "G":  # alpha_1 short
        m[1][0] = Q(-3)
    cm = CartanMatrix(kind, rank, tuple(tuple(row) for row in m))
    _validate_cartan(cm)
    return cm


def cartan_from_matrix(raw) -> CartanMatrix:
    m = mat(raw)
    cm = CartanMatrix("X", len(m), m)
    _validate_cartan(cm)
    return cm


def _symmetrizer(cm: CartanMatrix) -> tuple:
    """d_i with d_j m[i][j] = d_i m[j][i]; d in the half-length-square scale."""
    n = cm.rank
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Q(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cm.m[i][j] != 0:
                    val = d[i] * cm.m[j][i] / cm.m[i][j]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise RootSystemError("matrix is not symmetrizable")
    return tuple(d)


def _validate_cartan(cm: CartanMatrix):
    n = cm.rank
    if n == 0:
        raise RootSystemError("empty Cartan matrix")
    for i in range(n):
        if cm.m[i][i] != 2:
            raise RootSystemError("diagonal entries must be 2")
        for j in range(n):
            v = cm.m[i][j]
            if v.denominator != 1:
                raise RootSystemError("entries must be integers")
            if i != j and v > 0:
                raise RootSystemError("off-diagonal entries must be <= 0")
            if i != j and (v == 0) != (cm.m[j][i] == 0):
                raise RootSystemError("zero pattern must be symmetric")
    d = _symmetrizer(cm)
    # finite type <=> symmetrized matrix positive definite (leading minors)
    s = [[d[j] * cm.m[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _det([row[:k] for row in s[:k]]) <= 0:
            raise RootSystemError("matrix is not of finite type")


def _det(rows) -> Fraction:
    n = len(rows)
    a = [list(r) for r in rows]
    det = Q(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if a[r][c] != 0:
                piv = r
                break
        if piv is None:
            return Q(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    positive_roots: tuple  # integer coordinate tuples, (height, lex)-sorted
    simple_norms: tuple  # d_i = (a_i, a_i)/2

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def root_set(self):
        cached = getattr(self, "_root_set_cache", None)
        if cached is None:
            cached = frozenset(self.positive_roots) | frozenset(
                tuple(-x for x in b) for b in self.positive_roots
            )
            object.__setattr__(self, "_root_set_cache", cached)
        return cached

    def pairing(self, beta, i: int) -> Fraction:
        """<beta, alpha_i-coroot>."""
        return sum(
            (Q(beta[j]) * self.cartan.m[j][i] for j in range(self.rank)), Q(0)
        )

    def inner(self, beta, gamma) -> Fraction:
        """(beta, gamma) in the symmetrized scale."""
        s = Q(0)
        for i in range(self.rank):
            if beta[i]:
                for j in range(self.rank):
                    if gamma[j]:
                        s += Q(beta[i]) * Q(gamma[j]) * self.cartan.m[i][j] * self.simple_norms[j]
        return s

    def is_irreducible(self) -> bool:
        n = self.rank
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and self.cartan.m[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


def roots_from_cartan(cm: CartanMatrix) -> RootSystem:
    """All positive roots by closure under root-string addition."""
    n = cm.rank
    d = _symmetrizer(cm)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        newly = []
        for beta in frontier:
            for i in range(n):
                # p = string-down length, q = p - <beta, a_i-coroot>
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    cand = tuple(cur)
                    if all(x == 0 for x in cand):
                        break
                    if cand in roots or tuple(-x for x in cand) in roots:
                        p += 1
                    else:
                        break
                pair = sum(Q(beta[j]) * cm.m[j][i] for j in range(n))
                if p - pair > 0:
                    up = tuple(x + (1 if j == i else 0) for j, x in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        newly.append(up)
        frontier = newly
    pos = tuple(sorted(roots, key=lambda b: (sum(b), b)))
    if cm.kind in POSITIVE_ROOT_COUNTS:
        want = POSITIVE_ROOT_COUNTS[cm.kind](cm.rank)
        if len(pos) != want:
            raise InternalConsistencyError(
                f"{cm.label()}: found {len(pos)} positive roots, expected {want}"
            )
    return RootSystem(cm, pos, d)


def highest_root(rs: RootSystem) -> tuple:
    """The unique positive root dominating all others coordinatewise."""
    if not rs.is_irreducible():
        raise RootSystemError("highest root needs an irreducible system")
    top = rs.positive_roots[-1]
    for b in rs.positive_roots:
        if any(x > y for x, y in zip(b, top)):
            raise InternalConsistencyError("no dominating root found")
    return top


def admissible_nodes(rs: RootSystem) -> tuple:
    """1-based indices of simple roots with coefficient 1 in the highest root."""
    mu = highest_root(rs)
    return tuple(i + 1 for i, c in enumerate(mu) if c == 1)


@dataclass(frozen=True)
class AdmissibleSystem:
    rootsys: RootSystem
    node: int  # 1-based
    h: Vec  # coordinates of h in the simple-coroot basis
    omega_weight: Vec  # fundamental weight in the simple-root basis

    def __post_init__(self):
        mu = highest_root(self.rootsys)
        if mu[self.node - 1] != 1:
            raise RootSystemError(
                f"node {self.node} is not admissible: highest-root coefficient "
                f"{mu[self.node - 1]}"
            )


def dual_element_coords(rs: RootSystem, node: int) -> Vec:
    """h with alpha_j(h) = delta_{j,node}, in simple-coroot coordinates."""
    minv = inverse(rs.cartan.m)
    return tuple(minv[i][node - 1] for i in range(rs.rank))


def admissible_system(rs: RootSystem, node: int) -> AdmissibleSystem:
    h = dual_element_coords(rs, node)
    return AdmissibleSystem(rs, node, h, h)


def dual_element(asys: AdmissibleSystem) -> Vec:
    return asys.h


def aut_phi_orbits(rs: RootSystem) -> tuple:
    """Orbits of admissible nodes under the diagram automorphism group.

    Node orbits under Aut(phi) coincide with orbits under the diagram
    automorphisms since the Weyl group fixes the dominant chamber
    pointwise on fundamental-weight representatives.
    """
    if not rs.is_irreducible():
        raise RootSystemError("orbits need an irreducible system")
    n = rs.rank
    m = rs.cartan.m
    autos = []
    for perm in permutations(range(n)):
        if all(
            m[perm[i]][perm[j]] == m[i][j] for i in range(n) for j in range(n)
        ):
            autos.append(perm)
    nodes = admissible_nodes(rs)
    orbit_of = {}
    orbits = []
    for v in nodes:
        if v in orbit_of:
            continue
        orb = set()
        stack = [v - 1]
        while stack:
            i = stack.pop()
            if i + 1 in orb:
                continue
            orb.add(i + 1)
            for g in autos:
                if g[i] + 1 not in orb:
                    stack.append(g[i])
        orb = tuple(sorted(orb))
        for w in orb:
            orbit_of[w] = orb
        orbits.append(orb)
    return tuple(orbits)


# ---------------------------------------------------------------------------
# Chevalley algebra construction


@dataclass(frozen=True, eq=False)
class ChevalleyAlgebra:
    rootsys: RootSystem
    alg: LieAlgebra
    n_table: dict  # (a, b) -> N(a, b) on ordered positive pairs

    @property
    def rank(self) -> int:
        return self.rootsys.rank

    @property
    def n_positive(self) -> int:
        return len(self.rootsys.positive_roots)

    def e_index(self, k: int) -> int:
        return self.rank + k

    def f_index(self, k: int) -> int:
        return self.rank + self.n_positive + k


def _root_label(prefix: str, beta) -> str:
    return f"{prefix}[{','.join(str(x) for x in beta)}]"


def _build_n_table(rs: RootSystem):
    """N(a, b) on positive pairs, extraspecial signs positive."""
    pos = rs.positive_roots
    order = {b: k for k, b in enumerate(pos)}
    rootset = rs.root_set()
    table = {}

    def norm2(b):
        return rs.inner(b, b)

    def npos(a, b):
        if order[a] < order[b]:
            return table[(a, b)]
        return -table[(b, a)]

    def nn(x, y):
        # structure constant for arbitrary roots x, y with x + y a root
        xp = sum(x) > 0
        yp = sum(y) > 0
        if xp and yp:
            return npos(x, y)
        if not xp and not yp:
            return -nn(tuple(-v for v in x), tuple(-v for v in y))
        if not xp:
            return -nn(y, x)
        c = tuple(a + b for a, b in zip(x, y))
        if sum(c) > 0:
            my = tuple(-v for v in y)
            return -norm2(c) / norm2(x) * npos(my, c)
        return nn(tuple(-v for v in y), tuple(-v for v in x))

    def string_down(b, a):
        # p = max k with b - k a a root
        p = 0
        cur = b
        while True:
            cur = tuple(x - y for x, y in zip(cur, a))
            if cur in rootset:
                p += 1
            else:
                return p

    for gamma in pos:
        if sum(gamma) < 2:
            continue
        pairs = []
        for a in pos:
            if order[a] >= order.get(gamma, 10**9):
                break
            b = tuple(x - y for x, y in zip(gamma, a))
            if b in order and order[a] < order[b]:
                pairs.append((a, b))
        pairs.sort(key=lambda ab: order[ab[0]])
        a1, b1 = pairs[0]
        table[(a1, b1)] = Q(string_down(b1, a1) + 1)
        for a, b in pairs[1:]:
            ma = tuple(-v for v in a)
            mb = tuple(-v for v in b)
            total = Q(0)
            s2 = tuple(x - y for x, y in zip(b1, a))
            if s2 in rootset:
                total += nn(b1, ma) * nn(a1, mb) / norm2(s2)
            s3 = tuple(x - y for x, y in zip(a1, a))
            if s3 in rootset:
                total += nn(ma, a1) * nn(b1, mb) / norm2(s3)
            val = norm2(gamma) * total / table[(a1, b1)]
            if val.denominator != 1 or val == 0:
                raise InternalConsistencyError(
                    f"non-integral structure constant at {a} + {b}"
                )
            table[(a, b)] = val
    return table, nn


def _chevalley_cache():
    if not hasattr(_chevalley_cache, "store"):
        _chevalley_cache.store = {}
    return _chevalley_cache.store


def chevalley_algebra(cm: CartanMatrix) -> ChevalleyAlgebra:
    """Integer-constant split simple Lie algebra on a Chevalley basis.

    Basis: h_1..h_l (simple coroots), then e_beta, then f_beta over the
    positive roots in (height, lex) order.  The exact Jacobi self-check
    is mandatory; a defect raises instead of returning.
    """
    cache = _chevalley_cache()
    key = (cm.kind, cm.rank, cm.m)
    if key in cache:
        return cache[key]
    rs = roots_from_cartan(cm)
    l = rs.rank
    pos = rs.positive_roots
    p = len(pos)
    order = {b: k for k, b in enumerate(pos)}
    rootset = rs.root_set()
    table, nn = _build_n_table(rs)
    n_alg = l + 2 * p
    labels = (
        tuple(f"h{i+1}" for i in range(l))
        + tuple(_root_label("e", b) for b in pos)
        + tuple(_root_label("f", b) for b in pos)
    )

    def e_idx(b):
        return l + order[b]

    def f_idx(b):
        return l + p + order[b]

    c = [[None] * n_alg for _ in range(n_alg)]
    zero = zero_vec(n_alg)

    def put(i, j, entries):
        v = [Q(0)] * n_alg
        for idx, val in entries:
            v[idx] += val
        v = tuple(v)
        c[i][j] = v
        c[j][i] = tuple(-x for x in v)

    for i in range(n_alg):
        for j in range(n_alg):
            c[i][j] = zero
    for i in range(l):
        for k, b in enumerate(pos):
            w = rs.pairing(b, i)
            if w.denominator != 1:
                raise InternalConsistencyError("non-integral Cartan eigenvalue")
            if w:
                put(i, e_idx(b), [(e_idx(b), w)])
                put(i, f_idx(b), [(f_idx(b), -w)])
    for a in pos:
        for b in pos:
            if order[a] >= order[b]:
                continue
            s = tuple(x + y for x, y in zip(a, b))
            if s in rootset:
                val = table[(a, b)]
                put(e_idx(a), e_idx(b), [(e_idx(s), val)])
                # N(-a,-b) = -N(a,b)
                put(f_idx(a), f_idx(b), [(f_idx(s), -val)])
    for a in pos:
        # [e_a, f_a] = coroot of a
        da = rs.inner(a, a) / 2
        entries = []
        for i in range(l):
            if a[i]:
                coef = Q(a[i]) * rs.simple_norms[i] / da
                if coef.denominator != 1:
                    raise InternalConsistencyError("non-integral coroot")
                entries.append((i, coef))
        put(e_idx(a), f_idx(a), entries)
        for b in pos:
            if a == b:
                continue
            s = tuple(x - y for x, y in zip(a, b))
            if s in rootset:
                val = nn(a, tuple(-y for y in b))
                if val.denominator != 1:
                    raise InternalConsistencyError("non-integral mixed constant")
                tgt = e_idx(s) if sum(s) > 0 else f_idx(tuple(-x for x in s))
                put(e_idx(a), f_idx(b), [(tgt, val)])
    alg = LieAlgebra(n_alg, labels, tuple(tuple(row) for row in c))
    rep = jacobi_check(alg)
    if not rep.passed:
        raise InternalConsistencyError(
            f"Chevalley sign inconsistency: {len(rep.violations)} Jacobi defects "
            f"in {cm.label()}"
        )
    out = ChevalleyAlgebra(rs, alg, dict(table))
    cache[key] = out
    return out


def involution_from_node(ca: ChevalleyAlgebra, node: int) -> Mat:
    """Diagonal involution: +1 on the Cartan, (-1)^(node coefficient) on roots."""
    rs = ca.rootsys
    l = rs.rank
    pos = rs.positive_roots
    n = ca.alg.dim
    diag = [Q(1)] * n
    for k, b in enumerate(pos):
        s = Q(-1) ** (b[node - 1] % 2)
        diag[l + k] = s
        diag[l + len(pos) + k] = s
    return tuple(
        tuple(diag[i] if i == j else Q(0) for j in range(n)) for i in range(n)
    )


def _killing_on_cartan_row(ca: ChevalleyAlgebra, h_coords: Vec) -> Vec:
    """beta(h, h_j) for each simple coroot h_j, via the root-space sum."""
    rs = ca.rootsys
    l = rs.rank
    out = []
    for j in range(l):
        s = Q(0)
        for b in rs.positive_roots:
            bh = sum(h_coords[i] * rs.pairing(b, i) for i in range(l))
            s += 2 * bh * rs.pairing(b, j)
        out.append(s)
    return tuple(out)


def build_simple_tss(
    ca: ChevalleyAlgebra, asys: AdmissibleSystem, lam=Q(1)
) -> SymmetricTriple:
    """The simple triple (G, sigma_node, lam * h-underbar restricted to P).

    Omega(p, p') = -lam * beta(h, [p, p']), the 2-cocycle attached to the
    dual element h of the admissible node.
    """
    lam = Q(lam)
    if lam == 0:
        raise RootSystemError("lambda must be nonzero")
    rs = ca.rootsys
    if asys.rootsys.cartan.m != rs.cartan.m:
        raise RootSystemError("admissible system belongs to a different algebra")
    node = asys.node
    l = rs.rank
    pos = rs.positive_roots
    sigma = involution_from_node(ca, node)
    n = ca.alg.dim
    p_indices = [i for i in range(n) if sigma[i][i] == -1]
    beta_h = _killing_on_cartan_row(ca, asys.h)
    sp = ca.alg.sparse()
    m = len(p_indices)
    om = [[Q(0)] * m for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            s = Q(0)
            for k, v in sp[p_indices[a]][p_indices[b]]:
                if k < l:
                    s += v * beta_h[k]
            val = -lam * s
            om[a][b] = val
            om[b][a] = -val
    return SymmetricTriple(ca.alg, sigma, tuple(tuple(r) for r in om))


def table_c_skeleton(max_rank: int = RANK_CAP_DEFAULT) -> tuple:
    """Root-data skeleton rows (type, node, dim K, dim P, dim Z(K)).

    Covers the classical families up to max_rank plus E6 and E7; the
    center dimension comes from the rank drop of the K-subsystem.
    """
    rows = []
    fams = [("A", r) for r in range(1, max_rank + 1)]
    fams += [("B", r) for r in range(2, max_rank + 1)]
    fams += [("C", r) for r in range(2, max_rank + 1)]
    fams += [("D", r) for r in range(4, max_rank + 1)]
    fams += [("E", r) for r in (6, 7) if r <= max_rank]
    for kind, r in fams:
        rs = roots_from_cartan(cartan_matrix(kind, r))
        for node in admissible_nodes(rs):
            zero_pos = [b for b in rs.positive_roots if b[node - 1] == 0]
            odd = [b for b in rs.positive_roots if b[node - 1] % 2 == 1]
            dim_k = r + 2 * len(zero_pos)
            dim_p = 2 * len(odd)
            sub = Subspace.from_rows(r, [tuple(Q(x) for x in b) for b in zero_pos])
            dim_zk = r - sub.dim
            rows.append(
                {
                    "type": f"{kind}{r}",
                    "node": node,
                    "dim_K": dim_k,
                    "dim_P": dim_p,
                    "dim_ZK": dim_zk,
                }
            )
    return tuple(rows)
