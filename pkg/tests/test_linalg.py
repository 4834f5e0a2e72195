import random
from fractions import Fraction as Q

import pytest

from symsym.linalg import (
    Subspace,
    _rref_rational,
    identity,
    inverse,
    is_invertible,
    kernel,
    mat,
    mat_mul,
    mat_vec,
    q,
    rank,
    rref,
    signature,
    solve,
    transpose,
    unit_vec,
    vec,
)


def random_mat(rng, m, n, frac=False):
    if frac:
        return mat(
            [
                [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)]
                for _ in range(m)
            ]
        )
    return mat([[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)])


def test_q_rejects_floats():
    with pytest.raises(TypeError):
        q(0.5)


def test_rref_simple():
    red, piv = rref(mat([[0, 2, 4], [1, 1, 1]]))
    assert piv == (0, 1)
    assert red == mat([[1, 0, -1], [0, 1, 2]])


def test_rref_matches_rational_reference():
    rng = random.Random(42)
    for trial in range(60):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        a = random_mat(rng, m, n, frac=trial % 2 == 0)
        assert rref(a) == _rref_rational(a), a


def test_rref_idempotent_and_canonical():
    rng = random.Random(7)
    for _ in range(20):
        a = random_mat(rng, 4, 5)
        red, _ = rref(a)
        again, _ = rref(red)
        assert red == again


def test_kernel_orthogonal_to_rows():
    rng = random.Random(3)
    for _ in range(20):
        a = random_mat(rng, 3, 6)
        for v in kernel(a, 6):
            assert all(sum(r[i] * v[i] for i in range(6)) == 0 for r in a)
        assert rank(a) + len(kernel(a, 6)) == 6


def test_solve_consistency():
    a = mat([[1, 2], [3, 4], [4, 6]])
    x = solve(a, vec(5, 11, 16))
    assert x == vec(1, 2)
    assert solve(a, vec(1, 0, 0)) is None


def test_inverse_round_trip():
    rng = random.Random(9)
    found = 0
    while found < 10:
        a = random_mat(rng, 4, 4)
        if not is_invertible(a):
            continue
        found += 1
        assert mat_mul(a, inverse(a)) == identity(4)


def test_subspace_canonical_equality():
    s1 = Subspace.from_rows(3, [vec(1, 1, 0), vec(0, 0, 1)])
    s2 = Subspace.from_rows(3, [vec(2, 2, 2), vec(0, 0, -5)])
    assert s1.rows == s2.rows


def test_subspace_coords_and_contains():
    s = Subspace.from_rows(3, [vec(1, 0, 1), vec(0, 1, 0)])
    v = vec(2, 3, 2)
    assert s.contains(v)
    co = s.coords(v)
    assert co == vec(2, 3)
    with pytest.raises(ValueError):
        s.coords(vec(1, 0, 0))


def test_subspace_intersect():
    s1 = Subspace.from_rows(3, [vec(1, 0, 0), vec(0, 1, 0)])
    s2 = Subspace.from_rows(3, [vec(0, 1, 1), vec(1, 0, 0)])
    inter = s1.intersect(s2)
    assert inter.rows == (unit_vec(3, 0),)


def test_signature_diag():
    assert signature(mat([[2, 0], [0, -3]])) == (1, 1, 0)
    assert signature(mat([[0, 0], [0, 0]])) == (0, 0, 2)


def test_signature_zero_diagonal_pivot():
    # hyperbolic plane: signature (1, 1)
    assert signature(mat([[0, 1], [1, 0]])) == (1, 1, 0)


def test_signature_congruence_invariance():
    rng = random.Random(5)
    base = mat([[1, 0, 0], [0, -2, 0], [0, 0, 0]])
    for _ in range(10):
        m = random_mat(rng, 3, 3)
        if not is_invertible(m):
            continue
        sym = mat_mul(transpose(m), mat_mul(base, m))
        assert signature(sym) == (1, 1, 1)


def test_signature_rejects_asymmetric():
    with pytest.raises(ValueError):
        signature(mat([[0, 1], [2, 0]]))
