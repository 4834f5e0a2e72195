import random
from fractions import Fraction as Q

import pytest

from symsym.liealg import (
    InternalConsistencyError,
    LieAlgebra,
    LieAlgebraError,
    abelian,
    bracket,
    center,
    centralizer,
    change_of_basis,
    derived_series,
    direct_sum,
    from_table,
    invariant_closure,
    is_ideal,
    jacobi_check,
    killing_form,
    lower_central_series,
    quotient,
    radical,
    restrict,
)
from symsym.linalg import Subspace, identity, mat, mat_mul, transpose, unit_vec, vec


def sl2():
    return from_table(
        ["h", "e", "f"],
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): "h"},
    )


def heisenberg():
    return from_table(["U", "V", "E"], {("U", "V"): "E"})


def test_bracket_sl2_table():
    A = sl2()
    h, e, f = (unit_vec(3, i) for i in range(3))
    assert bracket(A, e, f) == h
    assert bracket(A, h, e) == vec(0, 2, 0)
    # antisymmetry, exactly
    assert bracket(A, f, e) == vec(-1, 0, 0)


def test_bracket_vanishes_on_diagonal():
    A = sl2()
    x = vec(3, Q(1, 2), -7)
    assert bracket(A, x, x) == vec(0, 0, 0)


def test_abelian_brackets_are_zero():
    A = abelian(["b1", "b2", "b3"])
    assert bracket(A, unit_vec(3, 0), unit_vec(3, 1)) == vec(0, 0, 0)


def test_bracket_dimension_mismatch():
    with pytest.raises(LieAlgebraError):
        bracket(sl2(), vec(1, 0), vec(0, 1, 0))


def test_antisymmetry_enforced_at_construction():
    c = [[vec(0, 0), vec(1, 0)], [vec(1, 0), vec(0, 0)]]
    with pytest.raises(LieAlgebraError):
        LieAlgebra(2, ("a", "b"), tuple(tuple(r) for r in c))


def test_jacobi_pass_sl2():
    rep = jacobi_check(sl2())
    assert rep.passed and rep.max_norm == 0 and rep.violations == ()


def test_jacobi_fail_broken_sl2():
    # replacing [e,f] = h by [e,f] = e breaks Jacobi on (h,e,f)
    A = from_table(
        ["h", "e", "f"],
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): "e"},
    )
    rep = jacobi_check(A)
    assert not rep.passed
    assert (0, 1, 2) in rep.violations
    assert rep.max_norm > 0


def test_killing_form_sl2():
    # trace of explicit 3x3 ad-matrix products, frozen by hand
    assert killing_form(sl2()) == mat([[8, 0, 0], [0, 0, 4], [0, 4, 0]])


def test_killing_form_nilpotent_is_zero():
    assert killing_form(heisenberg()) == mat([[0, 0, 0], [0, 0, 0], [0, 0, 0]])


def test_killing_form_direct_sum_block():
    A, B = sl2(), heisenberg()
    ks = killing_form(direct_sum(A, B))
    assert ks[0][:3] == killing_form(A)[0]
    for i in range(3):
        assert ks[i][3:] == (0, 0, 0)
        assert ks[3 + i] == (0,) * 6


def test_derived_series():
    assert [s.dim for s in derived_series(abelian(["a", "b", "c"]))] == [3, 0]
    assert [s.dim for s in derived_series(sl2())] == [3, 3]
    assert [s.dim for s in derived_series(heisenberg())] == [3, 1, 0]


def test_lower_central_series():
    assert [s.dim for s in lower_central_series(abelian(["a", "b"]))] == [2, 0]
    assert [s.dim for s in lower_central_series(sl2())] == [3, 3]
    # Heisenberg: C^1 = <E>, C^2 = [G, <E>] = 0
    assert [s.dim for s in lower_central_series(heisenberg())] == [3, 1, 0]


def test_center():
    assert center(heisenberg()).rows == (unit_vec(3, 2),)
    assert center(sl2()).dim == 0
    assert center(abelian(["a", "b"])).dim == 2


def test_centralizer_of_cartan_in_sl2():
    A = sl2()
    h_line = Subspace.from_rows(3, [unit_vec(3, 0)])
    assert centralizer(A, h_line).rows == (unit_vec(3, 0),)


def test_radical():
    assert radical(sl2()).dim == 0
    assert radical(heisenberg()).dim == 3
    S = direct_sum(sl2(), abelian(["z1", "z2"]))
    rad = radical(S)
    assert rad.rows == (unit_vec(5, 3), unit_vec(5, 4))


def test_invariant_closure():
    A = abelian(["a", "b"])
    S = Subspace.from_rows(2, [vec(1, 1)])
    assert invariant_closure(A, S).rows == S.rows
    B = sl2()
    assert invariant_closure(B, Subspace.from_rows(3, [unit_vec(3, 1)])).dim == 3
    H = heisenberg()
    E = Subspace.from_rows(3, [unit_vec(3, 2)])
    assert invariant_closure(H, E).rows == E.rows


def test_change_of_basis_identity():
    A = sl2()
    B = change_of_basis(A, identity(3), labels=A.labels)
    assert B.c == A.c


def test_change_of_basis_scaling():
    A = sl2()
    M = mat([[Q(1, 2), 0, 0], [0, Q(1, 2), 0], [0, 0, Q(1, 2)]])
    B = change_of_basis(A, M)
    # bilinearity forces halved constants for a basis shrunk by 2
    for i in range(3):
        for j in range(3):
            assert B.c[i][j] == tuple(x / 2 for x in A.c[i][j])


def test_killing_transport_convention():
    rng = random.Random(7)
    A = sl2()
    while True:
        M = mat([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        try:
            B = change_of_basis(A, M)
            break
        except LieAlgebraError:
            continue
    assert killing_form(B) == mat_mul(transpose(M), mat_mul(killing_form(A), M))


def test_singular_change_of_basis_rejected():
    with pytest.raises(LieAlgebraError):
        change_of_basis(sl2(), mat([[1, 0, 0], [0, 1, 0], [1, 1, 0]]))


def test_direct_sum_jacobi_and_center():
    S = direct_sum(sl2(), heisenberg())
    assert jacobi_check(S).passed
    assert center(S).dim == center(sl2()).dim + center(heisenberg()).dim


def test_restrict_and_quotient():
    S = direct_sum(sl2(), abelian(["z"]))
    rad = radical(S)
    sub = restrict(S, rad)
    assert sub.dim == 1 and derived_series(sub)[-1].dim == 0
    quo, proj = quotient(S, rad)
    assert quo.dim == 3
    assert jacobi_check(quo).passed
    assert killing_form(quo) == killing_form(sl2())


def test_is_ideal():
    H = heisenberg()
    assert is_ideal(H, Subspace.from_rows(3, [unit_vec(3, 2)]))
    assert not is_ideal(sl2(), Subspace.from_rows(3, [unit_vec(3, 1)]))
