import random

import pytest

from symsym.decompose import (
    commutant,
    decompose,
    flat_split,
    verify_uniqueness_pair,
)
from symsym.liealg import abelian, from_table
from symsym.linalg import Q, Subspace, identity, mat, rank
from symsym.triple import (
    SymmetricTriple,
    TripleError,
    direct_sum_triples,
    fingerprint,
    transport_triple,
    validate_tss,
)

from test_triple import diag_sigma, flat2, t2


def scramble(t, seed):
    rng = random.Random(seed)
    n = t.alg.dim
    while True:
        M = mat([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        try:
            return transport_triple(t, M)
        except Exception:
            continue


def flat4():
    return SymmetricTriple(
        abelian(["e1", "e2", "f1", "f2"]),
        diag_sigma(-1, -1, -1, -1),
        mat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]),
    )


def test_flat_split_recovers_flat_factor():
    t = direct_sum_triples(t2(1), flat2())
    t0, t1, asm = flat_split(t)
    assert t0.alg.dim == 2
    assert fingerprint(t1) == fingerprint(t2(1))


def test_flat_split_of_flat_triple():
    t0, t1, _ = flat_split(flat4())
    assert t0.alg.dim == 4 and t1.alg.dim == 0


def test_flat_split_of_exact_triple_is_trivial():
    t = t2(-1)
    t0, t1, _ = flat_split(t)
    assert t0.alg.dim == 0
    assert fingerprint(t1) == fingerprint(t)


def test_flat_split_rejects_invalid():
    bad = SymmetricTriple(t2(1).alg, t2(1).sigma, mat([[0, 0], [0, 0]]))
    with pytest.raises(TripleError):
        flat_split(bad)


def test_commutant_flat_is_full_endomorphisms():
    assert len(commutant(flat2())) == 4


def test_commutant_t2():
    # one commutation equation with ad(U)|_P nilpotent of rank 1:
    # f commutes iff f is upper triangular with equal diagonal in (e, f)
    basis = commutant(t2(1))
    assert len(basis) == 2
    assert identity(2) in [b for b in basis] or any(
        rank(b) == 2 for b in basis
    )


def test_decompose_flat_only():
    d = decompose(flat4())
    assert d.flat_factor.alg.dim == 4 and d.factors == ()


def test_decompose_recovers_two_factors():
    t = direct_sum_triples(t2(1), t2(-1))
    d = decompose(t)
    assert d.flat_factor.alg.dim == 0
    assert len(d.factors) == 2
    fps = sorted((fp.killing_signature for fp in d.factor_fingerprints))
    assert fps == [(0, 1, 2), (1, 0, 2)]


def test_decompose_scrambled_sums():
    base = {
        (1, 1): direct_sum_triples(t2(1), t2(1)),
        (1, -1): direct_sum_triples(t2(1), t2(-1)),
        (-1, -1): direct_sum_triples(t2(-1), t2(-1)),
    }
    for (e1, e2), t in base.items():
        want = sorted([fingerprint(t2(e1)), fingerprint(t2(e2))], key=str)
        for seed in range(3):
            s = scramble(t, seed)
            d = decompose(s)
            assert d.flat_factor.alg.dim == 0
            got = sorted(d.factor_fingerprints, key=str)
            assert got == want, (e1, e2, seed)


def test_decompose_scrambled_flat_plus_t2():
    for eps in (1, -1):
        t = direct_sum_triples(t2(eps), flat2())
        for seed in (0, 1):
            s = scramble(t, seed)
            d = decompose(s)
            assert d.flat_factor.alg.dim == 2
            assert [fp for fp in d.factor_fingerprints] == [fingerprint(t2(eps))]


def test_decompose_indecomposable_returns_single_factor():
    d = decompose(t2(1))
    assert d.flat_factor.alg.dim == 0
    assert len(d.factors) == 1
    assert fingerprint(d.factors[0]) == fingerprint(t2(1))


def test_assembly_certificate_verified_on_construction():
    # decompose raises InternalConsistencyError if reassembly fails, so a
    # successful call is itself the certificate check; spot-check shape
    t = direct_sum_triples(t2(1), flat2())
    d = decompose(scramble(t, 5))
    n = t.alg.dim
    assert len(d.assembly) == n and all(len(r) == n for r in d.assembly)


def test_verify_uniqueness_pair_match_across_scrambles():
    t = direct_sum_triples(t2(1), t2(-1))
    d1 = decompose(scramble(t, 11))
    d2 = decompose(scramble(t, 12))
    rep = verify_uniqueness_pair(d1, d2)
    assert rep.match


def test_verify_uniqueness_pair_mismatch():
    d1 = decompose(direct_sum_triples(t2(1), t2(1)))
    d2 = decompose(direct_sum_triples(t2(1), t2(-1)))
    assert not verify_uniqueness_pair(d1, d2).match


def test_verify_uniqueness_pair_reflexive():
    d = decompose(direct_sum_triples(t2(1), flat2()))
    assert verify_uniqueness_pair(d, d).match
