import pytest

from symsym.catalog import (
    CatalogError,
    build,
    distinguish,
    entry,
    enumerate_catalog,
    families,
    nilpotent_k_check,
    parameter_grid,
    verify_all,
)
from symsym.decompose import decompose
from symsym.liealg import center, is_solvable
from symsym.linalg import Q
from symsym.triple import (
    TripleError,
    exactness,
    fingerprint,
    heisenberg_extension,
    radical_part,
    split_sigma,
    validate_tss,
)


def test_build_t2_eps():
    t = build("t2_eps", {"eps": 1})
    assert t.alg.dim == 3
    K, P = split_sigma(t)
    assert K.dim == 1 and P.dim == 2
    assert validate_tss(t).passed


def test_build_cotangent_cases():
    for case in ("a", "b", "c"):
        t = build("cotangent", {"case": case, "x": 1})
        assert validate_tss(t).passed
        pr, ok = radical_part(t)
        assert pr.dim == 2 and ok is True


def test_cotangent_killing_signatures_distinguish_cases():
    # su(2) levi vs sl(2,R) levi show up in the Killing signature
    fa = fingerprint(build("cotangent_D", {"x": 0}))
    fb = fingerprint(build("cotangent_S2", {"x": 0}))
    fc = fingerprint(build("cotangent_H1", {"x": 0}))
    assert fa.killing_signature != fb.killing_signature
    assert fb.killing_signature != fc.killing_signature


def test_build_t4_3_not_exact_trivial_center():
    for eps in (1, -1):
        for eta in (0, 1):
            t = build("t4_3", {"eps": eps, "epsp": 1, "eta": eta})
            assert exactness(t) is None
            assert center(t.alg).dim == 0


def test_heisenberg_extension_of_t4_3_is_exact():
    t = build("t4_3", {"eps": -1, "epsp": 1, "eta": 1})
    h = heisenberg_extension(t)
    assert h.alg.dim == t.alg.dim + 1
    assert exactness(h) is not None


def test_out_of_domain_rejected():
    with pytest.raises(CatalogError):
        build("t4_1_a_x(2)", {"a": 0, "x": 1})
    with pytest.raises(CatalogError):
        build("t2_eps", {"eps": 2})
    with pytest.raises(CatalogError):
        build("t2_eps", {"eps": 1, "bogus": 3})
    with pytest.raises(CatalogError):
        build("no_such_family", {})


def test_metadata_rows_have_no_builder():
    with pytest.raises(CatalogError):
        build("simple_su3", {})


def test_verify_all_passes():
    rep = verify_all()
    assert rep.passed, [r for r in rep.rows if not r[2]]


def test_verify_all_with_cap():
    rep = verify_all(max_params_per_family=2)
    assert rep.passed
    assert all(n <= 2 for _, n, _, _ in rep.rows)


def test_x0_degeneration_of_t4_2_families():
    # Remark-(ii) content: sums of two dim-2 triples appear in the
    # t4(1)-series exactly at x = 0
    t = build("t4_2_eps_0_x(1)", {"eps": 1, "x": 0})
    d = decompose(t)
    assert len(d.factors) == 2 and d.flat_factor.alg.dim == 0
    assert sorted(fp.killing_signature for fp in d.factor_fingerprints) == [
        (1, 0, 2),
        (1, 0, 2),
    ]
    t = build("t4_2_0_eps_x(1)", {"eps": 1, "x": 0})
    d = decompose(t)
    assert sorted(fp.killing_signature for fp in d.factor_fingerprints) == [
        (0, 1, 2),
        (1, 0, 2),
    ]


def test_x0_u1_and_u3_members_stay_indecomposable():
    # the nilpotent (U1) and rotational (U3) members have no K-invariant
    # symplectic plane, so they do not split even at x = 0
    for fam in ("t4_1_eps_x(1)", "t4_3_eps_x(1)"):
        d = decompose(build(fam, {"eps": 1, "x": 0}))
        assert len(d.factors) == 1 and d.flat_factor.alg.dim == 0


def test_nilpotent_k_check_on_solvable_entries():
    for fam, params in (
        ("t2_eps", {"eps": 1}),
        ("t4_1_eps_x(1)", {"eps": -1, "x": 1}),
        ("t4_3", {"eps": 1, "epsp": -1, "eta": 0}),
        ("t4_5", {"eps": 1, "u": Q(1, 2), "eta": -1}),
        ("t4_6", {"eps": -1}),
        ("t4_8", {}),
    ):
        assert nilpotent_k_check(build(fam, params)) is True


def test_nilpotent_k_check_flat():
    assert nilpotent_k_check(build("t4_0", {})) is True


def test_nilpotent_k_check_rejects_semisimple():
    with pytest.raises(TripleError):
        nilpotent_k_check(build("t2_S2", {"x": 1}))


def test_distinguish_p5_signs():
    cert = distinguish(
        "t4_5", {"eps": 1, "u": 0, "eta": 0}, "t4_5", {"eps": -1, "u": 0, "eta": 0}
    )
    assert cert is not None and cert.invariant == "killing_signature"


def test_distinguish_exactness():
    cert = distinguish(
        "t4_3", {"eps": 1, "epsp": 1, "eta": 0}, "t4_4", {"eps": 1, "a": 1, "b": 0}
    )
    assert cert is not None and cert.invariant == "exact"


def test_distinguish_self_inconclusive():
    assert distinguish("t2_eps", {"eps": 1}, "t2_eps", {"eps": 1}) is None


def test_enumerate_catalog_counts():
    rows = enumerate_catalog()
    by_family = {r[0]: r for r in rows}
    # dimension-2 list has 6 entries
    dim2 = [f for f in by_family if f.startswith("t2_") and "+" not in f]
    assert sorted(dim2) == ["t2_0", "t2_D", "t2_H1", "t2_S2", "t2_eps"]
    # 5 entries but 6 triples: t2_eps carries both signs
    # simple dim-4 list has 5 rows
    simple = [f for f in by_family if f.startswith("simple_")]
    assert len(simple) == 5
    # solvable dim-4 normal forms from the classification list
    solvable4 = [
        "t4_0",
        "t4_1_eps_x(1)",
        "t4_2_eps_0_x(1)",
        "t4_2_0_eps_x(1)",
        "t4_3_eps_x(1)",
        "t4_1_a_x(2)",
        "t4_2_eps_epsp_a_x(2)",
        "t4_3_eps_epsp_eta",
        "t4_4_eps_a_b",
        "t4_5_eps_u_eta",
        "t4_6_eps",
        "t4_7_eps",
        "t4_8",
        "t2_0+t2_eps",
    ]
    for f in solvable4:
        assert f in by_family, f


def test_aliases():
    assert entry("t4_3").family == "t4_3_eps_epsp_eta"
    assert entry("t4_1").family == "t4_1_eps_x(1)"


def test_parameter_grid_respects_domains():
    e = entry("t4_1_a_x(2)")
    for params in parameter_grid(e):
        assert params["a"] != 0
