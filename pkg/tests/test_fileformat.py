import pytest

from symsym.catalog import build
from symsym.fileformat import ParseError, parse_triple_text, serialize_triple
from symsym.linalg import Q, mat
from symsym.triple import fingerprint, transport_triple, validate_tss

T2_TEXT = """\
# the eps = +1 member of the dim-2 solvable family
basis: U e f
sigma: adapted K(U) P(e f)
bracket U f = e
bracket e f = U
omega e f = 1
"""


def test_parse_basic():
    t = parse_triple_text(T2_TEXT)
    assert t.alg.labels == ("U", "e", "f")
    assert validate_tss(t).passed
    assert fingerprint(t) == fingerprint(build("t2_eps", {"eps": 1}))


def test_parse_rational_coefficients_and_indices():
    text = """
basis: U e f
sigma: adapted K(U) P(e f)
bracket @1 @3 = e
bracket e f = -3/2 U
omega e f = 2/5
"""
    t = parse_triple_text(text)
    assert t.alg.c[1][2][0] == Q(-3, 2)
    assert t.omega[0][1] == Q(2, 5)


def test_round_trip_catalog_entries():
    for fam, params in (
        ("t2_eps", {"eps": -1}),
        ("t4_3", {"eps": 1, "epsp": -1, "eta": 1}),
        ("cotangent_S2", {"x": Q(1, 2)}),
        ("t4_1_a_x(2)", {"a": Q(2, 3), "x": -1}),
    ):
        t = build(fam, params)
        u = parse_triple_text(serialize_triple(t))
        assert u.alg.c == t.alg.c
        assert u.alg.labels == t.alg.labels
        assert u.sigma == t.sigma
        assert u.omega == t.omega


def test_round_trip_matrix_sigma():
    t = build("t2_eps", {"eps": 1})
    s = transport_triple(t, mat([[1, 1, 0], [0, 1, 0], [1, 0, 1]]))
    text = serialize_triple(s)
    assert "sigma: matrix" in text and "P@1" in text
    u = parse_triple_text(text)
    assert u.alg.c == s.alg.c and u.sigma == s.sigma and u.omega == s.omega


def test_unspecified_brackets_default_zero():
    t = parse_triple_text("basis: a b\nsigma: adapted K() P(a b)\nomega a b = 1\n")
    assert all(x == 0 for row in t.alg.c for v in row for x in v)


def test_antisymmetry_conflict_detected():
    text = """
basis: U e f
sigma: adapted K(U) P(e f)
bracket e f = U
bracket f e = U
"""
    with pytest.raises(ParseError) as ei:
        parse_triple_text(text)
    assert "antisymmetric" in str(ei.value)


def test_consistent_reverse_entry_allowed():
    text = """
basis: U e f
sigma: adapted K(U) P(e f)
bracket e f = U
bracket f e = -1 U
omega e f = 1
"""
    t = parse_triple_text(text)
    assert t.alg.c[1][2][0] == 1


def test_zero_denominator_is_parse_error():
    text = "basis: a b\nsigma: adapted K() P(a b)\nomega a b = 1/0\n"
    with pytest.raises(ParseError) as ei:
        parse_triple_text(text)
    assert "1/0" in str(ei.value)


def test_unknown_label_reports_line():
    text = "basis: a b\nsigma: adapted K() P(a b)\nbracket a q = b\n"
    with pytest.raises(ParseError) as ei:
        parse_triple_text(text)
    assert "line 3" in str(ei.value)


def test_missing_basis_rejected():
    with pytest.raises(ParseError):
        parse_triple_text("sigma: adapted K() P(a)\n")
