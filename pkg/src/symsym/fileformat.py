"""Text format for triple definitions.

    # comments run to end of line
    basis: U e f
    sigma: adapted K(U) P(e f)
    bracket U f = e
    bracket e f = -1 U
    omega e f = 1

Brackets default to zero; the antisymmetric counterpart of every entry
is filled in automatically and checked for conflicts.  Coefficients are
exact rationals written p/q.  Labels may be replaced by @k (1-based
basis index); omega rows reference P-labels for an adapted sigma, or
P@k canonical-basis indices when sigma is a general matrix.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .liealg import LieAlgebra, LieAlgebraError
from .linalg import Q, Subspace, unit_vec, zero_vec
from .triple import SymmetricTriple, TripleError, split_sigma

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class ParseError(ValueError):
    def __init__(self, line_no, msg):
        super().__init__(f"line {line_no}: {msg}")
        self.line_no = line_no


def _parse_rational(tok, line_no):
    if not _RATIONAL.match(tok):
        raise ParseError(line_no, f"bad rational {tok!r}")
    num, _, den = tok.partition("/")
    if den and int(den) == 0:
        raise ParseError(line_no, f"bad rational {tok!r}: zero denominator")
    return Fraction(tok)


def _logical_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_triple_text(text: str) -> SymmetricTriple:
    labels = None
    sigma_mode = None  # ("adapted", K, P) or ("matrix", rows)
    brackets = {}  # (i, j) -> (line_no, coeff vec)
    omegas = {}  # (i, j) -> value, indices into P order
    omega_lines = []
    matrix_rows = []
    expect_rows = 0

    def label_index(tok, line_no):
        if tok.startswith("@"):
            try:
                k = int(tok[1:])
            except ValueError:
                raise ParseError(line_no, f"bad index {tok!r}")
            if not 1 <= k <= len(labels):
                raise ParseError(line_no, f"index {tok!r} out of range")
            return k - 1
        if tok not in labels:
            raise ParseError(line_no, f"unknown label {tok!r}")
        return labels.index(tok)

    for no, line in _logical_lines(text):
        if expect_rows:
            toks = line.split()
            if toks[0] != "row" or len(toks) != len(labels) + 1:
                raise ParseError(no, f"expected 'row' with {len(labels)} entries")
            matrix_rows.append(tuple(_parse_rational(t, no) for t in toks[1:]))
            expect_rows -= 1
            continue
        if line.startswith("basis:"):
            if labels is not None:
                raise ParseError(no, "duplicate basis line")
            labels = line[len("basis:"):].split()
            if not labels:
                raise ParseError(no, "empty basis")
            if len(set(labels)) != len(labels):
                raise ParseError(no, "duplicate basis labels")
            for lab in labels:
                if _RATIONAL.match(lab) or lab.startswith("@"):
                    raise ParseError(no, f"label {lab!r} would be ambiguous")
            continue
        if labels is None:
            raise ParseError(no, "basis line must come first")
        if line.startswith("sigma:"):
            if sigma_mode is not None:
                raise ParseError(no, "duplicate sigma line")
            rest = line[len("sigma:"):].strip()
            if rest.startswith("adapted"):
                m = re.match(r"adapted\s+K\(([^)]*)\)\s+P\(([^)]*)\)$", rest)
                if not m:
                    raise ParseError(no, "expected: sigma: adapted K(...) P(...)")
                kl = m.group(1).split()
                pl = m.group(2).split()
                if sorted(kl + pl) != sorted(labels):
                    raise ParseError(no, "K and P lists must partition the basis")
                sigma_mode = ("adapted", kl, pl)
            elif rest == "matrix":
                sigma_mode = ("matrix",)
                expect_rows = len(labels)
            else:
                raise ParseError(no, "sigma must be 'adapted K(..) P(..)' or 'matrix'")
            continue
        if line.startswith("bracket "):
            body = line[len("bracket "):]
            lhs, _, rhs = body.partition("=")
            pair = lhs.split()
            if len(pair) != 2 or not rhs.strip():
                raise ParseError(no, "expected: bracket A B = terms")
            i, j = (label_index(t, no) for t in pair)
            if i == j:
                raise ParseError(no, "bracket of a vector with itself is zero")
            vec = [Q(0)] * len(labels)
            toks = rhs.split()
            if toks == ["0"]:
                pass
            else:
                coeff = None
                for tok in toks:
                    if tok == "+":
                        continue
                    if _RATIONAL.match(tok):
                        if coeff is not None:
                            raise ParseError(no, "two coefficients in a row")
                        coeff = _parse_rational(tok, no)
                    else:
                        k = label_index(tok, no)
                        vec[k] += coeff if coeff is not None else Q(1)
                        coeff = None
                if coeff is not None:
                    raise ParseError(no, "dangling coefficient")
            key, skey, sign = (i, j), (j, i), 1
            if key in brackets:
                raise ParseError(no, f"duplicate bracket for {pair[0]} {pair[1]}")
            if skey in brackets:
                prev_no, prev = brackets[skey]
                if prev != tuple(-x for x in vec):
                    raise ParseError(
                        no,
                        f"conflicts with antisymmetric entry at line {prev_no}",
                    )
            brackets[key] = (no, tuple(vec))
            continue
        if line.startswith("omega "):
            omega_lines.append((no, line[len("omega "):]))
            continue
        raise ParseError(no, f"unrecognized directive {line.split()[0]!r}")

    if labels is None:
        raise ParseError(0, "missing basis line")
    if sigma_mode is None:
        raise ParseError(0, "missing sigma line")
    if expect_rows:
        raise ParseError(0, "sigma matrix rows missing")

    n = len(labels)
    c = [[zero_vec(n)] * n for _ in range(n)]
    c = [[list(zero_vec(n)) for _ in range(n)] for _ in range(n)]
    for (i, j), (no, vec) in brackets.items():
        c[i][j] = list(vec)
        c[j][i] = [-x for x in vec]
    try:
        alg = LieAlgebra(
            n, tuple(labels), tuple(tuple(tuple(r) for r in row) for row in c)
        )
    except LieAlgebraError as e:
        raise ParseError(0, str(e))

    if sigma_mode[0] == "adapted":
        _, kl, pl = sigma_mode
        diag = [Q(1) if lab in kl else Q(-1) for lab in labels]
        sigma = tuple(
            tuple(diag[i] if i == j else Q(0) for j in range(n)) for i in range(n)
        )
        p_order = [labels.index(lab) for lab in pl]
    else:
        sigma = tuple(matrix_rows)
        p_order = None

    tmp = SymmetricTriple(alg, sigma, ())
    try:
        _, P = split_sigma(tmp)
    except TripleError as e:
        raise ParseError(0, f"sigma: {e}")
    m = P.dim

    if p_order is not None:
        # map file P-labels to canonical echelon positions (unit rows)
        unit = P.unit_row_indices()
        if unit is None or sorted(unit) != sorted(p_order):
            raise ParseError(0, "adapted sigma P-list does not match eigenspace")
        pos_of_label = {labels[ui]: a for a, ui in enumerate(unit)}

    om = [[Q(0)] * m for _ in range(m)]
    for no, body in omega_lines:
        lhs, _, rhs = body.partition("=")
        pair = lhs.split()
        if len(pair) != 2 or not rhs.strip():
            raise ParseError(no, "expected: omega P Q = value")
        idx = []
        for tok in pair:
            if tok.startswith("P@"):
                try:
                    k = int(tok[2:])
                except ValueError:
                    raise ParseError(no, f"bad canonical index {tok!r}")
                if not 1 <= k <= m:
                    raise ParseError(no, f"canonical index {tok!r} out of range")
                idx.append(k - 1)
            else:
                if p_order is None:
                    raise ParseError(
                        no, "matrix sigma requires P@k omega indices"
                    )
                if tok not in pos_of_label:
                    raise ParseError(no, f"{tok!r} is not a P-basis label")
                idx.append(pos_of_label[tok])
        val = _parse_rational(rhs.split()[0], no) if rhs.split() else Q(0)
        if len(rhs.split()) != 1:
            raise ParseError(no, "omega value must be a single rational")
        a, b = idx
        if a == b and val != 0:
            raise ParseError(no, "omega is antisymmetric")
        if om[a][b] not in (Q(0), val):
            raise ParseError(no, "conflicting omega entries")
        om[a][b] = val
        om[b][a] = -val
    return SymmetricTriple(alg, sigma, tuple(tuple(r) for r in om))


def _fmt_q(x: Fraction) -> str:
    return str(x)


def serialize_triple(t: SymmetricTriple) -> str:
    """Canonical text rendering; parse(serialize(t)) reproduces t exactly."""
    A = t.alg
    n = A.dim
    labels = [str(x) for x in A.labels]
    out = [f"basis: {' '.join(labels)}"]
    diag = all(
        t.sigma[i][j] == 0 for i in range(n) for j in range(n) if i != j
    ) and all(t.sigma[i][i] in (1, -1) for i in range(n))
    if diag:
        kl = [labels[i] for i in range(n) if t.sigma[i][i] == 1]
        pl = [labels[i] for i in range(n) if t.sigma[i][i] == -1]
        out.append(f"sigma: adapted K({' '.join(kl)}) P({' '.join(pl)})")
        _, P = split_sigma(t)
        unit = P.unit_row_indices()
        p_names = [labels[ui] for ui in unit]
    else:
        out.append("sigma: matrix")
        for row in t.sigma:
            out.append("row " + " ".join(_fmt_q(x) for x in row))
        p_names = [f"P@{a+1}" for a in range(len(t.omega))]
    for i in range(n):
        for j in range(i + 1, n):
            v = A.c[i][j]
            if all(x == 0 for x in v):
                continue
            terms = []
            for k, x in enumerate(v):
                if x == 0:
                    continue
                if x == 1:
                    terms.append(labels[k])
                else:
                    terms.append(f"{_fmt_q(x)} {labels[k]}")
            out.append(f"bracket {labels[i]} {labels[j]} = " + " + ".join(terms))
    m = len(t.omega)
    for a in range(m):
        for b in range(a + 1, m):
            if t.omega[a][b] != 0:
                out.append(
                    f"omega {p_names[a]} {p_names[b]} = {_fmt_q(t.omega[a][b])}"
                )
    return "\n".join(out) + "\n"
