"""Command line interface: check, decompose, simple, catalog, invariants.

Exit codes are a stable contract: 0 success, 1 mathematical check
failure, 2 input error (bad file, unknown family, out-of-domain
parameters).  Reports render as deterministic key/value text or JSON;
rationals are always printed exactly as p/q.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog as cat
from .decompose import decompose as run_decompose
from .fileformat import ParseError, parse_triple_text, serialize_triple
from .linalg import Q
from .rootsys import (
    RANK_CAP_DEFAULT,
    RootSystemError,
    admissible_nodes,
    admissible_system,
    aut_phi_orbits,
    build_simple_tss,
    cartan_matrix,
    chevalley_algebra,
    roots_from_cartan,
)
from .triple import (
    TripleError,
    center_of_K,
    exactness,
    fingerprint,
    split_sigma,
    validate_tss,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or isinstance(v, (int, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return str(v)


def _render_value(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_render_value(x) for x in v) + ")"
    return str(v)


def emit(report, fmt, out=None):
    if out is None:
        out = sys.stdout
    if fmt == "json":
        out.write(
            json.dumps({k: _jsonable(v) for k, v in report}, indent=2) + "\n"
        )
    else:
        for k, v in report:
            out.write(f"{k}: {_render_value(v)}\n")


def _fingerprint_report(fp):
    return [
        ("dim_G", fp.dim_g),
        ("dim_K", fp.dim_k),
        ("dim_P", fp.dim_p),
        ("derived_series_dims", fp.derived_dims),
        ("lower_central_dims", fp.lower_central_dims),
        ("dim_center_G", fp.dim_center_g),
        ("dim_center_K", fp.dim_center_k),
        ("killing_signature", fp.killing_signature),
        ("killing_signature_on_K", fp.killing_signature_on_k),
        ("exact", fp.exact),
        ("dim_P_R", fp.dim_p_r),
        ("nilpotent_K_action", fp.nilpotent_k_action),
    ]


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(0, str(e))
    return parse_triple_text(text)


def cmd_check(args) -> int:
    try:
        t = _load(args.path)
    except ParseError as e:
        emit([("error", str(e))], args.format, out=sys.stderr)
        return EXIT_INPUT
    rep = validate_tss(t)
    report = [("file", args.path), ("dim_G", t.alg.dim)]
    for name, ok, detail in rep.checks:
        report.append((name, ok))
        if not ok and detail:
            report.append((f"{name}_witness", detail))
    report.append(("valid", rep.passed))
    emit(report, args.format)
    return EXIT_OK if rep.passed else EXIT_MATH


def cmd_decompose(args) -> int:
    try:
        t = _load(args.path)
    except ParseError as e:
        emit([("error", str(e))], args.format, out=sys.stderr)
        return EXIT_INPUT
    rep = validate_tss(t)
    if not rep.passed:
        emit(
            [("error", "input is not a valid triple"), ("failures", rep.failures())],
            args.format,
            sys.stderr,
        )
        return EXIT_MATH
    d = run_decompose(t, seed=args.seed)
    report = [
        ("file", args.path),
        ("flat_dim", d.flat_factor.alg.dim),
        ("n_factors", len(d.factors)),
    ]
    for i, f in enumerate(d.factors, start=1):
        fp = fingerprint(f)
        report.append((f"factor{i}_dim_P", fp.dim_p))
        for k, v in _fingerprint_report(fp):
            report.append((f"factor{i}_{k}", v))
    report.append(("assembly", [list(r) for r in d.assembly]))
    emit(report, args.format)
    return EXIT_OK


def _rank_cap():
    raw = os.environ.get("SYMSYM_RANK_CAP", "")
    try:
        return int(raw) if raw else RANK_CAP_DEFAULT
    except ValueError:
        return RANK_CAP_DEFAULT


def cmd_simple(args) -> int:
    cap = _rank_cap()
    if args.rank > cap:
        emit(
            [("error", f"rank {args.rank} above cap {cap} (SYMSYM_RANK_CAP)")],
            args.format,
            sys.stderr,
        )
        return EXIT_INPUT
    try:
        cm = cartan_matrix(args.type, args.rank)
        rs = roots_from_cartan(cm)
    except RootSystemError as e:
        emit([("error", str(e))], args.format, out=sys.stderr)
        return EXIT_INPUT
    nodes = admissible_nodes(rs)
    if args.node is None:
        report = [
            ("type", cm.label()),
            ("positive_roots", len(rs.positive_roots)),
            ("highest_root", list(max(rs.positive_roots, key=sum))),
            ("admissible_nodes", nodes),
            ("aut_phi_orbits", aut_phi_orbits(rs)),
        ]
        emit(report, args.format)
        return EXIT_OK
    if args.node not in nodes:
        emit(
            [
                ("error", f"node {args.node} of {cm.label()} is not admissible"),
                ("admissible_nodes", nodes),
            ],
            args.format,
            sys.stderr,
        )
        return EXIT_MATH
    lam = Q(args.lam)
    ca = chevalley_algebra(cm)
    t = build_simple_tss(ca, admissible_system(rs, args.node), lam)
    rep = validate_tss(t)
    K, P = split_sigma(t)
    report = [
        ("type", cm.label()),
        ("node", args.node),
        ("lambda", lam),
        ("dim_G", t.alg.dim),
        ("dim_K", K.dim),
        ("dim_P", P.dim),
        ("dim_Z_K", center_of_K(t).dim),
        ("valid", rep.passed),
        ("exact", exactness(t) is not None),
    ]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_triple(t))
        report.append(("written", args.out))
    emit(report, args.format)
    return EXIT_OK if rep.passed else EXIT_MATH


def _parse_params(extras, fmt):
    params = {}
    key = None
    for tok in extras:
        if tok.startswith("--"):
            if key is not None:
                raise cat.CatalogError(f"flag {key} is missing a value")
            key = tok[2:]
            if "=" in key:
                k, _, v = key.partition("=")
                params[k] = v
                key = None
        else:
            if key is None:
                raise cat.CatalogError(f"unexpected argument {tok!r}")
            params[key] = tok
            key = None
    if key is not None:
        raise cat.CatalogError(f"flag {key} is missing a value")
    out = {}
    for k, v in params.items():
        if k == "case":
            out[k] = v
        else:
            try:
                out[k] = int(v) if "/" not in v and "." not in v else Fraction(v)
            except ValueError:
                raise cat.CatalogError(f"bad value for {k}: {v!r}")
    return out


def cmd_catalog(args, extras) -> int:
    if args.family is None:
        if extras:
            emit(
                [("error", f"unexpected arguments: {extras}")],
                args.format,
                sys.stderr,
            )
            return EXIT_INPUT
        rep = cat.verify_all(args.max_per_family)
        report = [("families", len(rep.rows))]
        for fam, n, ok, detail in rep.rows:
            report.append((fam, f"{'pass' if ok else 'FAIL'} ({n} samples)"))
            if not ok:
                report.append((f"{fam}_detail", detail))
        report.append(("all_passed", rep.passed))
        emit(report, args.format)
        return EXIT_OK if rep.passed else EXIT_MATH
    try:
        params = _parse_params(extras, args.format)
        t = cat.build(args.family, params)
    except cat.CatalogError as e:
        emit([("error", str(e))], args.format, out=sys.stderr)
        return EXIT_INPUT
    rep = validate_tss(t)
    report = [
        ("family", args.family),
        ("params", {k: v for k, v in sorted(params.items())}),
        ("valid", rep.passed),
    ]
    report += _fingerprint_report(fingerprint(t))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_triple(t))
        report.append(("written", args.out))
    emit(report, args.format)
    return EXIT_OK if rep.passed else EXIT_MATH


def cmd_invariants(args) -> int:
    try:
        t = _load(args.path)
    except ParseError as e:
        emit([("error", str(e))], args.format, out=sys.stderr)
        return EXIT_INPUT
    rep = validate_tss(t)
    if not rep.passed:
        emit(
            [("error", "input is not a valid triple"), ("failures", rep.failures())],
            args.format,
            sys.stderr,
        )
        return EXIT_MATH
    report = [("file", args.path)] + _fingerprint_report(fingerprint(t))
    emit(report, args.format)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="symsym",
        description="exact tools for symplectic symmetric triples",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="validate a triple file")
    c.add_argument("path")

    d = sub.add_parser("decompose", help="split a triple into factors")
    d.add_argument("path")
    d.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("simple", help="admissible nodes and simple triples")
    s.add_argument("--type", required=True)
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--node", type=int)
    s.add_argument("--lambda", dest="lam", default="1")
    s.add_argument("--out")

    k = sub.add_parser("catalog", help="catalogue sweep or single entry")
    k.add_argument("--family")
    k.add_argument("--out")
    k.add_argument("--max-per-family", type=int, default=None)

    i = sub.add_parser("invariants", help="fingerprint of a triple file")
    i.add_argument("path")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args, extras = parser.parse_known_args(argv)
    if extras and args.command != "catalog":
        parser.error(f"unrecognized arguments: {' '.join(extras)}")
    if args.command == "check":
        return cmd_check(args)
    if args.command == "decompose":
        return cmd_decompose(args)
    if args.command == "simple":
        return cmd_simple(args)
    if args.command == "catalog":
        return cmd_catalog(args, extras)
    if args.command == "invariants":
        return cmd_invariants(args)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
