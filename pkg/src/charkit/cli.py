"""Command-line front end.

Commands
--------
character W [W...]    compute irreducible characters
cg W1 W2              Clebsch-Gordan series of a product of two characters
monomial-cg M         decompose a monomial in the fundamental characters
dim W [W...]          dimensions of irreducible representations
series-family K N     z7 * chi_{n lambda_k} against its closed form
verify CORPUS         re-derive a fixture corpus and report pass/fail

Weights are seven digits (``0000002``) or comma-separated (``0,...,12``).
Exit status: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import fixtures
from .csmodel import QuadraticCorpus, build_a
from .lie_core import weyl_dim
from .tensor import (
    cg_decompose, monomial_decompose, series_family_z7,
    verify_quadratic_roundtrip,
)

DEFAULT_CACHE = ".charcache"


def _weight(text):
    try:
        return fixtures.parse_weight(text)
    except fixtures.FixtureFormatError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    p = argparse.ArgumentParser(
        prog="charkit",
        description="Exact E7 characters and Clebsch-Gordan series.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--cache-dir", default=None,
                   help=f"character cache directory (default {DEFAULT_CACHE}; "
                        f"env CHARKIT_CACHE overrides)")
    p.add_argument("--no-cache", action="store_true",
                   help="compute everything fresh, do not touch the cache")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("character", help="compute irreducible characters")
    c.add_argument("weights", nargs="+", type=_weight)
    c.add_argument("--method", choices=("m1", "m2", "both"), default="m1")

    g = sub.add_parser("cg", help="Clebsch-Gordan series of chi_m * chi_n")
    g.add_argument("weights", nargs=2, type=_weight)

    mg = sub.add_parser("monomial-cg", help="decompose a monomial in the z's")
    mg.add_argument("monomial", type=_weight)

    d = sub.add_parser("dim", help="Weyl dimension of representations")
    d.add_argument("weights", nargs="+", type=_weight)

    f = sub.add_parser("series-family",
                       help="z7 * chi_{n lambda_k} against its closed form")
    f.add_argument("k", type=int)
    f.add_argument("n", type=int)

    v = sub.add_parser("verify", help="re-derive a fixture corpus")
    v.add_argument("corpus",
                   choices=("quadratic", "appendix-a", "appendix-b",
                            "oracle", "all"))
    v.add_argument("--trials", type=int, default=20,
                   help="torus points for the oracle corpus")
    v.add_argument("--seed", type=int, default=20240901)
    return p


def _cache_dir(args):
    if args.no_cache:
        return None
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get("CHARKIT_CACHE", DEFAULT_CACHE)


def _make_table(args):
    corpus = QuadraticCorpus.load_default()
    _, op, table = build_a(corpus)
    table.cache_dir = _cache_dir(args)
    if table.cache_dir:
        os.makedirs(table.cache_dir, exist_ok=True)
        table.flush_disk()
    return corpus, table


def _poly_json(w, poly):
    terms = sorted(poly.terms.items(),
                   key=lambda it: (sum(it[0]), tuple(reversed(it[0]))),
                   reverse=True)
    return {"weight": list(w),
            "polynomial": [[str(c), list(e)] for e, c in terms]}


def _series_items(series):
    from .lie_core import weight_height2
    return sorted(series.terms.items(),
                  key=lambda it: (-weight_height2(it[0]),
                                  tuple(-x for x in it[0])))


def _series_json(factors, series, dim_check):
    return {"factors": [list(f) for f in factors],
            "series": [{"weight": list(w), "mult": n}
                       for w, n in _series_items(series)],
            "dim_check": dim_check}


def _emit_series(args, factors, series, label):
    want = 1
    for f in factors:
        want *= weyl_dim(f)
    ok = series.total_dimension() == want
    if args.format == "json":
        print(json.dumps(_series_json(factors, series, ok)))
    else:
        print(f"# {label}, dimension {want}, dim_check "
              f"{'ok' if ok else 'FAILED'}")
        for w, n in _series_items(series):
            print(f"{fixtures.format_weight(w)}:{n}")
    return 0 if ok else 1


def cmd_character(args):
    _, table = _make_table(args)
    status = 0
    for w in args.weights:
        if args.method in ("m1", "both"):
            chi = table.character(w, method="m1")
        if args.method in ("m2", "both"):
            chi2 = table.character_m2(w)
            if args.method == "both" and chi != chi2:
                print(f"METHOD DISAGREEMENT for {fixtures.format_weight(w)}",
                      file=sys.stderr)
                status = 1
                continue
            chi = chi2
        if args.format == "json":
            print(json.dumps(_poly_json(w, chi)))
        else:
            print(chi.to_text())
    return status


def cmd_cg(args):
    _, table = _make_table(args)
    m, n = args.weights
    series = cg_decompose(m, n, table)
    label = f"chi_{fixtures.format_weight(m)} * chi_{fixtures.format_weight(n)}"
    return _emit_series(args, [m, n], series, label)


def cmd_monomial_cg(args):
    _, table = _make_table(args)
    exps = args.monomial
    series = monomial_decompose(exps, table)
    factors = []
    for i, ni in enumerate(exps):
        factors.extend([tuple(1 if j == i else 0 for j in range(7))] * ni)
    label = "monomial " + fixtures.format_weight(exps)
    return _emit_series(args, factors, series, label)


def cmd_dim(args):
    for w in args.weights:
        d = weyl_dim(w)
        if args.format == "json":
            print(json.dumps({"weight": list(w), "dim": str(d)}))
        else:
            print(d)
    return 0


def cmd_series_family(args):
    _, table = _make_table(args)
    rep = series_family_z7(args.k, args.n, table)
    if args.format == "json":
        print(json.dumps({
            "k": rep.k, "n": rep.n, "match": rep.match,
            "computed": _series_json([], rep.computed, True)["series"],
            "closed_form": [{"weight": list(w), "mult": m}
                            for w, m in sorted(rep.closed_form.items())],
        }))
    else:
        print(f"# z7 * chi_(n={rep.n}) lambda_{rep.k}: "
              f"{'match' if rep.match else 'MISMATCH'}")
        print(fixtures.format_series_line(
            "series", f"7 x {rep.k}^{rep.n}", rep.computed.terms))
        for w, a, b in rep.differences:
            print(f"  differs at {fixtures.format_weight(w)}: "
                  f"computed {a}, closed form {b}")
    return 0 if rep.match else 1


def _verify_quadratic(table, corpus, rows):
    report = verify_quadratic_roundtrip(corpus, table)
    for (j, k), ok in sorted(report.results.items()):
        rows.append((f"cg {j} {k}", ok,
                     "" if ok else f"differs: {report.differences[(j, k)][:3]}"))


def _verify_chars(table, rows):
    path = fixtures.data_path("third_order_chars.txt")
    corpus = fixtures.load_chi_file(path)
    for w in sorted(corpus):
        chi = table.character(w)
        ok = chi == corpus[w]
        rows.append((f"chi {fixtures.format_weight(w)}", ok,
                     "" if ok else "computed character differs from fixture"))


def _verify_cubic(table, rows):
    path = fixtures.data_path("cubic_series.txt")
    corpus = fixtures.load_mcg_file(path)
    for exps in sorted(corpus):
        series = monomial_decompose(exps, table)
        ok = series.terms == corpus[exps]
        rows.append((f"mcg {fixtures.format_weight(exps)}", ok,
                     "" if ok else "computed series differs from fixture"))


def _verify_oracle(table, rows, trials, seed):
    from .lie_core import FUNDAMENTAL_DIMS, FUNDAMENTAL_WEIGHTS
    from .oracle import freudenthal, torus_check
    for i in range(7):
        system = freudenthal(FUNDAMENTAL_WEIGHTS[i])
        ok = system.total() == FUNDAMENTAL_DIMS[i]
        rows.append((f"freudenthal lambda_{i + 1}", ok,
                     f"total {system.total()}"))
    targets = [FUNDAMENTAL_WEIGHTS[i] for i in range(7)]
    targets += [(0, 0, 0, 0, 0, 0, 2), (1, 0, 0, 0, 0, 0, 1),
                (0, 0, 0, 0, 0, 0, 3)]
    for w in targets:
        dev = torus_check(w, table.character(w), trials=trials, seed=seed)
        ok = dev < 1e-8
        rows.append((f"torus chi_{fixtures.format_weight(w)}", ok,
                     f"max deviation {dev:.3e}"))


def cmd_verify(args):
    corpus, table = _make_table(args)
    rows = []
    which = args.corpus
    if which in ("quadratic", "all"):
        _verify_quadratic(table, corpus, rows)
    if which in ("appendix-a", "all"):
        _verify_chars(table, rows)
    if which in ("appendix-b", "all"):
        _verify_cubic(table, rows)
    if which in ("oracle", "all"):
        _verify_oracle(table, rows, args.trials, args.seed)
    failed = [r for r in rows if not r[1]]
    if args.format == "json":
        print(json.dumps({
            "items": [{"item": name, "pass": ok, "detail": detail}
                      for name, ok, detail in rows],
            "passed": len(rows) - len(failed),
            "failed": len(failed),
        }))
    else:
        for name, ok, detail in rows:
            tail = f"  {detail}" if detail else ""
            print(f"{'PASS' if ok else 'FAIL'}  {name}{tail}")
        print(f"# {len(rows) - len(failed)}/{len(rows)} passed")
    return 1 if failed else 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "character": cmd_character,
        "cg": cmd_cg,
        "monomial-cg": cmd_monomial_cg,
        "dim": cmd_dim,
        "series-family": cmd_series_family,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (fixtures.FixtureFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
