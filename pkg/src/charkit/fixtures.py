"""Fixture file formats shared by the corpus data, the cache and the CLI.

Line formats (``#`` starts a comment, blank lines are ignored):

    cg j k = m1..m7:N ...       tensor-product series of two fundamentals
    mcg m1..m7 = w1..w7:N ...   decomposition of a monomial in the z's
    chi m1..m7 = <polynomial>   character in canonical polynomial text
    a j k = <polynomial>        an entry of the second-derivative table

Weights are written either as a compact digit string (``0000002``) or as
seven comma-separated integers (``0,0,0,0,0,0,12``).  Series fixtures are
validated against the exact dimension-sum identity at load time.
"""

from __future__ import annotations

import importlib.resources
import warnings

from .lie_core import RANK, FUNDAMENTAL_DIMS, weyl_dim
from .polyring import MultiPoly


class FixtureFormatError(ValueError):
    """A fixture line does not parse."""


class FixtureCorruptError(ValueError):
    """A fixture parses but fails its validation identity."""


def parse_weight(text):
    """Parse ``0000002`` or ``0,0,0,0,0,0,2`` into a 7-tuple of ints."""
    text = text.strip()
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    if len(parts) != RANK:
        raise FixtureFormatError(f"weight {text!r} does not have 7 entries")
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise FixtureFormatError(f"weight {text!r} has non-integer entries")
    if any(x < 0 for x in w):
        raise FixtureFormatError(f"weight {text!r} has negative entries")
    return w


def format_weight(w):
    """Compact digit string when possible, comma-separated otherwise."""
    if all(0 <= x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def data_path(name):
    """Path to a packaged data file."""
    return importlib.resources.files("charkit.data") / name


def _iter_lines(path, warn_empty=True):
    count = 0
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                count += 1
                yield lineno, line
    if count == 0 and warn_empty:
        warnings.warn(f"fixture file {path} contains no entries")


def _parse_series_rhs(rhs, lineno, path):
    series = {}
    for item in rhs.split():
        try:
            wtext, ntext = item.rsplit(":", 1)
            w = parse_weight(wtext)
            n = int(ntext)
        except (ValueError, FixtureFormatError) as exc:
            raise FixtureFormatError(
                f"{path}:{lineno}: bad series item {item!r}: {exc}")
        if n <= 0:
            raise FixtureFormatError(
                f"{path}:{lineno}: non-positive multiplicity in {item!r}")
        if w in series:
            raise FixtureFormatError(
                f"{path}:{lineno}: repeated weight {format_weight(w)}")
        series[w] = n
    return series


def _series_dim(series):
    return sum(n * weyl_dim(w) for w, n in series.items())


def load_cg_file(path, validate=True):
    """Parse ``cg j k = ...`` lines into {(j, k): {weight: mult}}."""
    out = {}
    for lineno, line in _iter_lines(path):
        try:
            head, rhs = line.split("=", 1)
            tag, j, k = head.split()
            if tag != "cg":
                raise ValueError(f"expected 'cg', got {tag!r}")
            j, k = int(j), int(k)
        except ValueError as exc:
            raise FixtureFormatError(f"{path}:{lineno}: {exc}")
        if not (1 <= j <= RANK and 1 <= k <= RANK):
            raise FixtureFormatError(f"{path}:{lineno}: bad pair {j} {k}")
        series = _parse_series_rhs(rhs, lineno, path)
        if validate:
            want = FUNDAMENTAL_DIMS[j - 1] * FUNDAMENTAL_DIMS[k - 1]
            got = _series_dim(series)
            if got != want:
                raise FixtureCorruptError(
                    f"{path}:{lineno}: series {j} {k} dimension sum {got} "
                    f"!= {want}")
        out[(min(j, k), max(j, k))] = series
    return out


def load_mcg_file(path, validate=True):
    """Parse ``mcg m = ...`` lines into {exponents: {weight: mult}}."""
    out = {}
    for lineno, line in _iter_lines(path):
        try:
            head, rhs = line.split("=", 1)
            tag, mono = head.split()
            if tag != "mcg":
                raise ValueError(f"expected 'mcg', got {tag!r}")
            exps = parse_weight(mono)
        except (ValueError, FixtureFormatError) as exc:
            raise FixtureFormatError(f"{path}:{lineno}: {exc}")
        series = _parse_series_rhs(rhs, lineno, path)
        if validate:
            want = 1
            for i in range(RANK):
                want *= FUNDAMENTAL_DIMS[i] ** exps[i]
            got = _series_dim(series)
            if got != want:
                raise FixtureCorruptError(
                    f"{path}:{lineno}: monomial series {format_weight(exps)} "
                    f"dimension sum {got} != {want}")
        out[exps] = series
    return out


def load_chi_file(path, validate=True):
    """Parse ``chi m = <poly>`` lines into {weight: MultiPoly}.

    Validation checks the two cheap character invariants: unit coefficient
    on z^m and the dimension evaluation.
    """
    out = {}
    for lineno, line in _iter_lines(path):
        try:
            head, rhs = line.split("=", 1)
            tag, wtext = head.split()
            if tag != "chi":
                raise ValueError(f"expected 'chi', got {tag!r}")
            w = parse_weight(wtext)
            poly = MultiPoly.from_text(rhs)
        except (ValueError, FixtureFormatError) as exc:
            raise FixtureFormatError(f"{path}:{lineno}: {exc}")
        if validate:
            if poly.coefficient_of(w) != 1:
                raise FixtureCorruptError(
                    f"{path}:{lineno}: character {format_weight(w)} lacks "
                    f"unit leading coefficient")
            got = poly.eval_integer(FUNDAMENTAL_DIMS)
            want = weyl_dim(w)
            if got != want:
                raise FixtureCorruptError(
                    f"{path}:{lineno}: character {format_weight(w)} "
                    f"evaluates to {got}, dimension is {want}")
        out[w] = poly
    return out


def load_a_table(path):
    """Parse ``a j k = <poly>`` lines into {(j, k): MultiPoly}."""
    out = {}
    for lineno, line in _iter_lines(path):
        try:
            head, rhs = line.split("=", 1)
            tag, j, k = head.split()
            if tag != "a":
                raise ValueError(f"expected 'a', got {tag!r}")
            j, k = int(j), int(k)
            poly = MultiPoly.from_text(rhs)
        except ValueError as exc:
            raise FixtureFormatError(f"{path}:{lineno}: {exc}")
        out[(min(j, k), max(j, k))] = poly
    return out


def load_errata(path):
    """Parse errata lines ``a jk : printed <poly> ; reconstructed <poly> ;
    verdict <who-wins>`` into {(j, k): (printed, reconstructed, verdict)}.
    An errata file with no entries is the good case, so no warning."""
    out = {}
    for lineno, line in _iter_lines(path, warn_empty=False):
        try:
            head, rest = line.split(":", 1)
            tag, jk = head.split()
            assert tag == "a" and len(jk) == 2
            j, k = int(jk[0]), int(jk[1])
            printed_part, recon_part, verdict_part = rest.split(";")
            printed = MultiPoly.from_text(
                printed_part.strip().removeprefix("printed").strip())
            recon = MultiPoly.from_text(
                recon_part.strip().removeprefix("reconstructed").strip())
            verdict = verdict_part.strip().removeprefix("verdict").strip()
            if verdict not in ("reconstructed-wins", "printed-wins"):
                raise ValueError(f"bad verdict {verdict!r}")
        except (ValueError, AssertionError) as exc:
            raise FixtureFormatError(f"{path}:{lineno}: {exc}")
        out[(j, k)] = (printed, recon, verdict)
    return out


def format_series_line(tag, key_text, series):
    """Render a cg/mcg line with weights ordered by descending height."""
    from .lie_core import weight_height2
    items = sorted(series.items(),
                   key=lambda it: (-weight_height2(it[0]),
                                   tuple(-x for x in it[0])))
    rhs = " ".join(f"{format_weight(w)}:{n}" for w, n in items)
    return f"{tag} {key_text} = {rhs}"
