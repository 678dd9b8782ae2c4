"""Decomposition of character products into irreducible constituents.

The multiplicity extraction is the straightforward triangular subtraction:
candidates mu run over the dominant weights below the top weight in order
of increasing height gap, each multiplicity is read off as the current
residual coefficient of z^mu, and N_mu * chi_mu is subtracted.  A zero
final residual certifies the decomposition (and, transitively, every
character that entered it); the exact dimension sum is checked as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lie_core import (
    RANK, FUNDAMENTAL_DIMS, FUNDAMENTAL_WEIGHTS,
    dominant_weights_below, is_dominant, weyl_dim, NonDominantError,
)


class DecompositionError(ArithmeticError):
    """Negative multiplicity or nonzero residual: some character upstream
    is wrong."""


@dataclass
class CGSeries:
    """A tensor-product decomposition: weight -> positive multiplicity."""

    terms: dict

    def __post_init__(self):
        if any(n <= 0 for n in self.terms.values()):
            raise ValueError("CGSeries multiplicities must be positive")

    def multiplicity(self, w):
        return self.terms.get(tuple(w), 0)

    def total_dimension(self):
        return sum(n * weyl_dim(w) for w, n in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, CGSeries):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == other
        return NotImplemented

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())


def _subtractive_decompose(product_terms, top, table):
    """Shared core: peel irreducible characters off a character-positive
    polynomial whose constituents all lie below ``top``."""
    residual = dict(product_terms)
    series = {}
    for mu in dominant_weights_below(top):
        c = residual.get(mu, 0)
        if c == 0:
            continue
        if c < 0:
            raise DecompositionError(
                f"negative multiplicity {c} for weight {mu} under {top}")
        chi = table.character(mu)
        for q, s in chi.terms.items():
            v = residual.get(q, 0) - c * s
            if v:
                residual[q] = v
            else:
                residual.pop(q, None)
        series[mu] = c
    if residual:
        raise DecompositionError(
            f"nonzero residual after decomposing below {top}: "
            f"{sorted(residual)[:5]} ...")
    return series


def cg_decompose(m, n, table):
    """Clebsch-Gordan series of the product of the characters of m and n."""
    m, n = tuple(m), tuple(n)
    if not (is_dominant(m) and is_dominant(n)):
        raise NonDominantError(f"weights {m}, {n} must be dominant")
    product = table.character(m) * table.character(n)
    top = tuple(a + b for a, b in zip(m, n))
    series = _subtractive_decompose(product.terms, top, table)
    assert series.get(top) == 1
    out = CGSeries(series)
    want = weyl_dim(m) * weyl_dim(n)
    got = out.total_dimension()
    if got != want:
        raise DecompositionError(
            f"dimension sum {got} != {want} for {m} x {n}")
    return out


def monomial_decompose(exps, table):
    """Decompose the monomial z^exps, i.e. the product of fundamental
    characters with the given multiplicities, into irreducibles."""
    exps = tuple(exps)
    if len(exps) != RANK or any(x < 0 for x in exps):
        raise ValueError(f"bad monomial exponents {exps}")
    series = _subtractive_decompose({exps: 1}, exps, table)
    assert series.get(exps) == 1
    out = CGSeries(series)
    want = 1
    for i in range(RANK):
        want *= FUNDAMENTAL_DIMS[i] ** exps[i]
    got = out.total_dimension()
    if got != want:
        raise DecompositionError(
            f"dimension sum {got} != {want} for monomial {exps}")
    return out


# ------------------------------------------------------------ z7 families

def _family_terms(k, n):
    """The closed-form series for z7 * chi_{n lambda_k} as {weight: mult}.

    Rows transcribe the published parametric families; rows whose shifted
    coordinate would go negative drop out, and coinciding rows merge with
    their multiplicities added (relevant only at the n = 1 boundary).
    """
    def w(**kw):
        out = [0] * RANK
        for key, val in kw.items():
            out[int(key[1]) - 1] += val
        return tuple(out)

    if k == 1:
        rows = [w(c1=n, c7=1), w(c1=n - 1, c2=1), w(c1=n - 1, c7=1)]
    elif k == 2:
        rows = [w(c2=n, c7=1), w(c2=n - 1, c3=1), w(c2=n - 1, c6=1),
                w(c2=n - 1, c1=1)]
    elif k == 3:
        rows = [w(c3=n, c7=1), w(c3=n - 1, c1=1, c2=1), w(c3=n - 1, c5=1),
                w(c3=n - 1, c1=1, c7=1), w(c3=n - 1, c2=1)]
    elif k == 4:
        rows = [w(c4=n, c7=1), w(c4=n - 1, c2=1, c3=1),
                w(c4=n - 1, c1=1, c5=1), w(c4=n - 1, c2=1, c6=1),
                w(c4=n - 1, c3=1, c7=1), w(c4=n - 1, c1=1, c2=1),
                w(c4=n - 1, c5=1)]
    elif k == 5:
        rows = [w(c5=n, c7=1), w(c5=n - 1, c4=1), w(c5=n - 1, c1=1, c6=1),
                w(c5=n - 1, c2=1, c7=1), w(c5=n - 1, c3=1),
                w(c5=n - 1, c6=1)]
    elif k == 6:
        rows = [w(c6=n, c7=1), w(c6=n - 1, c5=1), w(c6=n - 1, c1=1, c7=1),
                w(c6=n - 1, c2=1), w(c6=n - 1, c7=1)]
    elif k == 7:
        rows = [w(c7=n + 1), w(c7=n - 1, c6=1), w(c7=n - 1, c1=1),
                w(c7=n - 1)]
    else:
        raise ValueError(f"fundamental index {k} out of range 1..7")
    out = {}
    for row in rows:
        if any(x < 0 for x in row):
            continue
        out[row] = out.get(row, 0) + 1
    return out


@dataclass
class FamilyReport:
    k: int
    n: int
    computed: CGSeries
    closed_form: dict
    match: bool
    differences: list = field(default_factory=list)


def series_family_z7(k, n, table):
    """Decompose z7 * chi_{n lambda_k} and compare with the closed form."""
    if not 1 <= k <= RANK:
        raise ValueError(f"fundamental index {k} out of range 1..7")
    if n < 1:
        raise ValueError("n must be a positive integer")
    target = tuple(n if i == k - 1 else 0 for i in range(RANK))
    computed = cg_decompose(FUNDAMENTAL_WEIGHTS[6], target, table)
    closed = _family_terms(k, n)
    diffs = []
    for wgt in sorted(set(computed.terms) | set(closed)):
        a = computed.terms.get(wgt, 0)
        b = closed.get(wgt, 0)
        if a != b:
            diffs.append((wgt, a, b))
    return FamilyReport(k=k, n=n, computed=computed, closed_form=closed,
                        match=not diffs, differences=diffs)


@dataclass
class RoundTripReport:
    results: dict          # (j,k) -> bool
    differences: dict      # (j,k) -> list of (weight, computed, fixture)

    @property
    def passed(self):
        return all(self.results.values())


def verify_quadratic_roundtrip(corpus, table):
    """Recompute all 28 pairwise fundamental series from the operator and
    diff against the corpus fixtures, closing the bootstrap loop."""
    results = {}
    differences = {}
    for (j, k), fixture_series in sorted(corpus.series.items()):
        computed = cg_decompose(FUNDAMENTAL_WEIGHTS[j - 1],
                                FUNDAMENTAL_WEIGHTS[k - 1], table)
        diffs = []
        for wgt in sorted(set(computed.terms) | set(fixture_series)):
            a = computed.terms.get(wgt, 0)
            b = fixture_series.get(wgt, 0)
            if a != b:
                diffs.append((wgt, a, b))
        results[(j, k)] = not diffs
        if diffs:
            differences[(j, k)] = diffs
    return RoundTripReport(results=results, differences=differences)
