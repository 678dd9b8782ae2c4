import pytest

from charkit import fixtures
from charkit.charsolve import CharacterTable
from charkit.lie_core import FUNDAMENTAL_WEIGHTS, ZERO_WEIGHT, weyl_dim
from charkit.polyring import MultiPoly
from charkit.tensor import (
    CGSeries, DecompositionError, cg_decompose, monomial_decompose,
    series_family_z7, verify_quadratic_roundtrip,
)

L = FUNDAMENTAL_WEIGHTS


def test_cg_l7_l7(table):
    got = cg_decompose(L[6], L[6], table)
    assert got.terms == {(0, 0, 0, 0, 0, 0, 2): 1, L[0]: 1, L[5]: 1,
                         ZERO_WEIGHT: 1}
    assert got.total_dimension() == 56 * 56


def test_cg_with_trivial_factor(table):
    m = (0, 1, 0, 0, 1, 0, 0)
    assert cg_decompose(m, ZERO_WEIGHT, table).terms == {m: 1}


def test_cg_symmetry(table):
    a = cg_decompose(L[1], L[6], table)
    b = cg_decompose(L[6], L[1], table)
    assert a.terms == b.terms


def test_cg_leading_multiplicity_one(table):
    for m, n in [(L[0], L[2]), (L[4], L[6]), (L[1], L[1])]:
        got = cg_decompose(m, n, table)
        top = tuple(x + y for x, y in zip(m, n))
        assert got.multiplicity(top) == 1


def test_trivial_rep_multiplicity_reflects_self_duality(table):
    # all irreducibles are self-adjoint, so chi_j * chi_k contains the
    # trivial representation once iff j == k
    for j in range(7):
        for k in range(j, 7):
            got = cg_decompose(L[j], L[k], table)
            assert got.multiplicity(ZERO_WEIGHT) == (1 if j == k else 0)


def test_monomial_z7_squared(table):
    got = monomial_decompose((0, 0, 0, 0, 0, 0, 2), table)
    assert got.terms == {(0, 0, 0, 0, 0, 0, 2): 1, L[0]: 1, L[5]: 1,
                         ZERO_WEIGHT: 1}


def test_monomial_single_variable(table):
    assert monomial_decompose(L[0], table).terms == {L[0]: 1}


def test_monomial_z7_cubed(table):
    got = monomial_decompose((0, 0, 0, 0, 0, 0, 3), table)
    assert got.terms == {
        (0, 0, 0, 0, 0, 0, 3): 1,
        (0, 0, 0, 0, 0, 1, 1): 2,
        (0, 0, 0, 0, 1, 0, 0): 1,
        (1, 0, 0, 0, 0, 0, 1): 3,
        (0, 1, 0, 0, 0, 0, 0): 2,
        (0, 0, 0, 0, 0, 0, 1): 4,
    }


def test_monomial_z1_cubed_matches_fixture(table):
    fixture = fixtures.load_mcg_file(fixtures.data_path("cubic_series.txt"))
    want = fixture[(3, 0, 0, 0, 0, 0, 0)]
    got = monomial_decompose((3, 0, 0, 0, 0, 0, 0), table)
    assert got.terms == want
    assert len(want) == 11
    assert want[(1, 0, 0, 0, 0, 0, 0)] == 5


def test_dimension_identity_everywhere(table):
    for m, n in [(L[0], L[6]), (L[2], L[6])]:
        got = cg_decompose(m, n, table)
        assert got.total_dimension() == weyl_dim(m) * weyl_dim(n)


def test_decomposition_error_on_corrupted_character(operator):
    t = CharacterTable(operator)
    bad = MultiPoly.from_text("1*z7^2 -1*z6 -1*z1 -2")  # wrong constant
    t.seed((0, 0, 0, 0, 0, 0, 2), bad)
    with pytest.raises(DecompositionError):
        cg_decompose(L[6], L[6], t)


def test_cgseries_rejects_nonpositive():
    with pytest.raises(ValueError):
        CGSeries({L[0]: 0})


def test_family_k7(table):
    rep = series_family_z7(7, 2, table)
    assert rep.match
    assert rep.computed.terms == {
        (0, 0, 0, 0, 0, 0, 3): 1, (0, 0, 0, 0, 0, 1, 1): 1,
        (1, 0, 0, 0, 0, 0, 1): 1, (0, 0, 0, 0, 0, 0, 1): 1}


def test_family_k7_n1_degenerates_to_quadratic(table):
    rep = series_family_z7(7, 1, table)
    assert rep.match
    assert rep.computed.terms == cg_decompose(L[6], L[6], table).terms


def test_family_k2_n2(table):
    rep = series_family_z7(2, 2, table)
    assert rep.match
    assert rep.computed.terms == {
        (0, 2, 0, 0, 0, 0, 1): 1, (0, 1, 1, 0, 0, 0, 0): 1,
        (0, 1, 0, 0, 0, 1, 0): 1, (1, 1, 0, 0, 0, 0, 0): 1}


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7])
def test_family_n1_matches_quadratic_series(k, table, corpus):
    rep = series_family_z7(k, 1, table)
    assert rep.match
    pair = (min(k, 7), max(k, 7))
    assert rep.computed.terms == corpus.series[pair]


def test_family_k4(table):
    # the widest family row: seven constituents for every n
    rep = series_family_z7(4, 2, table)
    assert rep.match
    assert len(rep.computed.terms) == 7


def test_family_argument_validation(table):
    with pytest.raises(ValueError):
        series_family_z7(0, 2, table)
    with pytest.raises(ValueError):
        series_family_z7(7, 0, table)


def test_quadratic_roundtrip(corpus, table):
    report = verify_quadratic_roundtrip(corpus, table)
    assert report.passed
    assert len(report.results) == 28
    assert report.results[(1, 7)]
    # spot values against the fixtures
    got17 = cg_decompose(L[0], L[6], table)
    assert got17.terms == {(1, 0, 0, 0, 0, 0, 1): 1, L[1]: 1, L[6]: 1}
    got44 = cg_decompose(L[3], L[3], table)
    assert got44.multiplicity((1, 1, 0, 0, 0, 0, 1)) == 12
