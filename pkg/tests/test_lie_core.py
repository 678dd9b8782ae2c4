from fractions import Fraction

import pytest

from charkit.lie_core import (
    CARTAN_AINV2, FUNDAMENTAL_DIMS, FUNDAMENTAL_WEIGHTS, RANK,
    TWO_RHO_ALPHA, ZERO_WEIGHT,
    cartan_matrix, dominant_weights_below, dominant_weights_below_boxed,
    eigenvalue, height_of, weight_diff_in_roots, weight_height2, weyl_dim,
    NonDominantError,
)

L = FUNDAMENTAL_WEIGHTS


def test_cartan_matrix_entries():
    data = cartan_matrix()
    # 1-indexed: A[1][3] = -1, A[1][2] = 0
    assert data.A[0][2] == -1
    assert data.A[0][1] == 0
    for i in range(RANK):
        assert data.A[i][i] == 2


def test_ainv_is_exact_inverse():
    data = cartan_matrix()
    for i in range(RANK):
        for j in range(RANK):
            s = sum(data.Ainv[i][k] * data.A[k][j] for k in range(RANK))
            assert s == (1 if i == j else 0)
            assert 2 * data.Ainv[i][j] == CARTAN_AINV2[i][j]


def test_positive_roots_histogram_and_weyl_vector():
    data = cartan_matrix()
    assert len(data.positive_roots) == 63
    hist = {}
    for r in data.positive_roots:
        hist[sum(r)] = hist.get(sum(r), 0) + 1
    assert [hist.get(h, 0) for h in range(1, 18)] == [
        7, 6, 6, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 1, 1]
    # the highest root
    assert data.positive_roots[-1] == (2, 2, 3, 4, 3, 2, 1)
    # sum of positive roots is 2 rho
    assert tuple(sum(r[i] for r in data.positive_roots)
                 for i in range(RANK)) == TWO_RHO_ALPHA
    # (rho, rho) = 399/2
    rr = sum(data.rho_alpha[i] * data.A[i][j] * data.rho_alpha[j]
             for i in range(RANK) for j in range(RANK))
    assert rr == Fraction(399, 2)


def test_weyl_dim_fundamentals():
    assert tuple(weyl_dim(w) for w in L) == FUNDAMENTAL_DIMS


def test_weyl_dim_trivial_and_56_squared():
    assert weyl_dim(ZERO_WEIGHT) == 1
    assert weyl_dim(L[6]) == 56
    # 56^2 must split as dim(2*l7) + dim(l1) + dim(l6) + 1
    assert weyl_dim((0, 0, 0, 0, 0, 0, 2)) == 56 * 56 - 133 - 1539 - 1 == 1463


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(NonDominantError):
        weyl_dim((1, 0, 0, -1, 0, 0, 0))


def test_eigenvalue_values():
    assert eigenvalue(L[6], 1) == 57
    assert eigenvalue(ZERO_WEIGHT, 1) == 0
    assert eigenvalue(L[0], 1) == 72
    # all seven, equal to the first-derivative coefficients
    assert [eigenvalue(w, 1) for w in L] == [72, 105, 144, 216, 165, 112, 57]


def test_eigenvalue_strictly_monotone_under_dominance():
    for m in [(0, 0, 0, 0, 0, 0, 2), (1, 1, 0, 0, 0, 0, 1),
              (0, 0, 2, 0, 0, 1, 0), (2, 0, 0, 1, 0, 0, 0)]:
        top = eigenvalue(m)
        for mu in dominant_weights_below(m)[1:]:
            assert eigenvalue(mu) < top


def test_height_of():
    assert height_of((2, 2, 3, 4, 3, 2, 1)) == 17
    assert height_of((0, 0, 0, 1, 0, 0, 0)) == 1
    assert height_of((0,) * 7) == 0


def test_weight_diff_in_roots():
    # lambda_1 is the highest root
    assert weight_diff_in_roots(L[0], ZERO_WEIGHT) == (2, 2, 3, 4, 3, 2, 1)
    assert weight_diff_in_roots(L[3], L[3]) == (0,) * 7
    assert weight_diff_in_roots(L[6], L[0]) is None
    # not in the lattice: l7 - 0 is not an integral root combination
    assert weight_diff_in_roots(L[6], ZERO_WEIGHT) is None


def test_dominant_weights_below_examples():
    assert dominant_weights_below(L[6]) == [L[6]]
    assert dominant_weights_below(ZERO_WEIGHT) == [ZERO_WEIGHT]
    got = dominant_weights_below((0, 0, 0, 0, 0, 0, 2))
    assert got == [(0, 0, 0, 0, 0, 0, 2), (0, 0, 0, 0, 0, 1, 0),
                   (1, 0, 0, 0, 0, 0, 0), ZERO_WEIGHT]


def test_dominant_weights_below_order_and_membership():
    m = (1, 0, 1, 0, 0, 0, 1)
    got = dominant_weights_below(m)
    assert got[0] == m
    # ascending height of m - mu, ties by descending lex on mu
    keys = [(weight_height2(m) - weight_height2(mu), tuple(-x for x in mu))
            for mu in got]
    assert keys == sorted(keys)
    for mu in got:
        assert weight_diff_in_roots(m, mu) is not None
    assert len(set(got)) == len(got)


@pytest.mark.parametrize("m", [
    (0, 0, 0, 0, 0, 0, 2), (1, 0, 0, 0, 0, 0, 1), (2, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 0, 0),
])
def test_dominant_weights_below_matches_box_enumeration(m):
    # the box search is exponential; these weights keep it to a few seconds
    assert dominant_weights_below(m) == dominant_weights_below_boxed(m)


def test_dominant_weights_below_rejects_non_dominant():
    with pytest.raises(NonDominantError):
        dominant_weights_below((-1, 0, 0, 0, 0, 0, 0))
