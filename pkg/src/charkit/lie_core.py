"""Root and weight combinatorics of E7.

Weights live in the fundamental-weight basis and are plain 7-tuples of
integers; elements of the root lattice are 7-tuples in the simple-root
basis.  All inner products use the bilinear form given by the Cartan
matrix with the simply-laced normalization (alpha_i, alpha_i) = 2, so
every computation is exact: half-integers appear only through the inverse
Cartan matrix and are handled by keeping twice the form integral.
"""

from __future__ import annotations

import functools
from fractions import Fraction

RANK = 7

# Cartan matrix: nodes 1-3-4-5-6-7 form a chain, node 2 hangs off node 4.
CARTAN_A = (
    (2, 0, -1, 0, 0, 0, 0),
    (0, 2, 0, -1, 0, 0, 0),
    (-1, 0, 2, -1, 0, 0, 0),
    (0, -1, -1, 2, -1, 0, 0),
    (0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, -1, 2, -1),
    (0, 0, 0, 0, 0, -1, 2),
)

# 2 * A^{-1}; entries of A^{-1} itself are half-integers.
CARTAN_AINV2 = (
    (4, 4, 6, 8, 6, 4, 2),
    (4, 7, 8, 12, 9, 6, 3),
    (6, 8, 12, 16, 12, 8, 4),
    (8, 12, 16, 24, 18, 12, 6),
    (6, 9, 12, 18, 15, 10, 5),
    (4, 6, 8, 12, 10, 8, 4),
    (2, 3, 4, 6, 5, 4, 3),
)

# 2*(lambda_i, rho): twice the heights of the fundamental weights.  Equal to
# the alpha-basis coordinates of 2*rho, and to the column sums of 2*A^{-1}.
TWO_RHO_ALPHA = (34, 49, 66, 96, 75, 52, 27)

ZERO_WEIGHT = (0,) * RANK

FUNDAMENTAL_WEIGHTS = tuple(
    tuple(1 if j == i else 0 for j in range(RANK)) for i in range(RANK))

# dim R_{lambda_i}, i = 1..7
FUNDAMENTAL_DIMS = (133, 912, 8645, 365750, 27664, 1539, 56)


class NonDominantError(ValueError):
    """A weight required to be dominant has a negative coordinate."""


def is_dominant(m):
    return len(m) == RANK and all(x >= 0 for x in m)


def _require_dominant(m):
    if not is_dominant(m):
        raise NonDominantError(f"weight {m} is not dominant")


def height_of(delta):
    """Height of a root-lattice element: the sum of its alpha-coordinates."""
    return sum(delta)


def weight_height2(m):
    """2*(m, rho) for a weight m in fundamental coordinates (an integer)."""
    return sum(w * x for w, x in zip(TWO_RHO_ALPHA, m))


def bilinear2(m, mu):
    """2*(m, mu) for weights in fundamental coordinates (an integer)."""
    out = 0
    for i in range(RANK):
        mi = m[i]
        if mi:
            row = CARTAN_AINV2[i]
            out += mi * sum(row[j] * mu[j] for j in range(RANK))
    return out


def _generate_positive_roots():
    """Closure of the simple roots under root addition, in alpha-coordinates.

    Uses the string property: beta + alpha_i is a root iff p - (beta, alpha_i)
    > 0 where p is the number of steps the string extends backwards.
    """
    simple = FUNDAMENTAL_WEIGHTS  # unit tuples double as alpha-coordinates
    roots = set(simple)
    frontier = set(simple)

    def form(u, v):
        return sum(u[i] * CARTAN_A[i][j] * v[j]
                   for i in range(RANK) for j in range(RANK))

    while frontier:
        new = set()
        for beta in frontier:
            for al in simple:
                p = 0
                cur = beta
                while True:
                    back = tuple(x - y for x, y in zip(cur, al))
                    if back == ZERO_WEIGHT or back not in roots:
                        break
                    p += 1
                    cur = back
                if p - form(beta, al) > 0:
                    up = tuple(x + y for x, y in zip(beta, al))
                    if up not in roots:
                        new.add(up)
        roots |= new
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


class CartanData:
    """Immutable bundle of the E7 Cartan data.

    Attributes
    ----------
    A : 7x7 integer Cartan matrix
    Ainv : 7x7 matrix of Fractions, exact inverse of A
    positive_roots : 63 root-lattice vectors in alpha-coordinates, by height
    positive_roots_fund : the same roots in fundamental coordinates
    rho_alpha : Weyl vector in alpha-coordinates (Fractions)
    """

    def __init__(self):
        self.A = CARTAN_A
        self.Ainv = tuple(
            tuple(Fraction(x, 2) for x in row) for row in CARTAN_AINV2)
        self.positive_roots = tuple(_generate_positive_roots())
        self.positive_roots_fund = tuple(
            tuple(sum(CARTAN_A[i][j] * r[j] for j in range(RANK))
                  for i in range(RANK))
            for r in self.positive_roots)
        self.rho_alpha = tuple(Fraction(x, 2) for x in TWO_RHO_ALPHA)
        self._check()

    def _check(self):
        assert len(self.positive_roots) == 63
        # A symmetric with diagonal 2, Ainv exact inverse
        for i in range(RANK):
            assert self.A[i][i] == 2
            for j in range(RANK):
                assert self.A[i][j] == self.A[j][i]
                s = sum(self.Ainv[i][k] * self.A[k][j] for k in range(RANK))
                assert s == (1 if i == j else 0)
        # height histogram of the 63 positive roots
        hist = [0] * 18
        for r in self.positive_roots:
            hist[sum(r)] += 1
        assert hist[1:] == [7, 6, 6, 6, 6, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 1, 1]
        # sum of positive roots is 2*rho
        for i in range(RANK):
            assert sum(r[i] for r in self.positive_roots) == TWO_RHO_ALPHA[i]
        # (rho, rho) = 399/2
        rr = sum(self.rho_alpha[i] * self.A[i][j] * self.rho_alpha[j]
                 for i in range(RANK) for j in range(RANK))
        assert rr == Fraction(399, 2)


@functools.lru_cache(maxsize=1)
def cartan_matrix():
    """The shared, immutable CartanData instance."""
    return CartanData()


def weyl_dim(m):
    """Dimension of the irreducible representation with highest weight m.

    Exact product over positive roots: each root of height h and
    alpha-coordinates a contributes (h + a.m) / h.
    """
    _require_dominant(m)
    data = cartan_matrix()
    num = 1
    den = 1
    for r in data.positive_roots:
        h = sum(r)
        num *= h + sum(r[i] * m[i] for i in range(RANK))
        den *= h
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def eigenvalue(m, kappa=1):
    """Energy above the ground state for quantum numbers m: 2(m, m + 2*kappa*rho)."""
    _require_dominant(m)
    return bilinear2(m, m) + 2 * kappa * weight_height2(m)


def weight_diff_in_roots(m, mu):
    """Express m - mu in the simple-root basis if it lies in the positive
    root lattice; return None otherwise."""
    d = tuple(a - b for a, b in zip(m, mu))
    c2 = [sum(CARTAN_AINV2[i][j] * d[j] for j in range(RANK))
          for i in range(RANK)]
    if any(x < 0 or x % 2 for x in c2):
        return None
    return tuple(x // 2 for x in c2)


def dominant_weights_below(m):
    """All dominant mu with m - mu in the positive root lattice.

    Found by closing {m} under subtraction of positive roots, keeping only
    dominant results; covers in the dominance order on dominant weights are
    positive-root differences, so the closure is exhaustive.  Sorted by
    ascending height of m - mu, ties by descending lexicographic mu.
    """
    _require_dominant(m)
    pos_fund = cartan_matrix().positive_roots_fund
    seen = {m}
    frontier = [m]
    while frontier:
        nxt = []
        for mu in frontier:
            for rf in pos_fund:
                nu = (mu[0] - rf[0], mu[1] - rf[1], mu[2] - rf[2],
                      mu[3] - rf[3], mu[4] - rf[4], mu[5] - rf[5],
                      mu[6] - rf[6])
                if nu not in seen and min(nu) >= 0:
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    hm = weight_height2(m)
    return sorted(seen, key=lambda mu: (hm - weight_height2(mu),
                                        tuple(-x for x in mu)))


def dominant_weights_below_boxed(m):
    """Reference enumeration of dominant_weights_below by exhaustive search
    over the coordinate box 0 <= c <= A^{-1} m.  Exponentially slower; used
    only to cross-check the closure enumeration in tests."""
    _require_dominant(m)
    bound = [sum(CARTAN_AINV2[i][j] * m[j] for j in range(RANK)) // 2
             for i in range(RANK)]
    out = []

    def rec(idx, c):
        if idx == RANK:
            mu = tuple(m[i] - sum(CARTAN_A[i][j] * c[j] for j in range(RANK))
                       for i in range(RANK))
            if min(mu) >= 0:
                out.append(mu)
            return
        for v in range(bound[idx] + 1):
            c[idx] = v
            rec(idx + 1, c)
        c[idx] = 0

    rec(0, [0] * RANK)
    hm = weight_height2(m)
    return sorted(set(out), key=lambda mu: (hm - weight_height2(mu),
                                            tuple(-x for x in mu)))
