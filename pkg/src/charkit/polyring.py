"""Sparse exact polynomial arithmetic in the seven character variables z1..z7.

Terms are kept in a dict keyed by exponent tuples with arbitrary-precision
integer (or Fraction, for intermediate results) coefficients.  Zero
coefficients are never stored, so equality of the term maps is equality of
polynomials.  The canonical term order is graded, with ties broken by
comparing exponent tuples from z7 down to z1 (higher variables first), which
fixes serialization and iteration order.
"""

from __future__ import annotations

import re
from fractions import Fraction

NVARS = 7

Exponents = tuple  # 7-tuple of non-negative ints

ZERO_EXPS = (0,) * NVARS


def monomial_key(exps):
    """Sort key for the fixed monomial order (ascending)."""
    return (sum(exps), tuple(reversed(exps)))


def _clean(terms):
    return {e: c for e, c in terms.items() if c}


class MultiPoly:
    """Immutable sparse polynomial in z1..z7.

    The term map is exposed read-only through ``terms``; algorithms that
    need raw speed work on plain dicts and wrap the result at the boundary.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean_input=True):
        if terms is None:
            terms = {}
        if _clean_input:
            terms = _clean(dict(terms))
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    # ---------------------------------------------------------- constructors
    @classmethod
    def zero(cls):
        return cls({}, _clean_input=False)

    @classmethod
    def one(cls):
        return cls({ZERO_EXPS: 1}, _clean_input=False)

    @classmethod
    def constant(cls, c):
        return cls({ZERO_EXPS: c})

    @classmethod
    def variable(cls, i):
        """The polynomial z_i, 1-based index."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index {i} out of range 1..{NVARS}")
        e = [0] * NVARS
        e[i - 1] = 1
        return cls({tuple(e): 1}, _clean_input=False)

    @classmethod
    def monomial(cls, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != NVARS or any(x < 0 for x in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        return cls({exps: coeff})

    # ------------------------------------------------------------ predicates
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({} if other == 0 else {ZERO_EXPS: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(out, _clean_input=False)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, _clean_input=False)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero()
            return MultiPoly({e: c * other for e, c in self.terms.items()},
                             _clean_input=False)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(out, _clean_input=False)

    __rmul__ = __mul__

    # ------------------------------------------------------------- operators
    def partial(self, i):
        """Formal partial derivative with respect to z_i (1-based)."""
        if not 1 <= i <= NVARS:
            raise ValueError(f"variable index {i} out of range 1..{NVARS}")
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            n = e[k]
            if n == 0:
                continue
            e2 = e[:k] + (n - 1,) + e[k + 1:]
            s = out.get(e2, 0) + n * c
            if s:
                out[e2] = s
            else:
                del out[e2]
        return MultiPoly(out, _clean_input=False)

    def eval_integer(self, point):
        """Exact evaluation at a tuple of integers (or Fractions)."""
        point = tuple(point)
        if len(point) != NVARS:
            raise ValueError("evaluation point must have 7 entries")
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, n in zip(point, e):
                if n:
                    v *= x ** n
            total += v
        return total

    def coefficient_of(self, exps):
        """Stored coefficient of the monomial with the given exponents, or 0."""
        return self.terms.get(tuple(exps), 0)

    def max_coefficient_denominator(self):
        d = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                d = max(d, c.denominator)
        return d

    def map_coefficients(self, fn):
        return MultiPoly({e: fn(c) for e, c in self.terms.items()})

    # ---------------------------------------------------------- text format
    def to_text(self):
        """Canonical text form, e.g. ``1*z7^2 -1*z6 -1*z1 -1``.

        Terms in descending monomial order; zero exponents omitted;
        the constant term prints as a bare coefficient.
        """
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=monomial_key, reverse=True):
            c = self.terms[e]
            vars_ = "*".join(
                f"z{i + 1}^{e[i]}" if e[i] > 1 else f"z{i + 1}"
                for i in range(NVARS) if e[i])
            bits.append(f"{c}*{vars_}" if vars_ else f"{c}")
        return " ".join(bits)

    _TERM_RE = re.compile(
        r"^(?P<coeff>-?\d+(?:/\d+)?)(?P<vars>(?:\*z[1-7](?:\^\d+)?)*)$")

    @classmethod
    def from_text(cls, text):
        """Parse the canonical text form (inverse of ``to_text``)."""
        text = text.strip()
        if not text or text == "0":
            return cls.zero()
        out = {}
        for tok in text.split():
            m = cls._TERM_RE.match(tok)
            if not m:
                raise ValueError(f"bad polynomial term {tok!r}")
            cs = m.group("coeff")
            coeff = Fraction(cs) if "/" in cs else int(cs)
            exps = [0] * NVARS
            for var, ex in re.findall(r"z([1-7])(?:\^(\d+))?", m.group("vars")):
                exps[int(var) - 1] += int(ex) if ex else 1
            e = tuple(exps)
            out[e] = out.get(e, 0) + coeff
        return cls(out)

    def __repr__(self):
        return f"MultiPoly({self.to_text()})"

    def __str__(self):
        return self.to_text()
