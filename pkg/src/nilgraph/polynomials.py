"""Sparse multivariate polynomials over the rationals.

Terms map exponent tuples to Fraction coefficients; zero coefficients are
never stored, so the zero polynomial has an empty term dict and the
identically-zero test is exact.  Just enough arithmetic for symbolic
determinants and characteristic polynomials of small matrices.
"""

from __future__ import annotations

from fractions import Fraction


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exp, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[tuple(exp)] = c

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        p = cls(nvars)
        c = Fraction(c)
        if c != 0:
            p.terms[(0,) * nvars] = c
        return p

    @classmethod
    def variable(cls, i, nvars):
        exp = [0] * nvars
        exp[i] = 1
        p = cls(nvars)
        p.terms[tuple(exp)] = Fraction(1)
        return p

    @property
    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = Poly(self.nvars)
        out.terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.terms.get(exp, 0) + c
            if s:
                out.terms[exp] = s
            else:
                out.terms.pop(exp, None)
        return out

    def __neg__(self):
        out = Poly(self.nvars)
        out.terms = {exp: -c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = Poly(self.nvars)
        terms = out.terms
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, 0) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    terms.pop(exp, None)
        return out

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        out = Poly(self.nvars)
        if c != 0:
            out.terms = {exp: c * v for exp, v in self.terms.items()}
        return out

    def evaluate(self, point):
        """Exact value at a rational point (sequence of length nvars)."""
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= x ** e
            total += v
        return total

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(f"x{i}^{e}" if e > 1 else f"x{i}"
                            for i, e in enumerate(exp) if e)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(bits) + ")"


def poly_det(matrix):
    """Determinant of a square matrix of Poly entries.

    Expands along rows with memoization on the surviving column set, so the
    cost is O(2^n * n) polynomial operations instead of n! term products.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = matrix[0][0].nvars
    minors = {frozenset(): Poly.constant(1, nvars)}
    for k in range(1, n + 1):
        row = matrix[k - 1]
        row_sign = 1 if (k - 1) % 2 == 0 else -1
        new = {}
        for cols in _subsets(range(n), k):
            acc = Poly.zero(nvars)
            for idx, c in enumerate(sorted(cols)):
                entry = row[c]
                if entry.is_zero:
                    continue
                sub = minors[cols - {c}]
                if sub.is_zero:
                    continue
                term = entry * sub
                sign = row_sign if idx % 2 == 0 else -row_sign
                acc = acc + term if sign > 0 else acc - term
            new[cols] = acc
        minors = new
    return minors[frozenset(range(n))]


def _subsets(universe, k):
    from itertools import combinations

    for combo in combinations(universe, k):
        yield frozenset(combo)
