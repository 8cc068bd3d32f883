import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from nilgraph.polynomials import Poly, poly_det
from nilgraph.rational import det as numeric_det

F = Fraction


def _poly(nvars, terms):
    return Poly(nvars, terms)


def random_poly(rng, nvars, nterms=4, max_exp=2):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        terms[exp] = F(rng.randint(-5, 5))
    return Poly(nvars, terms)


def test_zero_handling():
    z = Poly.zero(2)
    assert z.is_zero
    assert (z + z).is_zero
    p = Poly.constant(3, 2)
    assert (p - p).is_zero
    assert (p * z).is_zero


def test_variable_and_eval():
    x, y = Poly.variable(0, 2), Poly.variable(1, 2)
    p = x * x + y.scale(-2) + Poly.constant(7, 2)
    assert p.evaluate([3, 5]) == 9 - 10 + 7
    assert p.degree() == 2


@given(st.integers(0, 10 ** 6))
@settings(max_examples=40, deadline=None)
def test_arithmetic_is_pointwise(seed):
    rng = random.Random(seed)
    f = random_poly(rng, 3)
    g = random_poly(rng, 3)
    pt = [F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(3)]
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
    assert (f - g).evaluate(pt) == f.evaluate(pt) - g.evaluate(pt)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (-f).evaluate(pt) == -f.evaluate(pt)
    assert f.scale(F(2, 3)).evaluate(pt) == F(2, 3) * f.evaluate(pt)


def test_det_2x2_symbolic():
    a = Poly.variable(0, 2)
    b = Poly.variable(1, 2)
    one = Poly.constant(1, 2)
    mat = [[a, b], [one, a]]
    assert poly_det(mat) == a * a - b


def test_det_skew_2x2():
    a = Poly.variable(0, 1)
    z = Poly.zero(1)
    assert poly_det([[z, -a], [a, z]]) == a * a


@given(st.integers(0, 10 ** 6), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_det_matches_numeric(seed, n):
    rng = random.Random(seed)
    m = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
    wrapped = [[Poly.constant(x, 1) for x in row] for row in m]
    assert poly_det(wrapped).evaluate([0]) == numeric_det(m)


def test_det_multilinear_in_first_row():
    rng = random.Random(11)
    rows = [[random_poly(rng, 2, nterms=2, max_exp=1) for _ in range(3)]
            for _ in range(3)]
    doubled = [[p.scale(2) for p in rows[0]]] + rows[1:]
    assert poly_det(doubled) == poly_det(rows).scale(2)
