from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grotto.poly import (
    NonLinearFactorization,
    ParseError,
    Poly,
    exact_div,
    parse_poly,
    perfect_power,
    perfect_square_root,
    poly_gcd,
    split_product,
    univariate_linear_roots,
)

x, y, u, v, w = (Poly.var(n) for n in "xyuvw")


# -- hypothesis strategies ------------------------------------------------------

VARS = ("x", "y", "z", "w")


@st.composite
def polys(draw, max_terms=5, max_exp=4, names=VARS):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = []
        for name in draw(st.sets(st.sampled_from(names), max_size=len(names))):
            mono.append((name, draw(st.integers(1, max_exp))))
        coeff = draw(st.integers(-9, 9))
        if coeff:
            terms[tuple(sorted(mono))] = coeff
    return Poly._from_raw(terms)


def points(names=VARS):
    return st.fixed_dictionaries({n: st.integers(-7, 7) for n in names})


# -- arithmetic -----------------------------------------------------------------


def test_arith_examples():
    assert (x + (-x)).is_zero()
    assert (x + 1) * (x - 1) == x**2 - 1
    q = Poly.var("q")
    assert (q - 1) ** 2 == q**2 - 2 * q + 1


@given(polys(), polys(), polys())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys(), points())
def test_evaluation_is_ring_hom(a, pt):
    assert (a + a).evaluate(pt) == 2 * a.evaluate(pt)
    assert (a * a).evaluate(pt) == a.evaluate(pt) ** 2


def test_pow_nonnegative_only():
    with pytest.raises(ValueError):
        x ** (-1)


# -- substitution ------------------------------------------------------------------


def test_substitute_examples():
    assert (x * y + 1).substitute("x", 2) == 2 * y + 1
    assert (x**2 - x).substitute("x", 0).is_zero()
    assert x.substitute("y", 7) == x


@given(polys(), polys(max_terms=3, max_exp=2), points())
def test_substitute_matches_evaluation(f, g, pt):
    composed = f.substitute("x", g)
    pt2 = dict(pt)
    pt2["x"] = g.evaluate(pt)
    assert composed.evaluate(pt) == f.evaluate(pt2)


def test_substitute_cleared_examples():
    assert (x**2 + y).substitute_cleared("x", u, w) == u**2 + y * w**2
    assert x.substitute_cleared("x", -v, u) == -v
    assert Poly.const(3).substitute_cleared("x", u, v) == Poly.const(3)


@given(polys(), polys(max_terms=2, max_exp=2), polys(max_terms=2, max_exp=2), points())
def test_substitute_cleared_identity(f, num, den, pt):
    dval = den.evaluate(pt)
    if dval == 0:
        return
    cleared = f.substitute_cleared("x", num, den)
    d = f.degree_in("x")
    pt2 = dict(pt)
    pt2["x"] = Fraction(num.evaluate(pt), dval)
    assert Fraction(cleared.evaluate(pt)) == Fraction(dval) ** d * f.evaluate(pt2)


def test_decompose_examples():
    a, b = Poly.var("a"), Poly.var("b")
    f = x * a + b
    assert f.degree_in("x") == 1
    assert f.coefficients_in("x") == [b, a]
    f = x**2 * u + x * v + w
    assert f.degree_in("x") == 2
    assert f.coefficients_in("x") == [w, v, u]
    assert y.degree_in("x") == 0
    assert y.coefficients_in("x") == [y]


# -- perfect powers and square roots ------------------------------------------------


def test_perfect_power_examples():
    assert perfect_power(x**2 + 2 * x * y + y**2) == (x + y, 2)
    assert perfect_power(x**2 + 1) is None
    assert perfect_power(8 * x**3) == (2 * x, 3)


def test_perfect_power_maximal():
    assert perfect_power(x**4) == (x, 4)
    assert perfect_power((x + y) ** 6) == (x + y, 6)


@given(polys(max_terms=3, max_exp=2), st.integers(2, 4))
def test_perfect_power_roundtrip(f, n):
    if f.is_constant() and abs(f.constant_value()) <= 1:
        return  # 0 is excluded, and units are powers for every n
    got = perfect_power(f**n)
    assert got is not None
    root, k = got
    assert root**k == f**n
    assert k >= n or f.is_constant()


def test_square_root_examples():
    assert perfect_square_root(9 * x**2 * y**4) == 3 * x * y**2
    assert perfect_square_root(x**2 + 2 * x + 1) == x + 1
    assert perfect_square_root(x**2 + x) is None


@given(polys(max_terms=4, max_exp=3))
def test_square_root_roundtrip(f):
    if f.is_zero():
        return
    h = perfect_square_root(f * f)
    assert h is not None and h * h == f * f
    # sign convention: positive leading coefficient
    assert h.leading()[1] > 0


# -- univariate roots ----------------------------------------------------------------


def test_roots_examples():
    assert univariate_linear_roots(x**2 - 3 * x + 2, "x") == [
        (Fraction(1), 1),
        (Fraction(2), 1),
    ]
    assert univariate_linear_roots(x**3, "x") == [(Fraction(0), 3)]
    with pytest.raises(NonLinearFactorization):
        univariate_linear_roots(x**2 + 1, "x")


def test_roots_rational_and_multiplicity():
    f = (2 * x - 1) ** 2 * (x + 3)
    assert univariate_linear_roots(f, "x") == [(Fraction(-3), 1), (Fraction(1, 2), 2)]


@given(
    st.lists(
        st.tuples(
            st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
            st.integers(1, 3),
        ),
        min_size=1,
        max_size=3,
    )
)
def test_roots_reconstruct(root_data):
    roots = {}
    for r, m in root_data:
        roots[r] = roots.get(r, 0) + m
    f = Poly.const(1)
    for r, m in roots.items():
        f = f * (r.denominator * x - r.numerator) ** m
    found = univariate_linear_roots(f, "x")
    assert found == sorted(roots.items())
    # leading coefficient times the linear factors reproduces f up to content
    g = Poly.const(1)
    for r, m in found:
        g = g * (r.denominator * x - r.numerator) ** m
    assert f.primitive_signed() == g.primitive_signed()


# -- product splitting ------------------------------------------------------------------


def test_split_examples():
    s = split_product(x * y + x)
    assert s == (x, y + 1)
    s = split_product(x**2 - y**2)
    assert s is not None and s[0] * s[1] == x**2 - y**2
    assert split_product(x + y) is None


@given(polys(max_terms=3, max_exp=2), polys(max_terms=3, max_exp=2))
@settings(deadline=None)
def test_split_is_exact_when_found(a, b):
    f = a * b
    if f.is_zero():
        return
    s = split_product(f)
    if s is not None:
        p, r = s
        assert p * r == f
        assert not p.is_constant() and not r.is_constant()


def test_split_repeated_factors():
    f = (x + y) ** 2 * (x - y + 1) ** 2 * (x + 2 * y + 3)
    pieces = [f]
    done = []
    while pieces:
        g = pieces.pop()
        s = split_product(g)
        if s is None:
            done.append(g)
        else:
            pieces.extend(s)
    prod = Poly.const(1)
    for g in done:
        prod = prod * g
    assert prod == f
    assert len(done) >= 4


def test_poly_gcd_basic():
    assert poly_gcd((x + y) ** 2 * (x - y), (x + y) * (x + 1)) == x + y
    assert poly_gcd(x * y, y * w) == y
    assert poly_gcd(x + 1, y + 1).is_constant()


def test_exact_div():
    assert exact_div(x**2 - y**2, x + y) == x - y
    assert exact_div(x**2 + 1, x + y) is None
    assert exact_div(Poly.zero(), x) == Poly.zero()
    with pytest.raises(ZeroDivisionError):
        exact_div(x, Poly.zero())


# -- parsing and printing ------------------------------------------------------------------


def test_parse_grammar():
    p = parse_poly("a_1*b_2 - a_2*b_1 + b_1*d_2 - b_2*d_1")
    assert len(p.terms) == 4
    assert parse_poly("x^2*(y + 1) - 3") == x**2 * y + x**2 - 3
    assert parse_poly("  - x + 2 ") == 2 - x
    assert parse_poly("2^3") == Poly.const(8)


@pytest.mark.parametrize("bad", ["", "x +", "x ^ y", "(x", "x**2", "3.5"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


@given(polys())
def test_print_parse_roundtrip(p):
    assert parse_poly(str(p)) == p
