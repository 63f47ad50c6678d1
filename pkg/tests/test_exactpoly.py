from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from projdual.catalog import load_catalog
from projdual.exactpoly import (
    GF, PRIME_A, PRIME_B, QQ, PolySyntaxError, Ring, parse_poly, partial_derivative, resultant_univariate,
    ring,
)

R3, x0, x1, x2 = ring("x0 x1 x2")


# ---------------------------------------------------------------- parser

def test_parse_binomial_quadric():
    f = parse_poly("x0^2 - x1*x2", R3)
    assert len(f) == 2
    assert f.is_homogeneous() and f.total_degree() == 2
    assert f.as_dict() == {(2, 0, 0): 1, (0, 1, 1): -1}


def test_parse_zero_is_empty():
    assert parse_poly("0", R3).as_dict() == {}
    assert parse_poly("0", R3).is_zero()


def test_parse_rational_coefficient():
    f = parse_poly("x0^3 + 2/3*x1^3", R3)
    assert len(f) == 2
    assert Fraction(f.as_dict()[(0, 3, 0)]) == Fraction(2, 3)


def test_whitespace_is_insignificant():
    assert parse_poly(" x0 ^ 2 -x1 * x2 ", R3) == parse_poly("x0^2-x1*x2", R3)


@pytest.mark.parametrize("text, pos", [("2x0", 1), ("x0^", 3), ("y1", 0), ("x0 +", 4), ("1/0", 0)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PolySyntaxError) as e:
        parse_poly(text, R3)
    assert e.value.pos == pos


def test_unknown_variable_message():
    with pytest.raises(PolySyntaxError, match="unknown variable"):
        parse_poly("x0*a3", R3)


def test_grammar_accepts_dual_and_chart_names():
    R = Ring(["a0", "a1", "t", "s"])
    f = parse_poly("a0*t - 1/2*a1*s^2", R)
    assert f.total_degree() == 3


def test_printing_is_descending_degrevlex():
    f = parse_poly("x2^2 + x0*x1 + x0^2 + 3", R3)
    assert str(f) == "x0^2 + x0*x1 + x2^2 + 3"


@pytest.mark.parametrize("name", sorted(load_catalog()))
def test_catalog_round_trip(name):
    e = load_catalog()[name]
    X = e.variety()
    for g in X.gens:
        assert parse_poly(str(g), X.ring) == g


# ---------------------------------------------------------------- fields

def test_rationals_lowest_terms():
    c = QQ(Fraction(6, -4))
    assert (c.numerator, c.denominator) == (-3, 2)


@pytest.mark.parametrize("p", [PRIME_A, PRIME_B, 101])
def test_prime_residues_in_range(p):
    F = GF(p)
    for v in (-1, p, 3 * p + 5, Fraction(1, 2)):
        r = int(F(v))
        assert 0 <= r < p
    assert int(F(Fraction(1, 2))) * 2 % p == 1


def test_gf_rejects_composite():
    with pytest.raises(ValueError):
        GF(2147483649)


# ---------------------------------------------------------------- derivatives

def test_partial_derivatives():
    assert partial_derivative(parse_poly("x0^2 - x1*x2", R3), 0) == 2 * x0
    assert partial_derivative(parse_poly("x0^2", R3), 1).is_zero()
    assert partial_derivative(parse_poly("x0^3 + x0*x1^2", R3), 0) == 3 * x0**2 + x1**2


# ---------------------------------------------------------------- resultants

def test_resultant_linear_against_quadratic():
    S, x = ring("x")
    assert resultant_univariate(x**2 - 1, x - 2, 0) == S.const(3)


def test_resultant_quadratic_discriminant():
    S, x, b, c = ring("x b c")
    r = resultant_univariate(x**2 + b * x + c, 2 * x + b, 0)
    assert r in (b**2 - 4 * c, 4 * c - b**2)


def test_cubic_discriminant():
    S, x, p, q = ring("x p q")
    r = resultant_univariate(x**3 + p * x + q, 3 * x**2 + p, 0)
    assert r in (4 * p**3 + 27 * q**2, -(4 * p**3 + 27 * q**2))


def test_resultant_needs_positive_degree():
    S, x, b = ring("x b")
    with pytest.raises(ValueError):
        resultant_univariate(b + 1, x - b, 0)


# ---------------------------------------------------------------- properties

coef = st.integers(-5, 5)
expo = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(expo, coef, max_size=5).map(R3.from_dict)


@settings(max_examples=1000)
@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * R3.one() == f
    assert f + R3.zero() == f
    assert f * g == g * f
    assert (f - f).is_zero()
    assert all(c != 0 for c in f.coeffs())


def homogeneous(deg):
    mons = [(a, b, deg - a - b) for a in range(deg + 1) for b in range(deg + 1 - a)]
    return st.dictionaries(st.sampled_from(mons), coef, min_size=1, max_size=4).map(R3.from_dict)


@settings(max_examples=200)
@given(st.integers(0, 3).flatmap(homogeneous), st.integers(0, 3).flatmap(homogeneous))
def test_homogeneity_and_degree_additive(f, g):
    if f.is_zero() or g.is_zero():
        return
    fg = f * g
    assert fg.is_homogeneous()
    assert fg.total_degree() == f.total_degree() + g.total_degree()


S1, X1 = ring("x")
upolys = st.lists(coef, min_size=2, max_size=5).filter(lambda c: c[-1] != 0).map(
    lambda c: sum((X1**i * ci for i, ci in enumerate(c)), S1.zero()))


@settings(max_examples=200)
@given(upolys, upolys)
def test_resultant_swap_sign(f, g):
    m, n = f.degree_in(0), g.degree_in(0)
    assert resultant_univariate(f, g, 0) == resultant_univariate(g, f, 0) * (-1) ** (m * n)


@settings(max_examples=200)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), upolys)
def test_resultant_from_roots(roots, g):
    # monic f with known integer roots: Res(f, g) = prod g(r)
    f = prod((X1 - r for r in roots), start=S1.one())
    oracle = prod(sum(c * r**e[0] for e, c in g.as_dict().items()) for r in roots)
    assert resultant_univariate(f, g, 0) == S1.const(oracle)


@settings(max_examples=200)
@given(polys)
def test_print_parse_round_trip(f):
    assert parse_poly(str(f), R3) == f


@settings(max_examples=100)
@given(polys, polys)
def test_prime_field_reduction_is_a_homomorphism(f, g):
    Rp = R3.with_field(GF(PRIME_B))
    assert Rp.convert(f * g) == Rp.convert(f) * Rp.convert(g)
