from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from projdual.catalog import load_catalog
from projdual.duality import check_biduality, conormal_ideal, dual_variety, same_variety, veronese_ideal
from projdual.exactpoly import GF, PRIME_A, PRIME_B, QQ
from projdual.groebner import is_groebner
from projdual.variety import ProjectiveVariety

CATALOG = load_catalog()
IRREDUCIBLE = sorted(n for n, e in CATALOG.items() if "reducible" not in e.tags)
# d >= 2: a hyperplane's dual is a point, outside the degree formula
HYPERSURFACES = sorted(n for n, e in CATALOG.items()
                       if {"smooth", "hypersurface"} <= set(e.tags) and e.variety().degree >= 2)
# the bidual of the quartic surface needs elimination from its degree-36 dual
BIDUAL = [n for n in IRREDUCIBLE if n != "quartic_surface"]


def V(N, *gens, field=QQ):
    return ProjectiveVariety.from_strings(N, list(gens), field=field)


def _monic_gen(X):
    G = list(X.ideal.groebner())
    assert len(G) == 1
    return G[0].monic()


# ---------------------------------------------------------------- quadrics against the adjugate

def _adjugate(Q):
    n = len(Q)

    def minor(i, j):
        M = [[Q[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
        if len(M) == 1:
            return M[0][0]
        if len(M) == 2:
            return M[0][0] * M[1][1] - M[0][1] * M[1][0]
        return sum((-1) ** c * M[0][c] * minor3(M, c) for c in range(3))

    def minor3(M, c):
        S = [[M[r][k] for k in range(3) if k != c] for r in (1, 2)]
        return S[0][0] * S[1][1] - S[0][1] * S[1][0]

    return [[(-1) ** (i + j) * minor(j, i) for j in range(n)] for i in range(n)]


def _quadric_text(Q, var):
    n = len(Q)
    terms = []
    for i in range(n):
        for j in range(i, n):
            c = Q[i][j] * (1 if i == j else 2)
            if c:
                terms.append(f"({Fraction(c)})*{var}{i}*{var}{j}")
    return " + ".join(terms)


def _random_symmetric(rng, n):
    while True:
        Q = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                Q[i][j] = Q[j][i] = rng.randint(-6, 6)
        if sum(Q[0][j] * _adjugate(Q)[j][0] for j in range(n)):   # det != 0
            return Q


@pytest.mark.parametrize("seed, n", [(0, 3), (1, 3), (2, 4)])
def test_quadric_dual_is_inverse_matrix(seed, n):
    Q = _random_symmetric(random.Random(seed), n)
    X = V(n - 1, _quadric_text(Q, "x"))
    D = dual_variety(X)
    oracle = ProjectiveVariety.from_strings(n - 1, [_quadric_text(_adjugate(Q), "a")], prefix="a")
    assert _monic_gen(D) == _monic_gen(oracle)


# ---------------------------------------------------------------- conormal

def test_conormal_contains_incidence_and_x():
    X = CATALOG["conic"].variety()
    C = conormal_ideal(X)
    E = C.ideal.ring
    G = C.ideal.groebner()
    h = C.chart
    # x_h = 1 in the chart; incidence form sum x_i a_i and the conic equation both vanish
    x = {i: (E.one() if i == h else E.var(f"x{i}")) for i in range(3)}
    a = [E.var(f"a{i}") for i in range(3)]
    assert G.contains(sum((x[i] * a[i] for i in range(3)), E.zero()))
    assert G.contains(x[0] ** 2 + x[1] ** 2 + x[2] ** 2)
    # a is proportional to the gradient 2x: every 2x2 minor of [a; x] vanishes
    for i in range(3):
        for j in range(i + 1, 3):
            assert G.contains(a[i] * x[j] - a[j] * x[i])


def test_dual_of_hyperplane_is_point():
    D = dual_variety(V(3, "x0"))
    assert D.dim_and_degree() == (0, 1)
    assert sorted(str(g) for g in D.ideal.groebner()) == ["a1", "a2", "a3"]


@pytest.mark.parametrize("name", IRREDUCIBLE)
def test_conormal_dimension(name):
    X = CATALOG[name].variety(GF(PRIME_A))
    assert conormal_ideal(X).dimension() == X.N - 1


# ---------------------------------------------------------------- duals

def test_smooth_plane_cubic_dual_is_sextic():
    D = dual_variety(V(2, "x1^2*x2 - x0^3 + x0*x2^2"))
    assert D.dim_and_degree() == (1, 6)


def test_twisted_cubic_dual_is_catalog_quartic():
    D = dual_variety(CATALOG["twisted_cubic"].variety())
    assert D.dim_and_degree() == (2, 4)
    assert same_variety(D, CATALOG["twisted_cubic_dual"].variety().renamed("a"))


def test_singular_curve_duals():
    # class of a nodal cubic is 4, of a cuspidal cubic 3
    assert dual_variety(CATALOG["nodal_cubic"].variety()).degree == 4
    assert dual_variety(CATALOG["cuspidal_cubic"].variety()).degree == 3


@pytest.mark.parametrize("name", HYPERSURFACES)
@pytest.mark.parametrize("p", [PRIME_A, PRIME_B])
def test_dual_degree_formula(name, p):
    X = CATALOG[name].variety(GF(p))
    d, N = X.gens[0].total_degree(), X.N
    D = dual_variety(X)
    assert D.dim_and_degree() == (N - 1, d * (d - 1) ** (N - 1))


@pytest.mark.parametrize("name", ["conic", "plane_cubic", "quadric_surface"])
def test_dual_degree_formula_rationals(name):
    X = CATALOG[name].variety()
    d, N = X.gens[0].total_degree(), X.N
    assert dual_variety(X).degree == d * (d - 1) ** (N - 1)


@pytest.mark.parametrize("p", [PRIME_A, PRIME_B])
def test_veronese_determinant_shortcut_matches_elimination(p):
    X = veronese_ideal(2, GF(p))
    a = dual_variety(X, method="det")
    b = dual_variety(X, method="elim")
    assert a.dim_and_degree() == b.dim_and_degree() == (4, 3)
    assert same_variety(a, b)


# ---------------------------------------------------------------- biduality

@pytest.mark.parametrize("name", ["conic", "plane_cubic", "twisted_cubic", "hyperplane"])
def test_biduality_rationals(name):
    assert check_biduality(CATALOG[name].variety())


@pytest.mark.parametrize("name", BIDUAL)
def test_biduality_catalog(name):
    X = CATALOG[name].variety(GF(PRIME_B))
    assert check_biduality(X)


def test_biduality_point():
    assert check_biduality(V(2, "x0", "x1"))


def test_reducible_input_loses_biduality():
    # a line and a conic: the dual keeps only the conic's dual curve, so the
    # irreducibility precondition is doing real work
    assert not check_biduality(CATALOG["line_and_conic"].variety(GF(PRIME_A)))


# ---------------------------------------------------------------- properties

@settings(max_examples=100)
@given(st.integers(0, 10**6), st.sampled_from([PRIME_A, PRIME_B]))
def test_property_random_conic_duals(seed, p):
    Q = _random_symmetric(random.Random(seed), 3)
    F = GF(p)
    X = V(2, _quadric_text(Q, "x"), field=F)
    oracle = ProjectiveVariety.from_strings(2, [_quadric_text(_adjugate(Q), "a")], prefix="a", field=F)
    D = dual_variety(X, seed=seed)
    assert _monic_gen(D) == _monic_gen(oracle)
    assert is_groebner(D.ideal.groebner())
