import pytest
from hypothesis import given, settings, strategies as st

from projdual.catalog import load_catalog
from projdual.discriminant import (
    EMPTY, HYPERPLANES, IRREDUCIBLE, NONDOMINANT, chain_consistent, hypersurface_branch_discriminant,
    is_squarefree, is_union_of_hyperplanes, polar_critical_ideal, projection_chain, purity_classify,
    smooth_discriminant, squarefree_part, verify_duality,
)
from projdual.exactpoly import GF, PRIME_A, PRIME_B, QQ, ring
from projdual.groebner import Ideal, dim_and_degree
from projdual.variety import LinearProjection, is_smooth, random_projection

CATALOG = load_catalog()


def X_(name, field=QQ):
    return CATALOG[name].variety(field)


# ---------------------------------------------------------------- critical loci

def test_conic_pencil_has_two_tangency_points():
    X = X_("conic")
    I = polar_critical_ideal(X, random_projection(2, 1, 3))
    assert dim_and_degree(I) == (0, 2)


def test_cubic_surface_critical_curve_is_sextic():
    X = X_("cubic_surface", GF(PRIME_A))
    I = polar_critical_ideal(X, random_projection(3, 2, 1))
    assert dim_and_degree(I) == (1, 6)


def test_dual_defective_critical_locus_is_empty():
    # the dual of the quartic is the twisted cubic, of codimension 2 > 1
    X = X_("twisted_cubic_dual")
    I = polar_critical_ideal(X, random_projection(3, 1, 2))
    assert I.is_unit() or dim_and_degree(I)[0] < 0


# ---------------------------------------------------------------- smooth discriminants

def test_quadric_surface_branches_along_smooth_conic():
    X = X_("quadric_surface")
    r = smooth_discriminant(X, random_projection(3, 2, 0))
    assert (r.classification, r.dim, r.degree) == (IRREDUCIBLE, 1, 2)
    assert is_smooth(r.discriminant)


def test_quartic_dual_of_twisted_cubic_has_empty_discriminant():
    X = X_("twisted_cubic_dual")
    r = smooth_discriminant(X, random_projection(3, 1, 0))
    assert r.classification == EMPTY and r.dominant


def test_dual_surface_of_space_cubic_gives_three_lines():
    X = X_("twisted_cubic_dual")
    r = smooth_discriminant(X, random_projection(3, 2, 0))
    assert (r.classification, r.dim, r.degree) == (HYPERPLANES, 1, 3)


def test_non_dominant_image():
    X = X_("twisted_cubic")
    r = smooth_discriminant(X, random_projection(3, 2, 0))
    assert r.classification == NONDOMINANT and not r.dominant
    assert r.discriminant.dim_and_degree() == (1, 3)


# ---------------------------------------------------------------- branch discriminants

@pytest.mark.parametrize("name, deg", [("conic", 2), ("plane_cubic", 6), ("plane_quartic", 12)])
def test_plane_curve_branch_degrees(name, deg):
    f = X_(name).gens[0]
    D = hypersurface_branch_discriminant(f, random_projection(2, 1, 4))
    assert D.total_degree() == deg


def test_quartic_surface_branch_curve_degree_12():
    f = X_("quartic_surface").gens[0]
    assert hypersurface_branch_discriminant(f, random_projection(3, 2, 0)).total_degree() == 12


def test_center_on_variety_rejected():
    R, x0, x1, x2 = ring("x0 x1 x2")
    # the center [0:0:1] is a point of the conic x0*x2 = x1^2
    pi = LinearProjection(2, 1, ((1, 0, 0), (0, 1, 0)))
    with pytest.raises(ValueError, match="center on variety"):
        hypersurface_branch_discriminant(x0 * x2 - x1**2, pi)


def test_nodal_cubic_raw_discriminant_has_square_factor():
    f = X_("nodal_cubic").gens[0]
    pi = random_projection(2, 1, 0)
    raw = hypersurface_branch_discriminant(f, pi, squarefree=False)
    sq = hypersurface_branch_discriminant(f, pi)
    assert raw.total_degree() == 6 and sq.total_degree() == 5
    assert not is_squarefree(raw) and is_squarefree(sq)


# ---------------------------------------------------------------- splitting helpers

def test_union_of_hyperplanes_detection():
    R, a0, a1, a2 = ring("a0 a1 a2")
    lines = (a0 - a1) * (a0 + 2 * a2) * (a1 - 3 * a2)
    assert is_union_of_hyperplanes(lines)
    assert not is_union_of_hyperplanes(a0**2 + a1**2 - a2**2)
    assert squarefree_part(lines**2 * (a0 + a1)) == (lines * (a0 + a1)).monic()


# ---------------------------------------------------------------- duality and purity

@pytest.mark.parametrize("name, k", [("conic", 1), ("plane_cubic", 1)])
def test_verify_duality_curves(name, k):
    rep = verify_duality(X_(name), k, 0)
    assert rep.equal
    assert rep.left.dim_and_degree() == rep.right.dim_and_degree()


def test_verify_duality_conic_points():
    rep = verify_duality(X_("conic"), 1, 0)
    assert rep.discriminant.degree == 2 and rep.right.dim_and_degree() == (0, 2)


def test_verify_duality_veronese_sextic():
    rep = verify_duality(X_("veronese_surface", GF(PRIME_B)), 2, 0)
    assert rep.equal and rep.discriminant.degree == 6
    assert rep.right.dim_and_degree() == (1, 3)


@pytest.mark.parametrize("name, k, cls, dim, deg", [
    ("plane_cubic", 1, HYPERPLANES, 0, 6),
    ("quadric_surface", 1, HYPERPLANES, 0, 2),
    ("quadric_surface", 2, IRREDUCIBLE, 1, 2),
])
def test_purity_examples(name, k, cls, dim, deg):
    rep = purity_classify(X_(name), k, 0)
    assert (rep.classification, rep.result.dim, rep.result.degree) == (cls, dim, deg)
    assert rep.predicted == rep.classification


def test_purity_rejects_non_dominant():
    with pytest.raises(ValueError):
        purity_classify(X_("twisted_cubic"), 2)


# ---------------------------------------------------------------- chains

def test_veronese_chain_to_plane():
    X = X_("veronese_surface", GF(PRIME_A))
    ch = projection_chain(X, 2, 0)
    assert [(r.classification, r.degree) for r in ch] == [(NONDOMINANT, 4), (NONDOMINANT, 4), (IRREDUCIBLE, 6)]
    assert chain_consistent(X, ch, 0)


def test_chain_for_hypersurface_is_single_step():
    X = X_("cubic_surface", GF(PRIME_A))
    ch = projection_chain(X, 2, 0)
    assert len(ch) == 1
    direct = smooth_discriminant(X, ch[0].projection, 0)
    assert direct.degree == ch[0].degree == 6


def test_conic_chain_equals_direct_branch_points():
    X = X_("conic")
    ch = projection_chain(X, 1, 0)
    assert len(ch) == 1 and ch[0].degree == 2
    assert chain_consistent(X, ch, 0)


# ---------------------------------------------------------------- properties

CASES = [("conic", 1), ("plane_cubic", 1), ("plane_quartic", 1), ("quadric_surface", 1), ("quadric_surface", 2),
         ("cubic_surface", 1), ("cubic_surface", 2), ("twisted_cubic_dual", 1), ("twisted_cubic_dual", 2),
         ("hyperplane", 1), ("hyperplane", 2)]


@settings(max_examples=100)
@given(st.sampled_from(CASES), st.integers(0, 10**6), st.sampled_from([PRIME_A, PRIME_B]))
def test_property_purity_and_duality(case, seed, p):
    name, k = case
    X = X_(name, GF(p))
    Xs = is_smooth(X)
    r = smooth_discriminant(X, random_projection(X.N, k, seed), seed, Xs)
    # empty or pure of codimension one (and then reduced to one form)
    assert r.classification in (EMPTY, HYPERPLANES, IRREDUCIBLE)
    if r.classification != EMPTY:
        assert r.dim == k - 1
        assert len(r.discriminant.ideal.gens) == 1
        # the critical locus maps generically one-to-one
        assert r.critical_degree == r.degree


@settings(max_examples=100)
@given(st.sampled_from(["conic", "plane_cubic", "plane_quartic", "quadric_surface", "cubic_surface"]),
       st.integers(0, 10**6), st.sampled_from([PRIME_A, PRIME_B]))
def test_property_branch_degree(name, seed, p):
    f = X_(name, GF(p)).gens[0]
    m = f.total_degree()
    raw = hypersurface_branch_discriminant(f, random_projection(f.ring.n - 1, f.ring.n - 2, seed), squarefree=False)
    assert raw.total_degree() == m * (m - 1)


@settings(max_examples=100)
@given(st.sampled_from([("conic", 1), ("plane_cubic", 1), ("quadric_surface", 1), ("quadric_surface", 2),
                        ("twisted_cubic_dual", 1), ("twisted_cubic_dual", 2)]),
       st.integers(0, 10**6))
def test_property_duality_theorem(case, seed):
    name, k = case
    rep = verify_duality(X_(name, GF(PRIME_A)), k, seed)
    assert rep.equal
