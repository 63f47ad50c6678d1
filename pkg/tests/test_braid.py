import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from projdual.braid import (
    CERTIFIED, CUSP, HALF_TWIST, INCONCLUSIVE, NODE, Arc, ComplexPoint, LoopMonodromy, LoopSystem,
    MonodromyData, PlaneCover, Segment, braid_monodromy, branch_points, classify_word, compose,
    free_reduce, invert_word, monodromy_of_cover, polyroots, restrict_to_line_and_monodromy,
    sphere_return, surjectivity_certificate, transport_fiber, word_permutation,
)
from projdual.braid.numerics import TrackingError
from projdual.catalog import load_catalog
from projdual.exactpoly import ring
from projdual.variety import random_projection

CATALOG = load_catalog()


def curve(name):
    return CATALOG[name].variety().gens[0]


S2, T, Y = ring("t y")


# ---------------------------------------------------------------- points and roots

def test_complex_point_is_finite():
    with pytest.raises(ValueError):
        ComplexPoint(float("nan"), 0.0)
    with pytest.raises(ValueError):
        ComplexPoint(0.0, float("inf"))
    assert ComplexPoint.of(1 + 2j).as_pair() == [1.0, 2.0]
    assert ComplexPoint.of(1 / 3).as_pair()[0] == 0.333333333333


def test_polyroots_recovers_known_roots():
    roots = np.array([1, -2, 0.5 + 1j, 0.5 - 1j, 3j])
    c = np.poly(roots)[::-1]          # constant term first
    got = polyroots(c / c[-1])
    assert all(min(abs(got - r)) < 1e-10 for r in roots)


# ---------------------------------------------------------------- transport

def test_local_model_half_twist():
    # y^2 = t: continuing sqrt(t) once around 0 swaps the two roots
    cover = PlaneCover.from_affine(Y**2 - T)
    r = 0.25
    start = np.array([0.5, -0.5], dtype=complex)
    end, word = transport_fiber(cover, [Arc(0, r, 0.0, 2 * math.pi)], start)
    # analytic continuation oracle: y(theta) = sqrt(r) e^{i theta / 2}
    oracle = [0.5 * cmath.exp(1j * math.pi), -0.5 * cmath.exp(1j * math.pi)]
    assert np.allclose(end, oracle, atol=1e-9)
    assert word == [1]
    assert word_permutation(word, 2) == (1, 0)


def test_clockwise_loop_gives_inverse_letter():
    cover = PlaneCover.from_affine(Y**2 - T)
    _, word = transport_fiber(cover, [Arc(0, 0.25, 0.0, -2 * math.pi)], np.array([0.5, -0.5]))
    assert word == [-1]


def test_constant_path_is_identity():
    cover = PlaneCover.from_affine(Y**3 - T * Y - 1)
    t0 = 0.3 + 0.2j
    start = cover.fiber(t0)
    end, word = transport_fiber(cover, [Segment(t0, t0)], start)
    assert word == [] and np.allclose(end, start)
    end, word = transport_fiber(cover, [], start)
    assert word == [] and np.allclose(end, start)


def test_path_then_reverse_is_trivial():
    cover = PlaneCover.from_affine(Y**3 - 3 * Y - T)       # branch points t = +-2
    a = 0.1 + 3j
    path = [Segment(a, -0.5 + 0.1j), Arc(2, 2.5, math.pi, 1.5 * math.pi), Segment(2 - 2.5j, 3 + 1j)]
    back = [p.reversed() for p in reversed(path)]
    start = cover.fiber(a)
    end, word = transport_fiber(cover, path + back, start)
    assert np.allclose(end, start, atol=1e-9)
    assert free_reduce(word) == ()
    assert word_permutation(word, 3) == (0, 1, 2)


def test_start_fiber_must_solve_equation():
    cover = PlaneCover.from_affine(Y**2 - T)
    with pytest.raises(ValueError):
        transport_fiber(cover, [Segment(1, 2)], np.array([5.0, -5.0]))


def test_path_through_branch_point_fails_loudly():
    cover = PlaneCover.from_affine(Y**2 - T)
    with pytest.raises(TrackingError):
        transport_fiber(cover, [Segment(-1, 1)], np.array([1j, -1j]))


def test_two_branch_point_model():
    # y^2 = (t - 1)(t + 1): both loops are sigma_1 and the product is trivial
    cover = PlaneCover.from_affine(Y**2 - (T - 1) * (T + 1))
    M = monodromy_of_cover(cover, [ComplexPoint(1, 0), ComplexPoint(-1, 0)], seed=4)
    assert len(M.loops) == 2 and M.kinds() == [HALF_TWIST, HALF_TWIST]
    assert all(L.permutation == (1, 0) for L in M.loops)
    assert M.product_permutation() == (0, 1)


# ---------------------------------------------------------------- words

def test_word_helpers():
    assert free_reduce([1, 2, -2, -1, 3]) == (3,)
    assert invert_word([1, -2, 3]) == (-3, 2, -1)
    assert word_permutation([1, 2], 3) == (2, 0, 1)
    assert compose((1, 0, 2), (0, 2, 1)) == (2, 0, 1)
    assert classify_word([2, 1, -2]) == (HALF_TWIST, 1)
    assert classify_word([1, 1]) == (NODE, 1)
    assert classify_word([-2, 3, 3, 3, 2]) == (CUSP, 3)
    assert classify_word([1, 2])[0] == "other"


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12)


@settings(max_examples=300)
@given(words, words)
def test_property_word_image_is_homomorphism(u, v):
    m = 4
    assert word_permutation(u + v, m) == compose(word_permutation(u, m), word_permutation(v, m))
    assert word_permutation(free_reduce(u), m) == word_permutation(u, m)
    assert compose(word_permutation(u, m), word_permutation(invert_word(u), m)) == (0, 1, 2, 3)
    assert free_reduce(list(u) + list(invert_word(u))) == ()


@settings(max_examples=200)
@given(words, st.sampled_from([1, -1, 2, -2, 3, -3]), st.integers(1, 3))
def test_property_conjugate_classification(u, x, e):
    u = free_reduce(u)
    w = free_reduce(list(u) + [x] * e + list(invert_word(u)))
    kind, letter = classify_word(w)
    assert kind == {1: HALF_TWIST, 2: NODE, 3: CUSP}[e]
    assert abs(letter) == abs(x)


# ---------------------------------------------------------------- branch points

@pytest.mark.parametrize("name, count", [("conic", 2), ("plane_cubic", 6), ("plane_quartic", 12)])
def test_branch_point_counts(name, count):
    pts = branch_points(curve(name), random_projection(2, 1, 0))
    assert len(pts) == count


# ---------------------------------------------------------------- monodromy

def test_conic_monodromy():
    M = braid_monodromy(curve("conic"), random_projection(2, 1, 0), seed=0)
    assert M.m == 2 and len(M.loops) == 2
    assert all(L.word == (1,) for L in M.loops)
    assert M.product_permutation() == (0, 1)
    assert surjectivity_certificate(M).status == CERTIFIED


def test_cubic_monodromy_is_transitive():
    M = braid_monodromy(curve("plane_cubic"), random_projection(2, 1, 0), seed=0)
    assert len(M.loops) == 6 and M.kinds() == [HALF_TWIST] * 6
    moved = {s for p in M.permutations for s in range(3) if p[s] != s}
    assert moved == {0, 1, 2}
    cert = surjectivity_certificate(M)
    assert cert and sorted(cert.chain) == [0, 1, 2]


def test_nodal_curve_has_node_type_loop():
    M = braid_monodromy(curve("nodal_cubic"), random_projection(2, 1, 0), seed=0)
    assert NODE in M.kinds()
    node = next(L for L in M.loops if L.kind == NODE)
    assert node.permutation == (0, 1, 2)
    assert surjectivity_certificate(M).status == INCONCLUSIVE


def test_cuspidal_curve_has_cusp_type_loop():
    M = braid_monodromy(curve("cuspidal_cubic"), random_projection(2, 1, 0), seed=0)
    assert CUSP in M.kinds()


def test_reducible_cover_is_inconclusive():
    M = braid_monodromy(curve("line_and_conic"), random_projection(2, 1, 0), seed=0)
    assert surjectivity_certificate(M).status == INCONCLUSIVE


def test_non_transitive_data_is_inconclusive():
    pt = ComplexPoint(0.0, 0.0)
    loops = [LoopMonodromy(pt, (1,), (1, 0, 2), HALF_TWIST, 1) for _ in range(2)]
    M = MonodromyData(3, pt, [pt] * 3, [pt, pt], loops, 0, 0.0, 1e-10, [0])
    cert = surjectivity_certificate(M)
    assert cert.status == INCONCLUSIVE and "transitive" in cert.reason


def test_loop_system_orders_and_separates():
    pts = [complex(1, 0), complex(-1, 0), complex(0, 1.0), complex(0.1, 1.05)]
    L = LoopSystem.build(pts, seed=2)
    got = [complex(l.branch_point) for l in L.loops]
    assert len(got) == 4 and all(min(abs(g - q) for q in pts) < 1e-12 for g in got)
    assert {min(range(4), key=lambda k: abs(g - pts[k])) for g in got} == {0, 1, 2, 3}
    for l, g in zip(L.loops, got):
        others = [abs(g - q) for q in pts if abs(g - q) > 1e-12]
        assert l.radius <= min(others) / 3 + 1e-12
    c = sum(pts) / 4
    args = [cmath.phase((g - L.base) / (c - L.base)) for g in got]
    assert args == sorted(args)


def test_json_serialization():
    M = braid_monodromy(curve("conic"), random_projection(2, 1, 0), seed=0)
    js = M.as_json()
    assert js["m"] == 2 and len(js["branch_points"]) == 2
    assert all(len(p) == 2 for p in js["branch_points"])
    assert js["loops"][0]["permutation"] == [2, 1]        # one-line notation, 1-based


# ---------------------------------------------------------------- line restriction

@pytest.mark.parametrize("name, m, count", [("quadric_surface", 2, 2), ("cubic_surface", 3, 6),
                                            ("veronese_dual", 3, 6)])
def test_line_restriction(name, m, count):
    Y_ = CATALOG[name].variety()
    pi = random_projection(Y_.N, Y_.N - 1, 1)
    M = restrict_to_line_and_monodromy(Y_, pi, seed=1)
    assert M.m == m and len(M.branch_points) == count
    assert surjectivity_certificate(M)


# ---------------------------------------------------------------- properties

@settings(max_examples=100)
@given(st.sampled_from(["conic", "plane_cubic"]), st.integers(0, 10**6))
def test_property_monodromy_determinism_and_consistency(name, seed):
    f = curve(name)
    m = f.total_degree()
    pi = random_projection(2, 1, seed)
    M = braid_monodromy(f, pi, seed=seed)
    assert M.as_json() == braid_monodromy(f, pi, seed=seed).as_json()
    # each permutation is the image of its word; simple branching; sphere relation
    assert all(word_permutation(L.word, m) == L.permutation for L in M.loops)
    assert len(M.branch_points) == m * (m - 1)
    assert M.kinds() == [HALF_TWIST] * len(M.loops)
    assert M.product_permutation() == tuple(range(m))
    perm, err = sphere_return(M)
    assert perm == tuple(range(m)) and err < 10 * M.tol
