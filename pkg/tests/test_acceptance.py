"""Acceptance criteria 1-10, one test and one summary line each.

Expected values are the published numbers, frozen here; nothing is derived
from the code under test.
"""
import time
from contextlib import contextmanager

from projdual.braid import HALF_TWIST, braid_monodromy, sphere_return, surjectivity_certificate
from projdual.catalog import load_catalog, variety
from projdual.discriminant import (
    EMPTY, HYPERPLANES, IRREDUCIBLE, NONDOMINANT, hypersurface_branch_discriminant, projection_chain,
    purity_classify, smooth_discriminant, verify_duality,
)
from projdual.duality import check_biduality, dual_variety
from projdual.exactpoly import GF, PRIME_A, PRIME_B, QQ
from projdual.invariants import (
    defect, plucker_dual, polar_degree, polar_degree_checked, segre_check, shioda_tate_rank,
    smooth_surface_in_p3, solve_nodes_cusps, surface_branch_invariants,
)
from projdual.variety import random_projection

MINUTE = 60.0


@contextmanager
def criterion(acceptance, n, title, limit):
    checks = []
    t0 = time.perf_counter()
    try:
        yield checks
    except Exception as exc:
        acceptance(n, False, f"{title}: raised {type(exc).__name__}: {exc}")
        raise
    sec = time.perf_counter() - t0
    bad = [c for c in checks if c[1] != c[2]]
    detail = f"{title} ({len(checks)} checks, {sec:.1f}s of {limit:.0f}s)"
    if bad:
        detail += "; mismatches: " + ", ".join(f"{lbl} expected {e!r} got {o!r}" for lbl, e, o in bad)
    acceptance(n, not bad and sec < limit, detail)
    assert not bad, bad
    assert sec < limit


def test_1_dual_degree_formula(acceptance):
    with criterion(acceptance, 1, "dual degree d(d-1)^(N-1)", 2 * MINUTE + 10 * MINUTE) as c:
        for name, deg in (("conic", 2), ("plane_cubic", 6)):
            t = time.perf_counter()
            c.append((f"{name} over Q", deg, dual_variety(variety(name)).degree))
            c.append((f"{name} under 2 min", True, time.perf_counter() - t < 2 * MINUTE))
        for p in (PRIME_A, PRIME_B):
            c.append((f"quartic surface mod {p}", (2, 36),
                      dual_variety(variety("quartic_surface", GF(p))).dim_and_degree()))


def test_2_biduality(acceptance):
    with criterion(acceptance, 2, "biduality", 5 * MINUTE) as c:
        for name in ("conic", "plane_cubic", "twisted_cubic"):
            c.append((name, True, check_biduality(variety(name))))


def test_3_duality_theorem(acceptance):
    cases = [("conic", 1), ("plane_cubic", 1), ("quadric_surface", 1), ("quadric_surface", 2),
             ("cubic_surface", 2), ("veronese_surface", 2)]
    with criterion(acceptance, 3, "duality of the smooth discriminant, two seeds each", 20 * MINUTE) as c:
        for name, k in cases:
            for seed in (0, 1):
                c.append((f"{name} k={k} seed={seed}", True, verify_duality(variety(name), k, seed).equal))


def test_4_purity(acceptance):
    cases = [
        ("cubic_surface", 2, (IRREDUCIBLE, 1, 6)),
        ("plane_cubic", 1, (HYPERPLANES, 0, 6)),
        ("twisted_cubic_dual", 1, (EMPTY,)),
        ("twisted_cubic_dual", 2, (HYPERPLANES, 1, 3)),
    ]
    with criterion(acceptance, 4, "purity trichotomy", 10 * MINUTE) as c:
        for name, k, want in cases:
            rep = purity_classify(variety(name), k, 0)
            got = (rep.classification, rep.result.dim, rep.result.degree)[:len(want)]
            c.append((f"{name} k={k}", want, got))
            c.append((f"{name} k={k} prediction", rep.classification, rep.predicted))


def test_5_surface_branch_invariants(acceptance):
    frozen = {2: (2, 0, 0), 3: (6, 0, 6), 4: (12, 12, 24)}
    with criterion(acceptance, 5, "branch curves of surfaces in P^3", 2 * MINUTE) as c:
        for d, want in frozen.items():
            c.append((f"d={d}", want, surface_branch_invariants(smooth_surface_in_p3(d))))
        f = variety("cubic_surface").gens[0]
        c.append(("Fermat cubic deg Delta", 6, hypersurface_branch_discriminant(f, random_projection(3, 2, 0))
                  .total_degree()))


def test_6_net_of_quadrics(acceptance):
    with criterion(acceptance, 6, "net of quadrics arithmetic", 1.0) as c:
        c.append(("dual of smooth quartic", (12, 3), plucker_dual(4, 0, 0)))
        c.append(("nodes and cusps", (28, 24), solve_nodes_cusps(12, 4, 76)))
        c.append(("Mordell-Weil rank", 7, shioda_tate_rank(9, 1, 0)))


def test_7_polar_degrees(acceptance):
    catalog = load_catalog()
    smooth = [n for n, e in catalog.items() if "smooth" in e.tags]
    with criterion(acceptance, 7, "polar degrees", 15 * MINUTE) as c:
        X = variety("plane_cubic")
        c.append(("cubic r_0 = deg dual", 6, polar_degree(X, 0)))
        c.append(("cubic r_1 = deg X", 3, polar_degree(X, 1)))
        S = variety("cubic_surface")
        c.append(("cubic surface r_1", 6, polar_degree(S, 1)))
        c.append(("Segre section formula", True, segre_check(S, 1)))
        for name in smooth:
            Y = catalog[name].variety(GF(PRIME_A))
            rs = []
            for i in range(Y.N):
                r, dd = polar_degree_checked(Y, i) if i <= Y.dim else (polar_degree(Y, i), None)
                rs.append(r)
                if dd is not None:
                    c.append((f"{name}: deg Delta_{i + 1} = r_{i}", r, dd))
            c.append((f"{name}: r_n = deg X", Y.degree, rs[Y.dim]))
            c.append((f"{name}: r_i = 0 above n", [0] * (Y.N - 1 - Y.dim), rs[Y.dim + 1:]))


def test_8_braid_monodromy(acceptance):
    with criterion(acceptance, 8, "braid monodromy of smooth plane curves", 5 * MINUTE) as c:
        for name, m in (("conic", 2), ("plane_cubic", 3), ("plane_quartic", 4)):
            f = variety(name).gens[0]
            certified = []
            for seed in (0, 1, 2):
                M = braid_monodromy(f, random_projection(2, 1, seed), seed=seed)
                perm, err = sphere_return(M)
                c.append((f"{name} seed {seed}: branch points", m * (m - 1), len(M.branch_points)))
                c.append((f"{name} seed {seed}: transpositions", [HALF_TWIST] * (m * (m - 1)), M.kinds()))
                c.append((f"{name} seed {seed}: sphere product", tuple(range(m)), M.product_permutation()))
                c.append((f"{name} seed {seed}: return", (tuple(range(m)), True), (tuple(perm), err < 1e-9)))
                certified.append(bool(surjectivity_certificate(M)))
            c.append((f"{name}: certified in some seed", True, any(certified)))


def test_9_veronese_chain(acceptance):
    want = [(NONDOMINANT, 4), (NONDOMINANT, 4), (IRREDUCIBLE, 6), (HYPERPLANES, 3)]
    with criterion(acceptance, 9, "projection chain of v2(P^2)", 30 * MINUTE) as c:
        for p in (PRIME_A, PRIME_B):
            ch = projection_chain(variety("veronese_surface", GF(p)), 1, 0)
            c.append((f"chain mod {p}", want, [(r.classification, r.degree) for r in ch]))
        X = variety("veronese_surface", QQ)
        for k, step in ((2, want[2]), (1, want[3])):
            r = smooth_discriminant(X, random_projection(5, k, 0), 0)
            c.append((f"over Q to P^{k}", step, (r.classification, r.degree)))


def test_10_segre_defect(acceptance):
    with criterion(acceptance, 10, "Segre 3-fold is dual defective", 60 * MINUTE) as c:
        X = variety("segre_3fold", GF(PRIME_A))
        c.append(("defect", 1, defect(X)))
        c.append(("purity k=1", EMPTY, purity_classify(X, 1, 0).classification))
