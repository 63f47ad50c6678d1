"""Smooth discriminants of generic projections and the duality/purity checks."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .duality import dual_variety, same_variety, _random_combination
from .exactpoly import (
    Poly, Ring, resultant_univariate, univariate_coeffs, upoly_gcd, upoly_derivative,
)
from .groebner import (
    GroebnerBasis, Ideal, buchberger, eliminate, in_radical, krull_dimension, poly_gcd,
)
from . import linalg
from .variety import (
    COEFF_RANGE, MAX_RESEEDS, LinearProjection, NonGenericError, ProjectiveVariety,
    coordinate_ring, empty_variety, image_ideal, is_smooth, jacobian_matrix, linear_form,
    minors, random_projection, to_projection_coordinates,
)

IRREDUCIBLE = "IrreducibleHypersurface"
HYPERPLANES = "UnionOfHyperplanes"
EMPTY = "Empty"
NONDOMINANT = "NonDominantImage"
IMPURE = "Impure"


class PurityViolation(AssertionError):
    """Predicted and computed discriminant classes disagree."""


@dataclass
class DiscriminantResult:
    projection: LinearProjection
    discriminant: ProjectiveVariety
    classification: str
    dominant: bool
    critical_degree: Optional[int] = None
    seeds: List[int] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.discriminant.degree

    @property
    def dim(self) -> int:
        return self.discriminant.dim


@dataclass
class DualityReport:
    left: ProjectiveVariety
    right: ProjectiveVariety
    equal: bool
    seeds: List[int]
    discriminant: DiscriminantResult


@dataclass
class PurityReport:
    classification: str
    predicted: str
    dual_codim: int
    result: DiscriminantResult
    seeds: List[int]


# ---------------------------------------------------------------- critical loci

def _critical_system(X: ProjectiveVariety, pi: LinearProjection, smooth: bool, seed: int):
    """Generators of the critical locus in z = Mx coordinates, plus the
    saturation polynomial (or None) and the matrix M."""
    Z, M = to_projection_coordinates(X.gens, pi)
    c = X.codim
    k, N = pi.k, pi.N
    J = jacobian_matrix(Z)
    # directions of the center are the last N - k coordinate axes
    JK = [row[k + 1:] for row in J]
    gens = list(Z)
    if N - k >= c:
        gens += minors(JK, c)
    sat = None
    if not smooth:
        sing = minors(J, c)
        if sing:
            sat = _random_combination(sing, random.Random(seed))
    return gens, sat, M


def _eliminate_saturated(gens: Sequence[Poly], sat: Optional[Poly], drop: Sequence[int]):
    R = gens[0].ring
    if sat is None:
        return eliminate(Ideal(gens, R), drop)
    E = Ring(("_t",) + R.names, R.field)
    t = E.gens[0]
    ext = [E.convert(g) for g in gens] + [E.one() - t * E.convert(sat)]
    return eliminate(Ideal(ext, E), [0] + [d + 1 for d in drop])


def polar_critical_ideal(X: ProjectiveVariety, pi: LinearProjection, seed: int = 0,
                         smooth: Optional[bool] = None) -> Ideal:
    """Ideal of the smooth critical locus of pi on X, in X's coordinates."""
    if smooth is None:
        smooth = is_smooth(X)
    gens, sat, M = _critical_system(X, pi, smooth, seed)
    I = _eliminate_saturated(gens, sat, [])
    R = X.ring
    F = R.field
    z_of_x = [linear_form([F(v) for v in row], R) for row in M]
    return Ideal([g.compose(z_of_x, R) for g in I.gens], R)


# ---------------------------------------------------------------- hypersurface helpers

def _random_point(rng: random.Random, n: int) -> List[int]:
    return [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(n)]


def restrict_to_line(f: Poly, P: Sequence, Q: Sequence) -> list:
    """Dense coefficients of t -> f(P + tQ)."""
    T = Ring(("t",), f.ring.field)
    t = T.gens[0]
    F = T.field
    images = [T.const(F(p)) + t.scale(F(q)) for p, q in zip(P, Q)]
    return univariate_coeffs(f.compose(images, T), 0)


def is_squarefree(f: Poly, seed: int = 0) -> bool:
    F = f.ring.field
    rng = random.Random(seed)
    for _ in range(MAX_RESEEDS + 1):
        P, Q = _random_point(rng, f.ring.n), _random_point(rng, f.ring.n)
        h = restrict_to_line(f, P, Q)
        if len(h) - 1 != f.total_degree():
            continue
        g = upoly_gcd(h, upoly_derivative(h, F), F)
        return len(g) <= 1
    raise NonGenericError("no line meets f in general position")


def squarefree_part(f: Poly, seed: int = 0) -> Poly:
    if f.is_constant() or is_squarefree(f, seed):
        return f
    g = f
    for i in range(f.ring.n):
        d = f.diff(i)
        if not d.is_zero():
            g = poly_gcd(g, d)
    return f.exact_div(g).monic() if not g.is_constant() else f


def is_union_of_hyperplanes(f: Poly, seed: int = 0) -> bool:
    """Certificate that the reduced form f splits into linear factors.

    On a random line the roots of h(t) = f(P + tQ) are points of V(f).  Over
    A = K[t]/(h) we check that f vanishes on the tangent hyperplane at the
    generic root; then every component through the line is a hyperplane.
    """
    R = f.ring
    F = R.field
    n = R.n
    e = f.total_degree()
    if e <= 1:
        return e == 1
    rng = random.Random(seed)
    for _ in range(MAX_RESEEDS + 1):
        P, Q = _random_point(rng, n), _random_point(rng, n)
        h = restrict_to_line(f, P, Q)
        if len(h) - 1 != e or len(upoly_gcd(h, upoly_derivative(h, F), F)) > 1:
            continue
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        T = Ring(("t",) + tuple(f"s{i}_{j}" for i, j in pairs), F)
        t = T.gens[0]
        hpoly = sum((t ** d * T.const(c) for d, c in enumerate(h) if c), T.zero())
        G = buchberger([hpoly], T)
        point = [T.const(F(p)) + t.scale(F(q)) for p, q in zip(P, Q)]
        grad = [G.reduce(f.diff(i).compose(point, T)) for i in range(n)]
        # tangent hyperplane at the root is spanned by g_i e_j - g_j e_i
        y = [T.zero() for _ in range(n)]
        for idx, (i, j) in enumerate(pairs):
            s = T.gens[idx + 1]
            y[j] = y[j] + grad[i] * s
            y[i] = y[i] - grad[j] * s
        return G.reduce(f.compose(y, T)).is_zero()
    raise NonGenericError("no line meets f in general position")


# ---------------------------------------------------------------- discriminants

def _classify(D: ProjectiveVariety, k: int, seed: int):
    """Reduce a dominant discriminant and label it."""
    R = D.ring
    if D.ideal.is_unit() or krull_dimension(D.ideal) <= 0:
        return empty_variety(k, D.prefix, R.field), EMPTY
    gens = [g for g in D.ideal.groebner().elements]
    g = gens[0]
    for h in gens[1:]:
        if g.is_constant():
            break
        g = poly_gcd(g, h)
    if g.is_constant() or not in_radical(g, D.ideal):
        return D, IMPURE
    g = squarefree_part(g.monic(), seed)
    V = ProjectiveVariety(Ideal([g], R), label=D.label)
    return V, HYPERPLANES if is_union_of_hyperplanes(g, seed) else IRREDUCIBLE


def smooth_discriminant(X: ProjectiveVariety, pi: LinearProjection, seed: int = 0,
                        smooth: Optional[bool] = None) -> DiscriminantResult:
    """Closure of the critical values of pi on the smooth locus of X."""
    if smooth is None:
        smooth = is_smooth(X)
    k, N = pi.k, pi.N
    image = image_ideal(X, pi, X.prefix)
    if image.dim < k:
        return DiscriminantResult(pi, image, NONDOMINANT, False, seeds=[seed])
    gens, sat, _ = _critical_system(X, pi, smooth, seed)
    I = _eliminate_saturated(gens, sat, list(range(k + 1, N + 1)))
    T = coordinate_ring(k, X.prefix, X.ring.field)
    D = ProjectiveVariety(Ideal([T.convert(g) for g in I.gens], T),
                          label=f"discriminant of {X.label}".strip())
    D, cls = _classify(D, k, seed)
    crit = ProjectiveVariety(_eliminate_saturated(gens, sat, []))
    return DiscriminantResult(pi, D, cls, True, crit.degree, seeds=[seed])


def hypersurface_branch_discriminant(f: Poly, pi: LinearProjection, squarefree: bool = True) -> Poly:
    """Branch divisor of the projection of V(f) from a point off V(f)."""
    R = f.ring
    if pi.N != R.n - 1 or pi.k != pi.N - 1:
        raise ValueError("need a projection from a point of P^(N+1) onto P^N")
    center = linalg.nullspace(pi.matrix, R.n)[0]
    if f.evaluate({i: c for i, c in enumerate(center)}).is_zero():
        raise ValueError("center on variety")
    (fz,), _ = to_projection_coordinates([f], pi)
    last = R.n - 1
    raw = resultant_univariate(fz, fz.diff(last), last)
    T = coordinate_ring(pi.k, R.names[0].rstrip("0123456789"), R.field)
    raw = T.convert(raw, list(range(pi.k + 1)) + [None])
    return squarefree_part(raw.monic()) if squarefree else raw


# ---------------------------------------------------------------- theorem checks

def _seeds(seed: int) -> List[int]:
    return [seed + 1009 * i for i in range(MAX_RESEEDS + 1)]


def verify_duality(X: ProjectiveVariety, k: int, seed: int = 0) -> DualityReport:
    """Compare the dual of the smooth discriminant with PV meet the dual of X.

    Both sides live in the dual of the target P^k.  The basis of V is the
    projection's forms l_0..l_k, so a point u of the target dual maps to the
    hyperplane a = L^T u of P^N; ``right`` is the dual of X pulled back along
    that map and ``left`` is the dual of the discriminant in the same u.
    """
    tried = []
    smooth = is_smooth(X)
    for s in _seeds(seed):
        tried.append(s)
        pi = random_projection(X.N, k, s)
        res = smooth_discriminant(X, pi, s, smooth)
        if res.classification == IMPURE:
            continue
        left = dual_variety(res.discriminant, seed=s)
        right = dual_variety(X, restrict=pi.matrix, seed=s)
        res.seeds = list(tried)
        return DualityReport(left, right, same_variety(left, right), list(tried), res)
    raise NonGenericError(f"no generic projection among seeds {tried}")


def dual_codimension(X: ProjectiveVariety, seed: int = 0, start: int = 1) -> int:
    """codim of X's dual, read off sections of the dual by random PV of growing dimension."""
    for j in range(max(start, 0), X.N):
        pi = random_projection(X.N, j, seed + 31 * j + 5)
        S = dual_variety(X, restrict=pi.matrix, seed=seed)
        if not S.is_empty():
            return j - S.dim
    D = dual_variety(X, seed=seed)
    return X.N + 1 if D.is_empty() else X.N - D.dim


def predicted_class(dual_codim: int, k: int) -> str:
    if dual_codim < k:
        return IRREDUCIBLE
    return HYPERPLANES if dual_codim == k else EMPTY


def purity_classify(X: ProjectiveVariety, k: int, seed: int = 0) -> PurityReport:
    if X.dim < k:
        raise ValueError("projection is not dominant")
    cod = dual_codimension(X, seed + 7, start=k)
    pred = predicted_class(cod, k)
    smooth = is_smooth(X)
    tried = []
    for s in _seeds(seed):
        tried.append(s)
        res = smooth_discriminant(X, random_projection(X.N, k, s), s, smooth)
        if res.classification != IMPURE:
            break
    else:
        raise PurityViolation(f"impure discriminant for all seeds {tried}")
    if res.classification != pred:
        raise PurityViolation(f"predicted {pred}, computed {res.classification} (seeds {tried})")
    return PurityReport(res.classification, pred, cod, res, tried)


def projection_chain(X: ProjectiveVariety, k: int, seed: int = 0) -> List[DiscriminantResult]:
    """Delta_N = X and Delta_l = smooth discriminant of Delta_(l+1) -> P^l."""
    out = []
    cur = X
    for l in range(X.N - 1, k - 1, -1):
        pi = random_projection(l + 1, l, seed + l)
        res = smooth_discriminant(cur, pi, seed + l)
        out.append(res)
        cur = res.discriminant
    return out


def composite_projection(chain: Sequence[DiscriminantResult]) -> LinearProjection:
    pi = chain[0].projection
    for r in chain[1:]:
        pi = pi.then(r.projection)
    return pi


def chain_consistent(X: ProjectiveVariety, chain: Sequence[DiscriminantResult], seed: int = 0) -> bool:
    direct = smooth_discriminant(X, composite_projection(chain), seed)
    return same_variety(direct.discriminant, chain[-1].discriminant)
