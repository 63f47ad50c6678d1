"""Conormal ideals and dual varieties by elimination."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exactpoly import Poly, Ring, det_bareiss
from .groebner import (
    Ideal, _ideal_with_basis, elimination_basis, krull_dimension, radical_contains,
)
from .variety import (
    LinearSubspace, ProjectiveVariety, coordinate_ring, empty_variety,
    is_smooth, jacobian_matrix,
)


def dual_prefix(prefix: str) -> str:
    return "a" if prefix == "x" else "x"


@dataclass
class ConormalIdeal:
    """Conormal variety of X in the chart x_chart = 1.

    ``ideal`` lives in a block-ordered ring whose first block holds the
    auxiliary saturation variable (if any) and the chart x-variables, and
    whose second block holds the dual coordinates.
    """

    source: ProjectiveVariety
    ideal: Ideal
    chart: int
    n_drop: int
    dual_ring: Ring

    def dimension(self) -> int:
        """Dimension inside P^N x P^N (affine chart in x, cone in a)."""
        return krull_dimension(self.ideal) - 1


def _chart_index(X: ProjectiveVariety) -> int:
    G = X.ideal.groebner()
    for h in range(X.N, -1, -1):
        if not G.contains(X.ring.var(h)):
            return h
    raise ValueError("variety is empty")


def _c_minors(J: List[List[Poly]], c: int) -> Dict[Tuple[tuple, tuple], Poly]:
    rows, cols = len(J), len(J[0])
    out = {}
    for r in itertools.combinations(range(rows), c):
        for cc in itertools.combinations(range(cols), c):
            d = det_bareiss([[J[i][j] for j in cc] for i in r])
            if not d.is_zero():
                out[(r, cc)] = d
    return out


def _random_combination(polys: Sequence[Poly], rng: random.Random) -> Poly:
    R = polys[0].ring
    out = R.zero()
    for g in polys:
        out = out + g.scale(rng.randint(1, 50) * rng.choice((-1, 1)))
    return out if not out.is_zero() else polys[0]


def conormal_ideal(X: ProjectiveVariety, restrict: Optional[Sequence[Sequence]] = None,
                   seed: int = 0, smooth: Optional[bool] = None) -> ConormalIdeal:
    """Conormal ideal in the chart x_h = 1, saturated away from Sing X.

    With ``restrict`` (rows r_0..r_k) the dual coordinates are pulled back
    along a = sum_i u_i r_i, which restricts the conormal to P^N x PV.
    """
    N = X.N
    F = X.ring.field
    c = X.codim
    h = _chart_index(X)
    if len(X.gens) == 1:
        return _hypersurface_conormal(X, restrict, h)
    if smooth is None:
        smooth = is_smooth(X)
    xs_kept = [i for i in range(N + 1) if i != h]
    k = N if restrict is None else len(restrict) - 1
    dual = coordinate_ring(k, dual_prefix(X.prefix), F)
    extra = [] if smooth else ["_t"]
    names = extra + [X.ring.names[i] for i in xs_kept] + list(dual.names)
    n_drop = len(extra) + N
    E = Ring(names, F, "block", n_drop)
    # x_h -> 1, other x's and the a's by name
    xim = [E.one() if i == h else E.var(X.ring.names[i]) for i in range(N + 1)]
    u = [E.var(n) for n in dual.names]
    if restrict is None:
        a = u
    else:
        a = [sum((u[i].scale(F(restrict[i][j])) for i in range(k + 1) if restrict[i][j]), E.zero())
             for j in range(N + 1)]
    chart = lambda g: g.compose(xim, E)
    J = [[chart(g) for g in row] for row in jacobian_matrix(X.gens)]
    gens = [chart(g) for g in X.gens]
    gens.append(sum((xim[i] * a[i] for i in range(N + 1)), E.zero()))
    cm = _c_minors(J, c)
    # (c+1)-minors of [J_rows; a] expanded along the a row
    rowsets = sorted({r for r, _ in cm})
    for r in rowsets:
        for cols in itertools.combinations(range(N + 1), c + 1):
            acc = E.zero()
            for pos, j in enumerate(cols):
                rest = tuple(x for x in cols if x != j)
                m = cm.get((r, rest))
                if m is not None:
                    term = m * a[j]
                    acc = acc + (term if (c + pos) % 2 == 0 else -term)
            if not acc.is_zero():
                gens.append(acc)
    if not smooth:
        rng = random.Random(seed)
        if not cm:
            raise ValueError("Jacobian has no nonzero minors")
        g = _random_combination(list(cm.values()), rng)
        gens.append(E.one() - E.gens[0] * g)
    return ConormalIdeal(X, Ideal(gens, E), h, n_drop, dual)


def _hypersurface_conormal(X: ProjectiveVariety, restrict, h: int) -> ConormalIdeal:
    """Conormal of V(f) as the closed graph a = lam * grad f in the chart x_h = 1.

    Singular points only contribute a = 0, the vertex of the dual cone, so
    no saturation is needed.
    """
    N = X.N
    F = X.ring.field
    k = N if restrict is None else len(restrict) - 1
    dual = coordinate_ring(k, dual_prefix(X.prefix), F)
    names = ["_lam"] + [X.ring.names[i] for i in range(N + 1) if i != h] + list(dual.names)
    E = Ring(names, F, "block", N + 1)
    xim = [E.one() if i == h else E.var(X.ring.names[i]) for i in range(N + 1)]
    u = [E.var(n) for n in dual.names]
    if restrict is None:
        a = u
    else:
        a = [sum((u[i].scale(F(restrict[i][j])) for i in range(k + 1) if restrict[i][j]), E.zero())
             for j in range(N + 1)]
    lam = E.gens[0]
    f = X.gens[0]
    gens = [f.compose(xim, E)]
    gens += [a[j] - lam * f.diff(j).compose(xim, E) for j in range(N + 1)]
    return ConormalIdeal(X, Ideal(gens, E), h, N + 1, dual)


def dual_variety(X: ProjectiveVariety, restrict: Optional[Sequence[Sequence]] = None,
                 seed: int = 0, budget=None, method: str = "auto") -> ProjectiveVariety:
    """Dual variety, optionally intersected with PV (rows of ``restrict`` span V).

    ``method="det"`` (or "auto" on a variety tagged ``veronese2``) uses the
    determinant of the generic symmetric matrix instead of elimination.
    """
    if X.is_empty():
        k = X.N if restrict is None else len(restrict) - 1
        return empty_variety(k, dual_prefix(X.prefix), X.ring.field)
    if X.codim == 0:
        k = X.N if restrict is None else len(restrict) - 1
        return empty_variety(k, dual_prefix(X.prefix), X.ring.field)
    if method == "det" or (method == "auto" and "veronese2" in X.tags):
        return _veronese_dual(X, restrict)
    C = conormal_ideal(X, restrict, seed)
    D = C.dual_ring
    nd = C.n_drop
    els = elimination_basis(C.ideal.gens, C.ideal.ring, nd, budget)
    out = [D.convert(g, [None] * nd + list(range(D.n))) for g in els]
    return ProjectiveVariety(_ideal_with_basis(out, D), label=f"dual of {X.label}".strip())


def veronese_layout(n: int) -> Dict[Tuple[int, int], int]:
    """Coordinate index of the (i, j) entry, i <= j, of the symmetric matrix v v^T."""
    out, k = {}, 0
    for i in range(n + 1):
        for j in range(i, n + 1):
            out[(i, j)] = out[(j, i)] = k
            k += 1
    return out


def veronese_ideal(n: int, field=None) -> ProjectiveVariety:
    lay = veronese_layout(n)
    N = (n + 1) * (n + 2) // 2 - 1
    R = coordinate_ring(N) if field is None else coordinate_ring(N, field=field)
    x = R.gens
    M = [[x[lay[(i, j)]] for j in range(n + 1)] for i in range(n + 1)]
    gens, seen = [], set()
    for r in itertools.combinations(range(n + 1), 2):
        for c in itertools.combinations(range(n + 1), 2):
            d = M[r[0]][c[0]] * M[r[1]][c[1]] - M[r[0]][c[1]] * M[r[1]][c[0]]
            if not d.is_zero() and d.monic() not in seen and (-d).monic() not in seen:
                seen.add(d.monic())
                gens.append(d)
    return ProjectiveVariety(Ideal(gens, R), label=f"v2(P^{n})", tags=("veronese2",))


def _veronese_dual(X: ProjectiveVariety, restrict=None) -> ProjectiveVariety:
    N = X.N
    n = next(m for m in range(N + 1) if (m + 1) * (m + 2) // 2 == N + 1)
    lay = veronese_layout(n)
    F = X.ring.field
    k = N if restrict is None else len(restrict) - 1
    D = coordinate_ring(k, dual_prefix(X.prefix), F)
    u = D.gens
    if restrict is None:
        a = list(u)
    else:
        a = [sum((u[i].scale(F(restrict[i][j])) for i in range(k + 1) if restrict[i][j]), D.zero())
             for j in range(N + 1)]
    half = F(1) * F.inv(F(2))
    Q = [[a[lay[(i, j)]] if i == j else a[lay[(i, j)]].scale(half) for j in range(n + 1)]
         for i in range(n + 1)]
    det = det_bareiss(Q)
    gens = [det] if not det.is_zero() else []
    return ProjectiveVariety(Ideal(gens, D), label=f"dual of {X.label}".strip())


def same_variety(A: ProjectiveVariety, B: ProjectiveVariety, budget=None) -> bool:
    """Set equality of projective zero sets by two-sided radical membership."""
    if A.ring.names != B.ring.names:
        raise ValueError("varieties live in different coordinate rings")
    ea, eb = A.is_empty(), B.is_empty()
    if ea or eb:
        return ea and eb
    return radical_contains(A.ideal, B.ideal, budget) and radical_contains(B.ideal, A.ideal, budget)


def check_biduality(X: ProjectiveVariety, seed: int = 0, budget=None) -> bool:
    D = dual_variety(X, seed=seed, budget=budget, method="elim")
    DD = dual_variety(D, seed=seed + 1, budget=budget, method="elim")
    return same_variety(X, DD, budget)
