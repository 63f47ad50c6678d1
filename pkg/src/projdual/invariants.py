"""Integer invariants: Pluecker formulas, surface branch curves, polar degrees."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .discriminant import dual_codimension, polar_critical_ideal, smooth_discriminant
from .exactpoly import Poly
from .groebner import Ideal
from .variety import (
    ProjectiveVariety, intrinsic_section, is_smooth, random_projection, random_subspace,
)


class InvariantError(ValueError):
    pass


@dataclass(frozen=True)
class PluckerInvariants:
    d: int
    d_dual: Optional[int] = None
    g: Optional[int] = None
    delta: Optional[int] = None
    kappa: Optional[int] = None

    def consistent(self) -> bool:
        vals = (self.d_dual, self.g, self.delta, self.kappa)
        if any(v is None for v in vals):
            return True
        return plucker_dual(self.d, self.delta, self.kappa) == (self.d_dual, self.g)


@dataclass(frozen=True)
class SurfaceInvariants:
    deg_S: int
    KH: int
    K2: int
    c2: int


def plucker_dual(d: int, delta: int, kappa: int) -> Tuple[int, int]:
    """Degree and genus of the dual of a degree-d curve with delta nodes and kappa cusps."""
    if d < 1 or delta < 0 or kappa < 0:
        raise InvariantError("invalid singularity data")
    d_dual = d * (d - 1) - 2 * delta - 3 * kappa
    g = (d - 1) * (d - 2) // 2 - delta - kappa
    if d_dual < 0 or g < 0:
        raise InvariantError("invalid singularity data")
    return d_dual, g


def solve_nodes_cusps(d: int, d_dual: int, tjurina_total: int) -> Tuple[int, int]:
    """(delta, kappa) from d_dual = d(d-1) - 2 delta - 3 kappa and T = delta + 2 kappa."""
    rhs = d * (d - 1) - d_dual
    kappa = 2 * tjurina_total - rhs
    delta = tjurina_total - 2 * kappa
    if kappa < 0 or delta < 0:
        raise InvariantError("singularities beyond nodes and cusps")
    return delta, kappa


def tjurina_total(f: Poly) -> int:
    """Degree of the Jacobian subscheme of the plane curve f = 0."""
    V = ProjectiveVariety(Ideal([f] + [f.diff(i) for i in range(f.ring.n)], f.ring))
    if V.is_empty():
        return 0
    dim, deg = V.dim_and_degree()
    if dim != 0:
        raise InvariantError("curve is not reduced")
    return deg


def surface_branch_invariants(s: SurfaceInvariants) -> Tuple[int, int, int]:
    """Degree, nodes and cusps of the branch curve of a generic projection of S to P^2."""
    deg = 3 * s.deg_S + s.KH
    delta = Fraction(deg * deg, 2) - 15 * deg - 3 * s.K2 + 24 * s.deg_S + s.c2
    kappa = 9 * deg + 2 * s.K2 - 15 * s.deg_S - s.c2
    if delta.denominator != 1:
        raise InvariantError("hypotheses violated: non-integral node count")
    delta = int(delta)
    if deg < 0 or delta < 0 or kappa < 0:
        raise InvariantError("hypotheses violated")
    return deg, delta, kappa


def smooth_surface_in_p3(d: int) -> SurfaceInvariants:
    """K = (d-4)H and c2 = d^3 - 4d^2 + 6d for a smooth degree-d surface."""
    return SurfaceInvariants(d, d * (d - 4), d * (d - 4) ** 2, d ** 3 - 4 * d ** 2 + 6 * d)


def polar_degree(X: ProjectiveVariety, i: int, seed: int = 0) -> int:
    """r_i(X): degree of the critical locus of a generic projection to P^(i+1)."""
    if not 0 <= i <= X.N - 1:
        raise ValueError("need 0 <= i <= N-1")
    pi = random_projection(X.N, i + 1, seed)
    V = ProjectiveVariety(polar_critical_ideal(X, pi, seed))
    return V.degree if V.dim == i else 0


def polar_degree_checked(X: ProjectiveVariety, i: int, seed: int = 0) -> Tuple[int, Optional[int]]:
    """r_i together with deg of the smooth discriminant of the same projection (None if not dominant)."""
    if not 0 <= i <= X.N - 1:
        raise ValueError("need 0 <= i <= N-1")
    pi = random_projection(X.N, i + 1, seed)
    smooth = is_smooth(X)
    V = ProjectiveVariety(polar_critical_ideal(X, pi, seed, smooth))
    r = V.degree if V.dim == i else 0
    res = smooth_discriminant(X, pi, seed, smooth)
    if not res.dominant:
        return r, None
    return r, res.degree if res.dim == i else 0


def segre_check(X: ProjectiveVariety, i: int, seed: int = 0) -> bool:
    """r_i(X) equals r_0 of a generic codimension-i linear section."""
    if i > X.dim:
        raise ValueError("need i <= dim X")
    Xi = intrinsic_section(X, random_subspace(X.N, i, seed + 3))
    lhs = polar_degree(X, i, seed)
    rhs = polar_degree(Xi, 0, seed + 1) if Xi.N >= 1 else Xi.degree
    return lhs == rhs


def defect(X: ProjectiveVariety, seed: int = 0) -> int:
    """N - 1 - dim of the dual variety."""
    return dual_codimension(X, seed) - 1


def shioda_tate_rank(rho_total: int, rho_base: int, fibral: int) -> int:
    r = rho_total - 1 - rho_base - fibral
    if r < 0:
        raise InvariantError("negative Mordell-Weil rank")
    return r
