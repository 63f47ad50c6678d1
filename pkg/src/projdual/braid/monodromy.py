"""Loop systems, braid monodromy of plane-curve covers, and surjectivity certificates."""
from __future__ import annotations

import cmath
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..discriminant import hypersurface_branch_discriminant
from ..exactpoly import QQ, Poly
from ..variety import (
    LinearProjection, NonGenericError, ProjectiveVariety, coordinate_ring, to_projection_coordinates,
)
from .numerics import (
    DEFAULT_TOL, SEPARATION, Arc, ComplexPoint, PlaneCover, RootFindingError, Segment,
    TrackingError, discriminant_roots, polyroots, transport_fiber, univariate_from_binary,
)

MAX_RESEEDS = 3
CERTIFIED = "Certified"
INCONCLUSIVE = "Inconclusive"

HALF_TWIST = "half-twist"
NODE = "node-type"
CUSP = "cusp-type"
OTHER = "other"


# ---------------------------------------------------------------- words and permutations

def free_reduce(word: Sequence[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert_word(word: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-a for a in reversed(word))


def word_permutation(word: Sequence[int], m: int) -> Tuple[int, ...]:
    """Image in S_m: entry s is the final position of the strand starting at position s."""
    at = list(range(m))  # at[p] = strand currently at position p
    for a in word:
        i = abs(a) - 1
        if not 0 <= i < m - 1:
            raise ValueError(f"generator {a} out of range for {m} strands")
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * m
    for p, strand in enumerate(at):
        perm[strand] = p
    return tuple(perm)


def compose(first: Sequence[int], then: Sequence[int]) -> Tuple[int, ...]:
    """Permutation of traversing ``first`` and then ``then``."""
    return tuple(then[first[s]] for s in range(len(first)))


def is_transposition(perm: Sequence[int]) -> bool:
    return sum(1 for s, p in enumerate(perm) if s != p) == 2


def conjugate_form(word: Sequence[int]):
    """Split a reduced word as u x^e u^-1 with x a single letter; None otherwise."""
    w = free_reduce(word)
    n = len(w)
    l = 0
    while 2 * (l + 1) < n and w[l] == -w[n - 1 - l]:
        l += 1
    mid = w[l:n - l]
    if not mid or any(abs(a) != abs(mid[0]) for a in mid) or len(set(mid)) != 1:
        return None
    return w[:l], mid[0], len(mid)


def classify_word(word: Sequence[int]) -> Tuple[str, Optional[int]]:
    cf = conjugate_form(word)
    if cf is None:
        return OTHER, None
    _, letter, e = cf
    kind = {1: HALF_TWIST, 2: NODE, 3: CUSP}.get(e, OTHER)
    return kind, letter


# ---------------------------------------------------------------- loop system

@dataclass
class Loop:
    branch_point: complex
    radius: float
    approach: complex

    def pieces(self, base: complex):
        th = cmath.phase(self.approach - self.branch_point)
        circle = Arc(self.branch_point, self.radius, th, th + 2 * math.pi)
        return [Segment(base, self.approach), circle, Segment(self.approach, base)]


@dataclass
class LoopSystem:
    """Bouquet of counterclockwise loops from a far base point, ordered by argument."""

    base: complex
    loops: List[Loop]

    @classmethod
    def build(cls, points: Sequence[complex], seed: int = 0, tries: int = 24) -> "LoopSystem":
        pts = [complex(p) for p in points]
        rng = random.Random(seed * 7 + 3)
        if not pts:
            return cls(cmath.exp(2j * math.pi * rng.random()), [])
        c = sum(pts) / len(pts)
        R = 3 * max(abs(p - c) for p in pts) + 1.0
        near = []
        for j, p in enumerate(pts):
            others = [abs(p - q) for i, q in enumerate(pts) if i != j]
            near.append(min(others) if others else 3.0)
        for _ in range(tries):
            base = c + R * cmath.exp(2j * math.pi * rng.random())
            loops = []
            for j, p in enumerate(pts):
                # clearance from the rays towards the other points keeps the loops disjoint
                clear = min((_dist_to_segment(p, base, q) for i, q in enumerate(pts) if i != j),
                            default=math.inf)
                if clear < 0.1 * near[j]:
                    break
                rho = min(near[j] / 3, 0.8 * clear)
                u = (base - p) / abs(base - p)
                loops.append(Loop(p, rho, p + rho * u))
            else:
                # angles seen from the base, measured from the centroid direction (no wrap-around)
                loops.sort(key=lambda L: cmath.phase((L.branch_point - base) / (c - base)))
                return cls(base, loops)
        raise NonGenericError("no base point with clear loop segments")

    def paths(self):
        return [L.pieces(self.base) for L in self.loops]


def _dist_to_segment(p: complex, a: complex, b: complex) -> float:
    d = b - a
    if d == 0:
        return abs(p - a)
    s = ((p - a) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(p - (a + s * d))


# ---------------------------------------------------------------- monodromy data

@dataclass
class LoopMonodromy:
    branch_point: ComplexPoint
    word: Tuple[int, ...]
    permutation: Tuple[int, ...]
    kind: str
    local_letter: Optional[int]

    def as_json(self) -> dict:
        return {
            "branch_point": self.branch_point.as_pair(),
            "word": list(self.word),
            "permutation": [p + 1 for p in self.permutation],
            "kind": self.kind,
        }


@dataclass
class MonodromyData:
    m: int
    base_point: ComplexPoint
    base_fiber: List[ComplexPoint]
    branch_points: List[ComplexPoint]
    loops: List[LoopMonodromy]
    seed: int
    phase: float
    tol: float
    seeds_tried: List[int]
    cover: PlaneCover = field(default=None, repr=False, compare=False)
    system: LoopSystem = field(default=None, repr=False, compare=False)

    @property
    def permutations(self):
        return [L.permutation for L in self.loops]

    @property
    def words(self):
        return [L.word for L in self.loops]

    def product_permutation(self) -> Tuple[int, ...]:
        out = tuple(range(self.m))
        for L in self.loops:
            out = compose(out, L.permutation)
        return out

    def kinds(self) -> List[str]:
        return [L.kind for L in self.loops]

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "base_point": self.base_point.as_pair(),
            "base_fiber": [y.as_pair() for y in self.base_fiber],
            "branch_points": [b.as_pair() for b in self.branch_points],
            "loops": [L.as_json() for L in self.loops],
            "product_permutation": [p + 1 for p in self.product_permutation()],
            "seed": self.seed,
            "seeds_tried": list(self.seeds_tried),
            "phase": float(format(self.phase, ".12g")),
            "tol": self.tol,
        }


def projection_cover(f: Poly, pi: LinearProjection) -> PlaneCover:
    if f.ring.n != 3 or pi.k != 1:
        raise ValueError("need a plane curve and a projection to P^1")
    if f.ring.field != QQ:
        raise ValueError("braid monodromy needs a curve over the rationals")
    (fz,), _ = to_projection_coordinates([f], pi)
    return PlaneCover.from_form(fz)


def branch_points(f: Poly, pi: LinearProjection, tol: float = DEFAULT_TOL,
                  separation: float = SEPARATION) -> List[ComplexPoint]:
    """Distinct roots of the fiber discriminant in the affine chart of the target line."""
    disc = hypersurface_branch_discriminant(f, pi, squarefree=True)
    cs = univariate_from_binary(disc)
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) - 1 != disc.total_degree():
        raise NonGenericError("branch point at infinity")
    roots = discriminant_roots(cs, tol) if len(cs) > 1 else np.zeros(0, np.complex128)
    for i in range(len(roots)):
        for j in range(i):
            if abs(roots[i] - roots[j]) < separation:
                raise NonGenericError("branch points closer than the separation threshold")
    roots = sorted(roots, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    return [ComplexPoint.of(z) for z in roots]


def _match(end: np.ndarray, base: np.ndarray, tol: float) -> Tuple[int, ...]:
    perm = []
    scale = max(1.0, float(np.max(np.abs(base)))) if base.size else 1.0
    for y in end:
        d = np.abs(base - y)
        k = int(np.argmin(d))
        if d[k] > 1e4 * tol * scale:
            raise TrackingError("transported fiber does not return to the base fiber")
        perm.append(k)
    if len(set(perm)) != len(perm):
        raise TrackingError("two strands returned to the same root")
    return tuple(perm)


def monodromy_of_cover(cover: PlaneCover, points: Sequence[ComplexPoint], seed: int = 0,
                       tol: float = DEFAULT_TOL, jobs: int = 1) -> MonodromyData:
    """Braid monodromy of ``cover`` around the given branch points (up to 3 reseeds)."""
    tried = []
    last = None
    for r in range(MAX_RESEEDS + 1):
        s = seed + 1009 * r
        tried.append(s)
        try:
            return _monodromy_once(cover, points, s, tol, jobs, tried)
        except (TrackingError, NonGenericError, RootFindingError) as exc:
            last = exc
    raise TrackingError(f"monodromy failed for seeds {tried}: {last}")


def _monodromy_once(cover, points, s, tol, jobs, tried) -> MonodromyData:
    rng = random.Random(s)
    theta = 2 * math.pi * rng.random()
    phase = cmath.exp(1j * theta)
    system = LoopSystem.build([complex(p) for p in points], s)
    ys = cover.fiber(system.base, tol)
    if ys.shape[0] != cover.m:
        raise RootFindingError("base fiber has the wrong cardinality")
    ys = ys[np.argsort((ys * phase).real, kind="stable")]

    def run(pieces):
        end, letters = transport_fiber(cover, pieces, ys, tol, phase)
        return _match(end, ys, tol), letters

    paths = system.paths()
    if jobs > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run, paths))
    else:
        results = [run(p) for p in paths]
    loops = []
    for L, (perm, letters) in zip(system.loops, results):
        word = free_reduce(letters)
        if word_permutation(word, cover.m) != perm:
            raise TrackingError("braid word and tracked permutation disagree")
        kind, letter = classify_word(word)
        loops.append(LoopMonodromy(ComplexPoint.of(L.branch_point), word, perm, kind, letter))
    return MonodromyData(
        m=cover.m,
        base_point=ComplexPoint.of(system.base),
        base_fiber=[ComplexPoint.of(y) for y in ys],
        branch_points=[ComplexPoint.of(L.branch_point) for L in system.loops],
        loops=loops, seed=s, phase=theta, tol=tol, seeds_tried=list(tried),
        cover=cover, system=system,
    )


def braid_monodromy(f: Poly, pi: LinearProjection, seed: int = 0, tol: float = DEFAULT_TOL,
                    jobs: int = 1) -> MonodromyData:
    """Braid monodromy of the projection of the plane curve V(f) to P^1."""
    cover = projection_cover(f, pi)
    pts = branch_points(f, pi, tol)
    return monodromy_of_cover(cover, pts, seed, tol, jobs)


def sphere_return(M: MonodromyData) -> Tuple[Tuple[int, ...], float]:
    """Transport around the concatenation of all loops; permutation and return error."""
    base = np.array([complex(y) for y in M.base_fiber])
    pieces = [p for path in M.system.paths() for p in path]
    phase = cmath.exp(1j * M.phase)
    end, _ = transport_fiber(M.cover, pieces, base, M.tol, phase)
    perm = _match(end, base, M.tol)
    err = float(max(abs(end[k] - base[perm[k]]) for k in range(M.m))) if M.m else 0.0
    return perm, err


# ---------------------------------------------------------------- certificate

@dataclass(frozen=True)
class SurjectivityCertificate:
    status: str
    reason: str
    chain: Tuple[int, ...] = ()

    def __bool__(self):
        return self.status == CERTIFIED


def _hamiltonian_path(m: int, edges) -> Optional[List[int]]:
    adj = {v: set() for v in range(m)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)

    def dfs(path, seen):
        if len(path) == m:
            return path
        for w in sorted(adj[path[-1]]):
            if w not in seen:
                seen.add(w)
                got = dfs(path + [w], seen)
                if got:
                    return got
                seen.discard(w)
        return None

    for v in range(m):
        got = dfs([v], {v})
        if got:
            return got
    return None


def surjectivity_certificate(M: MonodromyData) -> SurjectivityCertificate:
    """Certified when the half-twists generate S_m along a chain of transpositions."""
    m = M.m
    if m <= 1:
        return SurjectivityCertificate(CERTIFIED, "trivial braid group", tuple(range(m)))
    if any(L.kind != HALF_TWIST for L in M.loops):
        return SurjectivityCertificate(INCONCLUSIVE, "some local monodromy is not a half-twist")
    edges = set()
    for L in M.loops:
        if not is_transposition(L.permutation):
            return SurjectivityCertificate(INCONCLUSIVE, "half-twist without transposition image")
        a, b = [s for s, p in enumerate(L.permutation) if s != p]
        edges.add((min(a, b), max(a, b)))
    # transpositions generate S_m iff their graph is connected
    comp = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == v and y not in comp:
                    comp.add(y)
                    stack.append(y)
    if len(comp) != m:
        return SurjectivityCertificate(INCONCLUSIVE, "permutation image is not transitive")
    chain = _hamiltonian_path(m, edges)
    if chain is None:
        return SurjectivityCertificate(INCONCLUSIVE, "no chain of adjacent half-twists")
    return SurjectivityCertificate(CERTIFIED, "transitive transpositions with a chain", tuple(chain))


# ---------------------------------------------------------------- line restriction

def restrict_to_line_and_monodromy(Y, pi: LinearProjection, seed: int = 0,
                                   tol: float = DEFAULT_TOL, jobs: int = 1) -> MonodromyData:
    """Monodromy of Y over a seeded line L of the target, via the plane through L and the center."""
    f = Y.gens[0] if isinstance(Y, ProjectiveVariety) else Y
    if isinstance(Y, ProjectiveVariety) and len(Y.gens) != 1:
        raise ValueError("need a hypersurface")
    R = f.ring
    if pi.N != R.n - 1 or pi.k != pi.N - 1:
        raise ValueError("need a projection from a point of P^(N+1) onto P^N")
    (fz,), _ = to_projection_coordinates([f], pi)
    rng = random.Random(seed * 31 + 7)
    N = pi.k
    q0 = [rng.randint(-50, 50) for _ in range(N + 1)]
    q1 = [rng.randint(-50, 50) for _ in range(N + 1)]
    if all(a * q1[0] == b * q0[0] for a, b in zip(q0, q1)) and all(
            q0[i] * q1[j] == q0[j] * q1[i] for i in range(N + 1) for j in range(N + 1)):
        raise NonGenericError("degenerate line")
    P = coordinate_ring(2, field=R.field)
    u = P.gens
    images = [u[0].scale(q0[i]) + u[1].scale(q1[i]) for i in range(N + 1)] + [u[2]]
    g = fz.compose(images, P)
    ident = LinearProjection(2, 1, ((1, 0, 0), (0, 1, 0)), seed)
    return braid_monodromy(g, ident, seed, tol, jobs)
