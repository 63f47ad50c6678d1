"""Projective varieties, Jacobians, linear sections and seeded linear data."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactpoly import GF, PRIME_A, QQ, Poly, Ring, det_bareiss
from .groebner import Ideal, colength, dim_and_degree, eliminate, krull_dimension
from . import linalg

COEFF_RANGE = 50
MAX_RESEEDS = 3


class NonGenericError(RuntimeError):
    """A seeded choice landed on a special position too many times."""


def coordinate_ring(N: int, prefix: str = "x", field=QQ) -> Ring:
    return Ring([f"{prefix}{i}" for i in range(N + 1)], field)


class ProjectiveVariety:
    """A subvariety of P^N given by a homogeneous ideal."""

    def __init__(self, ideal, label: str = "", tags: Sequence[str] = ()):
        if not isinstance(ideal, Ideal):
            ideal = Ideal(ideal)
        if not ideal.is_homogeneous():
            raise ValueError("defining ideal must be homogeneous")
        self.ideal = ideal
        self.label = label
        self.tags = frozenset(tags)
        self._dd: Optional[Tuple[int, int]] = None

    @classmethod
    def from_strings(cls, N: int, gens: Sequence[str], prefix: str = "x", field=QQ, **kw):
        R = coordinate_ring(N, prefix, field)
        return cls(Ideal([R.parse(g) for g in gens], R), **kw)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    @property
    def N(self) -> int:
        return self.ring.n - 1

    @property
    def gens(self) -> List[Poly]:
        return self.ideal.gens

    @property
    def prefix(self) -> str:
        return self.ring.names[0].rstrip("0123456789")

    def dim_and_degree(self) -> Tuple[int, int]:
        if self._dd is None:
            if self.ideal.is_unit() or krull_dimension(self.ideal) <= 0:
                self._dd = (-1, 0)
            else:
                self._dd = dim_and_degree(self.ideal)
        return self._dd

    @property
    def dim(self) -> int:
        return self.dim_and_degree()[0]

    @property
    def degree(self) -> int:
        return self.dim_and_degree()[1]

    @property
    def codim(self) -> int:
        return self.N - self.dim

    def is_empty(self) -> bool:
        return self.dim < 0

    def with_field(self, F) -> "ProjectiveVariety":
        R = self.ring.with_field(F)
        return ProjectiveVariety(Ideal([R.convert(g) for g in self.gens], R), self.label, self.tags)

    def renamed(self, prefix: str) -> "ProjectiveVariety":
        """Same ideal in coordinates ``prefix0..prefixN``."""
        R = coordinate_ring(self.N, prefix, self.ring.field)
        return ProjectiveVariety(Ideal([R.convert(g, list(range(R.n))) for g in self.gens], R),
                                 self.label, self.tags)

    def __repr__(self):
        name = f"{self.label}: " if self.label else ""
        return f"ProjectiveVariety({name}P^{self.N}, {[str(g) for g in self.gens]})"


def empty_variety(N: int, prefix: str = "x", field=QQ) -> ProjectiveVariety:
    R = coordinate_ring(N, prefix, field)
    return ProjectiveVariety(Ideal([R.one()], R), label="empty")


# ---------------------------------------------------------------- linear data

@dataclass(frozen=True)
class LinearSubspace:
    """Common zero set of independent linear forms (one coefficient row each)."""

    N: int
    equations: Tuple[Tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.equations)
        if any(len(r) != self.N + 1 for r in rows):
            raise ValueError("equation length must be N+1")
        if rows and linalg.rank(rows) != len(rows):
            raise ValueError("linear forms are dependent")
        object.__setattr__(self, "equations", rows)

    @property
    def codim(self) -> int:
        return len(self.equations)

    @property
    def dim(self) -> int:
        return self.N - self.codim

    def forms(self, R: Ring) -> List[Poly]:
        return [linear_form(row, R) for row in self.equations]

    def basis(self) -> List[List[Fraction]]:
        """Spanning vectors of the underlying vector space."""
        return linalg.nullspace(list(self.equations), self.N + 1)


@dataclass(frozen=True)
class LinearProjection:
    """x -> [l_0(x) : ... : l_k(x)] with rows of ``matrix`` as the forms."""

    N: int
    k: int
    matrix: Tuple[Tuple[Fraction, ...], ...]
    seed: Optional[int] = None

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.matrix)
        if len(rows) != self.k + 1 or any(len(r) != self.N + 1 for r in rows):
            raise ValueError("projection matrix must be (k+1) x (N+1)")
        if linalg.rank(rows) != self.k + 1:
            raise ValueError("projection forms are dependent")
        object.__setattr__(self, "matrix", rows)

    def forms(self, R: Ring) -> List[Poly]:
        return [linear_form(row, R) for row in self.matrix]

    def center(self) -> LinearSubspace:
        return LinearSubspace(self.N, self.matrix)

    def then(self, other: "LinearProjection") -> "LinearProjection":
        """The composite ``other o self``."""
        if other.N != self.k:
            raise ValueError("projections do not compose")
        M = [[sum(other.matrix[i][l] * self.matrix[l][j] for l in range(self.k + 1))
              for j in range(self.N + 1)] for i in range(other.k + 1)]
        return LinearProjection(self.N, other.k, M, None)

    def coordinate_change(self) -> Tuple[list, list]:
        """An invertible M whose first k+1 rows are the forms, and its inverse."""
        M = linalg.complete_to_basis(self.matrix, self.N + 1)
        return M, linalg.inverse(M)

    def as_json(self) -> dict:
        return {"N": self.N, "k": self.k, "seed": self.seed,
                "forms": [[str(v) for v in r] for r in self.matrix]}


def linear_form(row: Sequence, R: Ring) -> Poly:
    F = R.field
    out = R.zero()
    for i, c in enumerate(row):
        if c:
            out = out + R.var(i).scale(F(c))
    return out


def _random_rows(rng: random.Random, rows: int, cols: int) -> List[List[int]]:
    return [[rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(cols)] for _ in range(rows)]


def random_projection(N: int, k: int, seed: int) -> LinearProjection:
    if not 0 <= k <= N:
        raise ValueError("need 0 <= k <= N")
    rng = random.Random(seed)
    for _ in range(100):
        M = _random_rows(rng, k + 1, N + 1)
        if linalg.rank(M) == k + 1:
            return LinearProjection(N, k, M, seed)
    raise NonGenericError("could not draw independent forms")  # pragma: no cover


def random_subspace(N: int, codim: int, seed: int) -> LinearSubspace:
    if not 0 <= codim <= N + 1:
        raise ValueError("codimension out of range")
    rng = random.Random(seed * 7919 + 17)
    for _ in range(100):
        M = _random_rows(rng, codim, N + 1)
        if not M or linalg.rank(M) == codim:
            return LinearSubspace(N, M)
    raise NonGenericError("could not draw independent forms")  # pragma: no cover


# ---------------------------------------------------------------- jacobians

def jacobian_matrix(gens: Sequence[Poly]) -> List[List[Poly]]:
    return [[g.diff(i) for i in range(g.ring.n)] for g in gens]


def minors(M: Sequence[Sequence[Poly]], size: int) -> List[Poly]:
    """All nonzero size x size minors, deduplicated up to sign."""
    if size == 0:
        return [M[0][0].ring.one()] if M and M[0] else []
    rows, cols = len(M), len(M[0]) if M else 0
    out, seen = [], set()
    for r in itertools.combinations(range(rows), size):
        for c in itertools.combinations(range(cols), size):
            d = det_bareiss([[M[i][j] for j in c] for i in r])
            if d.is_zero():
                continue
            key = d.monic()
            if key not in seen:
                seen.add(key)
                out.append(d)
    return out


def jacobian_ideal(X: ProjectiveVariety) -> Ideal:
    """X's ideal plus the codim-sized Jacobian minors; cuts out Sing X."""
    c = X.codim
    return Ideal(X.gens + minors(jacobian_matrix(X.gens), c), X.ring)


def singular_minors(X: ProjectiveVariety) -> List[Poly]:
    return minors(jacobian_matrix(X.gens), X.codim)


def is_smooth(X: ProjectiveVariety) -> bool:
    if X.is_empty():
        return True
    J = jacobian_ideal(X)
    return J.is_unit() or krull_dimension(J) <= 0


# ---------------------------------------------------------------- sections

def linear_section(X: ProjectiveVariety, L: LinearSubspace) -> ProjectiveVariety:
    return ProjectiveVariety(X.ideal + L.forms(X.ring), label=f"{X.label} section".strip())


def intrinsic_section(X: ProjectiveVariety, L: LinearSubspace) -> ProjectiveVariety:
    """X meet L written in coordinates u_0..u_dimL on L (x = sum u_j b_j)."""
    basis = L.basis()
    T = coordinate_ring(len(basis) - 1, X.prefix, X.ring.field)
    F = T.field
    images = []
    for i in range(X.N + 1):
        img = T.zero()
        for j, b in enumerate(basis):
            if b[i]:
                img = img + T.var(j).scale(F(b[i]))
        images.append(img)
    gens = [g.compose(images, T) for g in X.gens]
    gens = [g for g in gens if not g.is_zero()]
    return ProjectiveVariety(Ideal(gens, T), label=f"{X.label} section".strip())


def degree_by_section_count(X: ProjectiveVariety, seed: int, field=None) -> int:
    """Points of X meet a random complementary linear space, counted with multiplicity.

    Works over a prime field; the affine chart h = 1 for a random linear h
    keeps every point at finite distance.
    """
    F = field or GF(PRIME_A)
    Xp = X.with_field(F) if X.ring.field != F else X
    n = Xp.dim
    if n < 0:
        return 0
    R = Xp.ring
    for attempt in range(MAX_RESEEDS + 1):
        s = seed + 1000 * attempt
        L = random_subspace(Xp.N, n, s)
        rng = random.Random(s + 1)
        h = linear_form([rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(R.n)], R)
        I = Ideal(Xp.gens + L.forms(R) + [h - R.one()], R)
        try:
            return colength(I)
        except ValueError:
            continue
    raise NonGenericError("no zero-dimensional section found")


def image_ideal(X: ProjectiveVariety, pi: LinearProjection, prefix: str = "x") -> ProjectiveVariety:
    """Closure of pi(X) in P^k by elimination in adapted coordinates."""
    Z, _ = to_projection_coordinates(X.gens, pi)
    R = Z[0].ring if Z else X.ring
    I = eliminate(Ideal(Z, R), list(range(pi.k + 1, pi.N + 1)))
    T = coordinate_ring(pi.k, prefix, R.field)
    return ProjectiveVariety(Ideal([T.convert(g, list(range(pi.k + 1))) for g in I.gens], T))


def to_projection_coordinates(gens: Sequence[Poly], pi: LinearProjection):
    """Rewrite gens in z = M x, where the first k+1 z's are pi's forms.

    Returns the rewritten generators (same ring) and the inverse substitution
    images x_i(z).
    """
    R = gens[0].ring
    F = R.field
    M, Minv = pi.coordinate_change()
    x_of_z = [linear_form([F(v) for v in Minv[i]], R) for i in range(R.n)]
    return [g.compose(x_of_z, R) for g in gens], M
