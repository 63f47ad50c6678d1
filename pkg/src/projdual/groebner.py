"""Buchberger's algorithm and the ideal operations built on it."""
from __future__ import annotations

import random
from heapq import heapify, heappop, heappush
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactpoly import GF, Poly, Ring, _W as _FIELD, _is_prime, _mpq

__all__ = [
    "BudgetExceeded", "DEFAULT_BUDGET", "GroebnerBasis", "Ideal", "buchberger",
    "normal_form", "eliminate", "saturate", "saturate_by_ideal", "in_radical",
    "radical_contains", "dim_and_degree", "hilbert_numerator", "colength",
    "krull_dimension", "s_polynomial", "is_groebner", "ideal_intersection",
    "poly_gcd", "set_default_budget", "elimination_basis",
]

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    """A Groebner computation hit its pair-reduction limit."""

    def __init__(self, budget: int):
        super().__init__(f"Groebner budget of {budget} pair reductions exceeded")
        self.budget = budget


def set_default_budget(n: int) -> None:
    global DEFAULT_BUDGET
    DEFAULT_BUDGET = int(n)


# ---------------------------------------------------------------------------
# reduction kernels on raw term dicts


def _reduce(terms: Dict[int, object], basis: Sequence[Tuple[int, Dict[int, object]]],
            R: Ring, full: bool = True, cache: Optional[dict] = None) -> Dict[int, object]:
    """Normal form of ``terms`` by monic ``basis`` elements given as (lm, terms).

    ``cache`` remembers a reducer per monomial; it stays valid while the
    basis only grows.
    """
    if not terms or not basis:
        return dict(terms)
    p = R.field.p
    guard = R.GUARD
    work = dict(terms)
    heap = [-m for m in work]
    heapify(heap)
    rem: Dict[int, object] = {}
    get = work.get
    while heap:
        m = -heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        if p:
            # residues are reduced lazily, once per popped term
            c %= p
            if not c:
                continue
        hit = cache.get(m) if cache is not None else None
        for lm, g in ((hit,) if hit is not None else basis):
            if not ((m - lm) & guard):
                if cache is not None and hit is None:
                    cache[m] = (lm, g)
                q = m - lm
                if p:
                    for mg, cg in g.items():
                        if mg == lm:
                            continue
                        k = mg + q
                        v = get(k)
                        if v is None:
                            work[k] = -c * cg
                            heappush(heap, -k)
                        else:
                            work[k] = v - c * cg
                else:
                    for mg, cg in g.items():
                        if mg == lm:
                            continue
                        k = mg + q
                        v = get(k)
                        if v is None:
                            work[k] = -c * cg
                            heappush(heap, -k)
                        else:
                            v = v - c * cg
                            if v:
                                work[k] = v
                            else:
                                del work[k]
                break
        else:
            rem[m] = c
            if not full:
                for k, v in work.items():
                    if p:
                        v %= p
                    if v:
                        rem[k] = v
                return rem
    return rem


def _monic(terms: Dict[int, object], R: Ring) -> Dict[int, object]:
    lm = max(terms)
    c = terms[lm]
    F = R.field
    if c == 1:
        return terms
    inv = F.inv(c)
    p = F.p
    if p:
        return {m: v * inv % p for m, v in terms.items()}
    return {m: v * inv for m, v in terms.items()}


def _spoly(a: Tuple[int, Dict], b: Tuple[int, Dict], lcm: int, R: Ring) -> Dict[int, object]:
    la, fa = a
    lb, fb = b
    qa, qb = lcm - la, lcm - lb
    p = R.field.p
    out = {m + qa: c for m, c in fa.items() if m != la}
    for m, c in fb.items():
        if m == lb:
            continue
        k = m + qb
        v = out.get(k)
        if v is None:
            out[k] = (-c) % p if p else -c
        else:
            v = (v - c) % p if p else v - c
            if v:
                out[k] = v
            else:
                del out[k]
    return out


# ---------------------------------------------------------------------------
# Buchberger


class GroebnerBasis:
    """Reduced Groebner basis: monic, no leading monomial divides another."""

    def __init__(self, ring: Ring, elements: List[Poly]):
        self.ring = ring
        self.elements = elements
        self._red = sorted(((f.lm(), f.terms) for f in elements), key=lambda t: len(t[1]))

    @property
    def order(self) -> str:
        return self.ring.order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def reduce(self, f: Poly) -> Poly:
        if f.ring is not self.ring:
            f = self.ring.convert(f)
        return Poly(self.ring, _reduce(f.terms, self._red, self.ring))

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def leading_exponents(self) -> List[Tuple[int, ...]]:
        R = self.ring
        return [R.exps(f.lm()) for f in self.elements]

    def __repr__(self):
        return f"GroebnerBasis({[str(f) for f in self.elements]})"


def buchberger(gens: Sequence[Poly], ring: Ring | None = None,
               budget: Optional[int] = None, modular: Optional[bool] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens`` in the order of their ring.

    Over QQ the default is the multi-modular route (``modular=False`` forces
    plain rational arithmetic).
    """
    if ring is None:
        nz = [g for g in gens if not g.is_zero()]
        if not nz:
            raise ValueError("empty generator list needs an explicit ring")
        ring = nz[0].ring
    if modular is None:
        modular = MODULAR_DEFAULT
    if modular and not ring.field.p:
        return _modular_buchberger(gens, ring, budget)
    return _buchberger_field(gens, ring, budget)


def _buchberger_field(gens: Sequence[Poly], ring: Ring | None = None,
                      budget: Optional[int] = None) -> GroebnerBasis:
    gens = [g for g in gens if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit ring")
        ring = gens[0].ring
    R = ring
    gens = [R.convert(g) if g.ring is not R else g for g in gens]
    if budget is None:
        budget = DEFAULT_BUDGET
    if not gens:
        return GroebnerBasis(R, [])
    for g in gens:
        if g.is_constant():
            return GroebnerBasis(R, [R.one()])

    polys: List[Tuple[int, Dict]] = []
    exps: List[Tuple[int, ...]] = []
    sugar: List[int] = []
    G: List[int] = []
    B: List[Tuple[int, int, int, int]] = []   # (sugar, lcm, i, j)
    guard = R.GUARD

    def divides(a, b):
        return not ((b - a) & guard)

    def active():
        return sorted(((polys[i][0], polys[i][1]) for i in G), key=lambda t: len(t[1]))

    def update(h: int):
        nonlocal G, B
        lmh = polys[h][0]
        eh = exps[h]
        C = []
        for g in G:
            eg = exps[g]
            le = tuple(max(x, y) for x, y in zip(eh, eg))
            copr = all(x == 0 or y == 0 for x, y in zip(eh, eg))
            d = sum(le)
            sg = max(sugar[h] + d - sum(eh), sugar[g] + d - sum(eg))
            C.append((R.mono(le), g, copr, sg))
        D = []
        while C:
            l1, g1, copr, d1 = C.pop()
            if copr or not (any(divides(l2, l1) for l2, *_ in C)
                            or any(divides(l2, l1) for l2, *_ in D)):
                D.append((l1, g1, copr, d1))
        E = [(d, l, g, h) for l, g, copr, d in D if not copr]
        newB = []
        for d, l, a, b in B:
            if divides(lmh, l):
                la = R.mono(tuple(max(x, y) for x, y in zip(exps[a], eh)))
                lb = R.mono(tuple(max(x, y) for x, y in zip(exps[b], eh)))
                if la != l and lb != l:
                    continue
            newB.append((d, l, a, b))
        newB.extend(E)
        B = newB
        G = [g for g in G if not divides(lmh, polys[g][0])] + [h]

    def add(terms, sg):
        terms = _monic(terms, R)
        lm = max(terms)
        polys.append((lm, terms))
        exps.append(R.exps(lm))
        sugar.append(max(sg, R.mdeg(lm)))
        update(len(polys) - 1)

    for g in sorted(gens, key=lambda f: (f.total_degree(), len(f.terms))):
        h = _reduce(g.terms, active(), R)
        if h:
            if list(h) == [0]:
                return GroebnerBasis(R, [R.one()])
            add(h, g.total_degree())

    steps = 0
    red = active()
    cache: dict = {}
    while B:
        B.sort()
        d, l, i, j = B.pop(0)
        steps += 1
        if steps > budget:
            raise BudgetExceeded(budget)
        s = _spoly(polys[i], polys[j], l, R)
        if not s:
            continue
        h = _reduce(s, red, R, cache=cache)
        if h:
            if list(h) == [0]:
                return GroebnerBasis(R, [R.one()])
            add(h, d)
            red = active()

    # tail-reduce to the unique reduced basis
    lead = [polys[i] for i in G]
    final = []
    for k, (lm, f) in enumerate(lead):
        others = [t for kk, t in enumerate(lead) if kk != k]
        others.sort(key=lambda t: len(t[1]))
        tail = {m: c for m, c in f.items() if m != lm}
        r = _reduce(tail, others, R)
        r[lm] = f[lm]
        final.append(Poly(R, _monic(r, R)))
    final.sort(key=lambda f: f.lm())
    return GroebnerBasis(R, final)


# ---------------------------------------------------------------------------
# multi-modular lifting over QQ

MODULAR_DEFAULT = True
MAX_PRIMES = 400


def _prime_stream():
    n = (1 << 31) - 1
    while True:
        if _is_prime(n):
            yield n
        n -= 2


def _ratrec(a: int, M: int):
    """Rational r/s congruent to a mod M with |r|, s below sqrt(M/2), or None."""
    bound = isqrt(M // 2)
    r0, r1 = M, a % M
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return _mpq(r1, s1)


def _block_mask(R: Ring, nd: int) -> int:
    """Bit mask of the exponent fields of the first ``nd`` variables."""
    return sum(((1 << _FIELD) - 1) << (_FIELD * i) for i in range(nd))


def elimination_basis(gens: Sequence[Poly], E: Ring, nd: int, budget=None) -> List[Poly]:
    """Reduced basis elements free of the first ``nd`` variables of block ring E."""
    mask = _block_mask(E, nd)
    free = lambda g: not any(m & mask for m in g.terms)
    if E.field.p or not MODULAR_DEFAULT:
        return [g for g in _buchberger_field(gens, E, budget).elements if free(g)]
    return _modular_buchberger(gens, E, budget, keep=free).elements


def _modular_buchberger(gens: Sequence[Poly], R: Ring, budget: Optional[int],
                        keep=None) -> GroebnerBasis:
    """Groebner basis over QQ from images modulo many primes.

    Primes are grouped by the leading monomials of their bases and the
    largest group wins, which discards unlucky primes.  Within a group the
    coefficients are combined by CRT and rationally reconstructed; a
    candidate is accepted once it also matches a prime that was not used to
    build it, and every generator of the input reduces to zero by it.

    With ``keep`` only the selected basis elements are lifted (the final
    membership check then does not apply).
    """
    gens = [R.convert(g) if g.ring is not R else g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(R, [])
    if any(g.is_constant() for g in gens):
        return GroebnerBasis(R, [R.one()])
    groups: Dict[tuple, list] = {}
    candidate = None
    for count, p in enumerate(_prime_stream()):
        if count >= MAX_PRIMES:
            break
        Rp = R.with_field(GF(p))
        try:
            gp = [Rp.convert(g) for g in gens]
        except ZeroDivisionError:
            continue
        if any(gq.lm() != g.lm() for gq, g in zip(gp, gens)):
            continue
        Gp = _buchberger_field(gp, Rp, budget)
        sig = tuple(e.lm() for e in Gp.elements)
        els = Gp.elements if keep is None else [e for e in Gp.elements if keep(e)]
        if candidate is not None and candidate[0] == sig:
            cand_polys = candidate[1]
            if all(Rp.convert(c) == e for c, e in zip(cand_polys, els)):
                G = GroebnerBasis(R, cand_polys)
                if keep is not None or all(G.reduce(g).is_zero() for g in gens):
                    return G
        state = groups.get(sig)
        if state is None:
            groups[sig] = state = [p, [dict(e.terms) for e in els], 1]
        else:
            M, res, _ = state
            inv = pow(M, -1, p)
            for d, e in zip(res, els):
                for m in set(d) | set(e.terms):
                    a = d.get(m, 0)
                    b = e.terms.get(m, 0)
                    d[m] = a + M * ((b - a) * inv % p)
            state[0] = M * p
            state[2] += 1
        best = max(groups.values(), key=lambda st: st[2])
        if best is not state:
            continue
        M, res, _ = state
        polys = []
        for d in res:
            terms = {}
            for m, a in d.items():
                q = _ratrec(a, M)
                if q is None:
                    break
                if q != 0:
                    terms[m] = q
            else:
                polys.append(Poly(R, terms))
                continue
            break
        else:
            candidate = (sig, polys)
    G = _buchberger_field(gens, R, budget)
    return G if keep is None else GroebnerBasis(R, [e for e in G.elements if keep(e)])


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    return G.reduce(f)


def s_polynomial(f: Poly, g: Poly) -> Poly:
    R = f.ring
    l = R.lcm(f.lm(), g.lm())
    fm, gm = f.monic(), g.monic()
    return Poly(R, _spoly((fm.lm(), fm.terms), (gm.lm(), gm.terms), l, R))


def is_groebner(G: GroebnerBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    els = G.elements
    for a in range(len(els)):
        for b in range(a + 1, len(els)):
            if not G.reduce(s_polynomial(els[a], els[b])).is_zero():
                return False
    return True


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Finitely generated ideal; the reduced basis is computed once and cached."""

    def __init__(self, gens: Iterable[Poly], ring: Ring | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("empty ideal needs a ring")
            ring = gens[0].ring
        self.ring = ring
        self.gens = [ring.convert(g) if g.ring is not ring else g for g in gens if not g.is_zero()]
        self._gb: Optional[GroebnerBasis] = None

    def groebner(self, budget: Optional[int] = None) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.gens, self.ring, budget)
        return self._gb

    def is_unit(self, budget=None) -> bool:
        return self.groebner(budget).is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, f: Poly, budget=None) -> bool:
        return self.groebner(budget).contains(f)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other: "Ideal | Sequence[Poly]") -> "Ideal":
        extra = other.gens if isinstance(other, Ideal) else list(other)
        return Ideal(self.gens + [self.ring.convert(g) for g in extra], self.ring)

    def dim_and_degree(self, budget=None) -> Tuple[int, int]:
        return dim_and_degree(self, budget)

    def basis_polys(self, budget=None) -> List[Poly]:
        return list(self.groebner(budget).elements)

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"


def _as_ideal(I) -> Ideal:
    return I if isinstance(I, Ideal) else Ideal(I)


def eliminate(I: Ideal, drop: Sequence, budget=None) -> Ideal:
    """Generators of ``I`` intersected with the subring of the kept variables.

    ``drop`` holds variable indices or names.  The result lives in a ring on
    the kept variables (same order of names, degrevlex).
    """
    I = _as_ideal(I)
    R = I.ring
    drop_idx = sorted({R.index[v] if isinstance(v, str) else int(v) for v in drop})
    keep = [i for i in range(R.n) if i not in drop_idx]
    kept_ring = Ring([R.names[i] for i in keep], R.field)
    if not drop_idx:
        return Ideal(I.gens, R) if R.order == "degrevlex" else Ideal(
            [kept_ring.convert(g) for g in I.gens], kept_ring)
    names = [R.names[i] for i in drop_idx] + [R.names[i] for i in keep]
    if not keep:
        unit = I.is_unit(budget)
        return Ideal([kept_ring.one()] if unit else [], kept_ring)
    E = Ring(names, R.field, "block", len(drop_idx))
    els = elimination_basis([E.convert(g) for g in I.gens], E, len(drop_idx), budget)
    return _ideal_with_basis([kept_ring.convert(g) for g in els], kept_ring)


def _ideal_with_basis(els: List[Poly], R: Ring) -> Ideal:
    """Ideal whose generators are already its reduced degrevlex basis."""
    J = Ideal(els, R)
    if R.order == "degrevlex":
        J._gb = GroebnerBasis(R, sorted(J.gens, key=lambda f: f.lm()))
    return J


def _with_extra_var(R: Ring, name: str = "_t") -> Ring:
    while name in R.index:
        name = "_" + name
    return Ring((name,) + R.names, R.field, "block", 1)


def saturate(I: Ideal, f: Poly, budget=None) -> Ideal:
    """``I : f^oo`` by the Rabinowitsch trick."""
    I = _as_ideal(I)
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    R = I.ring
    E = _with_extra_var(R)
    t = E.gens[0]
    gens = [E.convert(g) for g in I.gens] + [E.one() - t * E.convert(f)]
    return _ideal_with_basis([R.convert(g) for g in elimination_basis(gens, E, 1, budget)], R)


def saturate_by_ideal(I: Ideal, J: Sequence[Poly], seed: int = 0, budget=None) -> Ideal:
    """Saturation by a random combination of the generators of ``J``.

    Agrees with ``I : J^oo`` up to radical for a general combination, which is
    all the set-theoretic callers need.
    """
    I = _as_ideal(I)
    J = [g for g in J if not g.is_zero()]
    if not J:
        return Ideal([I.ring.one()], I.ring)
    rng = random.Random(seed)
    R = I.ring
    # keep the combination homogeneous when the generators share a degree
    degs = {g.total_degree() for g in J}
    if len(degs) == 1:
        comb = R.zero()
        for g in J:
            comb = comb + g.scale(rng.randint(1, 50) * rng.choice((-1, 1)))
        if comb.is_zero():
            comb = J[0]
        return saturate(I, comb, budget)
    out = I
    for g in J:
        out = saturate(out, g, budget)
    return out


def in_radical(f: Poly, I: Ideal, budget=None) -> bool:
    """Whether ``f`` vanishes on the affine zero set of ``I``."""
    I = _as_ideal(I)
    if f.is_zero():
        return True
    R = I.ring
    E = _with_extra_var(R)
    t = E.gens[0]
    gens = [E.convert(g) for g in I.gens] + [E.one() - t * E.convert(f)]
    return buchberger(gens, E, budget).is_unit()


def radical_contains(I: Ideal, J: Ideal, budget=None) -> bool:
    """``V(I)`` is contained in ``V(J)``: every generator of J has a power in I."""
    return all(in_radical(g, I, budget) for g in J.gens)


def ideal_intersection(I: Ideal, J: Ideal, budget=None) -> Ideal:
    R = I.ring
    E = _with_extra_var(R, "_u")
    t = E.gens[0]
    gens = [t * E.convert(g) for g in I.gens] + [(E.one() - t) * E.convert(g) for g in J.gens]
    return _ideal_with_basis([R.convert(g) for g in elimination_basis(gens, E, 1, budget)], R)


def poly_gcd(f: Poly, g: Poly, budget=None) -> Poly:
    """GCD via ``f*g / lcm`` with the lcm from an ideal intersection."""
    R = f.ring
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    L = ideal_intersection(Ideal([f]), Ideal([g]), budget)
    gens = [h for h in L.gens if not h.is_zero()]
    lcm = min(gens, key=lambda h: (h.total_degree(), len(h)))
    return (f * g).exact_div(lcm).monic()


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimalize(gens: Iterable[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    gs = sorted(set(gens), key=sum)
    out: List[Tuple[int, ...]] = []
    for g in gs:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _pmul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: List[int], b: List[int]) -> List[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(gens: Sequence[Tuple[int, ...]], n: int) -> List[int]:
    """Numerator K(t) of the Hilbert series K(t)/(1-t)^n of k[x]/(gens)."""
    memo: Dict[frozenset, List[int]] = {}

    def rec(G: List[Tuple[int, ...]]) -> List[int]:
        if not G:
            return [1]
        if any(sum(g) == 0 for g in G):
            return [0]
        key = frozenset(G)
        if key in memo:
            return memo[key]
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in G]
        counts = [0] * n
        for s in supports:
            for i in s:
                counts[i] += 1
        if max(counts) <= 1:
            out = [1]
            for g in G:
                d = sum(g)
                out = _pmul(out, [1] + [0] * (d - 1) + [-1])
            memo[key] = out
            return out
        j = max(range(n), key=lambda i: counts[i])
        # the pivot x_j^e must lie outside the ideal
        e = min(g[j] for g in G if g[j])
        if any(g[j] == e and sum(g) == e for g in G):
            e -= 1
        piv = tuple(e if i == j else 0 for i in range(n))
        plus = _minimalize(list(G) + [piv])
        colon = _minimalize(tuple(max(0, a - b) for a, b in zip(g, piv)) for g in G)
        out = _padd(rec(plus), [0] * e + rec(colon))
        memo[key] = out
        return out

    res = rec(_minimalize(gens))
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _dim_deg_from_numerator(K: List[int], n: int) -> Tuple[int, int]:
    """Affine dimension and multiplicity from the Hilbert numerator."""
    if not any(K):
        return -1, 0
    K = list(K)
    r = 0
    while sum(K) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in K[:-1]:
            acc += c
            q.append(acc)
        K = q
        r += 1
    return n - r, sum(K)


def _gb_of(I) -> GroebnerBasis:
    if isinstance(I, GroebnerBasis):
        return I
    return _as_ideal(I).groebner()


def dim_and_degree(I, budget=None) -> Tuple[int, int]:
    """Projective dimension and degree of a homogeneous proper ideal."""
    if isinstance(I, Ideal):
        if not I.is_homogeneous():
            raise ValueError("dim_and_degree needs a homogeneous ideal")
        G = I.groebner(budget)
    else:
        G = I
        if not all(g.is_homogeneous() for g in G.elements):
            raise ValueError("dim_and_degree needs a homogeneous ideal")
    if G.is_unit():
        raise ValueError("unit ideal has no dimension")
    R = G.ring
    K = hilbert_numerator(G.leading_exponents(), R.n)
    d, deg = _dim_deg_from_numerator(K, R.n)
    return d - 1, deg


def krull_dimension(I, budget=None) -> int:
    """Affine dimension of ``V(I)``; -1 for the unit ideal."""
    G = _as_ideal(I).groebner(budget) if not isinstance(I, GroebnerBasis) else I
    if G.is_unit():
        return -1
    R = G.ring
    d, _ = _dim_deg_from_numerator(hilbert_numerator(G.leading_exponents(), R.n), R.n)
    return d


def colength(I, budget=None) -> int:
    """Number of standard monomials of a zero-dimensional ideal."""
    G = _as_ideal(I).groebner(budget) if not isinstance(I, GroebnerBasis) else I
    R = G.ring
    if G.is_unit():
        return 0
    lead = G.leading_exponents()
    n = R.n
    # every variable needs a pure power among the leads
    for i in range(n):
        if not any(e[i] > 0 and sum(e) == e[i] for e in lead):
            raise ValueError("ideal is not zero-dimensional")
    bounds = [min(e[i] for e in lead if e[i] > 0 and sum(e) == e[i]) for i in range(n)]
    count = 0

    def walk(i, prefix):
        nonlocal count
        if i == n:
            count += 1
            return
        for k in range(bounds[i]):
            cand = prefix + (k,)
            # prune: a partial vector already divisible (padding zeros)
            full = cand + (0,) * (n - i - 1)
            if any(all(a <= b for a, b in zip(e, full)) for e in lead):
                break
            walk(i + 1, cand)

    walk(0, ())
    return count
