"""Exact multivariate polynomials over QQ or a prime field.

A monomial is stored as one Python integer that packs two linear functions of
the exponent vector: a high part that realises the monomial order as an integer
key, and a low part holding one bit field per variable.  Because both parts are
linear in the exponents, multiplying monomials is integer addition, comparing
them in the active order is integer comparison, and divisibility is a single
masked subtraction.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 ships in the dev image
    _mpq = Fraction

__all__ = [
    "QQ", "GF", "PRIME_A", "PRIME_B", "RationalField", "PrimeField",
    "Ring", "Poly", "PolySyntaxError", "ring", "parse_poly",
    "partial_derivative", "resultant_univariate", "sylvester_matrix",
    "det_bareiss", "univariate_coeffs", "poly_from_univariate",
    "upoly_gcd", "upoly_squarefree", "upoly_derivative",
]

# 31-bit primes for modular runs; two distinct ones for cross-checks
PRIME_A = 2147483647
PRIME_B = 2147483629


class RationalField:
    p = 0
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, str):
            return _mpq(Fraction(value))
        if isinstance(value, Fraction):
            return _mpq(value.numerator, value.denominator)
        return _mpq(value)

    zero = property(lambda self: _mpq(0))
    one = property(lambda self: _mpq(1))

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / _mpq(a)

    def to_fraction(self, a) -> Fraction:
        a = _mpq(a)
        return Fraction(int(a.numerator), int(a.denominator))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, value):
        p = self.p
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, (Fraction, type(_mpq(1)))):
            num, den = int(value.numerator), int(value.denominator)
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot coerce {value!r} into {self.name}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def to_fraction(self, a) -> Fraction:
        return Fraction(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


def _is_prime(n: int) -> bool:
    if n < 4:
        return n >= 2
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# rings and monomial encoding

_W = 12                      # bits per exponent field
_FMASK = (1 << _W) - 1
MAX_DEGREE = (1 << (_W - 1)) - 1
_B = 1 << 13                 # base of the balanced digits of the order key


def _degrevlex_weights(n: int) -> List[int]:
    # digits, most significant first: deg, -e[n-1], ..., -e[1]
    w = []
    for i in range(n):
        k = _B ** (n - 1)
        if i >= 1:
            k -= _B ** (i - 1)
        w.append(k)
    return w


def _lex_weights(n: int) -> List[int]:
    return [_B ** (n - 1 - i) for i in range(n)]


class Ring:
    """Polynomial ring context: variable names, coefficient field, monomial order.

    ``order`` is ``"degrevlex"``, ``"lex"`` or ``"block"``; the block order
    compares the first ``block`` variables by degrevlex first and breaks ties
    with degrevlex on the rest, so it eliminates the first block.
    """

    def __new__(cls, names, field=QQ, order="degrevlex", block=0):
        return _make_ring(tuple(names), field, order, int(block))

    def _init(self, names, field, order, block):
        n = len(names)
        if len(set(names)) != n:
            raise ValueError("duplicate variable names")
        self.names = names
        self.n = n
        self.field = field
        self.order = order
        self.block = block
        self.index = {v: i for i, v in enumerate(names)}
        self._S = _W * n
        self.LOW = (1 << self._S) - 1
        self.GUARD = sum(1 << (_W * i + _W - 1) for i in range(n))
        if order == "degrevlex":
            kw = _degrevlex_weights(n)
        elif order == "lex":
            kw = _lex_weights(n)
        elif order == "block":
            if not 0 < block < n:
                raise ValueError("block order needs 0 < block < n")
            k1 = _degrevlex_weights(block)
            k2 = _degrevlex_weights(n - block)
            shift = _B ** (n - block)
            kw = [k * shift for k in k1] + k2
        else:
            raise ValueError(f"unknown monomial order {order!r}")
        self._key = kw
        self.wt = [(kw[i] << self._S) + (1 << (_W * i)) for i in range(n)]
        self.gens = tuple(self.var(i) for i in range(n))

    # monomials -------------------------------------------------------------
    def mono(self, exps: Sequence[int]) -> int:
        if len(exps) != self.n:
            raise ValueError("exponent vector length mismatch")
        if sum(exps) > MAX_DEGREE or min(exps, default=0) < 0:
            raise OverflowError("exponent out of range")
        m = 0
        for e, w in zip(exps, self.wt):
            if e:
                m += e * w
        return m

    def exps(self, m: int) -> Tuple[int, ...]:
        P = m & self.LOW
        out = []
        for _ in range(self.n):
            out.append(P & _FMASK)
            P >>= _W
        return tuple(out)

    def mdeg(self, m: int) -> int:
        P = m & self.LOW
        s = 0
        while P:
            s += P & _FMASK
            P >>= _W
        return s

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.GUARD)

    def lcm(self, a: int, b: int) -> int:
        return self.mono([max(x, y) for x, y in zip(self.exps(a), self.exps(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.exps(a), self.exps(b)))

    # construction ----------------------------------------------------------
    def var(self, i) -> "Poly":
        if isinstance(i, str):
            i = self.index[i]
        return Poly(self, {self.wt[i]: self.field.one})

    def const(self, c) -> "Poly":
        c = self.field(c)
        return Poly(self, {0: c} if c != 0 else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def from_dict(self, d: Mapping[Tuple[int, ...], object]) -> "Poly":
        F = self.field
        terms = {}
        for e, c in d.items():
            c = F(c)
            if c != 0:
                m = self.mono(e)
                c = terms.get(m, F.zero) + c
                if F.p:
                    c %= F.p
                if c != 0:
                    terms[m] = c
                else:
                    terms.pop(m, None)
        return Poly(self, terms)

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def with_order(self, order: str, block: int = 0) -> "Ring":
        return Ring(self.names, self.field, order, block)

    def with_field(self, field) -> "Ring":
        return Ring(self.names, field, self.order, self.block)

    def with_names(self, names) -> "Ring":
        return Ring(names, self.field, "degrevlex", 0)

    def convert(self, f: "Poly", mapping: Sequence[int] | None = None) -> "Poly":
        """Re-encode ``f`` into this ring.

        Without ``mapping`` variables are matched by name.  ``mapping[i]`` is
        the index in this ring of source variable ``i``.
        """
        src = f.ring
        if src is self:
            return f
        if mapping is None:
            mapping = [self.index.get(v) for v in src.names]
        F = self.field
        conv = _converter(src.field, F)
        terms = {}
        for m, c in f.terms.items():
            e = src.exps(m)
            k = 0
            for i, ei in enumerate(e):
                if ei:
                    j = mapping[i]
                    if j is None:
                        raise ValueError(f"variable {src.names[i]!r} missing from target ring")
                    k += ei * self.wt[j]
            c = conv(c)
            if c != 0:
                terms[k] = c
        return Poly(self, terms)

    def __repr__(self):
        extra = f", block={self.block}" if self.order == "block" else ""
        return f"Ring({','.join(self.names)}; {self.field!r}; {self.order}{extra})"

    def __reduce__(self):
        return (Ring, (self.names, self.field, self.order, self.block))


@lru_cache(maxsize=None)
def _make_ring(names, field, order, block):
    r = object.__new__(Ring)
    r._init(names, field, order, block)
    return r


def _converter(src, dst):
    if src == dst:
        return lambda c: c
    if dst.p and not src.p:
        return dst
    if not dst.p and src.p:
        # lift residues to integers in the symmetric range
        p = src.p
        return lambda c: _mpq(c if c <= p // 2 else c - p)
    raise ValueError(f"cannot map coefficients from {src!r} to {dst!r}")


def ring(names, field=QQ, order="degrevlex", block=0):
    """Build a ring and return ``(R, *generators)``."""
    if isinstance(names, str):
        names = [v.strip() for v in re.split(r"[,\s]+", names) if v.strip()]
    R = Ring(names, field, order, block)
    return (R,) + R.gens


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Dict[int, object]):
        self.ring = ring
        self.terms = terms

    # basic queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lm(self) -> int:
        return max(self.terms)

    def lc(self):
        return self.terms[max(self.terms)]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        R = self.ring
        return max(R.mdeg(m) for m in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        R = self.ring
        return max(R.exps(m)[i] for m in self.terms)

    def is_homogeneous(self) -> bool:
        R = self.ring
        return len({R.mdeg(m) for m in self.terms}) <= 1

    def is_constant(self) -> bool:
        return not self.terms or list(self.terms) == [0]

    def support(self) -> List[int]:
        """Indices of variables that occur."""
        R = self.ring
        seen = [False] * R.n
        for m in self.terms:
            for i, e in enumerate(R.exps(m)):
                if e:
                    seen[i] = True
        return [i for i, s in enumerate(seen) if s]

    def as_dict(self) -> Dict[Tuple[int, ...], object]:
        R = self.ring
        return {R.exps(m): c for m, c in self.terms.items()}

    def coeffs(self) -> list:
        return list(self.terms.values())

    # arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring:
                raise ValueError("ring mismatch")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.field.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m)
            if v is None:
                t[m] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    t[m] = v
                else:
                    del t[m]
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return Poly(self.ring, {m: p - c for m, c in self.terms.items()})
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Poly":
        F = self.ring.field
        c = F(c) if not isinstance(c, int) or not F.p else c % F.p
        if c == 0:
            return self.ring.zero()
        p = F.p
        if p:
            return Poly(self.ring, {m: v * c % p for m, v in self.terms.items()})
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: int, c) -> "Poly":
        p = self.ring.field.p
        if p:
            return Poly(self.ring, {m + mono: v * c % p for m, v in self.terms.items()})
        return Poly(self.ring, {m + mono: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        if self.total_degree() + other.total_degree() > MAX_DEGREE:
            raise OverflowError("degree exceeds exponent field width")
        p = self.ring.field.p
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t: Dict[int, object] = {}
        get = t.get
        if p:
            for mb, cb in b.items():
                for ma, ca in a.items():
                    k = ma + mb
                    t[k] = (get(k, 0) + ca * cb) % p
            t = {k: v for k, v in t.items() if v}
        else:
            for mb, cb in b.items():
                for ma, ca in a.items():
                    k = ma + mb
                    v = get(k)
                    t[k] = ca * cb if v is None else v + ca * cb
            t = {k: v for k, v in t.items() if v != 0}
        return Poly(self.ring, t)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        F = self.ring.field
        return self.scale(F.inv(self.lc()))

    def primitive(self) -> "Poly":
        """Scale a QQ polynomial to coprime integer coefficients, positive lead."""
        F = self.ring.field
        if F.p or not self.terms:
            return self.monic()
        from math import gcd, lcm
        fr = [F.to_fraction(c) for c in self.terms.values()]
        den = lcm(*[f.denominator for f in fr])
        num = gcd(*[f.numerator * (den // f.denominator) for f in fr])
        s = den * (1 if self.lc() > 0 else -1)
        return self.scale(_mpq(s, num))

    # calculus and substitution ---------------------------------------------
    def diff(self, i: int) -> "Poly":
        R = self.ring
        w = R.wt[i]
        F = R.field
        p = F.p
        t = {}
        for m, c in self.terms.items():
            e = R.exps(m)[i]
            if e:
                v = c * e % p if p else c * e
                if v:
                    t[m - w] = v
        return Poly(R, t)

    def evaluate(self, values: Mapping[int, object]) -> "Poly":
        """Substitute field constants for some variables (by index)."""
        R = self.ring
        F = R.field
        vals = {i: F(v) for i, v in values.items()}
        out = R.zero()
        for m, c in self.terms.items():
            e = list(R.exps(m))
            coef = c
            for i, v in vals.items():
                if e[i]:
                    coef = coef * v ** e[i]
                    e[i] = 0
            if F.p:
                coef %= F.p
            if coef:
                out = out + Poly(R, {R.mono(e): coef})
        return out

    def compose(self, images: Sequence["Poly"], target: Ring | None = None) -> "Poly":
        """Substitute ``images[i]`` for variable ``i``; images live in ``target``."""
        R = self.ring
        T = target if target is not None else images[0].ring
        conv = _converter(R.field, T.field)
        powers: List[Dict[int, Poly]] = [{0: T.one(), 1: images[i]} for i in range(R.n)]

        def pw(i, e):
            cache = powers[i]
            if e not in cache:
                h = e // 2
                cache[e] = pw(i, h) * pw(i, e - h)
            return cache[e]

        acc: Dict[int, object] = {}
        p = T.field.p
        for m, c in self.terms.items():
            term = T.const(conv(c))
            for i, e in enumerate(R.exps(m)):
                if e:
                    term = term * pw(i, e)
            for k, v in term.terms.items():
                if k in acc:
                    s = acc[k] + v
                    if p:
                        s %= p
                    if s:
                        acc[k] = s
                    else:
                        del acc[k]
                else:
                    acc[k] = v
        return Poly(T, acc)

    def exact_div(self, d: "Poly") -> "Poly":
        """Quotient of an exact division; raises if ``d`` does not divide."""
        if not d.terms:
            raise ZeroDivisionError("division by zero polynomial")
        R = self.ring
        F = R.field
        lm_d = d.lm()
        inv = F.inv(d.lc())
        r = Poly(R, dict(self.terms))
        q: Dict[int, object] = {}
        p = F.p
        while r.terms:
            m = r.lm()
            if not R.divides(lm_d, m):
                raise ArithmeticError("inexact polynomial division")
            c = r.terms[m] * inv
            if p:
                c %= p
            mq = m - lm_d
            q[mq] = c
            r = r - d.mul_term(mq, c)
        return Poly(R, q)

    # printing --------------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Tuple[int, ...], object]]:
        """Terms in descending degrevlex order, whatever the ring's order."""
        R = self.ring
        items = [(R.exps(m), c) for m, c in self.terms.items()]
        items.sort(key=lambda ec: _degrevlex_sort_key(ec[0]), reverse=True)
        return items

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _degrevlex_sort_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


def _coef_str(c, F) -> str:
    if F.p:
        return str(int(c))
    fr = F.to_fraction(c)
    return str(fr.numerator) if fr.denominator == 1 else f"{fr.numerator}/{fr.denominator}"


def format_poly(f: Poly) -> str:
    R = f.ring
    F = R.field
    if not f.terms:
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        neg = False
        if not F.p and c < 0:
            neg = True
            c = -c
        cs = _coef_str(c, F)
        mono = "*".join(
            R.names[i] if k == 1 else f"{R.names[i]}^{k}" for i, k in enumerate(e) if k
        )
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------
# parser

class PolySyntaxError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])")


def _tokenize(text: str):
    toks = []
    # whitespace is insignificant: lex the squeezed string, remember positions
    pos_map = [i for i, ch in enumerate(text) if not ch.isspace()]
    s = "".join(ch for ch in text if not ch.isspace())
    i = 0
    while i < len(s):
        m = _TOKEN.match(s, i)
        if not m:
            raise PolySyntaxError(f"unexpected character {s[i]!r}", pos_map[i])
        kind = m.lastgroup
        toks.append((kind, m.group(), pos_map[i]))
        i = m.end()
    toks.append(("end", "", len(text)))
    return toks


def parse_poly(text: str, context: Ring) -> Poly:
    """Parse ``text`` in the ring ``context``.

    Grammar: integer and ``p/q`` literals, variables of the ring, the binary
    operators ``+ - * ^``, unary minus and parentheses.  Juxtaposition is an
    error.
    """
    toks = _tokenize(text)
    R = context
    F = R.field
    pos = 0

    def peek():
        return toks[pos]

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    def expr():
        acc = term()
        while peek()[1] in ("+", "-") and peek()[0] == "op":
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        sign = 1
        while peek()[0] == "op" and peek()[1] in ("+", "-"):
            if take()[1] == "-":
                sign = -sign
        acc = factor()
        while peek() == ("op", "*", peek()[2]):
            take()
            acc = acc * factor()
        nxt = peek()
        if nxt[0] in ("int", "rat", "name") or nxt[1] == "(":
            raise PolySyntaxError("implicit multiplication is not allowed", nxt[2])
        return -acc if sign < 0 else acc

    def factor():
        base = atom()
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            kind, val, p0 = take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a non-negative integer", p0)
            base = base ** int(val)
        return base

    def atom():
        kind, val, p0 = take()
        if kind == "int":
            return R.const(F(int(val)))
        if kind == "rat":
            num, den = val.split("/")
            if int(den) == 0:
                raise PolySyntaxError("zero denominator", p0)
            return R.const(F(Fraction(int(num), int(den))))
        if kind == "name":
            if val not in R.index:
                raise PolySyntaxError(f"unknown variable {val!r}", p0)
            return R.var(val)
        if val == "(":
            inner = expr()
            k2, v2, p2 = take()
            if v2 != ")":
                raise PolySyntaxError("expected ')'", p2)
            return inner
        raise PolySyntaxError(f"unexpected token {val or 'end of input'!r}", p0)

    result = expr()
    kind, val, p0 = peek()
    if kind != "end":
        raise PolySyntaxError(f"unexpected token {val!r}", p0)
    return result


# ---------------------------------------------------------------------------
# derivatives, determinants, resultants

def partial_derivative(f: Poly, var: int) -> Poly:
    if not 0 <= var < f.ring.n:
        raise IndexError("variable index out of range")
    return f.diff(var)


def coeffs_in(f: Poly, var: int) -> List[Poly]:
    """Coefficients of ``f`` as a polynomial in ``var`` (index = power)."""
    R = f.ring
    w = R.wt[var]
    d = f.degree_in(var)
    out = [dict() for _ in range(d + 1)]
    for m, c in f.terms.items():
        e = R.exps(m)[var]
        out[e][m - e * w] = c
    return [Poly(R, t) for t in out]


def sylvester_matrix(f: Poly, g: Poly, var: int) -> List[List[Poly]]:
    a = coeffs_in(f, var)[::-1]   # leading first
    b = coeffs_in(g, var)[::-1]
    m, n = len(a) - 1, len(b) - 1
    R = f.ring
    size = m + n
    rows = []
    for i in range(n):
        rows.append([R.zero()] * i + a + [R.zero()] * (size - m - 1 - i))
    for i in range(m):
        rows.append([R.zero()] * i + b + [R.zero()] * (size - n - 1 - i))
    return rows


def det_bareiss(M: List[List[Poly]]) -> Poly:
    """Fraction-free determinant of a square matrix of polynomials."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    R = M[0][0].ring
    A = [list(row) for row in M]
    sign = 1
    prev = R.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return R.zero()
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = akk * A[i][j] - aik * A[k][j]
                A[i][j] = num.exact_div(prev) if not prev.is_constant() else num.scale(
                    R.field.inv(prev.lc()))
            A[i][k] = R.zero()
        prev = akk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def resultant_univariate(f: Poly, g: Poly, var: int) -> Poly:
    """Sylvester resultant of ``f`` and ``g`` with respect to variable ``var``."""
    if f.ring is not g.ring:
        raise ValueError("ring mismatch")
    if f.degree_in(var) <= 0 or g.degree_in(var) <= 0:
        raise ValueError("resultant needs positive degree in the eliminated variable")
    return det_bareiss(sylvester_matrix(f, g, var))


# ---------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, constant term first)

def univariate_coeffs(f: Poly, var: int) -> list:
    R = f.ring
    F = R.field
    out = [F.zero] * (max(f.degree_in(var), 0) + 1)
    for m, c in f.terms.items():
        e = R.exps(m)
        if any(k for i, k in enumerate(e) if i != var):
            raise ValueError("polynomial is not univariate in the given variable")
        out[e[var]] = c
    return out


def poly_from_univariate(cs: Sequence, R: Ring, var: int) -> Poly:
    terms = {}
    for k, c in enumerate(cs):
        if c != 0:
            terms[k * R.wt[var]] = c
    return Poly(R, terms)


def _utrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_derivative(a, F):
    p = F.p
    return _utrim([(k * a[k]) % p if p else k * a[k] for k in range(1, len(a))])


def _udivmod(a, b, F):
    a = _utrim(a)
    b = _utrim(b)
    if not b:
        raise ZeroDivisionError
    p = F.p
    inv = F.inv(b[-1])
    q = [F.zero] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        if p:
            c %= p
        s = len(a) - len(b)
        q[s] = c
        for i, bi in enumerate(b):
            v = a[s + i] - c * bi
            a[s + i] = v % p if p else v
        a = _utrim(a)
    return _utrim(q), a


def upoly_gcd(a, b, F):
    a, b = _utrim(a), _utrim(b)
    while b:
        _, r = _udivmod(a, b, F)
        a, b = b, r
    if not a:
        return a
    inv = F.inv(a[-1])
    p = F.p
    return [(c * inv) % p if p else c * inv for c in a]


def upoly_squarefree(a, F):
    """Squarefree part (char 0 or degree below the characteristic)."""
    a = _utrim(a)
    if len(a) <= 1:
        return a
    g = upoly_gcd(a, upoly_derivative(a, F), F)
    q, r = _udivmod(a, g, F)
    return q
