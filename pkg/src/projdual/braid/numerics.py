"""Fiber polynomials of plane-curve covers, numerical roots, and fiber transport."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .. import _kernels as K
from ..exactpoly import QQ, Poly, univariate_coeffs

DEFAULT_TOL = 1e-10
SEPARATION = 1e-6


class TrackingError(RuntimeError):
    """Continuation failed: step underflow, Newton divergence or strand collision."""


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ComplexPoint:
    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("complex point must be finite")

    @classmethod
    def of(cls, z: complex) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def __complex__(self):
        return complex(self.re, self.im)

    def as_pair(self, digits: int = 12) -> List[float]:
        return [float(format(self.re, f".{digits}g")), float(format(self.im, f".{digits}g"))]


def _to_complex(c) -> complex:
    if isinstance(c, complex):
        return c
    return float(QQ.to_fraction(c)) if not isinstance(c, (int, float)) else float(c)


class PlaneCover:
    """Affine model p(t, y) = sum C[i, j] t^i y^j of a degree-m cover, monic in y.

    ``t`` is the base coordinate, ``y`` the fiber coordinate.
    """

    def __init__(self, C: np.ndarray, source: Poly | None = None):
        C = np.asarray(C, dtype=np.complex128)
        m = C.shape[1] - 1
        lead = C[:, m]
        if lead[0] == 0 or np.any(lead[1:] != 0):
            raise ValueError("fiber polynomial is not monic-izable in the fiber variable")
        self.C = C / lead[0]
        self.m = m
        nx = C.shape[0]
        self.Ct = (self.C[1:, :] * np.arange(1, nx)[:, None]) if nx > 1 else np.zeros((1, m + 1), np.complex128)
        self.source = source

    @classmethod
    def from_affine(cls, p: Poly) -> "PlaneCover":
        """``p`` in two variables: index 0 is the base, index 1 the fiber."""
        R = p.ring
        if R.n != 2:
            raise ValueError("need a polynomial in two variables")
        dt, dy = p.degree_in(0), p.degree_in(1)
        C = np.zeros((max(dt, 0) + 1, max(dy, 0) + 1), dtype=np.complex128)
        for mono, c in p.terms.items():
            i, j = R.exps(mono)
            C[i, j] += _to_complex(c)
        return cls(C, p)

    @classmethod
    def from_form(cls, g: Poly) -> "PlaneCover":
        """Ternary form g(z0, z1, z2) projected from (0:0:1), chart z0 = 1."""
        R = g.ring
        if R.n != 3 or not g.is_homogeneous():
            raise ValueError("need a ternary form")
        m = g.total_degree()
        C = np.zeros((m + 1, m + 1), dtype=np.complex128)
        for mono, c in g.terms.items():
            _, i, j = R.exps(mono)
            C[i, j] += _to_complex(c)
        if C[0, m] == 0:
            raise ValueError("projection center lies on the curve")
        return cls(C, g)

    def fiber_coeffs(self, t: complex) -> np.ndarray:
        return K.fiber_coeffs(self.C, complex(t))

    def fiber(self, t: complex, tol: float = DEFAULT_TOL) -> np.ndarray:
        return polyroots(self.fiber_coeffs(t), tol)

    def residual(self, t: complex, ys) -> float:
        c = self.fiber_coeffs(t)
        return max(abs(K.horner(c, complex(y))[0]) for y in ys)


def _backward_stable(c: np.ndarray, z: np.ndarray) -> bool:
    # clustered roots stall the step-size test while residuals already sit at
    # rounding level; accept then, provided the roots are still distinct
    if not np.all(np.isfinite(z)):
        return False
    n = c.shape[0] - 1
    az = np.abs(z)
    scale = sum(abs(c[j]) * az**j for j in range(n + 1))
    res = np.abs(np.polyval(c[::-1], z))
    if np.any(res > 16 * n * np.finfo(float).eps * scale):
        return False
    if n == 1:
        return True
    gaps = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(gaps, np.inf)
    return bool(gaps.min() > 1e-6 * max(1.0, az.max()))


def polyroots(c: np.ndarray, tol: float = DEFAULT_TOL, maxit: int = 800) -> np.ndarray:
    """All roots of sum c[j] z^j by Aberth iteration, polished by Newton."""
    c = np.asarray(c, dtype=np.complex128)
    while c.shape[0] > 1 and c[-1] == 0:
        c = c[:-1]
    n = c.shape[0] - 1
    if n <= 0:
        return np.zeros(0, dtype=np.complex128)
    c = c / c[-1]
    bound = max(abs(c[k]) ** (1.0 / (n - k)) for k in range(n)) if n else 1.0
    r = max(bound, 1e-3)
    for offset in (0.4, 1.3, 2.1):
        z0 = r * np.exp(1j * (2 * np.pi * np.arange(n) / n + offset))
        z, ok = K.aberth(c, z0.astype(np.complex128), min(tol, 1e-12), maxit)
        if ok or _backward_stable(c, z):
            break
    else:
        raise RootFindingError("Aberth iteration did not converge")
    z, _ = K.newton_all(c, z, 1e-15, 5)
    return z


def rotated_order(ys: np.ndarray, phase: complex) -> np.ndarray:
    """Strand indices sorted by real part after rotation by ``phase``."""
    return np.argsort((ys * phase).real, kind="stable")


def _min_sep(ys: np.ndarray) -> float:
    if ys.shape[0] < 2:
        return math.inf
    d = np.abs(ys[:, None] - ys[None, :])
    np.fill_diagonal(d, np.inf)
    return float(d.min())


class Segment:
    def __init__(self, a: complex, b: complex):
        self.a, self.b = complex(a), complex(b)

    def __call__(self, s: float) -> complex:
        return self.a + (self.b - self.a) * s

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)


class Arc:
    """Circle arc center + r e^{i theta}, theta from th0 to th1."""

    def __init__(self, center: complex, radius: float, th0: float, th1: float):
        self.center, self.radius, self.th0, self.th1 = complex(center), float(radius), th0, th1

    def __call__(self, s: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * (self.th0 + (self.th1 - self.th0) * s))

    def reversed(self) -> "Arc":
        return Arc(self.center, self.radius, self.th1, self.th0)


def polyline(points: Sequence) -> List[Segment]:
    pts = [complex(p) for p in points]
    if len(pts) == 1:
        return [Segment(pts[0], pts[0])]
    return [Segment(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


def _on_fiber(cover: PlaneCover, t: complex, ys: np.ndarray, tol: float) -> bool:
    c = cover.fiber_coeffs(t)
    for y in ys:
        v, d = K.horner(c, complex(y))
        if d == 0 or abs(v / d) > 1e3 * tol * max(1.0, abs(y)):
            return False
    return ys.shape[0] == cover.m


def _crossing(w0: np.ndarray, w1: np.ndarray, o0: np.ndarray, o1: np.ndarray):
    """The single adjacent swap between orders o0 and o1 as a signed letter, or None if illegal."""
    moved = np.nonzero(o0 != o1)[0]
    if moved.size != 2 or moved[1] != moved[0] + 1:
        return None
    i = int(moved[0])
    a, b = int(o0[i]), int(o0[i + 1])
    if not (o1[i] == b and o1[i + 1] == a):
        return None
    d0 = (w0[a] - w0[b]).real
    d1 = (w1[a] - w1[b]).real
    lam = d0 / (d0 - d1) if d0 != d1 else 0.5
    ima = (w0[a] + lam * (w1[a] - w0[a])).imag
    imb = (w0[b] + lam * (w1[b] - w0[b])).imag
    # a moves right; the letter is positive when it passes below b
    return (i + 1) if ima < imb else -(i + 1)


def _track_piece(cover: PlaneCover, piece, ys: np.ndarray, tol: float, phase: complex,
                 letters: list, h0: float = 0.05) -> np.ndarray:
    s, h = 0.0, h0
    t = piece(0.0)
    if abs(piece(1.0) - t) == 0 and isinstance(piece, Segment):
        return ys
    while s < 1.0:
        if h < 1e-13:
            raise TrackingError(f"step size underflow near t={piece(s)}")
        s1 = s + h
        if s1 > 1.0 - 1e-9:
            s1 = 1.0
        t1 = piece(s1)
        c1 = K.fiber_coeffs(cover.C, t1)
        ct = K.fiber_coeffs(cover.Ct, t)
        c0 = K.fiber_coeffs(cover.C, t)
        pred = np.empty_like(ys)
        for k in range(ys.shape[0]):
            _, py = K.horner(c0, ys[k])
            pt, _ = K.horner(ct, ys[k])
            pred[k] = ys[k] - (pt / py) * (t1 - t) if py != 0 else ys[k]
        new, ok = K.newton_all(c1, pred, tol, 12)
        sep = _min_sep(ys)
        if sep < tol:
            raise TrackingError("strand collision")
        accept = ok and np.all(np.isfinite(new))
        if accept:
            corr = np.max(np.abs(new - pred))
            move = np.max(np.abs(new - ys))
            accept = corr < 0.1 * sep and move < 0.25 * sep
        if accept:
            w0, w1 = ys * phase, new * phase
            o0, o1 = np.argsort(w0.real, kind="stable"), np.argsort(w1.real, kind="stable")
            if not np.array_equal(o0, o1):
                letter = _crossing(w0, w1, o0, o1)
                if letter is None:
                    accept = False
                else:
                    letters.append(letter)
        if accept:
            ys, t, s = new, t1, s1
            h *= 1.6
        else:
            h = (s1 - s) * 0.5
    return ys


def transport_fiber(cover: PlaneCover, path, start_fiber, tol: float = DEFAULT_TOL,
                    phase: complex = 1.0) -> Tuple[np.ndarray, List[int]]:
    """Continue every root of the fiber along ``path``; return end fiber and braid letters.

    ``path`` is a list of Segment/Arc pieces or of points (taken as a polyline).
    Strand k of the output continues strand k of the input.  Letters are
    signed 1-based Artin indices with respect to the real-part order after
    rotation by ``phase``.
    """
    pieces = list(path)
    if pieces and not isinstance(pieces[0], (Segment, Arc)):
        pieces = polyline(pieces)
    ys = np.array([complex(y) for y in start_fiber], dtype=np.complex128)
    if pieces and not _on_fiber(cover, pieces[0](0.0), ys, tol):
        raise ValueError("start fiber does not solve the fiber equation")
    letters: List[int] = []
    for piece in pieces:
        ys = _track_piece(cover, piece, ys, tol, phase, letters)
    return ys, letters


def discriminant_roots(coeffs: Sequence, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Roots of an exact squarefree univariate polynomial (constant term first)."""
    cs = [QQ.to_fraction(c) for c in coeffs]
    lead = cs[-1]
    c = np.array([float(x / lead) for x in cs], dtype=np.complex128)
    return polyroots(c, tol)


def univariate_from_binary(form: Poly) -> list:
    """Dehomogenize a binary form at x0 = 1, coefficients of x1 (constant first)."""
    d = form.evaluate({0: 1})
    return univariate_coeffs(d, 1)
