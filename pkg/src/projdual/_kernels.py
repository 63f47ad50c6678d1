"""Numeric hot loops: numba-compiled when available, numpy otherwise.

Set ``PROJDUAL_DISABLE_NUMBA=1`` to force the numpy versions.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

USE_NUMBA = njit is not None and os.environ.get("PROJDUAL_DISABLE_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------- loop forms

def _rank_mod_p_loops(A, p):
    A = A.copy()
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] % p != 0:
                piv = i
                break
        if piv < 0:
            continue
        for j in range(n):
            t = A[r, j]
            A[r, j] = A[piv, j]
            A[piv, j] = t
        # inverse by Fermat
        a = A[r, c] % p
        inv = 1
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * a) % p
            a = (a * a) % p
            e >>= 1
        for j in range(n):
            A[r, j] = (A[r, j] * inv) % p
        for i in range(m):
            if i != r:
                f = A[i, c] % p
                if f != 0:
                    for j in range(n):
                        A[i, j] = (A[i, j] - f * A[r, j]) % p
        r += 1
    return r


def _horner_loops(c, z):
    """Value and derivative of sum c[j] z^j."""
    n = c.shape[0]
    v = c[n - 1]
    d = 0j
    for j in range(n - 2, -1, -1):
        d = d * z + v
        v = v * z + c[j]
    return v, d


def _fiber_coeffs_loops(C, x):
    """C[i, j] is the coefficient of x^i y^j; returns the y-coefficients at x."""
    nx, ny = C.shape
    out = np.zeros(ny, dtype=np.complex128)
    for j in range(ny):
        v = 0j
        for i in range(nx - 1, -1, -1):
            v = v * x + C[i, j]
        out[j] = v
    return out


def _aberth_loops(c, z, tol, maxit):
    n = z.shape[0]
    z = z.copy()
    for it in range(maxit):
        worst = 0.0
        for k in range(n):
            v, d = _horner_loops(c, z[k])
            if v == 0:
                continue
            ratio = v / d if d != 0 else 1e-3 + 0j
            s = 0j
            for j in range(n):
                if j != k:
                    s += 1.0 / (z[k] - z[j])
            w = ratio / (1.0 - ratio * s)
            z[k] -= w
            aw = abs(w)
            scale = max(1.0, abs(z[k]))
            if aw / scale > worst:
                worst = aw / scale
        if worst < tol:
            return z, True
    return z, False


def _newton_all_loops(c, z, tol, maxit):
    z = z.copy()
    n = z.shape[0]
    for k in range(n):
        ok = False
        for it in range(maxit):
            v, d = _horner_loops(c, z[k])
            if d == 0:
                break
            step = v / d
            z[k] -= step
            if abs(step) <= tol * max(1.0, abs(z[k])):
                ok = True
                break
        if not ok:
            return z, False
    return z, True


# ---------------------------------------------------------------- numpy forms

def _rank_mod_p_numpy(A, p):
    A = A.copy() % p
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        f = A[:, c].copy()
        f[r] = 0
        # row updates in object dtype would be slow; int64 is safe for p < 2^31
        A = (A - np.outer(f, A[r]) % p) % p
        r += 1
    return r


def _horner_numpy(c, z):
    return np.polyval(c[::-1], z), np.polyval(np.polyder(c[::-1]), z)


def _fiber_coeffs_numpy(C, x):
    powers = x ** np.arange(C.shape[0])
    return powers @ C


def _aberth_numpy(c, z, tol, maxit):
    z = z.astype(np.complex128).copy()
    rev = c[::-1]
    drev = np.polyder(rev)
    n = z.shape[0]
    for it in range(maxit):
        v = np.polyval(rev, z)
        d = np.polyval(drev, z)
        ratio = np.where(d != 0, v / np.where(d != 0, d, 1), 1e-3)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        s = (1.0 / diff).sum(axis=1) - 1.0
        w = ratio / (1.0 - ratio * s)
        w[v == 0] = 0
        z = z - w
        if np.max(np.abs(w) / np.maximum(1.0, np.abs(z))) < tol:
            return z, True
    return z, False


def _newton_all_numpy(c, z, tol, maxit):
    z = z.astype(np.complex128).copy()
    rev = c[::-1]
    drev = np.polyder(rev)
    done = np.zeros(z.shape[0], dtype=bool)
    for it in range(maxit):
        d = np.polyval(drev, z)
        if np.any((d == 0) & ~done):
            return z, False
        step = np.where(done, 0, np.polyval(rev, z) / np.where(d == 0, 1, d))
        z = z - step
        done |= np.abs(step) <= tol * np.maximum(1.0, np.abs(z))
        if done.all():
            return z, True
    return z, False


if USE_NUMBA:
    _h = njit(cache=True)(_horner_loops)
    _horner_loops = _h  # the other kernels resolve the compiled version by global lookup
    horner = _h
    rank_mod_p = njit(cache=True)(_rank_mod_p_loops)
    fiber_coeffs = njit(cache=True)(_fiber_coeffs_loops)
    aberth = njit(cache=True)(_aberth_loops)
    newton_all = njit(cache=True)(_newton_all_loops)
else:
    horner = _horner_numpy
    rank_mod_p = _rank_mod_p_numpy
    fiber_coeffs = _fiber_coeffs_numpy
    aberth = _aberth_numpy
    newton_all = _newton_all_numpy

NUMPY_KERNELS = {
    "rank_mod_p": _rank_mod_p_numpy,
    "horner": _horner_numpy,
    "fiber_coeffs": _fiber_coeffs_numpy,
    "aberth": _aberth_numpy,
    "newton_all": _newton_all_numpy,
}
