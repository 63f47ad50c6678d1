"""Compare the numba-compiled kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 20]

Run with PROJDUAL_DISABLE_NUMBA=1 to see the fallback alone (both columns
then time numpy).
"""
import argparse
import time

import numpy as np

from projdual import _kernels as K


def _best(fn, repeat):
    fn()  # warm up (includes JIT compilation)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    p = 2147483647
    A = rng.integers(0, p, size=(60, 80), dtype=np.int64)
    c = rng.standard_normal(13) + 1j * rng.standard_normal(13)
    c[-1] = 1.0
    z0 = 2.0 * np.exp(1j * (2 * np.pi * np.arange(12) / 12 + 0.4))
    C = rng.standard_normal((5, 5)) + 0j
    C[1:, 4] = 0
    C[0, 4] = 1
    xs = rng.standard_normal(2000) + 1j * rng.standard_normal(2000)
    return {
        "rank_mod_p 60x80": (lambda f: f(A, p), "rank_mod_p"),
        "aberth degree 12": (lambda f: f(c, z0.astype(np.complex128), 1e-12, 500), "aberth"),
        "fiber_coeffs x2000": (lambda f: [f(C, x) for x in xs], "fiber_coeffs"),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    fast = {"rank_mod_p": K.rank_mod_p, "aberth": K.aberth, "fiber_coeffs": K.fiber_coeffs}
    print(f"numba enabled: {K.USE_NUMBA}")
    print(f"{'kernel':<22}{'compiled (ms)':>15}{'numpy (ms)':>13}{'speedup':>10}")
    for name, (call, key) in cases(rng).items():
        a = _best(lambda: call(fast[key]), args.repeat)
        b = _best(lambda: call(K.NUMPY_KERNELS[key]), args.repeat)
        print(f"{name:<22}{a * 1e3:>15.3f}{b * 1e3:>13.3f}{b / a:>10.1f}x")
    # agreement between the two paths
    A = rng.integers(0, 101, size=(20, 30), dtype=np.int64)
    assert fast["rank_mod_p"](A, 101) == K.NUMPY_KERNELS["rank_mod_p"](A, 101)


if __name__ == "__main__":
    main()
