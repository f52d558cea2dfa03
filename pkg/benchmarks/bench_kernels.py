"""Numba kernels against the pure-numpy fallback on batched workloads.

    python3 benchmarks/bench_kernels.py [--sizes 10,1000,100000] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from lounesto import _kernels
from lounesto.bilinears import BILINEAR_MATRICES
from lounesto.multivector import GP_INDEX, GP_SIGN


def best_time(fn, repeat):
    fn()  # warm up (JIT compile, cache)
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="10,1000,100000")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba not installed; nothing to compare")
        return 1
    rng = np.random.default_rng(0)
    mats = np.ascontiguousarray(BILINEAR_MATRICES)
    print(f"{'kernel':<14}{'n':>9}{'numpy [ms]':>13}{'numba [ms]':>13}{'speedup':>9}{'max diff':>11}")
    for n in (int(s) for s in args.sizes.split(",")):
        a, b = rng.normal(size=(n, 16)), rng.normal(size=(n, 16))
        psi = rng.normal(size=(n, 4)) + 1j * rng.normal(size=(n, 4))
        cases = [
            ("clifford", lambda: _kernels.blade_product_numpy(a, b, GP_SIGN, GP_INDEX),
             lambda: _kernels.blade_product_numba(a, b, GP_SIGN, GP_INDEX)),
            ("bilinears", lambda: _kernels.sesquilinear_numpy(psi, mats),
             lambda: _kernels.sesquilinear_numba(psi, mats)),
        ]
        for name, slow, fast in cases:
            t_np, t_nb = best_time(slow, args.repeat), best_time(fast, args.repeat)
            diff = float(np.max(np.abs(slow() - fast())))
            print(f"{name:<14}{n:>9}{t_np * 1e3:>13.3f}{t_nb * 1e3:>13.3f}{t_np / t_nb:>8.1f}x{diff:>11.1e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
