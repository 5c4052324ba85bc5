"""Compare the compiled overlap kernel with its pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--k 200] [--length 100] [--sigma 4] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import timeit

from apsp import _kernels_py

try:
    from apsp import _kernels
except ImportError:
    _kernels = None


def make_strings(k, length, sigma, seed):
    rng = random.Random(seed)
    letters = "ACGT" if sigma == 4 else "abcdefghijklmnopqrstuvwxyz"[:sigma]
    return ["".join(rng.choice(letters) for _ in range(length)) for _ in range(k)]


def time_backend(mod, strings, repeat):
    pairs = list(zip(strings, strings[1:] + strings[:1]))
    lspo = min(timeit.repeat(lambda: [mod.lspo(x, y) for x, y in pairs], number=1, repeat=repeat))
    matrix = min(timeit.repeat(lambda: mod.overlap_matrix(strings), number=1, repeat=repeat))
    return lspo, matrix, mod.overlap_matrix(strings)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=200)
    ap.add_argument("--length", type=int, default=100)
    ap.add_argument("--sigma", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    strings = make_strings(args.k, args.length, args.sigma, args.seed)
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    print(f"k={args.k} length={args.length} sigma={args.sigma}")
    print(f"{'backend':<8} {'lspo x k (s)':>14} {'matrix k^2 (s)':>15}")
    results = {}
    for name, mod in backends:
        lspo, matrix, out = time_backend(mod, strings, args.repeat)
        results[name] = (lspo, matrix, out)
        print(f"{name:<8} {lspo:>14.5f} {matrix:>15.5f}")
    if "cython" in results:
        py, cy = results["python"], results["cython"]
        assert py[2] == cy[2], "backends disagree"
        print(f"speedup  {py[0] / cy[0]:>13.1f}x {py[1] / cy[1]:>14.1f}x")
    else:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
