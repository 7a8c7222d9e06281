"""Benchmark the numba kernels against the pure-numpy fallback.

Usage:  python benchmarks/bench_backends.py [--repeat N]

Times the four hot kernels on representative workloads and prints one
table row per (kernel, backend).  The first numba call includes JIT
compilation, so a warmup pass runs before timing.
"""

import argparse
import time

import numpy as np

from rankinv import arrayops as ao
from rankinv.backends import numba_impl, numpy_impl
from rankinv.forms import tightness_form, trace_kernel_elements
from rankinv.gfcore import get_field
from rankinv.rankcodes import random_systematic


def workloads():
    f256 = get_field("gf256")
    f16 = get_field("gf16")
    rng = np.random.default_rng(7)

    # rank of a 105 x 63 evaluation-style matrix over F_2^8
    data = ao.unpack_codes(f256, rng.integers(0, 256, size=(105, 63)))
    yield "rref 105x63 F_256", lambda be: be.rref_fqm(f256, data.copy())

    # exhaustive minimum rank distance of a [4,2] code over F_2^4
    code = random_systematic(f16, 4, 2, 1)
    G = code.G.data
    yield "min-rank scan 2^8 words", lambda be: be.min_rank_scan(f16, G)

    # hyperplane sweep for a [4,3] system over F_2^4
    sysgens = random_systematic(f16, 4, 3, 2).G.columns_array()
    yield "hyperplane scan k=3 F_16", lambda be: be.hyperplane_scan(f16, sysgens, 2)

    # zero-coset census of the bound-attaining form, 8^3 candidate classes
    form = tightness_form(f16, 3, 1)
    E = trace_kernel_elements(f16, 1)
    yield "coset scan 8^3 classes", lambda be: be.coset_scan(f16, form.coeffs, E)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = [numpy_impl, numba_impl]
    rows = []
    for name, fn in workloads():
        for be in backends:
            fn(be)  # warmup (and JIT compile for numba)
            t0 = time.perf_counter()
            for _ in range(args.repeat):
                fn(be)
            dt = (time.perf_counter() - t0) / args.repeat
            rows.append((name, be.NAME, dt))

    print(f"{'workload':<28} {'backend':<8} {'time/run':>12}")
    print("-" * 52)
    speedups = {}
    for name, be, dt in rows:
        print(f"{name:<28} {be:<8} {dt * 1e3:>9.2f} ms")
        speedups.setdefault(name, {})[be] = dt
    print("-" * 52)
    for name, d in speedups.items():
        if "numpy" in d and "numba" in d and d["numba"] > 0:
            print(f"{name:<28} numba speedup: {d['numpy'] / d['numba']:>6.1f}x")


if __name__ == "__main__":
    main()
