"""Benchmark the compiled sign/rank kernels against the pure-Python twin.

Run from the repository root:

    python3 benchmarks/bench_kernel.py

Both backends are imported directly (no environment juggling) and checked
for agreement on every sampled input before timing, so a reported speedup
is a speedup on identical results.
"""

import random
import time

from ealie import _kernel_py
from ealie.quantum_torus import SignMatrix

try:
    from ealie import _kernel
except ImportError:
    _kernel = None


def bench(label, fn_compiled, fn_pure, args_list, repeat=5):
    for args in args_list[:200]:
        if fn_compiled(*args) != fn_pure(*args):
            raise SystemExit(f"{label}: backends disagree on {args}")

    def time_one(fn):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            for args in args_list:
                fn(*args)
            best = min(best, time.perf_counter() - t0)
        return best

    tc = time_one(fn_compiled)
    tp = time_one(fn_pure)
    print(f"{label:24s} compiled {tc * 1e3:8.2f} ms   pure {tp * 1e3:8.2f} ms   x{tp / tc:5.1f}")


def main():
    if _kernel is None:
        raise SystemExit("compiled kernel not built; run pip install -e . first")
    rng = random.Random(5)
    nu = 4
    upper = [rng.choice((1, -1)) for _ in range(nu * (nu - 1) // 2)]
    flat = SignMatrix.from_upper(nu, upper).flat

    sig = lambda: tuple(rng.randint(-8, 8) for _ in range(nu))
    kap_args = [(sig(), flat, nu) for _ in range(20000)]
    g_args = [(sig(), sig(), nu, flat) for _ in range(20000)]
    c_args = [(sig(), sig(), nu, flat) for _ in range(20000)]

    mats = []
    for _ in range(300):
        rows = [[rng.randint(-4, 4) for _ in range(12)] for _ in range(10)]
        mats.append((rows, 12))

    print(f"backend reported by ealie.kernel: compiled={_kernel.BACKEND!r} pure={_kernel_py.BACKEND!r}")
    bench("kappa", _kernel.kappa, _kernel_py.kappa, kap_args)
    bench("g_cocycle", _kernel.g_cocycle, _kernel_py.g_cocycle, g_args)
    bench("structure_constant", _kernel.structure_constant, _kernel_py.structure_constant, c_args)
    bench("int_rank", _kernel.int_rank, _kernel_py.int_rank, mats)


if __name__ == "__main__":
    main()
