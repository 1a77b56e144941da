#!/usr/bin/env python3
"""Benchmark the compiled chain kernels against the pure-Python fallback.

The dispatcher (numba-compiled unless WEAKSDE_NO_NUMBA=1) is timed against
the same function's .py_func, i.e. exactly the code the fallback mode runs.
Chains match the shipped experiment scales (10^6 steps, 1-D quartic target).

Usage: python benchmarks/bench_kernels.py [n_steps]
"""

import sys
import time

import numpy as np

from weaksde import kernels, models, noise


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    n_steps = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    rng = noise.make_generator(noise.SeedPath(7))
    target = models.builtin_target("bimodal_quartic")
    code, params = target.kernel

    grad_noise = np.sqrt(20.0) * noise.sample(noise.skewed_two_point(), rng, n_steps)
    extra = np.sqrt(2 * 0.01) * noise.sample(noise.gaussian(), rng, n_steps)
    signs = np.where(rng.random(n_steps) < 0.5, 1.0, -1.0)

    cases = [
        (
            "chain_loop (langevin/sgd)",
            kernels.chain_loop,
            (0.0, 0.01, code, params, grad_noise, extra),
        ),
        (
            "adaptive_chain_loop (sgld)",
            kernels.adaptive_chain_loop,
            (0.0, 0.1, n_steps // 10, 0.99, 0.999, code, params, grad_noise, signs),
        ),
    ]

    mode = "numba" if kernels.NUMBA_ENABLED else "fallback (WEAKSDE_NO_NUMBA)"
    print(f"kernel mode: {mode}; n_steps = {n_steps:,}")
    print(f"{'kernel':<28} {'dispatch':>10} {'py_func':>10} {'speedup':>8}")
    for name, fn, args in cases:
        fn(*args)  # warm-up / compile
        t_disp = best_of(lambda: fn(*args))
        t_py = best_of(lambda: fn.py_func(*args))
        ratio = t_py / t_disp if t_disp > 0 else float("nan")
        print(f"{name:<28} {t_disp:>9.3f}s {t_py:>9.3f}s {ratio:>7.1f}x")
    if not kernels.NUMBA_ENABLED:
        print("note: dispatcher IS the fallback in this mode; speedup ~1 expected")


if __name__ == "__main__":
    main()
