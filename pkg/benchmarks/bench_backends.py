#!/usr/bin/env python3
"""Benchmark the compiled extension against the pure-Python fallback.

Times the scalar special-function hot paths (the only code that differs
between backends) and one end-to-end workload (kernel matrix assembly plus
eigendecomposition for each kernel family).  Run from a checkout with the
package installed:

    python3 benchmarks/bench_backends.py [--repeats 5]
"""

import argparse
import math
import time

import numpy as np


def _load_backends():
    from gapspec import _specfun_py

    backends = {"python": _specfun_py}
    try:
        from gapspec import _core

        backends["compiled"] = _core
    except ImportError:
        print("compiled extension not built; benchmarking pure Python only")
    return backends


def bench_scalar(impl, repeats):
    """Best-of-N wall time for a fixed batch of scalar evaluations."""
    rng = np.random.default_rng(12345)
    airy_args = rng.uniform(-30.0, 50.0, 2000)
    bessel_a = rng.uniform(-0.9, 4.0, 2000)
    bessel_x = rng.uniform(0.01, 100.0, 2000)
    results = {}

    def best(f):
        t = math.inf
        for _ in range(repeats):
            t0 = time.perf_counter()
            f()
            t = min(t, time.perf_counter() - t0)
        return t

    results["airy_ai (2000 calls)"] = best(
        lambda: [impl.airy_ai(x) for x in airy_args]
    )
    results["bessel_j_pair (2000 calls)"] = best(
        lambda: [impl.bessel_j_pair(a, x) for a, x in zip(bessel_a, bessel_x)]
    )
    return results


def bench_end_to_end(backend, repeats):
    """Full spectrum computation per family under a forced backend.

    Runs in a subprocess so GAPSPEC_BACKEND takes effect at import time.
    """
    import subprocess
    import sys

    code = """
import time
import gapspec
from gapspec import IntervalSpec, Family, SINE, AIRY, bessel_spec
work = [
    (SINE, IntervalSpec(Family.SINE, 4.0)),
    (AIRY, IntervalSpec(Family.AIRY, -5.0)),
    (bessel_spec(0.5), IntervalSpec(Family.BESSEL, 25.0)),
]
best = float("inf")
for _ in range({repeats}):
    t0 = time.perf_counter()
    for spec, iv in work:
        gapspec.compute_spectrum(gapspec.build_discretization(spec, iv, 120))
    best = min(best, time.perf_counter() - t0)
print(best)
""".format(repeats=repeats)
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={**__import__("os").environ, "GAPSPEC_BACKEND": backend},
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    backends = _load_backends()
    scalar = {name: bench_scalar(impl, args.repeats) for name, impl in backends.items()}

    print(f"{'workload':40s}" + "".join(f"{name:>14s}" for name in backends))
    for key in next(iter(scalar.values())):
        row = f"{key:40s}"
        for name in backends:
            row += f"{scalar[name][key] * 1e3:12.2f}ms"
        print(row)

    print()
    for name in backends:
        t = bench_end_to_end(name, args.repeats)
        print(f"spectrum x3 families, n=120 [{name:8s}]  {t * 1e3:10.2f}ms")

    if len(backends) == 2:
        a = scalar["python"]["airy_ai (2000 calls)"]
        b = scalar["compiled"]["airy_ai (2000 calls)"]
        print(f"\nscalar airy speedup (python/compiled): {a / b:.1f}x")


if __name__ == "__main__":
    main()
