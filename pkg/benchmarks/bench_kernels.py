"""Benchmark: compiled kernels vs the pure-Python twin.

Kernel microbenchmarks call both backend modules directly; the
end-to-end rows rerun this script in a subprocess with LVF_PURE=1 so
the whole package imports against the pure backend.

Usage: python benchmarks/bench_kernels.py [--end-to-end]
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from lvf import _kernels_py

try:
    from lvf import _kernels_c
except ImportError:
    _kernels_c = None


def make_workload(seed=42, nterms=40, dim=3):
    from lvf.expr import encode_exponents

    rng = random.Random(seed)
    f, g = {}, {}
    for out in (f, g):
        for _ in range(nterms):
            exp = encode_exponents(
                Fraction(rng.randint(-2, 2), rng.choice((1, 2))) for _ in range(dim)
            )
            mono = tuple(rng.randint(0, 3) for _ in range(dim))
            out[(exp, mono)] = {(): Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 7))}
    rows = []
    ncols = 120
    for _ in range(300):
        rows.append(
            {rng.randrange(ncols): Fraction(rng.randint(-5, 5) or 1, rng.choice((1, 2)))
             for _ in range(rng.randint(2, 8))}
        )
    return f, g, rows, ncols


def timeit(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels():
    f, g, rows, ncols = make_workload()
    backends = [("py", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("c", _kernels_c))
    jobs = [
        ("ep_mul 40x40 terms", lambda k: k.ep_mul(f, g)),
        ("ep_add x100", lambda k: [k.ep_add(f, g) for _ in range(100)]),
        ("ep_diff x100", lambda k: [k.ep_diff(f, i % 3) for i in range(100)]),
        ("rref 300x120 sparse", lambda k: k.rref([dict(r) for r in rows], ncols)),
    ]
    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, job in jobs:
        times = {}
        for name, mod in backends:
            times[name] = timeit(lambda m=mod: job(m))
        line = f"{label:<24}" + "".join(f"{times[name] * 1e3:>10.2f}ms" for name, _ in backends)
        if "c" in times:
            line += f"{times['py'] / times['c']:>9.2f}x"
        print(line)


def bench_end_to_end():
    script = (
        "import time; t0=time.perf_counter();"
        "from lvf import verify; verify.verify_all();"
        "from lvf.obstruction import g2_obstruction;"
        "from lvf.solve import AnsatzSpace;"
        "g2_obstruction(3, AnsatzSpace(3, max_degree=4));"
        "print(time.perf_counter()-t0)"
    )
    results = {}
    for name, env_extra in (("c", {}), ("py", {"LVF_PURE": "1"})):
        if name == "c" and _kernels_c is None:
            continue
        env = dict(os.environ, **env_extra)
        out = subprocess.run(
            [sys.executable, "-c", script], env=env, capture_output=True, text=True
        )
        results[name] = float(out.stdout.strip())
    print(f"\n{'end to end (verify_all + one obstruction run)':<46}")
    for name, value in results.items():
        print(f"  backend {name}: {value:.2f}s")
    if "c" in results and "py" in results:
        print(f"  speedup: {results['py'] / results['c']:.2f}x")


if __name__ == "__main__":
    print(f"compiled kernels available: {_kernels_c is not None}")
    bench_kernels()
    if "--end-to-end" in sys.argv:
        bench_end_to_end()
