"""Compare the compiled and pure-Python kernel backends on the same workloads.

Usage: python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit

from unimodcat.exactmath import Matrix, Scalar, kernels
from unimodcat.families import a1, regular_comodule, taft
from unimodcat.unimod import decide


def _random_matrix(rng: random.Random, n: int, order: int, density: float = 1.0) -> Matrix:
    def entry():
        if rng.random() >= density:
            return Scalar(0, order)
        return Scalar([rng.randint(-3, 3) for _ in range(2)], order)

    return Matrix.from_rows([[entry() for _ in range(n)] for _ in range(n)], order)


def workloads(rng: random.Random) -> dict:
    a, b = _random_matrix(rng, 24, 5), _random_matrix(rng, 24, 5)
    c = _random_matrix(rng, 16, 4)
    s, t = _random_matrix(rng, 64, 5, 0.1), _random_matrix(rng, 64, 5, 0.1)
    return {
        "dense matmul 24x24 Q(zeta_5)": lambda: a @ b,
        "sparse matmul 64x64 Q(zeta_5)": lambda: s @ t,
        "rref 16x16 over Q(zeta_4)": lambda: c.rref(),
        "taft(4) invariants": lambda: taft(4).grouplike,
        "decide A1(4,2,1)": lambda: decide(a1(4, 2, 1)),
        "decide regular taft(3)": lambda: decide(regular_comodule(taft(3))),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = kernels.available_backends()
    prev = kernels.backend()
    results: dict[str, dict[str, float]] = {}
    try:
        for name in backends:
            kernels.set_backend(name)
            for label, fn in workloads(random.Random(args.seed)).items():
                fn()  # warm caches and imports
                results.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
    finally:
        kernels.set_backend(prev)
    header = f"{'workload':32}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, row in results.items():
        line = f"{label:32}" + "".join(f"{row[b] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['python'] / row['cython']:>9.2f}x"
        print(line)
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend was measured")


if __name__ == "__main__":
    main()
