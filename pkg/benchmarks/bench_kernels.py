"""Compiled vs pure-Python kernel timings.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import timeit

import numpy as np

from primezeta import _backend
from primezeta.zeta_core import _weights


def cases():
    sig = np.full(2000, 0.5)
    tau = np.linspace(10.0, 50.0, 2000)
    w = _weights("ex", 1000, "optimized")
    return {
        "lambda_range literal [0, 3000]": lambda k: k.lambda_range(0, 3000, False),
        "lambda_range optimized [0, 2e5]": lambda k: k.lambda_range(0, 200_000, True),
        "eta_sums 2000 pts x 1000 terms": lambda k: k.eta_sums(sig, tau, w, False),
        "eta_sums compensated": lambda k: k.eta_sums(sig, tau, w, True),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = list(_backend.BACKENDS)
    if "compiled" not in names:
        print("compiled extension not built; timing the python fallback only")
    print(f"{'case':36s}" + "".join(f"{n:>12s}" for n in names) + ("   speedup" if len(names) > 1 else ""))
    for label, fn in cases().items():
        best = {}
        for n in names:
            k = _backend.get(n)
            best[n] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
        line = f"{label:36s}" + "".join(f"{best[n]:11.4f}s" for n in names)
        if len(names) > 1:
            line += f"  {best['python'] / best['compiled']:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
