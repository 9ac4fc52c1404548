"""Compare the compiled and vectorized batch kernels with the per-word
Python reference.

    python benchmarks/bench_kernels.py --n 100000 --max-len 12

The numba columns include a warm-up call so compile time is excluded.
"""
from __future__ import annotations

import argparse
import random
import time

from crprod import _kernels as K
from crprod.words import canonical_rotation, cyc_core, reduce


def _timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=50_000)
    ap.add_argument("--max-len", type=int, default=12)
    ap.add_argument("--alphabet", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    letters = [x for g in range(1, args.alphabet + 1) for x in (g, -g)]
    words = [tuple(rng.choice(letters) for _ in range(rng.randint(0, args.max_len)))
             for _ in range(args.n)]
    arr, lens = K.encode(words)
    cores = K.batch_cyc_core(arr, lens, "numpy")

    backends = ["numpy"] + (["numba"] if K.USE_NUMBA else [])
    rows = {
        "reduce": (lambda b: K.batch_reduce(arr, lens, b),
                   lambda: [reduce(w) for w in words]),
        "cyc_core": (lambda b: K.batch_cyc_core(arr, lens, b),
                     lambda: [cyc_core(w) for w in words]),
        "least_rotation": (lambda b: K.batch_least_rotation(*cores, b),
                           lambda: [canonical_rotation(c) for c in K.decode(*cores)]),
    }
    print(f"n={args.n} max_len={args.max_len} alphabet={args.alphabet} "
          f"(numba {'enabled' if K.USE_NUMBA else 'disabled'})")
    header = f"{'kernel':<16}{'python':>10}" + "".join(f"{b:>10}" for b in backends)
    print(header)
    for name, (batch, ref) in rows.items():
        for b in backends:
            batch(b)  # warm-up, triggers compilation
        cells = [_timeit(ref, 1)] + [_timeit(lambda: batch(b), args.repeat) for b in backends]
        print(f"{name:<16}" + "".join(f"{c:>10.4f}" for c in cells))


if __name__ == "__main__":
    main()
