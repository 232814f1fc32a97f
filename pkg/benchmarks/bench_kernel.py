"""Time the compiled product kernel against the pure-Python twin.

    python3 benchmarks/bench_kernel.py [--sizes 5,6,7] [--repeat 3] [--m-sep 0]

Both backends run on the same (alpha, beta) arrays; results must match
exactly before any timing is reported.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

import numpy as np

from permfact import kernel
from permfact.core import Partition
from permfact.oracle import class_array


def _time(fn, repeat: int) -> float:
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs)


def bench(n: int, m_sep: int, repeat: int, alphas_limit: int) -> dict:
    lam, mu = Partition([n]), Partition([n - 1, 1])
    alphas = class_array(lam)[:alphas_limit]
    betas = class_array(mu)
    ref = kernel.pair_keys(alphas, betas, m_sep, backend="python")
    row = {"n": n, "pairs": alphas.shape[0] * betas.shape[0]}
    for name in kernel.BACKENDS:
        out = kernel.pair_keys(alphas, betas, m_sep, backend=name)
        if not np.array_equal(out, ref):
            raise SystemExit(f"backend {name} disagrees with python at n={n}")
        row[name] = _time(lambda: kernel.pair_keys(alphas, betas, m_sep, backend=name), repeat)
    if "compiled" in row:
        row["speedup"] = row["python"] / row["compiled"]
    return row


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="5,6,7")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--m-sep", type=int, default=0)
    p.add_argument("--alphas", type=int, default=24, help="alpha rows per size")
    args = p.parse_args(argv)
    if "compiled" not in kernel.BACKENDS:
        print("compiled kernel not built; timing the python backend only", file=sys.stderr)
    print(f"{'n':>3} {'pairs':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for n in (int(x) for x in args.sizes.split(",")):
        r = bench(n, min(args.m_sep, n), args.repeat, args.alphas)
        comp = f"{r['compiled']:.4f}" if "compiled" in r else "-"
        speed = f"{r['speedup']:.1f}x" if "speedup" in r else "-"
        print(f"{n:>3} {r['pairs']:>10} {r['python']:>10.4f} {comp:>11} {speed:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
