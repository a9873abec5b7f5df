"""Compare the compiled and pure-Python relation-search kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import math
import random
import timeit

from hopfbundles import kernels


def workload(n, bound, seed=0):
    rng = random.Random(seed)
    mu = [rng.uniform(0.1, 0.9) for _ in range(n)]
    args = [rng.uniform(-3, 3) for _ in range(n)]
    logs = [math.log(m) for m in mu]
    e = [rng.randint(-bound // 2, bound // 2) for _ in range(n)]
    tlog = sum(k * x for k, x in zip(e, logs))
    targ = sum(k * x for k, x in zip(e, args))
    return (logs, args, tlog, targ, [-bound] * n, [bound] * n, 1e-9)


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--repeat", type=int, default=5)
    opts = p.parse_args()
    cases = [("n=2, bound 32", workload(2, 32)), ("n=2, bound 256", workload(2, 256)),
             ("n=3, bound 32", workload(3, 32)), ("n=3, bound 64", workload(3, 64))]
    names = sorted(kernels.BACKENDS)
    print(f"{'workload':<18}" + "".join(f"{b:>14}" for b in names) + ("     speedup" if len(names) > 1 else ""))
    for label, call in cases:
        times = {}
        for b in names:
            fn = kernels.BACKENDS[b]
            times[b] = min(timeit.repeat(lambda: fn(*call), number=1, repeat=opts.repeat))
        row = f"{label:<18}" + "".join(f"{times[b] * 1e3:>12.2f}ms" for b in names)
        if len(names) > 1:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
