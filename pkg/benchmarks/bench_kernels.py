"""Compare the compiled and numpy exterior-algebra kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--dim 8]

Times the two hot kernels (wedge, batched evaluation) on the shapes the
form-jet stencils use, and checks the backends agree.
"""

import argparse
import timeit
from math import comb

import numpy as np

from mixedsasaki import kernels

CASES = ((1, 2), (2, 2), (1, 4), (3, 2), (2, 4))


def bench(name, fn, repeat, number):
    best = min(timeit.repeat(fn, repeat=repeat, number=number)) / number
    return name, best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=8)
    ap.add_argument("--batch", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=50)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)
    m = args.dim
    print(f"backends: {sorted(kernels.BACKENDS)}  dim={m}  batch={args.batch}")
    print(f"{'kernel':<16}{'backend':<10}{'seconds':>12}{'speedup':>10}")
    for p, q in CASES:
        if p + q > m:
            continue
        a, b = rng.standard_normal(comb(m, p)), rng.standard_normal(comb(m, q))
        vecs = rng.standard_normal((args.batch, p + q, m))
        c = kernels.BACKENDS["python"].wedge(m, p, q, a, b)
        rows = {}
        for backend, mod in sorted(kernels.BACKENDS.items()):
            assert np.allclose(mod.wedge(m, p, q, a, b), c, atol=1e-12)
            assert np.allclose(mod.evaluate(m, p + q, c, vecs),
                               kernels.BACKENDS["python"].evaluate(m, p + q, c, vecs), atol=1e-9)
            rows[backend] = (
                bench(f"wedge {p}^{q}", lambda: mod.wedge(m, p, q, a, b), args.repeat, args.number),
                bench(f"evaluate r{p + q}", lambda: mod.evaluate(m, p + q, c, vecs), args.repeat, args.number),
            )
        base = rows["python"]
        for backend, res in rows.items():
            for (label, t), (_, t0) in zip(res, base):
                print(f"{label:<16}{backend:<10}{t:>12.3e}{t0 / t:>9.1f}x")


if __name__ == "__main__":
    main()
