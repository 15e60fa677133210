"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and
the speedup.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from hanabi_conventions import _kernels_py

try:
    from hanabi_conventions import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def _cases(rng):
    atoms = 51
    support = np.linspace(-25.0, 25.0, atoms)
    n = 32
    far = rng.uniform(-5, 5, n)
    disc = np.full(n, 0.99)
    probs = rng.dirichlet(np.ones(atoms), n)

    base = 1 << 16
    tree = np.zeros(2 * base)
    for i in range(0, base, 97):
        _kernels_py.sumtree_update(tree, base, i, 1.0)
    targets = np.sort(rng.uniform(0, tree[1], 32))
    series = rng.uniform(0, 10, 60_000)

    return {
        "categorical_projection (32 x 51)": lambda k: k.categorical_projection(far, disc, probs, support),
        "sumtree_update x 64": lambda k: [k.sumtree_update(tree, base, i * 131 % base, 1.0) for i in range(64)],
        "sumtree_find (32 targets)": lambda k: k.sumtree_find(tree, base, targets),
        "ema (60k points)": lambda k: k.ema(series, 0.9995),
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if _compiled is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    rng = np.random.default_rng(0)
    print(f"{'kernel':<34} {'python':>12} {'cython':>12} {'speedup':>9}")
    for name, fn in _cases(rng).items():
        number = 3
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=number, repeat=args.repeat)) / number
        cy = min(timeit.repeat(lambda: fn(_compiled), number=number, repeat=args.repeat)) / number
        print(f"{name:<34} {py * 1e3:>10.3f}ms {cy * 1e3:>10.3f}ms {py / cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
