"""Time the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat R]
"""

import argparse
import timeit

import numpy as np

from walled import _pykernels, kernels
from walled.irreps import _sector_plan
from walled.permgroup import symmetric_group
from walled.ppt import _unit_terms, simplex_grid
from walled.yor import yor_table


def cases():
    rng = np.random.default_rng(0)
    images = np.array(symmetric_group(7)[1234].images)
    yield "basis_permutation n=7 d=4", (images, 4), None

    n = 6
    plan = _sector_plan(n)
    table = np.ascontiguousarray(yor_table((2, 1, 1)))
    rows, cols, ids, ws = [], [], [], []
    for s, (r, c, rk, pw) in plan.items():
        weight = rng.normal()
        rows += r
        cols += c
        ids += rk
        ws += [weight * 5.0**p for p in pw]
    args = (np.array(ids), np.array(rows), np.array(cols), np.array(ws))
    size = (n - 1) * table.shape[1]
    yield "scatter_blocks n=6 alpha=(2,1,1)", (table,) + args, size

    pts = simplex_grid(400)
    blocks, scalars = _unit_terms(3)
    yield "grid_min_eig 400-grid", (pts, blocks, scalars), None


def run(impl, name, args, size):
    if name.startswith("scatter"):
        return lambda: impl.scatter_blocks(np.zeros((size, size)), *args)
    return lambda: getattr(impl, name.split()[0])(*args)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    compiled = kernels.compiled()
    if compiled is None:
        print("compiled extension not built; only the numpy fallback is available")
    print(f"{'kernel':<36}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, call_args, size in cases():
        py = min(timeit.repeat(run(_pykernels, name, call_args, size), number=3, repeat=args.repeat)) / 3
        if compiled is not None:
            cy = min(timeit.repeat(run(compiled, name, call_args, size), number=3, repeat=args.repeat)) / 3
            print(f"{name:<36}{py * 1e3:>12.3f}{cy * 1e3:>12.3f}{py / cy:>9.1f}x")
        else:
            print(f"{name:<36}{py * 1e3:>12.3f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
