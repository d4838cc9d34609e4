"""Benchmark: pure-Python vs compiled exact elimination kernels.

Times rref + kernel_basis on (a) seeded random sparse rational matrices and
(b) the stacked singular-vector systems from the actual pipeline, asserting
that both backends return identical results.

    python3 benchmarks/bench_nullspace.py [--repeat 3] [--skip-pipeline]
"""

import argparse
import random
import time
from fractions import Fraction

from admz import affine
from admz.affine import mode, operator_matrix, weight_space_basis
from admz.nullspace import RationalMatrix, available_backends, kernel_basis, rref
from admz.zhu import level_from_string, singular_position

F = Fraction


def random_matrix(rng, nrows, ncols, density):
    entries = {}
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                entries[(i, j)] = F(rng.randint(-9, 9), rng.randint(1, 5))
    return RationalMatrix(nrows, ncols, entries)


def pipeline_matrix(level_text):
    lv = level_from_string(level_text)
    d, w = singular_position(lv)
    b0 = weight_space_basis(lv.k, d, w)
    be = weight_space_basis(lv.k, d, w + 1)
    bf = weight_space_basis(lv.k, d - 1, w - 1)
    return RationalMatrix.vstack(
        operator_matrix(mode("e", 0), b0, be, lv.k),
        operator_matrix(mode("f", 1), b0, bf, lv.k),
    )


def time_backend(m, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        red, rank = rref(m, backend=backend)
        basis = kernel_basis(m, backend=backend)
        best = min(best, time.perf_counter() - t0)
        result = (red, rank, basis)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-pipeline", action="store_true")
    parser.add_argument("--seed", type=int, default=20240601)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernel not built; timing the pure backend only")

    rng = random.Random(args.seed)
    cases = [
        ("random 40x60 (20% fill)", random_matrix(rng, 40, 60, 0.20)),
        ("random 60x80 (15% fill)", random_matrix(rng, 60, 80, 0.15)),
        ("random 90x110 (12% fill)", random_matrix(rng, 90, 110, 0.12)),
    ]
    if not args.skip_pipeline:
        for text in ("1/2", "-2/3"):
            cases.append((f"singular stack k={text}", pipeline_matrix(text)))
            affine.vacuum_module.cache_clear()

    header = f"{'case':<28}{'size':>12}{'python':>12}"
    if "cython" in backends:
        header += f"{'cython':>12}{'speedup':>10}"
    print(header, flush=True)
    for name, m in cases:
        t_py, res_py = time_backend(m, "python", args.repeat)
        line = f"{name:<28}{f'{m.nrows}x{m.ncols}':>12}{t_py * 1e3:>10.1f}ms"
        if "cython" in backends:
            t_cy, res_cy = time_backend(m, "cython", args.repeat)
            assert res_py == res_cy, f"backend mismatch on {name}"
            line += f"{t_cy * 1e3:>10.1f}ms{t_py / t_cy:>9.2f}x"
        print(line, flush=True)
    print("backends agree exactly on every case")


if __name__ == "__main__":
    main()
