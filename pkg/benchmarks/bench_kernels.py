"""Compare the compiled and pure-Python counting kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from msap import enumeration, kernels


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t)
    return min(times), result


def with_backend(module, fn):
    def run(*args):
        saved = kernels.place, kernels.count_cycle_covers
        kernels.place, kernels.count_cycle_covers = module.place, module.count_cycle_covers
        try:
            return fn(*args)
        finally:
            kernels.place, kernels.count_cycle_covers = saved

    return run


CASES = [
    ("dp", enumeration.count_polygon_mosaics, (8, 8)),
    ("dp", enumeration.count_polygon_mosaics, (10, 10)),
    ("dp", enumeration.count_polygon_mosaics, (12, 12)),
    ("quasi", enumeration.quasimosaic_counts, (10, 10)),
    ("brute", enumeration.brute_force_count, (4, 5)),
    ("brute", enumeration.brute_force_count, (3, 8)),
    ("brute", enumeration.brute_force_count, (5, 5)),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.compiled_backend is None:
        print("compiled extension not available; timing the Python kernels only")
    print(f"{'case':<8}{'grid':>7}{'python s':>11}{'compiled s':>12}{'speedup':>9}")
    for name, fn, dims in CASES:
        py, expected = best_of(args.repeat, with_backend(kernels.python_backend, fn), *dims)
        row = f"{name:<8}{'%dx%d' % dims:>7}{py:>11.4f}"
        if kernels.compiled_backend is not None:
            cc, got = best_of(args.repeat, with_backend(kernels.compiled_backend, fn), *dims)
            assert got == expected, (name, dims)
            row += f"{cc:>12.4f}{py / cc if cc else float('inf'):>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
