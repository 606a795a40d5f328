"""Benchmark the enumeration kernels: numba JIT vs pure NumPy.

Runs count and enumerate on a few representative systems under both
backends, with a warm-up pass (excluded from timing) so JIT compilation
does not pollute the numbers, then reports mean and standard deviation
over several repeats.

Run:

    python benchmarks/bench_backends.py [--repeats 5]
"""
import argparse
import statistics
import time

from pbwpoly import kernels
from pbwpoly.lattice import count_points, enumerate_points
from pbwpoly.minkowski import minkowski_sum
from pbwpoly.roots import build_root_system
from pbwpoly.systems import b3_system, g2_system, rectangular_system


def workloads():
    b3 = build_root_system("B", 3)
    b4 = build_root_system("B", 4)
    b5 = build_root_system("B", 5)
    g2 = build_root_system("G2", 2)
    return [
        ("b3 (2,2,2)", b3_system().at(b3.weight(2, 2, 2))),
        ("b3 (3,3,3)", b3_system().at(b3.weight(3, 3, 3))),
        ("g2 (4,4)", g2_system().at(g2.weight(4, 4))),
        ("rect B4 i=3 m=3", rectangular_system(b4, 3).at(3 * b4.fundamental_weight(3))),
        ("rect B5 i=3 m=2", rectangular_system(b5, 3).at(2 * b5.fundamental_weight(3))),
    ]


def time_call(fn, repeats):
    fn()  # warm-up (JIT compile, caches)
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.mean(samples), statistics.stdev(samples) if repeats > 1 else 0.0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}   repeats: {args.repeats}\n")
    header = f"{'workload':22s} {'op':10s}" + "".join(f"{b:>20s}" for b in backends)
    print(header)
    print("-" * len(header))
    for name, inst in workloads():
        n = count_points(inst)
        for op, make in (("count", lambda b: lambda: count_points(inst, backend=b)),
                         ("enumerate", lambda b: lambda: enumerate_points(inst, backend=b))):
            cells = []
            for b in backends:
                mean, std = time_call(make(b), args.repeats)
                cells.append(f"{mean * 1e3:9.2f}±{std * 1e3:6.2f}ms")
            print(f"{name:22s} {op:10s}" + "".join(f"{c:>20s}" for c in cells))
        print(f"{'':22s} {'points':10s}{n:>20d}")

    # the Minkowski sum path is NumPy-only; report it for context
    b4 = build_root_system("B", 4)
    system = rectangular_system(b4, 3)
    a = enumerate_points(system.at(2 * b4.fundamental_weight(3)))
    mean, std = time_call(lambda: minkowski_sum(a, a), max(2, args.repeats // 2))
    print(f"\nminkowski_sum |A|=|B|={len(a)} ({len(a) ** 2} pairs): {mean:.3f}s ±{std:.3f}s")


if __name__ == "__main__":
    main()
