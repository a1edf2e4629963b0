"""Benchmark the compiled diagram-composition kernel against its
pure-Python twin on all pairwise compositions in End(n).

Run:  python3 benchmarks/bench_compose.py [n] [repeats]
"""

from __future__ import annotations

import sys
import time

sys.path.insert(0, "src")

from tlcat._kernel_py import compose_links as compose_py  # noqa: E402
from tlcat.diagram import enumerate_diagrams  # noqa: E402

try:
    from tlcat._kernel_cy import compose_links as compose_cy
except ImportError:
    compose_cy = None


def bench(kernel, links, n, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        acc = 0
        for a in links:
            for b in links:
                _, loops, _ = kernel(n, n, n, a, b)
                acc += loops
        best = min(best, time.perf_counter() - t0)
    return best, acc


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 5
    links = [d.link for d in enumerate_diagrams(n, n)]
    pairs = len(links) ** 2
    print(f"End({n}): {len(links)} diagrams, {pairs} compositions per pass")

    t_py, acc_py = bench(compose_py, links, n, repeats)
    print(f"python  kernel: {t_py:.4f} s  ({pairs / t_py:,.0f} compose/s)")
    if compose_cy is None:
        print("cython  kernel: not built")
        return
    t_cy, acc_cy = bench(compose_cy, links, n, repeats)
    print(f"cython  kernel: {t_cy:.4f} s  ({pairs / t_cy:,.0f} compose/s)")
    assert acc_py == acc_cy, "kernels disagree on loop counts"
    print(f"speedup: {t_py / t_cy:.2f}x (identical results)")


if __name__ == "__main__":
    main()
