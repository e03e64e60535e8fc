"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from graphmeasure import _kernels_py
from graphmeasure.graph import make_graph, shadowed

try:
    from graphmeasure import _kernels
except ImportError:
    _kernels = None


def tables(g):
    n, src, dst, codes, _, _ = shadowed(g).kernel_tables()
    return n, src, dst, codes


def workloads():
    square = make_graph(["a", "b", "c", "d"],
                        [("p", "a", "b"), ("q", "b", "c"), ("r", "c", "d"), ("s", "d", "a")])
    theta = make_graph(["a", "b", "c"],
                       [("x", "a", "b"), ("y", "b", "c"), ("z", "c", "a"), ("l", "a", "a")])
    sq, th = tables(square), tables(theta)
    return [
        ("walks (square, len 8)", lambda k: k.walks(*sq, 8)),
        ("closure D_r (square)", lambda k: k.closure(*sq, True, -1)),
        ("closure D (theta)", lambda k: k.closure(*th, False, -1)),
        ("find_trace (theta)", lambda k: k.find_trace(*th, 0, 0, (0, 2, 4, 6), True)),
        ("stratum_counts (theta, len 7)",
         lambda k: k.stratum_counts(*th, 7, [0], [0], False)),
        ("reduce_codes (10k)", lambda k: k.reduce_codes([i % 6 for i in range(10_000)])),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled kernels not built; timing the fallback only")
    print(f"{'workload':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in workloads():
        times = []
        for _, mod in backends:
            t = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
            times.append(t)
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
