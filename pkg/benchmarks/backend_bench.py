#!/usr/bin/env python3
"""Compare the compiled kernel extension against the pure-Python fallback.

Times full batch evaluations of both variants on a synthetic scale-free
graph and reports per-call seconds plus the compiled/pure ratio.

    python benchmarks/backend_bench.py --nodes 30000 --attach 6 --repeat 5
"""

import argparse
import statistics
import time

from lapstream import _kernels_py
from lapstream.synth import preferential_attachment_graph

try:
    from lapstream import _kernels_c
except ImportError:
    _kernels_c = None


def time_call(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.fmean(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nodes", type=int, default=30000)
    parser.add_argument("--attach", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    g = preferential_attachment_graph(args.nodes, args.attach, seed=args.seed)
    adj = g.adjacency()
    strength = g.strengths()
    nodes = list(g.nodes())
    print(f"graph: {g.num_nodes} nodes, {g.num_edges} edges, repeat={args.repeat}")

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("c", _kernels_c))
    else:
        print("compiled extension not built; timing pure backend only")

    results = {}
    for name, mod in backends:
        for variant, fn in (
            ("unweighted", lambda m=mod: m.unweighted_values(adj, nodes)),
            ("weighted", lambda m=mod: m.weighted_values(adj, strength, nodes)),
        ):
            best, mean = time_call(fn, args.repeat)
            results[(name, variant)] = best
            print(f"{name:>7} {variant:>10}: best {best * 1e3:8.2f} ms  mean {mean * 1e3:8.2f} ms")

    if _kernels_c is not None:
        for variant in ("unweighted", "weighted"):
            ratio = results[("python", variant)] / results[("c", variant)]
            print(f"compiled speedup, {variant}: {ratio:.2f}x")
        # the two backends must agree exactly
        sample = nodes[: min(2000, len(nodes))]
        assert _kernels_py.unweighted_values(adj, sample) == _kernels_c.unweighted_values(
            adj, sample
        )
        assert _kernels_py.weighted_values(adj, strength, sample) == _kernels_c.weighted_values(
            adj, strength, sample
        )
        print("parity check: identical values from both backends")


if __name__ == "__main__":
    main()
