"""Time the compiled and pure-Python oracle backends on the same graphs.

    python benchmarks/bench_oracle.py [--repeat 3]
"""

import argparse
import time

from vcsim import oracle
from vcsim.graph import TopologySpec, generate, is_connected

CASES = [
    ("enumerate", "random_gnp", 14, dict(edge_prob=0.3)),
    ("enumerate", "random_gnp", 18, dict(edge_prob=0.5)),
    ("enumerate", "complete", 16, {}),
    ("bnb", "random_geometric", 30, dict(radius=0.35)),
    ("bnb", "random_geometric", 50, dict(radius=0.25)),
    ("bnb", "random_gnp", 40, dict(edge_prob=0.2)),
]


def graphs_for(kind, n, params, count=5):
    out, seed = [], 0
    while len(out) < count:
        g = generate(TopologySpec(kind, n, seed=seed, **params))
        seed += 1
        if is_connected(g):
            out.append(g)
        if kind in ("complete", "path", "cycle", "star"):
            break
    return out


def best_time(fn, graphs, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for g in graphs:
            fn(g, backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if oracle.BACKEND != "compiled":
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    solvers = {"enumerate": oracle.min_vertex_cover_enumerate, "bnb": oracle.min_vertex_cover_bnb}
    print(f"{'method':<10} {'graph':<26} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for method, kind, n, params in CASES:
        graphs = graphs_for(kind, n, params)
        fn = solvers[method]
        for g in graphs:
            assert fn(g, "python") == fn(g, "compiled")
        py = best_time(fn, graphs, "python", args.repeat)
        c = best_time(fn, graphs, "compiled", args.repeat)
        label = f"{kind}(n={n}) x{len(graphs)}"
        print(f"{method:<10} {label:<26} {py:>10.4f} {c:>11.4f} {py / c:>7.1f}x")


if __name__ == "__main__":
    main()
