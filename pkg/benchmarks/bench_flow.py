"""Time the compiled and pure-Python max-flow kernels on the same split networks.

Usage: python3 benchmarks/bench_flow.py [--sizes 50 200 800] [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit

from cpsep import _flow_py, flow
from cpsep.graph import Graph


def split_network(g: Graph, s: int, t: int):
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    tails, heads, caps = [src, 2 * t + 1], [2 * s, snk], [n + 1, n + 1]
    for v in range(n):
        tails.append(2 * v)
        heads.append(2 * v + 1)
        caps.append(n + 1 if v in (s, t) else 1)
        for u in g.neighbors(v):
            tails.append(2 * v + 1)
            heads.append(2 * u)
            caps.append(n + 1)
    return 2 * n + 2, tails, heads, caps, src, snk


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 200, 800])
    ap.add_argument("--degree", type=float, default=6.0)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    try:
        from cpsep._flow_ext import dinic as compiled
    except ImportError:
        compiled = None
    print(f"default backend: {flow.BACKEND}")
    print(f"{'n':>6} {'arcs':>8} {'flow':>5} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    rng = random.Random(args.seed)
    for n in args.sizes:
        p = args.degree / (n - 1)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        net = split_network(g, 0, n - 1)
        py_val = _flow_py.dinic(*net)[0]
        py_ms = min(timeit.repeat(lambda: _flow_py.dinic(*net), number=1, repeat=args.repeat)) * 1e3
        if compiled is None:
            print(f"{n:>6} {len(net[1]):>8} {py_val:>5} {py_ms:>10.2f} {'n/a':>10} {'n/a':>8}")
            continue
        assert compiled(*net)[0] == py_val, "kernels disagree"
        cy_ms = min(timeit.repeat(lambda: compiled(*net), number=1, repeat=args.repeat)) * 1e3
        print(f"{n:>6} {len(net[1]):>8} {py_val:>5} {py_ms:>10.2f} {cy_ms:>10.2f} {py_ms / cy_ms:>7.1f}x")


if __name__ == "__main__":
    main()
