"""Compare the compiled embedding-search kernel with the interpreted fallback.

Each backend runs in its own subprocess, because the choice is made once at
import time from GENUSLAB_NO_NUMBA.

    python benchmarks/bench_search.py [--repeat 3] [--quick]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from genuslab._accel import USING_NUMBA
from genuslab.embed.search import search_nodes
from genuslab.graphs import SimpleGraph, complete_bipartite, complete_graph


def glued(a, b):
    # share vertex 0 of b with the last vertex of a
    n = a.vertex_count
    m = {v: (n - 1 if v == 0 else n + v - 1) for v in range(b.vertex_count)}
    edges = list(a.edges) + [(m[u], m[v]) for u, v in b.edges]
    return SimpleGraph.from_edges(n + b.vertex_count - 1, edges)


cases = json.loads(sys.argv[1])
repeat = int(sys.argv[2])
build = {
    "K": lambda a: complete_graph(a[0]),
    "B": lambda a: complete_bipartite(a[0], a[1]),
    "KK": lambda a: glued(complete_graph(a[0]), complete_graph(a[1])),
}
# warm-up so compilation is not timed
search_nodes(complete_graph(5), "orientable", 1)
rows = []
for label, kind, args, surface, target in cases:
    g = build[kind](args)
    best = None
    for _ in range(repeat):
        t = time.perf_counter()
        found, nodes = search_nodes(g, surface, target, timeout=600)
        elapsed = time.perf_counter() - t
        best = elapsed if best is None else min(best, elapsed)
    rows.append({"case": label, "found": found, "steps": nodes, "seconds": best})
print(json.dumps({"numba": USING_NUMBA, "rows": rows}))
"""

# K5.K5 is two K5s sharing a vertex
CASES = [
    ("K3,3 in N1", "B", [3, 3], "nonorientable", 1),
    ("K6 in N1", "K", [6], "nonorientable", 1),
    ("K7 in S1", "K", [7], "orientable", 1),
    ("K7 in N2 (refute)", "K", [7], "nonorientable", 2),
    ("K8 in S2", "K", [8], "orientable", 2),
    ("K5.K5 in N1 (refute)", "KK", [5, 5], "nonorientable", 1),
    ("K5.K5 in S1 (refute)", "KK", [5, 5], "orientable", 1),
]


def run_backend(disable: bool, cases, repeat: int) -> dict:
    env = dict(os.environ, GENUSLAB_NO_NUMBA="1" if disable else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(cases), str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs per case")
    parser.add_argument("--quick", action="store_true", help="skip the cases that are slow without numba")
    parser.add_argument("--json", action="store_true", help="print raw results as JSON")
    args = parser.parse_args(argv)

    cases = CASES[:5] if args.quick else CASES
    fast = run_backend(False, cases, args.repeat)
    slow = run_backend(True, cases, args.repeat)
    if args.json:
        print(json.dumps({"compiled": fast, "interpreted": slow}, indent=2))
        return 0
    if not fast["numba"]:
        print("warning: numba unavailable, both columns use the interpreter")
    print(f"{'case':<22} {'steps':>10} {'numba s':>10} {'python s':>10} {'speedup':>9}")
    for a, b in zip(fast["rows"], slow["rows"]):
        if a["found"] != b["found"] or a["steps"] != b["steps"]:
            print(f"{a['case']:<22} backends disagree: {a} vs {b}")
            return 1
        speedup = b["seconds"] / a["seconds"] if a["seconds"] > 0 else float("inf")
        print(f"{a['case']:<22} {a['steps']:>10} {a['seconds']:>10.4f} {b['seconds']:>10.4f} {speedup:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
