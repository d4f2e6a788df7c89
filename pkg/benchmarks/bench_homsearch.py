"""Time the compiled and pure-Python homomorphism search on fixed workloads.

    python3 benchmarks/bench_homsearch.py [--repeat N] [--json]
"""

import argparse
import json
import random
import statistics
import time

from finpres import _kernel, relcore as rc


def _random_graph(seed, n, p):
    rng = random.Random(seed)
    return rc.graph(range(n), [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def workloads():
    P = rc.petersen()
    yield "petersen automorphisms", lambda b: rc.all_homomorphisms(P, P, injective=True, backend=b)
    C9 = rc.cycle(9)
    yield "C9 -> K3, all maps", lambda b: rc.all_homomorphisms(C9, rc.complete(3), backend=b)
    G = _random_graph(1, 14, 0.3)
    yield "random 14-vertex graph -> K3", lambda b: rc.all_homomorphisms(G, rc.complete(3), limit=1, backend=b)
    H = _random_graph(2, 9, 0.5)
    yield "K4 into random 9-vertex graph, all", lambda b: rc.all_homomorphisms(rc.complete(4), H, backend=b)
    I, a, x = rc.SHIPPED_INDICATOR
    A = rc.indicator_product(rc.cycle(3, directed=True), I, a, x)
    B = rc.indicator_product(rc.path(2, directed=True), I, a, x)
    yield "indicator products, C3 vs P2", lambda b: rc.all_homomorphisms(A, B, limit=1, backend=b)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="print machine-readable results")
    args = ap.parse_args()
    backends = ["python"] + (["compiled"] if _kernel._compiled is not None else [])
    rows = []
    for name, run in workloads():
        row = {"workload": name}
        for b in backends:
            row[b] = best_of(lambda: run(b), args.repeat)[0]
        if "compiled" in row:
            row["speedup"] = row["python"] / row["compiled"] if row["compiled"] else float("inf")
        rows.append(row)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    if "compiled" not in backends:
        print("compiled backend not available; timing the python backend only")
    print(f"{'workload':40} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for r in rows:
        comp = f"{r['compiled'] * 1e3:9.2f}ms" if "compiled" in r else f"{'-':>10}"
        sp = f"{r['speedup']:7.1f}x" if "speedup" in r else f"{'-':>8}"
        print(f"{r['workload']:40} {r['python'] * 1e3:9.2f}ms {comp} {sp}")


if __name__ == "__main__":
    main()
