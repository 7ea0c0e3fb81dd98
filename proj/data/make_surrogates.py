#!/usr/bin/env python3
"""Regenerates the surrogate SALBP-1 instances in this directory.

The surrogates follow the plain-text .alb layout used by the public SALBP
benchmark sets (cycle time 1000). Task-time totals are chosen so that the
derived mixed-model workloads land near the published workload / cycle-time
ratios of the corresponding benchmark instances. Replace them with the
original repository files when those are available; the loader accepts both.
"""
import random
from pathlib import Path

HERE = Path(__file__).resolve().parent

# name, task count, target total time, edge density, seed
SURROGATES = [
    ("n20_26_surrogate.alb", 20, 9650, 0.15, 2026),
    ("n50_25_surrogate.alb", 50, 6050, 0.10, 5025),
    ("n100_34_surrogate.alb", 100, 14550, 0.10, 10034),
]


def transitive_pairs(n, edges):
    succ = {i: set() for i in range(1, n + 1)}
    for a, b in edges:
        succ[a].add(b)
    reach = {}
    for i in range(n, 0, -1):
        r = set()
        for s in succ[i]:
            r.add(s)
            r |= reach[s]
        reach[i] = r
    return sum(len(r) for r in reach.values())


def make(n, total, density, seed):
    rng = random.Random(seed)
    raw = [rng.lognormvariate(0.0, 0.8) for _ in range(n)]
    scale = total / sum(raw)
    times = [max(1, min(1000, round(x * scale))) for x in raw]
    # fix rounding / clamping drift on the largest non-capped entries
    drift = total - sum(times)
    order = sorted(range(n), key=lambda i: -times[i])
    k = 0
    while drift != 0:
        i = order[k % n]
        step = 1 if drift > 0 else -1
        if 1 <= times[i] + step <= 1000:
            times[i] += step
            drift -= step
        k += 1
    edges = []
    for j in range(2, n + 1):
        for i in range(max(1, j - 12), j):
            if rng.random() < density:
                edges.append((i, j))
    return times, edges


def write(path, n, times, edges):
    os_ = 2.0 * transitive_pairs(n, edges) / (n * (n - 1))
    lines = ["<number of tasks>", str(n), "", "<cycle time>", "1000", "",
             "<order strength>", f"{os_:.3f}".replace(".", ","), "", "<task times>"]
    lines += [f"{i} {t}" for i, t in enumerate(times, start=1)]
    lines += ["", "<precedence relations>"]
    lines += [f"{a},{b}" for a, b in edges]
    lines += ["", "<end>", ""]
    path.write_text("\n".join(lines))


if __name__ == "__main__":
    for name, n, total, density, seed in SURROGATES:
        times, edges = make(n, total, density, seed)
        write(HERE / name, n, times, edges)
        print(name, n, sum(times), len(edges))
