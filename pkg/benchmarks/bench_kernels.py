"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--sizes 2:20,2:40,3:20]

Each line reports the best wall time per backend and the speedup.  The
backends must agree exactly; a mismatch aborts the run.
"""

import argparse
import random
import sys
import time
from itertools import combinations

from hefty._kernels import backends
from hefty.euclidean import random_generic_set, random_queries


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _cases(d, n, seed):
    ps = random_generic_set(d, n, seed)
    _, coords = ps.integer_coords
    rng = random.Random(seed)
    qs = random_queries(ps, 200, rng)
    s = 1009  # random_queries uses this denominator
    iq = [[int(x * s) for x in q] for q in qs]
    scoords = [[x * s for x in row] for row in coords]
    weights = [rng.randint(-2000, 2000) for _ in range(n)]
    simplices = list(combinations(range(n), d + 1))
    return {
        "heft_table": lambda m: m.heft_table(coords),
        "heft_table(weighted)": lambda m: m.heft_table(coords, weights),
        "depths": lambda m: m.depths(scoords, iq),
        "locate": lambda m: m.locate(scoords, simplices, iq[0]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sizes", default="2:20,2:40,3:20,3:30,4:16")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    mods = backends()
    if len(mods) < 2:
        print("compiled backend not built; only", ", ".join(mods), file=sys.stderr)
    names = sorted(mods, key=lambda k: k != "python")
    print(f"{'kernel':<22}{'d':>3}{'n':>5}" + "".join(f"{k:>12}" for k in names) + f"{'speedup':>10}")
    for size in args.sizes.split(","):
        d, n = map(int, size.split(":"))
        for label, call in _cases(d, n, args.seed).items():
            times, results = [], []
            for name in names:
                t, out = _best(lambda: call(mods[name]), args.repeat)
                times.append(t)
                results.append(out)
            if any(list(r) != list(results[0]) for r in results[1:]):
                sys.exit(f"backends disagree on {label} d={d} n={n}")
            speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
            print(f"{label:<22}{d:>3}{n:>5}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
