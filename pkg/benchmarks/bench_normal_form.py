"""Time the normal-form kernel with numba on and off.

Each path runs in its own process because PARABOLICA_NUMBA is read at import.

    python3 benchmarks/bench_normal_form.py [--words 200] [--strands 4 6 8] [--lengths 20 80 320]
"""
import argparse
import json
import os
import subprocess
import sys
import time


def worker(args):
    import numpy as np

    from parabolica import _kernels
    from parabolica.braid import random_word

    rng = np.random.default_rng(args.seed)
    kernel = _kernels.normal_form_kernel
    kernel(np.array([1], dtype=np.int64), 2)  # compile before timing
    rows = []
    for n in args.strands:
        for length in args.lengths:
            batch = [np.array(random_word(rng, n, length).letters, dtype=np.int64) for _ in range(args.words)]
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                for letters in batch:
                    kernel(letters, n)
                best = min(best, time.perf_counter() - start)
            digest = [int(kernel(b, n)[0]) for b in batch[:5]]
            rows.append({"strands": n, "length": length, "seconds": best, "digest": digest})
    print(json.dumps({"numba": _kernels.USE_NUMBA, "rows": rows}))


def measure(flag, argv):
    env = dict(os.environ, PARABOLICA_NUMBA=flag)
    out = subprocess.run([sys.executable, __file__, "--worker", *argv], env=env, check=True,
                         capture_output=True, text=True).stdout
    return json.loads(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=200)
    ap.add_argument("--strands", type=int, nargs="+", default=[4, 6, 8])
    ap.add_argument("--lengths", type=int, nargs="+", default=[20, 80, 320])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.worker:
        worker(args)
        return
    argv = [a for a in sys.argv[1:]]
    fast, slow = measure("1", argv), measure("0", argv)
    if not fast["numba"]:
        print("numba unavailable; both columns time the plain path")
    print(f"{'strands':>7} {'length':>6} {'numba ms':>10} {'python ms':>10} {'speedup':>8}")
    for a, b in zip(fast["rows"], slow["rows"]):
        assert a["digest"] == b["digest"], "paths disagree"
        print(f"{a['strands']:>7} {a['length']:>6} {1e3 * a['seconds']:>10.2f} "
              f"{1e3 * b['seconds']:>10.2f} {b['seconds'] / a['seconds']:>7.1f}x")


if __name__ == "__main__":
    main()
