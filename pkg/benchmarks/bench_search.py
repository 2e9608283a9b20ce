"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs full COUNT_ALL walks on both backends for each requested order,
checks they agree exactly, and prints a timing table.

    python3 benchmarks/bench_search.py
    python3 benchmarks/bench_search.py --orders 11,17,19,25,27 --repeat 3
    python3 benchmarks/bench_search.py --no-strong --orders 11,17,19
"""

import argparse
import sys
import time

from skolem import _pysearch
from skolem.search import _fastsearch


def _time_run(mod, n, strong, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = mod.run_search(n, strong, 0, 0)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--orders",
        default="11,17,19,25",
        help="comma-separated odd orders to walk (default: 11,17,19,25)",
    )
    parser.add_argument(
        "--no-strong",
        action="store_true",
        help="walk plain Skolem starters instead of strong ones",
    )
    parser.add_argument(
        "--repeat", type=int, default=3, help="best-of repetitions (default: 3)"
    )
    args = parser.parse_args(argv)

    try:
        orders = [int(tok) for tok in args.orders.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"--orders must be comma-separated ints, got {args.orders!r}")
    strong = not args.no_strong

    if _fastsearch is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    kind = "strong" if strong else "plain"
    print(f"exhaustive count of {kind} skolem starters, best of {args.repeat}")
    print(f"{'order':>5}  {'count':>9}  {'nodes':>11}  {'compiled':>9}  {'pure':>9}  {'speedup':>7}")
    for n in orders:
        fast_result, fast_t = _time_run(_fastsearch, n, strong, args.repeat)
        pure_result, pure_t = _time_run(_pysearch, n, strong, args.repeat)
        if fast_result != pure_result:
            print(f"backend mismatch at n={n}: {fast_result} != {pure_result}",
                  file=sys.stderr)
            return 1
        count, nodes, _ = fast_result
        speedup = pure_t / fast_t if fast_t > 0 else float("inf")
        print(
            f"{n:>5}  {count:>9}  {nodes:>11}  {fast_t:>8.3f}s  {pure_t:>8.3f}s  {speedup:>6.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
