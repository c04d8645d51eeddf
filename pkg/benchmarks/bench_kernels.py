"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--prufer-n 8] [--universe-n 12] [--repeat 3]

Both backends are imported directly, so the environment switch is not needed.
Results are also cross-checked: each workload must return identical output.
"""

from __future__ import annotations

import argparse
import sys
import time

from treedeck import _pykernels
from treedeck.enumeration import enumerate_free_trees

try:
    from treedeck import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads(args):
    n = args.prufer_n
    yield f"prufer sweep n={n} ({n ** (n - 2)} sequences)", lambda k: (
        lambda: k.prufer_class_codes(n, 0, n)
    )
    adjs = [t.adj for t in enumerate_free_trees(args.universe_n)]
    yield f"card codes, all {len(adjs)} trees n={args.universe_n}", lambda k: (
        lambda: [k.card_codes(a) for a in adjs]
    )
    yield f"vertex codes, all {len(adjs)} trees n={args.universe_n}", lambda k: (
        lambda: [k.vertex_codes(a) for a in adjs]
    )


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--prufer-n", type=int, default=8)
    p.add_argument("--universe-n", type=int, default=12)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `python3 setup.py build_ext --inplace`", file=sys.stderr)
        return 2

    print(f"{'workload':<44} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    status = 0
    for label, make in workloads(args):
        tp, out_p = best_of(make(_pykernels), args.repeat)
        tc, out_c = best_of(make(_ckernels), args.repeat)
        if out_p != out_c:
            print(f"MISMATCH in {label}", file=sys.stderr)
            status = 1
        print(f"{label:<44} {tp:>10.3f} {tc:>10.3f} {tp / tc:>7.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
