"""Compare the compiled and pure-Python census kernels.

    python benchmarks/bench_census.py [--tables 200000]

Both backends scan the same index ranges; the script checks the hits agree
before printing throughput.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from leibniz import _kernels


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tables", type=int, default=200_000, help="tables scanned per case")
    args = ap.parse_args(argv)

    compiled = _kernels.compiled_backend
    pure = _kernels.python_backend
    if compiled is None:
        print("compiled backend not built; only the pure-Python kernel is available")
        return 1

    cases = [(2, 2, 0, 2**8), (3, 2, 0, 3**8), (2, 3, 0, args.tables), (2, 3, 2**26, 2**26 + args.tables)]
    print(f"{'field':>6} {'dim':>3} {'tables':>8} {'hits':>6} {'cython s':>9} {'python s':>9} {'speedup':>8}")
    for p, n, lo, hi in cases:
        tc, hc = _time(compiled.filter_range, p, n, lo, hi)
        tp, hp = _time(pure.filter_range, p, n, lo, hi)
        assert np.array_equal(np.asarray(hc), np.asarray(hp)), "backends disagree"
        print(f"GF({p}) {n:>3} {hi - lo:>8} {len(hc):>6} {tc:>9.4f} {tp:>9.4f} {tp / max(tc, 1e-9):>7.0f}x")

    rng = np.random.default_rng(0)
    digits = rng.integers(0, 2, size=(args.tables, 27), dtype=np.int64)
    tc, mc = _time(compiled.check_tables, 2, 3, digits)
    tp, mp = _time(pure.check_tables, 2, 3, digits)
    assert np.array_equal(np.asarray(mc), np.asarray(mp)), "backends disagree"
    print(f"random GF(2) dim 3 tables: cython {tc:.4f} s, python {tp:.4f} s, {tp / max(tc, 1e-9):.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
