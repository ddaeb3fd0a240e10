"""Compare the compiled kernels against the numpy fallback.

Runs the hot table kernels on three catalog groups and prints per-call
times for both lanes.  Usage: python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from bockstein import _kernels_py
from bockstein.catalog import ut3_table, ut4_mod2_table
from bockstein.oracle import FiniteGroup

try:
    from bockstein import _kernels_c
except ImportError:
    _kernels_c = None

GROUPS = [
    ("ut3_mod(3,1)", ut3_table(3, 1)),
    ("ut4_mod2", ut4_mod2_table()),
    ("ut3_mod(2,3)", ut3_table(2, 3)),
]


def inverses_of(g: FiniteGroup) -> np.ndarray:
    inv = np.empty(g.order, dtype=np.intc)
    for x in range(g.order):
        inv[x] = int(np.where(g.table[x] == g.identity)[0][0])
    return inv


def timed(fn, *args, repeat=5):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_group(name: str, g: FiniteGroup):
    inv = inverses_of(g)
    all_elems = list(range(g.order))
    cases = [
        ("assoc_violation", (g.table,)),
        ("closure", (g.table, [g.order - 1])),
        ("power_map_image", (g.table, 2)),
        ("element_orders", (g.table, g.identity)),
        ("center_elements", (g.table,)),
        ("commutator_values", (g.table, inv, all_elems, all_elems)),
    ]
    print(f"\n{name} (order {g.order})")
    header = f"  {'kernel':<20} {'numpy':>12} {'cython':>12} {'speedup':>9}"
    print(header)
    for label, args in cases:
        py_time, py_out = timed(getattr(_kernels_py, label), *args)
        if _kernels_c is None:
            print(f"  {label:<20} {py_time * 1e3:>10.3f}ms {'-':>12} {'-':>9}")
            continue
        c_time, c_out = timed(getattr(_kernels_c, label), *args)
        assert py_out == c_out, f"{label} disagrees on {name}"
        ratio = py_time / c_time if c_time else float("inf")
        print(f"  {label:<20} {py_time * 1e3:>10.3f}ms {c_time * 1e3:>10.3f}ms "
              f"{ratio:>8.1f}x")


def main():
    if _kernels_c is None:
        print("compiled backend not built; timing the numpy lane only")
    for name, g in GROUPS:
        bench_group(name, g)


if __name__ == "__main__":
    main()
