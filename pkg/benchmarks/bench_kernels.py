#!/usr/bin/env python3
"""Numba vs numpy timings for the enumeration and analysis kernels.

Workload: every residuated multiplication on the largest chain (default: the
5-element chain, 232848 tables).  Each kernel is run once to warm up (numba
compiles on first call), then timed over ``--repeat`` runs; outputs of the two
backends are compared.

    python benchmarks/bench_kernels.py --size 5 --repeat 3
"""

import argparse
import time

import numpy as np

from resbinar import kernels
from resbinar._accel import NUMBA_AVAILABLE
from resbinar.frames import frame_order, prime_filters
from resbinar.search import FULL_ORDER, enumerate_lattices, make_plan


def best_of(fn, repeat):
    fn()  # warm-up / compile
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--frames", type=int, default=20000, help="tables for the frame kernel")
    args = ap.parse_args()

    if not NUMBA_AVAILABLE:
        raise SystemExit("numba is disabled (RESBINAR_DISABLE_NUMBA); nothing to compare")

    lat = [L for L in enumerate_lattices(args.size, distributive_only=True)][-1]
    plan = make_plan(lat)
    lb_ptr, lb_idx = plan.lb
    pr_ptr, pr_a, pr_b = plan.pairs
    ext_ptr, ext_idx = plan.ext
    leq = plan.leq
    join = plan.join
    meet = np.ascontiguousarray(lat.meet)
    prefix = np.zeros(0, dtype=np.int64)
    cap = 1 << 20

    cells = lambda mod: getattr(kernels, f"enumerate_cells_{mod}")(
        lat.n, leq, join, lb_ptr, lb_idx, pr_ptr, pr_a, pr_b, prefix, cap)
    vals, count = kernels.enumerate_cells_nb(lat.n, leq, join, lb_ptr, lb_idx, pr_ptr,
                                             pr_a, pr_b, prefix, cap)
    vals = np.ascontiguousarray(vals[:count])
    tables = kernels.extend_tables_nb(vals, ext_ptr, ext_idx, join, lat.n, lat.bot)
    ldiv, rdiv, _ = kernels.residuals_nb(leq, join, lat.bot, tables)
    pts = prime_filters(lat)
    points = np.array(pts, dtype=np.uint64)
    upmask = np.array([lat.upset_mask(x) for x in range(lat.n)], dtype=np.uint64)
    le = np.ascontiguousarray(frame_order(pts, "contains"))
    few = tables[:args.frames]

    cases = [
        ("enumerate_cells", lambda m: (lambda r: (r[0][:r[1]], r[1]))(cells(m))),
        ("extend_tables", lambda m: getattr(kernels, f"extend_tables_{m}")(
            vals, ext_ptr, ext_idx, join, lat.n, lat.bot)),
        ("residuals", lambda m: getattr(kernels, f"residuals_{m}")(leq, join, lat.bot, tables)),
        ("analyze", lambda m: getattr(kernels, f"analyze_{m}")(
            leq, meet, join, lat.top, tables, ldiv, rdiv, FULL_ORDER, 0, 0)),
        ("frame_conditions", lambda m: getattr(kernels, f"frame_conditions_{m}")(
            points, upmask, le, few, kernels.V_CONTAINS)),
    ]

    print(f"lattice: {lat.n}-element chain, {count} tables, best of {args.repeat}")
    print(f"{'kernel':<18} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  match")
    for name, run in cases:
        t_nb, out_nb = best_of(lambda: run("nb"), args.repeat)
        t_np, out_np = best_of(lambda: run("np"), args.repeat)
        print(f"{name:<18} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x  {same(out_nb, out_np)}")


if __name__ == "__main__":
    main()
