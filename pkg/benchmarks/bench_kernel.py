"""Compare the compiled collection kernel with the pure-Python fallback.

Two measurements:

* micro: mean time per multiplication on random element pairs, for a few
  presentations of increasing length and class;
* end to end: one cross-validation sweep, run in a subprocess per kernel
  (the kernel is fixed at import time through ``PGCAP_KERNEL``).

Usage: ``python3 benchmarks/bench_kernel.py [--pairs N] [--sweep-order N] [--json out.json]``
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time

from pgcap.capability import witness_search
from pgcap.families import FamilyParams, build_extraspecial, build_family, catalog_presentation
from pgcap.kernel import CCollector, PyCollector
from pgcap.pcgroup import direct_product, cyclic, random_element


def _subjects():
    yield "T1i(2,2,2) order 64", build_family(FamilyParams("T1i", 2, 2, 2, 2))
    yield "T2ii(3,4,2,2) order 3^6", build_family(FamilyParams("T2ii", 3, 4, 2, 2))
    yield "extraspecial 2^7", build_extraspecial(2, 3, "D")
    yield "extraspecial 3^7 (+)", build_extraspecial(3, 3, "+")
    G = catalog_presentation(2, 2, 2, 1, 0, 0)
    H = witness_search(G, 2).witness.H
    yield f"class-3 witness order {H.order}", H
    K = catalog_presentation(2, 3, 1, 1, 0, 0)
    yield "C8 x C4 x K order 2^10", direct_product(direct_product(cyclic(2, 3), cyclic(2, 2)), K)


def _time_mul(col, pairs) -> float:
    mul = col.mul
    t0 = time.perf_counter()
    for x, y in pairs:
        mul(x, y)
    return (time.perf_counter() - t0) / len(pairs)


def micro(n_pairs: int, seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for name, G in _subjects():
        pairs = [(random_element(G, rng), random_element(G, rng)) for _ in range(n_pairs)]
        args = (G.rel_orders, G.power_tails, dict(G.comm_tails))
        py = _time_mul(PyCollector(*args), pairs)
        row = {"group": name, "n": G.n, "python_us": py * 1e6}
        if CCollector is not None:
            cc = CCollector(*args)
            # same answers before timing
            assert all(cc.mul(x, y) == PyCollector(*args).mul(x, y) for x, y in pairs[:200])
            c = _time_mul(cc, pairs)
            row.update(compiled_us=c * 1e6, speedup=py / c)
        rows.append(row)
    return rows


SWEEP = "from pgcap.capability import cross_validate; import sys; r = cross_validate({p}, {n}, {m}); sys.exit(len(r.hard_conflicts))"


def end_to_end(p: int, max_order: int, m: int) -> dict:
    out = {}
    for kernel in ("compiled", "python"):
        if kernel == "compiled" and CCollector is None:
            continue
        env = dict(os.environ, PGCAP_KERNEL=kernel)
        t0 = time.perf_counter()
        subprocess.run([sys.executable, "-c", SWEEP.format(p=p, n=max_order, m=m)], env=env, check=True)
        out[kernel] = time.perf_counter() - t0
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--pairs", type=int, default=5000)
    ap.add_argument("--sweep-p", type=int, default=2)
    ap.add_argument("--sweep-order", type=int, default=32)
    ap.add_argument("--sweep-budget", type=int, default=2)
    ap.add_argument("--skip-sweep", action="store_true")
    ap.add_argument("--json", help="also write results here")
    args = ap.parse_args(argv)

    rows = micro(args.pairs)
    print(f"{'group':34s} {'n':>3s} {'python us':>10s} {'compiled us':>12s} {'speedup':>8s}")
    for r in rows:
        c = f"{r['compiled_us']:12.2f} {r['speedup']:7.1f}x" if "compiled_us" in r else f"{'-':>12s} {'-':>8s}"
        print(f"{r['group']:34s} {r['n']:3d} {r['python_us']:10.2f} {c}")
    result = {"micro": rows}
    if not args.skip_sweep:
        e2e = end_to_end(args.sweep_p, args.sweep_order, args.sweep_budget)
        result["sweep"] = {"p": args.sweep_p, "max_order": args.sweep_order, "budget": args.sweep_budget, **e2e}
        print(f"\ncross-validation p={args.sweep_p} order<={args.sweep_order} budget={args.sweep_budget}:")
        for k, v in e2e.items():
            print(f"  {k:9s} {v:7.2f} s")
        if "compiled" in e2e:
            print(f"  speedup   {e2e['python'] / e2e['compiled']:7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
