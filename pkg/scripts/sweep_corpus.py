"""Solver soundness sweep over generated corpora.

Runs the constructive solver against the exact oracle (where feasible)
and the penalty budget over:

  * every skeletal triangulation up to a small vertex count,
  * every extremal family member for a range of scales,
  * random plane triangulations over a size/seed grid.

Prints one line per corpus slice and a final failure count.  This is the
long-form version of what tests/test_acceptance.py asserts quickly.
"""

from __future__ import annotations

import argparse
import time

from tridom.exact import dominates, exact_min_domset
from tridom.generators import (
    FAMILY_KINDS,
    FamilySpec,
    GenerationError,
    enumerate_skeletal,
    family,
    random_triangulation,
)
from tridom.penalty import budget
from tridom.plane import validate
from tridom.solver import solve

def sweep_exhaustive(max_n: int) -> int:
    fails = total = 0
    t0 = time.time()
    for g in enumerate_skeletal(max_n):
        v = validate(g, "skeletal")
        out = solve(v)
        total += 1
        if out.sporadic:
            gamma = len(exact_min_domset(g, cap=g.n))
            ok = (dominates(g, out.dom_set)
                  and out.size == gamma == budget(v) + 1)
        else:
            ok = dominates(g, out.dom_set) and out.size <= budget(v)
        if not ok:
            fails += 1
            print(f"FAIL exhaustive: {g.rot}")
    print(f"exhaustive <= {max_n}: {total} graphs, {fails} failures, "
          f"{time.time() - t0:.0f}s")
    return fails


def sweep_families(max_k: int) -> int:
    fails = 0
    for kind in FAMILY_KINDS:
        for k in range(1, max_k + 1):
            try:
                v = family(FamilySpec(kind, k))
            except GenerationError:
                continue
            out = solve(v)
            ok = dominates(v.graph, out.dom_set) and out.size <= out.bound
            if not ok:
                fails += 1
            print(f"{kind} k={k}: n={v.graph.n} size={out.size} "
                  f"bound={out.bound} {'ok' if ok else 'FAIL'}")
    return fails


def sweep_random(sizes, seeds) -> int:
    fails = 0
    for n in sizes:
        for seed in seeds:
            v = random_triangulation(n, seed)
            t0 = time.time()
            out = solve(v)
            ok = dominates(v.graph, out.dom_set) and out.size <= out.bound
            if not ok:
                fails += 1
            print(f"random n={n} seed={seed}: size={out.size} "
                  f"bound={out.bound} t={time.time() - t0:.2f}s "
                  f"{'ok' if ok else 'FAIL'}")
    return fails


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=9,
                    help="exhaustive corpus cutoff")
    ap.add_argument("--max-k", type=int, default=6,
                    help="family scale cutoff")
    ap.add_argument("--sizes", default="50,100,200",
                    help="random triangulation sizes")
    ap.add_argument("--seeds", default="0,1,2,3,4")
    args = ap.parse_args()
    fails = 0
    fails += sweep_exhaustive(args.max_n)
    fails += sweep_families(args.max_k)
    fails += sweep_random([int(s) for s in args.sizes.split(",")],
                          [int(s) for s in args.seeds.split(",")])
    print(f"total failures: {fails}")
    raise SystemExit(1 if fails else 0)


if __name__ == "__main__":
    main()
