"""Exhaustive searches over small building blocks.

Two subcommands:

  gadgets   Census of rooted behaviour classes over all small rooted
            near-triangulations, reporting the smallest representative
            with each (class, s, penalty) signature.  This is how the
            bundled replacement catalog was found and can re-confirm
            that every catalog entry is minimal.

  hard12    Search all 12-vertex disk triangulations (no boundary
            chords, min degree 3) for a boundary vertex L whose removal
            leaves a graph that no one or two closed neighborhoods can
            cover.  Hits are the seeds of the hardest known family for
            the penalty bound.

Both searches are pure CPU; expect minutes for `gadgets` and hours for
the full `hard12` sweep.
"""

from __future__ import annotations

import argparse
import json
import time

from tridom.exact import acts_as
from tridom.generators import (
    _disk_triangle_lists,
    enumerate_near_triangulations,
    enumerate_skeletal,
)
from tridom.penalty import phi_half
from tridom.plane import validate

EDGE_TARGETS = {
    "OR": (1, 3), "A": (1, 5), "B": (1, 5), "A+B": (2, 10),
    "AND": (1, 7), "L+R": (1, 7), "OCTA": (1, 8),
    "L-OR-R": (1, 9), "L": (1, 9), "R": (1, 9), "None": (1, 10),
}
VERTEX_TARGETS = {"AB": (1, 5), "LR": (1, 7), "Nope": (1, 10)}


def search_gadgets(out_path: str) -> None:
    t0 = time.time()
    hits = {k: [] for k in (*EDGE_TARGETS, *VERTEX_TARGETS)}

    print("vertex-rooted census over skeletal graphs with <= 6 vertices")
    for g in enumerate_skeletal(6):
        for u in sorted(g.boundary_set()):
            try:
                view = validate(g, "vertex-rooted", (u,))
            except Exception:
                continue
            a = acts_as(view)
            if a.kind in VERTEX_TARGETS:
                hits[a.kind].append(
                    (g.n, (a.s, phi_half(view)), u, dict(g.rot),
                     list(g.outer_walk()))
                )
    print(f"vertex-rooted done t={time.time() - t0:.0f}s")

    corpus = enumerate_near_triangulations(9)
    print(f"edge-rooted census over {len(corpus)} near-triangulations <= 9")
    for idx, g in enumerate(corpus):
        for (u, v) in g.outer_face():
            for (ru, rv) in ((u, v), (v, u)):
                view = validate(g, "edge-rooted", (ru, rv))
                a = acts_as(view)
                if a.kind in EDGE_TARGETS:
                    hits[a.kind].append(
                        (g.n, (a.s, phi_half(view)), (ru, rv), dict(g.rot),
                         list(g.outer_walk()))
                    )
        if idx and idx % 400 == 0:
            print(f"  {idx} graphs t={time.time() - t0:.0f}s")

    report = {}
    for kind, lst in hits.items():
        target = EDGE_TARGETS.get(kind) or VERTEX_TARGETS[kind]
        exact = sorted((h for h in lst if h[1] == target), key=lambda h: h[0])
        report[kind] = {
            "total": len(lst),
            "exact_signature": len(exact),
            "smallest_exact": exact[:3],
        }
        print(f"{kind}: total={len(lst)} exact-signature={len(exact)} "
              f"smallest n: {[h[0] for h in exact[:3]]}")
    with open(out_path, "w") as f:
        json.dump(report, f, default=str, indent=1)
    print(f"wrote {out_path} t={time.time() - t0:.0f}s")


def search_hard12(out_path: str) -> None:
    t0 = time.time()
    out = open(out_path, "w")
    total_hits = 0
    for b in range(3, 13):
        i = 12 - b
        bnd = tuple(range(b))
        consec = {frozenset((t, (t + 1) % b)) for t in range(b)}
        nlists = nhit = 0
        for tris, used in _disk_triangle_lists(bnd, i, b):
            if used != i:
                continue
            nlists += 1
            adj = [0] * 12
            for (x, y, z) in tris:
                adj[x] |= (1 << y) | (1 << z)
                adj[y] |= (1 << x) | (1 << z)
                adj[z] |= (1 << x) | (1 << y)
            masks = [adj[v] | (1 << v) for v in range(12)]
            if any(bin(adj[v]).count("1") < 3 for v in range(12)):
                continue
            # reject boundary chords
            bad = False
            for u in range(b):
                nb = adj[u] & ((1 << b) - 1)
                while nb:
                    w = (nb & -nb).bit_length() - 1
                    nb &= nb - 1
                    if w > u and frozenset((u, w)) not in consec:
                        bad = True
                        break
                if bad:
                    break
            if bad:
                continue
            full = (1 << 12) - 1
            for L in range(b):
                target = full & ~masks[L]
                if any(masks[v] & target == target for v in range(12)):
                    continue
                ok = True
                for u in range(12):
                    if not ok:
                        break
                    for v in range(u + 1, 12):
                        if (masks[u] | masks[v]) & target == target:
                            ok = False
                            break
                if ok:
                    nhit += 1
                    total_hits += 1
                    out.write(f"b={b} L={L} tris={tris!r}\n")
                    out.flush()
            if nlists % 200000 == 0:
                print(f"b={b} progress {nlists} t={time.time() - t0:.0f}s",
                      flush=True)
        print(f"b={b} done lists={nlists} hits={nhit} "
              f"t={time.time() - t0:.0f}s", flush=True)
    out.close()
    print(f"total hits: {total_hits}; wrote {out_path}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    g = sub.add_parser("gadgets", help="rooted-behaviour census")
    g.add_argument("-o", "--output", default="gadget_census.json")
    h = sub.add_parser("hard12", help="12-vertex hard block search")
    h.add_argument("-o", "--output", default="hard12_hits.txt")
    args = ap.parse_args()
    if args.cmd == "gadgets":
        search_gadgets(args.output)
    else:
        search_hard12(args.output)


if __name__ == "__main__":
    main()
