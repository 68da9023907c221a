"""Problem-configuration scanning and the penalty functions.

The penalty of a skeletal view is

    value = n + e/2 + f/2

where n counts vertices, e counts low-degree problems (ears, pivoting
triangles, isolated triangles, degree-2 cut vertices) and f counts bad
5-wheels.  Rooted variants exclude contributions tied to the root(s) and add
r/2 for a degree-1 vertex root.  Everything is computed in integer
half-units: ``half_units = 2*n + e + f (+ r)`` and ``floor(value/3.5)`` is
``half_units // 7``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .plane import (
    PlaneGraph,
    SkeletalView,
    Vertex,
    block_cut_tree,
    edge,
)


# =====================================================================
# Configurations
# =====================================================================


@dataclass(frozen=True)
class Configuration:
    """One detected problem configuration.

    kind: ear | pivoting_triangle | isolated_triangle | deg2_cut_vertex |
          bad_5wheel
    witness: the realizing vertices —
        ear: (tip, a, b) the facial triangle with its degree-2 tip first;
        pivoting_triangle: (tip1, tip2, shared) the two tips and the shared
            neighbor;
        isolated_triangle: the three vertices;
        deg2_cut_vertex: (v,);
        bad_5wheel: (hub, r1, r2, r3, r4) hub first, rim in cycle order.
    pairs: for bad_5wheel, the 1-4 boundary 3-pairs it contains.
    """

    kind: str
    witness: Tuple[Vertex, ...]
    pairs: Tuple[Tuple[Vertex, Vertex], ...] = ()

    def vertices(self) -> Set[Vertex]:
        return set(self.witness)


def scan_configurations(view: SkeletalView) -> List[Configuration]:
    """Every problem configuration of the view, each reported exactly once."""
    g = view.graph
    out: List[Configuration] = []
    walk = g.outer_walk()
    occurrences: Dict[Vertex, int] = {}
    for v in walk:
        occurrences[v] = occurrences.get(v, 0) + 1

    # ---- degree-2 classification, grouped by facial triangle -------------
    seen_triangles: Set[FrozenSet[Vertex]] = set()
    for v in g.rot:
        if g.degree(v) != 2:
            continue
        a, b = g.rot[v]
        if occurrences.get(v, 0) >= 2 or not g.has_edge(a, b):
            out.append(Configuration("deg2_cut_vertex", (v,)))
            continue
        tri = frozenset((v, a, b))
        if tri in seen_triangles:
            continue
        seen_triangles.add(tri)
        tips = [x for x in (v, a, b) if g.degree(x) == 2]
        if len(tips) == 1:
            others = tuple(x for x in (a, b))
            out.append(Configuration("ear", (v, *others)))
        elif len(tips) == 2:
            shared = next(x for x in (v, a, b) if g.degree(x) != 2)
            out.append(Configuration("pivoting_triangle", (*tips, shared)))
        else:
            out.append(Configuration("isolated_triangle", (v, a, b)))

    # ---- bad 5-wheels via boundary 3-pairs --------------------------------
    wheels: Dict[FrozenSet[Vertex], Dict] = {}
    for v, w in boundary_pairs(g):
        if g.degree(v) != 3 or g.degree(w) != 3:
            continue
        nv, nw = set(g.rot[v]), set(g.rot[w])
        for hub in (nv & nw) - {v, w}:
            rest_v = nv - {w, hub}
            rest_w = nw - {v, hub}
            if len(rest_v) != 1 or len(rest_w) != 1:
                continue
            u, y = rest_v.pop(), rest_w.pop()
            if u == y or u == hub or y == hub:
                continue
            if g.has_edge(u, y) and g.has_edge(hub, u) and g.has_edge(hub, y):
                key = frozenset((hub, u, v, w, y))
                rec = wheels.setdefault(key, {"hub": hub, "rim": (u, v, w, y), "pairs": []})
                if (v, w) not in rec["pairs"] and (w, v) not in rec["pairs"]:
                    rec["pairs"].append((v, w))
    for rec in wheels.values():
        out.append(
            Configuration(
                "bad_5wheel", (rec["hub"], *rec["rim"]), tuple(rec["pairs"])
            )
        )
    return out


def boundary_pairs(g: PlaneGraph) -> List[Tuple[Vertex, Vertex]]:
    """Consecutive vertex pairs along the outer walk (each dart once)."""
    walk = g.outer_walk()
    seen: Set[Tuple[Vertex, Vertex]] = set()
    pairs = []
    for i, v in enumerate(walk):
        w = walk[(i + 1) % len(walk)]
        if (v, w) not in seen and (w, v) not in seen and v != w:
            seen.add((v, w))
            pairs.append((v, w))
    return pairs


def three_pairs(g: PlaneGraph) -> List[Tuple[Vertex, Vertex]]:
    """Consecutive boundary pairs where both vertices have degree 3."""
    return [
        (v, w)
        for v, w in boundary_pairs(g)
        if g.degree(v) == 3 and g.degree(w) == 3
    ]


# =====================================================================
# Penalty
# =====================================================================


@dataclass(frozen=True)
class PenaltyReport:
    """Penalty value in half-units with its term breakdown."""

    half_units: int
    n_term: int  # 2 * (vertices counted)
    e_term: int  # low-degree problems counted
    f_term: int  # bad 5-wheels counted
    r_term: int  # 1 iff a vertex root of degree 1
    configurations: Tuple[Configuration, ...]

    @property
    def value(self) -> float:
        return self.half_units / 2

    @property
    def budget(self) -> int:
        """floor(value / 3.5)"""
        return self.half_units // 7


def phi(view: SkeletalView) -> PenaltyReport:
    """Penalty of the view: closed, vertex-rooted, or edge-rooted by kind."""
    g = view.graph
    roots = set(view.roots)
    configs = scan_configurations(view)
    n_term = 2 * (g.n - len(roots))
    e = f = r = 0
    for c in configs:
        if c.kind == "ear":
            if c.witness[0] not in roots:
                e += 1
        elif c.kind in ("pivoting_triangle", "isolated_triangle"):
            e += 1
        elif c.kind == "deg2_cut_vertex":
            if c.witness[0] not in roots:
                e += 1
        else:  # bad_5wheel
            if not roots or any(
                not (set(p) & roots) for p in c.pairs
            ):
                f += 1
    if view.kind == "vertex-rooted" and g.degree(view.roots[0]) == 1:
        r = 1
    half = n_term + e + f + r
    return PenaltyReport(half, n_term, e, f, r, tuple(configs))


def phi_half(view: SkeletalView) -> int:
    return phi(view).half_units


def budget(view: SkeletalView) -> int:
    """The dominating-set size target floor(penalty/3.5)."""
    return phi(view).half_units // 7


# =====================================================================
# Progress measure
# =====================================================================


def measure(view: SkeletalView) -> Tuple[int, int, int, int, int, int]:
    """The lexicographic progress measure used by the induction.

    (interior vertices, bridges, penalty half-units, blocks, vertices,
    degree-2 vertices) — strictly decreasing along every reduction step.
    """
    g = view.graph
    closed = SkeletalView(g, "skeletal")
    bct = block_cut_tree(g)
    return (
        len(g.interior_set()),
        len(bct.bridges),
        phi(closed).half_units,
        len(bct.blocks),
        g.n,
        sum(1 for v in g.rot if g.degree(v) == 2),
    )


def smaller_than(g1: SkeletalView, g2: SkeletalView) -> bool:
    """Strict progress-measure comparison of two closed views."""
    return measure(g1) < measure(g2)


def vertices_in_problems(view: SkeletalView) -> Set[Vertex]:
    """All vertices involved in some low-degree problem or bad 5-wheel."""
    out: Set[Vertex] = set()
    for c in scan_configurations(view):
        if c.kind == "bad_5wheel":
            for p in c.pairs:
                out.update(p)
        else:
            out.update(c.vertices())
    return out


def low_degree_problem_vertices(view: SkeletalView) -> Set[Vertex]:
    """Vertices involved in a low-degree problem (5-wheels excluded)."""
    out: Set[Vertex] = set()
    for c in scan_configurations(view):
        if c.kind != "bad_5wheel":
            out.update(c.vertices())
    return out
