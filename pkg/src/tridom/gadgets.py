"""Catalog of small rooted graphs used for forcing, covering, and
replacement.

Every entry is a rooted (near-)triangulation together with its verified
signature: the rooted domination number ``s``, the rooted penalty ``phi``
(stored in half-units), the acts-as kind, and — for the two one-sided
forcing gadgets — the *red vertex*, the base vertex that every neat
dominating set of any host must contain after the gadget is attached.

The concrete graphs were found by bounded search over rooted
(near-)triangulations ordered by size, smallest first (see
``scripts/search_blocks.py``); only the signature matters, because
replacing a rooted part by any same-kind part shifts the host's domination
number and penalty by exactly the parts' differences.  ``verify_catalog``
re-derives every signature from scratch with the exact oracle and exercises
that replacement identity on random small hosts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .exact import (
    DomConstraints,
    acts_as,
    dominates,
    is_neat,
    min_domset_size,
)
from .penalty import phi_half
from .plane import (
    EmbeddingError,
    PlaneGraph,
    SkeletalView,
    Vertex,
    attach,
    build_plane_graph,
    fuse,
    validate,
)


class GadgetError(ValueError):
    pass


EDGE_KINDS = ("A+B", "OR", "A", "B", "AND", "L+R", "OCTA", "L-OR-R", "L", "R", "None")
VERTEX_KINDS = ("AB", "LR", "Nope")
ALL_KINDS = VERTEX_KINDS + EDGE_KINDS

# kind -> (rotation, outer walk, roots, s, phi half-units, red vertex)
# The red vertex is the root base vertex forced into every neat dominating
# set of the host (present for the A and B entries only).
_CATALOG_DATA: Dict[str, Tuple[dict, list, tuple, int, int, Optional[int]]] = {
    # vertex-rooted --------------------------------------------------
    "AB": (  # triangle rooted at a corner
        {0: [2, 1], 1: [0, 2], 2: [1, 0]}, [1, 0, 2], (0,), 1, 5, None),
    "LR": (  # two triangles sharing an edge, rooted at a tip
        {0: [3, 1], 1: [0, 3, 2], 2: [1, 3], 3: [2, 1, 0]},
        [1, 0, 3, 2], (0,), 1, 7, None),
    "Nope": (  # octahedron rooted at a boundary vertex
        {0: [2, 3, 4, 1], 1: [0, 4, 5, 2], 2: [1, 5, 3, 0],
         3: [4, 0, 2, 5], 4: [1, 0, 3, 5], 5: [1, 4, 3, 2]},
        [1, 0, 2], (0,), 1, 10, None),
    # edge-rooted ----------------------------------------------------
    "OR": (  # triangle rooted at an edge
        {0: [2, 1], 1: [0, 2], 2: [1, 0]}, [1, 0, 2], (1, 0), 1, 3, None),
    "A": (  # two triangles sharing an edge; the free corner of the inner
        # triangle is an ear tip whose only useful dominator is root 1
        {0: [3, 1], 1: [0, 3, 2], 2: [1, 3], 3: [2, 1, 0]},
        [1, 0, 3, 2], (1, 0), 1, 5, 1),
    "B": (  # mirror orientation of the A entry
        {0: [3, 1], 1: [0, 3, 2], 2: [1, 3], 3: [2, 1, 0]},
        [1, 0, 3, 2], (0, 1), 1, 5, 1),
    "A+B": (
        {0: [5, 1], 1: [0, 5, 2], 2: [1, 5, 4, 3], 3: [2, 4],
         4: [3, 2, 5], 5: [4, 2, 1, 0]},
        [1, 0, 5, 4, 3, 2], (5, 4), 2, 10, None),
    "AND": (
        {0: [3, 4, 1], 1: [0, 4, 2], 2: [1, 4, 3], 3: [2, 4, 0],
         4: [1, 0, 3, 2]},
        [1, 0, 3, 2], (1, 0), 1, 7, None),
    "L+R": (
        {0: [4, 1], 1: [0, 4, 2], 2: [1, 4, 3], 3: [2, 4],
         4: [3, 2, 1, 0]},
        [1, 0, 4, 3, 2], (1, 0), 1, 7, None),
    "OCTA": (  # octahedron rooted at a boundary edge
        {0: [2, 3, 4, 1], 1: [0, 4, 5, 2], 2: [1, 5, 3, 0],
         3: [4, 0, 2, 5], 4: [1, 0, 3, 5], 5: [1, 4, 3, 2]},
        [1, 0, 2], (1, 0), 1, 8, None),
    "L-OR-R": (
        {0: [4, 1], 1: [0, 4, 5, 2], 2: [1, 5, 3], 3: [2, 5, 4],
         4: [3, 5, 1, 0], 5: [1, 4, 3, 2]},
        [1, 0, 4, 3, 2], (3, 2), 1, 9, None),
    "L": (
        {0: [4, 1], 1: [0, 4, 5, 2], 2: [1, 5, 3], 3: [2, 5, 4],
         4: [3, 5, 1, 0], 5: [1, 4, 3, 2]},
        [1, 0, 4, 3, 2], (1, 0), 1, 9, None),
    "R": (
        {0: [4, 1], 1: [0, 4, 5, 2], 2: [1, 5, 3], 3: [2, 5, 4],
         4: [3, 5, 1, 0], 5: [1, 4, 3, 2]},
        [1, 0, 4, 3, 2], (0, 1), 1, 9, None),
    "None": (
        {0: [2, 3, 1], 1: [0, 3, 4, 5, 2], 2: [1, 5, 6, 3, 0],
         3: [1, 0, 2, 6, 4], 4: [1, 3, 6, 5], 5: [1, 4, 6, 2],
         6: [4, 3, 2, 5]},
        [1, 0, 2], (1, 0), 1, 10, None),
}

# Same-kind instances on different underlying graphs, used to exercise the
# replacement identity; signatures may differ from the primary entries.
_ALTERNATE_DATA: Dict[str, Tuple[dict, list, tuple, int, int, Optional[int]]] = {
    "AB": (
        {1: [0, 3, 2], 0: [2, 3, 1], 3: [1, 0, 2], 2: [1, 3, 0]},
        [1, 0, 2], (0,), 1, 6, None),
    "LR": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 4], 2: [1, 4, 3, 0],
         4: [1, 3, 2]},
        [1, 0, 2], (0,), 1, 8, None),
    "Nope": (
        {1: [0, 4, 5, 2], 0: [3, 4, 1], 4: [1, 0, 3, 5], 3: [2, 5, 4, 0],
         5: [1, 4, 3, 2], 2: [1, 5, 3]},
        [1, 0, 3, 2], (0,), 1, 10, None),
    "OR": (
        {1: [0, 3, 2], 0: [2, 3, 1], 3: [1, 0, 2], 2: [1, 3, 0]},
        [1, 0, 2], (1, 0), 1, 4, None),
    "A": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 4], 2: [1, 4, 3, 0],
         4: [1, 3, 2]},
        [1, 0, 2], (1, 0), 1, 6, 1),
    "B": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 4], 2: [1, 4, 3, 0],
         4: [1, 3, 2]},
        [1, 0, 2], (0, 1), 1, 6, 1),
    "A+B": (
        {1: [0, 3, 4, 5, 2], 0: [2, 3, 1], 3: [1, 0, 2, 6, 4],
         2: [1, 5, 6, 3, 0], 4: [1, 3, 6, 5], 6: [4, 3, 2, 5],
         5: [1, 4, 6, 2]},
        [1, 0, 2], (2, 1), 2, 10, None),
    "AND": (
        {1: [0, 3, 4, 5, 2], 0: [2, 3, 1], 3: [1, 0, 2, 6, 5, 4],
         2: [1, 5, 6, 3, 0], 4: [1, 3, 5], 5: [4, 3, 6, 2, 1],
         6: [2, 5, 3]},
        [1, 0, 2], (2, 1), 1, 10, None),
    "L+R": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 5, 4],
         2: [1, 4, 5, 3, 0], 4: [1, 3, 5, 2], 5: [4, 3, 2]},
        [1, 0, 2], (1, 0), 1, 8, None),
    "OCTA": (
        {1: [0, 4, 5, 2], 0: [3, 4, 1], 4: [1, 0, 3, 5], 3: [2, 5, 4, 0],
         5: [1, 4, 3, 2], 2: [1, 5, 3]},
        [1, 0, 3, 2], (1, 0), 1, 8, None),
    "L-OR-R": (
        {1: [0, 4, 5, 2], 0: [2, 3, 4, 1], 4: [1, 0, 3, 6, 5],
         3: [4, 0, 2, 5, 6], 5: [1, 4, 6, 3, 2], 6: [5, 4, 3],
         2: [1, 5, 3, 0]},
        [1, 0, 2], (1, 0), 1, 10, None),
    "L": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 5, 6, 4],
         2: [1, 4, 5, 3, 0], 4: [1, 3, 6, 7, 5, 2], 6: [4, 3, 5, 7],
         5: [2, 4, 7, 6, 3], 7: [5, 4, 6]},
        [1, 0, 2], (1, 0), 1, 12, None),
    "R": (
        {1: [0, 3, 4, 2], 0: [2, 3, 1], 3: [1, 0, 2, 5, 6, 4],
         2: [1, 4, 5, 3, 0], 4: [1, 3, 6, 7, 5, 2], 6: [4, 3, 5, 7],
         5: [2, 4, 7, 6, 3], 7: [5, 4, 6]},
        [1, 0, 2], (0, 1), 1, 12, None),
    "None": (
        {1: [0, 3, 4, 5, 2], 0: [2, 3, 1], 3: [1, 0, 2, 6, 4],
         2: [1, 5, 6, 3, 0], 4: [1, 3, 6, 7, 5], 6: [4, 3, 2, 5, 7],
         5: [1, 4, 7, 6, 2], 7: [5, 4, 6]},
        [1, 0, 2], (1, 0), 1, 12, None),
}


@dataclass(frozen=True)
class Gadget:
    kind: str
    view: SkeletalView  # vertex-rooted or edge-rooted
    s: int
    phi_half: int
    red_vertex: Optional[Vertex] = None

    @property
    def graph(self) -> PlaneGraph:
        return self.view.graph

    @property
    def roots(self) -> Tuple[Vertex, ...]:
        return self.view.roots


def _normalize_kind(kind: str) -> str:
    k = kind[5:] if kind.startswith("small") else kind
    aliases = {"LORR": "L-OR-R", "L OR R": "L-OR-R", "Octa": "OCTA"}
    k = aliases.get(k, k)
    if k not in ALL_KINDS:
        raise GadgetError(f"unknown gadget kind {kind!r}")
    return k


def _build(kind: str, data) -> Gadget:
    rot, walk, roots, s, ph, red = data[kind]
    g = build_plane_graph(rot, walk)
    view_kind = "vertex-rooted" if len(roots) == 1 else "edge-rooted"
    view = validate(g, view_kind, tuple(roots))
    got = phi_half(view)
    if got != ph:
        raise GadgetError(f"{kind}: stored phi {ph} but penalty scan says {got}")
    return Gadget(kind, view, s, ph, red)


_cache: Dict[Tuple[str, bool], Gadget] = {}


def gadget(kind: str) -> Gadget:
    """The primary catalog instance for a kind (smallest found by search)."""
    k = _normalize_kind(kind)
    if (k, False) not in _cache:
        _cache[(k, False)] = _build(k, _CATALOG_DATA)
    return _cache[(k, False)]


def alternate_gadget(kind: str) -> Gadget:
    """A same-kind instance on a different underlying graph."""
    k = _normalize_kind(kind)
    if (k, True) not in _cache:
        _cache[(k, True)] = _build(k, _ALTERNATE_DATA)
    return _cache[(k, True)]


def catalog() -> Dict[str, Gadget]:
    return {k: gadget(k) for k in ALL_KINDS}


# =====================================================================
# insertion with pull-back tags
# =====================================================================


@dataclass(frozen=True)
class GadgetTag:
    kind: str
    site: Tuple[Vertex, ...]  # host fuse vertex, or host edge (u, v)
    internals: FrozenSet[Vertex]  # gadget vertices inside the host graph
    forced: Optional[Vertex]  # vertex every neat dominating set must keep


@dataclass(frozen=True)
class TaggedView:
    base: SkeletalView  # the host before any insertion
    view: SkeletalView  # the host with all gadgets applied
    tags: Tuple[GadgetTag, ...] = ()


def insert(view, where, kind: str, id_floor: int = 0) -> TaggedView:
    """Fuse (vertex-rooted kind) or attach (edge-rooted kind) a catalog
    gadget and record a tag for later pull-back.

    ``where`` is a boundary vertex for fusing, or an ordered boundary edge
    ``(u, v)`` for attaching; the order picks which base vertex plays the
    gadget's first root, which is what distinguishes A from B and L from R.
    The penalty identity of the insertion is asserted: fusing adds exactly
    phi(gadget) + 1 on top of the host's rooted penalty (when both root
    degrees exceed 1); attaching to a near-triangulation adds exactly
    phi(gadget) + 2.
    """
    if isinstance(view, TaggedView):
        base, host, tags = view.base, view.view, view.tags
    else:
        base, host, tags = view, view, ()
    gad = gadget(kind)
    g = host.graph
    if gad.view.kind == "vertex-rooted":
        u = where if isinstance(where, Vertex) else where[0]
        rooted_half = phi_half(validate(g, "vertex-rooted", (u,)))
        out, relabel = fuse(host.reroot("skeletal"), u, gad.view, id_floor)
        new_half = phi_half(out.reroot("skeletal"))
        if g.degree(u) != 1 and gad.graph.degree(gad.roots[0]) != 1:
            if new_half != rooted_half + gad.phi_half + 2:
                raise GadgetError(
                    f"fuse of {kind} at {u}: penalty {new_half}, expected "
                    f"{rooted_half} + {gad.phi_half} + 2"
                )
        forced = u if kind == "AB" else None
        site: Tuple[Vertex, ...] = (u,)
    else:
        u, v = where
        rooted_half = phi_half(validate(g, "edge-rooted", (u, v)))
        out, relabel = attach(
            host.reroot(_closed_kind(host)), u, v, gad.view, id_floor
        )
        new_half = phi_half(out.reroot("skeletal"))
        if _closed_kind(host) == "near-triangulation":
            if new_half != rooted_half + gad.phi_half + 4:
                raise GadgetError(
                    f"attach of {kind} at {u},{v}: penalty {new_half}, "
                    f"expected {rooted_half} + {gad.phi_half} + 4"
                )
        forced = relabel[gad.red_vertex] if gad.red_vertex is not None else None
        site = (u, v)
    internals = frozenset(
        relabel[w] for w in gad.graph.rot if w not in gad.roots
    )
    tag = GadgetTag(gad.kind, site, internals, forced)
    return TaggedView(base, out, tags + (tag,))


def _closed_kind(view: SkeletalView) -> str:
    if view.kind in ("near-triangulation", "triangulation", "edge-rooted"):
        return "near-triangulation"
    return "skeletal"


@dataclass(frozen=True)
class PullBack:
    dom_set: FrozenSet[Vertex]
    uncovered: FrozenSet[Vertex]  # fuse points possibly left undominated


def pull_back(tagged: TaggedView, s_h: Set[Vertex]) -> PullBack:
    """Map a dominating set of the gadget-augmented graph back to the host.

    LR tags each give up their single internal member (their fuse point may
    end up dominated only from inside the gadget, so it is reported as
    possibly uncovered); AB/A/B tags require the forced vertex — the set
    must be neat for those — and contribute no internal members.
    """
    h = tagged.view.graph
    if not dominates(h, set(s_h)):
        raise GadgetError("the provided set does not dominate the tagged graph")
    forcing = [t for t in tagged.tags if t.kind in ("AB", "A", "B")]
    if forcing and not is_neat(h, set(s_h)):
        raise GadgetError("forcing tags present: the set must be neat")
    cur = set(s_h)
    uncovered: Set[Vertex] = set()
    drops = 0
    for tag in tagged.tags:
        inside = cur & tag.internals
        if tag.kind == "LR":
            if len(inside) != 1:
                raise GadgetError(
                    f"LR tag at {tag.site}: expected one internal member, "
                    f"found {sorted(inside)}"
                )
            cur -= inside
            uncovered.add(tag.site[0])
            drops += 1
        elif tag.kind in ("AB", "A", "B"):
            if tag.forced not in cur:
                raise GadgetError(
                    f"{tag.kind} tag at {tag.site}: forced vertex "
                    f"{tag.forced} missing from the set"
                )
            cur -= inside
        else:
            cur -= inside
    if len(cur) != len(s_h) - drops - sum(
        len(set(s_h) & t.internals) for t in tagged.tags if t.kind not in ("LR",)
    ):
        raise GadgetError("pull-back dropped an unexpected number of vertices")
    base_g = tagged.base.graph
    stray = cur - set(base_g.rot)
    if stray:
        raise GadgetError(f"pulled-back set leaves the host: {sorted(stray)}")
    if not dominates(base_g, cur, uncovered):
        raise GadgetError("pulled-back set fails to dominate the host")
    return PullBack(frozenset(cur), frozenset(uncovered))


# =====================================================================
# catalog verification
# =====================================================================


@dataclass
class CatalogReport:
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, cond: bool, msg: str) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(msg)


def _all_min_domsets(g: PlaneGraph, size: int) -> List[Set[Vertex]]:
    verts = sorted(g.rot)
    hoods = {v: g.closed_neighborhood(v) for v in verts}
    full = set(verts)
    out = []
    for combo in combinations(verts, size):
        cover: Set[Vertex] = set()
        for v in combo:
            cover |= hoods[v]
        if cover == full:
            out.append(set(combo))
    return out


def _random_hosts(rng: random.Random, count: int) -> List[SkeletalView]:
    """Small random near-triangulation hosts (triangulated polygons)."""
    from .generators import enumerate_polygon_triangulations

    pool: List[SkeletalView] = []
    for n in (5, 6, 7, 8):
        for g in enumerate_polygon_triangulations(n):
            pool.append(validate(g, "near-triangulation"))
    return [rng.choice(pool) for _ in range(count)]


def verify_catalog(hosts: int = 110, seed: int = 0) -> CatalogReport:
    """Re-derive every signature with the oracle, check the red-vertex
    property, and exercise the replacement identity on random hosts."""
    rep = CatalogReport()
    rng = random.Random(seed)
    for kind in ALL_KINDS:
        for gad, label in ((gadget(kind), kind), (alternate_gadget(kind), kind + "/alt")):
            a = acts_as(gad.view)
            rep.expect(a.kind == kind, f"{label}: acts as {a.kind}")
            rep.expect(a.s == gad.s, f"{label}: oracle s {a.s} != {gad.s}")
            rep.expect(
                phi_half(gad.view) == gad.phi_half,
                f"{label}: penalty scan != stored phi",
            )
            if kind in ("A", "B"):
                rep.expect(gad.red_vertex is not None, f"{label}: missing red vertex")
                which = 0 if kind == "A" else 1
                rep.expect(
                    gad.red_vertex == gad.roots[which],
                    f"{label}: red vertex must be base vertex {which}",
                )

    host_views = _random_hosts(rng, hosts)
    per_kind = max(1, hosts // len(EDGE_KINDS))
    hi = 0
    for kind in EDGE_KINDS:
        g1, g2 = gadget(kind), alternate_gadget(kind)
        for _ in range(per_kind):
            host = host_views[hi % len(host_views)]
            hi += 1
            darts = sorted(host.graph.outer_face())
            u, v = rng.choice(darts)
            try:
                h1, _ = attach(host, u, v, g1.view)
                h2, _ = attach(host, u, v, g2.view)
            except EmbeddingError as exc:
                rep.failures.append(f"{kind}: attach failed on host: {exc}")
                continue
            s1 = min_domset_size(h1.graph, DomConstraints())
            s2 = min_domset_size(h2.graph, DomConstraints())
            rep.expect(
                s2 - s1 == g2.s - g1.s,
                f"{kind}: replacement s shift {s2 - s1} != {g2.s - g1.s}",
            )
            p1 = phi_half(h1.reroot("skeletal"))
            p2 = phi_half(h2.reroot("skeletal"))
            rep.expect(
                p2 - p1 == g2.phi_half - g1.phi_half,
                f"{kind}: replacement phi shift {p2 - p1} != "
                f"{g2.phi_half - g1.phi_half}",
            )
            if kind in ("A", "B"):
                # red-vertex property: every neat minimum dominating set of
                # the augmented host contains the red base vertex
                red = u if kind == "A" else v
                size = min_domset_size(h1.graph, DomConstraints())
                sets = _all_min_domsets(h1.graph, size)
                neat = [s for s in sets if is_neat(h1.graph, s)]
                rep.expect(bool(neat), f"{kind}: no neat minimum set on host")
                rep.expect(
                    all(red in s for s in neat),
                    f"{kind}: a neat minimum set avoids the red vertex {red}",
                )
    for kind in VERTEX_KINDS:
        g1, g2 = gadget(kind), alternate_gadget(kind)
        for _ in range(per_kind):
            host = host_views[hi % len(host_views)]
            hi += 1
            u = rng.choice(sorted(host.graph.boundary_set()))
            try:
                h1, _ = fuse(host.reroot("skeletal"), u, g1.view)
                h2, _ = fuse(host.reroot("skeletal"), u, g2.view)
            except EmbeddingError as exc:
                rep.failures.append(f"{kind}: fuse failed on host: {exc}")
                continue
            p1 = phi_half(h1)
            p2 = phi_half(h2)
            rep.expect(
                p2 - p1 == g2.phi_half - g1.phi_half,
                f"{kind}: fuse replacement phi shift {p2 - p1} != "
                f"{g2.phi_half - g1.phi_half}",
            )
    return rep
