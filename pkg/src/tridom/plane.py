"""Rotation-system embeddings of plane graphs and the structural edits on them.

A plane graph is stored as a rotation system: for every vertex, the cyclic
(counterclockwise) sequence of its neighbors.  Faces are derived by tracing
dart orbits; one face is designated as the outer (unbounded) face by storing
one of its darts.  All higher-level machinery (penalty scanning, the exact
solver, gadget surgery) works exclusively through this module.

Conventions
-----------
* A *dart* is an ordered pair (u, v) with {u, v} an edge.
* The successor of dart (u, v) inside its face is (v, w) where w follows u
  in v's rotation.  Orbits of this map are the faces.
* Mutating operations return a new PlaneGraph; instances are treated as
  immutable values.  Vertex identifiers are stable: surviving vertices keep
  their ids across every edit, and fresh ids never collide with old ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

Vertex = int
Dart = Tuple[Vertex, Vertex]
Edge = FrozenSet[Vertex]


class EmbeddingError(ValueError):
    """Raised when a rotation spec or an edit violates embedding legality."""


def edge(u: Vertex, v: Vertex) -> Edge:
    return frozenset((u, v))


# =====================================================================
# Core graph value
# =====================================================================


class PlaneGraph:
    """A connected plane graph given by rotations plus a designated outer dart.

    Attributes:
        rot: dict mapping each vertex to the CCW-ordered list of neighbors.
        outer_dart: a dart lying on the outer face.
    """

    __slots__ = ("rot", "outer_dart", "_faces", "_outer_walk", "_cache")

    def __init__(self, rot: Dict[Vertex, List[Vertex]], outer_dart: Dart):
        self.rot = rot
        self.outer_dart = outer_dart
        self._faces: Optional[List[Tuple[Dart, ...]]] = None
        self._outer_walk: Optional[Tuple[Vertex, ...]] = None
        self._cache: dict = {}

    # -- elementary queries ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rot)

    @property
    def vertices(self) -> Set[Vertex]:
        return set(self.rot)

    def degree(self, v: Vertex) -> int:
        return len(self.rot[v])

    def neighbors(self, v: Vertex) -> List[Vertex]:
        return self.rot[v]

    def closed_neighborhood(self, v: Vertex) -> Set[Vertex]:
        return set(self.rot[v]) | {v}

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self.rot and v in self.rot[u]

    def edges(self) -> Set[Edge]:
        return {edge(u, v) for u in self.rot for v in self.rot[u] if u < v}

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.rot.values()) // 2

    # -- face tracing ------------------------------------------------------

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        ring = self.rot[v]
        i = ring.index(u)
        return (v, ring[(i + 1) % len(ring)])

    def faces(self) -> List[Tuple[Dart, ...]]:
        """All faces as dart orbits; computed once and cached."""
        if self._faces is None:
            seen: Set[Dart] = set()
            faces: List[Tuple[Dart, ...]] = []
            for u in self.rot:
                for v in self.rot[u]:
                    d = (u, v)
                    if d in seen:
                        continue
                    orbit = []
                    cur = d
                    while cur not in seen:
                        seen.add(cur)
                        orbit.append(cur)
                        cur = self.next_dart(cur)
                    faces.append(tuple(orbit))
            self._faces = faces
        return self._faces

    def face_of(self, d: Dart) -> Tuple[Dart, ...]:
        for f in self.faces():
            if d in f:
                return f
        raise EmbeddingError(f"dart {d} not in graph")

    def outer_face(self) -> Tuple[Dart, ...]:
        return self.face_of(self.outer_dart)

    def outer_walk(self) -> Tuple[Vertex, ...]:
        """Vertices of the outer face walk, in trace order (may repeat)."""
        if self._outer_walk is None:
            self._outer_walk = tuple(d[0] for d in self.outer_face())
        return self._outer_walk

    def boundary_set(self) -> Set[Vertex]:
        return set(self.outer_walk())

    def interior_set(self) -> Set[Vertex]:
        return self.vertices - self.boundary_set()

    def boundary_darts(self) -> Set[Dart]:
        return set(self.outer_face())

    def is_boundary_edge(self, u: Vertex, v: Vertex) -> bool:
        b = self.boundary_darts()
        return (u, v) in b or (v, u) in b

    def bounded_faces(self) -> List[Tuple[Dart, ...]]:
        outer = self.outer_face()
        return [f for f in self.faces() if f is not outer]

    def bounded_triangles(self) -> List[Tuple[Vertex, Vertex, Vertex]]:
        return [
            (f[0][0], f[1][0], f[2][0]) for f in self.bounded_faces() if len(f) == 3
        ]

    # -- global checks -----------------------------------------------------

    def check_basic(self) -> List[str]:
        """Symmetry / simplicity / connectivity / Euler violations."""
        bad: List[str] = []
        for u, ns in self.rot.items():
            if u in ns:
                bad.append(f"self-loop at {u}")
            if len(set(ns)) != len(ns):
                bad.append(f"parallel edge at {u}")
            for v in ns:
                if v not in self.rot or u not in self.rot[v]:
                    bad.append(f"asymmetric adjacency {u}->{v}")
        if bad:
            return bad
        if not self.rot:
            return ["empty graph"]
        # connectivity
        start = next(iter(self.rot))
        seen = {start}
        stack = [start]
        while stack:
            for w in self.rot[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.n:
            bad.append("disconnected")
            return bad
        u, v = self.outer_dart
        if not self.has_edge(u, v):
            bad.append(f"outer dart {self.outer_dart} is not an edge")
            return bad
        if self.n - self.m + len(self.faces()) != 2:
            bad.append(
                f"Euler violation: V-E+F = {self.n}-{self.m}+{len(self.faces())}"
            )
        return bad

    # -- construction helpers ----------------------------------------------

    def copy(self) -> "PlaneGraph":
        return PlaneGraph({v: list(ns) for v, ns in self.rot.items()}, self.outer_dart)

    def fresh_ids(self, k: int, floor: int = 0) -> List[Vertex]:
        base = max(self.rot) + 1 if self.rot else 0
        base = max(base, floor)
        return list(range(base, base + k))

    # -- mutations (all return new graphs) -----------------------------------

    def _pick_outer_dart(
        self, alive: Set[Vertex], dead_edges: Set[Edge] = frozenset()
    ) -> Dart:
        """A surviving dart of the old outer face (still outer after deletions)."""
        for (a, b) in self.outer_face():
            if a in alive and b in alive and edge(a, b) not in dead_edges:
                return (a, b)
        raise EmbeddingError("no surviving outer dart; cannot track outer face")

    def delete_vertices(self, dead: Iterable[Vertex]) -> "PlaneGraph":
        dead_set = set(dead)
        alive = self.vertices - dead_set
        rot = {
            v: [w for w in ns if w not in dead_set]
            for v, ns in self.rot.items()
            if v not in dead_set
        }
        g = PlaneGraph(rot, (0, 0))
        try:
            g.outer_dart = self._pick_outer_dart(alive)
        except EmbeddingError:
            # every old boundary dart died: the holes left by the deleted
            # vertices merged with the outer region, so the new outer face
            # is the unique face holding all surviving boundary vertices
            # and everything the deletions exposed
            need = set(self.outer_walk()) & alive
            for d in dead_set:
                need.update(w for w in self.rot[d] if w in alive)
            cands = [
                f for f in g.faces() if need <= {a for (a, _) in f}
            ]
            if len(cands) != 1:
                raise
            g.outer_dart = cands[0][0]
        return g

    def delete_vertex(self, v: Vertex) -> "PlaneGraph":
        return self.delete_vertices([v])

    def delete_edge(self, u: Vertex, v: Vertex) -> "PlaneGraph":
        if not self.has_edge(u, v):
            raise EmbeddingError(f"no edge {u},{v}")
        rot = {x: list(ns) for x, ns in self.rot.items()}
        rot[u].remove(v)
        rot[v].remove(u)
        g = PlaneGraph(rot, (0, 0))
        g.outer_dart = self._pick_outer_dart(self.vertices, {edge(u, v)})
        return g

    def add_edge(
        self, u: Vertex, v: Vertex, face_dart: Dart, outer_dart: Optional[Dart] = None
    ) -> "PlaneGraph":
        """Add the chord u,v inside the face containing ``face_dart``.

        Both endpoints must occur exactly once on that face.  If the named
        face is the outer face, ``outer_dart`` must say which side stays
        unbounded.
        """
        if self.has_edge(u, v):
            raise EmbeddingError(f"edge {u},{v} already present")
        f = self.face_of(face_dart)
        ins: Dict[Vertex, Vertex] = {}
        for (a, b) in f:
            if b in (u, v):
                if b in ins:
                    raise EmbeddingError(f"{b} occurs twice on the face")
                ins[b] = a  # dart entering b
        if set(ins) != {u, v}:
            raise EmbeddingError(f"{u},{v} not both on the named face")
        rot = {x: list(ns) for x, ns in self.rot.items()}
        # Insert each endpoint right after the neighbor whose dart enters it
        # along the face; this splits the face into two.
        rot[u].insert(rot[u].index(ins[u]) + 1, v)
        rot[v].insert(rot[v].index(ins[v]) + 1, u)
        if f == self.outer_face():
            if outer_dart is None:
                raise EmbeddingError("splitting the outer face needs outer_dart")
            return PlaneGraph(rot, outer_dart)
        return PlaneGraph(rot, self.outer_dart)

    def contract_boundary_pair(self, u: Vertex, v: Vertex) -> "PlaneGraph":
        """Contract the boundary edge u,v into u (u survives).

        Intended for a pair of consecutive degree-3 boundary vertices with a
        single shared neighbor; the shared neighbor's duplicate entry is
        dropped so the result stays simple.
        """
        if not self.is_boundary_edge(u, v):
            raise EmbeddingError(f"{u},{v} is not a boundary edge")
        rot = {x: list(ns) for x, ns in self.rot.items()}
        # Splice v's rotation into u's at the position of the u-v edge.
        ru, rv = rot[u], rot[v]
        iu, iv = ru.index(v), rv.index(u)
        spliced = ru[:iu] + rv[iv + 1:] + rv[:iv] + ru[iu + 1:]
        merged: List[Vertex] = []
        for w in spliced:
            if w != u and w not in merged:
                merged.append(w)
        del rot[v]
        rot[u] = merged
        for w in list(rot):
            if w == u:
                continue
            rot[w] = [u if x == v else x for x in rot[w]]
            # drop a duplicate u created by a shared neighbor
            if rot[w].count(u) > 1:
                seen_u = False
                cleaned = []
                for x in rot[w]:
                    if x == u:
                        if seen_u:
                            continue
                        seen_u = True
                    cleaned.append(x)
                rot[w] = cleaned
        g = PlaneGraph(rot, (0, 0))
        for (a, b) in self.outer_face():
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2 and a2 in rot and b2 in rot[a2]:
                g.outer_dart = (a2, b2)
                break
        else:
            raise EmbeddingError("no outer dart after contraction")
        return g


# =====================================================================
# Build / validate
# =====================================================================

KINDS = (
    "skeletal",
    "near-triangulation",
    "triangulation",
    "vertex-rooted",
    "edge-rooted",
)


@dataclass(frozen=True)
class SkeletalView:
    """A validated plane graph together with its role in the induction.

    kind is one of: skeletal, near-triangulation, triangulation,
    vertex-rooted (skeletal with one root), edge-rooted (near-triangulation
    with a root boundary edge u,v).
    """

    graph: PlaneGraph
    kind: str
    roots: Tuple[Vertex, ...] = ()

    @property
    def boundary(self) -> Tuple[Vertex, ...]:
        return self.graph.outer_walk()

    def reroot(self, kind: str, roots: Tuple[Vertex, ...] = ()) -> "SkeletalView":
        return validate(self.graph, kind, roots)


def build_plane_graph(
    rotation_spec: Dict[Vertex, Sequence[Vertex]],
    outer_face_hint: Sequence[Vertex],
) -> PlaneGraph:
    """Build a PlaneGraph from rotations, fixing the outer face by hint.

    Args:
        rotation_spec: per-vertex CCW neighbor cycles.
        outer_face_hint: a vertex sequence matching one traced face (as a
            cyclic sequence, either direction).

    Raises:
        EmbeddingError: asymmetric rotations, Euler violation, or no traced
            face matching the hint.
    """
    rot = {v: list(ns) for v, ns in rotation_spec.items()}
    some_v = next(iter(rot))
    g = PlaneGraph(rot, (some_v, rot[some_v][0]))
    bad = g.check_basic()
    if bad:
        raise EmbeddingError("; ".join(bad))
    hint = list(outer_face_hint)
    for reverse in (False, True):
        target = list(reversed(hint)) if reverse else hint
        for f in g.faces():
            walk = [d[0] for d in f]
            if len(walk) != len(target):
                continue
            doubled = walk + walk
            if any(
                doubled[i: i + len(target)] == target for i in range(len(walk))
            ):
                out = PlaneGraph(g.rot, f[0])
                return out
    raise EmbeddingError(f"no face matches outer hint {hint}")


def validate(
    graph: PlaneGraph, expected_kind: str = "skeletal", roots: Tuple[Vertex, ...] = ()
) -> SkeletalView:
    """Validate a plane graph as one of the skeletal kinds.

    Raises EmbeddingError listing every violation found.
    """
    if expected_kind not in KINDS:
        raise EmbeddingError(f"unknown kind {expected_kind!r}")
    violations = graph.check_basic()
    if violations:
        raise EmbeddingError("; ".join(violations))
    outer = graph.outer_face()
    for f in graph.faces():
        if f is outer:
            continue
        if len(f) != 3 or len({d[0] for d in f}) != 3:
            violations.append(f"non-triangular bounded face {[d[0] for d in f]}")
    allowed_deg1 = set(roots) if expected_kind == "vertex-rooted" else set()
    for v in graph.rot:
        d = graph.degree(v)
        if d == 0 or (d == 1 and v not in allowed_deg1):
            violations.append(f"degree-{d} vertex {v}")
    if expected_kind == "vertex-rooted":
        if len(roots) != 1:
            violations.append("vertex-rooted view needs exactly one root")
        elif roots[0] not in graph.boundary_set():
            violations.append(f"root {roots[0]} not on the boundary")
    elif expected_kind == "edge-rooted":
        if len(roots) != 2:
            violations.append("edge-rooted view needs exactly two roots")
        elif not graph.is_boundary_edge(*roots):
            violations.append(f"roots {roots} are not a boundary edge")
    elif roots:
        violations.append(f"kind {expected_kind} takes no roots")
    if expected_kind in ("near-triangulation", "triangulation", "edge-rooted"):
        if not violations and not _is_biconnected(graph):
            violations.append("not 2-connected")
    if expected_kind == "triangulation":
        if len(graph.boundary_set()) != 3:
            violations.append("triangulation must have exactly 3 boundary vertices")
    if violations:
        raise EmbeddingError("; ".join(violations))
    return SkeletalView(graph, expected_kind, tuple(roots))


def violations_of(
    graph: PlaneGraph, expected_kind: str = "skeletal", roots: Tuple[Vertex, ...] = ()
) -> List[str]:
    """Like validate() but returns the violation list instead of raising."""
    try:
        validate(graph, expected_kind, roots)
        return []
    except EmbeddingError as exc:
        return str(exc).split("; ")


def _is_biconnected(g: PlaneGraph) -> bool:
    if g.n < 3:
        return False
    bct = block_cut_tree(g)
    return not bct.cut_vertices


# =====================================================================
# Block-cut structure
# =====================================================================


@dataclass
class BlockCutTree:
    blocks: List[Set[Vertex]]
    cut_vertices: Set[Vertex]
    bridges: Set[Edge]


def block_cut_tree(g: PlaneGraph) -> BlockCutTree:
    """Biconnected components, cut vertices, and bridges (iterative DFS)."""
    index: Dict[Vertex, int] = {}
    low: Dict[Vertex, int] = {}
    parent: Dict[Vertex, Optional[Vertex]] = {}
    blocks: List[Set[Vertex]] = []
    cuts: Set[Vertex] = set()
    bridges: Set[Edge] = set()
    estack: List[Edge] = []
    counter = itertools.count()

    root = next(iter(g.rot))
    stack: List[Tuple[Vertex, int]] = [(root, 0)]
    parent[root] = None
    index[root] = low[root] = next(counter)
    root_children = 0
    while stack:
        v, i = stack[-1]
        if i < g.degree(v):
            stack[-1] = (v, i + 1)
            w = g.rot[v][i]
            if w not in index:
                parent[w] = v
                index[w] = low[w] = next(counter)
                estack.append(edge(v, w))
                stack.append((w, 0))
                if v == root:
                    root_children += 1
            elif w != parent[v] and index[w] < index[v]:
                estack.append(edge(v, w))
                low[v] = min(low[v], index[w])
        else:
            stack.pop()
            p = parent[v]
            if p is not None:
                low[p] = min(low[p], low[v])
                if low[v] >= index[p]:
                    comp: Set[Vertex] = set()
                    while estack:
                        e = estack.pop()
                        comp.update(e)
                        if e == edge(p, v):
                            break
                    blocks.append(comp)
                    if len(comp) == 2:
                        bridges.add(edge(p, v))
    # a vertex is a cut vertex iff it lies in >= 2 blocks
    count: Dict[Vertex, int] = {}
    for b in blocks:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = {v for v, c in count.items() if c >= 2}
    return BlockCutTree(blocks, cuts, bridges)


@dataclass
class Structure:
    boundary: Tuple[Vertex, ...]
    block_cut: BlockCutTree
    chords: List[Edge]
    interior: Set[Vertex]
    interior_connected: bool


def structure(view: SkeletalView) -> Structure:
    """Boundary cycle, block-cut tree, chord list, interior set."""
    g = view.graph
    bset = g.boundary_set()
    bdarts = g.boundary_darts()
    chords = [
        edge(u, v)
        for u in bset
        for v in g.rot[u]
        if u < v and v in bset and (u, v) not in bdarts and (v, u) not in bdarts
    ]
    interior = g.interior_set()
    conn = True
    if interior:
        start = next(iter(interior))
        seen = {start}
        stack = [start]
        while stack:
            for w in g.rot[stack.pop()]:
                if w in interior and w not in seen:
                    seen.add(w)
                    stack.append(w)
        conn = len(seen) == len(interior)
    return Structure(g.outer_walk(), block_cut_tree(g), chords, interior, conn)


# =====================================================================
# split / fuse / attach
# =====================================================================


def _induced(g: PlaneGraph, keep: Set[Vertex]) -> PlaneGraph:
    rot = {v: [w for w in g.rot[v] if w in keep] for v in keep}
    sub = PlaneGraph(rot, (0, 0))
    for (a, b) in g.outer_face():
        if a in keep and b in keep and b in rot[a]:
            sub.outer_dart = (a, b)
            return sub
    raise EmbeddingError("induced subgraph touches no outer dart")


def _components(rot: Dict[Vertex, List[Vertex]], skip: Set[Vertex]) -> List[Set[Vertex]]:
    seen: Set[Vertex] = set(skip)
    comps = []
    for s in rot:
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        stack = [s]
        while stack:
            for w in rot[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def split_at_cut_vertex(
    view: SkeletalView, u: Vertex
) -> Tuple[SkeletalView, SkeletalView]:
    """Split at cut vertex u: first component + u  vs  the rest + u."""
    g = view.graph
    comps = _components(g.rot, {u})
    if len(comps) < 2:
        raise EmbeddingError(f"{u} is not a cut vertex")
    part1 = _induced(g, comps[0] | {u})
    part2 = _induced(g, set().union(*comps[1:]) | {u})
    return (
        validate(part1, "vertex-rooted", (u,)),
        validate(part2, "vertex-rooted", (u,)),
    )


def split_at_bridge(
    view: SkeletalView, u: Vertex, v: Vertex
) -> Tuple[SkeletalView, SkeletalView]:
    """Split at bridge u,v: the u-side keeps u, the v-side keeps v."""
    g = view.graph
    rot = {x: list(ns) for x, ns in g.rot.items()}
    rot[u] = [w for w in rot[u] if w != v]
    rot[v] = [w for w in rot[v] if w != u]
    comps = _components(rot, set())
    sides = [c for c in comps if u in c or v in c]
    if len(sides) != 2:
        raise EmbeddingError(f"{u},{v} is not a bridge")
    cu = next(c for c in sides if u in c)
    cv = next(c for c in sides if v in c)
    return (
        validate(_induced(g, cu), "vertex-rooted", (u,)),
        validate(_induced(g, cv), "vertex-rooted", (v,)),
    )


def split_at_chord(
    view: SkeletalView, u: Vertex, v: Vertex
) -> Tuple[SkeletalView, SkeletalView]:
    """Split a 2-connected view at the chord u,v into two edge-rooted parts."""
    g = view.graph
    if not g.has_edge(u, v) or g.is_boundary_edge(u, v):
        raise EmbeddingError(f"{u},{v} is not a chord")
    walk = list(g.outer_walk())
    if len(set(walk)) != len(walk):
        raise EmbeddingError("chord split requires a simple boundary cycle")
    i, j = walk.index(u), walk.index(v)
    if i > j:
        i, j = j, i
        u, v = v, u
    seg1 = set(walk[i: j + 1])  # u .. v one way
    seg2 = set(walk[j:] + walk[: i + 1])  # v .. u the other way
    side1, side2 = set(seg1), set(seg2)
    for comp in _components(g.rot, {u, v}):
        b1 = comp & (seg1 - {u, v})
        b2 = comp & (seg2 - {u, v})
        if b1 and b2:
            raise EmbeddingError(f"component straddles chord {u},{v}")
        if b1:
            side1 |= comp
        elif b2:
            side2 |= comp
        else:
            # purely interior component: assign by adjacency to a segment vertex
            touch1 = any(w in side1 - {u, v} for x in comp for w in g.rot[x])
            (side1 if touch1 else side2).update(comp)
    p1 = _induced_side(g, side1, u, v)
    p2 = _induced_side(g, side2, u, v)
    return (
        validate(p1, "edge-rooted", (u, v)),
        validate(p2, "edge-rooted", (u, v)),
    )


def _induced_side(g: PlaneGraph, keep: Set[Vertex], u: Vertex, v: Vertex) -> PlaneGraph:
    """Induced side of a chord split; the chord u,v becomes a boundary edge."""
    rot = {x: [w for w in g.rot[x] if w in keep] for x in keep}
    sub = PlaneGraph(rot, (0, 0))
    for (a, b) in g.outer_face():
        if a in keep and b in keep and b in rot[a]:
            sub.outer_dart = (a, b)
            break
    else:
        # side has no dart on g's outer walk (cannot happen for a true chord)
        raise EmbeddingError("chord side touches no outer dart")
    return sub


def _rotate_to(seq: List[Vertex], first: Vertex) -> List[Vertex]:
    i = seq.index(first)
    return seq[i:] + seq[:i]


def _boundary_gap_splice(
    host: PlaneGraph, u1: Vertex, part_rot_root: List[Vertex]
) -> List[Vertex]:
    """Host rotation at u1 with the part's root rotation spliced into the
    outer-face gap after u1's first boundary predecessor."""
    outer = host.outer_face()
    pred = next(a for (a, b) in outer if b == u1)
    ring = _rotate_to(list(host.rot[u1]), pred)
    # the gap after the boundary predecessor (outer face side) is right
    # after `pred` in CCW order
    return ring[:1] + part_rot_root + ring[1:]


def _mirrored(g: PlaneGraph) -> PlaneGraph:
    return PlaneGraph(
        {v: list(reversed(ns)) for v, ns in g.rot.items()},
        (g.outer_dart[1], g.outer_dart[0]),
    )


def fuse(
    host: SkeletalView, u1: Vertex, part: SkeletalView, id_floor: int = 0
) -> Tuple[SkeletalView, Dict[Vertex, Vertex]]:
    """Identify the part's root with host boundary vertex u1.

    The part body is embedded in the host's outer face, at the outer gap
    following u1's first boundary predecessor.  Returns the fused view and
    the relabeling map applied to the part (root -> u1, rest -> fresh ids,
    all at least ``id_floor``).
    """
    if part.kind != "vertex-rooted":
        raise EmbeddingError("fuse needs a vertex-rooted part")
    g = host.graph
    if u1 not in g.boundary_set():
        raise EmbeddingError(f"{u1} is not a host boundary vertex")
    (u2,) = part.roots
    last_err: Optional[Exception] = None
    for p in (part.graph, _mirrored(part.graph)):
        fresh = iter(g.fresh_ids(p.n, id_floor))
        relabel = {v: (u1 if v == u2 else next(fresh)) for v in p.rot}
        rot = {x: list(ns) for x, ns in g.rot.items()}
        for v, ns in p.rot.items():
            if v == u2:
                continue
            rot[relabel[v]] = [relabel[w] for w in ns]
        # linearize the part's root rotation with its own outer gap at the
        # ends, so only host-outer area is consumed by the splice
        pred2 = next(a for (a, b) in p.outer_face() if b == u2)
        ring2 = _rotate_to(list(p.rot[u2]), pred2)
        part_ring = [relabel[w] for w in ring2[1:] + ring2[:1]]
        rot[u1] = _boundary_gap_splice(g, u1, part_ring)
        out = PlaneGraph(rot, g.outer_dart)
        try:
            return validate(out, "skeletal"), relabel
        except EmbeddingError as exc:
            last_err = exc
    raise EmbeddingError(f"fuse failed in both orientations: {last_err}")


def attach(
    host: SkeletalView, u1: Vertex, v1: Vertex, part: SkeletalView,
    id_floor: int = 0,
) -> Tuple[SkeletalView, Dict[Vertex, Vertex]]:
    """Glue an edge-rooted part onto host boundary edge u1,v1.

    The part's root edge (u2, v2) is identified with (u1, v1) in order; the
    part body lands in the host's outer face, making u1,v1 a chord.
    Returns the combined view and the relabeling map.
    """
    if part.kind != "edge-rooted":
        raise EmbeddingError("attach needs an edge-rooted part")
    g = host.graph
    if not g.is_boundary_edge(u1, v1):
        raise EmbeddingError(f"{u1},{v1} is not a host boundary edge")
    u2, v2 = part.roots
    # orient so that (u1, v1) is the direction the host boundary is traced
    if (u1, v1) not in g.boundary_darts():
        u1, v1 = v1, u1
        u2, v2 = v2, u2
    # the part must present dart (v2, u2) on its boundary so that the dart
    # (u1, v1) — formerly on the host's outer face — lands on the part's
    # bounded side after gluing
    p = part.graph
    if (v2, u2) not in p.boundary_darts():
        p = _mirrored(p)
        if (v2, u2) not in p.boundary_darts():
            raise EmbeddingError(f"{u2},{v2} not a boundary edge of the part")
    fresh = iter(g.fresh_ids(p.n, id_floor))
    relabel: Dict[Vertex, Vertex] = {}
    for v in p.rot:
        relabel[v] = u1 if v == u2 else v1 if v == v2 else next(fresh)
    rot = {x: list(ns) for x, ns in g.rot.items()}
    for v, ns in p.rot.items():
        if v in (u2, v2):
            continue
        rot[relabel[v]] = [relabel[w] for w in ns]
    # With the darts oriented as above, the part block goes right before v1
    # in u1's rotation and right after u1 in v1's rotation.
    pu = [relabel[w] for w in _rotate_to(list(p.rot[u2]), v2)[1:]]
    pv = [relabel[w] for w in _rotate_to(list(p.rot[v2]), u2)[1:]]
    ru = list(g.rot[u1])
    i = ru.index(v1)
    rot[u1] = ru[:i] + pu + ru[i:]
    rv = list(g.rot[v1])
    j = rv.index(u1)
    rot[v1] = rv[: j + 1] + pv + rv[j + 1:]
    new_outer = next(
        d for d in g.outer_face() if d not in ((u1, v1), (v1, u1))
    )
    out = PlaneGraph(rot, new_outer)
    if host.kind in ("edge-rooted", "vertex-rooted"):
        return validate(out, host.kind, host.roots), relabel
    kind = (
        "near-triangulation"
        if host.kind in ("near-triangulation", "triangulation")
        else "skeletal"
    )
    return validate(out, kind), relabel


# =====================================================================
# Canonical form / sporadic recognition
# =====================================================================


def canonical_form(view: SkeletalView) -> str:
    """Canonical code, invariant under embedding-preserving isomorphism.

    Minimizes a BFS rotation-labeling string over starting darts (restricted
    to the boundary, which is isomorphism-invariant) and both orientations;
    boundary membership and root positions are encoded, so views differing
    only in outer face or roots get different codes.
    """
    g = view.graph
    roots = view.roots
    bset = g.boundary_set()
    bdarts = sorted(g.boundary_darts())
    best: Optional[str] = None
    for flip in (False, True):
        rot = (
            g.rot
            if not flip
            else {v: list(reversed(ns)) for v, ns in g.rot.items()}
        )
        if len(roots) == 2:
            starts = [(roots[0], roots[1])]
        elif len(roots) == 1:
            starts = [(roots[0], w) for w in rot[roots[0]]]
        else:
            starts = (
                [(b, a) for (a, b) in bdarts] if flip else list(bdarts)
            )
        for s, t in starts:
            code = _encode(rot, s, t, bset)
            if best is None or code < best:
                best = code
    assert best is not None
    return best


def _encode(
    rot: Dict[Vertex, List[Vertex]], s: Vertex, t: Vertex, boundary: Set[Vertex]
) -> str:
    label: Dict[Vertex, int] = {s: 0, t: 1}
    order = [s, t]
    entry: Dict[Vertex, Vertex] = {s: t, t: s}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        ring = _rotate_to(rot[v], entry[v])
        for w in ring:
            if w not in label:
                label[w] = len(order)
                order.append(w)
                entry[w] = v
    parts = []
    for v in order:
        ring = _rotate_to(rot[v], entry[v])
        flag = "b" if v in boundary else "i"
        parts.append(flag + ",".join(str(label[w]) for w in ring))
    return "|".join(parts)


# --- the three sporadic graphs ----------------------------------------------


def octahedron() -> PlaneGraph:
    """The octahedron with outer face 0,1,2 and interior 3,4,5."""
    return build_plane_graph(
        {
            0: [1, 4, 3, 2],
            1: [2, 5, 4, 0],
            2: [0, 3, 5, 1],
            3: [0, 4, 5, 2],
            4: [0, 1, 5, 3],
            5: [1, 2, 3, 4],
        },
        [0, 1, 2],
    )


def three_bifan() -> PlaneGraph:
    """Octahedron minus one boundary edge; boundary is a 4-gon."""
    g = octahedron()
    return g.delete_edge(0, 1)


def special_heptagon() -> PlaneGraph:
    """The 10-vertex sporadic graph: 7 boundary vertices with cyclic degree
    pattern 4,3,4,3,4,3,4 and 3 interior vertices."""
    # boundary t,u,v,w,x,y,z = 0..6; interior p,q,r = 7,8,9
    t, u, v, w, x, y, z = range(7)
    p, q, r = 7, 8, 9
    rot = {
        t: [z, r, u],
        u: [t, r, p, v],
        v: [u, p, w],
        w: [v, p, r, x],
        x: [w, r, q, y],
        y: [x, q, z],
        z: [y, q, r, t],
        p: [u, r, w, v],
        q: [x, r, z, y],
        r: [t, z, q, x, w, p, u],
    }
    return build_plane_graph(rot, [t, u, v, w, x, y, z])


_SPORADIC_CODES: Dict[str, str] = {}


def _sporadic_codes() -> Dict[str, str]:
    if not _SPORADIC_CODES:
        for name, g in (
            ("octahedron", octahedron()),
            ("3-bifan", three_bifan()),
            ("special-heptagon", special_heptagon()),
        ):
            _SPORADIC_CODES[name] = canonical_form(SkeletalView(g, "skeletal"))
    return _SPORADIC_CODES


def is_sporadic(view: SkeletalView) -> Optional[str]:
    """Name of the sporadic graph this view is isomorphic to, or None."""
    g = view.graph
    if g.n not in (6, 10) or not (11 <= g.m <= 20):
        return None
    code = canonical_form(SkeletalView(g, "skeletal"))
    for name, ref in _sporadic_codes().items():
        if code == ref:
            return name
    return None
