"""Generators: exhaustive small corpora, sporadic graphs, lower-bound
families, and random triangulations.

The exhaustive enumerators produce every internally triangulated disk
(given boundary length and interior budget) exactly once per labeled
boundary, from which plane triangulations, polygon triangulations,
near-triangulations, and the full skeletal closure (cut vertices, bridges,
degree-2 cut chains) are derived with canonical deduplication.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .plane import (
    EmbeddingError,
    PlaneGraph,
    SkeletalView,
    Vertex,
    build_plane_graph,
    canonical_form,
    fuse,
    attach,
    octahedron,
    special_heptagon,
    three_bifan,
    validate,
    violations_of,
)

Triangle = Tuple[Vertex, Vertex, Vertex]


class GenerationError(ValueError):
    pass


# =====================================================================
# Disk triangulations (the enumeration workhorse)
# =====================================================================


def _disk_triangle_lists(
    bnd: Tuple[Vertex, ...],
    budget: int,
    fresh: int,
    adj: Optional[FrozenSet[FrozenSet[Vertex]]] = None,
) -> Iterator[Tuple[List[Triangle], int]]:
    """All triangle decompositions of the disk with boundary cycle ``bnd``
    and up to ``budget`` interior vertices (labeled from ``fresh`` upward).

    ``adj`` carries every already-existing edge among the cycle's vertices
    (consecutive or ancestral), so no parallel edge is ever created.  Each
    final triangulation is produced exactly once because the triangle
    adjoining the base edge (bnd[0], bnd[-1]) determines the decomposition.
    """
    k = len(bnd)
    if adj is None:
        adj = frozenset(
            frozenset((bnd[i], bnd[(i + 1) % k])) for i in range(k)
        )
    if k == 2:
        yield [], 0
        return
    # apex on the boundary: splits into two independent sub-disks
    for j in range(1, k - 1):
        e1 = frozenset((bnd[0], bnd[j]))
        e2 = frozenset((bnd[j], bnd[-1]))
        if (j > 1 and e1 in adj) or (j < k - 2 and e2 in adj):
            continue
        tri = (bnd[0], bnd[j], bnd[-1])
        adj2 = adj | {e1, e2}
        sub1, sub2 = bnd[: j + 1], bnd[j:]
        a1 = frozenset(e for e in adj2 if e <= set(sub1))
        for t1, u1 in _disk_triangle_lists(sub1, budget, fresh, a1):
            a2 = frozenset(e for e in adj2 if e <= set(sub2))
            for t2, u2 in _disk_triangle_lists(
                sub2, budget - u1, fresh + u1, a2
            ):
                yield [tri] + t1 + t2, u1 + u2
    # apex is a fresh interior vertex
    if budget > 0:
        m = fresh
        tri = (bnd[0], m, bnd[-1])
        adj2 = adj | {frozenset((bnd[0], m)), frozenset((bnd[-1], m))}
        for t, u in _disk_triangle_lists(
            bnd + (m,), budget - 1, fresh + 1, adj2
        ):
            yield [tri] + t, u + 1


def _embed_triangles(
    boundary: Sequence[Vertex], triangles: List[Triangle]
) -> PlaneGraph:
    """Build the rotation system of a disk triangulation from its triangle
    list, orienting all triangles consistently with the boundary cycle."""
    b = len(boundary)
    # orient triangles by propagation across shared edges
    edge_tris: Dict[FrozenSet[Vertex], List[int]] = {}
    for i, (x, y, z) in enumerate(triangles):
        for e in (frozenset((x, y)), frozenset((y, z)), frozenset((z, x))):
            edge_tris.setdefault(e, []).append(i)
    oriented: Dict[int, Triangle] = {}
    if not triangles:  # bare polygon edge case cannot happen (b >= 3)
        raise GenerationError("empty triangle list")
    # seed: the triangle on boundary edge (boundary[0], boundary[1]) must
    # traverse that edge opposite to the outer walk
    seed_edge = frozenset((boundary[0], boundary[1]))
    seed = edge_tris[seed_edge][0]
    x, y, z = triangles[seed]
    rest = ({x, y, z} - {boundary[0], boundary[1]}).pop()
    oriented[seed] = (boundary[1], boundary[0], rest)
    stack = [seed]
    while stack:
        i = stack.pop()
        ox, oy, oz = oriented[i]
        for (a, c) in ((ox, oy), (oy, oz), (oz, ox)):
            for j in edge_tris[frozenset((a, c))]:
                if j in oriented or j == i:
                    continue
                other = (set(triangles[j]) - {a, c}).pop()
                # shared edge must be traversed in the opposite direction
                oriented[j] = (c, a, other)
                stack.append(j)
    if len(oriented) != len(triangles):
        raise GenerationError("triangle complex not edge-connected")
    # rotation at v: chain successor map from oriented corners
    succ: Dict[Vertex, Dict[Vertex, Vertex]] = {}
    for (x, y, z) in oriented.values():
        succ.setdefault(x, {})[y] = z
        succ.setdefault(y, {})[z] = x
        succ.setdefault(z, {})[x] = y
    rot: Dict[Vertex, List[Vertex]] = {}
    for v, chain in succ.items():
        targets = set(chain.values())
        starts = [w for w in chain if w not in targets]
        cur = starts[0] if starts else next(iter(chain))
        ring = [cur]
        while chain.get(cur) is not None and chain[cur] not in ring:
            cur = chain[cur]
            ring.append(cur)
        rot[v] = ring
    g = PlaneGraph(rot, (boundary[1], boundary[0]))
    # the dart (boundary[1], boundary[0]) traces the outer walk by the seed
    # orientation convention; verify and fall back to a face search
    walk = set(g.outer_walk())
    if walk != set(boundary) or len(g.outer_face()) != b:
        for d in ((boundary[0], boundary[1]), (boundary[1], boundary[0])):
            probe = PlaneGraph(rot, d)
            f = probe.outer_face()
            if len(f) == b and {x for x, _ in f} == set(boundary):
                return probe
        raise GenerationError("could not locate the outer face")
    return g


def enumerate_disk_triangulations(
    boundary_len: int, max_interior: int
) -> Iterator[PlaneGraph]:
    """Every triangulated disk with the labeled boundary cycle 0..b-1 and at
    most ``max_interior`` interior vertices, each exactly once."""
    bnd = tuple(range(boundary_len))
    for tris, _ in _disk_triangle_lists(bnd, max_interior, boundary_len):
        yield _embed_triangles(bnd, tris)


def enumerate_polygon_triangulations(n: int) -> Iterator[PlaneGraph]:
    """All Catalan(n-2) triangulations of the labeled n-gon."""
    if n < 3:
        raise GenerationError("polygon needs >= 3 vertices")
    yield from enumerate_disk_triangulations(n, 0)


def enumerate_plane_triangulations(max_n: int) -> List[PlaneGraph]:
    """All plane triangulations (3 boundary vertices) with <= max_n
    vertices, deduplicated up to embedding isomorphism."""
    seen: Set[str] = set()
    out: List[PlaneGraph] = []
    for g in enumerate_disk_triangulations(3, max_n - 3):
        code = canonical_form(SkeletalView(g, "skeletal"))
        if code not in seen:
            seen.add(code)
            out.append(g)
    return out


def enumerate_near_triangulations(max_n: int) -> List[PlaneGraph]:
    """All near-triangulations with <= max_n vertices up to embedding
    isomorphism (every boundary length, every interior budget)."""
    seen: Set[str] = set()
    out: List[PlaneGraph] = []
    for b in range(3, max_n + 1):
        for g in enumerate_disk_triangulations(b, max_n - b):
            code = canonical_form(SkeletalView(g, "skeletal"))
            if code not in seen:
                seen.add(code)
                out.append(g)
    return out


def enumerate_skeletal(max_n: int) -> List[PlaneGraph]:
    """All skeletal triangulations with <= max_n vertices up to embedding
    isomorphism: near-triangulations closed under fusing rooted parts
    (which covers cut vertices, bridges, and degree-2 cut chains)."""
    near = enumerate_near_triangulations(max_n)
    parts = _rooted_parts(max_n - 1)
    seen: Set[str] = set()
    out: List[PlaneGraph] = []

    def emit(g: PlaneGraph) -> None:
        code = canonical_form(SkeletalView(g, "skeletal"))
        if code not in seen:
            seen.add(code)
            out.append(g)

    for g in near:
        emit(g)
    i = 0
    while i < len(out):
        host = out[i]
        i += 1
        room = max_n - host.n
        if room < 1:
            continue
        hv = SkeletalView(host, "skeletal")
        for part, root in parts:
            if part.n - 1 > room:
                continue
            pv = SkeletalView(part, "vertex-rooted", (root,))
            for u in sorted(host.boundary_set()):
                fused, _ = fuse(hv, u, pv)
                emit(fused.graph)
    return out


def _rooted_parts(max_extra: int) -> List[Tuple[PlaneGraph, Vertex]]:
    """Vertex-rooted parts with at most ``max_extra`` non-root vertices:
    near-triangulations rooted at a boundary vertex, skeletal fusions, and
    pendant extensions (a fresh degree-1 root bridged to the boundary)."""
    base: List[Tuple[PlaneGraph, Vertex]] = []
    seen: Set[str] = set()

    def emit(g: PlaneGraph, root: Vertex) -> bool:
        code = canonical_form(SkeletalView(g, "vertex-rooted", (root,)))
        if code in seen:
            return False
        seen.add(code)
        base.append((g, root))
        return True

    for g in enumerate_skeletal_blocks(max_extra + 1):
        for u in sorted(g.boundary_set()):
            emit(g, u)
    # close under pendant extension and fusion
    i = 0
    while i < len(base):
        g, root = base[i]
        i += 1
        if g.n + 1 <= max_extra + 1:
            ext = {v: list(ns) for v, ns in g.rot.items()}
            new_root = max(ext) + 1
            root_deg = len(g.rot[root])
            for u in sorted(g.boundary_set()):
                # a degree-1 root may only be extended at itself (making it
                # a degree-2 chain vertex); elsewhere it would stay pendant
                if root_deg == 1 and u != root:
                    continue
                rot2 = {v: list(ns) for v, ns in ext.items()}
                rot2[new_root] = [u]
                # insert the bridge into u's outer gap
                pred = next(a for (a, b) in g.outer_face() if b == u)
                ring = rot2[u]
                k = ring.index(pred)
                rot2[u] = ring[: k + 1] + [new_root] + ring[k + 1:]
                g2 = PlaneGraph(rot2, g.outer_dart)
                emit(g2, new_root)
        hv = SkeletalView(g, "vertex-rooted", (root,))
        for part, proot in list(base):
            if g.n + part.n - 1 > max_extra + 1:
                continue
            pv = SkeletalView(part, "vertex-rooted", (proot,))
            for u in sorted(g.boundary_set()):
                try:
                    fused, relabel = fuse(
                        SkeletalView(g, "skeletal"), u, pv
                    )
                except EmbeddingError:
                    continue
                emit(fused.graph, root)
    return base


def enumerate_skeletal_blocks(max_n: int) -> List[PlaneGraph]:
    """Near-triangulations and the bare triangle chain seeds used by the
    skeletal closure (kept separate for reuse)."""
    return enumerate_near_triangulations(max_n)


# =====================================================================
# Sporadic graphs
# =====================================================================

SPORADICS = ("octahedron", "3-bifan", "special-heptagon")


def sporadic(kind: str) -> SkeletalView:
    if kind == "octahedron":
        return validate(octahedron(), "skeletal")
    if kind == "3-bifan":
        return validate(three_bifan(), "skeletal")
    if kind == "special-heptagon":
        return validate(special_heptagon(), "skeletal")
    raise GenerationError(f"unknown sporadic {kind!r}")


# =====================================================================
# Random triangulations
# =====================================================================


def random_triangulation(n: int, seed: int) -> SkeletalView:
    """Random plane triangulation: stacked construction followed by n²
    random diagonal flips; deterministic per seed."""
    if n < 4:
        raise GenerationError("random triangulation needs n >= 4")
    rng = random.Random(seed)
    rot: Dict[Vertex, List[Vertex]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    g = build_plane_graph(rot, [0, 1, 2])
    tris = list(g.bounded_triangles())
    for v in range(3, n):
        a, b, c = tris.pop(rng.randrange(len(tris)))
        face = _find_bounded_face(g, (a, b, c))
        rot2 = {x: list(ns) for x, ns in g.rot.items()}
        rot2[v] = []
        for (p, q) in face:  # darts of the face, in trace order
            ring = rot2[q]
            ring.insert(ring.index(p) + 1, v)
            rot2[v].append(q)
        rot2[v].reverse()
        g = PlaneGraph(rot2, g.outer_dart)
        tris.extend([(a, b, v), (b, c, v), (c, a, v)])
    # random diagonal flips
    for _ in range(n * n):
        inner = [
            tuple(e)
            for e in g.edges()
            if not g.is_boundary_edge(*tuple(e))
        ]
        u, v = inner[rng.randrange(len(inner))]
        sides = _flip_sides(g, u, v)
        if sides is None:
            continue
        a, b = sides
        if g.has_edge(a, b):
            continue
        g2 = g.delete_edge(u, v)
        quad = next(f for f in g2.faces() if len(f) == 4 and f != g2.outer_face())
        g = g2.add_edge(a, b, quad[0])
    assert g.m == 3 * n - 6, "flip sequence broke the edge count"
    return validate(g, "triangulation")


def _find_bounded_face(g: PlaneGraph, tri: Triangle):
    want = set(tri)
    for f in g.bounded_faces():
        if len(f) == 3 and {d[0] for d in f} == want:
            return f
    raise GenerationError(f"face {tri} not found")


def _flip_sides(g: PlaneGraph, u: Vertex, v: Vertex) -> Optional[Tuple[Vertex, Vertex]]:
    """Apexes of the two bounded triangles on edge u,v; None if not two."""
    apexes = []
    for f in g.bounded_faces():
        if len(f) == 3:
            vs = {d[0] for d in f}
            if u in vs and v in vs:
                apexes.append((vs - {u, v}).pop())
    if len(apexes) != 2 or apexes[0] == apexes[1]:
        return None
    return apexes[0], apexes[1]


# =====================================================================
# Lower-bound families
# =====================================================================

FAMILY_KINDS = (
    "mt_outerplanar",
    "k4_chain",
    "gadget7",
    "gadget10",
    "deg2cut",
    "threeconn11",
    "eulerian_quarter",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    k: int

    @property
    def contract(self) -> Tuple[int, int]:
        """(n(k), gamma(k)) promised by the family."""
        k = self.k
        return {
            "mt_outerplanar": (3 * k, k),
            "k4_chain": (4 * k, k),
            "gadget7": (7 * k, 2 * k),
            "gadget10": (10 * k, 3 * k),
            "deg2cut": (10 * k, 3 * k),
            "threeconn11": (11 * k + 1, 3 * k),
            "eulerian_quarter": (12 * k, 3 * k),
        }[self.kind]


def family(spec: FamilySpec) -> SkeletalView:
    if spec.k < 1:
        raise GenerationError("k must be >= 1")
    maker = {
        "mt_outerplanar": _mt_outerplanar,
        "k4_chain": _k4_chain,
        "gadget7": lambda k: _block_on_polygon(k, _gadget7_block()),
        "gadget10": lambda k: _block_on_polygon(k, _gadget10_block()),
        "deg2cut": _deg2cut,
        "threeconn11": _threeconn11,
        "eulerian_quarter": _eulerian_quarter,
    }[spec.kind]
    return maker(spec.k)


def _mt_outerplanar(k: int) -> SkeletalView:
    """Triangulated 3k-gon where every third boundary vertex has degree 2
    (an ear at each), so each ear needs its own dominator: gamma = k."""
    if k < 1:
        raise GenerationError("k >= 1")
    n = 3 * k
    if k == 1:
        return validate(
            build_plane_graph({0: [1, 2], 1: [2, 0], 2: [0, 1]}, [0, 1, 2])
        )
    tris: List[Triangle] = []
    ring = []  # polygon after clipping the ears
    for i in range(k):
        a, t, b = 3 * i, 3 * i + 1, 3 * i + 2
        tris.append((a, t, b))
        ring.extend([a, b])
    # triangulate the inner 2k-gon (fan from ring[0]), plus the clipped
    # corner triangles (b_i, a_{i+1}) are polygon edges already
    for j in range(1, len(ring) - 1):
        tris.append((ring[0], ring[j], ring[j + 1]))
    bnd = tuple(range(n))
    g = _embed_triangles(bnd, tris)
    return validate(g, "near-triangulation")


def _k4_chain(k: int) -> SkeletalView:
    """k disjoint K4 blocks chained into a triangulation: n = 4k, gamma = k.

    Rim: the 3k-gon 0..3k-1 with an ear chord (3i, 3i+2) per block and an
    apex w_i = 3k+i stacked inside each ear, so N[w_i] is exactly its block
    (k disjoint closed neighborhoods force gamma >= k; the ear middles 3i+1
    dominate everything, giving gamma <= k).  The inner 2k-gon is fanned
    from 0 and the outside of the rim is fanned down to a 3-vertex outer
    face on existing vertices.
    """
    if k == 1:
        tris = [(0, 1, 3), (1, 2, 3), (2, 0, 3)]
        return validate(_embed_triangles((0, 1, 2), tris), "triangulation")
    m = 3 * k
    tris: List[Triangle] = []
    # ears with stacked apexes
    for i in range(k):
        w = m + i
        tris += [(3 * i, 3 * i + 1, w), (3 * i + 1, 3 * i + 2, w),
                 (3 * i + 2, 3 * i, w)]
    # inner 2k-gon (alternating ear corners), fanned from vertex 0
    inner = [v for i in range(k) for v in (3 * i, 3 * i + 2)]
    for j in range(1, 2 * k - 1):
        tris.append((0, inner[j], inner[j + 1]))
    # outside of the rim: fan each arc between consecutive corners
    corners = (1, 2, 4) if k == 2 else (1, 4, 7)
    for c, c2 in zip(corners, corners[1:] + corners[:1]):
        arc = [c]
        v = c
        while v != c2:
            v = (v + 1) % m
            arc.append(v)
        for j in range(1, len(arc) - 1):
            tris.append((c, arc[j], arc[j + 1]))
    g = _embed_triangles(corners, tris)
    return validate(g, "triangulation")


def _gadget7_block() -> SkeletalView:
    """Edge-rooted 7-gon needing two dominators even with the root edge
    exempt; acts as A+B on the root edge."""
    # polygon u,v,w,x,y,z,t = 0..6; chords v-x, v-y, u-y, u-z
    tris = [(1, 2, 3), (1, 3, 4), (0, 1, 4), (0, 4, 5), (0, 5, 6)]
    g = _embed_triangles(tuple(range(7)), tris)
    return validate(g, "edge-rooted", (0, 1))


def _gadget10_block() -> SkeletalView:
    """Edge-rooted 10-gon needing three dominators with the root exempt."""
    # u,v,a,b,c,d,e,f,g,h = 0..9; chords v-b, v-c, u-g, u-f, c-e, c-f, u-c
    tris = [
        (1, 2, 3),
        (1, 3, 4),
        (0, 1, 4),
        (4, 5, 6),
        (4, 6, 7),
        (0, 4, 7),
        (0, 7, 8),
        (0, 8, 9),
    ]
    g = _embed_triangles(tuple(range(10)), tris)
    return validate(g, "edge-rooted", (0, 1))


def _block_on_polygon(k: int, block: SkeletalView) -> SkeletalView:
    """Attach a copy of the edge-rooted block to every second boundary edge
    of a triangulated 2k-gon (k = 1: the block alone, closed)."""
    if k == 1:
        return validate(block.graph, "near-triangulation")
    m = 2 * k
    tris = [(0, j, j + 1) for j in range(1, m - 1)]
    host = validate(_embed_triangles(tuple(range(m)), tris), "near-triangulation")
    view = host
    for i in range(k):
        u, v = 2 * i, 2 * i + 1
        view, _ = attach(view, u, v, block)
    return validate(view.graph, "near-triangulation")


def _deg2cut(k: int) -> SkeletalView:
    """Triangulated k-gon whose every vertex carries a pendant blob behind a
    degree-2 cut vertex; n = 10k, gamma = 3k, penalty n + k/2."""
    if k < 3:
        raise GenerationError("deg2cut needs k >= 3 (polygon host)")
    blob, root = _deg2cut_blob()
    tris = [(0, j, j + 1) for j in range(1, k - 1)]
    host = _embed_triangles(tuple(range(k)), tris)
    rot = {v: list(ns) for v, ns in host.rot.items()}
    nxt = k
    for p in range(k):
        c = nxt
        nxt += 1
        relabel = {v: nxt + i for i, v in enumerate(sorted(blob.rot))}
        nxt += blob.n
        for v, ns in blob.rot.items():
            rot[relabel[v]] = [relabel[w] for w in ns]
        # hang p - c - blob_root as two bridges
        rot[c] = [p, relabel[root]]
        # insert c into p's outer gap and the blob root's outer gap
        _insert_in_outer_gap(host, rot, p, c)
        ring = rot[relabel[root]]
        pred = next(
            a for (a, b) in blob.outer_face() if b == root
        )
        i = ring.index(relabel[pred])
        rot[relabel[root]] = ring[: i + 1] + [c] + ring[i + 1:]
    g = PlaneGraph(rot, host.outer_dart)
    return validate(g, "skeletal")


def _insert_in_outer_gap(
    base: PlaneGraph, rot: Dict[Vertex, List[Vertex]], u: Vertex, w: Vertex
) -> None:
    pred = next(a for (a, b) in base.outer_face() if b == u)
    ring = rot[u]
    i = ring.index(pred)
    rot[u] = ring[: i + 1] + [w] + ring[i + 1:]


_DEG2CUT_BLOB: Optional[Tuple[Dict[int, List[int]], List[int], int]] = None


def _deg2cut_blob() -> Tuple[PlaneGraph, Vertex]:
    """The 8-vertex pendant blob, found by bounded search (see
    scripts/search_blocks.py) and frozen here.

    Its attachment vertex (the root) is an ear tip of degree 2 whose ear
    disappears once the bridge raises its degree to 3.  No pair of vertices
    dominates the 10-vertex hanging unit (blob + cut vertex + bridge stub)
    minus the stub, so every unit of the composed family demands three
    dominators, while three always suffice."""
    rot = {
        0: [3, 1],
        1: [0, 3, 4, 5, 6, 2],
        2: [1, 6, 3],
        3: [2, 6, 7, 4, 1, 0],
        4: [1, 3, 7, 5],
        5: [1, 4, 7, 6],
        6: [1, 5, 7, 3, 2],
        7: [4, 3, 6, 5],
    }
    g = build_plane_graph(rot, [0, 3, 2, 1])
    return g, 0


# 12-vertex 3-connected near-triangulation whose hub (vertex 3, boundary,
# degree 3) can be handed to the dominating set for free and the other 11
# vertices still need 3 dominators.  Found by exhaustive search over disk
# triangulations with 12 vertices (scripts/search_blocks.py); the block also
# acts as B on the hub's leading boundary edge and as A on its trailing one.
_THREECONN11_ROT: Dict[Vertex, List[Vertex]] = {
    0: [4, 5, 1],
    1: [0, 5, 2],
    2: [1, 5, 6, 7, 8, 3],
    3: [2, 8, 4],
    4: [3, 8, 9, 10, 6, 5, 0],
    5: [1, 0, 4, 6, 2],
    6: [2, 5, 4, 10, 11, 8, 7],
    7: [2, 6, 8],
    8: [7, 6, 11, 9, 4, 3, 2],
    9: [4, 8, 11, 10],
    10: [4, 9, 11, 6],
    11: [9, 8, 6, 10],
}
_THREECONN11_HUB = 3
_THREECONN11_WALK = (3, 2, 1, 0, 4)  # outer walk starting at the hub


def _threeconn11(k: int) -> SkeletalView:
    """k copies of a hard 12-vertex block sharing one hub vertex, zipped
    closed into a 3-connected near-triangulation; n = 11k + 1, gamma = 3k.

    Each block keeps demanding 3 dominators even when the shared hub is
    free, so gamma = 3k; the zipper edges between consecutive blocks'
    boundary ends triangulate the gaps around the hub and restore
    3-connectivity.
    """
    hub = _THREECONN11_HUB
    block = build_plane_graph(_THREECONN11_ROT, list(_THREECONN11_WALK))
    if k == 1:
        return validate(block, "near-triangulation")
    view = validate(block, "skeletal")
    part = validate(block, "vertex-rooted", (hub,))
    for _ in range(k - 1):
        view, _rel = fuse(view, hub, part)
    g = view.graph
    # Zip consecutive blocks: the outer walk visits the hub k times; join
    # the last vertex of each hub-to-hub segment to the first vertex of the
    # next segment, triangulating the corner at the hub.
    for _ in range(k):
        walk = list(g.outer_walk())
        i = walk.index(hub)
        a, b = walk[i - 1], walk[(i + 1) % len(walk)]
        outer = g.outer_face()
        far = next(d for d in outer if set(d).isdisjoint({hub, a, b}))
        g = g.add_edge(a, b, outer[0], far)
    return validate(g, "near-triangulation")


# 12-vertex block with all degrees even and gamma = 3, found by filtering
# the exhaustive triangulation corpus.  Both port faces are "strong": the
# vertices outside the two ports still need 3 dominators, so chained copies
# each demand 3 and the chain keeps gamma = n/4.
_EULERIAN_BLOCK_ROT: Dict[Vertex, List[Vertex]] = {
    0: [2, 3, 4, 1],
    1: [0, 4, 5, 2],
    2: [1, 5, 3, 0],
    3: [4, 0, 2, 5, 6, 7],
    4: [1, 0, 3, 7, 8, 5],
    5: [1, 4, 8, 9, 10, 6, 3, 2],
    6: [3, 5, 10, 11, 8, 7],
    7: [3, 6, 8, 4],
    8: [5, 4, 7, 6, 11, 9],
    9: [8, 11, 10, 5],
    10: [6, 5, 9, 11],
    11: [8, 6, 10, 9],
}
_EULERIAN_ENTRY = (3, 5, 6)   # nested copies expose this face outward
_EULERIAN_EXIT = (4, 5, 8)    # the next copy nests inside this face


def _eulerian_quarter(k: int) -> SkeletalView:
    """Chain of k even 12-vertex blocks joined by zigzag annuli between
    strong triangular port faces; every join adds degree 2 to each port
    vertex, so all degrees stay even.  n = 12k, gamma = 3k."""
    g = build_plane_graph(_EULERIAN_BLOCK_ROT, [0, 1, 2])
    for i in range(1, k):
        o = 12 * i
        exit_set = {v + 12 * (i - 1) for v in _EULERIAN_EXIT}
        host_face = next(
            f for f in g.bounded_faces() if {d[0] for d in f} == exit_set
        )
        guest_rot = {
            v + o: [w + o for w in ns]
            for v, ns in _EULERIAN_BLOCK_ROT.items()
        }
        guest = build_plane_graph(
            guest_rot, [v + o for v in _EULERIAN_ENTRY]
        )
        g = _zigzag_annulus(g, host_face, guest)
    return validate(g, "triangulation")


def _zigzag_annulus(
    host: PlaneGraph, host_face: Tuple[Tuple[Vertex, Vertex], ...],
    guest: PlaneGraph
) -> PlaneGraph:
    """Embed ``guest`` (disjoint labels) inside the triangular bounded face
    ``host_face`` of ``host`` and triangulate the annulus between that face
    and the guest's triangular outer face with the 6-edge zigzag a1-a2,
    a2-b1, b1-b2, b2-c1, c1-c2, c2-a1.  Every port vertex gains degree 2."""
    hc = [d[0] for d in host_face]            # host face in trace order
    gf = guest.outer_face()
    gc = [d[0] for d in gf]                   # guest outer face trace order
    corner = {}                               # v -> (pred, succ) of the gap
    for (x, y), (_, z) in zip(host_face, host_face[1:] + host_face[:1]):
        corner[y] = (x, z)
    for (x, y), (_, z) in zip(gf, gf[1:] + gf[:1]):
        corner[y] = (x, z)

    base = {v: list(ns) for v, ns in host.rot.items()}
    base.update({v: list(ns) for v, ns in guest.rot.items()})

    for cyc in (gc, list(reversed(gc))):
        for shift in range(3):
            a2, b2, c2 = cyc[shift:] + cyc[:shift]
            a1, b1, c1 = hc
            adds = {
                a1: [c2, a2], b1: [a2, b2], c1: [b2, c2],
                a2: [a1, b1], b2: [b1, c1], c2: [c1, a1],
            }
            for flip_h in (False, True):
                for flip_g in (False, True):
                    rot = {v: list(ns) for v, ns in base.items()}
                    for v, extra in adds.items():
                        pred, _succ = corner[v]
                        flip = flip_h if v in (a1, b1, c1) else flip_g
                        ins = list(reversed(extra)) if flip else extra
                        ring = rot[v]
                        j = ring.index(pred)
                        rot[v] = ring[: j + 1] + ins + ring[j + 1:]
                    cand = PlaneGraph(rot, host.outer_dart)
                    if not violations_of(cand, "triangulation"):
                        return cand
    raise GenerationError("annulus join failed")


# ---------------------------------------------------------------------
# corpus loading (planar code) lives in ioformats; re-exported by __init__
