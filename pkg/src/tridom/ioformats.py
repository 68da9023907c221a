"""Graph file formats and SVG export.

Two interchange formats are supported:

* **planar code** — the compact binary format emitted by common plane-graph
  generators: the ASCII header ``>>planar_code<<`` followed by records, one
  per graph.  A record is one byte ``n`` (so n <= 255), then for each vertex
  ``1..n`` its rotation as 1-based neighbor indices terminated by a 0 byte.
* **text format** — line 1 is ``n``, then one line per vertex
  ``id: neighbor neighbor ...`` giving the counterclockwise rotation, and a
  final line ``outer: v1 v2 ...`` naming the outer face walk.

SVG export draws the graph with straight lines using barycentric (Tutte)
placement: the outer walk is pinned to a convex polygon and every interior
vertex sits at the average of its neighbors, which yields a planar drawing
for 3-connected embeddings and a readable one in general.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .plane import (
    EmbeddingError,
    PlaneGraph,
    SkeletalView,
    Vertex,
    build_plane_graph,
)

PLANAR_CODE_HEADER = b">>planar_code<<"


class ParseError(ValueError):
    """Malformed input file; the message carries position information."""


# =====================================================================
# planar code
# =====================================================================


def _with_default_outer(rot: Dict[Vertex, List[Vertex]]) -> PlaneGraph:
    """Pick the outer face as the first traced face of maximum length."""
    some_v = next(iter(rot))
    probe = PlaneGraph(rot, (some_v, rot[some_v][0]))
    bad = probe.check_basic()
    if bad:
        raise ParseError("; ".join(bad))
    faces = probe.faces()
    best = max(faces, key=len)  # max() keeps the first among ties
    return PlaneGraph(rot, best[0])


def decode_planar_code(data: bytes) -> List[PlaneGraph]:
    """Decode every record of a planar-code file.

    The outer face of each graph is the first traced face of maximum
    length (callers may re-root with a different outer dart).
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise ParseError("missing planar_code header")
    pos = len(PLANAR_CODE_HEADER)
    out: List[PlaneGraph] = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise ParseError(f"record at byte {pos - 1} has n = 0")
        rot: Dict[Vertex, List[Vertex]] = {}
        for v in range(1, n + 1):
            ring: List[Vertex] = []
            while True:
                if pos >= len(data):
                    raise ParseError(f"truncated record for vertex {v}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise ParseError(
                        f"vertex {v}: neighbor index {b} out of range 1..{n}"
                    )
                ring.append(b)
            rot[v] = ring
        out.append(_with_default_outer(rot))
    return out


def encode_planar_code(graphs: Iterable[PlaneGraph]) -> bytes:
    """Encode graphs as one planar-code file (vertices relabeled 1..n)."""
    chunks = [PLANAR_CODE_HEADER]
    for g in graphs:
        if g.n > 255:
            raise ParseError(f"planar code holds at most 255 vertices, got {g.n}")
        order = sorted(g.rot)
        index = {v: i + 1 for i, v in enumerate(order)}
        rec = bytearray([g.n])
        for v in order:
            rec.extend(index[w] for w in g.rot[v])
            rec.append(0)
        chunks.append(bytes(rec))
    return b"".join(chunks)


# =====================================================================
# text format
# =====================================================================


def write_text(g: PlaneGraph) -> str:
    lines = [str(g.n)]
    for v in sorted(g.rot):
        lines.append(f"{v}: " + " ".join(str(w) for w in g.rot[v]))
    lines.append("outer: " + " ".join(str(v) for v in g.outer_walk()))
    return "\n".join(lines) + "\n"


def read_text(text: str) -> PlaneGraph:
    lines = [ln for ln in text.splitlines()]
    body = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not body:
        raise ParseError("empty file")
    lno, first = body[0]
    try:
        n = int(first)
    except ValueError:
        raise ParseError(f"line {lno}: expected vertex count, got {first!r}")
    rot: Dict[Vertex, List[Vertex]] = {}
    outer: Optional[List[Vertex]] = None
    for lno, ln in body[1:]:
        head, _, rest = ln.partition(":")
        if not _:
            raise ParseError(f"line {lno}: expected 'id: neighbors'")
        try:
            ring = [int(t) for t in rest.split()]
        except ValueError:
            raise ParseError(f"line {lno}: non-integer neighbor in {rest!r}")
        if head.strip() == "outer":
            outer = ring
            continue
        try:
            v = int(head)
        except ValueError:
            raise ParseError(f"line {lno}: bad vertex id {head!r}")
        if v in rot:
            raise ParseError(f"line {lno}: duplicate vertex {v}")
        rot[v] = ring
    if len(rot) != n:
        raise ParseError(f"header says {n} vertices, file lists {len(rot)}")
    if outer is None:
        raise ParseError("missing 'outer:' line")
    try:
        return build_plane_graph(rot, outer)
    except EmbeddingError as exc:
        raise ParseError(str(exc))


def load_graphs(path: str) -> List[PlaneGraph]:
    """Read a graph file in either format, detected by the header bytes."""
    with open(path, "rb") as f:
        data = f.read()
    if data.startswith(PLANAR_CODE_HEADER):
        return decode_planar_code(data)
    return [read_text(data.decode("utf-8"))]


def load_graph(path: str) -> PlaneGraph:
    graphs = load_graphs(path)
    if len(graphs) != 1:
        raise ParseError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


# =====================================================================
# SVG export
# =====================================================================


def tutte_layout(g: PlaneGraph) -> Dict[Vertex, Tuple[float, float]]:
    """Barycentric placement with the outer walk on a convex polygon."""
    walk = list(dict.fromkeys(g.outer_walk()))
    order = sorted(g.rot)
    idx = {v: i for i, v in enumerate(order)}
    k = len(walk)
    pos: Dict[Vertex, Tuple[float, float]] = {}
    for i, v in enumerate(walk):
        ang = 2 * np.pi * i / k
        pos[v] = (float(np.cos(ang)), float(np.sin(ang)))
    inner = [v for v in order if v not in pos]
    if inner:
        a = np.zeros((len(inner), len(inner)))
        bx = np.zeros(len(inner))
        by = np.zeros(len(inner))
        ii = {v: i for i, v in enumerate(inner)}
        for v in inner:
            i = ii[v]
            deg = g.degree(v)
            a[i, i] = deg
            for w in g.rot[v]:
                if w in ii:
                    a[i, ii[w]] -= 1
                else:
                    bx[i] += pos[w][0]
                    by[i] += pos[w][1]
        xs = np.linalg.solve(a, bx)
        ys = np.linalg.solve(a, by)
        for v in inner:
            pos[v] = (float(xs[ii[v]]), float(ys[ii[v]]))
    return pos


def export_svg(
    view: SkeletalView,
    dominating_set: Optional[Set[Vertex]] = None,
    size: int = 480,
) -> str:
    """Straight-line SVG drawing; dominating-set vertices drawn filled."""
    g = view.graph if isinstance(view, SkeletalView) else view
    marked = dominating_set or set()
    pos = tutte_layout(g)
    pad, span = 30.0, size - 60.0

    def pt(v: Vertex) -> Tuple[float, float]:
        x, y = pos[v]
        return (pad + (x + 1) / 2 * span, pad + (y + 1) / 2 * span)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">'
    ]
    for (u, w) in sorted(g.edges()):
        x1, y1 = pt(u)
        x2, y2 = pt(w)
        parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
            'stroke="black" stroke-width="1.2"/>'
        )
    for v in sorted(g.rot):
        x, y = pt(v)
        fill = "#d62728" if v in marked else "white"
        parts.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="9" fill="{fill}" '
            'stroke="black" stroke-width="1.2"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{y + 3.5:.2f}" font-size="9" '
            f'text-anchor="middle" font-family="sans-serif">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def svg_segments(svg: str) -> List[Tuple[float, float, float, float]]:
    """Extract line segments from an exported SVG (for crossing checks)."""
    import re

    out = []
    for m in re.finditer(
        r'<line x1="([-\d.]+)" y1="([-\d.]+)" x2="([-\d.]+)" y2="([-\d.]+)"', svg
    ):
        out.append(tuple(float(x) for x in m.groups()))
    return out
