"""Recursive construction of dominating sets within the penalty budget.

Given a skeletal triangulation G, :func:`solve` produces a dominating set
of size at most ``floor(phi(G) / 3.5)`` in quadratic time.  The strategy is
structural induction:

* split at bridges, cut vertices, and chords, predicting how each part
  behaves from its penalty residue alone (:func:`guess_acts_as`) and
  combining guaranteed rooted sets of the parts (:func:`guaranteed_rooted_set`);
* once the graph is a polygon with interior vertices and small boundary
  attachments, apply a registry of local reductions.  Each reduction edits
  the graph (deleting a few vertices or edges and inserting catalog gadgets
  that force or excuse specific vertices), recurses on the strictly smaller
  result, and pulls the solution back with a bounded size change;
* below a small cutoff, and on the sporadic exceptional graphs, an exact
  branch-and-bound oracle takes over.

Every step is checked at runtime: the edited graph must be strictly smaller
under the lexicographic progress measure, the pulled-back set must respect
the per-case size budget, and the final set must dominate and fit the
penalty budget.
"""

from __future__ import annotations

import sys
from collections import Counter
from itertools import combinations
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from .exact import (
    DomConstraints,
    constraints,
    dominates,
    exact_min_domset,
    outerplanar_min_domset,
)
from .gadgets import GadgetError, GadgetTag, TaggedView, gadget, insert
from .penalty import budget, measure, phi_half, scan_configurations
from .plane import (
    EmbeddingError,
    PlaneGraph,
    SkeletalView,
    Vertex,
    attach,
    fuse,
    is_sporadic,
    split_at_bridge,
    split_at_chord,
    split_at_cut_vertex,
    structure,
    validate,
)

__all__ = [
    "CasePlan",
    "Guess",
    "SolveConfig",
    "SolveOutcome",
    "SolverError",
    "apply_and_recurse",
    "dispatch_case",
    "guaranteed_rooted_set",
    "guess_acts_as",
    "solve",
    "solve_triangulation",
]


class SolverError(RuntimeError):
    """An internal guarantee of the construction failed."""


class _ConstructionFailed(SolverError):
    """A local edit produced an invalid embedding; the pattern matched but
    the surrounding graph does not support this reduction, so the next
    case should be tried."""


# =====================================================================
# Configuration and results
# =====================================================================


@dataclass(frozen=True)
class SolveConfig:
    """Tuning knobs for the recursive solver.

    base_cutoff: graphs with at most this many vertices (and all sporadic
        graphs) go straight to the exact oracle.
    oracle_cap: largest vertex count the exact oracle accepts.
    check_invariants: verify progress, per-case size budgets, domination,
        and the final penalty budget at every step.
    """

    base_cutoff: int = 12
    oracle_cap: int = 26
    check_invariants: bool = True


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a solve run.

    dom_set: the dominating set produced.
    bound: floor(phi/3.5) of the input.
    sporadic: the input is one of the exceptional graphs, whose minimum
        dominating set exceeds the penalty budget by exactly one.
    case_counts: how often each reduction case fired across the recursion.
    """

    dom_set: frozenset
    bound: int
    sporadic: bool
    case_counts: Dict[str, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.dom_set)


@dataclass
class CasePlan:
    """One applicable reduction: an identifier, the vertices in its
    pattern, the allowed set-size increase (None for splitting cases),
    and a closure that executes the edit, recursion, and pull-back."""

    case_id: str
    named: Dict[str, Vertex]
    delta_s: Optional[int]
    run: Callable[[], Set[Vertex]]


@dataclass(frozen=True)
class Guess:
    """Predicted substitute behavior of a rooted part: the gadget family
    and the set size s the prediction is calibrated to."""

    kind: str
    s: int


def guess_acts_as(half: int, rooting: str) -> Guess:
    """Predict how a rooted part behaves from its penalty alone.

    The penalty residue mod 3.5 determines which catalog gadget the part
    can stand in for; no search is involved.  ``rooting`` is "vertex" or
    "edge"; ``half`` is the rooted penalty in half-units.
    """
    r = half % 7
    if rooting == "vertex":
        if r in (5, 6):
            return Guess("AB", (half + 2) // 7)
        if r in (0, 1, 2):
            return Guess("LR", half // 7)
        return Guess("Nope", (half - 3) // 7)
    if rooting == "edge":
        if r in (3, 4):
            return Guess("OR", (half + 4) // 7)
        if r in (5, 6):
            return Guess("AorB", (half + 2) // 7)
        if r == 0:
            return Guess("LORR", half // 7)
        return Guess("LorR", (half - 1) // 7)
    raise ValueError(f"unknown rooting {rooting!r}")


# =====================================================================
# Attachment recognition
# =====================================================================


@dataclass(frozen=True)
class Attachment:
    """A small outgrowth hanging off a chord of the boundary polygon.

    kind "OR": a single degree-2 apex over the base chord.
    kind "AB": a kite — apex adjacent to both base vertices plus a
        degree-2 tip adjacent to the apex and to ``red``.
    """

    kind: str  # "OR" | "AB"
    base: Tuple[Vertex, Vertex]  # in boundary-walk order
    red: Optional[Vertex]
    internals: Tuple[Vertex, ...]


@dataclass
class _Shape:
    """Boundary decomposition: attachments plus the underlying polygon."""

    atts: List[Attachment]
    poly: List[Vertex]  # polygon vertices in boundary order
    by_base: Dict[frozenset, Attachment]
    reds: Dict[Vertex, List[Attachment]]
    internal: Set[Vertex]

    def or_atts(self) -> List[Attachment]:
        return [a for a in self.atts if a.kind == "OR"]


def _detect_shape(g: PlaneGraph) -> _Shape:
    walk = list(g.outer_walk())
    m = len(walk)
    atts: List[Attachment] = []
    internal: Set[Vertex] = set()
    # kites first: their apex chord would otherwise look like an OR base
    for i in range(m):
        a, x1, x2, b = (walk[i], walk[(i + 1) % m],
                        walk[(i + 2) % m], walk[(i + 3) % m])
        if {x1, x2} & internal or a in internal or b in internal:
            continue
        degs = {x1: g.degree(x1), x2: g.degree(x2)}
        if sorted(degs.values()) != [2, 3] or not g.has_edge(a, b):
            continue
        t, p = (x1, x2) if degs[x1] == 2 else (x2, x1)
        if set(g.rot[p]) != {a, b, t}:
            continue
        red = a if g.has_edge(t, a) else b
        if set(g.rot[t]) != {p, red}:
            continue
        atts.append(Attachment("AB", (a, b), red, (x1, x2)))
        internal.update((x1, x2))
    for i in range(m):
        a, o, b = walk[i], walk[(i + 1) % m], walk[(i + 2) % m]
        if o in internal or a in internal or b in internal:
            continue
        if set(g.rot[o]) == {a, b} and g.has_edge(a, b):
            atts.append(Attachment("OR", (a, b), None, (o,)))
            internal.add(o)
    poly = [v for v in walk if v not in internal]
    by_base = {frozenset(a.base): a for a in atts}
    reds: Dict[Vertex, List[Attachment]] = {}
    for a in atts:
        if a.kind == "AB":
            reds.setdefault(a.red, []).append(a)
    return _Shape(atts, poly, by_base, reds, internal)


# =====================================================================
# The solver
# =====================================================================


def _closed(g: PlaneGraph) -> SkeletalView:
    return validate(g, "skeletal")


class _Solver:
    def __init__(self, config: SolveConfig):
        self.config = config
        self.case_counts: Counter = Counter()

    # -- entry ------------------------------------------------------------

    def solve_view(self, view: SkeletalView) -> SolveOutcome:
        view = view.reroot("skeletal")
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 40 * view.graph.n + 10000))
        try:
            s = self._solve(view)
        finally:
            sys.setrecursionlimit(old)
        return SolveOutcome(
            frozenset(s),
            budget(view),
            is_sporadic(view) is not None,
            dict(self.case_counts),
        )

    # -- recursion --------------------------------------------------------

    def _solve(self, view: SkeletalView) -> Set[Vertex]:
        g = view.graph
        if g.n <= self.config.base_cutoff or is_sporadic(view):
            return self._base(view)
        last: Optional[_ConstructionFailed] = None
        for plan in self._plans(view):
            try:
                return self.apply_and_recurse(view, plan)
            except _ConstructionFailed as ex:
                last = ex
        raise SolverError(
            f"no case applies (n={g.n}, boundary={g.outer_walk()}"
            + (f"; last construction failure: {last}" if last else "")
            + ")"
        )

    def _plans(self, view: SkeletalView):
        st = structure(view)
        for builder in _STRUCTURAL_CASES:
            plan = builder(self, view, st)
            if plan is not None:
                yield plan
        shape = _detect_shape(view.graph)
        for builder in _LOCAL_CASES:
            plan = builder(self, view, st, shape)
            if plan is not None:
                yield plan

    def _base(self, view: SkeletalView) -> Set[Vertex]:
        g = view.graph
        s = exact_min_domset(g, cap=max(g.n, self.config.oracle_cap))
        allowed = budget(view) + (1 if is_sporadic(view) else 0)
        if len(s) > allowed:
            raise SolverError(
                f"oracle set of size {len(s)} exceeds budget {allowed}"
            )
        return set(s)

    def apply_and_recurse(self, view: SkeletalView, plan: CasePlan) -> Set[Vertex]:
        s = plan.run()
        self.case_counts[plan.case_id] += 1
        if self.config.check_invariants:
            g = view.graph
            if not dominates(g, s):
                raise SolverError(f"case {plan.case_id}: result does not dominate")
            if len(s) > budget(view):
                raise SolverError(
                    f"case {plan.case_id}: size {len(s)} exceeds budget "
                    f"{budget(view)} (named {plan.named})"
                )
        return s

    def _recurse(self, parent_measure, child: SkeletalView) -> Set[Vertex]:
        if self.config.check_invariants and parent_measure is not None:
            if not measure(child.reroot("skeletal")) < parent_measure:
                raise SolverError(
                    f"no progress: child measure {measure(child)} vs "
                    f"parent {parent_measure}"
                )
        return self._solve(child.reroot("skeletal"))

    # -- gadget bookkeeping -------------------------------------------------

    def _settle(
        self, h: PlaneGraph, s_h: Set[Vertex], tags
    ) -> Tuple[Set[Vertex], int, Dict[Tuple[Vertex, ...], Vertex]]:
        """Resolve inserted gadgets in a recursive solution: swap forced
        vertices into the set, strip give-up members of LR fuses.  Returns
        the adjusted set, the number of stripped members, and the vertex
        chosen for each OR insertion."""
        s = set(s_h)
        drops = 0
        chosen: Dict[Tuple[Vertex, ...], Vertex] = {}
        for t in tags:
            if t.kind in ("AB", "A", "B"):
                for x in list(s & t.internals):
                    s.discard(x)
                    s.add(t.forced)
                if t.forced not in s:
                    raise SolverError(f"forcing {t.kind} at {t.site} failed")
            elif t.kind == "OR":
                u, v = t.site
                for x in list(s & t.internals):
                    s.discard(x)
                    s.add(u)
                if u not in s and v not in s:
                    raise SolverError(f"OR choice at {t.site} failed")
                chosen[t.site] = u if u in s else v
            elif t.kind == "LR":
                k = len(s & t.internals)
                if k == 0:
                    raise SolverError(f"LR at {t.site} has no member to give up")
                s -= t.internals
                drops += k
            else:  # pragma: no cover
                raise SolverError(f"unhandled gadget tag {t.kind}")
        return s, drops, chosen

    @staticmethod
    def _force_vertex(s: Set[Vertex], target: Vertex, donors) -> None:
        """Swap donors (whose closed neighborhoods lie inside the target's)
        for the target; at least one of donors/target must be present."""
        for x in list(s & set(donors)):
            s.discard(x)
            s.add(target)
        if target not in s:
            raise SolverError(f"cannot force {target} via {donors}")

    # -- rooted-set guarantees ---------------------------------------------

    def rooted_vertex_set(
        self, parent_measure, g: PlaneGraph, u: Vertex, mode: int, s: int
    ) -> Set[Vertex]:
        """A dominating set calibrated to the vertex rooting (g, u).

        mode 1 (phi < 3.5 s):      size <= s, contains u.
        mode 2 (phi < 3.5 s+1.5):  size <= s, plain dominating set.
        mode 3 (phi < 3.5(s+1)-1): size <= s, dominates everything but
                                   possibly u.
        """
        view = validate(g, "vertex-rooted", (u,))
        ph = phi_half(view)
        small = g.n <= self.config.base_cutoff
        if mode == 1:
            if ph >= 7 * s:
                raise SolverError(f"mode 1 needs phi<{7*s}, got {ph}")
            if small:
                out = exact_min_domset(g, constraints(must=[u]), cap=g.n)
            elif g.degree(u) == 1:
                # u covers itself and its lone neighbor; the rest only
                # needs to be dominated away from that neighbor.
                (w,) = g.neighbors(u)
                out = self.rooted_vertex_set(
                    parent_measure, g.delete_vertex(u), w, 3, s - 1
                ) | {u}
            else:
                floor = max(g.rot) + 1
                walk = list(g.outer_walk())
                v = walk[(walk.index(u) + 1) % len(walk)]
                hv, tag = _insert_raw(_closed(g), (u, v), "A", floor)
                s_h = self._recurse(parent_measure, hv)
                out, _, _ = self._settle(hv.graph, s_h, [tag])
            if len(out) > s or u not in out:
                raise SolverError(f"mode 1 guarantee broken at {u}")
            return out
        if mode == 2:
            if ph >= 7 * s + 3:
                raise SolverError(f"mode 2 needs phi<{7*s+3}, got {ph}")
            if g.degree(u) == 1:
                (w,) = g.neighbors(u)
                return self.rooted_vertex_set(
                    parent_measure, g.delete_vertex(u), w, 1, s
                )
            out = (
                exact_min_domset(g, cap=g.n)
                if small
                else self._recurse(parent_measure, _closed(g))
            )
            if len(out) > s:
                raise SolverError(f"mode 2 guarantee broken at {u}")
            return set(out)
        if mode == 3:
            if ph >= 7 * s + 5:
                raise SolverError(f"mode 3 needs phi<{7*s+5}, got {ph}")
            if small:
                out = set(exact_min_domset(g, constraints(exempt=[u]), cap=g.n))
            elif g.degree(u) == 1:
                # only u may stay uncovered, so drop it and dominate the rest
                (w,) = g.neighbors(u)
                out = self.rooted_vertex_set(
                    parent_measure, g.delete_vertex(u), w, 2, s
                )
            else:
                floor = max(g.rot) + 1
                tv = insert(_closed(g), u, "LR", id_floor=floor)
                s_h = self._recurse(parent_measure, tv.view)
                out, drops, _ = self._settle(tv.view.graph, s_h, tv.tags)
            if len(out) > s:
                raise SolverError(f"mode 3 guarantee broken at {u}")
            return out
        raise ValueError(f"unknown vertex mode {mode}")

    def rooted_edge_set(
        self,
        parent_measure,
        g: PlaneGraph,
        u: Vertex,
        v: Vertex,
        mode: int,
        s: int,
        which: Optional[Vertex] = None,
    ) -> Tuple[Set[Vertex], Optional[Vertex]]:
        """A dominating set calibrated to the edge rooting (g, u, v).

        mode 1 (phi < 3.5 s-1):    size <= s containing ``which``.
        mode 2 (phi < 3.5 s):      size <= s containing u or v; returns
                                   the contained root.
        mode 3 (phi < 3.5 s+0.5):  size <= s dominating everything except
                                   possibly the root other than ``which``.
        mode 4 (phi < 3.5 s+1.5):  size <= s dominating everything except
                                   possibly u and v, and dominating at
                                   least one of them; returns that one.
        mode 5 (phi < 3.5(s+1)-2): like mode 4 without the last promise.
        """
        view = validate(g, "edge-rooted", (u, v))
        ph = phi_half(view)
        small = g.n <= self.config.base_cutoff
        floor = max(g.rot) + 1
        if mode == 1:
            if which not in (u, v):
                raise ValueError("mode 1 needs which in the root edge")
            if ph >= 7 * s - 2:
                raise SolverError(f"mode 1 needs phi<{7*s-2}, got {ph}")
            other = v if which == u else u
            if small:
                out = exact_min_domset(g, constraints(must=[which]), cap=g.n)
            else:
                tv = insert(_closed(g), (which, other), "A", id_floor=floor)
                s_h = self._recurse(parent_measure, tv.view)
                out, _, _ = self._settle(tv.view.graph, s_h, tv.tags)
            if len(out) > s or which not in out:
                raise SolverError(f"edge mode 1 guarantee broken at {which}")
            return set(out), which
        if mode == 2:
            if ph >= 7 * s:
                raise SolverError(f"mode 2 needs phi<{7*s}, got {ph}")
            if small:
                for root in (u, v):
                    out = exact_min_domset(g, constraints(must=[root]), cap=g.n)
                    if len(out) <= s:
                        return set(out), root
                raise SolverError("edge mode 2 guarantee broken")
            tv = insert(_closed(g), (u, v), "OR", id_floor=floor)
            s_h = self._recurse(parent_measure, tv.view)
            out, _, chosen = self._settle(tv.view.graph, s_h, tv.tags)
            got = chosen[(u, v)]
            if len(out) > s:
                raise SolverError("edge mode 2 guarantee broken")
            return out, got
        if mode in (3, 5):
            if ph >= 7 * s + (1 if mode == 3 else 3):
                raise SolverError(f"edge mode {mode} penalty bound broken: {ph}")
            target = which if which in (u, v) else u
            other = v if target == u else u
            # a set that may miss only `other` certainly dominates `target`
            out = self.rooted_vertex_set(parent_measure, g, other, 3, s)
            return out, target
        if mode == 4:
            if ph >= 7 * s + 3:
                raise SolverError(f"edge mode 4 needs phi<{7*s+3}, got {ph}")
            if small:
                for exempt_root, dominated in ((u, v), (v, u)):
                    out = exact_min_domset(
                        g, constraints(exempt=[exempt_root]), cap=g.n
                    )
                    if len(out) <= s:
                        return set(out), dominated
                raise SolverError("edge mode 4 guarantee broken")
            pu = phi_half(validate(g, "vertex-rooted", (u,)))
            pv = phi_half(validate(g, "vertex-rooted", (v,)))
            if pu == ph + 2:
                return self.rooted_vertex_set(parent_measure, g, u, 3, s), v
            if pv == ph + 2:
                return self.rooted_vertex_set(parent_measure, g, v, 3, s), u
            # u,v form a problem pair: identify them and solve the merge
            h = g.contract_boundary_pair(u, v)
            out = self.rooted_vertex_set(parent_measure, h, u, 2, s)
            if u in out:
                hub = next(
                    w
                    for w in h.rot
                    if w != u and set(h.rot[u]) | {u} <= set(h.rot[w]) | {w}
                )
                out.discard(u)
                out.add(hub)
            dominated = (
                u if set(g.rot[u]) & out or u in out
                else v if set(g.rot[v]) & out or v in out
                else None
            )
            if dominated is None:
                raise SolverError("edge mode 4: neither root dominated")
            return out, dominated
        raise ValueError(f"unknown edge mode {mode}")

    # -- dispatch ----------------------------------------------------------

    def dispatch_case(self, view: SkeletalView) -> CasePlan:
        for plan in self._plans(view):
            return plan
        raise SolverError(
            f"no case applies (n={view.graph.n}, boundary="
            f"{view.graph.outer_walk()})"
        )

    # =====================================================================
    # Splitting cases
    # =====================================================================

    def _case_bridge(self, view, st) -> Optional[CasePlan]:
        if not st.block_cut.bridges:
            return None
        u, v = min(st.block_cut.bridges)
        p1, p2 = split_at_bridge(view, u, v)
        pm = measure(view)
        g1, g2 = p1.graph, p2.graph
        gu, gv = (
            guess_acts_as(phi_half(p1), "vertex"),
            guess_acts_as(phi_half(p2), "vertex"),
        )
        sides = [(g1, u, gu), (g2, v, gv)]

        def run():
            kinds = [s[2].kind for s in sides]
            if "AB" in kinds:
                i = kinds.index("AB")
                j = 1 - i
                si = self.rooted_vertex_set(
                    pm, sides[i][0], sides[i][1], 1, sides[i][2].s
                )
                sj = self.rooted_vertex_set(
                    pm, sides[j][0], sides[j][1], 3, sides[j][2].s
                )
                return si | sj
            if "Nope" in kinds:
                i = kinds.index("Nope")
                j = 1 - i
                si = self.rooted_vertex_set(
                    pm, sides[i][0], sides[i][1], 1, sides[i][2].s + 1
                )
                sj = self.rooted_vertex_set(
                    pm, sides[j][0], sides[j][1], 3, sides[j][2].s
                )
                return si | sj
            return self.rooted_vertex_set(
                pm, g1, u, 2, gu.s
            ) | self.rooted_vertex_set(pm, g2, v, 2, gv.s)

        return CasePlan("bridge", {"u": u, "v": v}, None, run)

    def _case_cut_vertex(self, view, st) -> Optional[CasePlan]:
        if not st.block_cut.cut_vertices:
            return None
        u = min(st.block_cut.cut_vertices)
        p1, p2 = split_at_cut_vertex(view, u)
        pm = measure(view)
        g1, g2 = p1.graph, p2.graph
        gus = [guess_acts_as(phi_half(p1), "vertex"),
               guess_acts_as(phi_half(p2), "vertex")]
        sides = [(g1, gus[0]), (g2, gus[1])]

        def full_size(gg: Guess) -> int:
            return gg.s + (1 if gg.kind == "Nope" else 0)

        def is_small_lr(gg: PlaneGraph) -> bool:
            return (
                gg.n == 4
                and gg.degree(u) == 2
                and sorted(gg.degree(x) for x in gg.rot) == [2, 2, 3, 3]
            )

        kinds = [s[1].kind for s in sides]

        def run():
            for i in (0, 1):
                if is_small_lr(sides[i][0]):
                    lr, rest = sides[i][0], sides[1 - i][0]
                    a = next(
                        w for w in lr.rot[u] if lr.degree(w) == 3
                    )
                    ph_rest = phi_half(validate(rest, "vertex-rooted", (u,)))
                    if phi_half(_closed(rest)) <= ph_rest + 2:
                        s_h = self._recurse(pm, _closed(rest))
                    else:
                        s_h = self._recurse(pm, _closed(rest.delete_vertex(u)))
                    return set(s_h) | {a}
            if "Nope" in kinds:
                i = kinds.index("Nope")
                j = 1 - i
                si = self.rooted_vertex_set(pm, sides[i][0], u, 3, sides[i][1].s)
                sj = self.rooted_vertex_set(
                    pm, sides[j][0], u, 2, full_size(sides[j][1])
                )
                return si | sj
            if kinds == ["AB", "AB"]:
                return self.rooted_vertex_set(
                    pm, g1, u, 1, gus[0].s
                ) | self.rooted_vertex_set(pm, g2, u, 1, gus[1].s)
            i = kinds.index("LR")
            j = 1 - i
            si = self.rooted_vertex_set(pm, sides[i][0], u, 2, sides[i][1].s)
            sj = self.rooted_vertex_set(pm, sides[j][0], u, 3, sides[j][1].s)
            return si | sj

        return CasePlan("cut-vertex", {"u": u}, None, run)

    def _case_outerplanar(self, view, st) -> Optional[CasePlan]:
        if st.interior:
            return None

        def run():
            return set(outerplanar_min_domset(view.reroot("skeletal")))

        return CasePlan("outerplanar", {}, None, run)

    def _case_chord(self, view, st) -> Optional[CasePlan]:
        g = view.graph
        best = None
        for (a, b) in sorted(st.chords):
            try:
                s1, s2 = split_at_chord(view, a, b)
            except EmbeddingError:
                continue
            # either side may be replaced by a gadget during recursion, so
            # a gadget-shaped side (triangle or kite) makes no progress
            if any(
                not p.graph.interior_set() and p.graph.n < 5 for p in (s1, s2)
            ):
                continue
            for first, second in ((s1, s2), (s2, s1)):
                go = second.graph
                rank = (len(go.interior_set()), go.n)
                if best is None or rank < best[0]:
                    best = (rank, a, b, first, second)
        if best is None:
            return None
        _, a, b, part_keep, part_off = best
        pm = measure(view)
        g1, g2 = part_keep.graph, part_off.graph
        ph2 = phi_half(part_off)
        gg = guess_acts_as(ph2, "edge")
        floor = max(g.rot) + 1

        def run():
            if gg.kind == "OR":
                tv = insert(_closed(g1), (a, b), "OR", id_floor=floor)
                s_h = self._recurse(pm, tv.view)
                s1x, _, chosen = self._settle(tv.view.graph, s_h, tv.tags)
                w = chosen[(a, b)]
                s2x, _ = self.rooted_edge_set(pm, g2, a, b, 1, gg.s, which=w)
                return s1x | s2x
            if gg.kind == "AorB":
                s2x, w = self.rooted_edge_set(pm, g2, a, b, 2, gg.s)
                other = b if w == a else a
                tv = insert(_closed(g1), (w, other), "A", id_floor=floor)
                s_h = self._recurse(pm, tv.view)
                s1x, _, _ = self._settle(tv.view.graph, s_h, tv.tags)
                return s1x | s2x
            # the part only promises a rooted set: keep g1 whole (or minus
            # one root it excuses) and combine
            ph1 = phi_half(validate(g1, "edge-rooted", (a, b)))
            closed1 = phi_half(_closed(g1))
            if gg.kind == "LORR" and closed1 > ph1 + 4:
                for r, o in ((a, b), (b, a)):
                    try:
                        h = _closed(g1.delete_vertex(r))
                    except EmbeddingError:
                        continue
                    s2x, _ = self.rooted_edge_set(
                        pm, g2, a, b, 3, gg.s, which=r
                    )
                    return set(self._recurse(pm, h)) | s2x
            mode = 3 if gg.kind == "LORR" else 4
            s2x, _ = self.rooted_edge_set(pm, g2, a, b, mode, gg.s, which=a)
            return set(self._recurse(pm, _closed(g1))) | s2x

        return CasePlan(
            "chord", {"a": a, "b": b, "guess": gg.kind}, None, run
        )

    # =====================================================================
    # Local reductions (2-connected polygon + attachments + interior)
    # =====================================================================

    def _local(
        self,
        view: SkeletalView,
        case_id: str,
        named: Dict[str, Vertex],
        delta_s: int,
        vs: Sequence[Vertex] = (),
        es: Sequence[Tuple[Vertex, Vertex]] = (),
        adds: Sequence[Tuple[Vertex, Vertex]] = (),
        inserts: Sequence[Tuple[object, str]] = (),
        forces: Sequence[Tuple[Vertex, Sequence[Vertex]]] = (),
        swaps: Sequence[Tuple[Vertex, Sequence[Vertex]]] = (),
        plus: Sequence[Vertex] = (),
    ) -> CasePlan:
        """Shared runner: delete ``vs``/``es``, add ``adds`` (bounded-face
        chords), insert gadgets, recurse, settle tags, apply manual
        ``forces`` (target, donors; the target must end up chosen) and
        ``swaps`` (like forces, but the target may legitimately stay out),
        and union in ``plus``."""
        g = view.graph
        pm = measure(view)
        floor = max(g.rot) + 1
        dead = set(vs)

        def run():
            try:
                return _run()
            except (EmbeddingError, GadgetError) as ex:
                raise _ConstructionFailed(
                    f"case {case_id} (named {named}): {ex}"
                ) from ex

        def _run():
            h = g
            for (x, y) in es:
                if x not in dead and y not in dead:
                    h = h.delete_edge(x, y)
            if dead:
                h = h.delete_vertices(dead)
            for (x, y) in adds:
                h = _add_bounded_chord(h, x, y)
            # a deletion may leave a leaf that an LR fuse is about to
            # repair, so defer validation and fuse at leaves first
            deficient = {v for v, ns in h.rot.items() if len(ns) <= 1}
            if deficient:
                hv: SkeletalView = SkeletalView(h, "skeletal", ())
            else:
                hv = _closed(h)
            ordered = sorted(
                inserts,
                key=lambda wk: 0 if wk[0] in deficient else 1,
            )
            tags: List[GadgetTag] = []
            for where, kind in ordered:
                hv, tag = _insert_raw(hv, where, kind, floor)
                tags.append(tag)
            if deficient and not inserts:
                hv = _closed(h)  # will raise: nothing repaired the leaf
            s_h = self._recurse(pm, hv)
            base_size = len(s_h)
            s, _, _ = self._settle(hv.graph, s_h, tags)
            for target, donors in forces:
                self._force_vertex(s, target, donors)
            for target, donors in swaps:
                for x in list(s & set(donors)):
                    s.discard(x)
                    s.add(target)
            s |= set(plus)
            if self.config.check_invariants and len(s) > base_size + delta_s:
                raise SolverError(
                    f"case {case_id}: size {len(s)} exceeds "
                    f"{base_size}+{delta_s} (named {named})"
                )
            return s

        return CasePlan(case_id, named, delta_s, run)

    # -- red-vertex attachment cases ----------------------------------------

    def _case_same_red(self, view, st, sh) -> Optional[CasePlan]:
        for red in sorted(sh.reds):
            lst = sh.reds[red]
            if len(lst) >= 2:
                drop = min(lst, key=lambda a: min(a.internals))
                keep = next(a for a in lst if a is not drop)
                return self._local(
                    view,
                    "twin-red",
                    {"red": red},
                    0,
                    vs=drop.internals,
                    forces=[(red, keep.internals)],
                )
        return None

    def _case_consecutive_reds(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        for v in sorted(sh.reds):
            (a1,) = sh.reds[v]
            for w in sorted(sh.reds):
                if w == v or not g.has_edge(v, w):
                    continue
                (a2,) = sh.reds[w]
                if frozenset((v, w)) in sh.by_base:
                    continue
                dead = set(a1.internals) | set(a2.internals)
                h2 = g.delete_vertices(dead).delete_edge(v, w)
                walk = list(h2.outer_walk())
                nb_v = _walk_neighbor(walk, v, exclude={w})
                nb_w = _walk_neighbor(walk, w, exclude={v, nb_v})
                return self._local(
                    view,
                    "adjacent-reds",
                    {"v": v, "w": w},
                    0,
                    vs=tuple(dead),
                    es=[(v, w)],
                    inserts=[((v, nb_v), "A"), ((w, nb_w), "A")],
                )
        return None

    def _case_red_with_or(self, view, st, sh) -> Optional[CasePlan]:
        for red in sorted(sh.reds):
            for o in sh.or_atts():
                if red in o.base:
                    (a1,) = sh.reds[red]
                    return self._local(
                        view,
                        "red-beside-fork",
                        {"red": red},
                        0,
                        vs=o.internals,
                        forces=[(red, a1.internals)],
                    )
        return None

    def _case_red_next_heavy(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        for red in sorted(sh.reds):
            (a1,) = sh.reds[red]
            u = a1.base[0] if a1.base[1] == red else a1.base[1]
            for w in _poly_neighbors(sh.poly, red):
                if w == u or frozenset((red, w)) in sh.by_base:
                    continue
                heavy = g.degree(w) >= 5 or any(
                    w in a.base and red not in a.base for a in sh.atts
                )
                if heavy and g.has_edge(red, w):
                    return self._local(
                        view,
                        "red-next-heavy",
                        {"red": red, "w": w},
                        0,
                        es=[(red, w)],
                    )
        return None

    def _case_red_next_light(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        for red in sorted(sh.reds):
            (a1,) = sh.reds[red]
            u = a1.base[0] if a1.base[1] == red else a1.base[1]
            for w in _poly_neighbors(sh.poly, red):
                if w == u or g.degree(w) not in (3, 4):
                    continue
                if any(w in a.base for a in sh.atts):
                    continue
                return self._local(
                    view,
                    "red-next-light",
                    {"red": red, "w": w},
                    0,
                    vs=(w,),
                    forces=[(red, a1.internals)],
                )
        return None

    # -- forced-hub cases ----------------------------------------------------

    def _case_boundary_wheel(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        bset = g.boundary_set()
        for c in scan_configurations(view.reroot("skeletal")):
            if c.kind != "bad_5wheel":
                continue
            hub = c.witness[0]
            for (v, w) in c.pairs:
                if v not in bset or w not in bset:
                    continue
                u = _walk_neighbor(list(g.outer_walk()), v, exclude={w})
                x = _walk_neighbor(list(g.outer_walk()), w, exclude={v})
                if u == x or u in (v, w) or x in (v, w):
                    continue
                return self._local(
                    view,
                    "boundary-wheel",
                    {"v": v, "w": w, "hub": hub, "u": u, "x": x},
                    -1,
                    vs=(v, w),
                    inserts=[((hub, u), "A"), (x, "LR")],
                )
        return None

    def _case_twin_forks(self, view, st, sh) -> Optional[CasePlan]:
        ors = sh.or_atts()
        for o1 in ors:
            for o2 in ors:
                if o1 is o2:
                    continue
                shared = set(o1.base) & set(o2.base)
                if not shared:
                    continue
                v = min(shared)
                u = next(x for x in o1.base if x != v)
                return self._local(
                    view,
                    "twin-forks",
                    {"u": u, "v": v},
                    0,
                    vs=tuple(o1.internals) + tuple(o2.internals),
                    inserts=[((v, u), "A")],
                )
        return None

    def _case_treble_three(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        poly, m = sh.poly, len(sh.poly)
        if m < 5:
            return None
        for i in range(m):
            u, v, w, x, y = (poly[i], poly[(i + 1) % m], poly[(i + 2) % m],
                             poly[(i + 3) % m], poly[(i + 4) % m])
            if u == y or not all(g.degree(t) == 3 for t in (v, w, x)):
                continue
            ps = [set(g.rot[t]) - set(poly) for t in (v, w, x)]
            common = ps[0] & ps[1] & ps[2] & st.interior
            if not common:
                continue
            p = min(common)
            if not (g.has_edge(p, y) and g.has_edge(p, u)):
                continue
            return self._local(
                view,
                "treble-three",
                {"v": v, "w": w, "x": x, "p": p},
                -1,
                vs=(v, w, x),
                inserts=[((p, y), "A"), (u, "LR")],
            )
        return None

    # -- fork (single-apex attachment) cases ---------------------------------

    def _case_fork_next_heavy(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        for o in sh.or_atts():
            for v in o.base:
                for w in _poly_neighbors(sh.poly, v):
                    if w in o.base or not g.has_edge(v, w):
                        continue
                    if frozenset((v, w)) in sh.by_base:
                        continue
                    if g.degree(w) >= 5:
                        return self._local(
                            view,
                            "fork-next-heavy",
                            {"v": v, "w": w},
                            0,
                            es=[(v, w)],
                        )
        return None

    def _case_fork_gap_fork(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        ors = sh.or_atts()
        for o1 in ors:
            for o2 in ors:
                if o1 is o2 or set(o1.base) & set(o2.base):
                    continue
                for v in o1.base:
                    for w in o2.base:
                        if not g.has_edge(v, w):
                            continue
                        if w not in _poly_neighbors(sh.poly, v):
                            continue
                        if frozenset((v, w)) in sh.by_base:
                            continue
                        return self._local(
                            view,
                            "fork-gap-fork",
                            {"v": v, "w": w},
                            0,
                            es=[(v, w)],
                        )
        return None

    def _case_fork_triangle(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if len(sh.poly) != 3 or len(sh.or_atts()) != 1 or sh.reds:
            return None
        (o,) = sh.or_atts()
        (apex,) = o.internals
        # w, the base vertex that gets deleted, is the lower-degree one
        w, v = sorted(o.base, key=lambda t: (g.degree(t), t))
        (u,) = [t for t in sh.poly if t not in o.base]
        return self._local(
            view,
            "fork-triangle",
            {"u": u, "v": v, "w": w},
            0,
            vs=(w, apex),
            inserts=[((v, u), "A")],
        )

    def _case_fork_flank(self, view, st, sh) -> Optional[CasePlan]:
        """The remaining single-fork reductions: the attachment sits between
        two light polygon vertices; four sub-reductions depending on the
        interior around its base."""
        g = view.graph
        poly, m = sh.poly, len(sh.poly)
        if m < 4:
            return None
        interior = st.interior
        for o in sh.or_atts():
            (apex,) = o.internals
            for x, y in (o.base, o.base[::-1]):
                w = _poly_next(poly, x, away_from=y)
                z = _poly_next(poly, y, away_from=x)
                if w is None or z is None or w == z:
                    continue
                if g.degree(w) not in (3, 4) or g.degree(z) not in (3, 4):
                    continue
                # (a) an interior degree-3 vertex next to x
                r3 = sorted(
                    r for r in g.rot[x]
                    if r in interior and g.degree(r) == 3
                )
                if r3:
                    return self._local(
                        view,
                        "fork-flank-spike",
                        {"x": x, "y": y, "w": w, "r": r3[0]},
                        -1,
                        vs=(r3[0], apex),
                        inserts=[((x, y), "A"), (w, "LR")],
                    )
                # (b) an interior degree-4 vertex whose wheel has x and y
                # antipodal; removing it frees a quad that the missing
                # diagonal r1,r2 closes, and both r1,r2 stay dominated by
                # whichever of x, y the solution keeps
                q4 = sorted(
                    q for q in set(g.rot[x]) & set(g.rot[y])
                    if q in interior and g.degree(q) == 4
                )
                for q in q4:
                    r1, r2 = sorted(set(g.rot[q]) - {x, y})
                    antipodal = all(
                        g.has_edge(r, t)
                        for r in (r1, r2) for t in (x, y)
                    )
                    if antipodal and not g.has_edge(r1, r2):
                        return self._local(
                            view,
                            "fork-flank-span",
                            {"x": x, "y": y, "q": q},
                            0,
                            vs=(q,),
                            adds=[(r1, r2)],
                            swaps=[(x, (apex,))],
                        )
                # (c) twin interior degree-4 vertices wedged at x
                pairs = _wedge_pairs(g, x, interior)
                if pairs:
                    dead = {apex, x}
                    for (p1, p2) in pairs:
                        dead |= {p1, p2}
                    rest = sorted(set(g.rot[x]) - dead)
                    return self._local(
                        view,
                        "fork-flank-wedges",
                        {"x": x, "y": y},
                        1 - len(rest),
                        vs=tuple(dead),
                        inserts=[(r, "LR") for r in rest],
                        plus=[x],
                    )
                # (d) clean flank: retire the fork and its base corner
                other_pairs = _wedge_pairs(g, y, interior)
                y_spike = any(
                    r in interior and g.degree(r) == 3 for r in g.rot[y]
                )
                if other_pairs or y_spike:
                    continue
                vprev = _poly_next(poly, w, away_from=x)
                if vprev == z and g.degree(z) == 3:
                    continue
                dead = {apex, w, x, y}
                rest = sorted(set(g.rot[x]) - dead)
                return self._local(
                    view,
                    "fork-flank-clear",
                    {"x": x, "y": y, "w": w},
                    1 - len(rest),
                    vs=tuple(dead),
                    inserts=[(r, "LR") for r in rest],
                    plus=[x],
                )
        return None

    # -- attachment-free reductions ------------------------------------------

    def _case_slack_edge(self, view, st, sh) -> Optional[CasePlan]:
        if sh.atts or st.interior == set():
            return None
        g = view.graph
        walk = list(g.outer_walk())
        m = len(walk)
        cands = sorted(
            ((walk[i], walk[(i + 1) % m]) for i in range(m)),
            key=lambda e: -(g.degree(e[0]) + g.degree(e[1])),
        )
        for (v, w) in cands:
            try:
                h = g.delete_edge(v, w)
                hv = _closed(h)
            except EmbeddingError:
                continue
            if is_sporadic(hv) or scan_configurations(hv):
                continue
            return self._local(
                view, "slack-edge", {"v": v, "w": w}, 0, es=[(v, w)]
            )
        return None

    def _case_triangle_boundary(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        bset = sorted(g.boundary_set())
        if sh.atts or len(bset) != 3:
            return None
        for u in bset:
            if g.degree(u) != 3:
                continue
            for v in bset:
                if v == u:
                    continue
                if set(g.rot[u]) | {u} <= set(g.rot[v]) | {v}:
                    return self._local(
                        view, "triangle-boundary", {"u": u, "v": v}, 0, vs=(v,)
                    )
        return None

    def _case_hidden_wheel(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        bset = g.boundary_set()
        walk = list(g.outer_walk())
        for w in sorted(bset):
            if g.degree(w) < 5:
                continue
            v = _walk_neighbor(walk, w, exclude=set())
            x = _walk_neighbor(walk, w, exclude={v})
            if g.degree(v) > 4 or g.degree(x) > 4:
                continue
            try:
                hv = _closed(g.delete_vertex(w))
            except EmbeddingError:
                continue
            for c in scan_configurations(hv):
                if c.kind != "bad_5wheel":
                    continue
                for (p, q) in c.pairs:
                    if p in bset or q in bset:
                        continue
                    dead = {v, w, x, p, q}
                    rest = sorted(set(g.rot[w]) - dead)
                    return self._local(
                        view,
                        "hidden-wheel",
                        {"w": w, "v": v, "x": x, "p": p, "q": q},
                        1 - len(rest),
                        vs=tuple(dead),
                        inserts=[(r, "LR") for r in rest],
                        plus=[w],
                    )
        return None

    def _case_hidden_spike(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        bset = g.boundary_set()
        walk = list(g.outer_walk())
        for w in sorted(bset):
            if g.degree(w) < 5:
                continue
            qs = sorted(
                q for q in g.rot[w]
                if q not in bset and g.degree(q) == 3
            )
            if not qs:
                continue
            q = qs[0]
            for v, x in _both_walk_sides(walk, w):
                if g.degree(v) != 3 or g.degree(x) > 4 or q in (v, x):
                    continue
                u = _walk_neighbor(walk, v, exclude={w})
                try:
                    hv = _closed(g.delete_vertex(v))
                except EmbeddingError:
                    continue
                if any(u in c.vertices() for c in scan_configurations(hv)):
                    continue
                dead = {v, w, x, q}
                rest = sorted(set(g.rot[w]) - dead)
                return self._local(
                    view,
                    "hidden-spike",
                    {"w": w, "v": v, "x": x, "q": q},
                    1 - len(rest),
                    vs=tuple(dead),
                    inserts=[(r, "LR") for r in rest],
                    plus=[w],
                )
        return None

    def _case_shared_anchor(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        poly, m = sh.poly, len(sh.poly)
        interior = st.interior
        for i in range(m):
            for d in (1, -1):
                v, w, x = (poly[i], poly[(i + d) % m], poly[(i + 2 * d) % m])
                if g.degree(w) != 3 or g.degree(v) < 4 or g.degree(x) < 4:
                    continue
                p = _lone_interior_neighbor(g, w, interior)
                if p is None:
                    continue
                for s in sorted(set(g.rot[p]) & g.boundary_set()):
                    if s == w or g.degree(s) != 3:
                        continue
                    if _lone_interior_neighbor(g, s, interior) != p:
                        continue
                    if _has_interior_spike(g, x, interior):
                        continue
                    r, t = _both_walk_sides(list(g.outer_walk()), s)[0]
                    dead = (x, w, s)
                    lrs = [rr for rr in (r, t) if rr not in dead]
                    return self._local(
                        view,
                        "shared-anchor",
                        {"v": v, "w": w, "x": x, "p": p, "s": s},
                        -len(lrs),
                        vs=dead,
                        inserts=[((p, v), "A")] + [(rr, "LR") for rr in lrs],
                    )
        return None

    def _case_saddle_pair(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        poly, m = sh.poly, len(sh.poly)
        interior = st.interior
        for i in range(m):
            for d in (1, -1):
                u, v, w, x = (poly[i], poly[(i + d) % m],
                              poly[(i + 2 * d) % m], poly[(i + 3 * d) % m])
                if g.degree(v) != 3 or g.degree(w) != 3:
                    continue
                if g.degree(u) < 4 or g.degree(x) < 4:
                    continue
                pv = _lone_interior_neighbor(g, v, interior)
                pw = _lone_interior_neighbor(g, w, interior)
                if pv is None or pv != pw:
                    continue
                p = pv
                # (1) one flank has no interior spike: delete it
                for heavy, keep in ((x, u), (u, x)):
                    if not _has_interior_spike(g, heavy, interior):
                        return self._local(
                            view,
                            "saddle-pair",
                            {"u": u, "v": v, "w": w, "x": x, "p": p},
                            0,
                            vs=(heavy,),
                            forces=[(p, (v, w))],
                        )
                # (2) both flanks have spikes
                t = _poly_next(poly, u, away_from=v)
                y = _poly_next(poly, x, away_from=w)
                if t is None or y is None or t == y:
                    continue
                ru = _spike_of(g, u, interior)
                rx = _spike_of(g, x, interior)
                if ru is None or rx is None or ru == rx or ru == p or rx == p:
                    continue
                if m == 7:
                    plan = self._case_saddle_heptagon(
                        view, g, poly, i, d, u, v, w, x, t, y, p, interior
                    )
                    if plan is not None:
                        return plan
                dead = (ru, rx, t, v, w, y)
                if len(set(dead)) != 6:
                    continue
                return self._local(
                    view,
                    "saddle-pair-double",
                    {"u": u, "x": x, "p": p},
                    -1,
                    vs=dead,
                    inserts=[((u, p), "A"), ((x, p), "A"), (p, "LR")],
                )
        return None

    def _case_saddle_heptagon(
        self, view, g, poly, i, d, u, v, w, x, t, y, p, interior
    ) -> Optional[CasePlan]:
        m = len(poly)
        z = poly[(i + 5 * d) % m] if d == 1 else poly[(i - 5) % m]
        z = _poly_next(poly, y, away_from=x)
        s = _poly_next(poly, t, away_from=u)
        if z is None or s is None or z != s:
            return None
        if g.degree(z) != 3 or g.degree(t) != 4 or g.degree(y) != 4:
            return None
        q = _lone_interior_neighbor(g, z, interior)
        if q is None or g.degree(q) != 4:
            return None
        return self._local(
            view,
            "saddle-heptagon",
            {"y": y, "z": z, "t": t, "q": q},
            1,
            vs=(y, z, t, q),
            plus=[q],
        )

    def _case_step_down(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts or len(sh.poly) < 5:
            return None
        poly, m = sh.poly, len(sh.poly)
        interior = st.interior
        for i in range(m):
            for d in (1, -1):
                v, w, x, y = (poly[i], poly[(i + d) % m],
                              poly[(i + 2 * d) % m], poly[(i + 3 * d) % m])
                if g.degree(v) < 4 or g.degree(w) != 4:
                    continue
                if g.degree(x) != 3 or g.degree(y) < 4:
                    continue
                p = _lone_interior_neighbor(g, x, interior)
                if p is None or not g.has_edge(p, w) or not g.has_edge(p, y):
                    continue
                return self._local(
                    view,
                    "step-down",
                    {"v": v, "w": w, "x": x, "y": y, "p": p},
                    0,
                    vs=(y, x, w),
                    inserts=[_red_attach_site(g, (y, x, w), p)],
                )
        return None

    def _case_pocket(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        poly, m = sh.poly, len(sh.poly)
        interior = st.interior
        bset = g.boundary_set()
        for i in range(m):
            for d in (1, -1):
                u, v, w = poly[i], poly[(i + d) % m], poly[(i + 2 * d) % m]
                if g.degree(v) != 3 or g.degree(u) < 4 or g.degree(w) < 4:
                    continue
                p = _lone_interior_neighbor(g, v, interior)
                if p is None:
                    continue
                try:
                    hv = _closed(g.delete_vertices([v, p]))
                except EmbeddingError:
                    continue
                far = [
                    c for c in scan_configurations(hv)
                    if not (c.vertices() & {u, w})
                ]
                if not far:
                    continue
                for c in far:
                    if c.kind == "bad_5wheel":
                        for (r, s) in c.pairs:
                            if r in bset or s in bset:
                                continue
                            dead = {v, p, r, s}
                            rest = sorted(set(g.rot[p]) - dead)
                            return self._local(
                                view,
                                "pocket-wheel",
                                {"v": v, "p": p, "r": r, "s": s},
                                1 - len(rest),
                                vs=tuple(dead),
                                inserts=[(rr, "LR") for rr in rest],
                                plus=[p],
                            )
                spikes = sorted(
                    r for r in g.rot[p]
                    if r in interior and g.degree(r) == 3
                )
                if not spikes:
                    continue
                r = spikes[0]
                for heavy, keep in ((w, u), (u, w)):
                    if _has_interior_spike(g, heavy, interior):
                        continue
                    if g.has_edge(r, heavy):
                        continue
                    dead = {heavy, v, r}
                    rest = sorted(
                        rr for rr in g.rot[r]
                        if rr not in dead and rr != p and rr in bset
                    )
                    return self._local(
                        view,
                        "pocket-spike",
                        {"v": v, "p": p, "r": r, "heavy": heavy},
                        -len(rest),
                        vs=tuple(dead),
                        inserts=[((p, keep), "A")]
                        + [(rr, "LR") for rr in rest],
                    )
        return None

    def _case_ladder(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts or len(sh.poly) < 5:
            return None
        poly, m = sh.poly, len(sh.poly)
        interior = st.interior
        for i in range(m):
            for d in (1, -1):
                u, v, w, x, y = (poly[i], poly[(i + d) % m],
                                 poly[(i + 2 * d) % m], poly[(i + 3 * d) % m],
                                 poly[(i + 4 * d) % m])
                if g.degree(v) != 3 or g.degree(x) != 3:
                    continue
                if g.degree(u) < 4 or g.degree(w) < 4 or g.degree(y) < 4:
                    continue
                p = _lone_interior_neighbor(g, v, interior)
                q = _lone_interior_neighbor(g, x, interior)
                if p is None or q is None or p == q:
                    continue
                z = _poly_next(poly, y, away_from=x)
                second = not g.has_edge(p, y) and not (
                    g.degree(y) == 4 and z is not None and g.degree(z) == 3
                )
                if g.degree(y) < 5 and not second:
                    continue
                dead = (v, p, x)
                h = g.delete_vertices(dead)
                nbs = sorted(
                    nb for nb in _boundary_nbs(h, w) if nb != q
                )
                lr = nbs[0] if nbs else None
                inserts = [((w, q), "A")]
                if lr is not None:
                    inserts.append((lr, "LR"))
                return self._local(
                    view,
                    "ladder",
                    {"u": u, "v": v, "w": w, "x": x, "y": y, "p": p, "q": q},
                    -1 if lr is not None else 0,
                    vs=dead,
                    inserts=inserts,
                )
        return None

    def _case_basket(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts:
            return None
        poly, m = sh.poly, len(sh.poly)
        if m < 5:
            return None
        interior = st.interior
        for i in range(m):
            for d in (1, -1):
                u, v, w, x, y, z = (
                    poly[i], poly[(i + d) % m], poly[(i + 2 * d) % m],
                    poly[(i + 3 * d) % m], poly[(i + 4 * d) % m],
                    poly[(i + 5 * d) % m],
                )
                if (g.degree(v) != 3 or g.degree(w) != 4
                        or g.degree(x) != 4 or g.degree(y) != 3):
                    continue
                if g.degree(u) < 4 or g.degree(z) < 4:
                    continue
                p = _lone_interior_neighbor(g, v, interior)
                q = _lone_interior_neighbor(g, y, interior)
                if p is None or q is None:
                    continue
                rs = set(g.rot[w]) & set(g.rot[x]) & interior
                if not any(
                    set(g.rot[w]) == {v, x, p, r}
                    and set(g.rot[x]) == {w, y, q, r}
                    for r in rs
                ):
                    continue
                if m >= 8 and u != z:
                    try:
                        hv = _closed(g.delete_vertices([u, z]))
                    except EmbeddingError:
                        hv = None
                    if hv is not None:
                        cuts = [
                            c for c in scan_configurations(hv)
                            if c.kind == "deg2_cut_vertex"
                        ]
                        if not cuts:
                            return self._local(
                                view,
                                "basket-open",
                                {"u": u, "v": v, "x": x, "z": z, "p": p},
                                0,
                                vs=(u, z),
                                es=[(w, x)],
                                forces=[(p, (v, w)), (q, (x, y))],
                            )
                        ell = cuts[0].witness[0]
                        if g.degree(ell) == 4 and {u, z} <= set(g.rot[ell]):
                            j, k = sorted(set(g.rot[ell]) - {u, z})
                            t = _poly_next(poly, u, away_from=v)
                            if t is not None and not g.has_edge(j, k):
                                return self._local(
                                    view,
                                    "basket-plugged",
                                    {"u": u, "ell": ell, "t": t},
                                    0,
                                    vs=(ell, v, t),
                                    adds=[(j, k)],
                                    inserts=[((u, p), "A")],
                                )
                if m == 5 and u == z:
                    return self._local(
                        view,
                        "basket-pentagon",
                        {"u": u, "v": v, "w": w, "x": x, "y": y},
                        0,
                        vs=(u,),
                        es=[(w, x)],
                        forces=[(p, (v, w)), (q, (x, y))],
                    )
        return None

    def _case_square_heavy(self, view, st, sh) -> Optional[CasePlan]:
        g = view.graph
        if sh.atts or len(sh.poly) != 4:
            return None
        poly = sh.poly
        interior = st.interior
        for i in range(4):
            for d in (1, -1):
                u, v, w, x = (poly[i], poly[(i + d) % 4],
                              poly[(i + 2 * d) % 4], poly[(i + 3 * d) % 4])
                if g.degree(u) < 5 or g.degree(v) != 3 or g.degree(x) != 3:
                    continue
                if g.degree(w) < 4:
                    continue
                p = _lone_interior_neighbor(g, v, interior)
                q = _lone_interior_neighbor(g, x, interior)
                if p is None or q is None or q == p:
                    continue
                return self._local(
                    view,
                    "square-heavy",
                    {"u": u, "v": v, "w": w, "x": x, "q": q},
                    0,
                    vs=(v, p, x),
                    inserts=[((w, q), "A")],
                )
        return None


# =====================================================================
# Small geometric helpers
# =====================================================================


def _walk_neighbor(walk: List[Vertex], v: Vertex, exclude: Set[Vertex]) -> Vertex:
    i = walk.index(v)
    a, b = walk[i - 1], walk[(i + 1) % len(walk)]
    if a not in exclude:
        return a
    return b


def _both_walk_sides(walk: List[Vertex], v: Vertex):
    i = walk.index(v)
    a, b = walk[i - 1], walk[(i + 1) % len(walk)]
    return [(a, b), (b, a)]


def _poly_neighbors(poly: List[Vertex], v: Vertex) -> List[Vertex]:
    if v not in poly:
        return []
    i = poly.index(v)
    return [poly[i - 1], poly[(i + 1) % len(poly)]]


def _poly_next(poly: List[Vertex], v: Vertex, away_from: Vertex) -> Optional[Vertex]:
    if v not in poly:
        return None
    i = poly.index(v)
    a, b = poly[i - 1], poly[(i + 1) % len(poly)]
    if a == away_from:
        return b
    if b == away_from:
        return a
    return None


def _boundary_nbs(g: PlaneGraph, v: Vertex) -> List[Vertex]:
    walk = list(g.outer_walk())
    if v not in walk:
        return []
    i = walk.index(v)
    return [walk[i - 1], walk[(i + 1) % len(walk)]]


def _lone_interior_neighbor(
    g: PlaneGraph, v: Vertex, interior: Set[Vertex]
) -> Optional[Vertex]:
    """The unique interior neighbor of a degree-3 boundary vertex."""
    ps = [w for w in g.rot[v] if w in interior]
    return ps[0] if len(ps) == 1 else None


def _has_interior_spike(g: PlaneGraph, v: Vertex, interior: Set[Vertex]) -> bool:
    return any(r in interior and g.degree(r) == 3 for r in g.rot[v])


def _spike_of(g: PlaneGraph, v: Vertex, interior: Set[Vertex]) -> Optional[Vertex]:
    rs = sorted(r for r in g.rot[v] if r in interior and g.degree(r) == 3)
    return rs[0] if rs else None


def _wedge_pairs(g: PlaneGraph, x: Vertex, interior: Set[Vertex]):
    """Pairs of adjacent interior degree-4 vertices hinged at x whose
    common neighborhood is exactly x plus one more vertex."""
    out = []
    seen: Set[Vertex] = set()
    for a in sorted(g.rot[x]):
        if a in seen or a not in interior or g.degree(a) != 4:
            continue
        for b in sorted(g.rot[a]):
            if (b in seen or b not in interior or g.degree(b) != 4
                    or not g.has_edge(b, x)):
                continue
            common = set(g.rot[a]) & set(g.rot[b])
            if len(common) == 2 and x in common:
                out.append((a, b))
                seen.update((a, b))
                break
    return out


def _insert_raw(
    hv: SkeletalView, where, kind: str, floor: int
) -> Tuple[SkeletalView, GadgetTag]:
    """Fuse or attach a catalog gadget without revalidating the host,
    so that a fuse can repair a leaf left by a deletion."""
    gad = gadget(kind)
    if gad.view.kind == "vertex-rooted":
        out, relabel = fuse(hv, where, gad.view, id_floor=floor)
        forced = where if kind == "AB" else None
        site: Tuple[Vertex, ...] = (where,)
    else:
        u, v = where
        out, relabel = attach(hv, u, v, gad.view, id_floor=floor)
        forced = (
            relabel[gad.red_vertex] if gad.red_vertex is not None else None
        )
        site = (u, v)
    internals = frozenset(
        relabel[w] for w in gad.graph.rot if w not in gad.roots
    )
    return out, GadgetTag(gad.kind, site, internals, forced)


def _add_bounded_chord(g: PlaneGraph, x: Vertex, y: Vertex) -> PlaneGraph:
    for nb in g.rot[x]:
        f = g.face_of((x, nb))
        if f == g.outer_face():
            continue
        heads = [b for (_, b) in f]
        if heads.count(x) == 1 and heads.count(y) == 1:
            return g.add_edge(x, y, (x, nb))
    raise SolverError(f"no bounded face holds both {x} and {y}")


def _red_attach_site(g: PlaneGraph, dead: Sequence[Vertex], p: Vertex):
    """An attach instruction forcing p, based at a boundary edge of the
    graph after deleting ``dead`` (p is on the new boundary)."""
    h = g.delete_vertices(dead)
    nbs = _boundary_nbs(h, p)
    if not nbs:
        raise SolverError(f"{p} not on the boundary after deleting {dead}")
    return ((p, nbs[0]), "A")


# =====================================================================
# Case registries (order matters: each guard may assume all earlier
# cases failed to apply)
# =====================================================================

_STRUCTURAL_CASES = [
    _Solver._case_bridge,
    _Solver._case_cut_vertex,
    _Solver._case_outerplanar,
    _Solver._case_chord,
]

_LOCAL_CASES = [
    _Solver._case_same_red,
    _Solver._case_consecutive_reds,
    _Solver._case_red_with_or,
    _Solver._case_red_next_heavy,
    _Solver._case_red_next_light,
    _Solver._case_boundary_wheel,
    _Solver._case_twin_forks,
    _Solver._case_treble_three,
    _Solver._case_fork_next_heavy,
    _Solver._case_fork_gap_fork,
    _Solver._case_fork_triangle,
    _Solver._case_fork_flank,
    _Solver._case_slack_edge,
    _Solver._case_triangle_boundary,
    _Solver._case_hidden_wheel,
    _Solver._case_hidden_spike,
    _Solver._case_shared_anchor,
    _Solver._case_saddle_pair,
    _Solver._case_step_down,
    _Solver._case_pocket,
    _Solver._case_ladder,
    _Solver._case_basket,
    _Solver._case_square_heavy,
]


# =====================================================================
# Public entry points
# =====================================================================


def solve(view: SkeletalView, config: Optional[SolveConfig] = None) -> SolveOutcome:
    """Dominating set of size at most floor(phi/3.5) for a skeletal
    triangulation (one more on the sporadic exceptions)."""
    return _Solver(config or SolveConfig()).solve_view(view)


def solve_triangulation(
    view: SkeletalView, config: Optional[SolveConfig] = None
) -> SolveOutcome:
    """Dominating set of size at most floor(n/3.5) for a plane
    triangulation on more than 10 vertices.

    A triangulation has no low-degree problems, so its penalty is n except
    for at most one bad 5-wheel at the boundary; deleting the boundary edge
    between its two heavier boundary vertices removes the wheel without
    creating anything new.
    """
    g = view.graph
    if g.n <= 10:
        raise SolverError("the n/3.5 bound needs more than 10 vertices")
    work = view.reroot("skeletal")
    if any(
        c.kind == "bad_5wheel" for c in scan_configurations(work)
    ):
        walk = list(g.outer_walk())
        for i in range(len(walk)):
            a, b = walk[i], walk[(i + 1) % len(walk)]
            try:
                cand = _closed(g.delete_edge(a, b))
            except EmbeddingError:
                continue
            if not scan_configurations(cand) and not is_sporadic(cand):
                work = cand
                break
        else:
            raise SolverError("cannot break the boundary wheel")
    if phi_half(work) > 2 * g.n:
        raise SolverError(
            f"triangulation penalty {phi_half(work)/2} exceeds n={g.n}"
        )
    out = solve(work, config)
    bound = 2 * g.n // 7
    if len(out.dom_set) > bound:
        raise SolverError(
            f"set of size {len(out.dom_set)} exceeds n/3.5 = {bound}"
        )
    return SolveOutcome(out.dom_set, bound, False, out.case_counts)


def dispatch_case(
    view: SkeletalView, config: Optional[SolveConfig] = None
) -> CasePlan:
    """The first applicable reduction for the view, without running it."""
    return _Solver(config or SolveConfig()).dispatch_case(view.reroot("skeletal"))


def apply_and_recurse(
    view: SkeletalView, plan: CasePlan, config: Optional[SolveConfig] = None
) -> Set[Vertex]:
    """Execute a reduction plan (recursion included) with all checks."""
    return _Solver(config or SolveConfig()).apply_and_recurse(
        view.reroot("skeletal"), plan
    )


def guaranteed_rooted_set(
    view: SkeletalView,
    mode: int,
    s: int,
    which: Optional[Vertex] = None,
    config: Optional[SolveConfig] = None,
):
    """Constructive rooted-set guarantees.

    For a vertex-rooted view, modes 1-3 (see
    :meth:`_Solver.rooted_vertex_set`) return a set.  For an edge-rooted
    view, modes 1-5 (see :meth:`_Solver.rooted_edge_set`) return a pair
    ``(set, root_info)``.
    """
    solver = _Solver(config or SolveConfig())
    if view.kind == "vertex-rooted":
        return solver.rooted_vertex_set(None, view.graph, view.roots[0], mode, s)
    if view.kind == "edge-rooted":
        u, v = view.roots
        return solver.rooted_edge_set(None, view.graph, u, v, mode, s, which)
    raise ValueError("guaranteed_rooted_set needs a rooted view")
