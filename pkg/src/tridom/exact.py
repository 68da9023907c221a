"""Exact minimum dominating sets, acts-as classification, and neat sets.

Small graphs go through a bitmask branch-and-bound (default cap 26
vertices); polygon triangulations of any size go through a dynamic program
over the dual tree.  Both support the same constraint object: forced members
and exemption from domination.  The witness set returned is always the
lexicographically smallest minimum solution, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .plane import PlaneGraph, SkeletalView, Vertex

DEFAULT_CAP = 26
_INF = float("inf")


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class DomConstraints:
    """must_include: forced members; exempt: vertices not requiring domination."""

    must_include: FrozenSet[Vertex] = frozenset()
    exempt: FrozenSet[Vertex] = frozenset()


def constraints(
    must: Iterable[Vertex] = (), exempt: Iterable[Vertex] = ()
) -> DomConstraints:
    return DomConstraints(frozenset(must), frozenset(exempt))


# =====================================================================
# Branch and bound on bitmasks
# =====================================================================


def exact_min_domset(
    g: PlaneGraph,
    cons: DomConstraints = DomConstraints(),
    cap: int = DEFAULT_CAP,
) -> Set[Vertex]:
    """Lexicographically smallest minimum constrained dominating set.

    Raises OracleError if the graph exceeds the cap or no solution exists
    (impossible unless must/exempt are contradictory with size n).
    """
    if g.n > cap:
        raise OracleError(f"{g.n} vertices exceeds oracle cap {cap}")
    size = min_domset_size(g, cons, cap)
    verts = sorted(g.rot)
    idx = {v: i for i, v in enumerate(verts)}
    nbhd = [0] * g.n
    for v in verts:
        m = 1 << idx[v]
        for w in g.rot[v]:
            m |= 1 << idx[w]
        nbhd[idx[v]] = m
    full = (1 << g.n) - 1
    need = full
    for v in cons.exempt:
        need &= ~(1 << idx[v])
    must_idx = sorted(idx[v] for v in cons.must_include)
    # last index that can still dominate each vertex
    last_dom = [max(i for i in range(g.n) if nbhd[i] >> j & 1) for j in range(g.n)]
    best: Optional[List[int]] = None

    def lb(dominated: int, frm: int) -> int:
        rem = bin(need & ~dominated).count("1")
        if rem == 0:
            return 0
        mx = max((bin(nbhd[i]).count("1") for i in range(frm, g.n)), default=0)
        if mx == 0:
            return g.n + 1
        return -(-rem // mx)

    def dfs(i: int, chosen: List[int], dominated: int) -> None:
        nonlocal best
        if best is not None:
            return  # first solution found in lex DFS at optimal size wins
        if need & ~dominated == 0 and all(m in chosen for m in must_idx):
            if len(chosen) == size:
                best = list(chosen)
            return
        if i == g.n or len(chosen) == size:
            return
        remaining_must = sum(1 for m in must_idx if m >= i and m not in chosen)
        if len(chosen) + max(lb(dominated, i), remaining_must) > size:
            return
        # include i first for lexicographic minimality
        dfs(i + 1, chosen + [i], dominated | nbhd[i])
        if i in must_idx:
            return
        # excluding i must not strand a vertex whose last dominator is i
        for j in range(g.n):
            if last_dom[j] == i and not dominated >> j & 1 and need >> j & 1:
                return
        dfs(i + 1, chosen, dominated)

    dfs(0, [], 0)
    if best is None:
        raise OracleError("no constrained dominating set exists")
    return {verts[i] for i in best}


def min_domset_size(
    g: PlaneGraph,
    cons: DomConstraints = DomConstraints(),
    cap: int = DEFAULT_CAP,
) -> int:
    """Minimum size only (faster branch-and-bound, no lex requirement)."""
    if g.n > cap:
        raise OracleError(f"{g.n} vertices exceeds oracle cap {cap}")
    verts = sorted(g.rot)
    idx = {v: i for i, v in enumerate(verts)}
    n = g.n
    nbhd = [0] * n
    for v in verts:
        m = 1 << idx[v]
        for w in g.rot[v]:
            m |= 1 << idx[w]
        nbhd[idx[v]] = m
    full = (1 << n) - 1
    need = full
    for v in cons.exempt:
        need &= ~(1 << idx[v])
    start_dom = 0
    start_size = len(cons.must_include)
    for v in cons.must_include:
        start_dom |= nbhd[idx[v]]
    maxdeg = max(bin(m).count("1") for m in nbhd)
    best = n + 1
    dominators = [
        [i for i in range(n) if nbhd[i] >> j & 1] for j in range(n)
    ]
    seen: Dict[int, int] = {}

    def bb(dominated: int, k: int) -> None:
        nonlocal best
        rem_mask = need & ~dominated
        if rem_mask == 0:
            best = min(best, k)
            return
        rem = bin(rem_mask).count("1")
        if k + -(-rem // maxdeg) >= best:
            return
        prev = seen.get(dominated)
        if prev is not None and prev <= k:
            return
        seen[dominated] = k
        # branch on the undominated vertex with fewest candidate dominators
        v = min(
            (j for j in range(n) if rem_mask >> j & 1),
            key=lambda j: len(dominators[j]),
        )
        for i in dominators[v]:
            bb(dominated | nbhd[i], k + 1)

    bb(start_dom, start_size)
    if best > n:
        raise OracleError("no constrained dominating set exists")
    return best


def dominates(
    g: PlaneGraph, s: Iterable[Vertex], exempt: Iterable[Vertex] = ()
) -> bool:
    covered: Set[Vertex] = set()
    for v in s:
        covered.add(v)
        covered.update(g.rot[v])
    return g.vertices - covered <= set(exempt)


# =====================================================================
# Outerplanar exact DP
# =====================================================================

# endpoint states
_IN, _DOM, _UN = 0, 1, 2


def outerplanar_min_domset(
    view: SkeletalView, cons: DomConstraints = DomConstraints()
) -> Set[Vertex]:
    """Exact minimum constrained dominating set of a polygon triangulation.

    Dynamic program over the dual tree: for every separating edge of the
    triangulation, a table indexed by the domination states of its two
    endpoints (in set / dominated inside / undominated so far).
    """
    g = view.graph
    if g.interior_set():
        raise OracleError("outerplanar oracle requires no interior vertices")
    walk = list(g.outer_walk())
    if len(set(walk)) != len(walk):
        raise OracleError("outerplanar oracle requires a simple boundary cycle")
    k = len(walk)
    if k == 3 and g.n == 3:
        return _polygon_trivial(g, walk, cons)
    pos = {v: i for i, v in enumerate(walk)}
    # The region of edge (i, j), i < j, is the index interval i..j; the
    # triangle of that region adjoining the edge has its apex strictly
    # between i and j, so triangle (x < y < z) serves region (x, z).
    apex: Dict[Tuple[int, int], int] = {}
    for (a, b, c) in g.bounded_triangles():
        x, y, z = sorted((pos[a], pos[b], pos[c]))
        apex[(x, z)] = y

    choice: Dict[Tuple[int, int, int, int], Tuple] = {}

    memo: Dict[Tuple[int, int], List[List[float]]] = {}

    must = {pos[v] for v in cons.must_include}
    exempt = {pos[v] for v in cons.exempt}

    def table(i: int, j: int) -> List[List[float]]:
        if (i, j) in memo:
            return memo[(i, j)]
        t = [[_INF] * 3 for _ in range(3)]
        if j == i + 1:
            for si in (_IN, _UN):
                for sj in (_IN, _UN):
                    t[si][sj] = 0
        else:
            m = apex[(i, j)]
            L = table(i, m)
            R = table(m, j)
            for si in range(3):
                for sj in range(3):
                    bestv = _INF
                    bestc = None
                    for smL in range(3):
                        for smR in range(3):
                            if (smL == _IN) != (smR == _IN):
                                continue
                            m_in = smL == _IN
                            if m in must and not m_in:
                                continue
                            m_dom = (
                                m_in
                                or smL == _DOM
                                or smR == _DOM
                                or si == _IN
                                or sj == _IN
                            )
                            if not m_in and not m_dom and m not in exempt:
                                continue
                            # child endpoint states get upgraded to DOM by
                            # the triangle edges i-m / m-j when m is chosen
                            for ci in ((si,) if si == _IN else (_DOM, _UN)):
                                for cj in ((sj,) if sj == _IN else (_DOM, _UN)):
                                    # parent-visible state must match si/sj
                                    vi = ci if ci == _IN else (
                                        _DOM if (ci == _DOM or m_in) else _UN
                                    )
                                    vj = cj if cj == _IN else (
                                        _DOM if (cj == _DOM or m_in) else _UN
                                    )
                                    if vi != si or vj != sj:
                                        continue
                                    val = (
                                        L[ci][smL]
                                        + R[smR][cj]
                                        + (1 if m_in else 0)
                                    )
                                    if val < bestv:
                                        bestv = val
                                        bestc = (m, smL, smR, ci, cj)
                    t[si][sj] = bestv
                    if bestc is not None:
                        choice[(i, j, si, sj)] = bestc
        memo[(i, j)] = t
        return t

    top = table(0, k - 1)
    best = _INF
    best_states: Optional[Tuple[int, int]] = None
    for s0 in range(3):
        for s1 in range(3):
            if 0 in must and s0 != _IN:
                continue
            if k - 1 in must and s1 != _IN:
                continue
            d0 = s0 == _IN or s0 == _DOM or s1 == _IN
            d1 = s1 == _IN or s1 == _DOM or s0 == _IN
            if not d0 and 0 not in exempt:
                continue
            if not d1 and k - 1 not in exempt:
                continue
            val = top[s0][s1] + (s0 == _IN) + (s1 == _IN)
            if val < best:
                best = val
                best_states = (s0, s1)
    if best_states is None:
        raise OracleError("no constrained dominating set exists")

    # reconstruct
    result: Set[Vertex] = set()

    def rec(i: int, j: int, si: int, sj: int) -> None:
        if si == _IN:
            result.add(walk[i])
        if sj == _IN:
            result.add(walk[j])
        if j == i + 1:
            return
        m, smL, smR, ci, cj = choice[(i, j, si, sj)]
        rec(i, m, ci, smL)
        rec(m, j, smR, cj)

    rec(0, k - 1, *best_states)
    return result


def _polygon_trivial(
    g: PlaneGraph, walk: List[Vertex], cons: DomConstraints
) -> Set[Vertex]:
    s = set(cons.must_include)
    if not s and set(walk) - set(cons.exempt):
        s = {min(walk)}
    return s or {min(walk)}


def min_domset(
    g: PlaneGraph,
    cons: DomConstraints = DomConstraints(),
    cap: int = DEFAULT_CAP,
) -> Set[Vertex]:
    """Route to the outerplanar DP when possible, else the capped oracle."""
    if g.n <= cap:
        return exact_min_domset(g, cons, cap)
    view = SkeletalView(g, "skeletal")
    return outerplanar_min_domset(view, cons)


# =====================================================================
# acts-as classification
# =====================================================================


@dataclass(frozen=True)
class ActsAs:
    kind: str
    s: int
    witness: FrozenSet[Vertex]


def _size(g: PlaneGraph, must=(), exempt=(), cap=DEFAULT_CAP) -> int:
    return min_domset_size(g, constraints(must, exempt), cap)


def acts_as(view: SkeletalView, cap: int = DEFAULT_CAP) -> ActsAs:
    """Classify a rooted view per the acts-as case ladder.

    Vertex-rooted kinds: AB, LR, Nope.
    Edge-rooted kinds: A+B, OR, A, B, AND, L+R, OCTA, L-OR-R, L, R, None.
    Each case excludes all the preceding ones.
    """
    g = view.graph
    if view.kind == "vertex-rooted":
        (u,) = view.roots
        s = _size(g, exempt=(u,), cap=cap)
        if _size(g, must=(u,), exempt=(u,), cap=cap) == s:
            w = exact_min_domset(g, constraints((u,), (u,)), cap)
            return ActsAs("AB", s, frozenset(w))
        if _size(g, cap=cap) == s:
            return ActsAs("LR", s, frozenset(exact_min_domset(g, cap=cap)))
        return ActsAs("Nope", s, frozenset())
    if view.kind != "edge-rooted":
        raise OracleError("acts_as needs a rooted view")
    u, v = view.roots
    s = _size(g, exempt=(u, v), cap=cap)
    wit = lambda must=(), exempt=(): frozenset(
        exact_min_domset(g, constraints(must, exempt), cap)
    )
    if _size(g, must=(u, v), exempt=(u, v), cap=cap) == s:
        return ActsAs("A+B", s, wit((u, v), (u, v)))
    in_u = _size(g, must=(u,), exempt=(u, v), cap=cap) == s
    in_v = _size(g, must=(v,), exempt=(u, v), cap=cap) == s
    if in_u and in_v:
        return ActsAs("OR", s, wit((u,), (u, v)))
    if in_u:
        return ActsAs("A", s, wit((u,), (u, v)))
    if in_v:
        return ActsAs("B", s, wit((v,), (u, v)))
    full = _size(g, cap=cap)
    both_s1 = _size(g, must=(u, v), exempt=(u, v), cap=cap) <= s + 1
    if full == s and both_s1:
        return ActsAs("AND", s, wit())
    if full == s:
        return ActsAs("L+R", s, wit())
    dom_v = _size(g, exempt=(u,), cap=cap) == s  # dominates v (u exempt)
    dom_u = _size(g, exempt=(v,), cap=cap) == s
    if dom_u and dom_v and both_s1:
        return ActsAs("OCTA", s, wit(exempt=(u,)))
    if dom_u and dom_v:
        return ActsAs("L-OR-R", s, wit(exempt=(u,)))
    if dom_u:
        return ActsAs("L", s, wit(exempt=(v,)))
    if dom_v:
        return ActsAs("R", s, wit(exempt=(u,)))
    return ActsAs("None", s, frozenset())


# =====================================================================
# neat sets
# =====================================================================


def is_neat(g: PlaneGraph, s: Set[Vertex]) -> bool:
    """No member's closed neighborhood is strictly contained in another
    vertex's closed neighborhood."""
    hoods = {v: g.closed_neighborhood(v) for v in g.rot}
    for x in s:
        hx = hoods[x]
        for v in g.rot:
            if v not in s and hx < hoods[v]:
                return False
    return True


def neatify(
    g: PlaneGraph, s: Set[Vertex], exempt: Iterable[Vertex] = ()
) -> Set[Vertex]:
    """Replace members by strict closed-neighborhood superset vertices until
    the set is neat.  Size and domination are preserved; terminates because
    the total neighborhood mass strictly increases."""
    ex = set(exempt)
    if not dominates(g, s, ex):
        raise OracleError("input set is not dominating")
    cur = set(s)
    hoods = {v: g.closed_neighborhood(v) for v in g.rot}
    changed = True
    while changed:
        changed = False
        for x in sorted(cur):
            cands = [
                v
                for v in g.rot
                if v not in cur and hoods[x] < hoods[v]
            ]
            if cands:
                best = max(cands, key=lambda v: (len(hoods[v]), -v))
                cur.remove(x)
                cur.add(best)
                changed = True
                break
    assert is_neat(g, cur) and dominates(g, cur, ex) and len(cur) == len(s)
    return cur


def force_into_set(g: PlaneGraph, s: Set[Vertex], v: Vertex) -> Set[Vertex]:
    """Swap some member whose closed neighborhood is contained in v's for v.

    Unlike neatify this allows non-strict containment, so it succeeds
    whenever v's closed neighborhood covers a member's.
    """
    if v in s:
        return set(s)
    hv = g.closed_neighborhood(v)
    for x in sorted(s):
        if g.closed_neighborhood(x) <= hv:
            out = set(s)
            out.remove(x)
            out.add(v)
            return out
    raise OracleError(f"cannot force {v}: no replaceable member")
