"""Vertex connectivity via max-flow, and homotopy classes of cycles.

Connectivity uses the standard vertex-splitting reduction: each vertex
becomes an in/out pair joined by a unit-capacity arc, so an integral max
flow counts internally disjoint paths.  Winding numbers come from the
unrolled-strip displacements recorded at generation time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core_map import Cycle, SurfaceMap
from .generators import Layout


class EdgeNotInMap(KeyError):
    """A cycle references an edge the layout does not know."""


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def maxflow(self, s: int, t: int, limit: int = 10**9) -> int:
        flow = 0
        while flow < limit:
            level = [-1] * self.n
            level[s] = 0
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for e in self.head[u]:
                    if self.cap[e] > 0 and level[self.to[e]] < 0:
                        level[self.to[e]] = level[u] + 1
                        dq.append(self.to[e])
            if level[t] < 0:
                break
            it = [0] * self.n

            def dfs(u: int, f: int) -> int:
                if u == t:
                    return f
                while it[u] < len(self.head[u]):
                    e = self.head[u][it[u]]
                    v = self.to[e]
                    if self.cap[e] > 0 and level[v] == level[u] + 1:
                        d = dfs(v, min(f, self.cap[e]))
                        if d > 0:
                            self.cap[e] -= d
                            self.cap[e ^ 1] += d
                            return d
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, limit - flow)
                if pushed == 0:
                    break
                flow += pushed
        return flow


def _edge_list(m) -> tuple[int, list[tuple[int, int]]]:
    """(n, undirected edges) from a SurfaceMap or a plain adjacency list."""
    if isinstance(m, SurfaceMap):
        return m.vertex_count, sorted(m.edges)
    edges = {(u, w) if u < w else (w, u) for u, nbrs in enumerate(m) for w in nbrs}
    return len(m), sorted(edges)


def independent_paths(m, u: int, v: int) -> int:
    """Maximum number of internally vertex-disjoint u-v paths.

    Accepts a SurfaceMap or a plain adjacency list.  Endpoints are exempt
    from the unit vertex capacity, so adjacent pairs get the direct edge on
    top of the disjoint paths, realising Menger's count.
    """
    if u == v:
        raise ValueError("u and v must differ")
    n, edges = _edge_list(m)
    din = _Dinic(2 * n)
    big = n + 1
    for w in range(n):
        din.add(2 * w, 2 * w + 1, 1 if w not in (u, v) else big)
    for (a, b) in edges:
        din.add(2 * a + 1, 2 * b, 1)
        din.add(2 * b + 1, 2 * a, 1)
    return din.maxflow(2 * u + 1, 2 * v)


def vertex_connectivity(m) -> int:
    """kappa: min over non-adjacent pairs of independent_paths (n-1 if complete)."""
    n, edges = _edge_list(m)
    best: Optional[int] = None
    nbrs = [set() for _ in range(n)]
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    # kappa <= mindeg, so scanning pairs against a fixed vertex of minimum
    # degree plus its neighbourhood covers a minimum separator.
    v0 = min(range(n), key=lambda v: len(nbrs[v]))
    candidates = [v0] + list(nbrs[v0])
    for u in candidates:
        for v in range(n):
            if v == u or v in nbrs[u]:
                continue
            k = independent_paths(m, u, v)
            if best is None or k < best:
                best = k
    if best is None:
        return n - 1
    return best


def winding(layout: Layout, c: Cycle) -> tuple[int, int]:
    """Net seam crossings (wx, wy) of a closed walk, from strip displacements."""
    dx = Fraction(0)
    dy = Fraction(0)
    for u, v in c.edges():
        d = layout.disp.get((u, v))
        if d is None:
            raise EdgeNotInMap(f"edge {u}-{v} not in map")
        dx += d[0]
        dy += d[1]
    wy = dy / layout.j
    if wy.denominator != 1:
        raise ValueError(f"cycle displacement ({dx},{dy}) is not a lattice vector")
    # the deck lattice is spanned by (i, 0) and (-seam_shift, j)
    wx = (dx + wy * layout.seam_shift) / layout.i
    if wx.denominator != 1:
        raise ValueError(f"cycle displacement ({dx},{dy}) is not a lattice vector")
    return (int(wx), int(wy))


def is_contractible(layout: Layout, c: Cycle) -> bool:
    return winding(layout, c) == (0, 0)


def vertical_cutting_cycle(m: SurfaceMap, layout: Layout) -> Cycle:
    """A cycle crossing every strip upward exactly once (vertical winding 1).

    Climbs row by row through each strip's local vertices and closes along
    row 0; the result is vertex-disjoint by construction.
    """
    j = layout.j
    used = set()
    path = [layout.row_cycle(0)[0]]
    used.add(path[0])
    for s in range(j):
        target_row = (s + 1) % j
        target = set(layout.row_cycle(target_row)) - used
        if s == j - 1:
            target = {layout.row_cycle(0)[0]} | target
        # BFS from the current end using only this strip's interior
        allowed = set(layout.row_cycle(s)) | {
            v for v, (gs, _) in layout.gap_index.items() if gs == s
        } | set(layout.row_cycle(target_row))
        start = path[-1]
        frontier = {start}
        parent = {start: None}
        goal = None
        while frontier and goal is None:
            nxt = set()
            for u in sorted(frontier):
                for w in sorted(m.rotation[u]):
                    if w in parent or w not in allowed:
                        continue
                    d = layout.disp.get((u, w))
                    if d is None or d[1] < 0:
                        continue  # never step downward
                    arrives = d[1] > 0 and (
                        w in target or (s == j - 1 and w == path[0])
                    )
                    if w in used and not (arrives and w == path[0]):
                        continue
                    parent[w] = u
                    if arrives:
                        goal = w
                        break
                    nxt.add(w)
                if goal is not None:
                    break
            frontier = nxt
        if goal is None:
            raise ValueError(f"no upward path through strip {s}")
        seg = []
        cur = goal
        while cur != start:
            seg.append(cur)
            cur = parent[cur]
        seg.reverse()
        if s == j - 1 and seg and seg[-1] == path[0]:
            seg.pop()
        path.extend(seg)
        used.update(seg)
    # close along row 0 back to the start (unless the seam hop already did)
    row0 = layout.row_cycle(0)
    pos = {v: c for c, v in enumerate(row0)}
    if path[-1] != path[0] and path[-1] in pos:
        c = pos[path[-1]]
        c0 = pos[path[0]]
        while (c + 1) % layout.i != c0:
            c = (c + 1) % layout.i
            path.append(row0[c])
    if path[-1] == path[0]:
        path.pop()
    return Cycle(vertices=tuple(path))


@dataclass
class ConjectureReport:
    """One instance's evidence for the 4-connected-implies-Hamiltonian claim."""

    kappa: int
    mindeg: int
    hamiltonian: Optional[bool]
    kappa_equals_mindeg: bool
    in_scope: bool          # 4-connected, so the conjecture applies
    consistent: bool        # no counterexample: not (in scope and not Hamiltonian)

    def summary(self) -> str:
        scope = "in scope" if self.in_scope else "outside conjecture scope"
        return (
            f"kappa={self.kappa} mindeg={self.mindeg} "
            f"hamiltonian={self.hamiltonian} ({scope}, "
            f"{'consistent' if self.consistent else 'COUNTEREXAMPLE'})"
        )


def check_conjecture_instance(m: SurfaceMap, ham_found: Optional[bool]) -> ConjectureReport:
    kappa = vertex_connectivity(m)
    mindeg = min(m.degree(v) for v in range(m.vertex_count))
    in_scope = kappa >= 4
    consistent = not (in_scope and ham_found is False)
    return ConjectureReport(
        kappa=kappa,
        mindeg=mindeg,
        hamiltonian=ham_found,
        kappa_equals_mindeg=kappa == mindeg,
        in_scope=in_scope,
        consistent=consistent,
    )
