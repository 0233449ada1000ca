"""Polygonal maps on closed orientable surfaces, faces-first.

A map is stored as its face list (cyclic vertex sequences, all oriented the
same way).  Edges and the per-vertex rotation system are derived from the
faces, never stored independently, so they cannot drift out of sync.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence


class MapError(Exception):
    """Base class for rejected face lists."""


class NotClosedError(MapError):
    """Some edge does not lie on exactly two faces, or a vertex star is not a disk."""


class DisconnectedError(MapError):
    """The underlying graph is not connected."""


class NonSimpleError(MapError):
    """The underlying graph has a loop or the face list repeats a vertex."""


class BadIncidenceError(MapError):
    """Two faces meet in more than a vertex or a single edge."""


class LinkNotCycleError(MapError):
    """The link of a vertex is not a simple cycle."""


@dataclass
class Cycle:
    """A closed walk given by its vertex sequence (last vertex joins the first).

    ``verified`` is set by the Hamiltonicity checker; ``winding`` is the
    homotopy class on the torus as a pair of signed seam-crossing counts.
    """

    vertices: tuple[int, ...]
    verified: bool = False
    winding: Optional[tuple[int, int]] = None

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterable[tuple[int, int]]:
        vs = self.vertices
        for t in range(len(vs)):
            yield vs[t], vs[(t + 1) % len(vs)]


@dataclass(frozen=True)
class FaceSequence:
    """Cyclic run-length encoding (p1^n1, ..., pk^nk) of face sizes around a vertex.

    Stored in canonical form: the lexicographically least tuple over all
    rotations of the run list and of its reversal, with wrap-around runs of
    equal face size merged first.
    """

    entries: tuple[tuple[int, int], ...]

    @staticmethod
    def from_sizes(sizes: Sequence[int]) -> "FaceSequence":
        if not sizes:
            raise ValueError("empty face cycle")
        runs: list[list[int]] = []
        for p in sizes:
            if runs and runs[-1][0] == p:
                runs[-1][1] += 1
            else:
                runs.append([p, 1])
        if len(runs) > 1 and runs[0][0] == runs[-1][0]:
            runs[0][1] += runs[-1][1]
            runs.pop()
        return FaceSequence(_canonical_runs([tuple(r) for r in runs]))

    @staticmethod
    def parse(text: str) -> "FaceSequence":
        """Parse '(3^3,4^2)' / '3^3.4^2' style notation."""
        body = text.strip().strip("()[]")
        runs = []
        for part in body.replace(",", ".").split("."):
            part = part.strip()
            if not part:
                continue
            if "^" in part:
                p, n = part.split("^")
                runs.append((int(p), int(n)))
            else:
                runs.append((int(part), 1))
        merged: list[tuple[int, int]] = []
        for p, n in runs:
            if merged and merged[-1][0] == p:
                merged[-1] = (p, merged[-1][1] + n)
            else:
                merged.append((p, n))
        if len(merged) > 1 and merged[0][0] == merged[-1][0]:
            merged[0] = (merged[0][0], merged[0][1] + merged[-1][1])
            merged.pop()
        return FaceSequence(_canonical_runs(merged))

    def degree(self) -> int:
        return sum(n for _, n in self.entries)

    def link_length(self) -> int:
        return sum((p - 2) * n for p, n in self.entries)

    def sizes(self) -> tuple[int, ...]:
        out: list[int] = []
        for p, n in self.entries:
            out.extend([p] * n)
        return tuple(out)

    def __str__(self) -> str:
        return "(" + ",".join(f"{p}^{n}" if n > 1 else f"{p}" for p, n in self.entries) + ")"


def _canonical_runs(runs: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    best = None
    for seq in (tuple(runs), tuple(reversed(runs))):
        for t in range(len(seq)):
            cand = seq[t:] + seq[:t]
            if best is None or cand < best:
                best = cand
    return best


def curvature(fs: FaceSequence) -> Fraction:
    """Combinatorial curvature 1 - (sum n_i)/2 + sum n_i/p_i, exact."""
    total = Fraction(1) - Fraction(fs.degree(), 2)
    for p, n in fs.entries:
        total += Fraction(n, p)
    return total


@dataclass(frozen=True)
class SurfaceMap:
    """Validated polygonal map: faces plus derived edge set and rotations.

    ``rotation[v]`` lists the neighbours of ``v`` in the cyclic order induced
    by the (coherent) face orientations.  ``face_at_corner[(v, w)]`` is the
    index of the face lying between edges (v,w) and (v, next neighbour).
    """

    vertex_count: int
    faces: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int]]
    rotation: tuple[tuple[int, ...], ...]
    face_left_of: dict[tuple[int, int], int] = field(compare=False, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def adjacency(self) -> list[tuple[int, ...]]:
        return [self.rotation[v] for v in range(self.vertex_count)]

    def to_json(self, labels: Optional[dict[int, str]] = None) -> str:
        doc = {
            "n": self.vertex_count,
            "faces": [list(f) for f in self.faces],
            "labels": {str(v): lab for v, lab in sorted(labels.items())} if labels else {},
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "SurfaceMap":
        doc = json.loads(text)
        return build_from_faces(doc["faces"], vertex_count=doc["n"])


def build_from_faces(
    faces: Sequence[Sequence[int]], vertex_count: Optional[int] = None
) -> SurfaceMap:
    """Validate a face list and derive edges plus rotation system.

    Raises NotClosedError, NonSimpleError, BadIncidenceError or
    DisconnectedError on the first violated map axiom.
    """
    faces = tuple(tuple(f) for f in faces)
    if not faces:
        raise NotClosedError("no faces")
    seen_ids = {v for f in faces for v in f}
    n = vertex_count if vertex_count is not None else (max(seen_ids) + 1 if seen_ids else 0)
    for f in faces:
        if len(f) < 3:
            raise NonSimpleError(f"face {f} has fewer than 3 vertices")
        if len(set(f)) != len(f):
            raise NonSimpleError(f"face {f} repeats a vertex")
        for v in f:
            if not (0 <= v < n):
                raise MapError(f"vertex id {v} out of range 0..{n - 1}")
    if seen_ids != set(range(n)):
        raise DisconnectedError("some vertex ids are unused")

    # Each undirected edge must be traversed once in each direction.
    directed: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(faces):
        for t in range(len(f)):
            u, v = f[t], f[(t + 1) % len(f)]
            if u == v:
                raise NonSimpleError(f"loop at vertex {u}")
            if (u, v) in directed:
                raise NotClosedError(
                    f"edge {u}-{v} traversed twice in the same direction "
                    "(incoherent orientation or pinched surface)"
                )
            directed[(u, v)] = fi
    edges = set()
    for (u, v) in directed:
        if (v, u) not in directed:
            raise NotClosedError(f"edge {u}-{v} lies on only one face")
        edges.add((u, v) if u < v else (v, u))

    for (u, v) in edges:
        a, b = directed[(u, v)], directed[(v, u)]
        if a == b:
            raise BadIncidenceError(f"face {faces[a]} glued to itself along {u}-{v}")
    # Face-pair intersections: every connected component of the intersection
    # of two faces must be a single vertex or a single edge.  (On small tori
    # two faces may legitimately meet twice, in separate edges.)
    pair_verts: dict[tuple[int, int], list[int]] = defaultdict(list)
    vert_faces: dict[int, set[int]] = defaultdict(set)
    for fi, f in enumerate(faces):
        for v in f:
            vert_faces[v].add(fi)
    for v in range(n):
        fs = sorted(vert_faces[v])
        for x in range(len(fs)):
            for y in range(x + 1, len(fs)):
                pair_verts[(fs[x], fs[y])].append(v)
    for (fa, fb), shared in pair_verts.items():
        if len(shared) < 2:
            continue
        sh = set(shared)
        shared_edges = []
        for u in sh:
            for w in sh:
                if u < w and (u, w) in edges:
                    a, b = directed.get((u, w)), directed.get((w, u))
                    if fa in (a, b) and fb in (a, b):
                        shared_edges.append((u, w))
        # components: vertices linked by shared edges
        parent = {v: v for v in sh}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, w in shared_edges:
            parent[find(u)] = find(w)
        comp_sizes = defaultdict(int)
        for v in sh:
            comp_sizes[find(v)] += 1
        edge_comp = defaultdict(int)
        for u, w in shared_edges:
            edge_comp[find(u)] += 1
        for root, size in comp_sizes.items():
            if size > 2 or edge_comp[root] > 1:
                raise BadIncidenceError(
                    f"faces {faces[fa]} and {faces[fb]} meet in more than an edge"
                )

    # Rotation: at corner (a, v, b) of a face, edge (v,a) is followed by (v,b).
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    corner_face: dict[tuple[int, int], int] = {}
    for fi, f in enumerate(faces):
        p = len(f)
        for t in range(p):
            a, v, b = f[t - 1], f[t], f[(t + 1) % p]
            if a in succ[v]:
                raise NotClosedError(f"conflicting corners at vertex {v}")
            succ[v][a] = b
            corner_face[(v, a)] = fi
    rotation = []
    for v in range(n):
        nbrs = succ[v]
        if not nbrs:
            raise DisconnectedError(f"isolated vertex {v}")
        start = next(iter(nbrs))
        order = [start]
        cur = nbrs[start]
        while cur != start:
            if cur not in nbrs or len(order) > len(nbrs):
                raise NotClosedError(f"vertex star at {v} is not a single disk")
            order.append(cur)
            cur = nbrs[cur]
        if len(order) != len(nbrs):
            raise NotClosedError(f"vertex star at {v} splits into several cycles")
        rotation.append(tuple(order))

    # Connectivity of the underlying graph.
    seen = {0}
    queue = deque([0])
    adj = defaultdict(list)
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise DisconnectedError(f"graph has {n - len(seen)} unreachable vertices")

    return SurfaceMap(
        vertex_count=n,
        faces=faces,
        edges=frozenset(edges),
        rotation=tuple(rotation),
        face_left_of=corner_face,
    )


def euler_characteristic(m: SurfaceMap) -> int:
    return m.vertex_count - m.edge_count + m.face_count


def degree(m: SurfaceMap, v: int) -> int:
    return m.degree(v)


def face_sequence(m: SurfaceMap, v: int) -> FaceSequence:
    """Run-length encoding of face sizes around v, in rotation order."""
    sizes = []
    for w in m.rotation[v]:
        fi = m.face_left_of[(v, w)]
        sizes.append(len(m.faces[fi]))
    return FaceSequence.from_sizes(sizes)


def link(m: SurfaceMap, v: int) -> Cycle:
    """The cycle of face-boundary edges around v that avoid v.

    For each face at v (in rotation order) this walks the face boundary from
    the neighbour after v to the neighbour before v; concatenation closes up
    into the link cycle.
    """
    path: list[int] = []
    for w in m.rotation[v]:
        fi = m.face_left_of[(v, w)]
        f = m.faces[fi]
        p = len(f)
        t = f.index(v)
        # corner (f[t-1], v, f[t+1]): rotation maps neighbour f[t-1] -> f[t+1],
        # so this face sits between edges (v, f[t-1]) and (v, f[t+1]); its
        # non-v boundary runs from f[t-1] backwards to f[t+1].
        arc = [f[(t - 1 - s) % p] for s in range(p - 1)]
        if path and path[-1] != arc[0]:
            raise LinkNotCycleError(f"link around {v} does not chain up")
        path.extend(arc[1:] if path else arc)
    if len(path) < 2 or path[0] != path[-1]:
        raise LinkNotCycleError(f"link around {v} does not close")
    # On very small tori the link may revisit a vertex; it is still a closed
    # walk of the required length, so no simplicity check here.
    return Cycle(vertices=tuple(path[:-1]))


def link_face_sequences(m: SurfaceMap, v: int) -> tuple[FaceSequence, ...]:
    """face_sequence applied to each link vertex, in link order."""
    return tuple(face_sequence(m, w) for w in link(m, v).vertices)


def classify_vertices(m: SurfaceMap) -> dict[FaceSequence, set[int]]:
    """Partition the vertex set by canonical face-sequence."""
    out: dict[FaceSequence, set[int]] = defaultdict(set)
    for v in range(m.vertex_count):
        out[face_sequence(m, v)].add(v)
    return dict(out)
