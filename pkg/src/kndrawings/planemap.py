"""Planarization of a combinatorial drawing into a plane map.

Every crossing becomes a degree-4 node, splitting its two edges into
segments.  The map is stored as a rotation system on darts:

* Segment s has two darts, 2s (forward, toward the edge's larger endpoint)
  and 2s + 1 (backward); ``twin(d) = d ^ 1``.
* Each node carries the counterclockwise cyclic order of its outgoing
  darts.  At a vertex this is induced by the drawing's rotation; at a
  crossing of sign +1 it is (e backward, f backward, e forward, f forward)
  for the crossing's lexicographically ordered edge pair (e, f), and the
  alternating order with f's darts swapped for sign -1.
* Faces are the orbits of ``next(d) = rotation-predecessor of twin(d)``.
  Each face lies to the left of its boundary darts, so bounded faces are
  walked counterclockwise.

Face tracing either yields counts with V - E + F = 2 and node-simple
boundary walks, or the input did not describe a drawing in the plane and a
NonSphericalError / FaceNotSimpleError is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .drawing import CrossingId, Edge, GoodDrawing, edge_key, other_edge
from .errors import FaceNotSimpleError, InternalInconsistencyError, NonSphericalError

VERTEX = "vertex"
CROSSING = "crossing"


@dataclass(frozen=True)
class Face:
    """One face of a plane map.

    ``boundary`` lists the darts of the closed boundary walk; ``nodes``
    holds the tail node of each dart, in step.  ``segments_per_edge``
    counts, per incident edge, the maximal runs of that edge's segments
    along the walk.
    """

    id: int
    boundary: tuple[int, ...]
    nodes: tuple[int, ...]
    incident_edges: frozenset[Edge]
    segments_per_edge: Mapping[Edge, int]
    segment_set: frozenset[int]
    node_set: frozenset[int]

    @property
    def length(self) -> int:
        return len(self.boundary)

    def walk_index_of_dart(self, d: int) -> int:
        return self.boundary.index(d)

    def walk_index_of_node(self, node: int) -> int:
        return self.nodes.index(node)


class PlaneMap:
    """The plane map obtained by planarizing a drawing.

    Immutable after construction.  Node ids: vertices 1..n map to nodes
    0..n-1, crossings follow in sorted crossing-id order.  Segment ids
    number the edges' segments consecutively, edges in sorted order.
    """

    def __init__(self, drawing: GoodDrawing):
        d = drawing
        self.drawing = d
        self.n = d.n

        crossings = d.crossings()
        self.vertex_node = {v: v - 1 for v in range(1, d.n + 1)}
        self.crossing_node = {x: d.n + i for i, x in enumerate(crossings)}
        self.node_labels: tuple[tuple, ...] = tuple(
            [(VERTEX, v) for v in range(1, d.n + 1)] + [(CROSSING, x) for x in crossings]
        )

        seg_edge: list[Edge] = []
        seg_pos: list[int] = []
        edge_segments: dict[Edge, tuple[int, ...]] = {}
        chains: dict[Edge, tuple[int, ...]] = {}
        crossing_pos: dict[tuple[Edge, CrossingId], int] = {}
        for e in d.edges():
            xs = d.crossings_along[e]
            first = len(seg_edge)
            ids = tuple(range(first, first + len(xs) + 1))
            seg_edge.extend([e] * len(ids))
            seg_pos.extend(range(len(ids)))
            edge_segments[e] = ids
            chains[e] = (self.vertex_node[e[0]],) + tuple(self.crossing_node[x] for x in xs) + (self.vertex_node[e[1]],)
            for j, x in enumerate(xs):
                crossing_pos[(e, x)] = j
        self.crossing_pos = crossing_pos
        self.seg_edge = tuple(seg_edge)
        self.seg_pos = tuple(seg_pos)
        self.edge_segments = edge_segments
        self.chains = chains
        self.num_segments = len(seg_edge)

        num_darts = 2 * self.num_segments
        dart_node = [0] * num_darts
        for s in range(self.num_segments):
            e = seg_edge[s]
            i = seg_pos[s]
            dart_node[2 * s] = chains[e][i]
            dart_node[2 * s + 1] = chains[e][i + 1]
        self.dart_node = tuple(dart_node)

        rotations: list[tuple[int, ...]] = [() for _ in self.node_labels]
        for v in range(1, d.n + 1):
            darts = []
            for u in d.rotation[v]:
                e = (v, u) if v < u else (u, v)
                segs = edge_segments[e]
                darts.append(2 * segs[0] if v < u else 2 * segs[-1] + 1)
            rotations[self.vertex_node[v]] = tuple(darts)
        for x in crossings:
            e, f = x
            je = d.crossings_along[e].index(x)
            jf = d.crossings_along[f].index(x)
            e_back = 2 * edge_segments[e][je] + 1
            e_fwd = 2 * edge_segments[e][je + 1]
            f_back = 2 * edge_segments[f][jf] + 1
            f_fwd = 2 * edge_segments[f][jf + 1]
            if d.crossing_sign[x] == 1:
                rotations[self.crossing_node[x]] = (e_back, f_back, e_fwd, f_fwd)
            else:
                rotations[self.crossing_node[x]] = (e_back, f_fwd, e_fwd, f_back)
        self.rotations = tuple(rotations)

        dart_pos: list[tuple[int, int]] = [(-1, -1)] * num_darts
        for node, rot in enumerate(rotations):
            for i, dd in enumerate(rot):
                if dart_pos[dd] != (-1, -1):
                    raise InternalInconsistencyError(f"dart {dd} appears in two rotations")
                dart_pos[dd] = (node, i)
        for dd, pos in enumerate(dart_pos):
            if pos == (-1, -1):
                raise InternalInconsistencyError(f"dart {dd} missing from all rotations")
        self.dart_pos = tuple(dart_pos)

        self.faces: tuple[Face, ...] = self._trace_faces()
        dart_face = [0] * num_darts
        for f in self.faces:
            for dd in f.boundary:
                dart_face[dd] = f.id
        self.dart_face = tuple(dart_face)

        V = len(self.node_labels)
        E = self.num_segments
        F = len(self.faces)
        if V - E + F != 2:
            raise NonSphericalError(f"V - E + F = {V} - {E} + {F} = {V - E + F}, expected 2")
        for f in self.faces:
            if len(set(f.nodes)) != len(f.nodes):
                seen: set[int] = set()
                for nd in f.nodes:
                    if nd in seen:
                        raise FaceNotSimpleError(f"face {f.id} revisits node {self.describe_node(nd)}")
                    seen.add(nd)

    # -- dart helpers ---------------------------------------------------

    @staticmethod
    def twin(d: int) -> int:
        return d ^ 1

    def next_boundary_dart(self, d: int) -> int:
        node, i = self.dart_pos[d ^ 1]
        rot = self.rotations[node]
        return rot[i - 1]

    def dart_head(self, d: int) -> int:
        return self.dart_node[d ^ 1]

    def segment_of_dart(self, d: int) -> int:
        return d // 2

    def vertex_dart(self, v: int, u: int) -> int:
        """The dart leaving vertex v along edge (v, u)."""
        e = (v, u) if v < u else (u, v)
        segs = self.edge_segments[e]
        return 2 * segs[0] if v < u else 2 * segs[-1] + 1

    def describe_node(self, node: int) -> str:
        kind, which = self.node_labels[node]
        return f"{kind} {which}"

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_node)

    @property
    def num_nodes(self) -> int:
        return len(self.node_labels)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    # -- construction ---------------------------------------------------

    def _trace_faces(self) -> tuple[Face, ...]:
        num_darts = 2 * self.num_segments
        seen = [False] * num_darts
        faces: list[Face] = []
        for start in range(num_darts):
            if seen[start]:
                continue
            walk: list[int] = []
            d = start
            while True:
                if seen[d]:
                    raise InternalInconsistencyError("face walk re-entered a visited dart")
                seen[d] = True
                walk.append(d)
                d = self.next_boundary_dart(d)
                if d == start:
                    break
            nodes = tuple(self.dart_node[dd] for dd in walk)
            runs: dict[Edge, int] = {}
            for i, dd in enumerate(walk):
                e = self.seg_edge[dd // 2]
                prev_e = self.seg_edge[walk[i - 1] // 2]
                if e != prev_e:
                    runs[e] = runs.get(e, 0) + 1
            if not runs:
                # every boundary dart lies on one edge: a single cyclic run
                runs[self.seg_edge[walk[0] // 2]] = 1
            faces.append(
                Face(
                    id=len(faces),
                    boundary=tuple(walk),
                    nodes=nodes,
                    incident_edges=frozenset(runs),
                    segments_per_edge=runs,
                    segment_set=frozenset(dd // 2 for dd in walk),
                    node_set=frozenset(nodes),
                )
            )
        return tuple(faces)


def build_plane_map(d: GoodDrawing) -> PlaneMap:
    """Planarize a drawing.  The input is expected to pass validate_good;
    face counts violating V - E + F = 2 raise NonSphericalError and a
    boundary walk revisiting a node raises FaceNotSimpleError."""
    return PlaneMap(d)


def trace_faces(m: PlaneMap) -> tuple[Face, ...]:
    return m.faces


@dataclass(frozen=True)
class DualGraph:
    """Face adjacency of a plane map: one dual edge per segment."""

    num_faces: int
    edges: tuple[tuple[int, int, int], ...]  # (face, face, segment)

    def neighbors(self, f: int) -> Iterator[int]:
        for a, b, _ in self.edges:
            if a == f:
                yield b
            elif b == f:
                yield a


def dual_graph(m: PlaneMap) -> DualGraph:
    edges = tuple((m.dart_face[2 * s], m.dart_face[2 * s + 1], s) for s in range(m.num_segments))
    dual = DualGraph(num_faces=m.num_faces, edges=edges)
    if m.num_faces:
        seen = {0}
        stack = [0]
        adj: dict[int, list[int]] = {}
        for a, b, _ in edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        while stack:
            f = stack.pop()
            for g in adj.get(f, ()):
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        if len(seen) != m.num_faces:
            raise InternalInconsistencyError("dual graph of a plane map must be connected")
    return dual


def restrict_delete_vertex(d: GoodDrawing, v: int) -> GoodDrawing:
    """The drawing induced on the other n - 1 vertices after deleting v.

    Surviving vertices are relabeled monotonically (u > v becomes u - 1),
    which preserves every edge's traversal direction and the lexicographic
    order of edge pairs, so crossing orders and signs carry over unchanged.
    """
    if d.n < 4:
        raise ValueError("deleting a vertex needs n >= 4")
    if not 1 <= v <= d.n:
        raise KeyError(v)

    def mv(u: int) -> int:
        return u - 1 if u > v else u

    def me(e: Edge) -> Edge:
        return (mv(e[0]), mv(e[1]))

    rotation = {mv(u): tuple(mv(w) for w in seq if w != v) for u, seq in d.rotation.items() if u != v}
    along: dict[Edge, tuple[CrossingId, ...]] = {}
    signs: dict[CrossingId, int] = {}
    for e, xs in d.crossings_along.items():
        if v in e:
            continue
        kept = tuple(x for x in xs if v not in x[0] and v not in x[1])
        along[me(e)] = tuple((me(x[0]), me(x[1])) for x in kept)
    for x, s in d.crossing_sign.items():
        if v in x[0] or v in x[1]:
            continue
        signs[(me(x[0]), me(x[1]))] = s
    return GoodDrawing(n=d.n - 1, rotation=rotation, crossings_along=along, crossing_sign=signs)


def map_to_json(m: PlaneMap) -> dict:
    """Debug export of the full map structure.  Not an input format."""
    return {
        "n": m.n,
        "nodes": [{"id": i, "kind": kind, "ref": which if kind == VERTEX else [list(which[0]), list(which[1])]}
                  for i, (kind, which) in enumerate(m.node_labels)],
        "segments": [
            {"id": s, "edge": edge_key(m.seg_edge[s]), "index": m.seg_pos[s],
             "ends": [m.dart_node[2 * s], m.dart_node[2 * s + 1]]}
            for s in range(m.num_segments)
        ],
        "rotations": [list(rot) for rot in m.rotations],
        "faces": [
            {"id": f.id, "boundary": list(f.boundary), "nodes": list(f.nodes),
             "edges": sorted(edge_key(e) for e in f.incident_edges)}
            for f in m.faces
        ],
    }
