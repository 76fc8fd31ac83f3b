"""Structural checks on planarized drawings.

Each check verifies one universally true statement about simple drawings of
K_n and returns a TheoremReport: pass/fail plus concrete witnesses when a
statement fails.  On any drawing that passes validation these checks hold;
a witness therefore points at a defect in the data or in this package, and
the checks exist to make that mechanically falsifiable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping

from .drawing import CrossingId, Edge, GoodDrawing, edge, other_edge
from .errors import InternalInconsistencyError
from .planemap import (
    CROSSING,
    VERTEX,
    Face,
    PlaneMap,
    build_plane_map,
    restrict_delete_vertex,
)
from .triangles import SidePartition, Triangle, all_side_partitions


@dataclass(frozen=True)
class Witness:
    description: str
    face: int | None = None
    ids: tuple = ()

    def to_json(self) -> dict:
        return {"face": self.face, "ids": _jsonable(self.ids), "description": self.description}


def _jsonable(obj):
    if isinstance(obj, tuple):
        return [_jsonable(x) for x in obj]
    return obj


@dataclass
class TheoremReport:
    theorem: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    counts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "pass": self.passed,
            "witnesses": [w.to_json() for w in self.witnesses],
            "counts": {k: self.counts[k] for k in sorted(self.counts)},
        }


def standard_counts(m: PlaneMap) -> dict:
    return {"faces": m.num_faces, "crossings": m.crossing_count, "triangles": comb(m.n, 3)}


# -- edge/face incidence ----------------------------------------------------
#
# The intersection of a closed edge with a face boundary is described by
# item indices along the edge: an edge with k crossings has nodes at even
# indices 0, 2, ..., 2k+2 (endpoints and crossings in order from the smaller
# endpoint) and segments at odd indices in between.  A subset of items is
# connected as a point set iff the indices form one contiguous interval.


@dataclass(frozen=True)
class EdgeTrace:
    """Nodes and segments along one edge, from its smaller endpoint."""

    edge: Edge
    nodes: tuple[int, ...]
    segments: tuple[int, ...]

    @property
    def last_item(self) -> int:
        return 2 * len(self.segments)


def edge_trace(m: PlaneMap, e: Edge) -> EdgeTrace:
    return EdgeTrace(edge=e, nodes=m.chains[e], segments=m.edge_segments[e])


def items_on_face(m: PlaneMap, e: Edge, face: Face) -> tuple[int, ...]:
    """Sorted item indices of edge e lying on the face's boundary walk."""
    tr = edge_trace(m, e)
    items = set()
    for j, nd in enumerate(tr.nodes):
        if nd in face.node_set:
            items.add(2 * j)
    for i, s in enumerate(tr.segments):
        if s in face.segment_set:
            items.add(2 * i + 1)
    return tuple(sorted(items))


def _connected_or_two_ends(items: tuple[int, ...], last: int) -> bool:
    if not items:
        return True
    if items[-1] - items[0] == len(items) - 1:
        return True
    return items == (0, last)


def _face_edge_items(m: PlaneMap, face: Face) -> dict[Edge, set[int]]:
    """Item indices per edge on this face's boundary, built from the walk."""
    d = m.drawing
    items: dict[Edge, set[int]] = {}
    for dd in face.boundary:
        s = dd // 2
        items.setdefault(m.seg_edge[s], set()).add(2 * m.seg_pos[s] + 1)
    for nd in face.node_set:
        kind, which = m.node_labels[nd]
        if kind == VERTEX:
            v = which
            for u in range(1, m.n + 1):
                if u == v:
                    continue
                e = (v, u) if v < u else (u, v)
                idx = 0 if v == e[0] else 2 * len(d.crossings_along[e]) + 2
                items.setdefault(e, set()).add(idx)
        else:
            for e in which:
                j = m.crossing_pos[(e, which)]
                items.setdefault(e, set()).add(2 * (j + 1))
    return items


def check_theorem1(m: PlaneMap) -> TheoremReport:
    """Every closed edge meets every face boundary in a connected set, or in
    exactly the edge's two endpoint vertices."""
    witnesses = []
    d = m.drawing
    for face in m.faces:
        for e, found in sorted(_face_edge_items(m, face).items()):
            items = tuple(sorted(found))
            last = 2 * len(d.crossings_along[e]) + 2
            if not _connected_or_two_ends(items, last):
                witnesses.append(
                    Witness(
                        f"edge {e} meets the boundary of face {face.id} in items {list(items)} "
                        f"of 0..{last}: neither connected nor exactly both endpoints",
                        face=face.id,
                        ids=(e,),
                    )
                )
    return TheoremReport("t1", not witnesses, tuple(witnesses), standard_counts(m))


def check_theorem2(m: PlaneMap, partitions: Mapping[Triangle, SidePartition] | None = None) -> TheoremReport:
    """Every face is exactly the intersection, over all vertex triangles, of
    the triangle side containing it."""
    if partitions is None:
        partitions = all_side_partitions(m)
    full = (1 << m.num_faces) - 1
    table = []
    for t in sorted(partitions, key=lambda t: t.vertices):
        sp = partitions[t]
        mask_a = 0
        for f in sp.side_a:
            mask_a |= 1 << f
        table.append((sp, mask_a, full ^ mask_a))
    witnesses = []
    for face in m.faces:
        target = 1 << face.id
        inter = full
        for sp, mask_a, mask_b in table:
            inter &= mask_a if face.id in sp.side_a else mask_b
            if inter == target:
                break
        if inter != target:
            extras = [g for g in range(m.num_faces) if g != face.id and (inter >> g) & 1]
            witnesses.append(
                Witness(
                    f"intersection of the sides containing face {face.id} also contains faces {extras}",
                    face=face.id,
                    ids=tuple(extras),
                )
            )
    report = TheoremReport("t2", not witnesses, tuple(witnesses), standard_counts(m))
    report.counts["triangles"] = len(table)
    return report


def check_theorem3(m: PlaneMap) -> TheoremReport:
    """At most two open edges incident with any one vertex meet any single
    face boundary.  Open means endpoints excluded, so an edge counts at a
    face only through an interior segment or crossing point on the walk."""
    witnesses = []
    for face in m.faces:
        open_edges: set[Edge] = set()
        for dd in face.boundary:
            open_edges.add(m.seg_edge[dd // 2])
        for nd in face.node_set:
            kind, which = m.node_labels[nd]
            if kind == CROSSING:
                open_edges.update(which)
        per_vertex: dict[int, list[Edge]] = {}
        for e in open_edges:
            per_vertex.setdefault(e[0], []).append(e)
            per_vertex.setdefault(e[1], []).append(e)
        for v, es in sorted(per_vertex.items()):
            if len(es) > 2:
                witnesses.append(
                    Witness(
                        f"{len(es)} open edges at vertex {v} meet the boundary of face {face.id}: {sorted(es)}",
                        face=face.id,
                        ids=(v,) + tuple(sorted(es)),
                    )
                )
    return TheoremReport("t3", not witnesses, tuple(witnesses), standard_counts(m))


def check_segment_bound(m: PlaneMap) -> TheoremReport:
    """No face boundary contains more than n maximal edge-segment runs."""
    witnesses = []
    for face in m.faces:
        total = sum(face.segments_per_edge.values())
        if total > m.n:
            witnesses.append(
                Witness(
                    f"boundary of face {face.id} splits into {total} edge-segment runs, more than n = {m.n}",
                    face=face.id,
                    ids=(total,),
                )
            )
    return TheoremReport("segbound", not witnesses, tuple(witnesses), standard_counts(m))


def check_natural_properties(m: PlaneMap) -> TheoremReport:
    """Check the two defining features of a natural drawing: the crossing
    count is C(n, 4), and some face is bounded by a spanning cycle of n
    uncrossed edges whose chords each meet that face's closure in exactly
    their two endpoints."""
    n = m.n
    witnesses = []
    expected = comb(n, 4)
    if m.crossing_count != expected:
        witnesses.append(
            Witness(
                f"{m.crossing_count} crossings, a drawing of this kind has C({n},4) = {expected}",
                ids=(m.crossing_count, expected),
            )
        )

    candidates = [
        f
        for f in m.faces
        if f.length == n and all(m.node_labels[nd][0] == VERTEX for nd in f.nodes)
    ]
    cycle_ok = False
    chord_witnesses: list[Witness] = []
    for f in candidates:
        cycle_edges = set(f.incident_edges)
        bad = []
        items = _face_edge_items(m, f)
        for e in m.drawing.edges():
            if e in cycle_edges:
                continue
            got = tuple(sorted(items.get(e, ())))
            last = 2 * len(m.drawing.crossings_along[e]) + 2
            if got != (0, last):
                bad.append(
                    Witness(
                        f"chord {e} meets the closure of face {f.id} in items {list(got)}, "
                        f"expected exactly its endpoints (0, {last})",
                        face=f.id,
                        ids=(e,),
                    )
                )
        if not bad:
            cycle_ok = True
            break
        chord_witnesses.extend(bad)
    if not candidates:
        witnesses.append(Witness("no face is bounded by a spanning cycle of uncrossed edges"))
    elif not cycle_ok:
        witnesses.extend(chord_witnesses)

    passed = not witnesses
    return TheoremReport("natural", passed, tuple(witnesses), standard_counts(m))


# -- vertex deletion --------------------------------------------------------


@dataclass(frozen=True)
class EdgeVisit:
    """One maximal piece of an edge at the deleted vertex lying inside one
    face of the reduced drawing.

    Positions are (walk index, rank) pairs on the face's boundary walk:
    rank 0 marks the node at that walk index, rank r >= 1 the r-th deleted
    crossing in the interior of that walk step's segment.  ``entry`` is None
    only for the piece starting at the deleted vertex itself.
    """

    edge: Edge
    piece: int
    entry_ref: tuple | None
    entry: tuple[int, int] | None
    exit_ref: tuple
    exit: tuple[int, int]


@dataclass(frozen=True)
class VertexDeletionAnalysis:
    """How the star of a deleted vertex meets one face of what remains.

    ``home`` marks the face the deleted vertex sits in.  ``visits`` holds
    one record per edge piece contained in this face; the edges occurring
    there form the set X of the face."""

    vertex: int
    face: int
    home: bool
    visits: tuple[EdgeVisit, ...]

    def edges(self) -> list[Edge]:
        return sorted({vis.edge for vis in self.visits})


def analyze_vertex_deletion(d: GoodDrawing, v: int) -> tuple[VertexDeletionAnalysis, ...]:
    """Trace every edge at v through the plane map of the drawing minus v.

    Pieces of an edge between consecutive crossings each lie in one face of
    the reduced map; face residence is computed combinatorially, starting
    from the far endpoint (located by its rotation wedge) and flipping
    across one segment at each crossing back toward v.  Needs n >= 4 and a
    drawing that passes validation.
    """
    sub = restrict_delete_vertex(d, v)
    m2 = build_plane_map(sub)

    def mv(u: int) -> int:
        return u - 1 if u > v else u

    def me(e: Edge) -> Edge:
        a, b = mv(e[0]), mv(e[1])
        return (a, b) if a < b else (b, a)

    def survives(x: CrossingId) -> bool:
        return v not in x[0] and v not in x[1]

    def locate(g: Edge, x: CrossingId) -> tuple[int, tuple[CrossingId, ...]]:
        """Segment of the reduced map holding deleted crossing x of edge g,
        with the deleted crossings sharing that segment in traversal order
        from g's smaller endpoint."""
        xs = d.crossings_along[g]
        j = xs.index(x)
        before = sum(1 for y in xs[:j] if survives(y))
        seg = m2.edge_segments[me(g)][before]
        gap = []
        surv = 0
        for y in xs:
            if survives(y):
                surv += 1
                if surv > before:
                    break
            elif surv == before:
                gap.append(y)
        return seg, tuple(gap)

    def crossing_position(face: Face, g: Edge, x: CrossingId) -> tuple[int, int]:
        seg, gap = locate(g, x)
        if m2.dart_face[2 * seg] == face.id:
            dd = 2 * seg
        elif m2.dart_face[2 * seg + 1] == face.id:
            dd = 2 * seg + 1
        else:
            raise InternalInconsistencyError(
                f"crossing {x} located on segment {seg} which does not border face {face.id}"
            )
        j = face.walk_index_of_dart(dd)
        r = gap.index(x) + 1
        if dd & 1:
            r = len(gap) + 1 - r
        return (j, r)

    def vertex_position(face: Face, w: int) -> tuple[int, int]:
        node = m2.vertex_node[mv(w)]
        if node not in face.node_set:
            raise InternalInconsistencyError(f"vertex {w} not on the boundary of face {face.id}")
        return (face.walk_index_of_node(node), 0)

    by_face: dict[int, list[EdgeVisit]] = {fo.id: [] for fo in m2.faces}
    home: int | None = None
    for w in range(1, d.n + 1):
        if w == v:
            continue
        e = edge(v, w)
        xs = d.crossings_from(e, v)
        for x in xs:
            # the partner shares no vertex with e, so it survives deletion
            if v in other_edge(x, e):
                raise InternalInconsistencyError(f"edge {e} crosses an adjacent edge at {x}")
        k = len(xs)

        # Face of the piece at w: e leaves w strictly inside the wedge
        # between its rotation neighbors, which is a single corner of the
        # reduced map; the corner after a rotation dart belongs to that
        # dart's face.
        rot = d.rotation[w]
        u_prev = rot[rot.index(v) - 1]
        faces = [0] * (k + 1)
        cur = m2.dart_face[m2.vertex_dart(mv(w), mv(u_prev))]
        faces[k] = cur
        for i in range(k, 0, -1):
            x = xs[i - 1]
            g = other_edge(x, e)
            seg, _ = locate(g, x)
            fa, fb = m2.dart_face[2 * seg], m2.dart_face[2 * seg + 1]
            if cur == fa:
                cur = fb
            elif cur == fb:
                cur = fa
            else:
                raise InternalInconsistencyError(
                    f"piece {i} of edge {e} lies in face {cur}, but its entry crossing "
                    f"{x} is on a segment bordering faces {fa} and {fb}"
                )
            faces[i - 1] = cur

        if home is None:
            home = faces[0]
        elif home != faces[0]:
            raise InternalInconsistencyError(
                f"pieces at vertex {v} disagree about its containing face: {home} vs {faces[0]}"
            )

        for i, fid in enumerate(faces):
            fo = m2.faces[fid]
            if i > 0:
                x = xs[i - 1]
                entry_ref: tuple | None = (CROSSING, x)
                entry = crossing_position(fo, other_edge(x, e), x)
            else:
                entry_ref = None
                entry = None
            if i < k:
                x = xs[i]
                exit_ref: tuple = (CROSSING, x)
                exit_pos = crossing_position(fo, other_edge(x, e), x)
            else:
                exit_ref = (VERTEX, w)
                exit_pos = vertex_position(fo, w)
            by_face[fid].append(
                EdgeVisit(edge=e, piece=i, entry_ref=entry_ref, entry=entry, exit_ref=exit_ref, exit=exit_pos)
            )

    if home is None:
        raise InternalInconsistencyError("no edges at the deleted vertex")
    return tuple(
        VertexDeletionAnalysis(vertex=v, face=fid, home=(fid == home), visits=tuple(by_face[fid]))
        for fid in sorted(by_face)
    )


_NESTED_ORDERS = (("e1", "e2", "f2", "f1"), ("e1", "f1", "f2", "e2"))


def check_vertex_deletion_claims(d: GoodDrawing, m: PlaneMap | None = None) -> TheoremReport:
    """For every vertex v and every face R of the drawing minus v:

    1. each edge at v meets R in at most one component;
    2. when v is outside R's closure, the entry and exit points of any two
       edges of X (the edges meeting R) occur on R's boundary nested, never
       interlaced or sequential;
    3. when v is outside R's closure, X omits at least one edge at v.
    """
    witnesses = []
    for v in range(1, d.n + 1):
        for an in analyze_vertex_deletion(d, v):
            per_edge: dict[Edge, list[EdgeVisit]] = {}
            for vis in an.visits:
                per_edge.setdefault(vis.edge, []).append(vis)
            clean: list[Edge] = []
            for e, vis in sorted(per_edge.items()):
                if len(vis) > 1:
                    witnesses.append(
                        Witness(
                            f"after deleting {v}, edge {e} meets face {an.face} in {len(vis)} components",
                            face=an.face,
                            ids=(v, e),
                        )
                    )
                else:
                    clean.append(e)
            if an.home:
                continue
            X = sorted(per_edge)
            if len(X) >= d.n - 1:
                witnesses.append(
                    Witness(
                        f"after deleting {v}, all {d.n - 1} of its edges meet face {an.face}",
                        face=an.face,
                        ids=(v,) + tuple(X),
                    )
                )
            for e, f in combinations(clean, 2):
                ve, vf = per_edge[e][0], per_edge[f][0]
                if ve.entry is None or vf.entry is None:
                    raise InternalInconsistencyError(
                        f"piece at the deleted vertex {v} recorded in non-home face {an.face}"
                    )
                pts = [(ve.entry, "e1"), (ve.exit, "e2"), (vf.entry, "f1"), (vf.exit, "f2")]
                if len({p for p, _ in pts}) != 4:
                    raise InternalInconsistencyError(
                        f"coincident boundary positions for edges {e}, {f} on face {an.face} after deleting {v}"
                    )
                pts.sort()
                labels = [lab for _, lab in pts]
                k = labels.index("e1")
                cyc = tuple(labels[k:] + labels[:k])
                if cyc not in _NESTED_ORDERS:
                    witnesses.append(
                        Witness(
                            f"after deleting {v}, edges {e} and {f} meet the boundary of face "
                            f"{an.face} in cyclic order {list(cyc)}, not nested",
                            face=an.face,
                            ids=(v, e, f),
                        )
                    )
    if m is None:
        m = build_plane_map(d)
    return TheoremReport("claims", not witnesses, tuple(witnesses), standard_counts(m))
