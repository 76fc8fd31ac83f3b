"""Triangle boundaries and the two sides they cut the sphere into.

The three edges of a vertex triangle form a closed curve in the plane map.
When that curve is node-simple it separates the faces into exactly two
connected regions, computed here by deleting the curve's segments from the
dual graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .drawing import Edge, edge
from .errors import JordanViolationError, TriangleNotSimpleError
from .planemap import DualGraph, PlaneMap, dual_graph


@dataclass(frozen=True)
class Triangle:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError(f"degenerate triangle ({self.a}, {self.b}, {self.c})")
        a, b, c = sorted((self.a, self.b, self.c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def edges(self) -> tuple[Edge, Edge, Edge]:
        return (edge(self.a, self.b), edge(self.a, self.c), edge(self.b, self.c))


def all_triangles(n: int) -> list[Triangle]:
    return [Triangle(*t) for t in combinations(range(1, n + 1), 3)]


def triangle_segments(m: PlaneMap, t: Triangle) -> frozenset[int]:
    """Segment ids of the triangle's three edges, verified to close up into
    a node-simple walk.  Raises TriangleNotSimpleError otherwise (the three
    edges of a simple drawing always do, since adjacent edges never cross
    and the remaining pairwise crossings are excluded on a triangle)."""
    for v in t.vertices:
        if not 1 <= v <= m.n:
            raise KeyError(v)
    ab, ac, bc = t.edges
    # Walk a -> b -> c -> a; interior chain nodes must all be distinct.
    pieces = []
    for e, start in ((ab, t.a), (bc, t.b), (ac, t.c)):
        chain = m.chains[e]
        pieces.append(chain if m.vertex_node[start] == chain[0] else tuple(reversed(chain)))
    walk: list[int] = []
    for piece in pieces:
        walk.extend(piece[:-1])
    if len(set(walk)) != len(walk):
        counts: dict[int, int] = {}
        for nd in walk:
            counts[nd] = counts.get(nd, 0) + 1
        repeated = next(nd for nd, c in counts.items() if c > 1)
        raise TriangleNotSimpleError(
            f"triangle {t.vertices} boundary revisits {m.describe_node(repeated)}"
        )
    segs: set[int] = set()
    for e in t.edges:
        segs.update(m.edge_segments[e])
    return frozenset(segs)


@dataclass(frozen=True)
class SidePartition:
    """The two open regions the triangle's closed boundary curve bounds,
    as disjoint face-id sets.  Normalized so side_a holds the lowest id."""

    triangle: Triangle
    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_containing(self, face_id: int) -> frozenset[int]:
        if face_id in self.side_a:
            return self.side_a
        if face_id in self.side_b:
            return self.side_b
        raise KeyError(f"face {face_id} is on neither side of {self.triangle.vertices}")


def side_partition(m: PlaneMap, t: Triangle, dual: DualGraph | None = None) -> SidePartition:
    """Partition the faces by the triangle's boundary curve.

    Deletes the curve's segments from the dual graph and takes connected
    components; anything other than exactly two raises JordanViolationError.
    """
    cut = triangle_segments(m, t)
    if dual is None:
        dual = dual_graph(m)
    parent = list(range(m.num_faces))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for fa, fb, s in dual.edges:
        if s in cut:
            continue
        ra, rb = find(fa), find(fb)
        if ra != rb:
            parent[ra] = rb

    comps: dict[int, set[int]] = {}
    for f in range(m.num_faces):
        comps.setdefault(find(f), set()).add(f)
    if len(comps) != 2:
        raise JordanViolationError(
            f"triangle {t.vertices} cut the dual into {len(comps)} components, expected 2"
        )
    sides = sorted((frozenset(side) for side in comps.values()), key=min)
    return SidePartition(triangle=t, side_a=sides[0], side_b=sides[1])


def all_side_partitions(m: PlaneMap) -> dict[Triangle, SidePartition]:
    dual = dual_graph(m)
    return {t: side_partition(m, t, dual) for t in all_triangles(m.n)}
