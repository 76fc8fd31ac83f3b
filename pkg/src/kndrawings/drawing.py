"""Combinatorial representation of simple drawings of the complete graph.

A drawing of K_n is stored without coordinates: a cyclic rotation of
neighbors at every vertex, an ordered list of crossings along every edge,
and a local orientation sign at every crossing.  Any two edges cross at
most once and adjacent edges never cross, so a crossing is identified by
its unordered pair of edges.

Conventions, used consistently everywhere:

* An edge is the pair (a, b) with a < b.  A crossing id is the pair of its
  two edges, ordered lexicographically.
* ``crossings_along[e]`` lists e's crossings in the order they occur when
  traversing e from its smaller endpoint.
* ``crossing_sign[x]`` for x = (e, f) is +1 when the counterclockwise cyclic
  order of the four edge ends around the crossing point is (e toward its
  smaller endpoint, f toward its smaller endpoint, e toward its larger
  endpoint, f toward its larger endpoint), and -1 for the reverse
  interleaving.  These are the only two possibilities.
* Rotations are counterclockwise and stored starting at the smallest
  neighbor id, so structural equality of drawings is plain equality.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ParseError, StructureError
from .geometry import PointConfiguration, pairwise_crossings

Edge = tuple[int, int]
CrossingId = tuple[Edge, Edge]


def edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"degenerate edge ({a}, {b})")
    return (a, b) if a < b else (b, a)


def crossing_id(e: Edge, f: Edge) -> CrossingId:
    if e == f:
        raise ValueError(f"crossing of an edge with itself: {e}")
    return (e, f) if e < f else (f, e)


def other_edge(x: CrossingId, e: Edge) -> Edge:
    if x[0] == e:
        return x[1]
    if x[1] == e:
        return x[0]
    raise KeyError(f"{e} not part of crossing {x}")


def share_vertex(e: Edge, f: Edge) -> bool:
    return bool(set(e) & set(f))


def all_edges(n: int) -> list[Edge]:
    return [(a, b) for a, b in combinations(range(1, n + 1), 2)]


def edge_key(e: Edge) -> str:
    return f"{e[0]}-{e[1]}"


def normalize_cycle(seq: Sequence) -> tuple:
    """Rotate a cyclic sequence to start at its smallest element."""
    if not seq:
        return ()
    i = min(range(len(seq)), key=lambda k: seq[k])
    return tuple(seq[i:]) + tuple(seq[:i])


@dataclass(frozen=True)
class GoodDrawing:
    """A simple drawing of K_n, up to sphere homeomorphism.

    ``rotation`` maps each vertex to the counterclockwise cyclic order of
    its neighbors.  Construction canonicalizes the representation (tuples,
    sorted crossing pairs, rotations starting at the smallest neighbor,
    every edge present as a key) but performs no semantic validation; use
    :func:`validate_good` for that.
    """

    n: int
    rotation: Mapping[int, tuple[int, ...]]
    crossings_along: Mapping[Edge, tuple[CrossingId, ...]]
    crossing_sign: Mapping[CrossingId, int]

    def __post_init__(self):
        rot = {int(v): normalize_cycle(tuple(int(u) for u in seq)) for v, seq in self.rotation.items()}
        object.__setattr__(self, "rotation", rot)

        def canon_edge(e) -> Edge:
            a, b = e
            a, b = int(a), int(b)
            return (a, b) if a <= b else (b, a)

        def canon_crossing(x) -> CrossingId:
            e, f = canon_edge(x[0]), canon_edge(x[1])
            return (e, f) if e <= f else (f, e)

        along: dict[Edge, tuple[CrossingId, ...]] = {}
        for e, xs in self.crossings_along.items():
            along[canon_edge(e)] = tuple(canon_crossing(x) for x in xs)
        if self.n >= 2:
            for e in all_edges(self.n):
                along.setdefault(e, ())
        object.__setattr__(self, "crossings_along", along)
        signs = {canon_crossing(x): int(s) for x, s in self.crossing_sign.items()}
        object.__setattr__(self, "crossing_sign", signs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GoodDrawing):
            return NotImplemented
        return (
            self.n == other.n
            and self.rotation == other.rotation
            and self.crossings_along == other.crossings_along
            and self.crossing_sign == other.crossing_sign
        )

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.rotation.items()))))

    def edges(self) -> list[Edge]:
        return all_edges(self.n)

    def crossings(self) -> list[CrossingId]:
        found = {x for xs in self.crossings_along.values() for x in xs}
        return sorted(found)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings())

    def crossings_from(self, e: Edge, v: int) -> tuple[CrossingId, ...]:
        """Crossings along e in the order seen when walking from endpoint v."""
        if v not in e:
            raise KeyError(f"{v} is not an endpoint of {e}")
        xs = self.crossings_along[e]
        return xs if v == e[0] else tuple(reversed(xs))


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    ids: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}


def _check_structure(d: GoodDrawing) -> None:
    if not isinstance(d.n, int) or d.n < 3:
        raise StructureError(f"n must be an integer >= 3, got {d.n!r}")
    vset = set(range(1, d.n + 1))
    if set(d.rotation) != vset:
        raise StructureError(f"rotation keys must be exactly 1..{d.n}")
    for v, seq in d.rotation.items():
        for u in seq:
            if u not in vset:
                raise StructureError(f"rotation[{v}] mentions out-of-range vertex {u}")
    for e, xs in d.crossings_along.items():
        for a in e:
            if a not in vset:
                raise StructureError(f"edge {e} has out-of-range vertex {a}")
        if e[0] >= e[1]:
            raise StructureError(f"degenerate edge {e}")
        for x in xs:
            for g in x:
                for a in g:
                    if a not in vset:
                        raise StructureError(f"crossing {x} has out-of-range vertex {a}")
                if g[0] >= g[1]:
                    raise StructureError(f"crossing {x} has degenerate edge {g}")
    for x in d.crossing_sign:
        for g in x:
            for a in g:
                if a not in vset:
                    raise StructureError(f"sign entry {x} has out-of-range vertex {a}")


def validate_good(d: GoodDrawing) -> ValidationReport:
    """Check all invariants of a simple drawing.

    Local rules first (rotations complete, crossing lists symmetric and
    repeat-free, vertex-disjoint crossing pairs, signs total); when those
    hold, the drawing is planarized and the face structure must satisfy
    V - E + F = 2 with node-simple face boundaries.  Malformed ids raise
    StructureError instead of being reported.
    """
    _check_structure(d)
    violations: list[Violation] = []

    for v in range(1, d.n + 1):
        expected = set(range(1, d.n + 1)) - {v}
        seq = d.rotation[v]
        if len(seq) != len(expected) or set(seq) != expected:
            violations.append(
                Violation("rotation-incomplete", f"rotation of {v} is not a cyclic order of its {d.n - 1} neighbors", (v,))
            )

    listed: dict[CrossingId, list[Edge]] = {}
    for e in d.edges():
        xs = d.crossings_along[e]
        if len(set(xs)) != len(xs):
            violations.append(Violation("crossing-repeated", f"edge {e} lists a crossing twice", (e,)))
        for x in xs:
            listed.setdefault(x, []).append(e)

    for x, hosts in sorted(listed.items()):
        e, f = x
        if e == f or share_vertex(e, f):
            violations.append(Violation("adjacent-edges-cross", f"edges {e} and {f} share a vertex but cross", x))
            continue
        if sorted(set(hosts)) != sorted(x):
            violations.append(
                Violation("crossing-list-asymmetry", f"crossing {x} must appear in the lists of exactly {e} and {f}", x)
            )
        if x not in d.crossing_sign:
            violations.append(Violation("sign-missing", f"crossing {x} has no sign", x))

    for x, s in sorted(d.crossing_sign.items()):
        if s not in (-1, 1):
            violations.append(Violation("sign-invalid", f"sign of {x} must be +1 or -1, got {s}", x))
        if x not in listed:
            violations.append(Violation("sign-orphan", f"sign given for unlisted crossing {x}", x))

    if not violations:
        from .errors import FaceNotSimpleError, NonSphericalError
        from .planemap import build_plane_map

        try:
            build_plane_map(d)
        except NonSphericalError as exc:
            violations.append(Violation("non-spherical", str(exc)))
        except FaceNotSimpleError as exc:
            violations.append(Violation("face-not-simple", str(exc)))

    return ValidationReport(ok=not violations, violations=tuple(violations))


def _cross_sign(p, q) -> int:
    det = p[0] * q[1] - p[1] * q[0]
    return (det > 0) - (det < 0)


def from_geometric(cfg: PointConfiguration) -> GoodDrawing:
    """Build the combinatorial drawing induced by straight-line segments.

    Rotations come from exact angular sorting around each vertex, crossing
    orders from exact parameter comparison along each edge, and signs from
    the orientation of the two edge direction vectors.  Raises
    DegeneracyError if the configuration is not in general position.
    """
    from .errors import DegeneracyError

    n = cfg.n
    rotation: dict[int, tuple[int, ...]] = {}
    for v in range(1, n + 1):
        pv = cfg.point(v)

        def half(u: int) -> int:
            pu = cfg.point(u)
            dx, dy = pu.x - pv.x, pu.y - pv.y
            return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

        def cmp(u1: int, u2: int) -> int:
            h1, h2 = half(u1), half(u2)
            if h1 != h2:
                return -1 if h1 < h2 else 1
            p1, p2 = cfg.point(u1), cfg.point(u2)
            s = _cross_sign((p1.x - pv.x, p1.y - pv.y), (p2.x - pv.x, p2.y - pv.y))
            if s == 0:
                raise DegeneracyError("collinear triple", (v, u1, u2))
            return -s

        rotation[v] = tuple(sorted((u for u in range(1, n + 1) if u != v), key=functools.cmp_to_key(cmp)))

    points = pairwise_crossings(cfg)
    along: dict[Edge, tuple[CrossingId, ...]] = {}
    per_edge: dict[Edge, list[tuple]] = {}
    for (e, f), p in points.items():
        per_edge.setdefault(e, []).append((p, (e, f)))
        per_edge.setdefault(f, []).append((p, (e, f)))
    for e, items in per_edge.items():
        a, b = cfg.point(e[0]), cfg.point(e[1])
        items.sort(key=lambda it: (it[0].x - a.x) * (b.x - a.x) + (it[0].y - a.y) * (b.y - a.y))
        along[e] = tuple(x for _, x in items)

    signs: dict[CrossingId, int] = {}
    for e, f in points:
        ve = (cfg.point(e[1]).x - cfg.point(e[0]).x, cfg.point(e[1]).y - cfg.point(e[0]).y)
        vf = (cfg.point(f[1]).x - cfg.point(f[0]).x, cfg.point(f[1]).y - cfg.point(f[0]).y)
        signs[(e, f)] = _cross_sign(ve, vf)

    return GoodDrawing(n=n, rotation=rotation, crossings_along=along, crossing_sign=signs)


def relabel(d: GoodDrawing, perm: Mapping[int, int]) -> GoodDrawing:
    """Apply a vertex relabeling.

    Crossing lists are re-ordered and signs re-derived so that the result
    describes the same drawing under the new labels: reversing the traversal
    direction of an edge flips its list and toggles the sign of each of its
    crossings, and so does swapping the lexicographic order of a crossing's
    edge pair.
    """
    if sorted(perm) != list(range(1, d.n + 1)) or sorted(perm.values()) != list(range(1, d.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")

    def map_edge(e: Edge) -> tuple[Edge, bool]:
        a, b = perm[e[0]], perm[e[1]]
        return ((a, b), False) if a < b else ((b, a), True)

    rotation = {perm[v]: tuple(perm[u] for u in seq) for v, seq in d.rotation.items()}

    def map_crossing(x: CrossingId) -> tuple[CrossingId, int]:
        (e2, fe), (f2, ff) = map_edge(x[0]), map_edge(x[1])
        swapped = f2 < e2
        flips = int(fe) + int(ff) + int(swapped)
        return crossing_id(e2, f2), (-1) ** flips

    along: dict[Edge, tuple[CrossingId, ...]] = {}
    for e, xs in d.crossings_along.items():
        e2, flipped = map_edge(e)
        mapped = tuple(map_crossing(x)[0] for x in xs)
        along[e2] = tuple(reversed(mapped)) if flipped else mapped
    signs = {}
    for x, s in d.crossing_sign.items():
        x2, factor = map_crossing(x)
        signs[x2] = s * factor
    return GoodDrawing(n=d.n, rotation=rotation, crossings_along=along, crossing_sign=signs)


def mirror(d: GoodDrawing) -> GoodDrawing:
    """The mirror image: all rotations reversed, all crossing signs flipped."""
    rotation = {v: tuple(reversed(seq)) for v, seq in d.rotation.items()}
    signs = {x: -s for x, s in d.crossing_sign.items()}
    return GoodDrawing(n=d.n, rotation=rotation, crossings_along=dict(d.crossings_along), crossing_sign=signs)


def drawing_to_json(d: GoodDrawing) -> dict:
    crossings = d.crossings()
    index = {x: i for i, x in enumerate(crossings)}
    order = {}
    for e in d.edges():
        xs = d.crossings_along[e]
        if xs:
            order[edge_key(e)] = [index[x] for x in xs]
    return {
        "n": d.n,
        "rotation": {str(v): list(d.rotation[v]) for v in range(1, d.n + 1)},
        "crossings": [{"edges": [list(x[0]), list(x[1])], "sign": d.crossing_sign.get(x, 0)} for x in crossings],
        "order": order,
    }


def encode_drawing(d: GoodDrawing) -> bytes:
    return (json.dumps(drawing_to_json(d), indent=2) + "\n").encode("utf-8")


def _parse_vertex(obj, where: str, n: int) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool) or not 1 <= obj <= n:
        raise ParseError(f"expected a vertex id in 1..{n}, got {obj!r}", where)
    return obj


def _parse_edge(obj, where: str, n: int) -> Edge:
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError("expected an edge [a, b]", where)
    a = _parse_vertex(obj[0], where, n)
    b = _parse_vertex(obj[1], where, n)
    if a == b:
        raise ParseError(f"degenerate edge [{a}, {b}]", where)
    return edge(a, b)


def drawing_from_json(obj: object) -> GoodDrawing:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", "drawing")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ParseError("missing or invalid n", "drawing")

    raw_rot = obj.get("rotation")
    if not isinstance(raw_rot, dict):
        raise ParseError("missing rotation table", "drawing")
    rotation: dict[int, tuple[int, ...]] = {}
    for key, seq in raw_rot.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise ParseError(f"bad vertex key {key!r}", "rotation") from exc
        if not 1 <= v <= n:
            raise ParseError(f"vertex key {v} out of range", "rotation")
        if not isinstance(seq, list):
            raise ParseError("expected a list of neighbors", f"rotation[{key}]")
        rotation[v] = tuple(_parse_vertex(u, f"rotation[{key}]", n) for u in seq)
    if set(rotation) != set(range(1, n + 1)):
        raise ParseError("rotation table must cover every vertex", "rotation")

    raw_cross = obj.get("crossings")
    if not isinstance(raw_cross, list):
        raise ParseError("missing crossings list", "drawing")
    crossings: list[CrossingId] = []
    signs: dict[CrossingId, int] = {}
    for i, item in enumerate(raw_cross):
        where = f"crossings[{i}]"
        if not isinstance(item, dict):
            raise ParseError("expected an object", where)
        edges_raw = item.get("edges")
        if not isinstance(edges_raw, list) or len(edges_raw) != 2:
            raise ParseError("expected edges [[a,b],[c,d]]", where)
        e = _parse_edge(edges_raw[0], where, n)
        f = _parse_edge(edges_raw[1], where, n)
        if "sign" not in item:
            raise ParseError("missing-sign", where)
        s = item["sign"]
        if s not in (-1, 1) or isinstance(s, bool):
            raise ParseError(f"sign must be 1 or -1, got {s!r}", where)
        x = crossing_id(e, f) if e != f else (e, f)
        if x in signs:
            raise ParseError(f"duplicate crossing {x}", where)
        crossings.append(x)
        signs[x] = s

    raw_order = obj.get("order")
    if not isinstance(raw_order, dict):
        raise ParseError("missing order table", "drawing")
    along: dict[Edge, tuple[CrossingId, ...]] = {}
    for key, seq in raw_order.items():
        where = f"order[{key}]"
        parts = key.split("-")
        if len(parts) != 2:
            raise ParseError(f"bad edge key {key!r}", "order")
        try:
            e = edge(_parse_vertex(int(parts[0]), where, n), _parse_vertex(int(parts[1]), where, n))
        except ValueError as exc:
            raise ParseError(f"bad edge key {key!r}", "order") from exc
        if not isinstance(seq, list):
            raise ParseError("expected a list of crossing indices", where)
        xs = []
        for idx in seq:
            if not isinstance(idx, int) or isinstance(idx, bool) or not 0 <= idx < len(crossings):
                raise ParseError(f"crossing index {idx!r} out of range", where)
            xs.append(crossings[idx])
        along[e] = tuple(xs)

    return GoodDrawing(n=n, rotation=rotation, crossings_along=along, crossing_sign=signs)


def decode_drawing(data: bytes | str) -> GoodDrawing:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}", "drawing") from exc
    return drawing_from_json(obj)
