"""Exact plane geometry over the rationals.

Everything here runs on arbitrary-precision `fractions.Fraction` values:
there is no floating point and no epsilon.  Degenerate inputs (coincident
points, collinear triples, overlapping segments, three segments through a
common point) are detected and reported, never perturbed away.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from itertools import combinations
from random import Random

from .errors import DegeneracyError, ParseError

Rational = Fraction

# Coordinates drawn by the generators live on this integer grid.
COORD_RANGE = 1 << 20

_MAX_ATTEMPTS = 10_000


class Turn(IntEnum):
    """Sign of the signed area of an ordered point triple."""

    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates."""

    x: Rational
    y: Rational

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", Fraction(self.y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def orientation(p: Point, q: Point, r: Point) -> Turn:
    """Orientation of the triple (p, q, r).

    Counterclockwise means r lies strictly to the left of the directed
    line p -> q.
    """
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if det > 0:
        return Turn.COUNTERCLOCKWISE
    if det < 0:
        return Turn.CLOCKWISE
    return Turn.COLLINEAR


class IntersectionKind(Enum):
    NONE = "none"
    INTERIOR_CROSSING = "interior-crossing"
    SHARED_ENDPOINT = "shared-endpoint"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SegmentIntersection:
    """Classified intersection of two closed segments.

    ``point`` is set only for ``INTERIOR_CROSSING``: the unique common
    point, interior to both segments.
    """

    kind: IntersectionKind
    point: Point | None = None


_NONE = SegmentIntersection(IntersectionKind.NONE)
_SHARED = SegmentIntersection(IntersectionKind.SHARED_ENDPOINT)
_DEGENERATE = SegmentIntersection(IntersectionKind.DEGENERATE)


def _dot_from(origin: Point, p: Point, q: Point) -> Fraction:
    return (p.x - origin.x) * (q.x - origin.x) + (p.y - origin.y) * (q.y - origin.y)


def _strictly_between(p: Point, u: Point, v: Point) -> bool:
    # p assumed collinear with u, v; strict interior test by dot product sign
    return _dot_from(p, u, v) < 0


def segment_crossing(a1: Point, a2: Point, b1: Point, b2: Point) -> SegmentIntersection:
    """Classify how closed segments [a1, a2] and [b1, b2] meet.

    NONE: disjoint.  INTERIOR_CROSSING: a single common point interior to
    both, with the point returned.  SHARED_ENDPOINT: the segments meet only
    at a common endpoint.  DEGENERATE: the overlap is a segment, or an
    endpoint of one lies in the interior of the other.
    """
    if a1 == a2 or b1 == b2:
        raise ValueError("zero-length segment")

    shared = {a1, a2} & {b1, b2}
    if len(shared) == 2:
        return _DEGENERATE
    if len(shared) == 1:
        c = next(iter(shared))
        ao = a2 if a1 == c else a1
        bo = b2 if b1 == c else b1
        if orientation(c, ao, bo) is not Turn.COLLINEAR:
            return _SHARED
        # Collinear at a shared endpoint: same ray means the overlap is a
        # segment; opposite rays touch at the endpoint only.
        if _dot_from(c, ao, bo) > 0:
            return _DEGENERATE
        return _SHARED

    d1 = orientation(b1, b2, a1)
    d2 = orientation(b1, b2, a2)
    d3 = orientation(a1, a2, b1)
    d4 = orientation(a1, a2, b2)

    if d1 and d2 and d3 and d4:
        if d1 != d2 and d3 != d4:
            r_x, r_y = a2.x - a1.x, a2.y - a1.y
            s_x, s_y = b2.x - b1.x, b2.y - b1.y
            denom = r_x * s_y - r_y * s_x
            t = ((b1.x - a1.x) * s_y - (b1.y - a1.y) * s_x) / denom
            p = Point(a1.x + t * r_x, a1.y + t * r_y)
            return SegmentIntersection(IntersectionKind.INTERIOR_CROSSING, p)
        return _NONE

    if not (d1 or d2 or d3 or d4):
        # Common support line; overlap iff the closed parameter intervals meet.
        lo = min(_dot_from(a1, a2, b1), _dot_from(a1, a2, b2))
        hi = max(_dot_from(a1, a2, b1), _dot_from(a1, a2, b2))
        span = _dot_from(a1, a2, a2)
        if hi < 0 or lo > span:
            return _NONE
        return _DEGENERATE

    # Exactly one endpoint sits on the other segment's line (no shared
    # endpoints here): degenerate iff it lies strictly inside that segment.
    for p, u, v, d in ((a1, b1, b2, d1), (a2, b1, b2, d2), (b1, a1, a2, d3), (b2, a1, a2, d4)):
        if d is Turn.COLLINEAR and _strictly_between(p, u, v):
            return _DEGENERATE
    return _NONE


@dataclass(frozen=True)
class PointConfiguration:
    """Positions for the vertices 1..n, in general position.

    ``points[i]`` is the location of vertex ``i + 1``.  ``seed`` records the
    generator seed when the configuration was drawn at random.
    """

    n: int
    points: tuple[Point, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("need at least 3 points")
        if len(self.points) != self.n:
            raise ValueError(f"expected {self.n} points, got {len(self.points)}")
        object.__setattr__(self, "points", tuple(self.points))

    def point(self, v: int) -> Point:
        if not 1 <= v <= self.n:
            raise KeyError(v)
        return self.points[v - 1]


def check_general_position(cfg: PointConfiguration) -> None:
    """Raise DegeneracyError unless cfg is in general position.

    Required: all points distinct, no three collinear, no segment between
    two vertices passing through a third, and no three vertex-to-vertex
    segments concurrent at a non-vertex point.
    """
    seen: dict[Point, int] = {}
    for v in range(1, cfg.n + 1):
        p = cfg.point(v)
        if p in seen:
            raise DegeneracyError("coincident points", (seen[p], v))
        seen[p] = v
    for i, j, k in combinations(range(1, cfg.n + 1), 3):
        if orientation(cfg.point(i), cfg.point(j), cfg.point(k)) is Turn.COLLINEAR:
            raise DegeneracyError("collinear triple", (i, j, k))
    pairwise_crossings(cfg)


def pairwise_crossings(cfg: PointConfiguration) -> dict[tuple, Point]:
    """Interior crossing points of all vertex-disjoint segment pairs.

    Keys are ((a, b), (c, d)) with a < b, c < d and (a, b) < (c, d).  Raises
    DegeneracyError on any degenerate pair and on three segments meeting at
    one point.
    """
    out: dict[tuple, Point] = {}
    at_point: dict[Point, tuple] = {}
    verts = range(1, cfg.n + 1)
    for e, f in combinations(combinations(verts, 2), 2):
        if set(e) & set(f):
            continue
        hit = segment_crossing(cfg.point(e[0]), cfg.point(e[1]), cfg.point(f[0]), cfg.point(f[1]))
        if hit.kind is IntersectionKind.DEGENERATE:
            raise DegeneracyError("degenerate segment pair", (e, f))
        if hit.kind is IntersectionKind.INTERIOR_CROSSING:
            assert hit.point is not None
            if hit.point in at_point:
                raise DegeneracyError("concurrent segments", (at_point[hit.point], (e, f)))
            at_point[hit.point] = (e, f)
            out[(e, f)] = hit.point
    return out


def convex_quadruple_count(cfg: PointConfiguration) -> int:
    """Number of 4-subsets of the configuration in convex position.

    Computed purely from triple orientations.  A 4-set in general position
    fails to be convex exactly when one of its four triple orientations
    disagrees with the other three, so convexity is a parity test on the
    counterclockwise count.
    """
    sign: dict[tuple[int, int, int], int] = {}
    for t in combinations(range(1, cfg.n + 1), 3):
        o = orientation(cfg.point(t[0]), cfg.point(t[1]), cfg.point(t[2]))
        if o is Turn.COLLINEAR:
            raise DegeneracyError("collinear triple", t)
        sign[t] = int(o)
    count = 0
    for i, j, k, l in combinations(range(1, cfg.n + 1), 4):
        ccw = sum(1 for t in ((j, k, l), (i, k, l), (i, j, l), (i, j, k)) if sign[t] > 0)
        if ccw % 2 == 0:
            count += 1
    return count


def generate_convex(n: int, seed: int) -> PointConfiguration:
    """Deterministically generate n points in convex position.

    Distinct integer abscissas t_1 < ... < t_n are sampled and placed on the
    parabola (t, t^2); vertex i gets the i-th smallest abscissa, so vertex
    order follows the hull.  Redraws until general position holds (points on
    a parabola are never collinear, but three chords may still meet at one
    point).
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        ts = sorted(rng.sample(range(COORD_RANGE), n))
        cfg = PointConfiguration(n, tuple(Point(t, t * t) for t in ts), seed=seed)
        try:
            check_general_position(cfg)
        except DegeneracyError:
            continue
        return cfg
    raise RuntimeError(f"no valid convex configuration after {_MAX_ATTEMPTS} attempts")


def generate_general(n: int, seed: int) -> PointConfiguration:
    """Deterministically generate n random points in general position.

    Integer coordinates are drawn uniformly from [0, 2^20); the draw is
    repeated until the general-position checks pass.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = Random(seed)
    for _ in range(_MAX_ATTEMPTS):
        pts = tuple(Point(rng.randrange(COORD_RANGE), rng.randrange(COORD_RANGE)) for _ in range(n))
        cfg = PointConfiguration(n, pts, seed=seed)
        try:
            check_general_position(cfg)
        except DegeneracyError:
            continue
        return cfg
    raise RuntimeError(f"no valid configuration after {_MAX_ATTEMPTS} attempts")


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def configuration_to_json(cfg: PointConfiguration) -> dict:
    out: dict = {"n": cfg.n}
    if cfg.seed is not None:
        out["seed"] = cfg.seed
    out["points"] = [[_fraction_str(p.x), _fraction_str(p.y)] for p in cfg.points]
    return out


def configuration_from_json(obj: object) -> PointConfiguration:
    if not isinstance(obj, dict):
        raise ParseError("expected an object", "configuration")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise ParseError("missing or invalid n", "configuration")
    seed = obj.get("seed")
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise ParseError("invalid seed", "configuration")
    raw = obj.get("points")
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"points must be a list of length {n}", "configuration")
    pts = []
    for i, item in enumerate(raw):
        if not isinstance(item, list) or len(item) != 2:
            raise ParseError("expected [x, y]", f"points[{i}]")
        coords = []
        for c in item:
            if not isinstance(c, str):
                raise ParseError("coordinates must be rational strings", f"points[{i}]")
            try:
                coords.append(Fraction(c))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational {c!r}", f"points[{i}]") from exc
        pts.append(Point(coords[0], coords[1]))
    return PointConfiguration(n, tuple(pts), seed=seed)


def encode_configuration(cfg: PointConfiguration) -> bytes:
    return (json.dumps(configuration_to_json(cfg), indent=2) + "\n").encode("utf-8")


def decode_configuration(data: bytes | str) -> PointConfiguration:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}", "configuration") from exc
    return configuration_from_json(obj)
