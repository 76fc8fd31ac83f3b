"""Figure rendering for geometric drawings.

Only drawings with point coordinates can be rendered; purely combinatorial
input raises NoGeometryError.  The viewport is computed exactly from the
rational bounding box and padded by 5%; coordinates are converted to float
only at the matplotlib boundary.
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib
from matplotlib.collections import LineCollection
from matplotlib.figure import Figure

from .drawing import GoodDrawing, from_geometric
from .errors import NoGeometryError
from .geometry import Point, PointConfiguration, pairwise_crossings
from .planemap import CROSSING, build_plane_map


def _signed_area2(poly: list[Point]) -> Fraction:
    total = Fraction(0)
    for i, p in enumerate(poly):
        q = poly[i - 1]
        total += q.x * p.y - q.y * p.x
    return total


def drawing_figure(
    cfg: PointConfiguration,
    drawing: GoodDrawing | None = None,
    shade_faces: bool = False,
    figsize: float = 8.0,
) -> tuple[Figure, dict]:
    """Render a straight-line drawing of K_n.

    Vertices are labeled dots, crossings open circle markers.  With
    ``shade_faces`` the bounded faces of the planarization are filled and
    labeled by face id (the unbounded face, recognized by its clockwise
    boundary walk, stays unfilled).  Returns the figure and a summary of
    what was drawn.
    """
    if cfg is None:
        raise NoGeometryError("rendering needs point coordinates")
    if drawing is None:
        drawing = from_geometric(cfg)

    fig = Figure(figsize=(figsize, figsize))
    ax = fig.add_subplot(111)

    crossing_points = pairwise_crossings(cfg)
    shaded = 0
    if shade_faces:
        m = build_plane_map(drawing)
        coords: dict[int, Point] = {}
        for node, (kind, which) in enumerate(m.node_labels):
            coords[node] = crossing_points[which] if kind == CROSSING else cfg.point(which)
        cmap = matplotlib.colormaps["tab20"]
        for face in m.faces:
            poly = [coords[nd] for nd in face.nodes]
            if _signed_area2(poly) <= 0:
                continue
            xs = [float(p.x) for p in poly]
            ys = [float(p.y) for p in poly]
            ax.fill(xs, ys, color=cmap(face.id % 20), alpha=0.3, linewidth=0, zorder=0)
            cx, cy = sum(xs) / len(xs), sum(ys) / len(ys)
            ax.text(cx, cy, str(face.id), fontsize=7, ha="center", va="center", color="0.35", zorder=1)
            shaded += 1

    segments = []
    for a, b in drawing.edges():
        pa, pb = cfg.point(a), cfg.point(b)
        segments.append([(float(pa.x), float(pa.y)), (float(pb.x), float(pb.y))])
    ax.add_collection(LineCollection(segments, colors="0.2", linewidths=1.0, zorder=2))

    if crossing_points:
        xs = [float(p.x) for p in crossing_points.values()]
        ys = [float(p.y) for p in crossing_points.values()]
        ax.scatter(xs, ys, s=28, facecolors="white", edgecolors="crimson", linewidths=1.0, zorder=3)

    vx = [float(cfg.point(v).x) for v in range(1, cfg.n + 1)]
    vy = [float(cfg.point(v).y) for v in range(1, cfg.n + 1)]
    ax.scatter(vx, vy, s=36, color="navy", zorder=4)
    for v in range(1, cfg.n + 1):
        ax.annotate(str(v), (vx[v - 1], vy[v - 1]), textcoords="offset points", xytext=(5, 5), fontsize=9, zorder=5)

    min_x = min(p.x for p in cfg.points)
    max_x = max(p.x for p in cfg.points)
    min_y = min(p.y for p in cfg.points)
    max_y = max(p.y for p in cfg.points)
    pad_x = (max_x - min_x) / 20 or Fraction(1)
    pad_y = (max_y - min_y) / 20 or Fraction(1)
    ax.set_xlim(float(min_x - pad_x), float(max_x + pad_x))
    ax.set_ylim(float(min_y - pad_y), float(max_y + pad_y))
    ax.set_aspect("equal")
    ax.set_axis_off()

    info = {
        "vertices": cfg.n,
        "edges": len(drawing.edges()),
        "crossings": len(crossing_points),
        "shaded_faces": shaded,
    }
    return fig, info


def save_figure(fig: Figure, path: str) -> None:
    with matplotlib.rc_context({"svg.hashsalt": "drawings"}):
        kwargs = {}
        if str(path).lower().endswith(".svg"):
            kwargs["metadata"] = {"Date": None}
        fig.savefig(path, **kwargs)
