"""Deterministic SVG drawings of geodesic and bisector constructions.

Output is plain SVG 1.1 with no external references.  Every coordinate
passes through one fixed 6-decimal formatter and elements are emitted in
a fixed order, so a given scene always produces the same bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Circle, CircleOrLine, Line, as_point
from .disk import bisect_construction
from .errors import DomainError
from .halfplane import geodesic_half, midpoint_half

SVG_PRECISION = 6
CANVAS_WIDTH = 600.0

#: Fixed world-coordinate window for unit-disk scenes.
DISK_VIEW = 1.15

#: Half-plane scenes scale the finite-object bounding box by this factor.
HALF_FIT = 1.2

_STROKES = {
    "boundary": ("#222222", 1.5),
    "construction": ("#1f77b4", 1.2),
    "accent": ("#d62728", 1.2),
}


@dataclass(frozen=True, eq=False)
class SceneCurve:
    """A circle or line to draw, tagged with the operation that made it."""

    curve: CircleOrLine
    label: str
    tag: str
    role: str = "construction"


@dataclass(frozen=True, eq=False)
class ScenePoint:
    position: np.ndarray
    label: str
    tag: str


@dataclass(frozen=True, eq=False)
class SceneArc:
    """Portion of a circle between two world angles, counterclockwise."""

    circle: Circle
    start_angle: float
    end_angle: float
    label: str
    tag: str
    role: str = "accent"


@dataclass(frozen=True, eq=False)
class ConstructionScene:
    """Drawable content for one model; the model boundary is implicit."""

    model: str  # "ball" or "half"
    curves: tuple[SceneCurve, ...] = ()
    points: tuple[ScenePoint, ...] = ()
    arcs: tuple[SceneArc, ...] = ()


# ---------------------------------------------------------------------------
# scene builders
# ---------------------------------------------------------------------------


def _plane_point(p) -> np.ndarray:
    p = as_point(p)
    if p.shape[0] != 2:
        raise DomainError("scenes are drawn in two dimensions")
    return p


def bisect_scene(x, y) -> ConstructionScene:
    """Carrier, bisector and midpoint of a disk pair, ready to render."""
    x, y = _plane_point(x), _plane_point(y)
    built = bisect_construction(x, y)
    return ConstructionScene(
        model="ball",
        curves=(
            SceneCurve(built.carrier, "carrier", "geodesic_disk"),
            SceneCurve(built.bisector, "bisector", "bisector_disk", role="accent"),
        ),
        points=(
            ScenePoint(x, "x", "input"),
            ScenePoint(y, "y", "input"),
            ScenePoint(built.midpoint, "m", "midpoint_disk"),
        ),
    )


def half_midpoint_scene(x, y) -> ConstructionScene:
    """Geodesic carrier and midpoint of a half-plane pair, ready to render."""
    x, y = _plane_point(x), _plane_point(y)
    carrier = geodesic_half(x, y).carrier
    points = (
        ScenePoint(x, "x", "input"),
        ScenePoint(y, "y", "input"),
        ScenePoint(midpoint_half(x, y), "m", "midpoint_half"),
    )
    if isinstance(carrier, Circle):
        # only the half above the axis belongs to the model
        arc = SceneArc(carrier, 0.0, math.pi, "carrier", "geodesic_half", role="construction")
        return ConstructionScene(model="half", arcs=(arc,), points=points)
    return ConstructionScene(
        model="half",
        curves=(SceneCurve(carrier, "carrier", "geodesic_half"),),
        points=points,
    )


def empty_scene(model: str) -> ConstructionScene:
    return ConstructionScene(model=model)


# ---------------------------------------------------------------------------
# viewport and projection
# ---------------------------------------------------------------------------


class _Frame:
    """World-rectangle to pixel-rectangle map with the y axis flipped."""

    def __init__(self, xmin: float, xmax: float, ymin: float, ymax: float):
        self.xmin, self.xmax = xmin, xmax
        self.ymin, self.ymax = ymin, ymax
        self.scale = CANVAS_WIDTH / (xmax - xmin)
        self.height = (ymax - ymin) * self.scale

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        return (x - self.xmin) * self.scale, (self.ymax - y) * self.scale


def _arc_box(arc: SceneArc) -> tuple[list[float], list[float]]:
    """Bounding points of the arc: endpoints plus in-span axis extremes."""
    cx, cy = float(arc.circle.center[0]), float(arc.circle.center[1])
    r = arc.circle.radius
    span = (arc.end_angle - arc.start_angle) % (2.0 * math.pi)
    angles = [arc.start_angle, arc.end_angle]
    for k in range(-4, 5):
        cardinal = 0.5 * math.pi * k
        if (cardinal - arc.start_angle) % (2.0 * math.pi) <= span:
            angles.append(cardinal)
    xs = [cx + r * math.cos(t) for t in angles]
    ys = [cy + r * math.sin(t) for t in angles]
    return xs, ys


def _half_frame(scene: ConstructionScene) -> _Frame:
    xs: list[float] = []
    ys: list[float] = []
    for sc in scene.curves:
        if isinstance(sc.curve, Circle):
            cx, cy = sc.curve.center[0], sc.curve.center[1]
            xs += [cx - sc.curve.radius, cx + sc.curve.radius]
            ys += [cy - sc.curve.radius, cy + sc.curve.radius]
        else:
            xs.append(sc.curve.point[0])
            ys.append(sc.curve.point[1])
    for sa in scene.arcs:
        axs, ays = _arc_box(sa)
        xs += axs
        ys += ays
    for sp in scene.points:
        xs.append(sp.position[0])
        ys.append(sp.position[1])
    if not xs:
        xs, ys = [-2.0, 2.0], [0.0, 2.0]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(min(ys), 0.0), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1.0)
    pad = 0.5 * (HALF_FIT - 1.0) * span
    # keep a strip below the axis so the boundary line is clearly visible
    return _Frame(xmin - pad, xmax + pad, min(ymin, 0.0) - 0.25 * pad, ymax + pad)


def _frame(scene: ConstructionScene) -> _Frame:
    if scene.model == "ball":
        return _Frame(-DISK_VIEW, DISK_VIEW, -DISK_VIEW, DISK_VIEW)
    if scene.model == "half":
        return _half_frame(scene)
    raise DomainError("unknown scene model %r" % (scene.model,))


def _fmt(value: float) -> str:
    value = float(value)
    if abs(value) < 0.5 * 10.0**-SVG_PRECISION:
        value = 0.0
    return "%.*f" % (SVG_PRECISION, value)


def _clip_line(line: Line, frame: _Frame) -> tuple[float, float, float, float] | None:
    """Liang-Barsky clip of an infinite line against the world rectangle."""
    px, py = float(line.point[0]), float(line.point[1])
    dx, dy = float(line.direction[0]), float(line.direction[1])
    t0, t1 = -math.inf, math.inf
    for d, lo, hi, p in (
        (dx, frame.xmin, frame.xmax, px),
        (dy, frame.ymin, frame.ymax, py),
    ):
        if abs(d) < 1e-15:
            if p < lo or p > hi:
                return None
            continue
        ta, tb = (lo - p) / d, (hi - p) / d
        if ta > tb:
            ta, tb = tb, ta
        t0, t1 = max(t0, ta), min(t1, tb)
    if not t0 < t1:
        return None
    return px + t0 * dx, py + t0 * dy, px + t1 * dx, py + t1 * dy


# ---------------------------------------------------------------------------
# svg emission
# ---------------------------------------------------------------------------


def _circle_element(circle: Circle, frame: _Frame, color: str, width: float) -> str:
    cx, cy = frame.to_px(circle.center[0], circle.center[1])
    return (
        '<circle cx="%s" cy="%s" r="%s" fill="none" stroke="%s" stroke-width="%s"/>'
        % (_fmt(cx), _fmt(cy), _fmt(circle.radius * frame.scale), color, width)
    )


def _line_element(line: Line, frame: _Frame, color: str, width: float) -> str | None:
    clipped = _clip_line(line, frame)
    if clipped is None:
        return None
    x1, y1 = frame.to_px(clipped[0], clipped[1])
    x2, y2 = frame.to_px(clipped[2], clipped[3])
    return '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="%s"/>' % (
        _fmt(x1),
        _fmt(y1),
        _fmt(x2),
        _fmt(y2),
        color,
        width,
    )


def _arc_element(arc: SceneArc, frame: _Frame, color: str, width: float) -> str:
    r = arc.circle.radius
    cx, cy = float(arc.circle.center[0]), float(arc.circle.center[1])
    span = (arc.end_angle - arc.start_angle) % (2.0 * math.pi)
    x1, y1 = frame.to_px(cx + r * math.cos(arc.start_angle), cy + r * math.sin(arc.start_angle))
    x2, y2 = frame.to_px(cx + r * math.cos(arc.end_angle), cy + r * math.sin(arc.end_angle))
    large = 1 if span > math.pi else 0
    # world counterclockwise turns clockwise once the y axis is flipped
    return '<path d="M %s %s A %s %s 0 %d 0 %s %s" fill="none" stroke="%s" stroke-width="%s"/>' % (
        _fmt(x1),
        _fmt(y1),
        _fmt(r * frame.scale),
        _fmt(r * frame.scale),
        large,
        _fmt(x2),
        _fmt(y2),
        color,
        width,
    )


def _text_element(px: float, py: float, label: str) -> str:
    return '<text x="%s" y="%s" font-family="monospace" font-size="12">%s</text>' % (
        _fmt(px),
        _fmt(py),
        label,
    )


def _curve_label_anchor(curve: CircleOrLine, frame: _Frame) -> tuple[float, float] | None:
    if isinstance(curve, Circle):
        return frame.to_px(curve.center[0], curve.center[1] + curve.radius)
    clipped = _clip_line(curve, frame)
    if clipped is None:
        return None
    return frame.to_px(clipped[0], clipped[1])


def svg_document(scene: ConstructionScene) -> str:
    """Render a scene to one standalone SVG string."""
    frame = _frame(scene)
    body: list[str] = []
    boundary_color, boundary_width = _STROKES["boundary"]
    if scene.model == "ball":
        body.append(
            _circle_element(
                Circle(np.zeros(2), 1.0), frame, boundary_color, boundary_width
            )
        )
    else:
        axis = _line_element(
            Line(np.zeros(2), np.array([1.0, 0.0])), frame, boundary_color, boundary_width
        )
        if axis is not None:
            body.append(axis)
    for sc in scene.curves:
        color, width = _STROKES.get(sc.role, _STROKES["construction"])
        if isinstance(sc.curve, Circle):
            body.append(_circle_element(sc.curve, frame, color, width))
        else:
            element = _line_element(sc.curve, frame, color, width)
            if element is None:
                continue
            body.append(element)
        anchor = _curve_label_anchor(sc.curve, frame)
        if anchor is not None and sc.label:
            body.append(_text_element(anchor[0] + 4.0, anchor[1] - 4.0, sc.label))
    for sa in scene.arcs:
        color, width = _STROKES.get(sa.role, _STROKES["accent"])
        body.append(_arc_element(sa, frame, color, width))
        if sa.label:
            mid = 0.5 * (sa.start_angle + sa.end_angle)
            px, py = frame.to_px(
                sa.circle.center[0] + sa.circle.radius * math.cos(mid),
                sa.circle.center[1] + sa.circle.radius * math.sin(mid),
            )
            body.append(_text_element(px + 4.0, py - 4.0, sa.label))
    for sp in scene.points:
        px, py = frame.to_px(sp.position[0], sp.position[1])
        body.append('<circle cx="%s" cy="%s" r="3" fill="#000000"/>' % (_fmt(px), _fmt(py)))
        body.append(_text_element(px + 6.0, py - 6.0, sp.label))
    height = _fmt(frame.height)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="%s"'
        ' viewBox="0 0 600 %s">\n'
        '<rect x="0" y="0" width="600" height="%s" fill="#ffffff"/>\n'
    ) % (height, height, height)
    return head + "\n".join(body) + "\n</svg>\n"


def render_svg(scene: ConstructionScene, path) -> None:
    """Write the rendered scene; propagates OSError on write failure."""
    data = svg_document(scene)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(data)
