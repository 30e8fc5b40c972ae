"""Hyperbolic geometry of the upper half-space (last coordinate positive).

Distance is ``2 arsinh(|x-y| / (2 sqrt(x_n y_n)))`` where x_n, y_n are the
heights.  Geodesic carriers are vertical lines or semicircles centered on
the boundary hyperplane; bisectors are spheres centered on the boundary.
Planar formulas extend to n > 2 through the vertical 2-plane containing the
pair, exactly as the ball model reduces to its 2-plane through the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DISTINCT_TOL,
    INFINITY,
    ArcPath,
    Circle,
    CircleOrLine,
    Line,
    MobiusMap2,
    SegmentPath,
    as_pair,
    as_point,
    norm,
)
from .disk import GeodesicSegment
from .errors import DegenerateInput, DomainError

#: Relative threshold on |x' - y'| below which a pair counts as vertical.
VERTICAL_TOL = 1e-12

#: Relative threshold on |x_n - y_n| below which the bisector becomes vertical.
EQUAL_HEIGHT_TOL = 1e-12


def split_horizontal(x) -> tuple[np.ndarray, float]:
    """Split a point into its horizontal part (last coordinate zeroed) and height."""
    x = as_point(x)
    h = x.copy()
    h[-1] = 0.0
    return h, float(x[-1])


def _check_height(x: np.ndarray) -> float:
    t = float(x[-1])
    if t <= 0.0:
        raise DomainError("point must have positive last coordinate")
    return t


def rho_half(x, y) -> float:
    """Hyperbolic distance in the half-space, 2 arsinh(|x-y| / (2 sqrt(x_n y_n)))."""
    x, y = as_pair(x, y)
    tx, ty = _check_height(x), _check_height(y)
    return 2.0 * math.asinh(norm(x - y) / (2.0 * math.sqrt(tx * ty)))


def _vertical_frame(x: np.ndarray, y: np.ndarray):
    """Reduced coordinates in the vertical plane through x and y.

    Maps p to (horizontal offset from y' along the pair axis, height); the
    returned embedding inverts this for points constructed in the plane.
    """
    hx, _ = split_horizontal(x)
    hy, _ = split_horizontal(y)
    axis = (hx - hy) / norm(hx - hy)

    def to2(p: np.ndarray) -> tuple[float, float]:
        hp = p.copy()
        hp[-1] = 0.0
        return float((hp - hy) @ axis), float(p[-1])

    def emb(s: float, t: float) -> np.ndarray:
        out = hy + s * axis
        out[-1] = t
        return out

    return to2, emb, axis


def _is_vertical(x: np.ndarray, y: np.ndarray) -> bool:
    hx, _ = split_horizontal(x)
    hy, _ = split_horizontal(y)
    return norm(hx - hy) < VERTICAL_TOL * max(1.0, norm(hx), norm(hy))


def geodesic_half(x, y) -> GeodesicSegment:
    """Geodesic segment of the half-space through two distinct points.

    Vertical pairs ride the vertical line; the far ideal endpoint is the
    ``INFINITY`` sentinel.  Other pairs ride the semicircle centered on the
    boundary, with both ideal points on the boundary hyperplane.
    """
    x, y = as_pair(x, y)
    _check_height(x)
    _check_height(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("geodesic needs two distinct points")

    if _is_vertical(x, y):
        foot, _ = split_horizontal(x)
        direction = np.zeros(x.size)
        direction[-1] = 1.0
        if x[-1] < y[-1]:
            ideal_x, ideal_y = foot, INFINITY
        else:
            ideal_x, ideal_y = INFINITY, foot
        return GeodesicSegment(
            x=x, y=y, carrier=Line(point=foot, direction=direction), ideal_x=ideal_x, ideal_y=ideal_y
        )

    to2, emb, _ = _vertical_frame(x, y)
    x1, x2 = to2(x)
    y1, y2 = to2(y)
    c = (x1 * x1 + x2 * x2 - y1 * y1 - y2 * y2) / (2.0 * (x1 - y1))
    r = math.hypot(x2, x1 - c)
    phi_x = math.atan2(x2, x1 - c)
    phi_y = math.atan2(y2, y1 - c)
    if phi_x < phi_y:
        ideal_x, ideal_y = emb(c + r, 0.0), emb(c - r, 0.0)
    else:
        ideal_x, ideal_y = emb(c - r, 0.0), emb(c + r, 0.0)
    return GeodesicSegment(
        x=x,
        y=y,
        carrier=Circle(center=emb(c, 0.0), radius=r),
        ideal_x=ideal_x,
        ideal_y=ideal_y,
    )


def geodesic_path(x, y) -> SegmentPath | ArcPath:
    """The geodesic between x and y as a quadrature-ready path."""
    x, y = as_pair(x, y)
    _check_height(x)
    _check_height(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("geodesic needs two distinct points")
    if _is_vertical(x, y):
        return SegmentPath(x, y)
    to2, emb, axis = _vertical_frame(x, y)
    x1, x2 = to2(x)
    y1, y2 = to2(y)
    c = (x1 * x1 + x2 * x2 - y1 * y1 - y2 * y2) / (2.0 * (x1 - y1))
    r = math.hypot(x2, x1 - c)
    vert = np.zeros(x.size)
    vert[-1] = 1.0
    return ArcPath(
        center=emb(c, 0.0),
        radius=r,
        u=axis,
        v=vert,
        angle_start=math.atan2(x2, x1 - c),
        angle_end=math.atan2(y2, y1 - c),
    )


def bisector_half(x, y) -> CircleOrLine:
    """Set of points equidistant from x and y in the half-space metric.

    Equal heights give the vertical hyperplane trace through the Euclidean
    midpoint.  Otherwise the bisector is the sphere with center
    ``(x - A^2 y) / (1 - A^2)``, ``A = sqrt(x_n / y_n)``, which lands on the
    boundary hyperplane, with radius ``A |x - y| / |1 - A^2|``.
    """
    x, y = as_pair(x, y)
    tx, ty = _check_height(x), _check_height(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("bisector needs two distinct points")
    if abs(tx - ty) < EQUAL_HEIGHT_TOL * max(tx, ty):
        foot = 0.5 * (x + y)
        foot[-1] = 0.0
        direction = np.zeros(x.size)
        direction[-1] = 1.0
        return Line(point=foot, direction=direction)
    a2 = tx / ty
    q = 1.0 - a2
    center = (x - a2 * y) / q
    center[-1] = 0.0  # heights cancel exactly in the formula
    radius = math.sqrt(a2) * norm(x - y) / abs(q)
    return Circle(center=center, radius=radius)


def midpoint_half(x, y) -> np.ndarray:
    """Hyperbolic midpoint in the half-space.

    In the vertical plane with reduced coordinates (s, t) the midpoint is
    ``s = (s_x t_y + t_x s_y) / (t_x + t_y)`` and
    ``t = sqrt(t_x t_y) sqrt((t_x + t_y)^2 + (s_x - s_y)^2) / (t_x + t_y)``;
    the same expression covers vertical pairs, where it reduces to the
    geometric mean of the heights.
    """
    x, y = as_pair(x, y)
    tx, ty = _check_height(x), _check_height(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("midpoint needs two distinct points")
    if _is_vertical(x, y):
        out = x.copy()
        out[-1] = math.sqrt(tx * ty)
        return out
    to2, emb, _ = _vertical_frame(x, y)
    x1, _ = to2(x)
    y1, _ = to2(y)
    s = (x1 * ty + tx * y1) / (tx + ty)
    t = math.sqrt(tx * ty) * math.sqrt((tx + ty) ** 2 + (x1 - y1) ** 2) / (tx + ty)
    return emb(s, t)


def ball_half_to_euclidean(x, r: float) -> Circle:
    """Euclidean sphere equal to the hyperbolic ball around x with radius r.

    Center sits above the same horizontal position at height x_n cosh(r);
    radius is x_n sinh(r).  The sphere stays in the half-space since
    cosh(r) - sinh(r) > 0.
    """
    x = as_point(x)
    t = _check_height(x)
    if not (math.isfinite(r) and r > 0):
        raise DomainError("metric radius must be positive and finite")
    center = x.copy()
    center[-1] = t * math.cosh(r)
    return Circle(center=center, radius=t * math.sinh(r))


def ball_to_half_map() -> MobiusMap2:
    """Conformal map of the unit disk onto the upper half-plane, z -> i(1+z)/(1-z)."""
    return MobiusMap2(a=1j, b=1j, c=-1.0, d=1.0)


def half_to_ball_map() -> MobiusMap2:
    """Conformal map of the upper half-plane onto the unit disk, z -> (z-i)/(z+i)."""
    return MobiusMap2(a=1.0, b=-1j, c=1.0, d=1j)
