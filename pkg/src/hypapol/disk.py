"""Hyperbolic geometry of the open unit ball.

Distances come from the closed form ``rho = 2 arsinh(|x-y| / sqrt((1-|x|^2)
(1-|y|^2)))``.  Geodesic carriers, equidistant bisectors and hyperbolic
midpoints are produced as explicit Euclidean circles, lines and points, so
every construction can be drawn or re-checked with elementary geometry.

All operations accept points of any dimension n >= 2.  The planar formulas
are applied in the 2-plane through the origin containing the input pair and
the result is embedded back; for n == 2 the plane is the ambient space.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .apollonian import ApollonianBall
from .core import (
    DISTINCT_TOL,
    ArcPath,
    Circle,
    CircleOrLine,
    Line,
    SegmentPath,
    absolute_ratio,
    as_pair,
    as_point,
    embed_from_plane,
    norm,
    plane_basis,
)
from .errors import DegenerateInput, DomainError

#: In-plane collinearity threshold for the cross product of the pair.
COLLINEAR_TOL = 1e-12

#: Threshold on |(1-|x|^2) - (1-|y|^2)| below which bisectors become lines.
EQUAL_NORM_TOL = 1e-12


def _check_inside(x: np.ndarray) -> float:
    q = float(x @ x)
    if q >= 1.0:
        raise DomainError("point must lie in the open unit ball")
    return q


def rho_ball(x, y) -> float:
    """Hyperbolic distance in the unit ball, 2 arsinh(|x-y| / sqrt((1-|x|^2)(1-|y|^2)))."""
    x, y = as_pair(x, y)
    qx, qy = _check_inside(x), _check_inside(y)
    return 2.0 * math.asinh(norm(x - y) / math.sqrt((1.0 - qx) * (1.0 - qy)))


def ahlfors_bracket(x, y) -> float:
    """sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)); satisfies tanh(rho/2) = |x-y| / bracket."""
    x, y = as_pair(x, y)
    qx, qy = float(x @ x), float(y @ y)
    if qx >= 1.0 or qy >= 1.0:
        raise DomainError("bracket is defined for points of the open unit ball")
    d = norm(x - y)
    return math.sqrt(d * d + (1.0 - qx) * (1.0 - qy))


# ---------------------------------------------------------------------------
# geodesics
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GeodesicSegment:
    """Geodesic through x and y with its carrier and ordered ideal endpoints.

    The four points ``ideal_x, x, y, ideal_y`` occur in this order along the
    carrier; ``log`` of their absolute ratio is the hyperbolic distance.  In
    the half-space model ``ideal_y`` (or ``ideal_x``) may be ``INFINITY`` for
    vertical geodesics.
    """

    x: np.ndarray
    y: np.ndarray
    carrier: CircleOrLine
    ideal_x: object
    ideal_y: object


def _to_plane(x: np.ndarray, y: np.ndarray):
    """In-plane complex coordinates plus an embedding closure."""
    if x.size == 2:
        return complex(x[0], x[1]), complex(y[0], y[1]), (lambda z: np.array([z.real, z.imag]))
    u, v = plane_basis(x, y)
    zx = complex(float(x @ u), float(x @ v))
    zy = complex(float(y @ u), float(y @ v))
    return zx, zy, (lambda z: embed_from_plane(z, u, v))


def _is_collinear(zx: complex, zy: complex) -> bool:
    cross = zx.real * zy.imag - zx.imag * zy.real
    return abs(cross) <= COLLINEAR_TOL * max(abs(zx) * abs(zy), 1e-300)


def _carrier_plane(zx: complex, zy: complex) -> tuple[complex, float]:
    """Center and radius of the circle through zx, zy orthogonal to the unit circle."""
    ax2 = zx.real * zx.real + zx.imag * zx.imag
    ay2 = zy.real * zy.real + zy.imag * zy.imag
    cross = zx.real * zy.imag - zx.imag * zy.real
    a = 1j * (zy * (1.0 + ax2) - zx * (1.0 + ay2)) / (-2.0 * cross)
    r = abs(zx - zy) * abs(zx * ay2 - zy) / (2.0 * math.sqrt(ay2) * abs(cross))
    return a, r


def geodesic_disk(x, y) -> GeodesicSegment:
    """Geodesic segment of the unit ball through two distinct interior points.

    The carrier is the diameter line when 0, x, y are collinear and otherwise
    the circle orthogonal to the unit sphere through the pair.  Ideal
    endpoints are returned in the order ``ideal_x, x, y, ideal_y``.
    """
    x, y = as_pair(x, y)
    _check_inside(x)
    _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("geodesic needs two distinct points")
    zx, zy, emb = _to_plane(x, y)

    if _is_collinear(zx, zy):
        u = (zy - zx) / abs(zy - zx)
        direction = emb(u)
        return GeodesicSegment(
            x=x,
            y=y,
            carrier=Line(point=np.zeros(x.size), direction=direction),
            ideal_x=emb(-u),
            ideal_y=emb(u),
        )

    a, r = _carrier_plane(zx, zy)
    ua = a / abs(a)
    theta = math.acos(min(1.0 / abs(a), 1.0))
    i1 = ua * cmath.exp(1j * theta)
    i2 = ua * cmath.exp(-1j * theta)

    tau = 2.0 * math.pi
    p1, p2 = cmath.phase(i1 - a), cmath.phase(i2 - a)
    px, py = cmath.phase(zx - a), cmath.phase(zy - a)
    span = (p2 - p1) % tau
    dx, dy = (px - p1) % tau, (py - p1) % tau
    if dx < span and dy < span:
        first, second = (i1, i2) if dx <= dy else (i2, i1)
    else:
        dx2, dy2 = (px - p2) % tau, (py - p2) % tau
        first, second = (i2, i1) if dx2 <= dy2 else (i1, i2)

    return GeodesicSegment(
        x=x,
        y=y,
        carrier=Circle(center=emb(a), radius=r),
        ideal_x=emb(first),
        ideal_y=emb(second),
    )


def geodesic_path(x, y) -> SegmentPath | ArcPath:
    """The geodesic between x and y as a quadrature-ready path."""
    x, y = as_pair(x, y)
    _check_inside(x)
    _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("geodesic needs two distinct points")
    if x.size == 2:
        u = np.array([1.0, 0.0])
        v = np.array([0.0, 1.0])
        zx, zy = complex(x[0], x[1]), complex(y[0], y[1])
    else:
        u, v = plane_basis(x, y)
        zx = complex(float(x @ u), float(x @ v))
        zy = complex(float(y @ u), float(y @ v))
    if _is_collinear(zx, zy):
        return SegmentPath(x, y)
    a, r = _carrier_plane(zx, zy)
    px, py = cmath.phase(zx - a), cmath.phase(zy - a)
    delta = math.remainder(py - px, 2.0 * math.pi)
    center = a.real * u + a.imag * v
    return ArcPath(center=center, radius=r, u=u, v=v, angle_start=px, angle_end=px + delta)


def rho_sup_absratio(x, y, samples: int = 2048) -> float:
    """Distance as the supremum of log absolute ratios over boundary pairs.

    Returns ``log`` of the absolute ratio of the ordered ideal points, which
    attains the supremum.  A sampled supremum over ``samples`` boundary points
    of the great circle through the pair's plane is computed as a cross-check;
    it can never exceed the returned value (up to 1e-12).
    """
    x, y = as_pair(x, y)
    _check_inside(x)
    _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        return 0.0
    g = geodesic_disk(x, y)
    exact = math.log(absolute_ratio(g.ideal_x, x, y, g.ideal_y))

    zx, zy, _ = _to_plane(x, y)
    t = 2.0 * np.pi * np.arange(samples) / samples
    bound = np.cos(t) + 1j * np.sin(t)
    da = np.abs(bound - zx)
    db = np.abs(bound - zy)
    sampled = math.log(float(np.max(db / da))) + math.log(float(np.max(da / db)))
    if sampled > exact + 1e-12:
        raise ArithmeticError("sampled boundary supremum exceeded the ideal-point value")
    return exact


# ---------------------------------------------------------------------------
# bisectors and midpoints
# ---------------------------------------------------------------------------


def bisector_disk(x, y) -> CircleOrLine:
    """Hyperbolic bisector of the pair: the set equidistant from x and y.

    Equal Euclidean norms give the perpendicular bisector line through the
    origin.  Otherwise the bisector is the sphere with center
    ``(x - A^2 y) / (1 - A^2)`` and radius ``A |x - y| / |1 - A^2|`` where
    ``A = sqrt((1 - |x|^2) / (1 - |y|^2))``; it is orthogonal to the unit
    sphere and to the geodesic carrier of the pair.
    """
    x, y = as_pair(x, y)
    qx, qy = _check_inside(x), _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("bisector needs two distinct points")
    m2x, m2y = 1.0 - qx, 1.0 - qy
    if abs(m2x - m2y) < EQUAL_NORM_TOL:
        if x.size == 2:
            d = y - x
            perp = np.array([-d[1], d[0]]) / norm(d)
        else:
            zx, zy, emb = _to_plane(x, y)
            zp = 1j * (zy - zx) / abs(zy - zx)
            perp = emb(zp)
        if perp[np.argmax(np.abs(perp))] < 0:
            perp = -perp
        return Line(point=np.zeros(x.size), direction=perp)
    a2 = m2x / m2y
    q = 1.0 - a2
    center = (x - a2 * y) / q
    radius = math.sqrt(a2) * norm(x - y) / abs(q)
    return Circle(center=center, radius=radius)


def _midpoint_plane(zx: complex, zy: complex) -> complex:
    ax2 = zx.real * zx.real + zx.imag * zx.imag
    ay2 = zy.real * zy.real + zy.imag * zy.imag
    m2x, m2y = 1.0 - ax2, 1.0 - ay2
    collinear = _is_collinear(zx, zy)
    equal_mod = abs(m2x - m2y) < EQUAL_NORM_TOL

    if collinear and equal_mod:
        # antipodal through the origin
        return 0j

    if collinear:
        # diameter carrier; intersect it with the bisector circle.  The
        # intersection parameters solve t^2 - 2 (u.w) t + 1 = 0 because the
        # bisector is orthogonal to the unit circle; the root inside the
        # disk is the reciprocal of the one outside.
        u = (zy - zx) / abs(zy - zx)
        a2 = m2x / m2y
        w = (zx - a2 * zy) / (1.0 - a2)
        uw = u.real * w.real + u.imag * w.imag
        root = math.sqrt(max(uw * uw - 1.0, 0.0))
        t = uw - root if uw > 0 else uw + root
        return t * u

    a1, r1 = _carrier_plane(zx, zy)

    if equal_mod:
        # bisector degenerates to a line through the origin
        db = 1j * (zy - zx) / abs(zy - zx)
        ub = db.real * a1.real + db.imag * a1.imag
        root = math.sqrt(max(ub * ub - 1.0, 0.0))
        t = ub - root if ub > 0 else ub + root
        return t * db

    # Generic case: the midpoint sits on the segment from the origin to the
    # foot of the perpendicular dropped onto the line joining the two
    # centers, at distance  d(line, 0) - r1 r2 / sqrt(r1^2 + r2^2).  The
    # bisector center a2 = b / q and radius r2 = sqrt(a2q) |zx - zy| / |q|
    # blow up as the moduli approach each other, so everything is evaluated
    # in the scale-factored forms below, which stay O(1).
    a2q = m2x / m2y
    q = 1.0 - a2q
    b = zx - a2q * zy  # bisector center times q
    den = abs(q * a1 - b)  # |a1 - a2| times |q|
    dist = abs(a1.real * b.imag - a1.imag * b.real) / den
    r2q = math.sqrt(a2q) * abs(zx - zy)  # bisector radius times |q|
    pull = r1 / math.sqrt(1.0 + (r1 * abs(q) / r2q) ** 2)
    mag = max(dist - pull, 0.0)
    base = 1j * (q * a1 - b) / den
    z_pos = mag * base
    z_neg = -z_pos
    if abs(abs(z_pos - a1) - r1) <= abs(abs(z_neg - a1) - r1):
        return z_pos
    return z_neg


def midpoint_disk(x, y) -> np.ndarray:
    """Hyperbolic midpoint of x and y in the unit ball.

    The point z on the geodesic with rho(x, z) = rho(y, z) = rho(x, y) / 2.
    Constructed by intersecting the bisector with the geodesic carrier; the
    two sign candidates of the closed form are disambiguated by which one
    lands on the carrier.
    """
    x, y = as_pair(x, y)
    _check_inside(x)
    _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("midpoint needs two distinct points")
    zx, zy, emb = _to_plane(x, y)
    return emb(_midpoint_plane(zx, zy))


@dataclass(frozen=True, eq=False)
class BisectionConstruction:
    """Bisector, geodesic carrier, and their intersection point."""

    bisector: CircleOrLine
    carrier: CircleOrLine
    midpoint: np.ndarray


def bisect_construction(x, y) -> BisectionConstruction:
    """Bundle of bisector, carrier and midpoint for drawing or inspection."""
    g = geodesic_disk(x, y)
    return BisectionConstruction(
        bisector=bisector_disk(x, y),
        carrier=g.carrier,
        midpoint=midpoint_disk(x, y),
    )


def midpoint_origin_special(x) -> np.ndarray:
    """Midpoint of the segment from the origin to x by a ruler construction.

    In the frame where x = |x| e1, the midpoint is the intersection of
    [0, x] with the segment from (0, -1) to (x1, sqrt(1 - x1^2)); solving the
    intersection gives the scalar  |x| / (1 + sqrt(1 - |x|^2)), applied along
    x / |x|.  General x is handled by rotation, which the closed form absorbs.
    """
    x = as_point(x)
    q = _check_inside(x)
    if math.sqrt(q) < DISTINCT_TOL:
        raise DegenerateInput("midpoint with the origin needs a nonzero point")
    return x / (1.0 + math.sqrt(1.0 - q))


# ---------------------------------------------------------------------------
# metric balls as Euclidean balls
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EuclideanBallView:
    """Euclidean center and radius of a hyperbolic ball, with its metric data.

    ``t`` is tanh of half the hyperbolic radius, the quantity both Euclidean
    fields are rational in.
    """

    hyperbolic_center: np.ndarray
    hyperbolic_radius: float
    euclidean_center: np.ndarray
    euclidean_radius: float
    t: float


def ball_to_euclidean(x, r: float) -> EuclideanBallView:
    """Euclidean view of the hyperbolic ball with center x and radius r.

    With t = tanh(r/2):  center = x (1 - t^2) / (1 - |x|^2 t^2) and radius
    = (1 - |x|^2) t / (1 - |x|^2 t^2).  The view stays inside the unit ball.
    """
    x = as_point(x)
    q = _check_inside(x)
    if not (math.isfinite(r) and r > 0):
        raise DomainError("metric radius must be positive and finite")
    t = math.tanh(0.5 * r)
    den = 1.0 - q * t * t
    return EuclideanBallView(
        hyperbolic_center=x,
        hyperbolic_radius=r,
        euclidean_center=x * (1.0 - t * t) / den,
        euclidean_radius=(1.0 - q) * t / den,
        t=t,
    )


def sphere_centered(r: float, dim: int = 2) -> Circle:
    """Hyperbolic sphere around the origin: the Euclidean sphere of radius tanh(r/2)."""
    if not (math.isfinite(r) and r > 0):
        raise DomainError("metric radius must be positive and finite")
    return Circle(center=np.zeros(dim), radius=math.tanh(0.5 * r))


def sphere_to_apollonian(x, r: float) -> ApollonianBall:
    """Hyperbolic sphere around x as an Apollonian ball with base pair (x, x*).

    The ratio is |x| tanh(r/2) and x* is the inversion of x in the unit
    sphere.  The origin has no inversion partner; use ``sphere_centered``.
    """
    x = as_point(x)
    q = _check_inside(x)
    if not (math.isfinite(r) and r > 0):
        raise DomainError("metric radius must be positive and finite")
    if math.sqrt(q) < DISTINCT_TOL:
        raise DegenerateInput("origin-centered sphere has no inversion base pair")
    return ApollonianBall(x=x, y=x / q, c=math.sqrt(q) * math.tanh(0.5 * r))


# ---------------------------------------------------------------------------
# chords of geodesic carriers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ChordGeometry:
    """Chord data of a geodesic carrier circle.

    ``apex_angle`` is the angle at the carrier center between the ray toward
    the origin and the ray toward either symmetrized endpoint; the
    symmetrized pair spans a chord of the same length with equal norms.
    """

    center: np.ndarray
    radius: float
    half_chord: float
    apex_angle: float
    x_sym: np.ndarray
    y_sym: np.ndarray


def chord_geometry(x, y) -> ChordGeometry:
    """Carrier circle with the chord through x, y reflected into symmetric position.

    Raises:
        DegenerateInput: when 0, x, y are collinear (the carrier is a line).
    """
    x, y = as_pair(x, y)
    _check_inside(x)
    _check_inside(y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("chord needs two distinct points")
    zx, zy, emb = _to_plane(x, y)
    if _is_collinear(zx, zy):
        raise DegenerateInput("chord geometry needs a circular carrier")
    a, r = _carrier_plane(zx, zy)
    delta = 0.5 * abs(zx - zy)
    psi = math.asin(min(delta / r, 1.0))
    u = -a / abs(a)
    v = 1j * u
    zxa = zx - a
    side = 1.0 if (zxa.real * v.real + zxa.imag * v.imag) >= 0 else -1.0
    cs, sn = math.cos(psi), math.sin(psi)
    x_sym = a + r * (cs * u + side * sn * v)
    y_sym = a + r * (cs * u - side * sn * v)
    return ChordGeometry(
        center=emb(a),
        radius=r,
        half_chord=delta,
        apex_angle=psi,
        x_sym=emb(x_sym),
        y_sym=emb(y_sym),
    )


def disk_window_angles(circle: Circle, count: int, margin: float = 0.98) -> np.ndarray:
    """Angles t with ``center + radius e^(i t)`` inside the open unit disk.

    The window is centered on the direction from the circle center toward the
    origin and shrunk by ``margin`` to stay strictly inside.  Raises if the
    circle does not cross the unit circle.
    """
    c = circle.center
    if c.size != 2:
        raise DomainError("disk window sampling is planar")
    w = math.hypot(c[0], c[1])
    if w < DISTINCT_TOL:
        return 2.0 * np.pi * np.arange(count) / count
    cos_gap = (1.0 - w * w - circle.radius**2) / (2.0 * circle.radius * w)
    if cos_gap <= -1.0 or cos_gap >= 1.0:
        raise DomainError("circle does not cross the unit circle")
    eta = math.acos(-cos_gap)
    base = math.atan2(-c[1], -c[0])
    ts = np.linspace(-margin * eta, margin * eta, count)
    return base + ts
