"""Shared geometric primitives.

Points, the boundary point at infinity, circles and lines, planar Moebius
maps, cross and absolute ratios, and adaptive-Simpson arc-length quadrature
for conformal metrics.  Everything model specific lives in :mod:`hypapol.disk`
and :mod:`hypapol.halfplane`; this module knows nothing about either model
beyond the two weight functions.

Conventions:

* A point is a numpy float vector of length n >= 2.  In the plane (n == 2) a
  point doubles as a complex number via ``to_complex`` / ``from_complex``.
* ``INFINITY`` is the unique sentinel for the boundary point at infinity.  It
  is accepted only where documented (absolute ratios, Moebius images, ideal
  endpoints of vertical half-space geodesics).
* Coincidence checks use the absolute tolerance ``DISTINCT_TOL``; model
  coordinates are O(1) so no relative scaling is applied there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import ConvergenceError, DegenerateInput, DomainError

#: Absolute tolerance below which two points count as coincident.
DISTINCT_TOL = 1e-14

#: Unit vectors are accepted when their norm is this close to 1.
UNIT_TOL = 1e-12


class _Infinity:
    """Unique sentinel for the boundary point at infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def is_infinity(p: object) -> bool:
    return p is INFINITY


def as_point(p) -> np.ndarray:
    """Coerce ``p`` to a finite float vector of dimension >= 2.

    Raises:
        DomainError: if ``p`` is the infinity sentinel, has fewer than two
            coordinates, or contains non-finite entries.
    """
    if is_infinity(p):
        raise DomainError("the point at infinity is not accepted here")
    a = np.asarray(p, dtype=float)
    if a.ndim != 1 or a.size < 2:
        raise DomainError(f"expected a coordinate vector of dimension >= 2, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DomainError("point coordinates must be finite")
    return a


def as_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Coerce two points and insist they live in the same dimension."""
    a, b = as_point(x), as_point(y)
    if a.size != b.size:
        raise DomainError(f"mixed dimensions: {a.size} versus {b.size}")
    return a, b


def norm(v: np.ndarray) -> float:
    return math.sqrt(float(v @ v))


def to_complex(p) -> complex:
    a = as_point(p)
    if a.size != 2:
        raise DomainError("complex identification needs a planar point")
    return complex(a[0], a[1])


def from_complex(z: complex) -> np.ndarray:
    return np.array([z.real, z.imag], dtype=float)


@dataclass(frozen=True, eq=False)
class Circle:
    """Circle (n == 2) or sphere (n > 2) with Euclidean center and radius."""

    center: np.ndarray
    radius: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "center", as_point(self.center))
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise DegenerateInput(f"circle radius must be positive and finite, got {self.radius}")

    def __repr__(self) -> str:
        c = ", ".join(repr(float(v)) for v in self.center)
        return f"Circle(center=({c}), radius={self.radius!r})"


@dataclass(frozen=True, eq=False)
class Line:
    """Straight line through ``point`` with unit ``direction``.

    Degenerate circles (infinite radius) are returned in this form.  In
    dimension n > 2 the line produced by a construction lies in the 2-plane
    the construction was reduced to; it is the trace of the corresponding
    hyperplane in that plane.
    """

    point: np.ndarray
    direction: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "point", as_point(self.point))
        d = as_point(self.direction)
        if abs(norm(d) - 1.0) > UNIT_TOL:
            raise DegenerateInput("line direction must be a unit vector")
        object.__setattr__(self, "direction", d)
        if self.point.size != d.size:
            raise DomainError("line point and direction disagree in dimension")

    def __repr__(self) -> str:
        p = ", ".join(repr(float(v)) for v in self.point)
        d = ", ".join(repr(float(v)) for v in self.direction)
        return f"Line(point=({p}), direction=({d}))"


CircleOrLine = Circle | Line


# ---------------------------------------------------------------------------
# Moebius maps of the plane
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MobiusMap2:
    """Planar Moebius map z -> (a z + b) / (c z + d).

    With ``conjugate_first`` set, z is conjugated before the map is applied,
    giving the sense-reversing variant.  The coefficients must satisfy
    ``a d - b c != 0``.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    conjugate_first: bool = False

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if abs(det) <= 1e-14:
            raise DegenerateInput("Moebius coefficients are singular (a d - b c ~ 0)")

    def __call__(self, z):
        return mobius_apply(self, z)

    def compose(self, other: "MobiusMap2") -> "MobiusMap2":
        """Map equal to ``self`` applied after ``other``."""
        oa, ob, oc, od = other.a, other.b, other.c, other.d
        if self.conjugate_first:
            oa, ob, oc, od = oa.conjugate(), ob.conjugate(), oc.conjugate(), od.conjugate()
        return MobiusMap2(
            a=self.a * oa + self.b * oc,
            b=self.a * ob + self.b * od,
            c=self.c * oa + self.d * oc,
            d=self.c * ob + self.d * od,
            conjugate_first=self.conjugate_first ^ other.conjugate_first,
        )


def mobius_apply(t: MobiusMap2, z):
    """Apply ``t`` to a complex number or to ``INFINITY``.

    A pole of the map (|c z + d| below resolution) yields ``INFINITY`` rather
    than raising; likewise ``INFINITY`` maps to ``a / c`` or stays at
    ``INFINITY`` when ``c == 0``.
    """
    if is_infinity(z):
        # conjugation fixes infinity, so the image is a / c either way
        if abs(t.c) <= 1e-14:
            return INFINITY
        return t.a / t.c
    w = complex(z)
    if t.conjugate_first:
        w = w.conjugate()
    den = t.c * w + t.d
    if abs(den) < 1e-14:
        return INFINITY
    return (t.a * w + t.b) / den


def disk_automorphism(z0: complex, theta: float) -> MobiusMap2:
    """Sense-preserving disk automorphism z -> e^(i theta) (z - z0)/(1 - conj(z0) z).

    Args:
        z0: point of the open unit disk sent to the origin.
        theta: rotation angle applied after the translation.

    Raises:
        DomainError: if ``z0`` lies outside the open unit disk.
    """
    z0 = complex(z0)
    if abs(z0) >= 1.0:
        raise DomainError("disk automorphism base point must satisfy |z0| < 1")
    phase = cmath.exp(1j * float(theta))
    return MobiusMap2(a=phase, b=-phase * z0, c=-z0.conjugate(), d=1.0 + 0j)


# ---------------------------------------------------------------------------
# Ratios
# ---------------------------------------------------------------------------


def cross_ratio(a: complex, b: complex, c: complex, d: complex) -> complex:
    """Complex cross ratio (a - c)(b - d) / ((a - b)(c - d)).

    The value is real exactly when the four points are concyclic or collinear.

    Raises:
        DegenerateInput: if any two arguments are closer than ``DISTINCT_TOL``.
    """
    pts = [complex(a), complex(b), complex(c), complex(d)]
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(pts[i] - pts[j]) < DISTINCT_TOL:
                raise DegenerateInput("cross ratio needs pairwise distinct points")
    a, b, c, d = pts
    return (a - c) * (b - d) / ((a - b) * (c - d))


def absolute_ratio(a, b, c, d) -> float:
    """Absolute ratio |a - c| |b - d| / (|a - b| |c - d|).

    Any single argument may be ``INFINITY``; the two factors containing it
    cancel in the limit, so they are replaced by 1.  Works in any dimension.

    Raises:
        DegenerateInput: if two arguments coincide (two infinities included).
    """
    args = [p if is_infinity(p) else as_point(p) for p in (a, b, c, d)]
    n_inf = sum(1 for p in args if is_infinity(p))
    if n_inf > 1:
        raise DegenerateInput("absolute ratio allows at most one point at infinity")
    finite = [p for p in args if not is_infinity(p)]
    for i in range(len(finite)):
        for j in range(i + 1, len(finite)):
            if finite[i].size != finite[j].size:
                raise DomainError("absolute ratio arguments disagree in dimension")
            if norm(finite[i] - finite[j]) < DISTINCT_TOL:
                raise DegenerateInput("absolute ratio needs pairwise distinct points")

    def gap(p, q) -> float:
        if is_infinity(p) or is_infinity(q):
            return 1.0
        return norm(p - q)

    a, b, c, d = args
    return gap(a, c) * gap(b, d) / (gap(a, b) * gap(c, d))


def unit_sphere_inversion(x) -> np.ndarray:
    """Inversion in the unit sphere, x -> x / |x|^2."""
    x = as_point(x)
    q = float(x @ x)
    if q < DISTINCT_TOL**2:
        raise DegenerateInput("inversion is undefined at the origin")
    return x / q


# ---------------------------------------------------------------------------
# Elementary Euclidean constructions
# ---------------------------------------------------------------------------


def line_distance_to_origin(a, b) -> float:
    """Distance from the origin to the line through distinct points a, b.

    Evaluates sqrt((|a-b|^2 - (|a|-|b|)^2)((|a|+|b|)^2 - |a-b|^2)) / (2 |a-b|);
    the products are clamped at zero against roundoff for nearly collinear
    input.  Equivalent to |a x b| / |a - b| in the plane.
    """
    a, b = as_pair(a, b)
    ab = norm(a - b)
    if ab < DISTINCT_TOL:
        raise DegenerateInput("line through two points needs them distinct")
    na, nb = norm(a), norm(b)
    p = max(ab * ab - (na - nb) ** 2, 0.0)
    q = max((na + nb) ** 2 - ab * ab, 0.0)
    return math.sqrt(p * q) / (2.0 * ab)


def orthogonal_circle_through(x, r: float, y, z) -> CircleOrLine:
    """Circle through y and z orthogonal to the sphere S(x, r).

    Both y and z must lie on S(x, r).  When y and z are antipodal on that
    sphere the orthogonal circle degenerates to the straight line through
    them, returned as a :class:`Line`.
    """
    x = as_point(x)
    y, z = as_pair(y, z)
    if x.size != y.size:
        raise DomainError("sphere center and points disagree in dimension")
    if not (math.isfinite(r) and r > 0):
        raise DomainError("sphere radius must be positive")
    if norm(y - z) < DISTINCT_TOL:
        raise DegenerateInput("orthogonal circle needs two distinct points")
    s = 0.5 * (y + z)
    sx = s - x
    d2 = float(sx @ sx)
    if math.sqrt(d2) < 1e-12:
        return Line(point=y, direction=(z - y) / norm(z - y))
    yx = y - x
    w = x + (float(yx @ yx) / d2) * sx
    return Circle(center=w, radius=norm(y - w))


# ---------------------------------------------------------------------------
# Conformal weights and arc-length quadrature
# ---------------------------------------------------------------------------


class WeightFunction(Enum):
    """Conformal density defining a model metric: ds = w(z) |dz|."""

    BALL = "ball"  # w(z) = 2 / (1 - |z|^2) on the open unit ball
    HALF_SPACE = "half"  # w(z) = 1 / z_n on the open upper half-space

    def __call__(self, p) -> float:
        a = np.asarray(p, dtype=float)
        if self is WeightFunction.BALL:
            q = float(a @ a)
            if q >= 1.0:
                raise DomainError("weight sample left the open unit ball")
            return 2.0 / (1.0 - q)
        h = float(a[-1])
        if h <= 0.0:
            raise DomainError("weight sample left the open upper half-space")
        return 1.0 / h


@dataclass(frozen=True, eq=False)
class SegmentPath:
    """Straight segment from ``start`` to ``end``, parameterized on [0, 1]."""

    start: np.ndarray
    end: np.ndarray

    def __post_init__(self) -> None:
        a, b = as_pair(self.start, self.end)
        object.__setattr__(self, "start", a)
        object.__setattr__(self, "end", b)

    def point(self, t: float) -> np.ndarray:
        return self.start + t * (self.end - self.start)

    def speed(self, t: float) -> float:
        return norm(self.end - self.start)


@dataclass(frozen=True, eq=False)
class ArcPath:
    """Circular arc in the plane spanned by the orthonormal pair (u, v).

    The point at parameter t is ``center + radius (cos phi u + sin phi v)``
    with phi running linearly from ``angle_start`` to ``angle_end``.
    """

    center: np.ndarray
    radius: float
    u: np.ndarray
    v: np.ndarray
    angle_start: float
    angle_end: float

    def __post_init__(self) -> None:
        c = as_point(self.center)
        u, v = as_pair(self.u, self.v)
        if c.size != u.size:
            raise DomainError("arc center and frame disagree in dimension")
        if abs(norm(u) - 1.0) > UNIT_TOL or abs(norm(v) - 1.0) > UNIT_TOL or abs(float(u @ v)) > UNIT_TOL:
            raise DegenerateInput("arc frame must be orthonormal")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise DegenerateInput("arc radius must be positive")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def _angle(self, t: float) -> float:
        return self.angle_start + t * (self.angle_end - self.angle_start)

    def point(self, t: float) -> np.ndarray:
        phi = self._angle(t)
        return self.center + self.radius * (math.cos(phi) * self.u + math.sin(phi) * self.v)

    def speed(self, t: float) -> float:
        return self.radius * abs(self.angle_end - self.angle_start)


Path = SegmentPath | ArcPath

#: Hard cap on adaptive-Simpson interval splits; reaching it raises instead of hanging.
QUADRATURE_MAX_SPLITS = 2**16


def path_length_quadrature(
    path: Path,
    weight: WeightFunction,
    tol: float = 1e-10,
    max_splits: int = QUADRATURE_MAX_SPLITS,
) -> float:
    """Length of ``path`` in the metric ds = w |dz|, by adaptive Simpson.

    Args:
        path: segment or circular arc, parameterized on [0, 1].
        weight: conformal density, evaluated at every quadrature node.
        tol: absolute error target; intervals are bisected until the local
            Richardson estimate meets its share of it.
        max_splits: interval-split budget turning non-convergence into an
            error instead of a hang.

    Returns:
        The weighted length, with the usual S + (S2 - S1)/15 correction.

    Raises:
        DomainError: if a sample point leaves the weight's domain or tol <= 0.
        ConvergenceError: when the split budget is exhausted.
    """
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError("quadrature tolerance must be a positive number")

    def f(t: float) -> float:
        return weight(path.point(t)) * path.speed(t)

    fa, fm, fb = f(0.0), f(0.5), f(1.0)
    whole = (fa + 4.0 * fm + fb) / 6.0
    stack = [(0.0, 1.0, fa, fm, fb, whole, tol)]
    total = 0.0
    splits = 0
    while stack:
        a, b, fa, fm, fb, s0, tol_k = stack.pop()
        m = 0.5 * (a + b)
        flm, frm = f(0.5 * (a + m)), f(0.5 * (m + b))
        h6 = (b - a) / 12.0
        left = h6 * (fa + 4.0 * flm + fm)
        right = h6 * (fm + 4.0 * frm + fb)
        err = left + right - s0
        if abs(err) <= 15.0 * tol_k:
            total += left + right + err / 15.0
        else:
            splits += 1
            if splits > max_splits:
                raise ConvergenceError(
                    f"quadrature did not converge within {max_splits} interval splits"
                )
            stack.append((a, m, fa, flm, fm, left, 0.5 * tol_k))
            stack.append((m, b, fm, frm, fb, right, 0.5 * tol_k))
    return total


# ---------------------------------------------------------------------------
# Plane reduction for dimension-free constructions
# ---------------------------------------------------------------------------


def plane_basis(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal (u, v) spanning a plane through the origin containing x and y.

    When x and y are collinear with the origin the plane is not unique; the
    second direction is then completed deterministically from the coordinate
    axis least aligned with the first.
    """
    x, y = as_pair(x, y)
    p, q = (x, y) if float(x @ x) >= float(y @ y) else (y, x)
    lp = norm(p)
    if lp < DISTINCT_TOL:
        u = np.zeros(x.size)
        u[0] = 1.0
        v = np.zeros(x.size)
        v[1] = 1.0
        return u, v
    u = p / lp
    w = q - float(q @ u) * u
    lw = norm(w)
    if lw > 1e-12 * max(1.0, norm(q)):
        return u, w / lw
    k = int(np.argmin(np.abs(u)))
    e = np.zeros(x.size)
    e[k] = 1.0
    w = e - float(e @ u) * u
    return u, w / norm(w)


def project_to_plane(p, u: np.ndarray, v: np.ndarray) -> complex:
    """Coordinates of ``p`` in the plane frame (u, v), as a complex number."""
    p = np.asarray(p, dtype=float)
    return complex(float(p @ u), float(p @ v))


def embed_from_plane(z: complex, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Inverse of :func:`project_to_plane` for points of the plane."""
    return z.real * u + z.imag * v


def circle_points(circle: Circle, angles: Iterable[float]) -> np.ndarray:
    """Planar sample points ``center + radius (cos t, sin t)`` for each angle."""
    c = circle.center
    if c.size != 2:
        raise DomainError("circle_points samples planar circles only")
    ts = np.asarray(list(angles), dtype=float)
    out = np.empty((ts.size, 2))
    out[:, 0] = c[0] + circle.radius * np.cos(ts)
    out[:, 1] = c[1] + circle.radius * np.sin(ts)
    return out
