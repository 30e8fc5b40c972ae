"""Apollonian balls and the boundary-ratio distance.

The ball with base points x, y and ratio c is the sublevel set
``{z : |x - z| < c |y - z|}``.  Its boundary is a sphere (a hyperplane when
c == 1).  Taking suprema of the two distance ratios over the boundary of a
domain yields a distance-like quantity ``log(X * Y)``; on the unit ball and
the upper half-space it reproduces the hyperbolic metric, which the tests
exercise against closed forms.

Suprema are estimated from deterministic boundary grids followed by one
golden-section polish around the discrete argmax.  Because every evaluation
point stays on the boundary, the estimate is always a lower bound of the
true supremum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DISTINCT_TOL,
    INFINITY,
    Circle,
    CircleOrLine,
    Line,
    as_pair,
    embed_from_plane,
    is_infinity,
    norm,
    plane_basis,
)
from .errors import DegenerateInput, DomainError, EmptyBoundary

#: Ratio parameters closer to 1 than this take the hyperplane branch.
_RATIO_ONE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ApollonianBall:
    """Sublevel set {z : |x - z| < c |y - z|} of the two-point distance ratio."""

    x: np.ndarray
    y: np.ndarray
    c: float

    def __post_init__(self) -> None:
        x, y = as_pair(self.x, self.y)
        if norm(x - y) < DISTINCT_TOL:
            raise DegenerateInput("Apollonian base points must be distinct")
        if not (math.isfinite(self.c) and self.c > 0):
            raise DomainError("Apollonian ratio must be a positive number")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def contains(self, z) -> bool:
        z = np.asarray(z, dtype=float)
        return norm(self.x - z) < self.c * norm(self.y - z)

    def boundary(self) -> CircleOrLine:
        return apollonian_boundary(self.x, self.y, self.c)


def apollonian_boundary(x, y, c: float) -> CircleOrLine:
    """Boundary sphere of the Apollonian ball with base points x, y and ratio c.

    For c != 1 this is the sphere with center ``(x - c^2 y) / (1 - c^2)`` and
    radius ``c |x - y| / |1 - c^2|``; the same expression covers c > 1, which
    is the reflected ball with the roles of x and y exchanged and ratio 1/c.
    For c == 1 the boundary is the perpendicular bisector of [x, y], returned
    as the midpoint line perpendicular to x - y (in dimension > 2, its trace
    in the plane through x, y and the origin).
    """
    x, y = as_pair(x, y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("Apollonian base points must be distinct")
    if not (math.isfinite(c) and c > 0):
        raise DomainError("Apollonian ratio must be a positive number")
    if abs(c - 1.0) < _RATIO_ONE_TOL:
        mid = 0.5 * (x + y)
        if x.size == 2:
            d = y - x
            perp = np.array([-d[1], d[0]]) / norm(d)
        else:
            u, v = plane_basis(x, y)
            d = y - x
            zc = complex(float(d @ u), float(d @ v))
            zp = 1j * zc / abs(zc)
            perp = embed_from_plane(zp, u, v)
        if perp[np.argmax(np.abs(perp))] < 0:
            perp = -perp
        return Line(point=mid, direction=perp)
    c2 = c * c
    center = (x - c2 * y) / (1.0 - c2)
    radius = c * norm(x - y) / abs(1.0 - c2)
    return Circle(center=center, radius=radius)


# ---------------------------------------------------------------------------
# boundary samplers
# ---------------------------------------------------------------------------


def _golden_max(f, lo: float, hi: float, iters: int = 60) -> tuple[float, float]:
    """Golden-section maximization of f on [lo, hi]; returns (argmax, max)."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    t = c if fc >= fd else d
    return t, max(fc, fd)


class CircleBoundary:
    """Uniform angular grid on the unit circle, with golden-section polish."""

    dim = 2
    has_infinity = False

    def __init__(self, samples: int = 1024):
        if samples < 2:
            raise EmptyBoundary("need at least two boundary samples")
        self.samples = int(samples)

    def params(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.samples) / self.samples

    def finite_points(self) -> np.ndarray:
        t = self.params()
        return np.column_stack([np.cos(t), np.sin(t)])

    def param_point(self, t: float) -> np.ndarray:
        return np.array([math.cos(t), math.sin(t)])

    def refine(self, score, index: int) -> tuple[np.ndarray, float]:
        step = 2.0 * np.pi / self.samples
        t0 = 2.0 * np.pi * index / self.samples
        t, val = _golden_max(lambda t: score(self.param_point(t)), t0 - step, t0 + step)
        return self.param_point(t), val


class SphereBoundary:
    """Fibonacci-lattice grid on the unit 2-sphere with a local compass polish."""

    dim = 3
    has_infinity = False

    def __init__(self, samples: int = 4096):
        if samples < 2:
            raise EmptyBoundary("need at least two boundary samples")
        self.samples = int(samples)

    def finite_points(self) -> np.ndarray:
        k = np.arange(self.samples, dtype=float)
        ga = math.pi * (3.0 - math.sqrt(5.0))
        z = 1.0 - (2.0 * k + 1.0) / self.samples
        r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        t = ga * k
        return np.column_stack([r * np.cos(t), r * np.sin(t), z])

    def refine(self, score, index: int) -> tuple[np.ndarray, float]:
        # compass search on the sphere, step shrinking from one grid spacing
        p = self.finite_points()[index]
        best, fbest = p, score(p)
        step = 2.0 * math.sqrt(4.0 * math.pi / self.samples)
        while step > 1e-9:
            moved = False
            e = np.eye(3)
            for k in range(3):
                for sgn in (1.0, -1.0):
                    q = best + sgn * step * e[k]
                    q /= norm(q)
                    fq = score(q)
                    if fq > fbest:
                        best, fbest = q, fq
                        moved = True
            if not moved:
                step *= 0.5
        return best, fbest


class HalfPlaneBoundary:
    """Tangent-substitution grid on the horizontal axis plus the point at infinity."""

    dim = 2
    has_infinity = True

    def __init__(self, samples: int = 1024):
        if samples < 2:
            raise EmptyBoundary("need at least two boundary samples")
        self.samples = int(samples)

    def params(self) -> np.ndarray:
        # open grid in (-pi/2, pi/2); tan maps it onto the whole axis
        k = np.arange(self.samples, dtype=float)
        return -0.5 * np.pi + np.pi * (k + 0.5) / self.samples

    def finite_points(self) -> np.ndarray:
        t = self.params()
        return np.column_stack([np.tan(t), np.zeros(self.samples)])

    def param_point(self, t: float) -> np.ndarray:
        return np.array([math.tan(t), 0.0])

    def refine(self, score, index: int) -> tuple[np.ndarray, float]:
        step = math.pi / self.samples
        t0 = -0.5 * math.pi + math.pi * (index + 0.5) / self.samples
        lo = max(t0 - step, -0.5 * math.pi + 1e-12)
        hi = min(t0 + step, 0.5 * math.pi - 1e-12)
        t, val = _golden_max(lambda t: score(self.param_point(t)), lo, hi)
        return self.param_point(t), val


# ---------------------------------------------------------------------------
# suprema of boundary ratios
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ApollonianParameters:
    """Boundary suprema of the two distance ratios, with their witnesses.

    ``ratio_x`` is sup |a - y| / |a - x| and ``ratio_y`` is sup |x - d| / |y - d|
    over the sampled boundary; witnesses are the sampled maximizers (possibly
    ``INFINITY``).  The product is at least 1.
    """

    ratio_x: float
    ratio_y: float
    witness_a: object
    witness_d: object


def _boundary_points(boundary) -> tuple[np.ndarray, bool, object]:
    """Normalize a sampler or plain iterable into (points array, has_inf, sampler)."""
    if hasattr(boundary, "finite_points"):
        pts = np.asarray(boundary.finite_points(), dtype=float)
        return pts, bool(getattr(boundary, "has_infinity", False)), boundary
    pts = []
    has_inf = False
    for p in boundary:
        if is_infinity(p):
            has_inf = True
        else:
            pts.append(np.asarray(p, dtype=float))
    arr = np.asarray(pts, dtype=float) if pts else np.empty((0, 2))
    return arr, has_inf, None


def apollonian_parameters(x, y, boundary) -> ApollonianParameters:
    """Sampled suprema of the two boundary distance ratios for interior x, y.

    Args:
        x, y: distinct interior points.
        boundary: a sampler (``CircleBoundary``, ``SphereBoundary``,
            ``HalfPlaneBoundary``) or any iterable of boundary points, which
            may include ``INFINITY``.

    Returns:
        The two suprema with their argmax witnesses.  Whenever the sampler
        exposes a ``refine`` hook, one golden-section pass is run around each
        discrete argmax; all evaluations stay on the boundary, so the result
        never exceeds the true supremum.

    Raises:
        DegenerateInput: if x and y coincide.
        EmptyBoundary: if fewer than two boundary points are supplied.
    """
    x, y = as_pair(x, y)
    if norm(x - y) < DISTINCT_TOL:
        raise DegenerateInput("ratio suprema need two distinct interior points")
    pts, has_inf, sampler = _boundary_points(boundary)
    if pts.shape[0] + int(has_inf) < 2:
        raise EmptyBoundary("boundary sampler produced fewer than two points")

    da = np.linalg.norm(pts - x, axis=1)
    db = np.linalg.norm(pts - y, axis=1)
    with np.errstate(divide="ignore"):
        rx = db / da  # |a - y| / |a - x|
        ry = da / db  # |x - d| / |y - d|

    def pick(vals: np.ndarray, score):
        idx = int(np.argmax(vals)) if vals.size else -1
        best = float(vals[idx]) if vals.size else -math.inf
        witness: object = pts[idx] if vals.size else INFINITY
        if sampler is not None and hasattr(sampler, "refine") and vals.size:
            point, refined = sampler.refine(score, idx)
            if refined > best:
                best, witness = float(refined), point
        if has_inf and 1.0 >= best:
            best, witness = 1.0, INFINITY
        return best, witness

    ratio_x, wit_a = pick(rx, lambda a: norm(a - y) / norm(a - x))
    ratio_y, wit_d = pick(ry, lambda d: norm(d - x) / norm(d - y))
    return ApollonianParameters(ratio_x=ratio_x, ratio_y=ratio_y, witness_a=wit_a, witness_d=wit_d)


def apollonian_distance(x, y, boundary) -> float:
    """log(X * Y) for the sampled boundary-ratio suprema X and Y.

    Coincident points give 0 directly.  On the unit ball and upper half-space
    this quantity equals the hyperbolic distance; for arbitrary domains it is
    a lower estimate that improves with the sample count.
    """
    x, y = as_pair(x, y)
    if norm(x - y) < DISTINCT_TOL:
        return 0.0
    p = apollonian_parameters(x, y, boundary)
    return math.log(p.ratio_x * p.ratio_y)
