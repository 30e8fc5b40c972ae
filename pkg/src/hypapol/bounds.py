"""Lower bounds for hyperbolic distance in terms of Euclidean data.

Every bound targets a specific monotone functional of the distance rho:
sinh(rho/2), tanh(rho/4), tanh(rho/2), cosh(rho), or rho itself.  Slack is
always measured against that functional, never against rho directly, since
the functionals are not interchangeable at fixed tolerance.

The scalar kernels ``_ball_bound_values`` and ``_half_bound_values`` accept
numpy arrays so validity sweeps over 1e5 samples stay vectorized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Circle, as_pair, norm, orthogonal_circle_through
from .disk import chord_geometry, geodesic_disk, midpoint_disk, rho_ball
from .errors import DegenerateInput, DomainError, NegativeDiscriminant
from .halfplane import rho_half, split_horizontal

KIND_SINH_HALF = "sinh-half"
KIND_TANH_QUARTER = "tanh-quarter"
KIND_TANH_HALF = "tanh-half"
KIND_COSH = "cosh"
KIND_RAW = "raw-rho"

#: Disagreement ceiling between the two closed forms of the chord bound.
CHORD_CROSSCHECK_TOL = 1e-9

#: Below this midpoint norm the rational form is replaced by its limit u/2.
MIDPOINT_SMALL_NORM = 1e-4


@dataclass(frozen=True, eq=False)
class BoundEntry:
    """One lower bound: its value, the exact functional it bounds, and slack."""

    name: str
    kind: str
    bound_value: float
    exact_value: float
    slack: float
    applicable: bool
    reason: str | None = None


@dataclass(frozen=True, eq=False)
class BoundReport:
    """All bounds evaluated at one pair, with the exact distance for context."""

    x: np.ndarray
    y: np.ndarray
    exact_rho: float
    entries: tuple[BoundEntry, ...]
    h2_beats_h1: bool | None = None


@dataclass(frozen=True, eq=False)
class ScalarBoundTriple:
    """The square-root comparison chain evaluated at radii (r, s)."""

    r: float
    s: float
    lhs: float
    rhs1: float
    rhs1p: float
    rhs2: float
    rhs3: float


def functionals_from_sinh_half(q):
    """Exact sinh-half, tanh-quarter, tanh-half, cosh values given sinh(rho/2)."""
    root = np.sqrt(1.0 + q * q)
    return {
        KIND_SINH_HALF: q,
        KIND_TANH_QUARTER: q / (1.0 + root),
        KIND_TANH_HALF: q / root,
        KIND_COSH: 1.0 + 2.0 * q * q,
    }


def scalar_sqrt_bounds(r: float, s: float) -> ScalarBoundTriple:
    """Upper estimates for sqrt((1-r^2)(1-s^2)) used by the distance bounds."""
    if not (0.0 <= r < 1.0 and 0.0 <= s < 1.0):
        raise DomainError("radii must lie in [0, 1)")
    lhs = math.sqrt((1.0 - r * r) * (1.0 - s * s))
    t = math.sqrt(1.0 + (r * s) ** 2)
    return ScalarBoundTriple(
        r=r,
        s=s,
        lhs=lhs,
        rhs1=1.0 - r * s - 0.5 * (r - s) ** 2 / (1.0 - r * s),
        rhs1p=1.0 - 0.25 * (r + s) ** 2,
        rhs2=t - (r * r + s * s) / (2.0 * t),
        rhs3=1.0 + r * s - 0.5 * (r + s) ** 2 / (1.0 + r * s),
    )


# ---------------------------------------------------------------------------
# unit-ball bounds
# ---------------------------------------------------------------------------

BALL_BOUND_KINDS = {
    "b1": KIND_SINH_HALF,
    "b2": KIND_TANH_QUARTER,
    "b2p": KIND_TANH_QUARTER,
    "b3": KIND_TANH_QUARTER,
    "b4": KIND_TANH_QUARTER,
    "b4p": KIND_TANH_QUARTER,
    "b5": KIND_TANH_QUARTER,
    "b6": KIND_TANH_QUARTER,
    "b7": KIND_TANH_QUARTER,
}


def _ball_bound_values(u, r, s):
    """The seven ball bounds at separation u and radii r, s.  Array-friendly.

    b1 is written with (1-r^2)^2 + (1-s^2)^2 instead of the expanded quartic
    1 + (r^4+s^4)/2 - r^2 - s^2 (same polynomial, no cancellation).  b3 uses
    the half-difference of the radii; with the separation u in its place the
    expression exceeds 1 for nearly antipodal pairs and bounds nothing.
    """
    mx = 1.0 - r * r
    my = 1.0 - s * s
    root = np.sqrt(mx * my)
    t = np.sqrt(1.0 + (r * s) ** 2)
    return {
        "b1": u / np.sqrt(0.5 * (mx * mx + my * my)),
        "b2": u / (1.0 + r * s + root),
        "b2p": u / 2.0,
        "b3": u / (2.0 - ((r - s) / 2.0) ** 2),
        "b4": u / (2.0 - 0.5 * (r - s) ** 2),
        "b4p": u / (2.0 - 0.5 * (r - s) ** 2 / (1.0 - r * s)),
        "b5": u / (1.0 + r * s + t - (r * r + s * s) / (2.0 * t)),
        "b6": u / (2.0 + 2.0 * r * s - 0.5 * (r + s) ** 2 / (1.0 + r * s)),
        "b7": u / np.sqrt(u * u + 4.0 * root),
    }


def _ball_exact(u, r, s):
    q = u / np.sqrt((1.0 - r * r) * (1.0 - s * s))
    return functionals_from_sinh_half(q)


def ball_lower_bounds(x, y) -> BoundReport:
    """The seven Euclidean lower bounds for hyperbolic distance in the ball."""
    x, y = as_pair(x, y)
    r, s = norm(x), norm(y)
    if r >= 1.0 or s >= 1.0:
        raise DomainError("points must lie in the open unit ball")
    u = norm(x - y)
    values = _ball_bound_values(u, r, s)
    exact = _ball_exact(u, r, s)
    entries = []
    for name, value in values.items():
        kind = BALL_BOUND_KINDS[name]
        target = float(exact[kind])
        value = float(value)
        entries.append(
            BoundEntry(
                name=name,
                kind=kind,
                bound_value=value,
                exact_value=target,
                slack=target - value,
                applicable=True,
            )
        )
    return BoundReport(x=x, y=y, exact_rho=rho_ball(x, y), entries=tuple(entries))


# ---------------------------------------------------------------------------
# chord-family bounds (planar, circular carrier)
# ---------------------------------------------------------------------------


def _chord_scale(r, delta):
    """sqrt((1+r^2)(r^2-d^2)) - r^2, rationalized so nothing cancels."""
    p = (1.0 + r * r) * (r * r - delta * delta)
    return (r * r * (1.0 - delta * delta) - delta * delta) / (np.sqrt(p) + r * r)


def chord_bound(x, y) -> float:
    """Distance of the symmetrized chord endpoints; a lower bound for rho.

    Two closed forms exist: an arsinh in the half-chord and carrier radius,
    and an artanh in the apex angle.  Both are evaluated and must agree to
    CHORD_CROSSCHECK_TOL; the arsinh value is returned.
    """
    g = chord_geometry(x, y)
    scale = _chord_scale(g.radius, g.half_chord)
    if scale <= 0.0:
        raise DomainError("chord exceeds the in-disk span of its carrier")
    value = 2.0 * math.asinh(g.half_chord / scale)
    arg = (g.radius + math.sqrt(1.0 + g.radius**2)) * math.tan(0.5 * g.apex_angle)
    if arg < 1.0:
        other = 4.0 * math.atanh(arg)
        if abs(other - value) > CHORD_CROSSCHECK_TOL * max(1.0, value):
            raise ArithmeticError("chord bound closed forms disagree")
    return value


def circumscribed_bound(x, y) -> float:
    """Lower bound for tanh(rho/4) from the circle through x, y orthogonal to the carrier."""
    x, y = as_pair(x, y)
    g = geodesic_disk(x, y)
    if not isinstance(g.carrier, Circle):
        raise DegenerateInput("circumscribed bound needs a circular carrier")
    orth = orthogonal_circle_through(g.carrier.center, g.carrier.radius, x, y)
    if not isinstance(orth, Circle):
        raise DegenerateInput("pair is antipodal on its carrier")
    u = norm(x - y)
    w2 = float(orth.center @ orth.center)
    e = 4.0 - 4.0 * w2 + u * u
    disc = e * e - 16.0 * u * u
    if disc < 0.0:
        raise NegativeDiscriminant("circumscribed bound discriminant is negative")
    root = math.sqrt(disc)
    if e < 0.0:
        return (e - root) / (4.0 * u)
    return 4.0 * u / (e + root)


def midpoint_bound(x, y) -> float:
    """Lower bound for tanh(rho/2) in terms of the hyperbolic midpoint norm.

    The printed form (m - 1 + sqrt((1-m)^2 + m u^2)) / (u m) with m = |z|^2
    is used in the rationalized shape u / ((1-m) + sqrt((1-m)^2 + m u^2));
    below MIDPOINT_SMALL_NORM the limit u/2 is returned directly.
    """
    x, y = as_pair(x, y)
    z = midpoint_disk(x, y)
    u = norm(x - y)
    m = float(z @ z)
    if math.sqrt(m) < MIDPOINT_SMALL_NORM:
        return 0.5 * u
    gap = 1.0 - m
    return u / (gap + math.sqrt(gap * gap + m * u * u))


def symmetric_chord_bound(x, y) -> float:
    """Lower bound for sinh(rho/2) from the symmetrized chord; weaker than chord_bound."""
    g = chord_geometry(x, y)
    scale = _chord_scale(g.radius, g.half_chord)
    if scale <= 0.0:
        raise DomainError("chord exceeds the in-disk span of its carrier")
    return g.half_chord / math.sqrt(scale)


def chord_family_report(x, y) -> BoundReport:
    """Chord, circumscribed, midpoint and symmetric-chord bounds at one pair.

    Bounds whose construction degenerates (collinear carrier, negative
    discriminant) are reported inapplicable with the exact functional as
    fallback value.
    """
    x, y = as_pair(x, y)
    exact_rho = rho_ball(x, y)
    if norm(x - y) < 1e-14:
        raise DegenerateInput("chord family needs two distinct points")
    exact = functionals_from_sinh_half(math.sinh(0.5 * exact_rho))
    exact[KIND_RAW] = exact_rho

    def entry(name, kind, compute):
        target = float(exact[kind])
        try:
            value = compute()
        except DegenerateInput:
            return BoundEntry(name, kind, target, target, 0.0, False, "collinear carrier")
        except NegativeDiscriminant:
            return BoundEntry(name, kind, target, target, 0.0, False, "negative discriminant")
        return BoundEntry(name, kind, value, target, target - value, True)

    entries = (
        entry("chord", KIND_RAW, lambda: chord_bound(x, y)),
        entry("circumscribed", KIND_TANH_QUARTER, lambda: circumscribed_bound(x, y)),
        entry("midpoint", KIND_TANH_HALF, lambda: midpoint_bound(x, y)),
        entry("symmetric_chord", KIND_SINH_HALF, lambda: symmetric_chord_bound(x, y)),
    )
    return BoundReport(x=x, y=y, exact_rho=exact_rho, entries=entries)


# ---------------------------------------------------------------------------
# half-space bounds
# ---------------------------------------------------------------------------

HALF_BOUND_KINDS = {
    "h1": KIND_COSH,
    "h2": KIND_COSH,
    "h3": KIND_SINH_HALF,
    "h3p": KIND_SINH_HALF,
}


def _half_bound_values(c, a, b):
    """Half-space bounds at horizontal gap c and heights a, b.  Array-friendly.

    h3 uses (a-b)^2 + c^2 over (a+b)^2 + c^2 under the root, the exact
    rewrite of 1 - 4ab/((a+b)^2 + c^2).
    """
    gap2 = (a - b) ** 2
    sum2 = (a + b) ** 2
    geo = 2.0 * np.sqrt(a * b)
    big = np.sqrt(sum2 + c * c)
    return {
        "h1": 1.0 + (c * c + gap2) / (a * a + b * b),
        "h2": 1.0 + 2.0 * c * c / sum2,
        "h3": (a + b) * np.sqrt(gap2 + c * c) / (geo * big),
        "h3p": (a + b) * c / (geo * big),
    }


def _half_exact(c, a, b):
    q = np.sqrt(c * c + (a - b) ** 2) / (2.0 * np.sqrt(a * b))
    return functionals_from_sinh_half(q)


def half_lower_bounds(x, y) -> BoundReport:
    """Euclidean lower bounds for hyperbolic distance in the half-space."""
    x, y = as_pair(x, y)
    hx, a = split_horizontal(x)
    hy, b = split_horizontal(y)
    if a <= 0.0 or b <= 0.0:
        raise DomainError("points must have positive last coordinate")
    c = norm(hx - hy)
    values = _half_bound_values(c, a, b)
    exact = _half_exact(c, a, b)
    entries = []
    for name, value in values.items():
        kind = HALF_BOUND_KINDS[name]
        target = float(exact[kind])
        value = float(value)
        entries.append(
            BoundEntry(
                name=name,
                kind=kind,
                bound_value=value,
                exact_value=target,
                slack=target - value,
                applicable=True,
            )
        )
    return BoundReport(
        x=x,
        y=y,
        exact_rho=rho_half(x, y),
        entries=tuple(entries),
        h2_beats_h1=bool(a + b <= c),
    )
