import math

import numpy as np
import pytest

from hypapol.core import (
    INFINITY,
    ArcPath,
    Circle,
    Line,
    MobiusMap2,
    SegmentPath,
    WeightFunction,
    absolute_ratio,
    cross_ratio,
    disk_automorphism,
    embed_from_plane,
    is_infinity,
    line_distance_to_origin,
    mobius_apply,
    orthogonal_circle_through,
    path_length_quadrature,
    plane_basis,
    project_to_plane,
    unit_sphere_inversion,
)
from hypapol.errors import ConvergenceError, DegenerateInput, DomainError


def rand_disk(rng, n=2, rmax=0.95):
    """Uniform point of the n-ball of radius rmax."""
    v = rng.normal(size=n)
    v /= np.linalg.norm(v)
    return rmax * rng.uniform() ** (1.0 / n) * v


# ---------------------------------------------------------------------------
# cross and absolute ratios
# ---------------------------------------------------------------------------


def test_cross_ratio_collinear_example():
    # (0-2)(1-3) / ((0-1)(2-3)) = 4, computed by hand
    assert cross_ratio(0, 1, 2, 3) == pytest.approx(4.0, abs=1e-15)


def test_cross_ratio_real_iff_concyclic():
    rng = np.random.default_rng(11)
    for _ in range(200):
        c = complex(rng.normal(), rng.normal())
        r = rng.uniform(0.5, 2.0)
        a, b, u, v = (c + r * np.exp(1j * t) for t in rng.uniform(0, 2 * np.pi, size=4))
        if min(abs(a - b), abs(a - u), abs(a - v), abs(b - u), abs(b - v), abs(u - v)) < 1e-3:
            continue
        assert abs(cross_ratio(a, b, u, v).imag) <= 1e-9


def test_cross_ratio_rejects_coincident_points():
    with pytest.raises(DegenerateInput):
        cross_ratio(1 + 1j, 1 + 1j, 0, 2)


def test_absolute_ratio_multiplicative_identity():
    rng = np.random.default_rng(12)
    for _ in range(300):
        a, b, c, d = (rng.normal(size=3) for _ in range(4))
        lhs = absolute_ratio(a, b, c, d) * absolute_ratio(a, c, b, d)
        assert lhs == pytest.approx(1.0, rel=1e-10)


def test_absolute_ratio_infinity_cancels():
    x = np.array([0.0, 0.5])
    y = np.array([0.0, -0.5])
    d = np.array([0.0, 1.0])
    # remaining factors: |x - d| / |y - d| = 0.5 / 1.5
    assert absolute_ratio(INFINITY, x, y, d) == pytest.approx(1.0 / 3.0, abs=1e-15)
    with pytest.raises(DegenerateInput):
        absolute_ratio(INFINITY, x, y, INFINITY)


def test_absolute_ratio_similarity_invariance():
    rng = np.random.default_rng(13)
    theta = 0.73
    rot = np.array([[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]])
    shift = np.array([0.4, -1.1])
    for _ in range(200):
        pts = [rng.normal(size=2) for _ in range(4)]
        base = absolute_ratio(*pts)
        moved = absolute_ratio(*(rot @ p + shift for p in pts))
        scaled = absolute_ratio(*(2.5 * p for p in pts))
        assert moved == pytest.approx(base, rel=1e-10)
        assert scaled == pytest.approx(base, rel=1e-10)


def test_absolute_ratio_inversion_invariance():
    rng = np.random.default_rng(14)
    for _ in range(200):
        pts = [rng.normal(size=2) + np.array([3.0, 0.0]) for _ in range(4)]
        base = absolute_ratio(*pts)
        inv = absolute_ratio(*(unit_sphere_inversion(p) for p in pts))
        assert inv == pytest.approx(base, rel=1e-9)


def test_unit_sphere_inversion_involution():
    rng = np.random.default_rng(15)
    for _ in range(100):
        p = rng.normal(size=3)
        if np.linalg.norm(p) < 1e-3:
            continue
        q = unit_sphere_inversion(unit_sphere_inversion(p))
        assert np.allclose(q, p, atol=1e-12)
    with pytest.raises(DegenerateInput):
        unit_sphere_inversion(np.zeros(2))


# ---------------------------------------------------------------------------
# Moebius maps
# ---------------------------------------------------------------------------


def test_disk_automorphism_moves_base_point_to_origin():
    t = disk_automorphism(0.3 + 0.2j, 0.7)
    assert abs(t(0.3 + 0.2j)) <= 1e-15


def test_disk_automorphism_preserves_unit_circle():
    rng = np.random.default_rng(16)
    for _ in range(50):
        z0 = complex(*rand_disk(rng, rmax=0.9))
        t = disk_automorphism(z0, rng.uniform(0, 2 * np.pi))
        for k in range(16):
            z = np.exp(2j * np.pi * k / 16)
            assert abs(abs(t(z)) - 1.0) <= 1e-10


def test_disk_automorphism_rejects_outside_base_point():
    with pytest.raises(DomainError):
        disk_automorphism(1.2, 0.0)


def test_mobius_composition_matches_sequential_application():
    rng = np.random.default_rng(17)
    for _ in range(200):
        conj1, conj2 = rng.uniform(size=2) < 0.5
        t1 = MobiusMap2(*(complex(*rng.normal(size=2)) for _ in range(4)), conjugate_first=bool(conj1))
        t2 = MobiusMap2(*(complex(*rng.normal(size=2)) for _ in range(4)), conjugate_first=bool(conj2))
        z = complex(*rng.normal(size=2))
        w1 = t1(z)
        if is_infinity(w1):
            continue
        seq = t2(w1)
        comp = t2.compose(t1)(z)
        if is_infinity(seq) or is_infinity(comp):
            continue
        assert comp == pytest.approx(seq, rel=1e-9, abs=1e-12)


def test_mobius_pole_and_infinity():
    t = MobiusMap2(1, 0, 1, -2)  # pole at z = 2
    assert is_infinity(t(2.0))
    assert t(INFINITY) == pytest.approx(1.0)
    rot = MobiusMap2(1j, 0, 0, 1)
    assert is_infinity(rot(INFINITY))


def test_mobius_rejects_singular_coefficients():
    with pytest.raises(DegenerateInput):
        MobiusMap2(1, 2, 2, 4)


# ---------------------------------------------------------------------------
# Euclidean constructions
# ---------------------------------------------------------------------------


def test_line_distance_example():
    # chord from (1,0) to (0,1): foot of the perpendicular is at 1/sqrt(2)
    assert line_distance_to_origin([1.0, 0.0], [0.0, 1.0]) == pytest.approx(1 / math.sqrt(2), abs=1e-15)


def test_line_distance_matches_cross_product_form():
    rng = np.random.default_rng(18)
    for _ in range(500):
        a, b = rng.normal(size=2), rng.normal(size=2)
        if np.linalg.norm(a - b) < 1e-6:
            continue
        d = line_distance_to_origin(a, b)
        alt = abs(a[0] * b[1] - a[1] * b[0]) / np.linalg.norm(a - b)
        assert d == pytest.approx(alt, abs=1e-12)


def test_line_distance_collinear_clamps_to_zero():
    assert line_distance_to_origin([0.5, 0.5], [2.0, 2.0]) == pytest.approx(0.0, abs=1e-12)


def test_orthogonal_circle_example():
    c = orthogonal_circle_through([0.0, 0.0], 1.0, [1.0, 0.0], [0.0, 1.0])
    assert isinstance(c, Circle)
    assert np.allclose(c.center, [1.0, 1.0], atol=1e-15)
    assert c.radius == pytest.approx(1.0, abs=1e-15)
    # orthogonality: |w - x|^2 = r^2 + |y - w|^2
    assert float(c.center @ c.center) == pytest.approx(1.0 + c.radius**2, abs=1e-12)


def test_orthogonal_circle_pythagoras_sweep():
    rng = np.random.default_rng(19)
    for _ in range(400):
        x = rng.normal(size=2)
        r = rng.uniform(0.2, 3.0)
        t1, t2 = rng.uniform(0, 2 * np.pi, size=2)
        if abs(math.remainder(t1 - t2, 2 * math.pi)) < 1e-2:
            continue
        y = x + r * np.array([math.cos(t1), math.sin(t1)])
        z = x + r * np.array([math.cos(t2), math.sin(t2)])
        c = orthogonal_circle_through(x, r, y, z)
        gap = float((c.center - x) @ (c.center - x)) - r * r - c.radius**2
        assert abs(gap) <= 1e-10 * max(1.0, float((c.center - x) @ (c.center - x)))


def test_orthogonal_circle_antipodal_degenerates_to_line():
    out = orthogonal_circle_through([0.0, 0.0], 1.0, [1.0, 0.0], [-1.0, 0.0])
    assert isinstance(out, Line)
    assert abs(float(out.direction @ np.array([0.0, 1.0]))) <= 1e-12


# ---------------------------------------------------------------------------
# weights and quadrature
# ---------------------------------------------------------------------------


def test_weight_values_and_domains():
    assert WeightFunction.BALL(np.zeros(2)) == pytest.approx(2.0)
    assert WeightFunction.HALF_SPACE(np.array([3.0, 0.5])) == pytest.approx(2.0)
    with pytest.raises(DomainError):
        WeightFunction.BALL(np.array([1.0, 0.0]))
    with pytest.raises(DomainError):
        WeightFunction.HALF_SPACE(np.array([0.0, -1.0]))


def test_quadrature_radial_ball_segment():
    # closed form: 2 artanh(1/2) = log 3
    s = SegmentPath(np.zeros(2), np.array([0.5, 0.0]))
    v = path_length_quadrature(s, WeightFunction.BALL, 1e-12)
    assert v == pytest.approx(math.log(3.0), abs=1e-10)


def test_quadrature_vertical_half_segment():
    s = SegmentPath(np.array([0.0, 1.0]), np.array([0.0, 2.0]))
    v = path_length_quadrature(s, WeightFunction.HALF_SPACE, 1e-12)
    assert v == pytest.approx(math.log(2.0), abs=1e-10)


def test_quadrature_half_space_arc():
    # semicircular geodesic (-1,1) -> (1,1): distance arccosh 3
    a = ArcPath(np.zeros(2), math.sqrt(2), np.array([1.0, 0.0]), np.array([0.0, 1.0]),
                3 * math.pi / 4, math.pi / 4)
    v = path_length_quadrature(a, WeightFunction.HALF_SPACE, 1e-12)
    assert v == pytest.approx(math.acosh(3.0), abs=1e-10)


def test_quadrature_additive_over_subdivision():
    tol = 1e-10
    whole = SegmentPath(np.array([0.1, 0.2]), np.array([-0.3, 0.4]))
    mid = whole.point(0.5)
    v = path_length_quadrature(whole, WeightFunction.BALL, tol)
    v1 = path_length_quadrature(SegmentPath(whole.start, mid), WeightFunction.BALL, tol)
    v2 = path_length_quadrature(SegmentPath(mid, whole.end), WeightFunction.BALL, tol)
    assert abs(v - (v1 + v2)) <= 2 * tol


def test_quadrature_cap_raises():
    s = SegmentPath(np.array([0.0, 1.0]), np.array([0.0, 2.0]))
    with pytest.raises(ConvergenceError):
        path_length_quadrature(s, WeightFunction.HALF_SPACE, 1e-14, max_splits=2)


def test_quadrature_rejects_out_of_domain_path():
    s = SegmentPath(np.zeros(2), np.array([1.5, 0.0]))
    with pytest.raises(DomainError):
        path_length_quadrature(s, WeightFunction.BALL, 1e-8)


# ---------------------------------------------------------------------------
# plane reduction
# ---------------------------------------------------------------------------


def test_plane_basis_round_trip():
    rng = np.random.default_rng(20)
    for _ in range(100):
        x, y = rng.normal(size=3), rng.normal(size=3)
        u, v = plane_basis(x, y)
        assert abs(np.linalg.norm(u) - 1) <= 1e-12
        assert abs(np.linalg.norm(v) - 1) <= 1e-12
        assert abs(float(u @ v)) <= 1e-12
        for p in (x, y):
            z = project_to_plane(p, u, v)
            assert np.allclose(embed_from_plane(z, u, v), p, atol=1e-10)


def test_plane_basis_collinear_fallback():
    x = np.array([0.2, 0.0, 0.0])
    y = np.array([-0.4, 0.0, 0.0])
    u, v = plane_basis(x, y)
    assert abs(abs(float(u @ np.array([1.0, 0.0, 0.0]))) - 1.0) <= 1e-12
    assert abs(float(u @ v)) <= 1e-12


def test_point_validation():
    with pytest.raises(DomainError):
        line_distance_to_origin([1.0], [2.0])
    with pytest.raises(DomainError):
        line_distance_to_origin([np.nan, 0.0], [1.0, 0.0])
    with pytest.raises(DomainError):
        line_distance_to_origin([1.0, 0.0], [1.0, 0.0, 0.0])
