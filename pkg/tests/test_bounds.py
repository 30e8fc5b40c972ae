"""Distance lower bounds: goldens, validity sweeps, arbitrary-precision oracle."""

import math

import mpmath
import numpy as np
import pytest

from hypapol.bounds import (
    KIND_COSH,
    KIND_RAW,
    KIND_SINH_HALF,
    KIND_TANH_HALF,
    KIND_TANH_QUARTER,
    _ball_bound_values,
    _ball_exact,
    _half_bound_values,
    _half_exact,
    ball_lower_bounds,
    chord_bound,
    chord_family_report,
    circumscribed_bound,
    half_lower_bounds,
    midpoint_bound,
    scalar_sqrt_bounds,
    symmetric_chord_bound,
)
from hypapol.core import MobiusMap2, norm
from hypapol.disk import chord_geometry, midpoint_disk, rho_ball
from hypapol.errors import DegenerateInput, DomainError
from hypapol.halfplane import rho_half


def rand_disk(rng, n=2, rmax=0.9):
    while True:
        p = rng.uniform(-rmax, rmax, size=n)
        if norm(p) < rmax:
            return p


def pair_arrays(rng, count, n, rmax):
    """Vectorized random pairs in the ball of radius rmax; returns (u, r, s)."""
    def batch():
        d = rng.normal(size=(count, n))
        d /= np.linalg.norm(d, axis=1, keepdims=True)
        return d * (rmax * rng.uniform(size=(count, 1)) ** (1.0 / n))

    xs, ys = batch(), batch()
    u = np.linalg.norm(xs - ys, axis=1)
    return u, np.linalg.norm(xs, axis=1), np.linalg.norm(ys, axis=1)


def entries_by_name(report):
    return {e.name: e for e in report.entries}


def test_scalar_golden():
    t = scalar_sqrt_bounds(0.5, 0.0)
    assert t.lhs == pytest.approx(math.sqrt(0.75), abs=1e-12)
    assert t.rhs1 == pytest.approx(0.875, abs=1e-12)
    assert t.rhs1p == pytest.approx(0.9375, abs=1e-12)
    assert t.rhs2 == pytest.approx(0.875, abs=1e-12)
    assert t.rhs3 == pytest.approx(0.875, abs=1e-12)


def test_scalar_equal_radii_equality():
    t = scalar_sqrt_bounds(0.3, 0.3)
    assert t.rhs1 == pytest.approx(t.lhs, abs=1e-14)
    assert t.lhs == pytest.approx(1.0 - 0.09, abs=1e-14)
    t = scalar_sqrt_bounds(0.0, 0.0)
    assert t.lhs == t.rhs1 == t.rhs1p == t.rhs2 == t.rhs3 == 1.0


def test_scalar_chain_sweep():
    rng = np.random.default_rng(211)
    for _ in range(2000):
        r, s = rng.uniform(0.0, 1.0, size=2) * 0.999999
        t = scalar_sqrt_bounds(r, s)
        assert t.lhs <= t.rhs1 + 1e-14
        assert t.rhs1 <= t.rhs1p + 1e-14
        assert t.lhs <= t.rhs2 + 1e-14
        assert t.lhs <= t.rhs3 + 1e-14
    with pytest.raises(DomainError):
        scalar_sqrt_bounds(1.0, 0.5)
    with pytest.raises(DomainError):
        scalar_sqrt_bounds(0.5, -0.1)


def test_basic_sqrt_inequality_grid():
    u = np.linspace(0.0, 1.0, 10000)
    assert np.all(np.sqrt(1.0 - u) <= 1.0 - 0.5 * u + 1e-14)


def test_ball_report_golden():
    rep = ball_lower_bounds([0.5, 0.0], [0.0, 0.0])
    by = entries_by_name(rep)
    assert rep.exact_rho == pytest.approx(math.log(3.0), abs=1e-13)
    tq = 2.0 - math.sqrt(3.0)
    assert by["b2"].exact_value == pytest.approx(tq, abs=1e-13)
    assert by["b2"].bound_value == pytest.approx(tq, abs=1e-12)  # equality certificate
    assert by["b2p"].bound_value == pytest.approx(0.25, abs=1e-14)
    assert by["b3"].bound_value == pytest.approx(8.0 / 31.0, abs=1e-12)
    for name in ("b4", "b4p", "b5", "b6"):
        assert by[name].bound_value == pytest.approx(4.0 / 15.0, abs=1e-12)
    assert by["b7"].bound_value == pytest.approx(0.2594437, abs=1e-7)
    assert by["b1"].kind == KIND_SINH_HALF
    assert by["b1"].bound_value == pytest.approx(0.5 / math.sqrt(0.78125), abs=1e-12)
    assert by["b1"].exact_value == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-12)
    assert all(e.slack >= -1e-12 for e in rep.entries)


def test_ball_report_coincident_pair():
    rep = ball_lower_bounds([0.3, 0.1], [0.3, 0.1])
    assert rep.exact_rho == 0.0
    for e in rep.entries:
        assert e.bound_value == 0.0


def test_b1_equality_at_equal_radii():
    rep = ball_lower_bounds([0.5, 0.0], [-0.5, 0.0])
    by = entries_by_name(rep)
    assert by["b1"].bound_value == pytest.approx(4.0 / 3.0, abs=1e-12)
    assert by["b1"].exact_value == pytest.approx(4.0 / 3.0, abs=1e-12)
    rng = np.random.default_rng(223)
    for _ in range(50):
        r = rng.uniform(0.05, 0.95)
        t1, t2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
        x = r * np.array([math.cos(t1), math.sin(t1)])
        y = r * np.array([math.cos(t2), math.sin(t2)])
        by = entries_by_name(ball_lower_bounds(x, y))
        assert abs(by["b1"].slack) <= 1e-10


def test_ball_validity_sweep_vectorized():
    rng = np.random.default_rng(227)
    for n in (2, 3):
        for rmax in (0.9, 1.0 - 1e-3, 1.0 - 1e-6):
            u, r, s = pair_arrays(rng, 20000, n, rmax)
            values = _ball_bound_values(u, r, s)
            exact = _ball_exact(u, r, s)
            for name, vals in values.items():
                kind = KIND_SINH_HALF if name == "b1" else KIND_TANH_QUARTER
                assert np.all(vals <= exact[kind] + 1e-12), name


def test_ball_kernels_match_arbitrary_precision():
    rng = np.random.default_rng(229)
    mpmath.mp.dps = 50
    one = mpmath.mpf(1)
    for _ in range(50):
        u, r, s = pair_arrays(rng, 1, 2, 0.999)
        uf, rf, sf = float(u[0]), float(r[0]), float(s[0])
        values = _ball_bound_values(uf, rf, sf)
        um, rm, sm = mpmath.mpf(uf), mpmath.mpf(rf), mpmath.mpf(sf)
        t = mpmath.sqrt(1 + (rm * sm) ** 2)
        # direct algebraic forms, not the rearranged kernels
        oracle = {
            "b1": um / mpmath.sqrt(1 + (rm**4 + sm**4) / 2 - rm**2 - sm**2),
            "b2": um / (1 + rm * sm + mpmath.sqrt(1 - rm**2) * mpmath.sqrt(1 - sm**2)),
            "b2p": um / 2,
            "b3": um / (2 - ((rm - sm) / 2) ** 2),
            "b4": um / (2 - (rm - sm) ** 2 / 2),
            "b4p": um / (2 - (rm - sm) ** 2 / (2 * (1 - rm * sm))),
            "b5": um / (1 + rm * sm + t - (rm**2 + sm**2) / (2 * t)),
            "b6": um / (2 + 2 * rm * sm - (rm + sm) ** 2 / (2 * (1 + rm * sm))),
            "b7": um / mpmath.sqrt(um**2 + 4 * mpmath.sqrt((1 - rm**2) * (1 - sm**2))),
        }
        q = um / mpmath.sqrt((1 - rm**2) * (1 - sm**2))
        tanh_quarter = q / (1 + mpmath.sqrt(1 + q**2))
        for name, val in values.items():
            assert float(val) == pytest.approx(float(oracle[name]), rel=1e-12), name
            target = q if name == "b1" else tanh_quarter
            assert oracle[name] <= target * (one + mpmath.mpf("1e-40"))


def test_chord_bound_matches_symmetrized_distance():
    rng = np.random.default_rng(233)
    checked = 0
    for _ in range(300):
        x, y = rand_disk(rng), rand_disk(rng)
        if norm(x - y) < 1e-3:
            continue
        try:
            g = chord_geometry(x, y)
        except DegenerateInput:
            continue
        value = chord_bound(x, y)
        assert value == pytest.approx(rho_ball(g.x_sym, g.y_sym), abs=1e-9)
        assert value <= rho_ball(x, y) + 1e-12
        checked += 1
    assert checked > 200


def test_chord_bound_golden_equality():
    value = chord_bound([0.5, 0.0], [0.0, 0.5])
    assert value == pytest.approx(2.0 * math.asinh(math.sqrt(0.5) / 0.75), abs=1e-12)
    assert value == pytest.approx(rho_ball([0.5, 0.0], [0.0, 0.5]), abs=1e-12)


def test_chord_bound_equality_at_equal_radii():
    rng = np.random.default_rng(239)
    for _ in range(60):
        r = rng.uniform(0.1, 0.9)
        t1 = rng.uniform(0.0, 2.0 * math.pi)
        t2 = t1 + rng.uniform(0.2, 2.0)
        x = r * np.array([math.cos(t1), math.sin(t1)])
        y = r * np.array([math.cos(t2), math.sin(t2)])
        assert chord_bound(x, y) == pytest.approx(rho_ball(x, y), abs=1e-10)


def test_chord_bound_strict_for_asymmetric_pair():
    x = np.array([0.5, 0.0])
    g = chord_geometry([0.5, 0.0], [0.0, 0.5])
    # slide y along the same carrier away from the symmetric position
    a, r = g.center, g.radius
    phi = math.atan2(-a[1], -a[0]) + 0.35
    y = a + r * np.array([math.cos(phi), math.sin(phi)])
    assert norm(y) < 1.0
    assert abs(norm(x) - norm(y)) > 1e-3
    assert rho_ball(x, y) - chord_bound(x, y) > 1e-6


def test_chord_bound_crosscheck_artanh_form():
    rng = np.random.default_rng(241)
    for _ in range(200):
        x, y = rand_disk(rng), rand_disk(rng)
        if norm(x - y) < 1e-3:
            continue
        try:
            g = chord_geometry(x, y)
        except DegenerateInput:
            continue
        value = chord_bound(x, y)
        arg = (g.radius + math.sqrt(1.0 + g.radius**2)) * math.tan(0.5 * g.apex_angle)
        assert value == pytest.approx(4.0 * math.atanh(arg), abs=1e-9)


def test_chord_bound_collinear_raises():
    with pytest.raises(DegenerateInput):
        chord_bound([0.5, 0.0], [-0.25, 0.0])


def test_circumscribed_golden():
    value = circumscribed_bound([0.5, 0.0], [0.0, 0.5])
    assert value == pytest.approx(0.3848775128, abs=1e-9)
    rho = rho_ball([0.5, 0.0], [0.0, 0.5])
    assert value <= math.tanh(0.25 * rho) + 1e-12


def test_circumscribed_validity_sweep():
    rng = np.random.default_rng(251)
    checked = 0
    for _ in range(1500):
        x, y = rand_disk(rng, rmax=0.95), rand_disk(rng, rmax=0.95)
        if norm(x - y) < 1e-4:
            continue
        try:
            value = circumscribed_bound(x, y)
        except DegenerateInput:
            continue
        assert value <= math.tanh(0.25 * rho_ball(x, y)) + 1e-12
        checked += 1
    assert checked > 1000


def test_circumscribed_short_pair_limit():
    x = np.array([0.3, 0.2])
    y = x + np.array([1e-6, -0.5e-6])
    assert abs(circumscribed_bound(x, y)) < 1e-5
    with pytest.raises(DegenerateInput):
        circumscribed_bound([0.5, 0.0], [-0.25, 0.0])


def test_midpoint_bound_golden():
    value = midpoint_bound([0.8, 0.0], [0.0, 0.0])
    assert value == pytest.approx(0.5, abs=1e-12)
    rho = rho_ball([0.8, 0.0], [0.0, 0.0])
    assert math.tanh(0.5 * rho) == pytest.approx(0.8, abs=1e-13)


def test_midpoint_bound_validity_sweep():
    rng = np.random.default_rng(257)
    for _ in range(2000):
        x, y = rand_disk(rng, rmax=0.95), rand_disk(rng, rmax=0.95)
        if norm(x - y) < 1e-4:
            continue
        value = midpoint_bound(x, y)
        assert value <= math.tanh(0.5 * rho_ball(x, y)) + 1e-12


def test_midpoint_bound_antipodal_limit():
    x = np.array([0.4, 0.3])
    assert midpoint_bound(x, -x) == pytest.approx(norm(x), abs=1e-14)


def _pushed_pair(z0, t=0.3):
    push = MobiusMap2(a=1.0, b=z0, c=z0, d=1.0)  # 0 -> z0, hyperbolic translation
    zx, zy = push(complex(t, 0.0)), push(complex(-t, 0.0))
    return np.array([zx.real, zx.imag]), np.array([zy.real, zy.imag])


def test_midpoint_bound_branch_agreement():
    # pair whose hyperbolic midpoint sits exactly at norm 1e-4, the branch cutoff
    x, y = _pushed_pair(1e-4)
    z = midpoint_disk(x, y)
    assert norm(z) == pytest.approx(1e-4, rel=1e-10)
    u = norm(x - y)
    m = float(z @ z)
    rational = u / ((1.0 - m) + math.sqrt((1.0 - m) ** 2 + m * u * u))
    assert abs(midpoint_bound(x, y) - rational) < 1e-6
    assert abs(midpoint_bound(x, y) - 0.5 * u) < 1e-6  # both branches agree here


def test_midpoint_bound_small_branch_exact():
    # midpoint norm strictly inside the cutoff: the u/2 branch runs
    x, y = _pushed_pair(0.5e-4)
    u = norm(x - y)
    assert midpoint_bound(x, y) == 0.5 * u


def test_symmetric_chord_golden_and_dominance():
    value = symmetric_chord_bound([0.5, 0.0], [0.0, 0.5])
    assert value == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-12)
    rng = np.random.default_rng(263)
    for _ in range(300):
        x, y = rand_disk(rng), rand_disk(rng)
        if norm(x - y) < 1e-3:
            continue
        try:
            weak = symmetric_chord_bound(x, y)
        except DegenerateInput:
            continue
        assert weak <= math.sinh(0.5 * rho_ball(x, y)) + 1e-12
        assert weak <= math.sinh(0.5 * chord_bound(x, y)) + 1e-12


def test_chord_family_report_generic():
    rep = chord_family_report([0.5, 0.0], [0.1, 0.4])
    assert {e.name for e in rep.entries} == {"chord", "circumscribed", "midpoint", "symmetric_chord"}
    kinds = {e.name: e.kind for e in rep.entries}
    assert kinds["chord"] == KIND_RAW
    assert kinds["circumscribed"] == KIND_TANH_QUARTER
    assert kinds["midpoint"] == KIND_TANH_HALF
    assert kinds["symmetric_chord"] == KIND_SINH_HALF
    for e in rep.entries:
        assert e.applicable
        assert e.slack >= -1e-12


def test_chord_family_report_collinear_fallback():
    rep = chord_family_report([0.5, 0.0], [-0.25, 0.0])
    by = entries_by_name(rep)
    for name in ("chord", "circumscribed", "symmetric_chord"):
        assert not by[name].applicable
        assert by[name].reason == "collinear carrier"
        assert by[name].bound_value == pytest.approx(by[name].exact_value, abs=1e-14)
    assert by["midpoint"].applicable
    with pytest.raises(DegenerateInput):
        chord_family_report([0.2, 0.1], [0.2, 0.1])


def test_half_report_vertical_golden():
    rep = half_lower_bounds([0.0, 1.0], [0.0, 2.0])
    by = entries_by_name(rep)
    assert rep.exact_rho == pytest.approx(math.log(2.0), abs=1e-13)
    assert by["h1"].exact_value == pytest.approx(1.25, abs=1e-13)
    assert by["h1"].bound_value == pytest.approx(1.2, abs=1e-13)
    assert by["h2"].bound_value == pytest.approx(1.0, abs=1e-14)
    assert by["h3"].bound_value == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)), abs=1e-13)
    assert abs(by["h3"].slack) <= 1e-13  # equality when horizontal gap is zero
    assert by["h3p"].bound_value == pytest.approx(0.0, abs=1e-14)
    assert rep.h2_beats_h1 is False


def test_half_report_horizontal_golden():
    rep = half_lower_bounds([-1.0, 1.0], [1.0, 1.0])
    by = entries_by_name(rep)
    assert by["h1"].exact_value == pytest.approx(3.0, abs=1e-13)
    assert by["h1"].bound_value == pytest.approx(3.0, abs=1e-13)
    assert by["h2"].bound_value == pytest.approx(3.0, abs=1e-13)
    assert by["h3"].bound_value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-13)
    assert by["h3p"].bound_value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-13)
    assert by["h3"].exact_value == pytest.approx(1.0, abs=1e-13)
    assert rep.h2_beats_h1 is True


def test_half_report_coincident_pair():
    rep = half_lower_bounds([0.4, 0.7], [0.4, 0.7])
    by = entries_by_name(rep)
    assert by["h1"].bound_value == 1.0
    assert by["h2"].bound_value == 1.0
    assert by["h3"].bound_value == 0.0
    assert by["h3p"].bound_value == 0.0


def test_half_validity_sweep_vectorized():
    rng = np.random.default_rng(269)
    for _ in range(3):
        count = 20000
        c = np.abs(rng.normal(scale=2.0, size=count))
        a = rng.uniform(1e-3, 5.0, size=count)
        b = rng.uniform(1e-3, 5.0, size=count)
        values = _half_bound_values(c, a, b)
        exact = _half_exact(c, a, b)
        assert np.all(values["h1"] <= exact[KIND_COSH] + 1e-12)
        assert np.all(values["h2"] <= exact[KIND_COSH] + 1e-12)
        assert np.all(values["h3"] <= exact[KIND_SINH_HALF] + 1e-12)
        assert np.all(values["h3p"] <= exact[KIND_SINH_HALF] + 1e-12)
        assert np.all(values["h3"] >= values["h3p"] - 1e-15)


def test_half_kernels_match_arbitrary_precision():
    rng = np.random.default_rng(271)
    mpmath.mp.dps = 50
    for _ in range(50):
        c = abs(float(rng.normal(scale=2.0)))
        a, b = (float(v) for v in rng.uniform(0.01, 5.0, size=2))
        values = _half_bound_values(c, a, b)
        cm, am, bm = mpmath.mpf(c), mpmath.mpf(a), mpmath.mpf(b)
        inner = 1 - 4 * am * bm / ((am + bm) ** 2 + cm**2)
        oracle = {
            "h1": 1 + (cm**2 + (am - bm) ** 2) / (am**2 + bm**2),
            "h2": 1 + 2 * cm**2 / (am + bm) ** 2,
            "h3": (am + bm) / (2 * mpmath.sqrt(am * bm)) * mpmath.sqrt(inner),
            "h3p": (am + bm) * cm / (2 * mpmath.sqrt(am * bm) * mpmath.sqrt((am + bm) ** 2 + cm**2)),
        }
        for name, val in values.items():
            assert float(val) == pytest.approx(float(oracle[name]), rel=1e-12), name


def test_half_comparison_condition():
    rng = np.random.default_rng(277)
    for _ in range(2000):
        c = abs(float(rng.normal(scale=2.0)))
        a, b = (float(v) for v in rng.uniform(0.05, 3.0, size=2))
        if abs(a + b - c) < 1e-12:
            continue
        values = _half_bound_values(c, a, b)
        if abs(float(values["h2"]) - float(values["h1"])) < 1e-12:
            continue
        assert (float(values["h2"]) > float(values["h1"])) == (a + b < c)


def test_half_equality_certificates():
    rng = np.random.default_rng(281)
    for _ in range(50):
        a = float(rng.uniform(0.1, 3.0))
        c = float(rng.uniform(0.1, 3.0))
        by = entries_by_name(half_lower_bounds([0.0, a], [c, a]))
        assert abs(by["h1"].slack) <= 1e-12  # equal heights
        b = float(rng.uniform(0.1, 3.0))
        by = entries_by_name(half_lower_bounds([1.5, a], [1.5, b]))
        assert abs(by["h3"].slack) <= 1e-12  # vertical pair


def test_remark_ordering_subchains_and_counterexample():
    rng = np.random.default_rng(283)
    u, r, s = pair_arrays(rng, 30000, 2, 0.999)
    values = _ball_bound_values(u, r, s)
    assert np.all(values["b6"] <= values["b5"] + 1e-14)
    assert np.all(values["b3"] <= values["b2"] + 1e-14)
    at = _ball_bound_values(0.5, 0.5, 0.0)
    assert float(at["b5"]) == pytest.approx(0.2666667, abs=1e-6)
    assert float(at["b3"]) == pytest.approx(0.2580645, abs=1e-6)
    assert float(at["b5"]) > float(at["b3"])  # the full chain b6<=b5<=b3<=b2 fails here


def test_domain_errors():
    with pytest.raises(DomainError):
        ball_lower_bounds([1.0, 0.0], [0.0, 0.0])
    with pytest.raises(DomainError):
        half_lower_bounds([0.0, 0.0], [0.0, 1.0])
