"""Command-line front end: compute, verify, and render.

Each run prints one self-describing document: inputs echoed at full
precision, then outputs.  Text mode is key/value lines plus simple
tables; --json emits the same data as a single JSON object.  No color
is ever emitted, so NO_COLOR needs no special handling.

Exit codes: 0 success, 1 domain or verification failure (with a
machine-readable ``error`` field where applicable), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import ball_lower_bounds, half_lower_bounds
from .core import is_infinity
from .disk import (
    ball_to_euclidean,
    bisector_disk,
    geodesic_disk,
    midpoint_disk,
    rho_ball,
)
from .errors import GeometryError
from .halfplane import (
    ball_half_to_euclidean,
    bisector_half,
    geodesic_half,
    midpoint_half,
    rho_half,
)
from .render import bisect_scene, empty_scene, half_midpoint_scene, render_svg
from .verify import DEFAULT_SAMPLES, DEFAULT_SEED, run_verify, suite_names

EQUALITY_FLAG_TOL = 1e-10

_ARITY = {
    "dist": (2,),
    "midpoint": (2,),
    "geodesic": (2,),
    "bisect": (2,),
    "ball": (1,),
    "bounds": (2,),
    "verify": (0,),
    "render": (0, 2),
}


class MalformedRequest(ValueError):
    """Raised before dispatch when the request cannot be interpreted."""


@dataclass(frozen=True)
class Request:
    command: str
    model: str = "ball"
    dim: int = 2
    points: tuple[np.ndarray, ...] = ()
    samples: int | None = None
    seed: int = DEFAULT_SEED
    tol: float | None = None
    as_json: bool = False
    svg_path: str | None = None
    suite: str = "all"
    radius: float | None = None


# ---------------------------------------------------------------------------
# request construction
# ---------------------------------------------------------------------------


def parse_points(text: str, dim: int) -> tuple[np.ndarray, ...]:
    """Parse "(a,b);(c,d)" into arrays; full-precision decimals round-trip."""
    if not text.strip():
        return ()
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise MalformedRequest("point %r is not of the form (a, b)" % chunk)
        try:
            coords = tuple(float(c) for c in chunk[1:-1].split(","))
        except ValueError:
            raise MalformedRequest("point %r has a non-numeric coordinate" % chunk)
        if len(coords) != dim:
            raise MalformedRequest(
                "point %r has %d coordinates, expected %d" % (chunk, len(coords), dim)
            )
        points.append(np.array(coords, dtype=float))
    return tuple(points)


def request_from_args(ns: argparse.Namespace) -> Request:
    if ns.dim < 2:
        raise MalformedRequest("dimension must be at least 2")
    points = parse_points(ns.points, ns.dim)
    if len(points) not in _ARITY[ns.command]:
        raise MalformedRequest(
            "command %s takes %s points, got %d"
            % (ns.command, " or ".join(map(str, _ARITY[ns.command])), len(points))
        )
    if ns.command == "verify" and ns.suite != "all" and ns.suite not in suite_names():
        raise MalformedRequest(
            "unknown suite %r; expected all or one of %s" % (ns.suite, ", ".join(suite_names()))
        )
    if ns.command == "render" and ns.svg_path is None:
        raise MalformedRequest("render needs --svg PATH")
    if ns.command == "ball" and ns.radius is None:
        raise MalformedRequest("ball needs --radius R")
    if ns.samples is not None and ns.samples < 1:
        raise MalformedRequest("samples must be positive")
    return Request(
        command=ns.command,
        model=ns.model,
        dim=ns.dim,
        points=points,
        samples=ns.samples,
        seed=ns.seed,
        tol=ns.tol,
        as_json=ns.as_json,
        svg_path=ns.svg_path,
        suite=ns.suite,
        radius=ns.radius,
    )


# ---------------------------------------------------------------------------
# output document
# ---------------------------------------------------------------------------


def _format_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, np.ndarray):
        return "(" + ", ".join(repr(float(c)) for c in v) + ")"
    if is_infinity(v):
        return "infinity"
    return str(v)


def _to_text(data: dict) -> str:
    lines = []
    for key, v in data.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append("table: %s" % key)
            cols = list(v[0].keys())
            lines.append("  " + " ".join(cols))
            for row in v:
                lines.append("  " + " ".join(_format_value(row[c]) for c in cols))
        elif isinstance(v, list):
            for i, item in enumerate(v):
                lines.append("%s[%d]: %s" % (key, i, _format_value(item)))
        else:
            lines.append("%s: %s" % (key, _format_value(v)))
    return "\n".join(lines) + "\n"


def _jsonable(v):
    if isinstance(v, np.ndarray):
        return [float(c) for c in v]
    if isinstance(v, dict):
        return {k: _jsonable(item) for k, item in v.items()}
    if isinstance(v, list):
        return [_jsonable(item) for item in v]
    if is_infinity(v):
        return "infinity"
    return v


def _emit(data: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(_jsonable(data), indent=2, sort_keys=True) + "\n"
    return _to_text(data)


def _curve_fields(data: dict, prefix: str, curve) -> None:
    if hasattr(curve, "radius"):
        data[prefix + "_kind"] = "circle"
        data[prefix + "_center"] = curve.center
        data[prefix + "_radius"] = float(curve.radius)
    else:
        data[prefix + "_kind"] = "line"
        data[prefix + "_anchor"] = curve.point
        data[prefix + "_direction"] = curve.direction


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _cmd_dist(req: Request, data: dict) -> int:
    x, y = req.points
    rho = rho_ball(x, y) if req.model == "ball" else rho_half(x, y)
    data["value"] = float(rho)
    return 0


def _cmd_midpoint(req: Request, data: dict) -> int:
    x, y = req.points
    if req.model == "ball":
        z = midpoint_disk(x, y)
        rho = rho_ball
    else:
        z = midpoint_half(x, y)
        rho = rho_half
    data["midpoint"] = z
    data["dist_to_first"] = float(rho(x, z))
    data["dist_to_second"] = float(rho(y, z))
    return 0


def _cmd_geodesic(req: Request, data: dict) -> int:
    x, y = req.points
    g = geodesic_disk(x, y) if req.model == "ball" else geodesic_half(x, y)
    _curve_fields(data, "carrier", g.carrier)
    data["ideal"] = [g.ideal_x, g.ideal_y]
    return 0


def _cmd_bisect(req: Request, data: dict) -> int:
    x, y = req.points
    if req.model == "ball":
        curve = bisector_disk(x, y)
        z = midpoint_disk(x, y)
    else:
        curve = bisector_half(x, y)
        z = midpoint_half(x, y)
    _curve_fields(data, "bisector", curve)
    data["midpoint"] = z
    return 0


def _cmd_ball(req: Request, data: dict) -> int:
    (x,) = req.points
    data["hyperbolic_radius"] = float(req.radius)
    if req.model == "ball":
        view = ball_to_euclidean(x, req.radius)
        data["center"] = view.euclidean_center
        data["radius"] = float(view.euclidean_radius)
    else:
        circle = ball_half_to_euclidean(x, req.radius)
        data["center"] = circle.center
        data["radius"] = float(circle.radius)
    return 0


def _cmd_bounds(req: Request, data: dict) -> int:
    x, y = req.points
    report = ball_lower_bounds(x, y) if req.model == "ball" else half_lower_bounds(x, y)
    tol = req.tol if req.tol is not None else EQUALITY_FLAG_TOL
    data["exact_rho"] = float(report.exact_rho)
    data["bounds"] = [
        {
            "name": e.name,
            "kind": e.kind,
            "bound": float(e.bound_value),
            "exact": float(e.exact_value),
            "slack": float(e.slack),
            "equal": bool(abs(e.slack) <= tol),
        }
        for e in report.entries
    ]
    if report.h2_beats_h1 is not None:
        data["h2_beats_h1"] = bool(report.h2_beats_h1)
    return 0


def _cmd_verify(req: Request, data: dict) -> int:
    samples = req.samples if req.samples is not None else DEFAULT_SAMPLES
    data["suite"] = req.suite
    data["samples"] = samples
    data["seed"] = req.seed
    results = run_verify(req.suite, samples, req.seed)
    data["suites"] = [
        {
            "name": r.name,
            "checks": r.checks,
            "failures": r.failures,
            "worst": float(r.worst),
            "status": "pass" if r.passed else "fail",
        }
        for r in results
    ]
    notes = []
    for r in results:
        notes.extend("%s: %s" % (r.name, note) for note in r.notes)
    if notes:
        data["note"] = notes
    ok = all(r.passed for r in results)
    data["status"] = "pass" if ok else "fail"
    return 0 if ok else 1


def _cmd_render(req: Request, data: dict) -> int:
    if not req.points:
        scene = empty_scene(req.model)
    elif req.model == "ball":
        scene = bisect_scene(*req.points)
    else:
        scene = half_midpoint_scene(*req.points)
    render_svg(scene, req.svg_path)
    data["svg"] = req.svg_path
    data["objects"] = len(scene.curves) + len(scene.arcs) + len(scene.points)
    return 0


_HANDLERS = {
    "dist": _cmd_dist,
    "midpoint": _cmd_midpoint,
    "geodesic": _cmd_geodesic,
    "bisect": _cmd_bisect,
    "ball": _cmd_ball,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(req: Request) -> tuple[str, int]:
    """Dispatch a request; returns the printed document and the exit code."""
    data: dict = {"command": req.command, "model": req.model, "dim": req.dim}
    if req.points:
        data["point"] = list(req.points)
    try:
        code = _HANDLERS[req.command](req, data)
    except GeometryError as exc:
        doc = {
            "command": req.command,
            "error": type(exc).__name__,
            "message": str(exc),
        }
        return _emit(doc, req.as_json), 1
    except OSError as exc:
        doc = {"command": req.command, "error": "IoError", "message": str(exc)}
        return _emit(doc, req.as_json), 1
    return _emit(data, req.as_json), code


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=("ball", "half"), default="ball")
    common.add_argument("--dim", type=int, default=2)
    common.add_argument("--points", default="", help='e.g. "(0.5,0);(0,0.5)"')
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--json", action="store_true", dest="as_json")
    common.add_argument("--svg", default=None, dest="svg_path", metavar="PATH")
    common.add_argument("--suite", default="all")
    common.add_argument("--radius", type=float, default=None)
    parser = argparse.ArgumentParser(
        prog="hypapol",
        description="Hyperbolic distances, geodesics, midpoints and bounds "
        "in the unit ball and upper half-space.",
    )
    subs = parser.add_subparsers(dest="command", required=True)
    for name, text in (
        ("dist", "hyperbolic distance between two points"),
        ("midpoint", "hyperbolic midpoint of two points"),
        ("geodesic", "carrier circle or line through two points"),
        ("bisect", "perpendicular bisector of two points"),
        ("ball", "metric ball as a Euclidean sphere (needs --radius)"),
        ("bounds", "lower bounds for the distance with slacks"),
        ("verify", "run seeded invariant sweeps"),
        ("render", "draw the construction to an SVG file (needs --svg)"),
    ):
        subs.add_parser(name, parents=[common], help=text)
    return parser


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        req = request_from_args(ns)
    except MalformedRequest as exc:
        doc = {"command": ns.command, "error": "MalformedRequest", "message": str(exc)}
        sys.stdout.write(_emit(doc, ns.as_json))
        return 2
    text, code = run(req)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
