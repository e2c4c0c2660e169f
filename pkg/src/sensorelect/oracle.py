"""Independent cross-checks: brute-force enclosing circle and symmetry group.

Nothing here touches the word machinery. The symmetry group of a finite
point set is found by testing every rotation and reflection that maps a
reference point onto a point at the same distance from the centroid (any
isometry preserving the set fixes its centroid).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .geometry import DEFAULT_TOL, Circle, Point, Tolerance, as_configuration

TWO_PI = 2.0 * math.pi


def _circumcircle(a, b, c):
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if abs(d) < 1e-300:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    x = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    y = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return x, y, math.hypot(ax - x, ay - y)


def brute_force_circle(points) -> Circle:
    """O(n^4) smallest enclosing circle over all pair-diameter and triple circumcircles."""
    xy = as_configuration(points).as_array()
    if len(xy) == 1:
        return Circle(Point(float(xy[0, 0]), float(xy[0, 1])), 0.0)
    # shift to the centroid so circumcircle arithmetic stays well conditioned
    shift = xy.mean(axis=0)
    pts = xy - shift
    scale = float(np.abs(pts).max()) or 1.0
    slack = 1e-10 * scale
    best = None

    def consider(x, y, r):
        nonlocal best
        if best is not None and r >= best[2]:
            return
        if np.all(np.hypot(pts[:, 0] - x, pts[:, 1] - y) <= r + slack):
            best = (x, y, r)

    for i, j in itertools.combinations(range(len(pts)), 2):
        a, b = pts[i], pts[j]
        x, y = (a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0
        consider(x, y, math.hypot(a[0] - x, a[1] - y))
    for i, j, k in itertools.combinations(range(len(pts)), 3):
        c = _circumcircle(pts[i], pts[j], pts[k])
        if c is not None:
            consider(*c)
    return Circle(Point(float(best[0] + shift[0]), float(best[1] + shift[1])), float(best[2]))


@dataclass(frozen=True)
class SymmetryGroup:
    center: Point
    rotations: tuple[float, ...]  # angles in [0, 2pi), identity included
    reflections: tuple[float, ...]  # axis directions in [0, pi)

    @property
    def has_rotation(self) -> bool:
        return len(self.rotations) > 1


def _matches(pts: np.ndarray, image: np.ndarray, limit: float) -> bool:
    d = np.hypot(image[:, None, 0] - pts[None, :, 0], image[:, None, 1] - pts[None, :, 1])
    nearest = d.argmin(axis=1)
    if d[np.arange(len(pts)), nearest].max() > limit:
        return False
    return len(set(nearest.tolist())) == len(pts)


def _dedupe(angles, period, eps):
    out: list[float] = []
    for a in sorted(x % period for x in angles):
        if out and a - out[-1] <= eps:
            continue
        out.append(a)
    if len(out) > 1 and out[0] + period - out[-1] <= eps:
        out.pop()
    return out


def symmetry_group_oracle(config, tol: Tolerance = DEFAULT_TOL) -> SymmetryGroup:
    xy = as_configuration(config).as_array()
    c = xy.mean(axis=0)
    pts = xy - c
    r = np.hypot(pts[:, 0], pts[:, 1])
    scale = float(r.max())
    if scale == 0.0:
        return SymmetryGroup(Point(float(c[0]), float(c[1])), (0.0,), ())
    limit = 10.0 * tol.eps * scale
    ref = int(r.argmax())
    theta = np.arctan2(pts[:, 1], pts[:, 0])
    same_shell = np.nonzero(np.abs(r - r[ref]) <= limit)[0]

    rotations, reflections = [], []
    for j in same_shell:
        phi = float(theta[j] - theta[ref])
        cs, sn = math.cos(phi), math.sin(phi)
        image = np.column_stack((cs * pts[:, 0] - sn * pts[:, 1], sn * pts[:, 0] + cs * pts[:, 1]))
        if _matches(pts, image, limit):
            rotations.append(phi % TWO_PI)
        axis = float(theta[j] + theta[ref]) / 2.0
        cs2, sn2 = math.cos(2 * axis), math.sin(2 * axis)
        image = np.column_stack((cs2 * pts[:, 0] + sn2 * pts[:, 1], sn2 * pts[:, 0] - cs2 * pts[:, 1]))
        if _matches(pts, image, limit):
            reflections.append(axis % math.pi)
    eps = 1e-7
    return SymmetryGroup(
        Point(float(c[0]), float(c[1])),
        tuple(_dedupe(rotations, TWO_PI, eps)),
        tuple(_dedupe(reflections, math.pi, eps)),
    )


def axis_has_sensor(config, group: SymmetryGroup, axis: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    xy = as_configuration(config).as_array() - np.array(group.center)
    scale = float(np.hypot(xy[:, 0], xy[:, 1]).max()) or 1.0
    off = np.abs(math.cos(axis) * xy[:, 1] - math.sin(axis) * xy[:, 0])
    return bool((off <= 10.0 * tol.eps * scale).any())


def center_occupied(config, tol: Tolerance = DEFAULT_TOL) -> bool:
    cfg = as_configuration(config)
    circle = brute_force_circle(cfg)
    xy = cfg.as_array()
    d = np.hypot(xy[:, 0] - circle.center.x, xy[:, 1] - circle.center.y)
    return bool((d <= 10.0 * tol.eps * circle.radius).any())


def decide_by_oracle(config, chirality: bool, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Group-theoretic electability: True when a leader can be agreed on."""
    cfg = as_configuration(config)
    if len(cfg) == 1 or center_occupied(cfg, tol):
        return True
    group = symmetry_group_oracle(cfg, tol)
    if group.has_rotation:
        return False
    if chirality or not group.reflections:
        return True
    return any(axis_has_sensor(cfg, group, a, tol) for a in group.reflections)
