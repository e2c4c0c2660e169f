"""Planar geometry: configurations, smallest enclosing circle, radial decomposition.

Every equality test on geometric quantities goes through a :class:`Tolerance`
and is made on values normalized by the radius of the smallest enclosing
circle, so the results do not depend on the unit of measure a sensor uses.
Comparisons are approximate; pathological near-ties (two sensors whose
angular separation about the center is close to the tolerance) can flip
which radius they are assigned to.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

TWO_PI = 2.0 * math.pi

# Seed for the move-to-front permutation; fixed so reports are bit-stable.
SEC_SEED = 0x5EC


class DegenerateInput(ValueError):
    """The input cannot be treated as a configuration of distinct sensors."""


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Tolerance:
    """Absolute and relative slack for comparisons of normalized quantities.

    Quantities compared under a tolerance are distances divided by the
    enclosing radius and angles in radians, so they are of order one.
    """

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if not (self.abs >= 0 and self.rel >= 0):
            raise ValueError("tolerances must be non-negative")

    @property
    def eps(self) -> float:
        # slack for unit-scale quantities
        return self.abs + self.rel

    def close(self, a: float, b: float) -> bool:
        return abs(a - b) <= self.abs + self.rel * max(abs(a), abs(b))


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Configuration:
    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) == 0:
            raise DegenerateInput("a configuration needs at least one point")
        for i, p in enumerate(self.points):
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise DegenerateInput(f"point {i} is not finite: {tuple(p)}")

    @classmethod
    def from_points(cls, points: Iterable[Sequence[float]]) -> "Configuration":
        pts = []
        for i, p in enumerate(points):
            if len(p) != 2:
                raise DegenerateInput(f"point {i} must have two coordinates")
            pts.append(Point(float(p[0]), float(p[1])))
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float).reshape(-1, 2)


def as_configuration(config) -> Configuration:
    if isinstance(config, Configuration):
        return config
    return Configuration.from_points(config)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def contains(self, p, slack: float = 0.0) -> bool:
        return math.hypot(p[0] - self.center.x, p[1] - self.center.y) <= self.radius + slack


# ---------------------------------------------------------------------------
# Smallest enclosing circle

def _circle_two(a, b) -> tuple[float, float, float]:
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return cx, cy, r


def _circle_three(a, b, c) -> Optional[tuple[float, float, float]]:
    # Circumcircle, computed relative to the bounding box midpoint for accuracy.
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    a2, b2, c2 = ax * ax + ay * ay, bx * bx + by * by, cx * cx + cy * cy
    x = ox + (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    y = oy + (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    r = max(math.hypot(x - p[0], y - p[1]) for p in (a, b, c))
    return x, y, r


def _inside(c, p) -> bool:
    return math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * (1.0 + 1e-14) + 1e-300


def _cross(px, py, qx, qy, rx, ry) -> float:
    return (qx - px) * (ry - py) - (qy - py) * (rx - px)


def _circle_with_two(points, p, q):
    # Smallest circle with p and q on its boundary enclosing `points`.
    base = _circle_two(p, q)
    left = right = None
    px, py = p
    qx, qy = q
    for r in points:
        if _inside(base, r):
            continue
        side = _cross(px, py, qx, qy, r[0], r[1])
        c = _circle_three(p, q, r)
        if c is None:
            continue
        offset = _cross(px, py, qx, qy, c[0], c[1])
        if side > 0.0 and (left is None or offset > _cross(px, py, qx, qy, left[0], left[1])):
            left = c
        elif side < 0.0 and (right is None or offset < _cross(px, py, qx, qy, right[0], right[1])):
            right = c
    if left is None and right is None:
        return base
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _circle_with_one(points, p):
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(points):
        if not _inside(c, q):
            if c[2] == 0.0:
                c = _circle_two(p, q)
            else:
                c = _circle_with_two(points[: i + 1], p, q)
    return c


def smallest_enclosing_circle(config) -> Circle:
    """Minimal-radius circle containing every point of the configuration.

    Move-to-front incremental construction over a permutation drawn from a
    fixed seed after sorting the input, so repeated calls (and calls on the
    same set listed in another order) take the same path.
    """
    config = as_configuration(config)
    pts = sorted(set((p.x, p.y) for p in config.points))
    random.Random(SEC_SEED).shuffle(pts)
    c = None
    for i, p in enumerate(pts):
        if c is None or not _inside(c, p):
            c = _circle_with_one(pts[: i + 1], p)
    return Circle(Point(c[0], c[1]), c[2])


# ---------------------------------------------------------------------------
# Radial decomposition

@dataclass(frozen=True)
class RadiusSensor:
    index: int
    distance: float  # from the center, in configuration units


@dataclass(frozen=True)
class Radius:
    direction: Point  # unit vector from the center
    angle: float  # polar angle of `direction` in [0, 2pi)
    sensors: tuple[RadiusSensor, ...]  # sorted by increasing distance

    @property
    def nearest(self) -> RadiusSensor:
        return self.sensors[0]


@dataclass(frozen=True)
class RadialDecomposition:
    config: Configuration
    circle: Circle
    center_sensor: Optional[int]
    radii: tuple[Radius, ...]  # counterclockwise order
    angles_ccw: tuple[float, ...]  # angles_ccw[i]: radii[i] -> radii[i+1], counterclockwise

    @property
    def sigma(self) -> float:
        return self.circle.radius

    def angle_to_successor(self, i: int, clockwise: bool) -> float:
        k = len(self.radii)
        return self.angles_ccw[(i - 1) % k] if clockwise else self.angles_ccw[i % k]


def check_distinct(config: Configuration, scale: float, tol: Tolerance = DEFAULT_TOL) -> None:
    xy = config.as_array()
    n = len(xy)
    if n < 2:
        return
    diff = xy[:, None, :] - xy[None, :, :]
    dist = np.hypot(diff[..., 0], diff[..., 1])
    dist[np.arange(n), np.arange(n)] = np.inf
    limit = tol.eps * scale
    if scale == 0.0 or dist.min() <= limit:
        i, j = np.unravel_index(np.argmin(dist), dist.shape)
        raise DegenerateInput(f"points {min(i, j)} and {max(i, j)} coincide within tolerance")


def decompose(config, tol: Tolerance = DEFAULT_TOL) -> RadialDecomposition:
    """Split the sensors into the one at the circle center (if any) and radii."""
    config = as_configuration(config)
    circle = smallest_enclosing_circle(config)
    sigma = circle.radius
    n = len(config)
    if n == 1:
        return RadialDecomposition(config, circle, 0, (), ())
    check_distinct(config, sigma, tol)

    ox, oy = circle.center
    center_sensor = None
    polar = []
    for i, p in enumerate(config.points):
        dx, dy = p.x - ox, p.y - oy
        d = math.hypot(dx, dy)
        if d <= tol.eps * sigma:
            center_sensor = i
            continue
        polar.append((math.atan2(dy, dx) % TWO_PI, d, i, dx, dy))
    polar.sort()

    # single-linkage clustering of polar angles, including across the 0/2pi seam
    clusters: list[list[tuple]] = []
    for item in polar:
        if clusters and item[0] - clusters[-1][-1][0] <= tol.eps:
            clusters[-1].append(item)
        else:
            clusters.append([item])
    if len(clusters) > 1 and clusters[0][0][0] + TWO_PI - clusters[-1][-1][0] <= tol.eps:
        clusters[0] = clusters.pop() + clusters[0]

    radii = []
    for members in clusters:
        far = max(members, key=lambda m: m[1])
        ux, uy = far[3] / far[1], far[4] / far[1]
        sensors = tuple(RadiusSensor(m[2], m[1]) for m in sorted(members, key=lambda m: (m[1], m[2])))
        radii.append(Radius(Point(ux, uy), math.atan2(uy, ux) % TWO_PI, sensors))
    radii.sort(key=lambda r: r.angle)

    k = len(radii)
    if k == 1:
        angles = (TWO_PI,)
    else:
        angles = tuple((radii[(i + 1) % k].angle - radii[i].angle) % TWO_PI for i in range(k))
    return RadialDecomposition(config, circle, center_sensor, tuple(radii), angles)


# ---------------------------------------------------------------------------
# Local frames

@dataclass(frozen=True)
class LocalFrame:
    """Similarity transform standing for one sensor's private coordinate system.

    A global point is mapped by reflecting across the x axis (when
    ``reflected``), rotating by ``rotation``, scaling, then translating.
    """

    rotation: float = 0.0
    scale: float = 1.0
    translation: tuple[float, float] = (0.0, 0.0)
    reflected: bool = False

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError("frame scale must be positive")

    def forward(self, p) -> Point:
        x, y = float(p[0]), float(p[1])
        if self.reflected:
            y = -y
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        x, y = c * x - s * y, s * x + c * y
        return Point(self.scale * x + self.translation[0], self.scale * y + self.translation[1])

    def inverse(self, p) -> Point:
        x = (float(p[0]) - self.translation[0]) / self.scale
        y = (float(p[1]) - self.translation[1]) / self.scale
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        x, y = c * x + s * y, -s * x + c * y
        if self.reflected:
            y = -y
        return Point(x, y)


IDENTITY_FRAME = LocalFrame()


def apply_frame(frame: LocalFrame, config) -> Configuration:
    config = as_configuration(config)
    return Configuration(tuple(frame.forward(p) for p in config.points))
