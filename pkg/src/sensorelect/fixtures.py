"""Concrete configurations: reconstructions of the classic figures and random families.

Figure reconstructions place the circle center at the origin with radius 1.
Their point order is fixed and documented so tests can name the sensors.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .geometry import DEFAULT_TOL, Configuration, Point, Tolerance, smallest_enclosing_circle


def _polar(angle_deg: float, dist: float) -> tuple[float, float]:
    a = math.radians(angle_deg)
    return dist * math.cos(a), dist * math.sin(a)


def ngon(n: int, radius: float = 1.0, phase: float = 0.0) -> Configuration:
    if n < 1:
        raise ValueError("ngon needs n >= 1")
    return Configuration.from_points(
        (radius * math.cos(phase + 2 * math.pi * i / n), radius * math.sin(phase + 2 * math.pi * i / n))
        for i in range(n))


def arrow() -> Configuration:
    """Arrow pointing up: tip, two shaft sensors, tail, two wings (mirror axis x = 0)."""
    return Configuration.from_points([
        (0.0, 1.0), (0.0, 0.3), (0.0, -0.4), (0.0, -1.0), (-0.5, 0.5), (0.5, 0.5),
    ])


# Figure with one single-sensor radius r1 and two two-sensor radii r2, r3.
# Clockwise angles: r1 -> r2 is beta (130), r2 -> r3 is alpha (100), r3 -> r1 is beta.
# Points: 0 on r1; 1, 2 on r2 (inner first); 3, 4 on r3.
FIG3_RADII = {"r1": (0,), "r2": (1, 2), "r3": (3, 4)}


def fig3() -> Configuration:
    return Configuration.from_points([
        _polar(90, 1.0),
        _polar(-40, 0.3), _polar(-40, 1.0),
        _polar(-140, 0.3), _polar(-140, 1.0),
    ])


# Four radii at right angles; opposite radii carry equal words (rotation by pi).
# Points: 0 at 0 deg, 1, 2 at 90 deg, 3 at 180 deg, 4, 5 at 270 deg.
def fig4() -> Configuration:
    return Configuration.from_points([
        _polar(0, 1.0),
        _polar(90, 0.4), _polar(90, 0.9),
        _polar(180, 1.0),
        _polar(270, 0.4), _polar(270, 0.9),
    ])


# Same radius words as fig3 but three distinct clockwise angles:
# r1 -> r2 alpha (100), r2 -> r3 gamma (140), r3 -> r1 beta (120).
FIG5_RADII = {"r1": (0,), "r2": (1, 2), "r3": (3, 4)}


def fig5() -> Configuration:
    return Configuration.from_points([
        _polar(90, 1.0),
        _polar(-10, 0.3), _polar(-10, 1.0),
        _polar(-150, 0.3), _polar(-150, 1.0),
    ])


def mirror_no_axis() -> Configuration:
    """Symmetric about the x axis, no sensor on it, no rotational symmetry; n = 6."""
    return Configuration.from_points([
        _polar(15, 1.0), _polar(-15, 1.0),
        _polar(110, 1.0), _polar(-110, 1.0),
        _polar(50, 0.5), _polar(-50, 0.5),
    ])


def center_example() -> Configuration:
    return Configuration.from_points([(0.0, 0.0), (1.0, 0.0), (-1.0, 0.0)])


FIGURES = {
    "arrow": arrow,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "mirror-no-axis": mirror_no_axis,
    "center": center_example,
}


# ---------------------------------------------------------------------------
# Random families

def _well_separated(xy: np.ndarray, min_sep: float) -> bool:
    if len(xy) < 2:
        return True
    d = np.hypot(xy[:, None, 0] - xy[None, :, 0], xy[:, None, 1] - xy[None, :, 1])
    d[np.arange(len(xy)), np.arange(len(xy))] = np.inf
    return bool(d.min() >= min_sep)


def _accept(points, min_sep: float = 1e-3) -> Optional[Configuration]:
    xy = np.asarray(points, dtype=float).reshape(-1, 2)
    if not _well_separated(xy, min_sep):
        return None
    return Configuration.from_points(xy.tolist())


def _retry(make, rng, attempts: int = 1000) -> Configuration:
    for _ in range(attempts):
        cfg = make(rng)
        if cfg is not None:
            return cfg
    raise RuntimeError("could not draw a well-separated configuration")


def random_uniform(n: int, rng: np.random.Generator) -> Configuration:
    """n points uniform in the unit square."""
    return _retry(lambda g: _accept(g.uniform(0.0, 1.0, size=(n, 2))), rng)


def _polar_points(count, rng, rmin=0.1):
    r = rng.uniform(rmin, 1.0, size=count)
    a = rng.uniform(0.0, 2 * math.pi, size=count)
    return r, a


def rotational(k: int, orbits: int, rng: np.random.Generator, center: bool = False) -> Configuration:
    """``orbits`` generic points, each replicated under rotation by 2pi/k about the origin."""
    def make(g):
        r, a = _polar_points(orbits, g)
        pts = [(ri * math.cos(ai + 2 * math.pi * j / k), ri * math.sin(ai + 2 * math.pi * j / k))
               for ri, ai in zip(r, a) for j in range(k)]
        if center:
            pts.append((0.0, 0.0))
        return _accept(pts)
    return _retry(make, rng)


def dihedral(k: int, orbits: int, rng: np.random.Generator, center: bool = False) -> Configuration:
    """Orbits of the dihedral group of order 2k (k rotations, k reflections)."""
    def make(g):
        r, a = _polar_points(orbits, g)
        pts = []
        for ri, ai in zip(r, a):
            for j in range(k):
                base = 2 * math.pi * j / k
                pts.append((ri * math.cos(base + ai), ri * math.sin(base + ai)))
                pts.append((ri * math.cos(base - ai), ri * math.sin(base - ai)))
        if center:
            pts.append((0.0, 0.0))
        return _accept(pts)
    return _retry(make, rng)


def mirror(pairs: int, on_axis: int, rng: np.random.Generator) -> Configuration:
    """Mirror pairs about a random line through the origin plus ``on_axis`` points on that line."""
    def make(g):
        phi = g.uniform(0.0, math.pi)
        u = np.array([math.cos(phi), math.sin(phi)])
        v = np.array([-u[1], u[0]])
        pts = []
        for _ in range(pairs):
            s = g.uniform(-1.0, 1.0)
            t = g.uniform(0.05, 1.0) * g.choice([-1.0, 1.0])
            pts.append(s * u + t * v)
            pts.append(s * u - t * v)
        for _ in range(on_axis):
            s = g.uniform(0.05, 1.0) * g.choice([-1.0, 1.0])
            pts.append(s * u)
        cfg = _accept(pts)
        if cfg is None or on_axis == 0:
            return cfg
        # an axis sensor landing on the circle center would change the case being sampled
        circle = smallest_enclosing_circle(cfg)
        for p in pts[2 * pairs:]:
            if math.hypot(p[0] - circle.center.x, p[1] - circle.center.y) < 1e-3 * circle.radius:
                return None
        return cfg
    return _retry(make, rng)


def with_center(config: Configuration) -> Configuration:
    """Add a sensor at the center of the enclosing circle (which does not move it)."""
    c = smallest_enclosing_circle(config).center
    return Configuration(config.points + (Point(c.x, c.y),))


def random_asymmetric(n: int, rng: np.random.Generator, tol: Tolerance = DEFAULT_TOL) -> Configuration:
    """Uniform points, redrawn until the symmetry oracle reports only the identity."""
    from .oracle import center_occupied, symmetry_group_oracle

    def make(g):
        cfg = random_uniform(n, g)
        if n < 3:
            return None
        group = symmetry_group_oracle(cfg, tol)
        if group.has_rotation or group.reflections or center_occupied(cfg, tol):
            return None
        return cfg
    if n < 3:
        raise ValueError("every configuration with fewer than 3 points is symmetric")
    return _retry(make, rng)
