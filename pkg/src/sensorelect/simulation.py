"""Simulate every sensor electing on its own view of the configuration.

Each sensor receives the positions expressed in a private similarity frame
and listed in a private order, runs the same election code, and maps its
answer back to global coordinates. Agreement is then checked physically,
by position, never by list index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .election import ElectionOutcome, Impossible, Leader, elect
from .geometry import (
    DEFAULT_TOL,
    Configuration,
    LocalFrame,
    Point,
    Tolerance,
    as_configuration,
    smallest_enclosing_circle,
)
from .words import Orientation

TRANSLATION_BOX = 10.0


def random_frames(n: int, chirality: bool, seed: int) -> list[LocalFrame]:
    """Frames drawn from ``seed``; with chirality all frames share one handedness."""
    if n < 1:
        raise ValueError("need at least one sensor")
    rng = np.random.default_rng(seed)
    rotations = rng.uniform(0.0, 2 * np.pi, size=n)
    scales = 10.0 ** rng.uniform(-1.0, 1.0, size=n)
    shifts = rng.uniform(-TRANSLATION_BOX, TRANSLATION_BOX, size=(n, 2))
    if chirality:
        reflected = np.full(n, bool(rng.integers(0, 2)))
    else:
        reflected = rng.integers(0, 2, size=n).astype(bool)
    return [
        LocalFrame(float(rotations[i]), float(scales[i]),
                   (float(shifts[i, 0]), float(shifts[i, 1])), bool(reflected[i]))
        for i in range(n)
    ]


@dataclass(frozen=True)
class SensorRun:
    sensor: int
    frame: LocalFrame
    outcome: ElectionOutcome  # indices refer to the sensor's private ordering
    resolved: Optional[Point]  # elected position mapped back to global coordinates
    claim: tuple


@dataclass(frozen=True)
class AgreementReport:
    unanimous: bool
    leader: Optional[tuple[int, Point]]
    dissent: tuple[tuple[int, tuple], ...]
    chirality: bool
    seed: int
    reference: ElectionOutcome
    reference_claim: tuple
    runs: tuple[SensorRun, ...]

    @property
    def matches_reference(self) -> bool:
        return not self.dissent


def _resolve(config: Configuration, position: Point, limit: float) -> tuple:
    xy = config.as_array()
    d = np.hypot(xy[:, 0] - position[0], xy[:, 1] - position[1])
    i = int(d.argmin())
    if d[i] > limit:
        return ("unresolved", (float(position[0]), float(position[1])))
    return ("leader", i)


def _claim(config: Configuration, outcome: ElectionOutcome, frame: LocalFrame,
           limit: float) -> tuple[tuple, Optional[Point]]:
    if isinstance(outcome, Impossible):
        return ("impossible", outcome.reason.value), None
    resolved = frame.inverse(outcome.position)
    return _resolve(config, resolved, limit), resolved


def run_agreement(config, chirality: bool, seed: int,
                  tol: Tolerance = DEFAULT_TOL) -> AgreementReport:
    config = as_configuration(config)
    n = len(config)
    frames = random_frames(n, chirality, seed)
    order_rng = np.random.default_rng([seed, 0x0DE])

    circle = smallest_enclosing_circle(config)
    scale = circle.radius if circle.radius > 0 else max(1.0, max(abs(v) for p in config.points for v in p))
    limit = tol.eps * scale

    # Local CCW of a reflected frame is physical CW; shared handedness makes this common.
    physical = Orientation.CW if frames[0].reflected else Orientation.CCW
    reference = elect(config, chirality, physical, tol)
    if isinstance(reference, Leader):
        reference_claim = ("leader", reference.index)
    else:
        reference_claim = ("impossible", reference.reason.value)

    runs = []
    for i, frame in enumerate(frames):
        perm = order_rng.permutation(n)
        local = Configuration(tuple(frame.forward(config.points[j]) for j in perm))
        outcome = elect(local, chirality, Orientation.CCW, tol)
        claim, resolved = _claim(config, outcome, frame, limit)
        runs.append(SensorRun(i, frame, outcome, resolved, claim))

    claims = {r.claim for r in runs}
    unanimous = len(claims) == 1
    leader = None
    if unanimous and runs[0].claim[0] == "leader":
        idx = runs[0].claim[1]
        leader = (idx, config.points[idx])
    dissent = tuple((r.sensor, r.claim) for r in runs if r.claim != reference_claim)
    return AgreementReport(unanimous, leader, dissent, chirality, seed, reference,
                           reference_claim, tuple(runs))
