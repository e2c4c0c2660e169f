from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sensorelect import fixtures
from sensorelect.election import (
    Impossible,
    Leader,
    Reason,
    Rule,
    analyze,
    classify_types,
    elect,
    elect_with_chirality,
    elect_without_chirality,
)
from sensorelect.geometry import Configuration, LocalFrame, apply_frame
from sensorelect.oracle import symmetry_group_oracle
from sensorelect.words import Orientation

CW, CCW = Orientation.CW, Orientation.CCW


def _radius_of(decomp, sensor):
    return next(i for i, r in enumerate(decomp.radii) if any(s.index == sensor for s in r.sensors))


# --- worked fixtures ------------------------------------------------------------

def test_fig3_leader_depends_on_orientation_and_chirality():
    cfg = fixtures.fig3()
    assert elect_with_chirality(cfg, CW).index == 1
    assert elect_with_chirality(cfg, CCW).index == 3
    free = elect_without_chirality(cfg)
    assert free.index == 0 and free.rule is Rule.UNIQUE_LYNDON_RADIUS


def test_fig5_smaller_of_two_type0_words():
    a = analyze(fixtures.fig5())
    r2, r3 = _radius_of(a.decomp, 1), _radius_of(a.decomp, 3)
    assert a.lyndon_set == tuple(sorted((r2, r3)))
    out = elect_without_chirality(fixtures.fig5())
    assert (out.index, out.radius, out.rule) == (1, r2, Rule.SMALLER_OF_TWO_TYPE0)


def test_fig4_is_periodic_of_power_two():
    for chirality in (True, False):
        out = elect(fixtures.fig4(), chirality)
        assert isinstance(out, Impossible) and out.reason is Reason.PERIODIC
        assert out.power == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6, 9])
def test_regular_polygons_are_periodic(n):
    for chirality in (True, False):
        out = elect(fixtures.ngon(n), chirality)
        assert isinstance(out, Impossible) and out.power == n


def test_two_sensors_reason():
    cfg = Configuration.from_points([(1.0, 2.0), (-3.0, 0.5)])
    for chirality in (True, False):
        out = elect(cfg, chirality)
        assert isinstance(out, Impossible) and out.reason is Reason.TWO_SENSORS


def test_single_sensor_elects_itself():
    out = elect(Configuration.from_points([(4.0, 4.0)]), chirality=False)
    assert isinstance(out, Leader) and out.index == 0 and out.rule is Rule.CENTER_SENSOR


def test_center_sensor_wins_even_in_symmetric_configuration():
    cfg = fixtures.with_center(fixtures.ngon(6))
    for chirality in (True, False):
        out = elect(cfg, chirality)
        assert out.index == 6 and out.rule is Rule.CENTER_SENSOR


def test_mirror_without_axis_sensor():
    cfg = fixtures.mirror_no_axis()
    out = elect_without_chirality(cfg)
    assert isinstance(out, Impossible) and out.reason is Reason.MIRROR_PAIRED_TYPE1
    assert out.mirror_pair is not None
    assert isinstance(elect_with_chirality(cfg, CW), Leader)
    assert isinstance(elect_with_chirality(cfg, CCW), Leader)


def test_arrow_elects_on_its_axis():
    out = elect_without_chirality(fixtures.arrow())
    assert out.index == 1
    assert out.position == pytest.approx((0.0, 0.3))


def test_trace_explains_decision():
    out = elect_without_chirality(fixtures.fig3())
    assert out.trace[0] == "no chirality"
    assert "leader is sensor 0" in out.trace[-1]


# --- type classification against the symmetry oracle --------------------------------

def _types_by_oracle(cfg):
    """Type 1 iff some reflection of the point set sends the radius to a different radius."""
    a = analyze(cfg)
    group = symmetry_group_oracle(cfg)
    cx, cy = group.center
    types = []
    for i, r in enumerate(a.decomp.radii):
        p = cfg.points[r.nearest.index]
        paired = False
        for axis in group.reflections:
            c2, s2 = math.cos(2 * axis), math.sin(2 * axis)
            x, y = p.x - cx, p.y - cy
            image = (cx + c2 * x + s2 * y, cy + s2 * x - c2 * y)
            j = min(range(len(cfg)), key=lambda q: math.dist(cfg.points[q], image))
            paired |= _radius_of(a.decomp, j) != i
        types.append(int(paired))
    return tuple(types)


def _typed_corpus(seed=3):
    rng = np.random.default_rng(seed)
    for _ in range(40):
        yield fixtures.mirror(int(rng.integers(1, 5)), int(rng.integers(0, 3)), rng)
    for _ in range(30):
        yield fixtures.dihedral(int(rng.integers(1, 4)), int(rng.integers(1, 3)), rng)
    for _ in range(30):
        yield fixtures.random_uniform(int(rng.integers(3, 9)), rng)
    yield fixtures.fig3()
    yield fixtures.fig5()
    yield fixtures.mirror_no_axis()


def test_types_match_reflection_oracle():
    for cfg in _typed_corpus():
        a = analyze(cfg)
        if a.center_occupied:
            continue
        assert a.types == _types_by_oracle(cfg)
        assert classify_types(a.encoding) == a.types


# --- invariance ----------------------------------------------------------------

frames = st.builds(
    LocalFrame,
    rotation=st.floats(0, 2 * math.pi),
    scale=st.floats(0.1, 10),
    translation=st.tuples(st.floats(-10, 10), st.floats(-10, 10)),
    reflected=st.booleans(),
)
named = st.sampled_from(sorted(fixtures.FIGURES))


@settings(max_examples=60)
@given(named, frames)
def test_fixture_outcomes_survive_similarities(name, frame):
    cfg = fixtures.FIGURES[name]()
    moved = apply_frame(frame, cfg)
    for chirality in (True, False):
        if chirality and frame.reflected:
            continue
        a, b = elect(cfg, chirality), elect(moved, chirality)
        assert type(a) is type(b)
        if isinstance(a, Leader):
            assert a.index == b.index
        else:
            assert a.reason is b.reason


@settings(max_examples=60)
@given(named, frames)
def test_reflection_swaps_orientations(name, frame):
    cfg = fixtures.FIGURES[name]()
    mirrored = apply_frame(LocalFrame(frame.rotation, frame.scale, frame.translation, True), cfg)
    for o in Orientation:
        a, b = elect_with_chirality(cfg, o), elect_with_chirality(mirrored, o.opposite)
        assert type(a) is type(b)
        if isinstance(a, Leader):
            assert a.index == b.index


def test_leader_is_nearest_to_center_on_its_radius():
    rng = np.random.default_rng(11)
    for _ in range(100):
        cfg = fixtures.random_uniform(int(rng.integers(3, 10)), rng)
        a = analyze(cfg)
        out = elect_without_chirality(cfg, analysis=a)
        if isinstance(out, Leader) and out.radius is not None:
            r = a.decomp.radii[out.radius]
            assert out.index == min(r.sensors, key=lambda s: s.distance).index
