from __future__ import annotations

import math

import numpy as np
import pytest

from sensorelect import fixtures
from sensorelect.geometry import Configuration
from sensorelect.oracle import (
    brute_force_circle,
    center_occupied,
    decide_by_oracle,
    symmetry_group_oracle,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8])
def test_regular_polygon_group_is_dihedral(n):
    g = symmetry_group_oracle(fixtures.ngon(n, radius=2.0, phase=0.3))
    assert len(g.rotations) == n
    assert len(g.reflections) == n
    assert g.rotations == pytest.approx([2 * math.pi * i / n for i in range(n)])


def test_figure_groups():
    g3 = symmetry_group_oracle(fixtures.fig3())
    assert not g3.has_rotation
    assert g3.reflections == pytest.approx([math.pi / 2])
    g4 = symmetry_group_oracle(fixtures.fig4())
    assert g4.rotations == pytest.approx([0.0, math.pi])
    assert len(g4.reflections) == 2
    g5 = symmetry_group_oracle(fixtures.fig5())
    assert g5.rotations == (0.0,) and g5.reflections == ()


def test_rotation_only_group_has_no_reflections():
    rng = np.random.default_rng(4)
    cfg = fixtures.rotational(3, 2, rng)
    g = symmetry_group_oracle(cfg)
    assert len(g.rotations) == 3 and g.reflections == ()


def test_asymmetric_sampler_really_is_asymmetric():
    rng = np.random.default_rng(8)
    for n in (3, 6, 9):
        g = symmetry_group_oracle(fixtures.random_asymmetric(n, rng))
        assert g.rotations == (0.0,) and g.reflections == ()


def test_brute_force_circle_small_cases():
    c = brute_force_circle(Configuration.from_points([(0, 0), (4, 0), (2, 1)]))
    assert c.center == pytest.approx((2, 0)) and c.radius == pytest.approx(2)
    c = brute_force_circle(Configuration.from_points([(7, 7)]))
    assert c.radius == 0.0


def test_center_occupancy():
    assert center_occupied(fixtures.center_example())
    assert not center_occupied(fixtures.fig3())


@pytest.mark.parametrize("name, chirality, expected", [
    ("arrow", False, True),
    ("fig3", True, True),
    ("fig3", False, True),
    ("fig4", True, False),
    ("fig5", False, True),
    ("mirror-no-axis", True, True),
    ("mirror-no-axis", False, False),
    ("center", False, True),
])
def test_oracle_decisions_on_figures(name, chirality, expected):
    assert decide_by_oracle(fixtures.FIGURES[name](), chirality) is expected


def test_two_and_one_sensor():
    assert not decide_by_oracle(Configuration.from_points([(0, 0), (1, 3)]), True)
    assert decide_by_oracle(Configuration.from_points([(0, 0)]), False)
