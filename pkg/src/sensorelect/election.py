"""Leader election decision procedures, with and without chirality.

Both procedures are pure functions of the sensor positions: a sensor that
runs them on the configuration expressed in its own coordinate system
reaches the same physical answer as any other sensor, as long as the two
agree on what "counterclockwise" means when chirality is assumed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from .geometry import (
    DEFAULT_TOL,
    Configuration,
    Point,
    RadialDecomposition,
    Tolerance,
    as_configuration,
    decompose,
)
from .words import ConfigWord, Encoding, Orientation, config_words, encode_letters, root


class InternalInvariant(RuntimeError):
    """A state the characterization proves unreachable; indicates encoding drift."""


class Rule(enum.Enum):
    CENTER_SENSOR = "CenterSensor"
    UNIQUE_LYNDON_RADIUS = "UniqueLyndonRadius"
    SMALLER_OF_TWO_TYPE0 = "SmallerOfTwoType0"


class Reason(enum.Enum):
    PERIODIC = "Periodic"
    MIRROR_PAIRED_TYPE1 = "MirrorPairedType1"
    TWO_SENSORS = "TwoSensors"


@dataclass(frozen=True)
class Leader:
    index: int
    position: Point
    rule: Rule
    radius: Optional[int] = None
    word: Optional[ConfigWord] = None
    trace: tuple[str, ...] = ()


@dataclass(frozen=True)
class Impossible:
    reason: Reason
    witness: str
    power: int = 1  # k such that the minimal configuration word is u**k
    mirror_pair: Optional[tuple[int, int]] = None
    trace: tuple[str, ...] = ()


ElectionOutcome = Union[Leader, Impossible]


@dataclass(frozen=True)
class Analysis:
    """Every word the election procedures look at, for one configuration."""

    decomp: RadialDecomposition
    encoding: Encoding
    weak: dict = field(default_factory=dict)  # Orientation -> tuple[ConfigWord] indexed by start radius
    types: tuple[int, ...] = ()
    strong: dict = field(default_factory=dict)

    @property
    def center_occupied(self) -> bool:
        return self.decomp.center_sensor is not None

    def lyndon_radii(self, orientation: Orientation, strong: bool) -> tuple[int, ...]:
        words = (self.strong if strong else self.weak)[orientation]
        return tuple(i for i, w in enumerate(words) if w.is_lyndon())

    @property
    def lyndon_set(self) -> tuple[int, ...]:
        """Radii whose strong word is Lyndon in at least one orientation."""
        return tuple(sorted(set(self.lyndon_radii(Orientation.CW, True))
                            | set(self.lyndon_radii(Orientation.CCW, True))))


def classify_types(enc: Encoding) -> tuple[int, ...]:
    """1 for a radius mirrored onto a *different* radius by some axial symmetry, else 0."""
    k = len(enc)
    if enc.center_occupied or k == 0:
        return (0,) * k
    return _types_from(config_words(enc, Orientation.CW), config_words(enc, Orientation.CCW))


def _types_from(cw: tuple[ConfigWord, ...], ccw: tuple[ConfigWord, ...]) -> tuple[int, ...]:
    by_word: dict[tuple, set[int]] = {}
    for j, w in enumerate(cw):
        by_word.setdefault(w.key, set()).add(j)
    return tuple(1 if by_word.get(w.key, set()) - {i} else 0 for i, w in enumerate(ccw))


def analyze(config, tol: Tolerance = DEFAULT_TOL) -> Analysis:
    decomp = decompose(config, tol)
    enc = encode_letters(decomp, tol)
    weak = {o: config_words(enc, o) for o in Orientation}
    if enc.center_occupied:
        types = (0,) * len(enc)
    else:
        types = _types_from(weak[Orientation.CW], weak[Orientation.CCW])
    strong = {o: config_words(enc, o, types) for o in Orientation}
    return Analysis(decomp, enc, weak, types, strong)


def _leader_on(analysis: Analysis, radius: int, rule: Rule, word: Optional[ConfigWord],
               trace: list[str]) -> Leader:
    nearest = analysis.decomp.radii[radius].nearest
    pos = analysis.decomp.config.points[nearest.index]
    trace.append(f"leader is sensor {nearest.index}, nearest to the center on radius {radius}")
    return Leader(nearest.index, pos, rule, radius, word, tuple(trace))


def _center_leader(analysis: Analysis, trace: list[str]) -> Leader:
    idx = analysis.decomp.center_sensor
    trace.append(f"sensor {idx} occupies the center of the enclosing circle")
    return Leader(idx, analysis.decomp.config.points[idx], Rule.CENTER_SENSOR, trace=tuple(trace))


def _periodic(analysis: Analysis, orientation: Orientation, strong: bool,
              trace: list[str]) -> Impossible:
    words = (analysis.strong if strong else analysis.weak)[orientation]
    smallest = min(words)
    u, k = root(smallest.key)
    if k < 2:
        raise InternalInvariant("no Lyndon word, yet the minimal configuration word is primitive")
    n = len(analysis.decomp.config)
    reason = Reason.TWO_SENSORS if n == 2 else Reason.PERIODIC
    witness = (f"minimal {orientation.value} configuration word is the {k}-th power of a "
               f"word of length {len(u)}; the configuration has {k}-fold rotational symmetry")
    trace.append(witness)
    return Impossible(reason, witness, power=k, trace=tuple(trace))


def _single_lyndon(analysis: Analysis, orientation: Orientation, strong: bool) -> Optional[int]:
    found = analysis.lyndon_radii(orientation, strong)
    if len(found) > 1:
        raise InternalInvariant(
            f"{len(found)} radii carry a Lyndon {orientation.value} word without a center sensor")
    return found[0] if found else None


def elect_with_chirality(config, orientation: Orientation = Orientation.CCW,
                         tol: Tolerance = DEFAULT_TOL,
                         analysis: Optional[Analysis] = None) -> ElectionOutcome:
    """Elect assuming every sensor reads ``orientation`` the same physical way."""
    config = as_configuration(config)
    analysis = analysis or analyze(config, tol)
    trace = [f"chirality, orientation {orientation.value}"]
    if analysis.center_occupied:
        return _center_leader(analysis, trace)
    r = _single_lyndon(analysis, orientation, strong=False)
    if r is None:
        return _periodic(analysis, orientation, False, trace)
    word = analysis.weak[orientation][r]
    trace.append(f"radius {r} has the unique Lyndon configuration word")
    return _leader_on(analysis, r, Rule.UNIQUE_LYNDON_RADIUS, word, trace)


def elect_without_chirality(config, tol: Tolerance = DEFAULT_TOL,
                            analysis: Optional[Analysis] = None) -> ElectionOutcome:
    """Elect when sensors may disagree on handedness."""
    config = as_configuration(config)
    analysis = analysis or analyze(config, tol)
    trace = ["no chirality"]
    if analysis.center_occupied:
        return _center_leader(analysis, trace)

    r_cw = _single_lyndon(analysis, Orientation.CW, strong=True)
    r_ccw = _single_lyndon(analysis, Orientation.CCW, strong=True)
    types = analysis.types
    lyndon = sorted({r for r in (r_cw, r_ccw) if r is not None})
    trace.append(f"radii with a Lyndon strong word: {lyndon}")

    if not lyndon:
        return _periodic(analysis, Orientation.CCW, True, trace)

    if len(lyndon) == 1:
        r = lyndon[0]
        if types[r] != 0:
            raise InternalInvariant(f"sole Lyndon radius {r} is of type 1")
        orientation = Orientation.CW if r_cw == r else Orientation.CCW
        return _leader_on(analysis, r, Rule.UNIQUE_LYNDON_RADIUS,
                          analysis.strong[orientation][r], trace)

    if types[r_cw] != types[r_ccw]:
        raise InternalInvariant(
            f"Lyndon radii {r_cw} and {r_ccw} have different symmetry types")
    w_cw = analysis.strong[Orientation.CW][r_cw]
    w_ccw = analysis.strong[Orientation.CCW][r_ccw]
    if types[r_cw] == 1:
        witness = (f"radii {r_cw} ({Orientation.CW.value}) and {r_ccw} ({Orientation.CCW.value}) "
                   "carry equal Lyndon words and are mirror images of each other")
        trace.append(witness)
        return Impossible(Reason.MIRROR_PAIRED_TYPE1, witness,
                          mirror_pair=(min(r_cw, r_ccw), max(r_cw, r_ccw)), trace=tuple(trace))
    if w_cw == w_ccw:
        raise InternalInvariant("two type-0 radii carry equal Lyndon words")
    if w_cw < w_ccw:
        r, word = r_cw, w_cw
    else:
        r, word = r_ccw, w_ccw
    trace.append(f"radius {r} carries the smaller of the two type-0 Lyndon words")
    return _leader_on(analysis, r, Rule.SMALLER_OF_TWO_TYPE0, word, trace)


def elect(config, chirality: bool, orientation: Orientation = Orientation.CCW,
          tol: Tolerance = DEFAULT_TOL) -> ElectionOutcome:
    if chirality:
        return elect_with_chirality(config, orientation, tol)
    return elect_without_chirality(config, tol)
