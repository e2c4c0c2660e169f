"""Symbolic encoding of a radial decomposition, and the word algebra on it.

Distances along radii and angles between consecutive radii are replaced by
integer ranks (order-preserving codes). A radius becomes the word of its
successive gaps; walking all radii in one orientation yields a
configuration word whose letters are ``(radius word, angle)`` pairs, or
``(type, radius word, angle)`` triples for the strong variant.

The algebra functions (:func:`rotate`, :func:`is_primitive`,
:func:`is_lyndon`, :func:`smallest_period`) work on any sequence whose
items are totally ordered: strings, tuples of ints, tuples of letters.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .geometry import DEFAULT_TOL, RadialDecomposition, Radius, Tolerance


class Orientation(enum.Enum):
    CW = "cw"
    CCW = "ccw"

    @property
    def opposite(self) -> "Orientation":
        return Orientation.CCW if self is Orientation.CW else Orientation.CW


# ---------------------------------------------------------------------------
# Word algebra

def rotate(word, j: int):
    """Return the word starting at its ``j``-th letter (1-based), wrapping around.

    >>> rotate("abc", 1)
    'abc'
    >>> rotate("abc", 2)
    'bca'
    """
    if len(word) == 0:
        return word
    if not 1 <= j <= len(word):
        raise ValueError(f"rotation index {j} outside 1..{len(word)}")
    return word[j - 1:] + word[: j - 1]


def smallest_period(word) -> int:
    """Length of the shortest p with word[i] == word[i + p] for all valid i."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no period")
    border = [0] * (n + 1)
    border[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and word[k] != word[i]:
            k = border[k]
        k += 1
        border[i + 1] = k
    return n - border[n]


def is_primitive(word) -> bool:
    """True iff ``word`` is not a power ``u**k`` of a shorter word with ``k > 1``."""
    n = len(word)
    if n == 0:
        raise ValueError("primitivity is undefined for the empty word")
    p = smallest_period(word)
    return p == n or n % p != 0


def root(word):
    """Return ``(u, k)`` with ``word == u * k`` and ``u`` primitive."""
    n = len(word)
    p = smallest_period(word)
    if n % p:
        p = n
    return word[:p], n // p


def is_lyndon(word) -> bool:
    """Linear-time test that ``word`` is strictly smaller than all its proper rotations."""
    n = len(word)
    if n == 0:
        return False
    k = 0
    for j in range(1, n):
        if word[k] < word[j]:
            k = 0
        elif word[k] == word[j]:
            k += 1
        else:
            return False
    return k == 0


def compare_sequences(u, v) -> int:
    """Lexicographic three-way comparison; a proper prefix is smaller."""
    for a, b in zip(u, v):
        if a < b:
            return -1
        if b < a:
            return 1
    return (len(u) > len(v)) - (len(u) < len(v))


# ---------------------------------------------------------------------------
# Letters

@dataclass(frozen=True, order=True)
class Letter:
    """Rank of a clustered real value; the value rides along for reports only."""

    rank: int
    value: float = field(default=0.0, compare=False)


@functools.total_ordering
class RadiusWord:
    """Gap letters along one radius, or the ZERO token when O is occupied."""

    __slots__ = ("letters", "zero", "_key")

    def __init__(self, letters: Sequence[Letter] = (), zero: bool = False):
        self.letters = tuple(letters)
        self.zero = zero
        if zero and self.letters:
            raise ValueError("ZERO radius word carries no letters")
        # ZERO sorts first so it can never tie with a genuine smallest gap
        self._key = (0, ()) if zero else (1, tuple(a.rank for a in self.letters))

    def __eq__(self, other):
        return isinstance(other, RadiusWord) and self._key == other._key

    def __lt__(self, other):
        return self._key < other._key

    def __hash__(self):
        return hash(self._key)

    def __len__(self):
        return len(self.letters)

    @property
    def key(self) -> tuple:
        return self._key

    def __repr__(self):
        if self.zero:
            return "RadiusWord(ZERO)"
        return f"RadiusWord({[a.rank for a in self.letters]})"


ZERO = RadiusWord(zero=True)


# ``key`` orders exactly like the dataclass fields but compares natively.

@dataclass(frozen=True, order=True)
class WeakLetter:
    rho: RadiusWord
    alpha: Letter

    @property
    def key(self) -> tuple:
        return (self.rho.key, self.alpha.rank)


@dataclass(frozen=True, order=True)
class StrongLetter:
    sym: int
    rho: RadiusWord
    alpha: Letter

    @property
    def key(self) -> tuple:
        return (self.sym, self.rho.key, self.alpha.rank)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class ConfigWord:
    """Configuration word read from radius ``start`` in ``orientation``.

    ``center`` marks the degenerate word of a configuration with a sensor
    at the circle center; it has no letters and sorts below every other
    word of its kind.
    """

    start: Optional[int]
    orientation: Orientation
    letters: tuple
    strong: bool = False
    center: bool = False
    key: Optional[tuple] = field(default=None, repr=False)

    def __post_init__(self):
        if self.key is None:
            object.__setattr__(self, "key", tuple(a.key for a in self.letters))

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, ConfigWord):
            return NotImplemented
        return compare(self, other) == 0

    def __lt__(self, other):
        return compare(self, other) < 0

    def __hash__(self):
        return hash((self.strong, self.center, self.key))

    def is_lyndon(self) -> bool:
        return not self.center and is_lyndon(self.key)

    def is_primitive(self) -> bool:
        return self.center or is_primitive(self.key)


def compare(a: ConfigWord, b: ConfigWord) -> int:
    """Three-way lexicographic comparison of two configuration words of one kind."""
    if a.strong != b.strong:
        raise TypeError("cannot compare weak and strong configuration words")
    if a.center or b.center:
        return (not a.center) - (not b.center)
    return (a.key > b.key) - (a.key < b.key)


# ---------------------------------------------------------------------------
# Encoding

def cluster_ranks(values: Sequence[float], tol: Tolerance = DEFAULT_TOL) -> list[int]:
    """Dense order-preserving ranks; values chained within ``tol`` share a rank."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0] * len(values)
    rank = -1
    prev = None
    for i in order:
        v = values[i]
        if prev is None or not tol.close(prev, v):
            rank += 1
        ranks[i] = rank
        prev = v
    return ranks


@dataclass(frozen=True)
class Encoding:
    decomp: RadialDecomposition
    radius_words: tuple[RadiusWord, ...]
    angle_letters: tuple[Letter, ...]  # angle_letters[i] codes decomp.angles_ccw[i]
    distance_classes: tuple[float, ...]  # representative value per distance rank
    angle_classes: tuple[float, ...]

    @property
    def center_occupied(self) -> bool:
        return self.decomp.center_sensor is not None

    def __len__(self):
        return len(self.decomp.radii)


def radius_gaps(radius: Radius, sigma: float) -> list[float]:
    gaps = []
    prev = 0.0
    for s in radius.sensors:
        gaps.append((s.distance - prev) / sigma)
        prev = s.distance
    return gaps


def radius_word(gap_letters: Sequence[Letter], center_occupied: bool) -> RadiusWord:
    return ZERO if center_occupied else RadiusWord(gap_letters)


def _classes(values, ranks) -> tuple[float, ...]:
    reps: dict[int, float] = {}
    for v, r in zip(values, ranks):
        reps.setdefault(r, v)
    return tuple(reps[r] for r in range(len(reps)))


def encode_letters(decomp: RadialDecomposition, tol: Tolerance = DEFAULT_TOL) -> Encoding:
    """Code normalized gaps and inter-radius angles as dense integer ranks.

    Distances and angles are ranked separately; the two alphabets are never
    compared with each other.
    """
    sigma = decomp.sigma
    per_radius = [radius_gaps(r, sigma) for r in decomp.radii]
    flat = [g for gaps in per_radius for g in gaps]
    d_ranks = cluster_ranks(flat, tol)
    a_ranks = cluster_ranks(decomp.angles_ccw, tol)

    words = []
    pos = 0
    occupied = decomp.center_sensor is not None
    for gaps in per_radius:
        letters = [Letter(d_ranks[pos + i], gaps[i]) for i in range(len(gaps))]
        pos += len(gaps)
        words.append(radius_word(letters, occupied))
    angles = tuple(Letter(r, v) for r, v in zip(a_ranks, decomp.angles_ccw))
    return Encoding(
        decomp,
        tuple(words),
        angles,
        _classes(flat, d_ranks),
        _classes(decomp.angles_ccw, a_ranks),
    )


def successor(i: int, steps: int, orientation: Orientation, k: int) -> int:
    return (i - steps) % k if orientation is Orientation.CW else (i + steps) % k


def angle_letter(enc: Encoding, i: int, orientation: Orientation) -> Letter:
    k = len(enc)
    return enc.angle_letters[(i - 1) % k] if orientation is Orientation.CW else enc.angle_letters[i]


def _walk(enc: Encoding, orientation: Orientation, types) -> tuple:
    # letters of all radii in walking order, starting from radius 0
    k = len(enc)
    order = [successor(0, step, orientation, k) for step in range(k)]
    if types is None:
        return tuple(WeakLetter(enc.radius_words[i], angle_letter(enc, i, orientation)) for i in order)
    return tuple(StrongLetter(types[i], enc.radius_words[i], angle_letter(enc, i, orientation))
                 for i in order)


def config_words(
    enc: Encoding,
    orientation: Orientation,
    types: Optional[Sequence[int]] = None,
) -> tuple[ConfigWord, ...]:
    """Configuration words of every radius, indexed by start radius."""
    strong = types is not None
    k = len(enc)
    if enc.center_occupied:
        return tuple(ConfigWord(i, orientation, (), strong=strong, center=True) for i in range(k))
    walk = _walk(enc, orientation, types)
    keys = tuple(a.key for a in walk)
    words = []
    for start in range(k):
        pos = (-start) % k if orientation is Orientation.CW else start
        words.append(ConfigWord(start, orientation, walk[pos:] + walk[:pos], strong=strong,
                                key=keys[pos:] + keys[:pos]))
    return tuple(words)


def config_word(
    enc: Encoding,
    start: int,
    orientation: Orientation,
    types: Optional[Sequence[int]] = None,
) -> ConfigWord:
    """Walk every radius from ``start``; strong letters are produced iff ``types`` is given."""
    strong = types is not None
    if enc.center_occupied:
        return ConfigWord(start, orientation, (), strong=strong, center=True)
    k = len(enc)
    letters = []
    for step in range(k):
        i = successor(start, step, orientation, k)
        alpha = angle_letter(enc, i, orientation)
        if strong:
            letters.append(StrongLetter(types[i], enc.radius_words[i], alpha))
        else:
            letters.append(WeakLetter(enc.radius_words[i], alpha))
    return ConfigWord(start, orientation, tuple(letters), strong=strong)


def is_strictly_periodic_family(enc: Encoding, orientation: Orientation) -> bool:
    """True iff the configuration words in ``orientation`` are proper powers.

    All configuration words of one orientation are rotations of each other,
    so checking the one starting at radius 0 decides for all of them.
    """
    if enc.center_occupied:
        raise ValueError("configuration words are degenerate when the center is occupied")
    if len(enc) == 0:
        return False
    return not config_word(enc, 0, orientation).is_primitive()


def format_letters(word: ConfigWord, distance_names: str = "abcdefghijklmnopqrstuvwxyz",
                   angle_names: str = "αβγδεζηθικλμνξοπρστυφχψω") -> str:
    """Human-readable rendering such as ``(c,β)(ab,α)(ab,β)``."""
    if word.center:
        return "(0,0,0)" if word.strong else "(0,0)"

    def name(names, rank):
        return names[rank] if rank < len(names) else f"<{rank}>"

    parts = []
    for letter in word.letters:
        rho = "".join(name(distance_names, a.rank) for a in letter.rho.letters)
        alpha = name(angle_names, letter.alpha.rank)
        if word.strong:
            parts.append(f"({letter.sym},{rho},{alpha})")
        else:
            parts.append(f"({rho},{alpha})")
    return "".join(parts)
