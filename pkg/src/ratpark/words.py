"""Words over {0,...,m-1}: parking recognition, touch points, enumeration.

A word ``w`` of length ``n`` over the alphabet ``{0,...,m-1}`` is a parking
word when, for every ``i`` in ``1..m``, at least ``i*n/m`` of its letters are
strictly below ``i``.  All comparisons are done with cross-multiplied
integers; nothing in this package ever touches floating point.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .errors import LetterOutOfRange, NotAParkingWord


@dataclass(frozen=True)
class Word:
    """A length-``n`` word with letters drawn from ``{0,...,m-1}``."""

    m: int
    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise LetterOutOfRange(f"need m,n >= 1, got m={self.m} n={self.n}")
        if len(self.letters) != self.n:
            raise LetterOutOfRange(
                f"expected {self.n} letters, got {len(self.letters)}"
            )
        for j, letter in enumerate(self.letters):
            if not 0 <= letter < self.m:
                raise LetterOutOfRange(
                    f"letter {letter} at position {j} outside [0, {self.m})"
                )
        object.__setattr__(self, "letters", tuple(self.letters))

    def __str__(self):
        if self.m <= 10:
            return "".join(str(letter) for letter in self.letters)
        return ",".join(str(letter) for letter in self.letters)


class Classification(enum.Enum):
    """How the piecewise-linear action of a word behaves on sorted tuples."""

    UNIQUE_FIXED_POINT = "unique-fixed-point"
    INFINITELY_MANY_FIXED_POINTS = "infinitely-many-fixed-points"
    NO_FIXED_POINT = "no-fixed-point"


def word(m: int, n: int, letters: Sequence[int]) -> Word:
    return Word(m, n, tuple(letters))


def letter_histogram(w: Word) -> tuple[int, ...]:
    """Count of each letter value; entries sum to ``w.n``."""
    counts = [0] * w.m
    for letter in w.letters:
        counts[letter] += 1
    return tuple(counts)


def is_parking_word(w: Word) -> bool:
    """Check ``m * #{j : w_j < i} >= i * n`` for every ``i`` in ``1..m``."""
    counts = letter_histogram(w)
    below = 0
    for i in range(1, w.m + 1):
        below += counts[i - 1]
        if w.m * below < i * w.n:
            return False
    return True


def is_dyck_word(w: Word) -> bool:
    """Weakly increasing parking words encode lattice paths above mx+ny=0."""
    return all(a <= b for a, b in zip(w.letters, w.letters[1:])) and is_parking_word(w)


def touch_points(w: Word) -> tuple[int, ...]:
    """Indices ``0 < i < m`` where the parking inequality is an equality.

    Defined only for parking words; always empty when gcd(m, n) = 1.
    """
    if not is_parking_word(w):
        raise NotAParkingWord(f"touch points undefined for non-parking word {w}")
    counts = letter_histogram(w)
    below = 0
    touches = []
    for i in range(1, w.m):
        below += counts[i - 1]
        if w.m * below == i * w.n:
            touches.append(i)
    return tuple(touches)


def touch_decomposition(w: Word) -> list[tuple[int, Word]]:
    """Split a parking word at its touch points into smaller parking words.

    Returns ``[(m_j, q_j), ...]`` where block ``j`` holds the letters of
    ``w`` in ``[m_j, m_{j+1})`` shifted down by ``m_j``; each ``q_j`` is an
    ``(m_{j+1}-m_j, n_j)``-parking word with no touch points of its own.
    """
    cuts = (0,) + touch_points(w) + (w.m,)
    blocks = []
    for j in range(len(cuts) - 1):
        lo, hi = cuts[j], cuts[j + 1]
        letters = tuple(l - lo for l in w.letters if lo <= l < hi)
        blocks.append((lo, Word(hi - lo, len(letters), letters)))
    return blocks


def classify(w: Word) -> Classification:
    """Fixed-point trichotomy, decided arithmetically (no dynamics run)."""
    if not is_parking_word(w):
        return Classification.NO_FIXED_POINT
    if gcd(w.m, w.n) == 1:
        return Classification.UNIQUE_FIXED_POINT
    return Classification.INFINITELY_MANY_FIXED_POINTS


def enumerate_words(m: int, n: int, kind: str = "all") -> Iterator[Word]:
    """Stream words in lexicographic letter order.

    ``kind`` is ``"all"``, ``"parking"`` or ``"dyck"``.  Parking yields
    exactly ``m**(n-1)`` words when gcd(m, n) = 1; dyck yields the weakly
    increasing ones.
    """
    if kind not in ("all", "parking", "dyck"):
        raise ValueError(f"unknown enumeration kind {kind!r}")
    if kind == "dyck":
        for letters in itertools.combinations_with_replacement(range(m), n):
            w = Word(m, n, letters)
            if is_parking_word(w):
                yield w
        return
    for letters in itertools.product(range(m), repeat=n):
        w = Word(m, n, letters)
        if kind == "all" or is_parking_word(w):
            yield w
