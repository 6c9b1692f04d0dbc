"""Filter tuples and the two labelings whose composition is the zeta map.

A filter tuple removes n minimal levels one at a time, ending at the
initial filter shifted by n.  Reading the removals two ways gives two
parking words:

* the area word — each removed level, shifted to the Dyck representative
  and multiplied by ``a`` with ``a*n = -1 (mod m)``, is a column length of
  the underlying lattice path;
* the rank word — the 0-indexed position of each removed level among the
  current row minima.

Both readings are bijections onto the parking words; ``zeta`` converts
the first labeling into the second.  Inverting the rank word is where the
orbit solver earns its keep: the balanced initial row minima are exactly
the fixed point of the word being inverted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from . import action
from .errors import InternalInconsistency, LevelNotRemovable, NotAParkingWord
from .filters import (
    Filter,
    column_minima,
    filter_from_dyck_word,
    is_balanced,
    is_dyck,
    removable_levels,
    to_balanced,
)
from .words import Word, enumerate_words, is_parking_word


@dataclass(frozen=True)
class FilterTuple:
    """An initial filter plus the ordered sequence of n removed levels."""

    initial: Filter
    removals: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "removals", tuple(self.removals))
        m, n = self.initial.m, self.initial.n
        if len(self.removals) != n:
            raise LevelNotRemovable(
                f"expected {n} removals, got {len(self.removals)}"
            )
        stage = self.initial
        for v in self.removals:
            if v not in removable_levels(stage):
                raise LevelNotRemovable(
                    f"level {v} not removable at stage {stage.row_minima}"
                )
            stage = Filter(
                m, n, tuple(x + m if x == v else x for x in stage.row_minima)
            )
        expected = tuple(v + n for v in self.initial.row_minima)
        if stage.row_minima != expected:
            raise InternalInconsistency(
                f"final stage {stage.row_minima} is not initial + {n}"
            )

    @property
    def m(self) -> int:
        return self.initial.m

    @property
    def n(self) -> int:
        return self.initial.n

    def stages(self) -> Iterator[Filter]:
        """The n+1 filters visited, initial first."""
        stage = self.initial
        yield stage
        for v in self.removals:
            stage = Filter(
                self.m,
                self.n,
                tuple(x + self.m if x == v else x for x in stage.row_minima),
            )
            yield stage


def translate(t: FilterTuple, shift: int) -> FilterTuple:
    return FilterTuple(
        Filter(t.m, t.n, tuple(v + shift for v in t.initial.row_minima)),
        tuple(v + shift for v in t.removals),
    )


def tuple_to_parking(t: FilterTuple) -> FilterTuple:
    """Translate so the initial filter is Dyck (minimum level 0)."""
    return translate(t, -min(t.initial.row_minima))


def tuple_to_balanced(t: FilterTuple) -> FilterTuple:
    """Translate so the initial filter is balanced."""
    return translate(
        t, to_balanced(t.initial).row_minima[0] - t.initial.row_minima[0]
    )


def is_parking_tuple(t: FilterTuple) -> bool:
    return is_dyck(t.initial)


def is_balanced_tuple(t: FilterTuple) -> bool:
    return is_balanced(t.initial)


def _area_multiplier(m: int, n: int) -> int:
    return (-pow(n, -1, m)) % m if m > 1 else 0


def area_word(t: FilterTuple) -> Word:
    """Column lengths of the tuple's path, in removal order."""
    a = _area_multiplier(t.m, t.n)
    k = min(t.removals)
    letters = tuple((a * (v - k)) % t.m for v in t.removals)
    w = Word(t.m, t.n, letters)
    if not is_parking_word(w):
        raise InternalInconsistency(f"area word {w} is not parking")
    return w


def tuple_from_area_word(w: Word) -> FilterTuple:
    """The unique parking tuple whose area word is ``w``.

    The sorted word gives the underlying Dyck filter; each letter then
    picks the residue class of its removed level (levels sharing a class
    are consumed in increasing order).
    """
    if not is_parking_word(w):
        raise NotAParkingWord(f"{w} is not a parking word")
    m, n = w.m, w.n
    d = filter_from_dyck_word(Word(m, n, tuple(sorted(w.letters))))
    groups: dict[int, list[int]] = {}
    a = _area_multiplier(m, n)
    for q in sorted(column_minima(d), reverse=True):
        groups.setdefault((a * q) % m, []).append(q)
    removals = tuple(groups[letter].pop() for letter in w.letters)
    return FilterTuple(d, removals)


def rank_word(t: FilterTuple) -> Word:
    """Rank (0-indexed) of each removed level among the current row minima."""
    letters = []
    minima = sorted(t.initial.row_minima)
    for v in t.removals:
        r = minima.index(v)
        letters.append(r)
        minima[r] = v + t.m
        minima.sort()
    w = Word(t.m, t.n, tuple(letters))
    if not is_parking_word(w):
        raise InternalInconsistency(f"rank word {w} is not parking")
    return w


def tuple_from_rank_word(
    w: Word, max_iterations: int | None = None, use_oracle: bool = False
) -> FilterTuple:
    """The balanced tuple whose rank word is ``w``.

    The balanced initial row minima are the unique fixed point of ``w``;
    replaying the word then removes the letter-ranked minimum at each
    step.  ``use_oracle`` swaps the orbit solver for the enumeration
    oracle (slow, but an independent route).
    """
    if gcd(w.m, w.n) != 1:
        raise NotAParkingWord(f"rank-word inversion needs coprime (m, n): {w}")
    if not is_parking_word(w):
        raise NotAParkingWord(f"{w} is not a parking word")
    if use_oracle:
        point = action.fixed_point_oracle(w)
    else:
        report = action.find_fixed_point(w, max_iterations=max_iterations)
        if not isinstance(report.outcome, action.Fixed):
            raise InternalInconsistency(
                f"solver did not fix a point for parking word {w}: {report}"
            )
        point = report.outcome.point
    initial = Filter(w.m, w.n, point.coords)
    minima = list(point.coords)
    removals = []
    for letter in w.letters:
        v = minima[letter]
        removals.append(v)
        minima[letter] = v + w.m
        minima.sort()
    return FilterTuple(initial, tuple(removals))


def zeta(w: Word) -> Word:
    """Relabel the tuple carrying area word ``w`` by its rank word."""
    return rank_word(tuple_from_area_word(w))


def zeta_inverse(
    w: Word, max_iterations: int | None = None, use_oracle: bool = False
) -> Word:
    """Inverse of :func:`zeta`, via the fixed point of ``w``."""
    return area_word(
        tuple_from_rank_word(w, max_iterations=max_iterations, use_oracle=use_oracle)
    )


def _statistic_ceiling(m: int, n: int) -> int:
    prod = (m - 1) * (n - 1)
    if prod % 2:
        raise InternalInconsistency(f"(m-1)(n-1) odd for coprime ({m}, {n})")
    return prod // 2


def area(x: Word | FilterTuple) -> int:
    """``(m-1)(n-1)/2`` minus the letter sum of the area word."""
    if isinstance(x, FilterTuple):
        x = area_word(x)
    elif not is_parking_word(x):
        raise NotAParkingWord(f"{x} is not a parking word")
    return _statistic_ceiling(x.m, x.n) - sum(x.letters)


def dinv(x: Word | FilterTuple) -> int:
    """``(m-1)(n-1)/2`` minus the letter sum of the rank word.

    A bare word is read as the area label of its tuple, so its dinv is
    the rank-word statistic of that same tuple.
    """
    if isinstance(x, Word):
        x = tuple_from_area_word(x)
    return _statistic_ceiling(x.m, x.n) - sum(rank_word(x).letters)


@dataclass(frozen=True)
class QTTable:
    """Joint (area, dinv) counts; rows are area values, columns dinv."""

    m: int
    n: int
    over: str
    counts: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def area_marginal(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.counts)

    def dinv_marginal(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.counts))

    def to_csv(self) -> str:
        header = "area\\dinv," + ",".join(str(j) for j in range(self.size))
        rows = [
            f"{i}," + ",".join(str(c) for c in row)
            for i, row in enumerate(self.counts)
        ]
        return "\n".join([header] + rows) + "\n"


def qt_table(m: int, n: int, over: str = "parking") -> QTTable:
    """Tabulate (area, dinv) over all tuples, or only the Dyck-embedded ones.

    The Dyck restriction counts the canonical tuples that remove a Dyck
    filter's column minima in increasing order; their area words are
    permutations of the column-length words, not the sorted words
    themselves.
    """
    if over not in ("parking", "dyck"):
        raise ValueError(f"unknown table domain {over!r}")
    size = _statistic_ceiling(m, n) + 1
    counts = [[0] * size for _ in range(size)]
    if over == "dyck":
        for w in enumerate_words(m, n, "dyck"):
            d = filter_from_dyck_word(w)
            t = FilterTuple(d, tuple(sorted(column_minima(d))))
            counts[area(t)][dinv(t)] += 1
    else:
        for w in enumerate_words(m, n, "parking"):
            t = tuple_from_area_word(w)
            counts[area(t)][dinv(t)] += 1
    return QTTable(m, n, over, tuple(tuple(row) for row in counts))
