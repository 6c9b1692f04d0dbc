"""Periodic order filters of the grid, stored by their m row-minimum levels.

The lattice point ``(i, j)`` carries the level ``i*m + j*n``.  Rows are
residue classes mod m (steps of m), columns are residue classes mod n
(steps of n).  An invariant up-closed set of points is determined by the
minimal level it contains in each row, so a filter is stored as those m
integers — one per residue class mod m — and the infinite point set is
never materialized.

Only coprime (m, n) are supported.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, Sequence

from .errors import (
    InternalInconsistency,
    LevelNotRemovable,
    NotAParkingWord,
    NotCoprime,
    NotDyck,
)
from .words import Word, is_parking_word


def level(i: int, j: int, m: int, n: int) -> int:
    """Level of the lattice point ``(i, j)``: the dot product with (m, n)."""
    return i * m + j * n


@dataclass(frozen=True)
class Filter:
    """An (m,n)-invariant order filter, canonically its sorted row minima."""

    m: int
    n: int
    row_minima: tuple[int, ...]

    def __post_init__(self):
        if gcd(self.m, self.n) != 1:
            raise NotCoprime(f"filters need coprime (m, n), got ({self.m}, {self.n})")
        minima = tuple(sorted(self.row_minima))
        if len(minima) != self.m:
            raise InternalInconsistency(
                f"expected {self.m} row minima, got {len(minima)}"
            )
        if len({v % self.m for v in minima}) != self.m:
            raise InternalInconsistency(
                f"row minima {minima} do not cover all residues mod {self.m}"
            )
        by_residue = {v % self.m: v for v in minima}
        for v in minima:
            up = v + self.n
            if up < by_residue[up % self.m]:
                raise InternalInconsistency(
                    f"row minima {minima} not up-closed: {v}+{self.n} missing"
                )
        object.__setattr__(self, "row_minima", minima)

    def minimum_by_residue(self, r: int) -> int:
        for v in self.row_minima:
            if v % self.m == r % self.m:
                return v
        raise InternalInconsistency(f"no row minimum in residue class {r}")


def contains_level(f: Filter, v: int) -> bool:
    return v >= f.minimum_by_residue(v % f.m)


def column_minima(f: Filter) -> tuple[int, ...]:
    """Least filter level in each residue class mod n, sorted.

    Row r holds the levels ``min_r + k*m``; the least of them in a given
    class mod n is found by solving ``k*m = c - min_r (mod n)``.
    """
    m, n = f.m, f.n
    m_inv = pow(m, -1, n)
    best = [None] * n
    for v in f.row_minima:
        for c in range(n):
            k = ((c - v) * m_inv) % n
            candidate = v + k * m
            if best[c] is None or candidate < best[c]:
                best[c] = candidate
    return tuple(sorted(best))


def to_dyck(f: Filter) -> Filter:
    """Translate so the minimum level becomes 0."""
    shift = min(f.row_minima)
    return Filter(f.m, f.n, tuple(v - shift for v in f.row_minima))


def is_dyck(f: Filter) -> bool:
    return min(f.row_minima) == 0


def is_balanced(f: Filter) -> bool:
    return sum(f.row_minima) == comb(f.m + 1, 2)


def to_balanced(f: Filter) -> Filter:
    """Translate so the row minima sum to ``m(m+1)/2``.

    Translation moves the sum in steps of m, and the residue of the sum
    mod m is a class invariant, so the shift is always integral for a
    genuine filter.
    """
    total = sum(f.row_minima)
    target = comb(f.m + 1, 2)
    shift, rem = divmod(target - total, f.m)
    if rem:
        raise InternalInconsistency(
            f"row-minima sum {total} not congruent to {target} mod {f.m}"
        )
    return Filter(f.m, f.n, tuple(v + shift for v in f.row_minima))


def equivalent(f: Filter, g: Filter) -> bool:
    """Same filter up to translation of all levels."""
    return (f.m, f.n) == (g.m, g.n) and to_balanced(f) == to_balanced(g)


def removable_levels(f: Filter) -> tuple[int, ...]:
    """Row minima that are also column-minimal: the poset-minimal levels.

    Removing any other level would leave the point below it stranded, so
    these are exactly the levels whose removal yields another filter.
    """
    out = []
    for v in f.row_minima:
        if v - f.n < f.minimum_by_residue((v - f.n) % f.m):
            out.append(v)
    return tuple(out)


def remove(f: Filter, v: int) -> Filter:
    """Drop the minimal level ``v``; its row now starts at ``v + m``.

    The result is not rebalanced; graph traversals compose this with
    :func:`to_balanced`.
    """
    if v not in removable_levels(f):
        raise LevelNotRemovable(f"level {v} is not removable from {f.row_minima}")
    minima = tuple(x + f.m if x == v else x for x in f.row_minima)
    return Filter(f.m, f.n, minima)


def mn_swap(f: Filter) -> Filter:
    """The same filter with the roles of rows and columns exchanged."""
    return Filter(f.n, f.m, column_minima(f))


def filter_from_column_minima(m: int, n: int, cols: Sequence[int]) -> Filter:
    """Build the filter generated upward by one level per column.

    Every filter level sits above its column minimum, so the up-closure of
    the column minima recovers the whole filter; the row minima are read
    off by solving ``k*n = r - v (mod m)`` within each column.
    """
    cols = tuple(cols)
    if len(cols) != n or len({v % n for v in cols}) != n:
        raise InternalInconsistency(
            f"expected one column minimum per residue class mod {n}, got {cols}"
        )
    n_inv = pow(n, -1, m)
    best = [None] * m
    for v in cols:
        for r in range(m):
            k = ((r - v) * n_inv) % m
            candidate = v + k * n
            if best[r] is None or candidate < best[r]:
                best[r] = candidate
    f = Filter(m, n, tuple(best))
    if column_minima(f) != tuple(sorted(cols)):
        raise InternalInconsistency(
            f"levels {sorted(cols)} are not the column minima of a filter"
        )
    return f


def generator_filter(m: int, n: int) -> Filter:
    """The filter generated by the single level ``(1+m+n-mn)/2``.

    Its row minima form the balanced staircase ``l, l+n, ..., l+(m-1)n``.
    """
    l = (1 + m + n - m * n) // 2
    return Filter(m, n, tuple(l + k * n for k in range(m)))


def dyck_word(f: Filter) -> Word:
    """Sorted column lengths of the filter's boundary path.

    The horizontal step whose west endpoint has level q sits ``a*q mod m``
    cells below the top of the fundamental rectangle, where ``a*n = -1
    (mod m)``.
    """
    d = to_dyck(f)
    a = (-pow(d.n, -1, d.m)) % d.m if d.m > 1 else 0
    letters = sorted((a * q) % d.m for q in column_minima(d))
    return Word(d.m, d.n, tuple(letters))


def filter_from_dyck_word(w: Word) -> Filter:
    """The Dyck filter whose boundary path has the given column lengths."""
    if not is_parking_word(w):
        raise NotAParkingWord(f"{w} is not a parking word")
    letters = w.letters
    if any(a > b for a, b in zip(letters, letters[1:])):
        raise NotDyck(f"{w} is not weakly increasing")
    m, n = w.m, w.n
    # walking from (0,0), column lengths decrease; step j goes west to
    # x = -(j+1) at height m - c, giving west-endpoint level below
    desc = sorted(letters, reverse=True)
    cols = tuple(-(j + 1) * m + (m - c) * n for j, c in enumerate(desc))
    return filter_from_column_minima(m, n, cols)


def dyck_filter_to_path(f: Filter) -> tuple[str, tuple[int, ...]]:
    """Boundary path of a Dyck filter from (0,0) to (-n, m).

    Returns the step string over {N, W} together with one level per step:
    a north step is labeled by its north endpoint, a west step by its
    west endpoint.
    """
    if not is_dyck(f):
        raise NotDyck(f"row minima {f.row_minima} have nonzero minimum")
    m, n = f.m, f.n
    heights = sorted((m - c for c in dyck_word(f).letters), reverse=False)
    # traversal wants decreasing column lengths = increasing heights
    steps = []
    levels = []
    x = y = 0
    for h in heights:
        while y < h:
            y += 1
            steps.append("N")
            levels.append(level(x, y, m, n))
        x -= 1
        steps.append("W")
        levels.append(level(x, y, m, n))
    while y < m:
        y += 1
        steps.append("N")
        levels.append(level(x, y, m, n))
    return "".join(steps), tuple(levels)


def filter_from_path(m: int, n: int, steps: str) -> Filter:
    """Rebuild a Dyck filter from its boundary-path step string."""
    if sorted(steps) != sorted("N" * m + "W" * n):
        raise NotDyck(f"path needs {m} N steps and {n} W steps, got {steps!r}")
    x = y = 0
    cols = []
    for s in steps:
        if s == "N":
            y += 1
        else:
            x -= 1
            cols.append(level(x, y, m, n))
        if level(x, y, m, n) < 0:
            raise NotDyck(f"path {steps!r} dips below the 0-level line")
    return filter_from_column_minima(m, n, cols)


def enumerate_balanced(m: int, n: int) -> Iterator[Filter]:
    """All balanced filters, one per equivalence class, in Dyck-word order.

    There are binomial(m+n, n)/(m+n) of them.
    """
    from .words import enumerate_words

    for w in enumerate_words(m, n, "dyck"):
        yield to_balanced(filter_from_dyck_word(w))
