"""The piecewise-linear action of words on sorted integer tuples.

A letter ``i`` acts on a weakly increasing m-tuple by adding ``m`` to the
i-th smallest coordinate, subtracting 1 from every coordinate, and
resorting.  Coordinate sums are preserved, so all solver work happens on
the slice of tuples summing to ``m(m+1)/2``: there the fixed point of a
coprime parking word is literally the row-minima vector of a balanced
filter (see :mod:`ratpark.filters`).

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import (
    DimensionMismatch,
    InsufficientGap,
    InternalInconsistency,
    IterationBudgetExhausted,
    LetterOutOfRange,
    NotAParkingWord,
)
from .words import Word, is_parking_word, touch_decomposition

MAX_ITER_ENV = "RATPARK_MAX_ITER"


@dataclass(frozen=True)
class Point:
    """A weakly increasing tuple of exact integers."""

    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise DimensionMismatch("a point needs at least one coordinate")
        if any(a > b for a, b in zip(coords, coords[1:])):
            raise DimensionMismatch(f"coordinates not weakly increasing: {coords}")
        object.__setattr__(self, "coords", coords)

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def total(self) -> int:
        return sum(self.coords)

    def rebalanced(self, target: int) -> "Point":
        """Translate by a multiple of (1,...,1) so the sum becomes ``target``."""
        shift, rem = divmod(target - self.total, self.m)
        if rem:
            raise DimensionMismatch(
                f"sum {self.total} cannot be rebalanced to {target} in steps of {self.m}"
            )
        return Point(tuple(c + shift for c in self.coords))


@dataclass(frozen=True)
class Fixed:
    point: Point


@dataclass(frozen=True)
class Cycle:
    period: int
    witness: Point


@dataclass(frozen=True)
class Diverged:
    step: int
    norm: int


@dataclass(frozen=True)
class OrbitReport:
    outcome: Fixed | Cycle | Diverged
    iterations: int


def _apply_raw(
    coords: tuple[int, ...], letters: Sequence[int], add: int, total_sub: int
) -> tuple[int, ...]:
    # Per-letter uniform subtractions never change coordinate comparisons,
    # so they are deferred to a single shift at the end.
    xs = list(coords)
    last = len(xs) - 1
    for letter in letters:
        v = xs[letter] + add
        j = letter
        while j < last and xs[j + 1] < v:
            xs[j] = xs[j + 1]
            j += 1
        xs[j] = v
    return tuple(x - total_sub for x in xs)


def apply_letter(x: Point, i: int) -> Point:
    """Add ``m`` to the i-th smallest coordinate, subtract 1 everywhere, sort."""
    m = x.m
    if not 0 <= i < m:
        raise LetterOutOfRange(f"letter {i} outside [0, {m})")
    return Point(_apply_raw(x.coords, (i,), m, 1))


def apply_word(x: Point, w: Word) -> Point:
    """Act by the letters of ``w`` from left to right."""
    if x.m != w.m:
        raise DimensionMismatch(f"point has {x.m} coordinates, word expects {w.m}")
    return Point(_apply_raw(x.coords, w.letters, w.m, w.n))


def _norm(coords: Sequence[int]) -> int:
    # sum over i<j of (x_j - x_i)^2, via m*sum(x^2) - (sum x)^2
    s = sum(coords)
    sq = sum(c * c for c in coords)
    return len(coords) * sq - s * s


def norm(x: Point) -> int:
    """Sum of squared pairwise coordinate differences; 0 iff all equal."""
    return _norm(x.coords)


def distance(x: Point, y: Point) -> int:
    """Same quadratic form applied to the coordinatewise difference."""
    if x.m != y.m:
        raise DimensionMismatch(f"dimension mismatch: {x.m} vs {y.m}")
    return _norm(tuple(a - b for a, b in zip(x.coords, y.coords)))


def contraction_certificate(w: Word, x: Point, y: Point) -> bool:
    """Whether acting by ``w`` did not increase the distance from x to y.

    The action is 1-Lipschitz, so this must always return True.
    """
    return distance(x, y) >= distance(apply_word(x, w), apply_word(y, w))


def staircase_point(m: int, n: int) -> Point:
    """The balanced staircase: canonical start point for orbit iteration.

    Coordinates ``l, l+n, ..., l+(m-1)n`` with ``2l = 1+m+n-mn`` sum to
    ``m(m+1)/2``.  When ``1+m+n-mn`` is odd (possible only for gcd > 1)
    the identity staircase ``(1,...,m)`` is used instead; it has the same
    sum.
    """
    two_l = 1 + m + n - m * n
    if two_l % 2 == 0:
        l = two_l // 2
        return Point(tuple(l + k * n for k in range(m)))
    return Point(tuple(range(1, m + 1)))


def default_budget(m: int, n: int) -> int:
    env = os.environ.get(MAX_ITER_ENV)
    if env is not None:
        return int(env)
    return 10 * (m + n) ** 2


def find_fixed_point(
    w: Word,
    max_iterations: int | None = None,
    escape_bound: int | None = None,
) -> OrbitReport:
    """Iterate ``x <- w(x)`` from the balanced staircase until resolution.

    Returns ``Fixed`` when an application leaves the point unchanged,
    ``Diverged`` once the norm exceeds the escape bound (non-parking words
    are guaranteed to escape), and ``Cycle`` on a repeat of period > 1 —
    but a coprime parking word admits a unique fixed point, so a cycle
    there is surfaced as :class:`InternalInconsistency` with the witness.

    The escape bound ``norm(start) + (m*n)**4`` is an engineering
    constant, not derived from any sharper estimate.
    """
    m, n = w.m, w.n
    budget = default_budget(m, n) if max_iterations is None else max_iterations
    start = staircase_point(m, n).coords
    bound = (_norm(start) + (m * n) ** 4) if escape_bound is None else escape_bound
    seen = {start: 0}
    cur = start
    for it in range(1, budget + 1):
        nxt = _apply_raw(cur, w.letters, m, n)
        if nxt == cur:
            return OrbitReport(Fixed(Point(cur)), it)
        nrm = _norm(nxt)
        if nrm > bound:
            return OrbitReport(Diverged(it, nrm), it)
        if nxt in seen:
            period = it - seen[nxt]
            if gcd(m, n) == 1 and is_parking_word(w):
                raise InternalInconsistency(
                    f"coprime parking word {w} entered a {period}-cycle",
                    witness=Point(nxt),
                )
            return OrbitReport(Cycle(period, Point(nxt)), it)
        seen[nxt] = it
        cur = nxt
    raise IterationBudgetExhausted(
        f"no resolution for {w} within {budget} word applications"
    )


def fixed_point_oracle(w: Word) -> Point:
    """Brute-force fixed point, independent of the orbit solver.

    Enumerates every parking word ``u``, builds its filter tuple on the
    area side, and returns the balanced row minima of the tuple whose
    rank word equals ``w``.  Only sensible when ``m**(n-1)`` is small.
    """
    from .filters import to_balanced
    from .tuples import rank_word, tuple_from_area_word
    from .words import enumerate_words

    if gcd(w.m, w.n) != 1 or not is_parking_word(w):
        raise NotAParkingWord(f"oracle needs a coprime parking word, got {w}")
    for u in enumerate_words(w.m, w.n, "parking"):
        t = tuple_from_area_word(u)
        if rank_word(t) == w:
            return Point(to_balanced(t.initial).row_minima)
    raise InternalInconsistency(f"no tuple has rank word {w}")


def _scaled_block_fixed_point(
    q: Word, add: int, cycle_sub: int, budget: int
) -> tuple[int, ...]:
    """Integer fixed point of the block dynamics used by the gap witness.

    Each letter of ``q`` adds ``add`` to a coordinate; ``cycle_sub`` is
    subtracted from all coordinates once per word application.  This is
    the original action scaled by ``add/q.m``, so its fixed points are the
    scaled fixed points of ``q`` — kept integral without ever forming the
    rational scale factor.

    When ``q`` has gcd > 1 the fixed region is a bounded convex set that
    the 1-Lipschitz iteration can orbit instead of entering: on a cycle
    the solver restarts from the floored centroid of the cycle points
    (which sits strictly nearer the fixed region), shifting the
    coordinate sum when restarts repeat, since integral fixed points
    need not exist on every sum slice.
    """
    mu, n_j = q.m, q.n
    if mu * cycle_sub != add * n_j:
        raise InternalInconsistency("block dynamics does not preserve sums")
    ratio, rem = divmod(add, mu)
    if rem == 0:
        start = tuple(c * ratio for c in staircase_point(mu, n_j).coords)
    else:
        start = (0,) * mu
    tried = set()
    for _ in range(2 * mu + 4):
        tried.add(start)
        seen = {start: 0}
        cur = start
        cycle_start = None
        for it in range(1, budget + 1):
            nxt = _apply_raw(cur, q.letters, add, cycle_sub)
            if nxt == cur:
                return cur
            if nxt in seen:
                cycle_start = seen[nxt]
                break
            seen[nxt] = it
            cur = nxt
        if cycle_start is None:
            raise IterationBudgetExhausted(
                f"block word {q} unresolved within {budget}"
            )
        cycle_points = [p for p, i in seen.items() if i >= cycle_start]
        period = len(cycle_points)
        centroid = tuple(
            sorted(sum(col) // period for col in zip(*cycle_points))
        )
        if centroid not in tried:
            start = centroid
        else:
            # exhaust nearby sum slices: not all of them carry integral
            # fixed points
            start = tuple(
                c + 1 if i == mu - 1 else c for i, c in enumerate(start)
            )
    raise InternalInconsistency(
        f"no integral fixed point located for block word {q}"
    )


def construct_fixed_point_general(
    w: Word, gaps: Sequence[int] | None = None
) -> Point:
    """Explicit fixed point for any parking word, touch points included.

    The word is cut at its touch points into blocks with no touch points;
    each block's fixed point is computed for the dynamics rescaled to add
    ``m`` per letter, offset by the entries of ``gaps``, concatenated, and
    rebalanced by an integer shift.  ``gaps`` holds one offset per block
    after the first; consecutive offsets (starting from 0) must increase
    by more than ``m*n`` so the blocks never interact while the word acts.
    """
    if not is_parking_word(w):
        raise NotAParkingWord(f"{w} is not a parking word")
    m, n = w.m, w.n
    blocks = touch_decomposition(w)
    k = len(blocks) - 1
    if gaps is None:
        gaps = [j * (m * n + 1) for j in range(1, k + 1)]
    gaps = list(gaps)
    if len(gaps) != k:
        raise InsufficientGap(f"expected {k} offsets, got {len(gaps)}")
    prev = 0
    for g in gaps:
        if g - prev <= m * n:
            raise InsufficientGap(
                f"offset {g} too close to {prev}; spacing must exceed {m * n}"
            )
        prev = g
    offsets = [0] + gaps

    budget = default_budget(m, n)
    coords: list[int] = []
    for offset, (_, q) in zip(offsets, blocks):
        # touch-point structure gives q.n * m == q.m * n, so each block
        # sheds exactly n per coordinate over one pass of the full word
        block = _scaled_block_fixed_point(q, m, n, budget)
        coords.extend(c + offset for c in block)

    target = m * (m + 1) // 2
    shift = (target - sum(coords)) // m
    point = Point(tuple(c + shift for c in coords))
    if apply_word(point, w).coords != point.coords:
        raise InternalInconsistency(
            f"assembled point is not fixed by {w}", witness=point
        )
    return point
