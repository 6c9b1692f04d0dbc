"""The sweep map on Dyck filters and its inversion through fixed points.

Each step of a Dyck filter's boundary path carries a level (west steps
the level of their west endpoint, north steps of their north endpoint).
Sweeping reorders the steps by level: read from the far corner (-n, m)
toward (0, 0), the swept path lists the steps of the original in
increasing level order.  Levels of distinct steps never collide when
gcd(m, n) = 1, so the reordering is unambiguous.

Inversion rides on the rank-word machinery: the column-length word of a
swept path is the rank word of the original path's canonical tuple, so
inverting the rank word (a fixed-point computation) recovers the original
column-minimum levels and with them the path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistency, NotDyck
from .filters import (
    Filter,
    column_minima,
    dyck_filter_to_path,
    dyck_word,
    filter_from_column_minima,
    is_dyck,
    to_dyck,
)
from .tuples import FilterTuple, rank_word, tuple_from_rank_word
from .words import Word


@dataclass(frozen=True)
class LabeledPath:
    """A boundary path with one level per step."""

    m: int
    n: int
    steps: str
    step_levels: tuple[int, ...]

    def __post_init__(self):
        if len(self.steps) != len(self.step_levels):
            raise InternalInconsistency("steps and levels differ in length")
        if sorted(self.steps) != sorted("N" * self.m + "W" * self.n):
            raise NotDyck(
                f"path needs {self.m} N and {self.n} W steps, got {self.steps!r}"
            )


def labeled_path(d: Filter) -> LabeledPath:
    steps, levels = dyck_filter_to_path(d)
    return LabeledPath(d.m, d.n, steps, levels)


def dyck_embedding(d: Filter) -> FilterTuple:
    """The canonical tuple of a Dyck filter: remove its column minima in order."""
    if not is_dyck(d):
        raise NotDyck(f"row minima {d.row_minima} have nonzero minimum")
    return FilterTuple(d, tuple(sorted(column_minima(d))))


def sweep(d: Filter) -> Filter:
    """Reorder the boundary steps of ``d`` by their levels.

    The result is again a Dyck filter; its column minima are the west
    endpoints of the reordered walk.
    """
    if not is_dyck(d):
        raise NotDyck(f"row minima {d.row_minima} have nonzero minimum")
    path = labeled_path(d)
    pairs = sorted(zip(path.step_levels, path.steps))
    if len({lvl for lvl, _ in pairs}) != len(pairs):
        raise InternalInconsistency(f"step levels collide on {d.row_minima}")
    # increasing level order read from (-n, m); walking from (0, 0) means
    # taking the steps in decreasing level order
    x = y = 0
    cols = []
    for lvl, step in reversed(pairs):
        if step == "N":
            y += 1
        else:
            x -= 1
            cols.append((x * d.m) + (y * d.n))
    swept = filter_from_column_minima(d.m, d.n, cols)
    if not is_dyck(swept):
        raise InternalInconsistency(f"sweep of {d.row_minima} left the Dyck cone")
    return swept


def sweep_column_word(d: Filter) -> Word:
    """Column-length word of ``sweep(d)``, read off as a rank word."""
    w = rank_word(dyck_embedding(d))
    if any(a > b for a, b in zip(w.letters, w.letters[1:])):
        raise InternalInconsistency(f"rank word {w} of a Dyck tuple not increasing")
    return w


def sweep_inverse(d: Filter, max_iterations: int | None = None) -> Filter:
    """The unique Dyck filter mapped to ``d`` by :func:`sweep`.

    The column-length word of ``d`` is inverted as a rank word; the
    recovered tuple's initial column minima are the west-step levels of
    the preimage.
    """
    if not is_dyck(d):
        raise NotDyck(f"row minima {d.row_minima} have nonzero minimum")
    t = tuple_from_rank_word(dyck_word(d), max_iterations=max_iterations)
    preimage = to_dyck(t.initial)
    check = sweep(preimage)
    if check != d:
        raise InternalInconsistency(
            f"reconstructed preimage {preimage.row_minima} sweeps to "
            f"{check.row_minima}, expected {d.row_minima}"
        )
    return preimage
