"""JSON schemas and compact text forms for every domain type.

Schemas:
    Word              {"m": int, "n": int, "letters": [int, ...]}
    Point             {"m": int, "coords": [int, ...]}
    Filter            {"m": int, "n": int, "row_minima": [int, ...]}
    FilterTuple       {"m": int, "n": int, "row_minima": [...], "removals": [...]}
    AffinePermutation {"n": int, "window": [int, ...]}
    QTTable           {"m": int, "n": int, "over": str, "counts": [[int, ...], ...]}

Words also travel as compact digit strings ("020101151") when m <= 10,
or comma-separated letters otherwise.  Malformed input raises
:class:`SchemaViolation` carrying the path of the offending field.
"""

from __future__ import annotations

from typing import Any

from .action import Point
from .affine import AffinePermutation
from .errors import RatparkError, SchemaViolation
from .filters import Filter
from .tuples import FilterTuple, QTTable
from .words import Word


def _require_int(obj: Any, path: str) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise SchemaViolation(path, f"expected an integer, got {obj!r}")
    return obj


def _require_int_list(obj: Any, path: str) -> list[int]:
    if not isinstance(obj, list):
        raise SchemaViolation(path, f"expected a list, got {obj!r}")
    return [_require_int(v, f"{path}[{i}]") for i, v in enumerate(obj)]


def _require_keys(obj: Any, path: str, keys: tuple[str, ...]) -> None:
    if not isinstance(obj, dict):
        raise SchemaViolation(path, f"expected an object, got {obj!r}")
    for key in keys:
        if key not in obj:
            raise SchemaViolation(f"{path}.{key}", "missing field")


def word_to_json(w: Word) -> dict:
    return {"m": w.m, "n": w.n, "letters": list(w.letters)}


def word_from_json(obj: Any, path: str = "word") -> Word:
    _require_keys(obj, path, ("m", "n", "letters"))
    m = _require_int(obj["m"], f"{path}.m")
    n = _require_int(obj["n"], f"{path}.n")
    letters = _require_int_list(obj["letters"], f"{path}.letters")
    if len(letters) != n:
        raise SchemaViolation(f"{path}.letters", f"expected {n} letters")
    for i, letter in enumerate(letters):
        if not 0 <= letter < m:
            raise SchemaViolation(
                f"{path}.letters[{i}]", f"letter {letter} outside [0, {m})"
            )
    return Word(m, n, tuple(letters))


def word_to_text(w: Word) -> str:
    return str(w)


def word_from_text(text: str, m: int, n: int | None = None) -> Word:
    """Parse a compact digit string (m <= 10 only) or comma-joined letters."""
    text = text.strip()
    if "," in text or "-" in text:
        try:
            letters = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise SchemaViolation("word", f"bad letter list {text!r}") from exc
    else:
        if m > 10:
            raise SchemaViolation(
                "word", f"digit-string words need m <= 10, got m={m}"
            )
        if not text.isdigit():
            raise SchemaViolation("word", f"bad digit string {text!r}")
        letters = tuple(int(ch) for ch in text)
    try:
        return Word(m, n if n is not None else len(letters), letters)
    except RatparkError as exc:
        raise SchemaViolation("word", str(exc)) from exc


def point_to_json(p: Point) -> dict:
    return {"m": p.m, "coords": list(p.coords)}


def point_from_json(obj: Any, path: str = "point") -> Point:
    _require_keys(obj, path, ("m", "coords"))
    m = _require_int(obj["m"], f"{path}.m")
    coords = _require_int_list(obj["coords"], f"{path}.coords")
    if len(coords) != m:
        raise SchemaViolation(f"{path}.coords", f"expected {m} coordinates")
    try:
        return Point(tuple(coords))
    except RatparkError as exc:
        raise SchemaViolation(f"{path}.coords", str(exc)) from exc


def filter_to_json(f: Filter) -> dict:
    return {"m": f.m, "n": f.n, "row_minima": list(f.row_minima)}


def filter_from_json(obj: Any, path: str = "filter") -> Filter:
    _require_keys(obj, path, ("m", "n", "row_minima"))
    m = _require_int(obj["m"], f"{path}.m")
    n = _require_int(obj["n"], f"{path}.n")
    minima = _require_int_list(obj["row_minima"], f"{path}.row_minima")
    try:
        return Filter(m, n, tuple(minima))
    except RatparkError as exc:
        raise SchemaViolation(f"{path}.row_minima", str(exc)) from exc


def tuple_to_json(t: FilterTuple) -> dict:
    return {
        "m": t.m,
        "n": t.n,
        "row_minima": list(t.initial.row_minima),
        "removals": list(t.removals),
    }


def tuple_from_json(obj: Any, path: str = "tuple") -> FilterTuple:
    _require_keys(obj, path, ("m", "n", "row_minima", "removals"))
    initial = filter_from_json(
        {"m": obj["m"], "n": obj["n"], "row_minima": obj["row_minima"]}, path
    )
    removals = _require_int_list(obj["removals"], f"{path}.removals")
    try:
        return FilterTuple(initial, tuple(removals))
    except RatparkError as exc:
        raise SchemaViolation(f"{path}.removals", str(exc)) from exc


def window_to_json(w: AffinePermutation) -> dict:
    return {"n": w.n, "window": list(w.window)}


def window_from_json(obj: Any, path: str = "affine") -> AffinePermutation:
    _require_keys(obj, path, ("n", "window"))
    n = _require_int(obj["n"], f"{path}.n")
    window = _require_int_list(obj["window"], f"{path}.window")
    if len(window) != n:
        raise SchemaViolation(f"{path}.window", f"expected {n} entries")
    try:
        return AffinePermutation(tuple(window))
    except RatparkError as exc:
        raise SchemaViolation(f"{path}.window", str(exc)) from exc


def window_from_text(text: str) -> AffinePermutation:
    try:
        window = tuple(int(part) for part in text.strip().split(","))
        return AffinePermutation(window)
    except RatparkError as exc:
        raise SchemaViolation("affine.window", str(exc)) from exc
    except ValueError as exc:
        raise SchemaViolation("affine.window", f"bad window {text!r}") from exc


def qt_table_to_json(t: QTTable) -> dict:
    return {
        "m": t.m,
        "n": t.n,
        "over": t.over,
        "counts": [list(row) for row in t.counts],
    }


def qt_table_from_json(obj: Any, path: str = "qt_table") -> QTTable:
    _require_keys(obj, path, ("m", "n", "over", "counts"))
    m = _require_int(obj["m"], f"{path}.m")
    n = _require_int(obj["n"], f"{path}.n")
    over = obj["over"]
    if over not in ("parking", "dyck"):
        raise SchemaViolation(f"{path}.over", f"expected parking or dyck, got {over!r}")
    if not isinstance(obj["counts"], list):
        raise SchemaViolation(f"{path}.counts", "expected a list of rows")
    counts = tuple(
        tuple(_require_int_list(row, f"{path}.counts[{i}]"))
        for i, row in enumerate(obj["counts"])
    )
    return QTTable(m, n, over, counts)
