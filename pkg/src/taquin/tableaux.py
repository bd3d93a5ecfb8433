"""Partial and standard tableaux on skew regions, and jeu de taquin.

A PartialTableau keeps a sparse box -> entry map over a skew region, since
the constructions in `orbits` interleave filled and unfilled cells in
irregular patterns.  Strictness is enforced between adjacent filled cells
on every construction, which turns a buggy slide into a loud error.

Every operation is a pure function returning new values; callers may
parallelize freely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .shapes import (
    EMPTY,
    Box,
    Partition,
    Rectangle,
    SkewShape,
    complement_box,
    complement_shape,
    removable_corners,
)


class TableauError(ValueError):
    pass


class SlideError(TableauError):
    pass


class TableauFormatError(ValueError):
    """Raised when a tableau file/dict does not parse."""


class PartialTableau:
    """Entries on a subset of the cells of a skew region."""

    __slots__ = ("region", "entries")

    def __init__(self, region: SkewShape, entries: Mapping | Iterable = ()):
        if isinstance(entries, dict):
            items = entries.items()
        elif isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = entries
        norm = {}
        for b, v in items:
            norm[b if type(b) is Box else Box(*b)] = v if type(v) is int else int(v)
        outer_rows = region.outer.rows
        inner_rows = region.inner.rows
        n_inner = len(inner_rows)
        nrows = len(outer_rows)
        get = norm.get
        for (r, c), v in norm.items():
            if not (1 <= r <= nrows and c <= outer_rows[r - 1]) or c <= (inner_rows[r - 1] if r <= n_inner else 0):
                raise TableauError(f"entry at {(r, c)} outside the region")
            if v < 1:
                raise TableauError(f"non-positive entry {v} at {(r, c)}")
            right = get((r, c + 1))
            if right is not None and right <= v:
                raise TableauError(f"row not increasing at {(r, c)}: {v} !< {right}")
            below = get((r + 1, c))
            if below is not None and below <= v:
                raise TableauError(f"column not increasing at {(r, c)}: {v} !< {below}")
        if len(set(norm.values())) != len(norm):
            raise TableauError("duplicate entries")
        self.region = region
        self.entries = norm

    @property
    def size(self) -> int:
        return len(self.entries)

    def get(self, box, default=None):
        return self.entries.get(Box(*box), default)

    def __getitem__(self, box) -> int:
        return self.entries[Box(*box)]

    def is_filled(self, box) -> bool:
        return Box(*box) in self.entries

    def __eq__(self, other):
        return (
            isinstance(other, PartialTableau)
            and self.region == other.region
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.region, frozenset(self.entries.items())))

    def row_lists(self) -> list[list]:
        """One list per region row, covering inner+1..outer columns;
        None marks an unfilled cell."""
        out = []
        outer, inner = self.region.outer, self.region.inner
        for r in range(1, outer.nrows + 1):
            out.append(
                [self.entries.get(Box(r, c)) for c in range(inner.row_len(r) + 1, outer.row_len(r) + 1)]
            )
        return out

    def row_tuples(self) -> tuple:
        return tuple(tuple(row) for row in self.row_lists())

    def __repr__(self):
        return f"PartialTableau({format_grid(self)!r})"


def from_rows(rows, inner=EMPTY) -> PartialTableau:
    """Build a tableau from per-row entry lists (None = unfilled cell).

    rows[i] covers the cells of row i+1 right of the inner shape.
    """
    inner = inner if isinstance(inner, Partition) else Partition(tuple(inner))
    outer = Partition(tuple(inner.row_len(i + 1) + len(row) for i, row in enumerate(rows)))
    entries = {}
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=inner.row_len(i) + 1):
            if v is not None:
                entries[Box(i, j)] = v
    return PartialTableau(SkewShape(outer, inner), entries)


def standard_from_rows(rows) -> PartialTableau:
    t = from_rows(rows)
    if not is_standard_normalized(t):
        raise TableauError("rows do not form a standard tableau with entries 1..N")
    return t


def is_filled(t: PartialTableau) -> bool:
    return t.size == t.region.size


def is_standard_normalized(t: PartialTableau) -> bool:
    """Straight or skew region, all cells filled, entries exactly 1..N."""
    return is_filled(t) and sorted(t.entries.values()) == list(range(1, t.size + 1))


def _rectangle_dims(t: PartialTableau) -> tuple[int, int]:
    outer, inner = t.region.outer, t.region.inner
    if inner.size or not outer.rows or len(set(outer.rows)) != 1:
        raise TableauError("not a full rectangle region")
    return outer.nrows, outer.ncols


@dataclass(frozen=True)
class SlideResult:
    tableau: PartialTableau
    path: tuple[Box, ...]
    terminal: Box


def _forward_slide_core(t: PartialTableau, hole: Box):
    if hole not in t.region:
        raise SlideError(f"hole {hole} outside the region")
    if t.is_filled(hole):
        raise SlideError(f"hole {hole} is filled")
    if t.is_filled((hole.row, hole.col - 1)) or t.is_filled((hole.row - 1, hole.col)):
        raise SlideError(f"{hole} has a filled left/above neighbor")
    entries = dict(t.entries)
    get = entries.get
    cur = hole
    path = [cur]
    while True:
        right = get((cur.row, cur.col + 1))
        below = get((cur.row + 1, cur.col))
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            nxt = Box(cur.row, cur.col + 1)
        else:
            nxt = Box(cur.row + 1, cur.col)
        entries[cur] = entries.pop(nxt)
        cur = nxt
        path.append(cur)
    return entries, tuple(path), cur


def forward_slide(t: PartialTableau, hole) -> SlideResult:
    """Slide a hole down/right: repeatedly swap it with the smaller of its
    filled right/below neighbors, stopping when neither is filled.

    The hole must be an unfilled region cell with no filled cell directly
    left of or above it.
    """
    entries, path, terminal = _forward_slide_core(t, Box(*hole))
    return SlideResult(PartialTableau(t.region, entries), path, terminal)


def _reverse_slide_core(t: PartialTableau, hole: Box):
    if hole not in t.region:
        raise SlideError(f"hole {hole} outside the region")
    if t.is_filled(hole):
        raise SlideError(f"hole {hole} is filled")
    if t.is_filled((hole.row, hole.col + 1)) or t.is_filled((hole.row + 1, hole.col)):
        raise SlideError(f"{hole} has a filled right/below neighbor")
    entries = dict(t.entries)
    get = entries.get
    cur = hole
    path = [cur]
    while True:
        left = get((cur.row, cur.col - 1))
        above = get((cur.row - 1, cur.col))
        if left is None and above is None:
            break
        if above is None or (left is not None and left > above):
            nxt = Box(cur.row, cur.col - 1)
        else:
            nxt = Box(cur.row - 1, cur.col)
        entries[cur] = entries.pop(nxt)
        cur = nxt
        path.append(cur)
    return entries, tuple(path), cur


def reverse_slide(t: PartialTableau, hole) -> SlideResult:
    """Mirror of forward_slide: swap with the larger of the filled
    left/above neighbors; the hole travels up/left."""
    entries, path, terminal = _reverse_slide_core(t, Box(*hole))
    return SlideResult(PartialTableau(t.region, entries), path, terminal)


def rectify(t: PartialTableau) -> PartialTableau:
    """Slide the inner shape away (always from its last removable corner).

    The result is independent of the corner order; the suite checks this
    against random orders at small sizes.
    """
    if not is_filled(t):
        raise TableauError("rectify needs a fully filled region")
    outer, inner = t.region.outer, t.region.inner
    cur = PartialTableau(SkewShape(outer), t.entries)
    inner_rows = list(inner.rows)
    while any(inner_rows):
        corner = removable_corners(Partition(tuple(inner_rows)))[-1]
        cur = forward_slide(cur, corner).tableau
        inner_rows[corner.row - 1] -= 1
    shape = []
    for r in range(1, outer.nrows + 1):
        width = sum(1 for c in range(1, outer.row_len(r) + 1) if cur.is_filled((r, c)))
        for c in range(1, width + 1):
            assert cur.is_filled((r, c)), "rectified entries are not left-justified"
        shape.append(width)
    return PartialTableau(SkewShape(Partition(tuple(shape))), cur.entries)


def promotion(t: PartialTableau) -> PartialTableau:
    """Delete 1, decrement, rectify, and add N in the lower-right corner.

    For a full rectangle the rectification step is the single forward
    slide from (1,1), whose path necessarily ends at the bottom-right
    corner.
    """
    nrows, ncols = _rectangle_dims(t)
    if not is_standard_normalized(t):
        raise TableauError("promotion needs a standard tableau with entries 1..N")
    n_cells = nrows * ncols
    entries = dict(t.entries)
    del entries[Box(1, 1)]  # entry 1 always sits at (1,1)
    res = forward_slide(PartialTableau(t.region, entries), Box(1, 1))
    assert res.terminal == Box(nrows, ncols)
    new = {b: v - 1 for b, v in res.tableau.entries.items()}
    new[Box(nrows, ncols)] = n_cells
    return PartialTableau(t.region, new)


def inverse_promotion(t: PartialTableau) -> PartialTableau:
    nrows, ncols = _rectangle_dims(t)
    if not is_standard_normalized(t):
        raise TableauError("inverse promotion needs a standard tableau with entries 1..N")
    n_cells = nrows * ncols
    entries = dict(t.entries)
    del entries[Box(nrows, ncols)]  # entry N always sits at the bottom-right corner
    res = reverse_slide(PartialTableau(t.region, entries), Box(nrows, ncols))
    assert res.terminal == Box(1, 1)
    new = {b: v + 1 for b, v in res.tableau.entries.items()}
    new[Box(1, 1)] = 1
    return PartialTableau(t.region, new)


def promotion_order(t: PartialTableau) -> int:
    """Smallest r >= 1 with promotion^r(t) = t; divides the cell count."""
    n_cells = t.size
    cur = promotion(t)
    order = 1
    while cur != t:
        cur = promotion(cur)
        order += 1
        if order > n_cells:
            raise TableauError("promotion order exceeds the cell count")
    return order


def complement_tableau(t: PartialTableau, rect: Rectangle) -> PartialTableau:
    """Rotate the region 180 degrees inside rect and replace each entry v
    by ncells+1-v; an involution that preserves standardness."""
    outer, inner = t.region.outer, t.region.inner
    region = SkewShape(complement_shape(inner, rect), complement_shape(outer, rect))
    total = rect.ncells
    entries = {complement_box(b, rect): total + 1 - v for b, v in t.entries.items()}
    return PartialTableau(region, entries)


def reading_word(t: PartialTableau) -> tuple[int, ...]:
    """Row reading word: bottom row first, left-to-right within rows."""
    if not is_filled(t):
        raise TableauError("reading word needs a fully filled region")
    outer, inner = t.region.outer, t.region.inner
    word = []
    for r in range(outer.nrows, 0, -1):
        for c in range(inner.row_len(r) + 1, outer.row_len(r) + 1):
            word.append(t.entries[Box(r, c)])
    return tuple(word)


def to_file_dict(t: PartialTableau) -> dict:
    d = {"outer": list(t.region.outer.rows)}
    if t.region.inner.rows:
        d["inner"] = list(t.region.inner.rows)
    d["rows"] = t.row_lists()
    return d


def from_file_dict(d) -> PartialTableau:
    if not isinstance(d, dict) or "outer" not in d or "rows" not in d:
        raise TableauFormatError("tableau object needs 'outer' and 'rows'")
    try:
        outer = Partition(tuple(d["outer"]))
        inner = Partition(tuple(d.get("inner", ())))
        rows = d["rows"]
        if len(rows) != outer.nrows:
            raise TableauFormatError("'rows' must list one row per outer row")
        entries = {}
        for i, row in enumerate(rows, start=1):
            lo, hi = inner.row_len(i), outer.row_len(i)
            if len(row) != hi - lo:
                raise TableauFormatError(f"row {i} must have {hi - lo} cells")
            for j, v in enumerate(row, start=lo + 1):
                if v is not None:
                    entries[Box(i, j)] = v
        return PartialTableau(SkewShape(outer, inner), entries)
    except TableauFormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise TableauFormatError(str(exc)) from exc


def dumps(t: PartialTableau) -> str:
    return json.dumps(to_file_dict(t))


def loads(text: str) -> PartialTableau:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableauFormatError(f"invalid JSON: {exc}") from exc
    return from_file_dict(obj)


def format_grid(t: PartialTableau) -> str:
    """Aligned text grid; '.' marks unfilled region cells."""
    outer, inner = t.region.outer, t.region.inner
    width = max((len(str(v)) for v in t.entries.values()), default=1)
    lines = []
    for r in range(1, outer.nrows + 1):
        cells = []
        for c in range(1, outer.row_len(r) + 1):
            if c <= inner.row_len(r):
                cells.append(" " * width)
            else:
                v = t.entries.get(Box(r, c))
                cells.append(("." if v is None else str(v)).rjust(width))
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)
