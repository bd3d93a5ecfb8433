"""The core constructions: forward/reverse tableau building along a
diagonal, box sequences with their displacement counts, closed forms for
descent-driven runs, the combined minimal-orbit tableau of a permutation,
and its inverse.

Orientation notes: the slide-based constructions work in either
orientation of the rectangle.  `column_sequence` and `delta_closed_form`
assume the permutation size n is the number of *columns*, while
`augmented_insertion_tableau` assumes n is the number of *rows*; both
check their assumption instead of transposing silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .shapes import (
    Box,
    Diagonal,
    Partition,
    Rectangle,
    SkewShape,
    complement_box,
    complement_shape,
    contains,
    staircase_diagonal,
)
from .tableaux import (
    PartialTableau,
    _forward_slide_core,
    _reverse_slide_core,
    complement_tableau,
    is_standard_normalized,
    promotion,
)
from .words import (
    Permutation,
    augmented_word,
    conjugate_by_reversal,
    descents,
    insertion_tableau,
    prefix_terms,
)


class NotMinimalOrbitError(ValueError):
    """The tableau is not in the minimal promotion-orbit set."""


class ExperimentalConstructionError(ValueError):
    """The tall-rectangle (m < n) construction is undefined or failed."""


class DiagonalMismatchError(RuntimeError):
    """Forward and reverse constructions disagreed on the diagonal, which
    the combination theorem forbids; this signals an implementation bug."""


def superstandard_choice(shape: Partition) -> PartialTableau:
    """Row-by-row filling 1..N of a straight shape."""
    entries = {}
    k = 1
    for i, length in enumerate(shape.rows, start=1):
        for j in range(1, length + 1):
            entries[Box(i, j)] = k
            k += 1
    return PartialTableau(SkewShape(shape), entries)


def _check_choice(u: PartialTableau, shape: Partition) -> PartialTableau:
    if u.region != SkewShape(shape):
        raise ValueError(f"choice tableau must live on {shape}, got {u.region}")
    if not is_standard_normalized(u):
        raise ValueError("choice tableau must be standard with entries 1..N")
    return u


def _slide_order(u: PartialTableau) -> list[Box]:
    """Boxes in the order they are slid: the k-th slide uses the box
    holding entry N+1-k, i.e. decreasing entry order."""
    return [b for b, _ in sorted(u.entries.items(), key=lambda kv: -kv[1])]


def _pop_corner(mu: list[int], b: Box) -> None:
    row, col = b
    if not (1 <= row <= len(mu) and mu[row - 1] == col and (row == len(mu) or mu[row] < col)):
        raise ValueError(f"{b} is not a removable corner of the unfilled region")
    mu[row - 1] -= 1


def forward_tableau(w: Permutation, diag: Diagonal, choice: PartialTableau | None = None, trace: bool = False):
    """Seed w(i) at the i-th diagonal box, then forward-slide the region
    below/left of the diagonal away, refilling a diagonal box with its old
    entry plus n whenever a sliding path ends there.

    The result fills lambda_plus and is independent of the choice tableau;
    entries <= n form the insertion tableau of w's one-line word.  With
    trace=True returns (tableau, frames) including the initial seeding.
    """
    n = diag.n
    if w.n != n:
        raise ValueError(f"permutation size {w.n} != diagonal size {n}")
    u = _check_choice(choice, diag.lambda_minus) if choice is not None else superstandard_choice(diag.lambda_minus)
    region = SkewShape(diag.lambda_plus)
    t = PartialTableau(region, {b: w(i) for i, b in enumerate(diag.boxes, start=1)})
    frames = [t]
    targets = set(diag.boxes)
    mu = list(diag.lambda_minus.rows)
    for b in _slide_order(u):
        _pop_corner(mu, b)
        entries, _path, terminal = _forward_slide_core(t, b)
        if terminal not in targets:
            raise DiagonalMismatchError(f"slide from {b} ended at {terminal}, off the diagonal")
        entries[terminal] = t[terminal] + n
        t = PartialTableau(region, entries)
        frames.append(t)
    assert t.size == diag.lambda_plus.size, "construction did not fill lambda_plus"
    return (t, frames) if trace else t


def reverse_tableau(w: Permutation, diag: Diagonal, rect: Rectangle, choice: PartialTableau | None = None, trace: bool = False):
    """Mirror construction on the region above/right of the diagonal:
    seed w(i) + (m-1)n, reverse-slide the complement of lambda_plus away,
    refilling a diagonal box with its old entry minus n.

    The choice tableau lives on the complement of lambda_plus (a straight
    shape); its cells are rotated into the rectangle.
    """
    n = diag.n
    if w.n != n:
        raise ValueError(f"permutation size {w.n} != diagonal size {n}")
    full = rect.as_partition()
    if not contains(diag.lambda_plus, full):
        raise ValueError("diagonal does not fit in the rectangle")
    nu = complement_shape(diag.lambda_plus, rect)
    u = _check_choice(choice, nu) if choice is not None else superstandard_choice(nu)
    region = SkewShape(full, diag.lambda_minus)
    shift = rect.ncells - n
    t = PartialTableau(region, {b: w(i) + shift for i, b in enumerate(diag.boxes, start=1)})
    frames = [t]
    targets = set(diag.boxes)
    mu = list(nu.rows)
    for cell in _slide_order(u):
        _pop_corner(mu, cell)
        b = complement_box(cell, rect)
        entries, _path, terminal = _reverse_slide_core(t, b)
        if terminal not in targets:
            raise DiagonalMismatchError(f"slide from {b} ended at {terminal}, off the diagonal")
        entries[terminal] = t[terminal] - n
        t = PartialTableau(region, entries)
        frames.append(t)
    assert t.size == region.size, "construction did not fill the region"
    return (t, frames) if trace else t


def forward_tableau_by_peeling(w: Permutation, diag: Diagonal, corner_order) -> PartialTableau:
    """Equivalent reformulation of forward_tableau driven by a corner
    peeling of the full rectangle down to the empty shape: seed when a
    diagonal box is peeled, slide when a cell below/left of the diagonal
    is peeled, ignore the rest."""
    order = [Box(*b) for b in corner_order]
    if not order:
        raise ValueError("empty peeling order")
    nrows = max(b.row for b in order)
    ncols = max(b.col for b in order)
    if sorted(order) != sorted(Partition((ncols,) * nrows).cells()):
        raise ValueError("peeling order must cover a full rectangle exactly once")
    n = diag.n
    if w.n != n:
        raise ValueError(f"permutation size {w.n} != diagonal size {n}")
    region = SkewShape(diag.lambda_plus)
    seed = {b: i for i, b in enumerate(diag.boxes, start=1)}
    t = PartialTableau(region, {})
    mu = [ncols] * nrows
    for b in order:
        _pop_corner(mu, b)
        if b in seed:
            entries = dict(t.entries)
            entries[b] = w(seed[b])
            t = PartialTableau(region, entries)
        elif b in diag.lambda_minus:
            entries, _path, terminal = _forward_slide_core(t, b)
            if terminal not in seed:
                raise DiagonalMismatchError(f"slide from {b} ended at {terminal}, off the diagonal")
            entries[terminal] = t[terminal] + n
            t = PartialTableau(region, entries)
    assert t.size == diag.lambda_plus.size
    return t


@dataclass
class BoxSequenceRun:
    """Terminals of diagonal-driven reverse slides and the displacement
    counts delta(i) = #{k : sigma_k = i and the k-th terminal is not the
    i-th diagonal box}."""

    sigma_prefix: tuple[int, ...]
    boxes: tuple[Box, ...]
    delta: dict[int, int]
    trace: tuple[PartialTableau, ...] | None = None


def box_sequence(sigma, diag: Diagonal, choice: PartialTableau | None = None, steps: int | None = None, trace: bool = False) -> BoxSequenceRun:
    """Drive reverse slides from diagonal boxes: at step k put a hole at
    box sigma_k, reverse-slide it through the current tableau, record the
    terminal, then delete whatever entry now occupies that diagonal box.

    With steps=None runs n*(size of lambda_minus + 1) steps, enough for
    every entry to have been deleted (asserted), after which all further
    slides are trivial.
    """
    n = diag.n
    u = _check_choice(choice, diag.lambda_minus) if choice is not None else superstandard_choice(diag.lambda_minus)
    auto = steps is None
    if auto:
        steps = n * (diag.lambda_minus.size + 1)
    sig = prefix_terms(sigma, steps)
    if any(not 1 <= s <= n for s in sig):
        raise ValueError(f"sequence terms must lie in 1..{n}")
    region = SkewShape(diag.lambda_plus)
    t = PartialTableau(region, u.entries)
    frames = [t]
    boxes = []
    for s in sig:
        hole = diag.box(s)
        if t.is_filled(hole):
            raise RuntimeError(f"diagonal box {hole} occupied before its slide")
        entries, _path, terminal = _reverse_slide_core(t, hole)
        boxes.append(terminal)
        entries.pop(hole, None)
        t = PartialTableau(region, entries)
        if trace:
            frames.append(t)
    if auto and t.entries:
        raise RuntimeError("stabilization bound too small: entries remain")
    delta = {i: 0 for i in range(1, n + 1)}
    for s, b in zip(sig, boxes):
        if b != diag.box(s):
            delta[s] += 1
    return BoxSequenceRun(tuple(sig), tuple(boxes), delta, tuple(frames) if trace else None)


def tableau_from_box_sequence(run: BoxSequenceRun, diag: Diagonal) -> PartialTableau:
    """Reconstruct the forward tableau: the entry in each box is the first
    step at which it appeared as a terminal."""
    first = {}
    for k, b in enumerate(run.boxes, start=1):
        first.setdefault(b, k)
    missing = [b for b in SkewShape(diag.lambda_plus).cells() if b not in first]
    if missing:
        raise ValueError(f"run too short: boxes never reached: {missing}")
    return PartialTableau(SkewShape(diag.lambda_plus), first)


def column_sequence(descent_list, n: int, count: int) -> tuple[int, ...]:
    """Concatenated blocks (1, ..., n-d_j); with sigma the descent-driven
    sequence, the k-th reverse-slide terminal lands in this column.
    Assumes n is the number of columns of the rectangle."""
    d = tuple(descent_list)
    if any(not 1 <= x <= n - 1 for x in d):
        raise ValueError(f"descents must lie in 1..{n - 1}")
    if any(a <= b for a, b in zip(d, d[1:])):
        raise ValueError("descents must strictly decrease")
    out = []
    j = 0
    while len(out) < count:
        dj = d[j] if j < len(d) else 0
        out.extend(range(1, n - dj + 1))
        j += 1
    return tuple(out[:count])


def delta_closed_form(w: Permutation, lambda_plus: Partition, n: int | None = None) -> dict[int, int]:
    """Displacement counts for the descent-driven sequence, directly from
    the descent set: delta(i) = C_i - #{j : d_j >= i} + #{j : d_j >= n+1-i} - 1
    with C_i the i-th column length of lambda_plus.  Assumes n is the
    number of columns of the rectangle."""
    n = n if n is not None else w.n
    if w.n != n:
        raise ValueError("permutation size must equal n")
    if lambda_plus.ncols != n:
        raise ValueError("lambda_plus must have exactly n columns (n-columns orientation)")
    d = sorted(descents(w), reverse=True)
    out = {}
    for i in range(1, n + 1):
        ci = lambda_plus.col_len(i)
        out[i] = ci - sum(1 for x in d if x >= i) + sum(1 for x in d if x >= n + 1 - i) - 1
    return out


def augmented_insertion_tableau(w: Permutation, m: int, shape: Partition | None = None) -> PartialTableau:
    """Insertion tableau of the augmented word of w, restricted to `shape`
    (whole tableau when shape is None).  Assumes n is the number of rows;
    for m >= n and a diagonal shape this equals forward_tableau."""
    n = w.n
    rows = insertion_tableau(augmented_word(w, m))
    if shape is None:
        return PartialTableau(
            SkewShape(Partition(tuple(len(r) for r in rows))),
            {Box(i, j): v for i, row in enumerate(rows, 1) for j, v in enumerate(row, 1)},
        )
    if shape.nrows > n:
        raise ValueError(f"shape has {shape.nrows} rows; at most {n} allowed")
    got = Partition(tuple(len(r) for r in rows))
    if not contains(shape, got):
        raise ValueError(f"shape {shape} not contained in the insertion tableau shape {got}")
    entries = {Box(i, j): rows[i - 1][j - 1] for (i, j) in shape.cells()}
    return PartialTableau(SkewShape(shape), entries)


def _splice(plus: PartialTableau, minus: PartialTableau, rect: Rectangle, lam_plus: Partition, lam_minus: Partition) -> PartialTableau:
    for cell in SkewShape(lam_plus, lam_minus).cells():
        if plus[cell] != minus[cell]:
            raise DiagonalMismatchError(
                f"constructions disagree at {cell}: {plus[cell]} vs {minus[cell]}"
            )
    entries = dict(minus.entries)
    entries.update(plus.entries)
    t = PartialTableau(SkewShape(rect.as_partition()), entries)
    if not is_standard_normalized(t):
        raise DiagonalMismatchError("combined tableau is not standard")
    return t


def _tall_frame(n: int, m: int):
    """Pseudo-diagonal for tall rectangles (m < n): boxes climb the first
    column, then step strictly up-right across the remaining columns."""
    lam_plus = Partition(tuple(max(1, m + 1 - r) for r in range(1, n + 1)))
    lam_minus = Partition(tuple(max(0, m - r) for r in range(1, n + 1)))
    boxes = tuple(Box(r, lam_plus.row_len(r)) for r in range(n, 0, -1))
    return lam_plus, lam_minus, boxes


def _minimal_orbit_tableau_insertion(w: Permutation, rect: Rectangle, lam_plus: Partition, lam_minus: Partition) -> PartialTableau:
    m = rect.ncells // w.n
    plus = augmented_insertion_tableau(w, m, lam_plus)
    minus = complement_tableau(
        augmented_insertion_tableau(conjugate_by_reversal(w), m, complement_shape(lam_minus, rect)),
        rect,
    )
    return _splice(plus, minus, rect, lam_plus, lam_minus)


def minimal_orbit_tableau(
    w: Permutation,
    rect: Rectangle,
    diag: Diagonal | None = None,
    via: str = "slides",
    experimental: bool = False,
    choice: PartialTableau | None = None,
    choice_reverse: PartialTableau | None = None,
) -> PartialTableau:
    """The standard tableau of shape rect attached to w: forward and
    reverse constructions spliced along a diagonal.  One promotion step
    carries the result to the tableau of (promotion cycle) o w, so its
    promotion order divides n.

    For m < n no diagonal exists; with experimental=True the insertion
    route is used on a pseudo-diagonal, checked after the fact
    (consistency, standardness, promotion order dividing n).
    """
    n = w.n
    if rect.n != n:
        raise ValueError(f"rectangle n={rect.n} does not match permutation size {n}")
    if via not in ("slides", "insertion"):
        raise ValueError(f"unknown route {via!r}")
    if rect.m < n:
        if not experimental or via != "insertion":
            raise ExperimentalConstructionError(
                "m < n is undefined here; pass via='insertion' and experimental=True"
            )
        if not rect.n_is_rows:
            raise ExperimentalConstructionError("tall-rectangle route needs n as the row count")
        lam_plus, lam_minus, _boxes = _tall_frame(n, rect.m)
        try:
            t = _minimal_orbit_tableau_insertion(w, rect, lam_plus, lam_minus)
        except (DiagonalMismatchError, ValueError) as exc:
            raise ExperimentalConstructionError(f"construction failed for w={w}: {exc}") from exc
        cur = t
        for _ in range(n):
            cur = promotion(cur)
        if cur != t:
            raise ExperimentalConstructionError(f"promotion order of the result does not divide {n}")
        return t
    diag = diag if diag is not None else staircase_diagonal(rect)
    if diag.n != n:
        raise ValueError(f"diagonal size {diag.n} does not match permutation size {n}")
    if via == "insertion":
        if not rect.n_is_rows:
            raise ValueError("insertion route needs n as the row count")
        return _minimal_orbit_tableau_insertion(w, rect, diag.lambda_plus, diag.lambda_minus)
    plus = forward_tableau(w, diag, choice)
    minus = reverse_tableau(w, diag, rect, choice_reverse)
    return _splice(plus, minus, rect, diag.lambda_plus, diag.lambda_minus)


def invert(t: PartialTableau, diag: Diagonal | None = None) -> Permutation:
    """Read the permutation back off the diagonal residues mod n.

    Raises NotMinimalOrbitError when the residues collide or the
    reconstructed permutation does not rebuild t, both of which certify
    that t is outside the minimal promotion-orbit set.
    """
    outer, inner = t.region.outer, t.region.inner
    if inner.size or not outer.rows or len(set(outer.rows)) != 1:
        raise ValueError("invert needs a full rectangle tableau")
    if not is_standard_normalized(t):
        raise ValueError("invert needs a standard tableau with entries 1..N")
    nrows, ncols = outer.nrows, outer.ncols
    n, m = min(nrows, ncols), max(nrows, ncols)
    rect = Rectangle(n, m, n_is_rows=(nrows == n))
    diag = diag if diag is not None else staircase_diagonal(rect)
    residues = tuple((t[b] - 1) % n + 1 for b in diag.boxes)
    if sorted(residues) != list(range(1, n + 1)):
        raise NotMinimalOrbitError(f"diagonal residues {residues} collide; not in the minimal orbit set")
    w = Permutation(residues)
    if minimal_orbit_tableau(w, rect, diag) != t:
        raise NotMinimalOrbitError("residues form a permutation but do not rebuild the tableau")
    return w
