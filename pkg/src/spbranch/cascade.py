"""Cascading ordered sequences and the two pair-deleting injections.

``iota_lr`` removes one ``(2 delta)'`` column pair from a Littlewood-Richardson
tableau by cascading its last ordered sequence; ``iota_sp`` removes one
``{i, i-bar}`` pair from an sp-highest tableau.  Both come with partial
inverses that re-validate what they build.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    DomainError,
    Partition,
    SkewShape,
    Tableau,
    is_even_conjugate,
    is_lattice_word,
    is_littlewood_richardson,
    is_semistandard,
    reading_cells,
    satisfies_semistandard,
    sp_weight,
    weight_vector,
)
from .crystal import is_sp_highest


class MalformedHighestWeight(DomainError):
    """The last barred entry is not where an sp-highest tableau keeps it."""


@dataclass(frozen=True)
class CascadeSequence:
    """Cells carrying the fillings ``1, 2, ..., m`` in order."""

    cells: tuple

    def __post_init__(self):
        cells = tuple(tuple(c) for c in self.cells)
        if not cells:
            raise ValueError("a cascade sequence needs at least one cell")
        if len(set(cells)) != len(cells):
            raise ValueError("cascade sequence cells must be distinct")
        object.__setattr__(self, "cells", cells)

    @property
    def m(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)

    def __getitem__(self, k):
        return self.cells[k]

    def cell_of(self, k: int):
        """Cell carrying filling ``k`` (1-based)."""
        return self.cells[k - 1]


@dataclass(frozen=True)
class StepRecord:
    """One application of ``iota_lr`` or ``iota_sp``.

    For the sp side ``before``/``after`` are ``SkewShape(shape, weight)``, so
    both kinds of step describe the same pair of shapes.
    """

    kind: str
    before: SkewShape
    after: SkewShape
    deleted_letter: Optional[int] = None
    deleted_cell: Optional[tuple] = None
    sequence: Optional[CascadeSequence] = None
    row_of_one: Optional[int] = None

    @property
    def m(self) -> Optional[int]:
        return None if self.sequence is None else self.sequence.m

    def trace_line(self) -> str:
        if self.kind == "iota_lr":
            cells = ",".join(f"({r},{c})" for r, c in self.sequence)
            return f"iota_lr: s=[{cells}] m={self.m} row_of_one={self.row_of_one}"
        r, c = self.deleted_cell
        return f"iota_sp: deleted={self.deleted_letter} at ({r},{c})"


def _as_sequence(s) -> CascadeSequence:
    return s if isinstance(s, CascadeSequence) else CascadeSequence(tuple(s))


def _check_sequence(t: Tableau, s: CascadeSequence) -> None:
    for k, cell in enumerate(s, start=1):
        if cell not in t.shape:
            raise DomainError(f"cell {cell} is not in the shape {t.shape}")
        if t[cell] != k:
            raise DomainError(f"cell {cell} holds {t[cell]}, expected {k}")


def check_conditions(t: Tableau, s) -> tuple:
    """Evaluate the three side conditions of a cascade sequence.

    (I) the 1-cell is the leftmost filled cell of its row;
    (II) no letter k strictly between the k-cell and the (k+1)-cell in the reading;
    (III) the m-cell is the last occurrence of m in the reading.
    Holes are skipped throughout.
    """
    s = _as_sequence(s)
    _check_sequence(t, s)
    row, col = s[0]
    first_filled = min(j for (i, j), a in t.items() if i == row and a is not None)
    cond1 = first_filled == col

    order = [(c, a) for c, a in t.reading_items() if a is not None]
    position = {c: p for p, (c, _) in enumerate(order)}
    cond2 = True
    for k in range(1, s.m):
        lo, hi = position[s.cell_of(k)], position[s.cell_of(k + 1)]
        if lo > hi or any(a == k for _, a in order[lo + 1:hi]):
            cond2 = False
            break
    last_m = max(p for p, (_, a) in enumerate(order) if a == s.m)
    cond3 = last_m == position[s.cell_of(s.m)]
    return cond1, cond2, cond3


def cascade(t: Tableau, s) -> Tableau:
    """Turn the 1-cell into a hole and decrement the rest of the sequence."""
    s = _as_sequence(s)
    _check_sequence(t, s)
    updates = {s[0]: None}
    for k, cell in enumerate(s.cells[1:], start=2):
        updates[cell] = k - 1
    return t.replace(updates)


def satisfies_lr(t: Tableau) -> bool:
    """Hole-aware Littlewood-Richardson condition."""
    return satisfies_semistandard(t) and is_lattice_word(t.reading())


def find_last_sequence(t: Tableau) -> CascadeSequence:
    """The last ordered sequence ``1, ..., m`` of an LR tableau.

    ``m`` is the final letter of the reading; walking backwards, each ``k``
    is the last occurrence of ``k`` before the cell of ``k+1``.
    """
    items = [(c, a) for c, a in t.reading_items() if a is not None]
    if not items:
        raise DomainError("empty tableau has no cascade sequence")
    pos = len(items) - 1
    m = items[pos][1]
    if m < 1:
        raise DomainError("last letter of the reading is barred")
    if m == 1:
        raise DomainError("sequence of length 1 (weight is not of the form (2 delta)')")
    cells = [items[pos][0]]
    for k in range(m - 1, 0, -1):
        pos = next((p for p in range(pos - 1, -1, -1) if items[p][1] == k), None)
        if pos is None:
            raise DomainError(f"no {k} before {k + 1}: not Littlewood–Richardson")
        cells.append(items[pos][0])
    return CascadeSequence(tuple(reversed(cells)))


def _drop_first(rows, i):
    rows[i - 1] = rows[i - 1][1:]


def _check_lr_domain(t: Tableau) -> None:
    if not t.is_proper:
        raise DomainError("tableau has holes")
    if t.has_barred:
        raise DomainError("not Littlewood–Richardson (barred letter)")
    if not is_littlewood_richardson(t):
        raise DomainError("not Littlewood–Richardson")
    if not is_even_conjugate(weight_vector(t)):
        raise DomainError(f"weight {weight_vector(t)} is not of the form (2 delta)'")


def iota_lr(t: Tableau, validate: bool = True) -> tuple:
    """Cascade the last sequence, delete the last filling and close the gap.

    Returns ``(image, StepRecord)``.  The image has shape
    ``(lambda - e_r) / (mu + e_i)`` where ``i`` is the row of the 1-cell and
    ``r`` the last row with skew cells.
    """
    if t.shape.size == 0:
        raise DomainError("iota_lr needs a nonempty tableau")
    if validate:
        _check_lr_domain(t)
    s = find_last_sequence(t)
    if validate and not all(check_conditions(t, s)):
        raise RuntimeError(f"last sequence {s.cells} violates the cascade conditions")
    i, c1 = s[0]
    if c1 != t.shape.inner.part(i) + 1:
        raise RuntimeError(f"1-cell {s[0]} is not the first cell of row {i}")
    r, cm = reading_cells(t.shape)[-1]
    if (r, cm) != s[-1]:
        raise RuntimeError("the m-cell is not the last cell of the reading")
    cascaded = cascade(t, s)
    rows = [list(row) for row in cascaded.rows]
    _drop_first(rows, i)
    _drop_first(rows, r)
    shape = SkewShape(t.shape.outer.remove_cell(r), t.shape.inner.add_cell(i))
    image = Tableau(shape, rows[: shape.num_rows])
    if validate:
        _check_lr_domain(image)
    record = StepRecord("iota_lr", t.shape, shape, sequence=s, row_of_one=i,
                        deleted_letter=s.m - 1, deleted_cell=(r, cm))
    return image, record


def _shape_difference(big: Partition, small: Partition) -> Optional[int]:
    """Row ``r`` with ``big = small + e_r``, or None if not of that form."""
    diff = [big.part(k) - small.part(k) for k in range(1, max(len(big), len(small)) + 1)]
    rows = [k for k, d in enumerate(diff, start=1) if d != 0]
    if len(rows) != 1 or diff[rows[0] - 1] != 1:
        return None
    return rows[0]


def iota_lr_inverse(t: Tableau, target: SkewShape) -> Tableau:
    """Rebuild the unique LR preimage of ``t`` with shape ``target``.

    The hole and the deleted cell are read off from the shape difference;
    the cascaded part of the sequence is recovered greedily forward from the
    hole, and the length ``m`` is fixed by requiring a genuine round trip.
    """
    r = _shape_difference(target.outer, t.shape.outer)
    i = _shape_difference(t.shape.inner, target.inner)
    if r is None or i is None or r == i:
        raise DomainError(f"{t.shape} is not an iota_lr image shape for {target}")
    if not t.is_proper or t.has_barred:
        raise DomainError("iota_lr_inverse needs a proper unbarred tableau")
    rows = [list(row) for row in t.rows] + [[] for _ in range(target.num_rows - t.shape.num_rows)]
    hole, slot = object(), object()
    rows[i - 1] = [hole] + rows[i - 1]
    rows[r - 1] = [slot] + rows[r - 1]
    grid = {}
    for k in range(1, target.num_rows + 1):
        for j, a in zip(target.row_span(k), rows[k - 1]):
            grid[(k, j)] = a
    order = reading_cells(target)
    start = next(p for p, c in enumerate(order) if grid[c] is hole)
    chain, pos, v = [], start, 1
    while True:
        nxt = next((p for p in range(pos + 1, len(order)) if grid[order[p]] == v and grid[order[p]] is not slot), None)
        if nxt is None:
            break
        chain.append(order[nxt])
        pos, v = nxt, v + 1

    found = []
    for m in range(2, len(chain) + 3):
        fill = dict(grid)
        fill[(i, target.inner.part(i) + 1)] = 1
        for k, cell in enumerate(chain[: m - 2], start=2):
            fill[cell] = k
        fill[(r, target.inner.part(r) + 1)] = m
        cand = Tableau(target, [[fill[(k, j)] for j in target.row_span(k)] for k in range(1, target.num_rows + 1)])
        if not is_littlewood_richardson(cand) or not is_even_conjugate(weight_vector(cand)):
            continue
        try:
            image, _ = iota_lr(cand, validate=False)
        except DomainError:
            continue
        if image == t:
            found.append(cand)
    if not found:
        raise DomainError(f"no Littlewood–Richardson preimage of shape {target}")
    if len(found) > 1:
        raise RuntimeError(f"iota_lr is not injective on shape {target}")
    return found[0]


# ---------------------------------------------------------------------------
# symplectic side


def _check_sp_domain(t: Tableau) -> None:
    if not t.shape.is_straight:
        raise DomainError("sp-highest tableaux have straight shape")
    if not t.is_proper:
        raise DomainError("tableau has holes")
    if not is_semistandard(t):
        raise DomainError("not semistandard")
    if not is_sp_highest(t.reading()):
        raise DomainError("not sp-highest weight")


def _sp_shape(t: Tableau) -> SkewShape:
    wt = sp_weight(t)
    try:
        mu = Partition(wt)
    except ValueError:
        raise DomainError(f"sp weight {wt} is not a partition") from None
    return SkewShape(t.shape.outer, mu)


def iota_sp_traced(t: Tableau, validate: bool = True) -> tuple:
    """``iota_sp`` returning ``(image, StepRecord)``."""
    if validate:
        _check_sp_domain(t)
    barred = [(c, a) for c, a in t.reading_items() if a < 0]
    if not barred:
        raise DomainError("no barred entry to delete")
    (r, c), letter = barred[-1]
    if any(a < 0 for j, a in zip(range(1, c), t.rows[r - 1])):
        raise MalformedHighestWeight(f"barred entry left of the last barred entry at ({r},{c})")
    if any(a < 0 for k in range(r + 1, t.shape.num_rows + 1) for a in t.rows[k - 1]):
        raise MalformedHighestWeight(f"barred entry below row {r} after the last barred entry")
    rows = [list(row) for row in t.rows]
    del rows[r - 1][c - 1]
    outer = t.shape.outer.remove_cell(r)
    image = Tableau(SkewShape.straight(outer), rows[: len(outer)])
    if validate:
        try:
            _check_sp_domain(image)
        except DomainError as exc:
            raise MalformedHighestWeight(f"image of iota_sp fails validation: {exc}") from None
    record = StepRecord("iota_sp", _sp_shape(t), _sp_shape(image),
                        deleted_letter=letter, deleted_cell=(r, c))
    return image, record


def iota_sp(t: Tableau, validate: bool = True) -> Tableau:
    """Delete the last barred entry of the reading and close the gap in its row."""
    return iota_sp_traced(t, validate)[0]


def insert_barred(t: Tableau, target_outer: Sequence[int], letter: int) -> tuple:
    """Place ``letter`` after the unbarred prefix of the row that grows.

    Returns ``(tableau, cell)``; no validation.
    """
    target_outer = Partition(target_outer)
    if letter >= 0:
        raise DomainError(f"inserted letter {letter} is not barred")
    if not t.shape.is_straight:
        raise DomainError("iota_sp_inverse needs a straight tableau")
    r = _shape_difference(target_outer, t.shape.outer)
    if r is None:
        raise DomainError(f"{tuple(target_outer)} is not {tuple(t.shape.outer)} plus one cell")
    rows = [list(row) for row in t.rows] + [[] for _ in range(len(target_outer) - t.shape.num_rows)]
    row = rows[r - 1]
    c = next((k for k, a in enumerate(row) if a < 0), len(row))
    row.insert(c, letter)
    return Tableau(SkewShape.straight(target_outer), rows), (r, c + 1)


def iota_sp_inverse(t: Tableau, target_outer: Sequence[int], inserted: int,
                    validate: bool = True) -> Tableau:
    """Re-insert the barred letter deleted by ``iota_sp``."""
    result, _ = insert_barred(t, target_outer, inserted)
    if validate:
        try:
            _check_sp_domain(result)
        except DomainError as exc:
            raise DomainError(f"reinsertion of {inserted} is invalid: {exc}") from None
        if iota_sp(result, validate=False) != t:
            raise DomainError(f"reinsertion of {inserted} does not invert iota_sp")
    return result
