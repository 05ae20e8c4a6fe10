"""Partitions, skew shapes, letters, tableaux and exhaustive enumerators.

Letters are encoded as nonzero integers: ``k`` is the unbarred letter k and
``-k`` is the barred letter k-bar.  The total order on letters does not depend
on any rank::

    1 < 2 < ... < k < ... < k-bar < ... < 2-bar < 1-bar

Cells are 1-based ``(row, col)`` pairs, row 1 on top (English convention).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

Letter = int
Word = tuple
Cell = tuple


class DomainError(ValueError):
    """Input lies outside the domain of the requested operation."""


# ---------------------------------------------------------------------------
# Letters


def bar(k: int) -> Letter:
    return -k


def is_barred(a: Letter) -> bool:
    return a < 0


def letter_key(a: Letter) -> tuple:
    """Sort key realising the rank-independent letter order."""
    if a == 0:
        raise ValueError("0 is not a letter")
    return (0, a) if a > 0 else (1, a)


def letter_lt(a: Letter, b: Letter) -> bool:
    return letter_key(a) < letter_key(b)


def alphabet(n: int) -> list:
    """The symplectic alphabet A_n in increasing order."""
    return list(range(1, n + 1)) + list(range(-n, 0))


def in_alphabet(a: Letter, n: int) -> bool:
    return 1 <= abs(a) <= n


# ---------------------------------------------------------------------------
# Partitions


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and also compares equal to the plain tuple
    ``(2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part access; parts beyond the length are zero."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: Sequence[int]) -> bool:
        other = Partition(other)
        return len(other) <= len(self) and all(b <= a for a, b in zip(self, other))

    def add_cell(self, i: int) -> "Partition":
        parts = list(self) + [0] * max(0, i - len(self))
        parts[i - 1] += 1
        return Partition(parts)

    def remove_cell(self, i: int) -> "Partition":
        parts = list(self)
        parts[i - 1] -= 1
        return Partition(parts)


def conjugate(p: Sequence[int]) -> Partition:
    p = Partition(p)
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def partitions(size: int, max_part: Optional[int] = None,
               max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if max_length is None:
        max_length = size

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            if first * slots < remaining:
                break
            for rest in rec(remaining - first, first, slots - 1):
                yield (first,) + rest

    for parts in rec(size, max_part, max_length):
        yield Partition(parts)


def sub_partitions(lam: Sequence[int], max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions contained in ``lam`` (optionally with bounded length)."""
    lam = Partition(lam)
    rows = len(lam) if max_length is None else min(len(lam), max_length)

    def rec(i, cap):
        if i == rows:
            yield ()
            return
        for part in range(min(cap, lam[i]), -1, -1):
            if part == 0:
                yield ()
            else:
                for rest in rec(i + 1, part):
                    yield (part,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def even_conjugate_weights(size: int) -> list:
    """All partitions nu of ``size`` whose conjugate has only even parts.

    These are exactly the weights ``(2 delta)'``.  Returned in reverse
    lexicographic order.
    """
    if size < 0 or size % 2:
        raise ValueError(f"size must be even and nonnegative, got {size}")
    found = [conjugate([2 * d for d in delta]) for delta in partitions(size // 2)]
    return sorted(found, reverse=True)


def is_even_conjugate(nu: Sequence[int]) -> bool:
    return all(part % 2 == 0 for part in conjugate(nu))


# ---------------------------------------------------------------------------
# Shapes


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not self.outer.contains(self.inner):
            raise ValueError(f"{tuple(self.inner)} is not contained in {tuple(self.outer)}")

    @classmethod
    def straight(cls, lam: Sequence[int]) -> "SkewShape":
        return cls(Partition(lam), Partition())

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_span(self, i: int) -> range:
        """Columns of the skew cells in row ``i``."""
        return range(self.inner.part(i) + 1, self.outer.part(i) + 1)

    def row_length(self, i: int) -> int:
        return self.outer.part(i) - self.inner.part(i)

    def cells(self) -> list:
        return [(i, j) for i in range(1, self.num_rows + 1) for j in self.row_span(i)]

    def __contains__(self, cell) -> bool:
        i, j = cell
        return self.inner.part(i) < j <= self.outer.part(i)

    def __str__(self) -> str:
        if not self.inner:
            return str(tuple(self.outer))
        return f"{tuple(self.outer)}/{tuple(self.inner)}"


@lru_cache(maxsize=None)
def reading_cells(shape: SkewShape) -> tuple:
    """Cells in far-eastern reading order: columns right to left, each top to bottom."""
    width = shape.outer.part(1)
    order = []
    for j in range(width, 0, -1):
        for i in range(1, shape.num_rows + 1):
            if (i, j) in shape:
                order.append((i, j))
    return tuple(order)


# ---------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape.

    ``rows[i-1]`` lists the entries of the skew cells of row ``i`` from left
    to right.  ``None`` marks a hole, which only appears transiently while
    cascading.
    """

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != self.shape.num_rows:
            raise ValueError(f"expected {self.shape.num_rows} rows, got {len(rows)}")
        for i, row in enumerate(rows, start=1):
            if len(row) != self.shape.row_length(i):
                raise ValueError(f"row {i} has {len(row)} entries, shape needs {self.shape.row_length(i)}")
            for a in row:
                if a is not None and (not isinstance(a, int) or a == 0):
                    raise ValueError(f"invalid letter {a!r} in row {i}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[int]]], inner: Sequence[int] = ()) -> "Tableau":
        """Build from skew-cell contents per row; the outer shape is inferred."""
        inner = Partition(inner)
        nrows = max(len(rows), len(inner))
        padded = [list(rows[i]) if i < len(rows) else [] for i in range(nrows)]
        outer = Partition(inner.part(i + 1) + len(padded[i]) for i in range(nrows))
        shape = SkewShape(outer, inner)
        return cls(shape, padded[: shape.num_rows])

    @classmethod
    def from_reading(cls, shape: SkewShape, word: Sequence[Optional[int]]) -> "Tableau":
        cells = reading_cells(shape)
        if len(word) != len(cells):
            raise ValueError("word length does not match the shape")
        grid = dict(zip(cells, word))
        rows = [[grid[(i, j)] for j in shape.row_span(i)] for i in range(1, shape.num_rows + 1)]
        return cls(shape, rows)

    @classmethod
    def empty(cls, shape: SkewShape) -> "Tableau":
        if shape.size:
            raise ValueError("shape is not empty")
        return cls(shape, [()] * shape.num_rows)

    # -- access --------------------------------------------------------------

    def __getitem__(self, cell) -> Optional[int]:
        i, j = cell
        if cell not in self.shape:
            raise KeyError(cell)
        return self.rows[i - 1][j - self.shape.inner.part(i) - 1]

    def get(self, cell, default=None):
        return self[cell] if cell in self.shape else default

    def items(self) -> Iterator[tuple]:
        """``((row, col), entry)`` pairs in row-major order."""
        for i, row in enumerate(self.rows, start=1):
            offset = self.shape.inner.part(i)
            for k, a in enumerate(row):
                yield (i, offset + k + 1), a

    def reading_items(self) -> list:
        """``((row, col), entry)`` in reading order, holes included."""
        return [(c, self[c]) for c in reading_cells(self.shape)]

    def reading(self) -> Word:
        return tuple(a for _, a in self.reading_items() if a is not None)

    def letters(self) -> list:
        return [a for _, a in self.items() if a is not None]

    @property
    def is_proper(self) -> bool:
        return all(a is not None for row in self.rows for a in row)

    @property
    def has_barred(self) -> bool:
        return any(a is not None and a < 0 for row in self.rows for a in row)

    def replace(self, updates: Mapping) -> "Tableau":
        rows = [list(r) for r in self.rows]
        for (i, j), a in updates.items():
            if (i, j) not in self.shape:
                raise KeyError((i, j))
            rows[i - 1][j - self.shape.inner.part(i) - 1] = a
        return Tableau(self.shape, rows)

    def full_rows(self) -> list:
        """Rows with inner cells shown as ``'.'`` (used by the text format)."""
        return [["."] * self.shape.inner.part(i) + list(row) for i, row in enumerate(self.rows, start=1)]

    def __str__(self) -> str:
        from .formats import format_tableau

        return format_tableau(self)


def far_eastern_reading(t: Tableau) -> Word:
    return t.reading()


def _require_proper(t: Tableau) -> None:
    if not t.is_proper:
        raise DomainError("tableau has holes")


def _semistandard(t: Tableau) -> bool:
    for (i, j), a in t.items():
        if a is None:
            continue
        right = t.get((i, j + 1))
        if right is not None and letter_key(right) < letter_key(a):
            return False
        below = t.get((i + 1, j))
        if below is not None and letter_key(below) <= letter_key(a):
            return False
    return True


def is_semistandard(t: Tableau) -> bool:
    _require_proper(t)
    return _semistandard(t)


def satisfies_semistandard(t: Tableau) -> bool:
    """Hole-aware semistandard condition: comparisons with a hole are vacuous."""
    return _semistandard(t)


def gl_weight(t: Tableau) -> Counter:
    """Occurrence count of every letter."""
    _require_proper(t)
    return Counter(t.letters())


def weight_vector(t: Tableau) -> tuple:
    """``(nu_1, nu_2, ...)`` for an unbarred tableau; trailing zeros dropped."""
    counts = Counter(a for a in t.letters())
    if any(a < 0 for a in counts):
        raise DomainError("barred letter in an unbarred tableau")
    top = max(counts, default=0)
    vec = [counts.get(k, 0) for k in range(1, top + 1)]
    return tuple(vec)


def sp_weight(x: Union[Tableau, Sequence[int]]) -> tuple:
    """Coefficients of eps_1, eps_2, ... with trailing zeros dropped."""
    word = x.letters() if isinstance(x, Tableau) else x
    coeffs = Counter()
    for a in word:
        coeffs[abs(a)] += 1 if a > 0 else -1
    top = max((k for k, v in coeffs.items() if v), default=0)
    return tuple(coeffs.get(k, 0) for k in range(1, top + 1))


def is_lattice_word(word: Sequence[int]) -> bool:
    counts = Counter()
    for a in word:
        if a < 0:
            raise DomainError("lattice condition is only defined for unbarred words")
        counts[a] += 1
        if a > 1 and counts[a] > counts[a - 1]:
            return False
    return True


def is_littlewood_richardson(t: Tableau) -> bool:
    _require_proper(t)
    if t.has_barred:
        raise DomainError("Littlewood-Richardson tableaux are unbarred")
    return _semistandard(t) and is_lattice_word(t.reading())


# ---------------------------------------------------------------------------
# Enumeration


@lru_cache(maxsize=None)
def _neighbour_plan(shape: SkewShape) -> tuple:
    """For each reading position: index of the cell above and to the right, or -1."""
    cells = reading_cells(shape)
    index = {c: k for k, c in enumerate(cells)}
    plan = []
    for i, j in cells:
        plan.append((index.get((i - 1, j), -1), index.get((i, j + 1), -1)))
    return tuple(plan)


def fill_readings(shape: SkewShape, letters: Sequence[int], *, gl_target: Optional[Mapping] = None,
                  sp_target: Optional[Sequence[int]] = None, lattice: bool = False,
                  sp_highest: bool = False) -> Iterator[tuple]:
    """Depth-first search over semistandard fillings, in reading order.

    Yields readings in lexicographic order.  The optional filters prune
    partial fillings: ``gl_target`` bounds letter counts, ``sp_target`` the
    symplectic weight, ``lattice`` keeps every prefix a lattice word and
    ``sp_highest`` keeps every prefix annihilated by all raising operators.
    """
    alpha = sorted(set(letters), key=letter_key)
    nletters = len(alpha)
    plan = _neighbour_plan(shape)
    total = len(plan)
    chosen = [0] * total
    word = [0] * total

    counts = Counter()
    need = dict(gl_target) if gl_target is not None else None
    if need is not None and sum(need.values()) != total:
        return

    top = max((abs(a) for a in alpha), default=0) + 1
    target = [0] * (top + 1)
    if sp_target is not None:
        if len(sp_target) > top - 1 and any(sp_target[top - 1:]):
            return
        for k, v in enumerate(sp_target, start=1):
            if k <= top:
                target[k] = v
        dist0 = sum(abs(v) for v in target)
        if dist0 > total or (total - dist0) % 2:
            return
    current = [0] * (top + 1)
    # plus/minus tallies per crystal index for the highest-weight prefix test
    plus = [0] * (top + 2)
    minus = [0] * (top + 2)

    def rec(pos, dist):
        if pos == total:
            yield tuple(word)
            return
        above, right = plan[pos]
        lo = chosen[above] + 1 if above >= 0 else 0
        hi = chosen[right] if right >= 0 else nletters - 1
        remaining = total - pos - 1
        for idx in range(lo, hi + 1):
            a = alpha[idx]
            if need is not None and counts[a] >= need.get(a, 0):
                continue
            if lattice and a > 1 and counts[a] >= counts[a - 1]:
                continue
            v = abs(a)
            step = 1 if a > 0 else -1
            if sp_target is not None:
                before = abs(target[v] - current[v])
                after = abs(target[v] - current[v] - step)
                if dist - before + after > remaining:
                    continue
            if sp_highest:
                # a is a minus for index (a-1) if unbarred, for index v if barred
                mi = a - 1 if a > 0 else v
                if mi >= 1 and plus[mi] <= minus[mi]:
                    continue
            # commit
            chosen[pos] = idx
            word[pos] = a
            counts[a] += 1
            ndist = dist
            if sp_target is not None:
                ndist = dist - abs(target[v] - current[v]) + abs(target[v] - current[v] - step)
            current[v] += step
            if sp_highest:
                pi = a if a > 0 else v - 1
                if mi >= 1:
                    minus[mi] += 1
                if pi >= 1:
                    plus[pi] += 1
            yield from rec(pos + 1, ndist)
            if sp_highest:
                if mi >= 1:
                    minus[mi] -= 1
                if pi >= 1:
                    plus[pi] -= 1
            current[v] -= step
            counts[a] -= 1

    dist_start = sum(abs(v) for v in target) if sp_target is not None else 0
    yield from rec(0, dist_start)


def enumerate_ssyt(shape: Union[SkewShape, Sequence[int]], letters: Iterable[int],
                   weight_filter: Union[None, Mapping, Sequence[int]] = None) -> Iterator[Tableau]:
    """Every semistandard tableau of ``shape`` over ``letters``, once each.

    ``weight_filter`` is either a mapping ``letter -> count`` (a gl weight) or
    a sequence of eps-coefficients (an sp weight).  Output is ordered
    lexicographically by reading.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape.straight(shape)
    kwargs = {}
    if isinstance(weight_filter, Mapping):
        kwargs["gl_target"] = {a: c for a, c in weight_filter.items() if c}
    elif weight_filter is not None:
        kwargs["sp_target"] = tuple(weight_filter)
    for word in fill_readings(shape, list(letters), **kwargs):
        yield Tableau.from_reading(shape, word)


def enumerate_lr(shape: SkewShape, weight: Sequence[int]) -> Iterator[Tableau]:
    """Littlewood-Richardson tableaux of ``shape`` with content ``weight``."""
    weight = Partition(weight)
    if shape.size != weight.size:
        raise ValueError(f"|{shape}| = {shape.size} differs from |{tuple(weight)}| = {weight.size}")
    target = {k: c for k, c in enumerate(weight, start=1)}
    letters = range(1, len(weight) + 1)
    for word in fill_readings(shape, letters, gl_target=target, lattice=True):
        yield Tableau.from_reading(shape, word)
