import itertools
from pathlib import Path

import pytest

from spbranch.core import SkewShape, Tableau, letter_key, reading_cells

FIXTURES = Path(__file__).parent / "fixtures"

# running example: a six-row LR tableau and its sp-highest partner
BIG_LR_ROWS = [[1], [1, 2], [1, 3], [2, 4], [2, 3, 5], [4, 6]]
BIG_LR_INNER = (3, 2, 1, 1)
BIG_HW_ROWS = [[1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3], [4, 4, -3], [-4, -2, -2], [-3, -1]]


def T(rows, inner=()):
    return Tableau.from_rows(rows, inner=inner)


@pytest.fixture
def big_lr():
    return T(BIG_LR_ROWS, BIG_LR_INNER)


@pytest.fixture
def big_hw():
    return T(BIG_HW_ROWS)


def brute_fillings(shape: SkewShape, letters):
    """Every assignment of letters to cells, no conditions."""
    cells = reading_cells(shape)
    for word in itertools.product(letters, repeat=len(cells)):
        yield Tableau.from_reading(shape, word)


def naive_semistandard(t: Tableau) -> bool:
    for (i, j), a in t.items():
        right, below = (i, j + 1), (i + 1, j)
        if right in t.shape and letter_key(t[right]) < letter_key(a):
            return False
        if below in t.shape and letter_key(t[below]) <= letter_key(a):
            return False
    return True


def naive_lattice(word) -> bool:
    for k in range(1, len(word) + 1):
        prefix = word[:k]
        for i in set(prefix):
            if i > 1 and prefix.count(i) > prefix.count(i - 1):
                return False
    return True


def naive_partitions(size):
    """Partitions of ``size`` from all compositions, deduplicated."""
    out = set()
    for cuts in itertools.product((0, 1), repeat=max(size - 1, 0)):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        if size:
            parts.append(cur)
        out.add(tuple(sorted(parts, reverse=True)))
    return out


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
