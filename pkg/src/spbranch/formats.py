"""Text and JSON serialisation of tableaux.

Text format: one row per line, whitespace-separated entries; ``k`` is the
unbarred letter, ``-k`` the barred one, ``.`` an inner-shape cell and ``_`` a
hole.  A blank line (or end of input) terminates a tableau.

JSON format: ``{"outer": [...], "inner": [...], "rows": [[...], ...]}`` where
``rows`` holds only the skew cells of each row.
"""

from __future__ import annotations

import json
from typing import Iterator

from .core import Partition, SkewShape, Tableau


def _token(a) -> str:
    return "_" if a is None else str(a)


def format_tableau(t: Tableau) -> str:
    lines = []
    for i, row in enumerate(t.rows, start=1):
        tokens = ["."] * t.shape.inner.part(i) + [_token(a) for a in row]
        lines.append(" ".join(tokens))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_tableau(text: str) -> Tableau:
    """Parse one tableau; stops at the first blank line after content."""
    rows = []
    for line in text.splitlines():
        if not line.strip():
            if rows:
                break
            continue
        rows.append(line.split())
    return _from_token_rows(rows)


def parse_tableaux(text: str) -> Iterator[Tableau]:
    """Parse a sequence of blank-line separated tableaux."""
    block = []
    for line in text.splitlines():
        if line.strip():
            block.append(line.split())
        elif block:
            yield _from_token_rows(block)
            block = []
    if block:
        yield _from_token_rows(block)


def _from_token_rows(rows) -> Tableau:
    inner, contents = [], []
    for lineno, tokens in enumerate(rows, start=1):
        k = 0
        while k < len(tokens) and tokens[k] == ".":
            k += 1
        inner.append(k)
        row = []
        for tok in tokens[k:]:
            if tok == "_":
                row.append(None)
                continue
            try:
                a = int(tok)
            except ValueError:
                raise ValueError(f"row {lineno}: bad entry {tok!r}") from None
            if a == 0:
                raise ValueError(f"row {lineno}: 0 is not a letter")
            row.append(a)
        contents.append(row)
    return Tableau.from_rows(contents, inner=Partition(inner))


def tableau_to_json(t: Tableau) -> dict:
    return {
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "rows": [list(r) for r in t.rows],
    }


def tableau_from_json(data) -> Tableau:
    if isinstance(data, str):
        data = json.loads(data)
    shape = SkewShape(Partition(data["outer"]), Partition(data.get("inner", [])))
    rows = [list(r) for r in data["rows"]]
    rows += [[] for _ in range(shape.num_rows - len(rows))]
    return Tableau(shape, rows)
