"""Kashiwara operators on words via the signature rule.

Words are read as tensor products with the first letter as the first tensor
factor.  For a fixed index ``i`` each letter is marked plus, minus or
neutral; adjacent ``plus ... minus`` pairs (ignoring neutrals) cancel.  What
survives looks like ``- - - + + +``.  The raising operator acts at the
rightmost surviving minus, the lowering operator at the leftmost surviving
plus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .core import (
    DomainError,
    Partition,
    SkewShape,
    Tableau,
    alphabet,
    enumerate_ssyt,
    fill_readings,
    sp_weight,
)

PLUS, MINUS, NEUTRAL = 1, -1, 0


def sp_letter_marks(a: int, i: int) -> int:
    if a == i or a == -(i + 1):
        return PLUS
    if a == i + 1 or a == -i:
        return MINUS
    return NEUTRAL


def gl_letter_marks(a: int, i: int) -> int:
    if a == i:
        return PLUS
    if a == i + 1:
        return MINUS
    return NEUTRAL


def _reduce(marks: Sequence[int]) -> tuple:
    """Return (unmatched minus positions, unmatched plus positions)."""
    stack, lone_minus = [], []
    for pos, m in enumerate(marks):
        if m == PLUS:
            stack.append(pos)
        elif m == MINUS:
            if stack:
                stack.pop()
            else:
                lone_minus.append(pos)
    return lone_minus, stack


def _sp_signature(word, i):
    return _reduce([sp_letter_marks(a, i) for a in word])


def epsilon_i(word: Sequence[int], i: int) -> int:
    return len(_sp_signature(word, i)[0])


def phi_i(word: Sequence[int], i: int) -> int:
    return len(_sp_signature(word, i)[1])


def _check_rank(word, i, n):
    if i < 1 or (n is not None and i > n):
        raise ValueError(f"crystal index {i} out of range for rank {n}")
    if n is not None and any(abs(a) > n for a in word):
        raise DomainError(f"word {tuple(word)} is not over A_{n}")


def sp_raise(word: Sequence[int], i: int, n: Optional[int] = None) -> Optional[tuple]:
    """e_i on a word over A_n (``n=None``: rank large enough to avoid the fold)."""
    _check_rank(word, i, n)
    minus, _ = _sp_signature(word, i)
    if not minus:
        return None
    pos = minus[-1]
    a = word[pos]
    if a == i + 1:
        new = i
    elif n is not None and i == n:
        new = n  # fold: n-bar -> n
    else:
        new = -(i + 1)
    out = list(word)
    out[pos] = new
    return tuple(out)


def sp_lower(word: Sequence[int], i: int, n: Optional[int] = None) -> Optional[tuple]:
    _check_rank(word, i, n)
    _, plus = _sp_signature(word, i)
    if not plus:
        return None
    pos = plus[0]
    a = word[pos]
    if a == -(i + 1):
        new = -i
    elif n is not None and i == n:
        new = -n  # fold: n -> n-bar
    else:
        new = i + 1
    out = list(word)
    out[pos] = new
    return tuple(out)


def _gl_check(word, i, n):
    if any(a < 1 or a > 2 * n for a in word):
        raise DomainError(f"gl word must be over 1..{2 * n}")
    if not 1 <= i < 2 * n:
        raise ValueError(f"gl index {i} out of range 1..{2 * n - 1}")


def gl_raise(word: Sequence[int], i: int, n: int) -> Optional[tuple]:
    _gl_check(word, i, n)
    minus, _ = _reduce([gl_letter_marks(a, i) for a in word])
    if not minus:
        return None
    out = list(word)
    out[minus[-1]] = i
    return tuple(out)


def gl_lower(word: Sequence[int], i: int, n: int) -> Optional[tuple]:
    _gl_check(word, i, n)
    _, plus = _reduce([gl_letter_marks(a, i) for a in word])
    if not plus:
        return None
    out = list(word)
    out[plus[0]] = i + 1
    return tuple(out)


def translate(a: int, n: int) -> int:
    """Map a letter of [2n] to A_n: a <= n stays, a > n becomes (2n-a+1)-bar."""
    if not 1 <= a <= 2 * n:
        raise ValueError(f"{a} is outside 1..{2 * n}")
    return a if a <= n else -(2 * n - a + 1)


def untranslate(a: int, n: int) -> int:
    if not 1 <= abs(a) <= n:
        raise ValueError(f"{a} is outside A_{n}")
    return a if a > 0 else 2 * n + 1 + a


def coroot_pairing(weight: Sequence[int], i: int, n: Optional[int] = None) -> int:
    """<h_i, weight> for type C_n: c_i - c_{i+1}, or c_n at the last node."""
    c = list(weight) + [0] * (i + 1)
    if n is not None and i == n:
        return c[i - 1]
    return c[i - 1] - c[i]


def is_sp_highest(word: Sequence[int], rank: Optional[int] = None) -> bool:
    """Prefix test for being killed by every raising operator.

    Each minus for index i needs strictly more earlier pluses than minuses
    for the same index.  ``rank=None`` means arbitrarily large rank.
    """
    if rank is not None and any(abs(a) > rank for a in word):
        raise DomainError(f"word {tuple(word)} is not over A_{rank}")
    top = max((abs(a) for a in word), default=0) + 2
    plus = [0] * (top + 1)
    minus = [0] * (top + 1)
    for a in word:
        v = abs(a)
        mi = a - 1 if a > 0 else v
        pi = a if a > 0 else v - 1
        if mi >= 1:
            if plus[mi] <= minus[mi]:
                return False
            minus[mi] += 1
        if pi >= 1:
            plus[pi] += 1
    return True


def is_sp_highest_by_operators(word: Sequence[int], n: int) -> bool:
    return all(sp_raise(word, i, n) is None for i in range(1, n + 1))


def validate_sp_structure(t: Tableau) -> bool:
    """Structural screen satisfied by every sp-highest semistandard tableau.

    Unbarred ``i`` only in row ``i``, barred ``i`` only below row ``i``, and
    the cells of the weight diagram hold the canonical filling.
    """
    if not t.shape.is_straight:
        return False
    for (r, _), a in t.items():
        if a > 0 and r != a:
            return False
        if a < 0 and r <= -a:
            return False
    mu = sp_weight(t)
    if any(x < 0 for x in mu) or any(x < y for x, y in zip(mu, mu[1:])):
        return False
    mu = Partition(mu)
    if not t.shape.outer.contains(mu):
        return False
    return all(t[(i, j)] == i for i in range(1, len(mu) + 1) for j in range(1, mu[i - 1] + 1))


def canonical_tableau(lam: Sequence[int]) -> Tableau:
    lam = Partition(lam)
    return Tableau(SkewShape.straight(lam), [[i] * part for i, part in enumerate(lam, start=1)])


def enumerate_sp_highest(lam: Sequence[int], n: Optional[int] = None,
                         weight: Optional[Sequence[int]] = None) -> Iterator[Tableau]:
    """Semistandard sp-highest tableaux of shape ``lam`` over A_n.

    With ``n=None`` the letters are bounded by the number of rows, which is
    enough for the arbitrarily-large-rank notion.
    """
    lam = Partition(lam)
    bound = len(lam) if n is None else n
    shape = SkewShape.straight(lam)
    target = None if weight is None else tuple(weight)
    for word in fill_readings(shape, alphabet(bound), sp_target=target, sp_highest=True):
        yield Tableau.from_reading(shape, word)


# ---------------------------------------------------------------------------
# Crystal graphs


def reading_label(word: Sequence[int]) -> str:
    return ",".join(str(a) for a in word)


@dataclass
class CrystalGraph:
    """Nodes are tableaux; ``outside`` holds words reached by an operator that
    are not readings of any node.  Edge targets ``>= len(nodes)`` index into
    ``outside``."""

    nodes: list
    edges: list = field(default_factory=list)
    outside: list = field(default_factory=list)

    def label(self, k: int) -> str:
        if k < len(self.nodes):
            return reading_label(self.nodes[k].reading())
        return reading_label(self.outside[k - len(self.nodes)])

    def to_json(self) -> str:
        data = {
            "nodes": [reading_label(t.reading()) for t in self.nodes],
            "edges": [list(e) for e in self.edges],
        }
        if self.outside:
            data["outside"] = [reading_label(w) for w in self.outside]
        return json.dumps(data)

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for k in range(len(self.nodes) + len(self.outside)):
            style = "" if k < len(self.nodes) else ", style=dashed"
            lines.append(f'  n{k} [label="{self.label(k)}"{style}];')
        for s, i, d in self.edges:
            lines.append(f'  n{s} -> n{d} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def sources(self) -> list:
        targets = {d for _, _, d in self.edges}
        return [k for k in range(len(self.nodes)) if k not in targets]

    def escaping_edges(self) -> list:
        return [e for e in self.edges if e[2] >= len(self.nodes)]

    def is_connected(self) -> bool:
        total = len(self.nodes) + len(self.outside)
        if not total:
            return True
        adj = {k: set() for k in range(total)}
        for s, _, d in self.edges:
            adj[s].add(d)
            adj[d].add(s)
        seen, todo = {0}, [0]
        while todo:
            for nb in adj[todo.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    todo.append(nb)
        return len(seen) == total


def crystal_graph(lam: Sequence[int], n: int, algebra: str = "gl") -> CrystalGraph:
    """Crystal graph on the semistandard tableaux of shape ``lam`` over [2n].

    Nodes are rendered in A_n and sorted by reading.  ``algebra='gl'`` uses
    the gl_{2n} operators, ``'sp'`` the sp_{2n} ones.  The gl graph is closed;
    an sp lowering step can produce a word that is not a tableau reading, and
    such targets are listed in ``outside``.
    """
    lam = Partition(lam)
    if algebra not in ("gl", "sp"):
        raise ValueError(f"unknown algebra {algebra!r}")
    if n < 1 or len(lam) > 2 * n:
        raise DomainError(f"shape {tuple(lam)} needs at most {2 * n} rows")
    nodes = list(enumerate_ssyt(SkewShape.straight(lam), alphabet(n)))
    index = {t.reading(): k for k, t in enumerate(nodes)}
    outside = {}
    edges = []

    def target(word):
        if word in index:
            return index[word]
        if algebra == "gl":
            raise RuntimeError(f"lowering left the tableau set: {word}")
        return outside.setdefault(word, len(nodes) + len(outside))

    for k, t in enumerate(nodes):
        word = t.reading()
        if algebra == "gl":
            gl_word = tuple(untranslate(a, n) for a in word)
            for i in range(1, 2 * n):
                low = gl_lower(gl_word, i, n)
                if low is not None:
                    edges.append((k, i, target(tuple(translate(a, n) for a in low))))
        else:
            for i in range(1, n + 1):
                low = sp_lower(word, i, n)
                if low is not None:
                    edges.append((k, i, target(low)))
    edges.sort()
    return CrystalGraph(nodes, edges, list(outside))


def tableau_lower(t: Tableau, i: int, n: int, algebra: str = "gl") -> Optional[Tableau]:
    """Apply a lowering operator to the reading and rebuild the tableau."""
    word = t.reading()
    if algebra == "gl":
        low = gl_lower(tuple(untranslate(a, n) for a in word), i, n)
        low = None if low is None else tuple(translate(a, n) for a in low)
    else:
        low = sp_lower(word, i, n)
    if low is None:
        return None
    return Tableau.from_reading(t.shape, low)

