"""Three tableau counts of the multiplicity [V_gl(2n)(lambda) : V_sp(2n)(mu)].

* ``count_crystal``: sp-highest semistandard tableaux of shape lambda and
  weight mu over A_n.
* ``count_sundaram``: n-symplectic LR tableaux of shape lambda/mu with a
  weight of the form (2 delta)'.
* ``count_stable``: the same LR count without the n-symplectic filter.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .bijection import F, is_n_symplectic
from .core import (
    DomainError,
    Partition,
    SkewShape,
    Tableau,
    alphabet,
    enumerate_lr,
    even_conjugate_weights,
    fill_readings,
    sp_weight,
)


@dataclass(frozen=True)
class BranchingQuery:
    lam: Partition
    mu: Partition
    n: Optional[int] = None  # None: unbounded rank

    def __post_init__(self):
        object.__setattr__(self, "lam", Partition(self.lam))
        object.__setattr__(self, "mu", Partition(self.mu))
        if self.n is not None:
            if self.n < 1:
                raise DomainError(f"rank must be positive, got {self.n}")
            if len(self.lam) > 2 * self.n:
                raise DomainError(f"lambda={tuple(self.lam)} has more than 2n={2 * self.n} parts")
            if len(self.mu) > self.n:
                raise DomainError(f"mu={tuple(self.mu)} has more than n={self.n} parts")


@dataclass
class BranchingReport:
    query: BranchingQuery
    crystal: Optional[int] = None
    sundaram: Optional[int] = None
    stable: Optional[int] = None
    character: Optional[int] = None
    witnesses: Optional[list] = field(default=None, repr=False)

    def methods(self) -> dict:
        return {k: getattr(self, k) for k in ("crystal", "sundaram", "stable", "character")
                if getattr(self, k) is not None}

    def consistent(self) -> bool:
        """crystal, sundaram and character agree whenever present (finite n)."""
        vals = {v for k, v in self.methods().items() if k != "stable"}
        if self.query.n is None:
            vals = {v for k, v in self.methods().items() if k != "sundaram"}
        return len(vals) <= 1

    def to_json(self) -> str:
        q = self.query
        data = {"lambda": list(q.lam), "mu": list(q.mu), "n": "inf" if q.n is None else q.n}
        data.update(self.methods())
        return json.dumps(data)


def _query(lam, mu=None, n=None) -> BranchingQuery:
    if isinstance(lam, BranchingQuery):
        return lam
    return BranchingQuery(Partition(lam), Partition(mu or ()), n)


@lru_cache(maxsize=4096)
def _hw_by_weight(lam: Partition, n: Optional[int]) -> dict:
    """sp-highest readings of shape lam grouped by sp weight."""
    shape = SkewShape.straight(lam)
    bound = len(lam) if n is None else n
    groups = {}
    for word in fill_readings(shape, alphabet(bound), sp_highest=True):
        groups.setdefault(sp_weight(word), []).append(word)
    return groups


def hw_tableaux(q: BranchingQuery) -> Iterator[Tableau]:
    """sp-highest tableaux counted by ``count_crystal``, in reading order."""
    shape = SkewShape.straight(q.lam)
    for word in _hw_by_weight(q.lam, q.n).get(tuple(q.mu), ()):
        yield Tableau.from_reading(shape, word)


def lr_tableaux(q: BranchingQuery, symplectic: bool = True) -> Iterator[Tableau]:
    """LR tableaux of shape lam/mu and weight (2 delta)', n-symplectic if asked and n finite."""
    if not q.lam.contains(q.mu):
        return
    shape = SkewShape(q.lam, q.mu)
    if shape.size % 2:
        return
    for nu in even_conjugate_weights(shape.size):
        for t in enumerate_lr(shape, nu):
            if symplectic and q.n is not None and not is_n_symplectic(t, q.n):
                continue
            yield t


def count_crystal(lam, mu=None, n=None) -> int:
    q = _query(lam, mu, n)
    return sum(1 for _ in hw_tableaux(q))


def count_sundaram(lam, mu=None, n=None) -> int:
    q = _query(lam, mu, n)
    if q.n is None:
        raise DomainError("the n-symplectic LR count needs a finite rank; use count_stable")
    return sum(1 for _ in lr_tableaux(q))


def count_stable(lam, mu) -> int:
    q = BranchingQuery(Partition(lam), Partition(mu), None)
    return sum(1 for _ in lr_tableaux(q, symplectic=False))


def decompose(lam, n: Optional[int]) -> dict:
    """``mu -> count_crystal(lam, mu, n)`` for every mu with a nonzero count."""
    lam = Partition(lam)
    if n is not None and len(lam) > 2 * n:
        raise DomainError(f"lambda={tuple(lam)} has more than 2n={2 * n} parts")
    groups = _hw_by_weight(lam, n)
    return {Partition(w): len(words) for w, words in sorted(groups.items(), reverse=True)}


def witnesses(q: BranchingQuery) -> tuple:
    """``(hw list, lr list, pairs)`` where pairs match each LR tableau with its image under F."""
    hws = list(hw_tableaux(q))
    lrs = list(lr_tableaux(q))
    pairs = [(t, F(t)) for t in lrs]
    return hws, lrs, pairs


def report(lam, mu, n, methods: Sequence[str] = ("crystal", "sundaram", "stable", "character")) -> BranchingReport:
    q = _query(lam, mu, n)
    rep = BranchingReport(q)
    if "crystal" in methods:
        rep.crystal = count_crystal(q)
    if "sundaram" in methods and q.n is not None:
        rep.sundaram = count_sundaram(q)
    if "stable" in methods:
        rep.stable = count_stable(q.lam, q.mu)
    if "character" in methods and q.n is not None:
        from .oracle import strip_decompose

        rep.character = strip_decompose(q.lam, q.n).get(q.mu, 0)
    return rep


def weight_counter(lam, n: Optional[int]) -> Counter:
    return Counter({w: len(v) for w, v in _hw_by_weight(Partition(lam), n).items()})
