"""The bijection F between (2 delta)'-weight LR tableaux and sp-highest tableaux.

F peels pairs off the LR tableau with ``iota_lr`` until it is empty, swaps
the empty tableau on ``mu/mu`` for the canonical tableau of ``mu``, then
unwinds, re-inserting the barred letter ``i-bar`` for every step whose
1-cell sat in row ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cascade
from .core import DomainError, Partition, SkewShape, Tableau, sp_weight
from .crystal import canonical_tableau
from .cascade import StepRecord


class NonDominantWeight(DomainError):
    """The sp weight of the input is not a partition."""


@dataclass(frozen=True)
class BranchPair:
    lr: Tableau
    hw: Tableau
    trace: tuple = ()

    @property
    def lr_steps(self) -> list:
        return [s for s in self.trace if s.kind == "iota_lr"]

    @property
    def sp_steps(self) -> list:
        return [s for s in self.trace if s.kind == "iota_sp"]

    def trace_lines(self) -> list:
        return [s.trace_line() for s in self.trace]


def F_traced(lr: Tableau, validate: bool = True) -> BranchPair:
    """Apply F, recording every ``iota_lr`` step and matching ``iota_sp`` step.

    Both step lists run from the full tableau downwards, so the k-th sp step
    deletes ``-row_of_one`` of the k-th LR step.
    """
    if validate:
        cascade._check_lr_domain(lr)
    lr_steps = []
    cur = lr
    while cur.shape.size:
        cur, rec = cascade.iota_lr(cur, validate=validate)
        lr_steps.append(rec)
    hw = canonical_tableau(cur.shape.outer)
    sp_steps = []
    for rec in reversed(lr_steps):
        letter = -rec.row_of_one
        before_hw, cell = cascade.insert_barred(hw, rec.before.outer, letter)
        if validate:
            cascade.iota_sp_inverse(hw, rec.before.outer, letter, validate=True)
        sp_steps.append(StepRecord("iota_sp", rec.before, rec.after,
                                   deleted_letter=letter, deleted_cell=cell))
        hw = before_hw
    sp_steps.reverse()
    return BranchPair(lr, hw, tuple(lr_steps) + tuple(sp_steps))


def F(lr: Tableau, validate: bool = True) -> Tableau:
    return F_traced(lr, validate).hw


def _check_hw_domain(hw: Tableau) -> None:
    # dominance first, so non-dominant inputs get their own error
    if not hw.is_proper:
        raise DomainError("tableau has holes")
    try:
        cascade._sp_shape(hw)
    except DomainError as exc:
        raise NonDominantWeight(str(exc)) from None
    cascade._check_sp_domain(hw)


def F_inverse_traced(hw: Tableau, validate: bool = True) -> BranchPair:
    if validate:
        _check_hw_domain(hw)
    sp_steps = []
    cur = hw
    while cur.has_barred:
        cur, rec = cascade.iota_sp_traced(cur, validate=validate)
        sp_steps.append(rec)
    base = cur.shape.outer
    if cur != canonical_tableau(base):
        raise DomainError("stripping barred entries did not reach a canonical tableau")
    lr = Tableau.empty(SkewShape(base, base))
    lr_steps = []
    for rec in reversed(sp_steps):
        prev = cascade.iota_lr_inverse(lr, rec.before)
        _, lr_rec = cascade.iota_lr(prev, validate=validate)
        if lr_rec.row_of_one != -rec.deleted_letter:
            raise RuntimeError("row of the 1-cell does not match the deleted barred letter")
        lr_steps.append(lr_rec)
        lr = prev
    lr_steps.reverse()
    return BranchPair(lr, hw, tuple(lr_steps) + tuple(sp_steps))


def F_inverse(hw: Tableau, validate: bool = True) -> Tableau:
    return F_inverse_traced(hw, validate).lr


def replay(pair: BranchPair) -> Tableau:
    """Recompute ``pair.hw`` from ``pair.lr`` by following the recorded trace."""
    cur = pair.lr
    for rec in pair.lr_steps:
        cur, again = cascade.iota_lr(cur)
        if again != rec:
            raise RuntimeError(f"trace diverges at {rec.trace_line()}")
    hw = canonical_tableau(cur.shape.outer)
    for rec in reversed(pair.sp_steps):
        hw = cascade.iota_sp_inverse(hw, rec.before.outer, rec.deleted_letter)
    return hw


def is_n_symplectic(t: Tableau, n: int) -> bool:
    """Every entry in row ``n + i`` is at least ``2i``."""
    if not t.is_proper:
        raise DomainError("tableau has holes")
    if t.has_barred:
        raise DomainError("n-symplectic condition is for unbarred tableaux")
    return all(a >= 2 * (r - n) for (r, _), a in t.items() if r > n)


def has_deep_one(lr: Tableau, n: int, validate: bool = True) -> bool:
    """Whether some iterate of ``iota_lr`` (including ``lr`` itself) has a 1 below row ``n``."""
    cur = lr
    while True:
        if any(a == 1 and r > n for (r, _), a in cur.items()):
            return True
        if not cur.shape.size:
            return False
        cur, _ = cascade.iota_lr(cur, validate=validate)


def fillings_within(t: Tableau, n: int) -> bool:
    """All letters lie in A_n."""
    return all(abs(a) <= n for a in t.letters())


def lr_shape_of(hw: Tableau) -> SkewShape:
    return SkewShape(hw.shape.outer, Partition(sp_weight(hw)))
