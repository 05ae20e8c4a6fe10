"""Character-theoretic branching oracle for sp(2n), independent of crystals.

Freudenthal's recursion gives weight multiplicities of irreducible sp(2n)
modules.  Restricting a gl(2n) character to the sp torus and peeling off
highest weights gives the branching multiplicities.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Optional

from .core import DomainError, Partition, SkewShape, alphabet, fill_readings, sp_weight


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class RootSystemC:
    n: int

    @property
    def positive_roots(self) -> tuple:
        n = self.n
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                for s in (-1, 1):
                    v = [0] * n
                    v[i], v[j] = 1, s
                    roots.append(tuple(v))
            v = [0] * n
            v[i] = 2
            roots.append(tuple(v))
        return tuple(roots)

    @property
    def rho(self) -> tuple:
        return tuple(range(self.n, 0, -1))

    def pad(self, weight) -> tuple:
        w = tuple(weight)
        if len(w) > self.n:
            if any(w[self.n:]):
                raise DomainError(f"weight {w} has more than {self.n} coordinates")
            w = w[: self.n]
        return w + (0,) * (self.n - len(w))

    @staticmethod
    def dominant_rep(weight) -> tuple:
        """The dominant weight in the W(C_n) orbit: sorted absolute values."""
        return tuple(sorted((abs(x) for x in weight), reverse=True))

    def orbit(self, weight) -> set:
        out = set()
        for perm in set(permutations(weight)):
            nonzero = [k for k, x in enumerate(perm) if x]
            for signs in product((1, -1), repeat=len(nonzero)):
                v = list(perm)
                for k, s in zip(nonzero, signs):
                    v[k] *= s
                out.add(tuple(v))
        return out


def _dominated_weights(mu: tuple, n: int) -> list:
    """Dominant integral weights nu <= mu in the root order of C_n.

    For type C these are partitions with at most n parts, |nu| of the same
    parity as |mu| and partial sums bounded by those of mu.
    """
    total = sum(mu)
    bounds = [sum(mu[: k + 1]) for k in range(n)]
    out = []

    def rec(prefix, prev, acc):
        k = len(prefix)
        if k == n:
            if (total - acc) % 2 == 0:
                out.append(tuple(prefix))
            return
        for x in range(min(prev, bounds[k] - acc), -1, -1):
            rec(prefix + [x], x, acc + x)

    rec([], mu[0] if mu else 0, 0)
    return out


@lru_cache(maxsize=None)
def dominant_multiplicities(mu: Partition, n: int) -> dict:
    """Multiplicities of the dominant weights of V_sp(mu)."""
    R = RootSystemC(n)
    top = R.pad(mu)
    rho = R.rho
    roots = R.positive_roots
    candidates = _dominated_weights(top, n)
    # increasing depth below mu, measured by the pairing with rho
    candidates.sort(key=lambda w: -_dot(w, rho))
    allowed = set(candidates)
    norm_top = _dot([a + b for a, b in zip(top, rho)], [a + b for a, b in zip(top, rho)])
    mult = {}

    def m(w):
        d = R.dominant_rep(w)
        return mult.get(d, 0) if d in allowed else 0

    for nu in candidates:
        if nu == top:
            mult[nu] = 1
            continue
        nr = [a + b for a, b in zip(nu, rho)]
        denom = norm_top - _dot(nr, nr)
        rhs = 0
        for alpha in roots:
            k = 1
            while True:
                w = tuple(a + k * b for a, b in zip(nu, alpha))
                if R.dominant_rep(w) not in allowed:
                    break
                rhs += m(w) * _dot(w, alpha)
                k += 1
        rhs *= 2
        if denom == 0:
            if rhs:
                raise ArithmeticError(f"zero denominator at {nu} below {top}")
            mult[nu] = 0
            continue
        value, rem = divmod(rhs, denom)
        if rem or value < 0:
            raise ArithmeticError(f"non-integral multiplicity {rhs}/{denom} at {nu}")
        mult[nu] = value
    return {w: c for w, c in mult.items() if c}


def freudenthal(mu, n: int) -> Counter:
    """Full weight multiset of V_sp(mu), weights as length-n tuples."""
    mu = Partition(mu)
    if n < 1 or len(mu) > n:
        raise DomainError(f"mu={tuple(mu)} needs at most n={n} parts")
    R = RootSystemC(n)
    out = Counter()
    for d, c in dominant_multiplicities(mu, n).items():
        for w in R.orbit(d):
            out[w] += c
    return out


@lru_cache(maxsize=None)
def sp_dim(mu, n: int) -> int:
    mu = Partition(mu)
    if n < 1 or len(mu) > n:
        raise DomainError(f"mu={tuple(mu)} needs at most n={n} parts")
    R = RootSystemC(n)
    return sum(c * len(R.orbit(d)) for d, c in dominant_multiplicities(mu, n).items())


def restrict_gl_character(lam, n: int) -> Counter:
    """sp weights of all SSYT of shape lam over A_n, with multiplicity."""
    lam = Partition(lam)
    if n < 1 or len(lam) > 2 * n:
        raise DomainError(f"lambda={tuple(lam)} has more than 2n={2 * n} parts")
    R = RootSystemC(n)
    out = Counter()
    for word in fill_readings(SkewShape.straight(lam), alphabet(n)):
        out[R.pad(sp_weight(word))] += 1
    return out


def strip_decompose(lam, n: int, rng: Optional[random.Random] = None) -> dict:
    """Branching multiplicities by peeling highest weights off the restricted character.

    Without ``rng`` the lexicographically largest dominant weight is peeled
    first (it is always dominance-maximal).  With ``rng`` a random
    dominance-maximal weight is chosen each round.
    """
    R = RootSystemC(n)
    residual = restrict_gl_character(lam, n)
    result = {}
    while residual:
        dominant = [w for w in residual if all(a >= b for a, b in zip(w, w[1:])) and w[-1] >= 0]
        if rng is None:
            top = max(dominant)
        else:
            maximal = [w for w in dominant
                       if not any(v != w and _dominates(v, w) for v in dominant)]
            top = rng.choice(sorted(maximal))
        c = residual[top]
        result[Partition(top)] = c
        for w, k in freudenthal(top, n).items():
            left = residual[w] - c * k
            if left < 0:
                raise ArithmeticError(f"negative residual at {w} after removing {top}")
            if left:
                residual[w] = left
            else:
                del residual[w]
    return dict(sorted(result.items(), reverse=True))


def _dominates(a, b) -> bool:
    """a >= b in the C_n root order (a - b a nonnegative combination of simple roots)."""
    diff = [x - y for x, y in zip(a, b)]
    if sum(diff) % 2:
        return False
    acc = 0
    for d in diff:
        acc += d
        if acc < 0:
            return False
    return True
