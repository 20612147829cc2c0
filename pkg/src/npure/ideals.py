"""Ideals of a finite ring and the lattice operations on them."""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .rings import CapExceeded, FiniteRing, RingError, ideal_closure

DEFAULT_MAX_IDEALS = 4096


class Ideal:
    """An ideal stored by its full member set plus a generating list.

    Two ideals compare equal when they live in the same ring object and
    have the same members.  Ordering follows the canonical lattice order
    (cardinality, then sorted member tuple).
    """

    __slots__ = ("ring", "members", "gens", "_sorted", "_mask")

    def __init__(self, ring: FiniteRing, members: Iterable[int], gens: Sequence[int] | None = None,
                 check: bool = True):
        self.ring = ring
        self.members = frozenset(int(m) for m in members)
        self._sorted = tuple(sorted(self.members))
        self.gens = tuple(gens) if gens is not None else self._sorted
        mask = np.zeros(ring.size, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        self._mask = mask
        if check and ideal_closure(ring, self.gens) != self.members:
            raise RingError("member set is not the ideal generated by gens")

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def elements(self) -> tuple:
        return self._sorted

    def __contains__(self, a: int) -> bool:
        return bool(self._mask[a])

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self._sorted)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and other.ring is self.ring and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __le__(self, other: "Ideal") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Ideal") -> bool:
        return self.members < other.members

    def sort_key(self) -> tuple:
        return (len(self.members), self._sorted)

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.members

    @property
    def is_zero(self) -> bool:
        return len(self.members) == 1

    def label(self) -> str:
        names = self.ring.names
        if self.is_zero:
            return "(0)"
        if not self.is_proper:
            return "R"
        return "(" + ",".join(names[g] for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal{list(self._sorted)}"


def _same_ring(A: Ideal, B: Ideal) -> FiniteRing:
    if A.ring is not B.ring:
        raise RingError("ideals belong to different rings")
    return A.ring


def generate_ideal(R: FiniteRing, gens: Sequence[int]) -> Ideal:
    gens = tuple(int(g) for g in gens)
    return Ideal(R, ideal_closure(R, gens), gens, check=False)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, [R.zero], (), check=False)


def unit_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, range(R.size), (R.one,), check=False)


def from_mask(R: FiniteRing, mask) -> Ideal:
    """Wrap a member set already known to be an ideal, with a small generating set."""
    members = frozenset(np.nonzero(mask)[0].tolist()) if isinstance(mask, np.ndarray) else frozenset(mask)
    return Ideal(R, members, small_generating_set(R, members), check=False)


def small_generating_set(R: FiniteRing, members: Iterable[int]) -> tuple:
    """Greedy generators: repeatedly add the element whose principal ideal adds most."""
    members = frozenset(members)
    current = frozenset([R.zero])
    gens: list[int] = []
    target = sorted(members)
    while current != members:
        best, best_gain, best_set = None, -1, current
        for a in target:
            if a in current:
                continue
            cand = ideal_closure(R, gens + [a])
            gain = len(cand)
            if gain > best_gain:
                best, best_gain, best_set = a, gain, cand
        gens.append(best)
        current = best_set
    return tuple(gens)


def all_ideals(R: FiniteRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> list[Ideal]:
    """Every ideal of R exactly once, in canonical order.

    Built as the join-closure of the principal ideals: from (0), keep
    forming I + (a) for a outside I until nothing new appears.
    """
    def build():
        principal = [frozenset(np.unique(R.mul[a]).tolist()) for a in range(R.size)]
        start = frozenset([R.zero])
        found = {start: ()}
        frontier = [start]
        while frontier:
            nxt = []
            for members in frontier:
                cur = np.array(sorted(members))
                gens = found[members]
                for a in range(R.size):
                    if a in members or principal[a] <= members:
                        continue
                    joined = frozenset(np.unique(R.add[np.ix_(cur, sorted(principal[a]))]).tolist())
                    if joined not in found:
                        found[joined] = gens + (a,)
                        nxt.append(joined)
                        if len(found) > max_ideals:
                            raise CapExceeded(f"more than {max_ideals} ideals")
            frontier = nxt
        ideals = [Ideal(R, m, g, check=False) for m, g in found.items()]
        ideals.sort(key=Ideal.sort_key)
        return ideals
    return list(R.cached(("all_ideals", max_ideals), build))


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    R = _same_ring(A, B)
    members = np.unique(R.add[np.ix_(A.elements, B.elements)])
    return Ideal(R, members.tolist(), A.gens + B.gens, check=False)


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    R = _same_ring(A, B)
    prods = sorted(set(np.unique(R.mul[np.ix_(A.gens or (R.zero,), B.gens or (R.zero,))]).tolist()))
    return generate_ideal(R, prods)


def ideal_intersect(A: Ideal, B: Ideal) -> Ideal:
    R = _same_ring(A, B)
    return from_mask(R, A.members & B.members)


def intersect_all(R: FiniteRing, ideals: Iterable[Ideal]) -> Ideal:
    """Intersection of a family; the empty family gives R."""
    mask = np.ones(R.size, dtype=bool)
    for I in ideals:
        mask &= I.mask
    return from_mask(R, mask)


def ideal_power(I: Ideal, n: int) -> Ideal:
    if n < 1:
        raise ValueError("ideal powers start at n = 1")
    return power_chain(I, n)[n - 1]


def power_chain(I: Ideal, upto: int) -> list[Ideal]:
    """[I, I^2, ..., I^upto]."""
    chain = [I]
    while len(chain) < upto:
        chain.append(ideal_product(chain[-1], I))
    return chain


def stabilization_index(I: Ideal) -> int:
    """Least n with I^n = I^(n+1)."""
    prev, n = I, 1
    while True:
        nxt = ideal_product(prev, I)
        if nxt == prev:
            return n
        prev, n = nxt, n + 1


def annihilator_of_element(R: FiniteRing, a: int) -> Ideal:
    R._check_index(a)
    return R.cached(("ann", a), lambda: from_mask(R, R.mul[a] == R.zero))


def annihilator_of_ideal(I: Ideal) -> Ideal:
    R = I.ring
    mask = np.ones(R.size, dtype=bool)
    for g in I.gens:
        mask &= R.mul[g] == R.zero
    return from_mask(R, mask)


def radical(I: Ideal) -> Ideal:
    """{a : a^n in I for some n <= mu_a + c_a}."""
    R = I.ring

    def build():
        return from_mask(R, [a for a in range(R.size) if any(x in I for x in R.powers(a)[1:])])
    return R.cached(("radical", I.members), build)


def contains_one(I_mask: np.ndarray, R: FiniteRing, A: Ideal) -> bool:
    """Whether A + I is the whole ring, where I is given by its membership mask.

    A + I = R exactly when 1 = x + i for some x in A, i.e. 1 - x lies in I.
    """
    return bool(I_mask[R.one_minus()[list(A.elements)]].any())
