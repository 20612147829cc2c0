"""Ideal powers as R-modules and their endomorphism rings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ideals import Ideal, generate_ideal, ideal_power, stabilization_index
from .purity import is_npure, is_pure
from .rings import FiniteRing, elem_pow
from .verdict import SKIPPED, Verdict, subject, verdict

DEFAULT_MAX_CARRIER = 64
DEFAULT_MAX_GENS = 3


class CapSkip(Exception):
    """Module too large for exhaustive enumeration under the configured caps."""


@dataclass(frozen=True)
class IdealModule:
    ring: FiniteRing
    carrier: tuple
    gens: tuple

    @property
    def relations_bound(self) -> int:
        return len(self.gens)

    def position(self) -> np.ndarray:
        """Ring index -> position in ``carrier`` (-1 outside)."""
        pos = np.full(self.ring.size, -1, dtype=np.int64)
        pos[list(self.carrier)] = np.arange(len(self.carrier))
        return pos


def _greedy_module_gens(R: FiniteRing, carrier: tuple) -> tuple:
    members = set(carrier)
    span = {R.zero}
    gens: list[int] = []
    while span != members:
        best, best_span = None, span
        for a in carrier:
            if a in span:
                continue
            cand = set(np.unique(R.add[np.ix_(sorted(span), np.unique(R.mul[a]))]).tolist())
            if len(cand) > len(best_span):
                best, best_span = a, cand
        gens.append(best)
        span = best_span
    return tuple(gens)


def module_of_ideal_power(I: Ideal, n: int, max_carrier: int = DEFAULT_MAX_CARRIER,
                          max_gens: int = DEFAULT_MAX_GENS) -> IdealModule:
    P = ideal_power(I, n)
    if len(P) > max_carrier:
        raise CapSkip(f"carrier {len(P)} > {max_carrier}")
    gens = _greedy_module_gens(I.ring, P.elements)
    if len(gens) > max_gens:
        raise CapSkip(f"generators {len(gens)} > {max_gens}")
    return IdealModule(I.ring, P.elements, gens)


def all_endomorphisms(M: IdealModule) -> np.ndarray:
    """Every R-linear self-map of M, one row per map, entries are ring indices.

    A choice of images (x_1, ..., x_k) for the generators is admitted when
    f(sum r_i g_i) = sum r_i x_i is single-valued over all coefficient
    tuples.  Tuples are extended one generator at a time and rejected as
    soon as a prefix is already inconsistent.
    """
    R = M.ring
    k = len(M.gens)
    if k == 0:
        return np.array([[R.zero]], dtype=np.int64)
    carrier = np.array(M.carrier)
    n = R.size
    # partial sums over coefficient tuples of the first j generators
    dom_prefix = [np.array([R.zero])]
    for g in M.gens:
        dom_prefix.append(R.add[dom_prefix[-1][:, None], R.mul[:, g][None, :]].ravel())

    results = []

    def extend(images: list, img_prefix: np.ndarray):
        j = len(images)
        if j == k:
            results.append(_tabulate(R, dom_prefix[k], img_prefix, carrier))
            return
        dom = dom_prefix[j + 1]
        for x in carrier:
            img = R.add[img_prefix[:, None], R.mul[:, x][None, :]].ravel()
            table = np.full(n, -1, dtype=np.int64)
            table[dom] = img
            if (table[dom] == img).all():
                extend(images + [x], img)

    extend([], np.array([R.zero]))
    return np.array(results, dtype=np.int64)


def _tabulate(R: FiniteRing, dom: np.ndarray, img: np.ndarray, carrier: np.ndarray) -> np.ndarray:
    table = np.full(R.size, -1, dtype=np.int64)
    table[dom] = img
    return table[carrier]


def is_linear(M: IdealModule, f_row: np.ndarray) -> bool:
    """Definitional check of additivity and R-linearity of one map."""
    R = M.ring
    pos = M.position()
    c = np.array(M.carrier)
    f = f_row
    if (pos[f] < 0).any():
        return False
    add_ok = (f[pos[R.add[np.ix_(c, c)]]] == R.add[f[:, None], f[None, :]]).all()
    lin_ok = (f[pos[R.mul[:, c]]] == R.mul[:, f]).all()
    return bool(add_ok and lin_ok)


def brute_force_endomorphisms(M: IdealModule) -> list[tuple]:
    """Every self-map of the carrier that is additive and R-linear.

    Assigns values element by element, rejecting a partial map as soon as a
    constraint among assigned elements fails; no generators are used.
    """
    R = M.ring
    c = list(M.carrier)
    pos = {x: i for i, x in enumerate(c)}
    m = len(c)
    sums = [[pos[R.plus(c[i], c[j])] for j in range(m)] for i in range(m)]
    scal = [[pos[R.times(r, c[i])] for i in range(m)] for r in range(R.size)]
    found = []
    f = [None] * m

    def consistent(i):
        fi = f[i]
        for j in range(i + 1):
            s = sums[i][j]
            if s <= i and f[s] != R.plus(fi, f[j]):
                return False
        for r in range(R.size):
            s = scal[r][i]
            if s <= i and f[s] != R.times(r, fi):
                return False
        return True

    def assign(i):
        if i == m:
            found.append(tuple(f))
            return
        for x in c:
            f[i] = x
            if consistent(i):
                assign(i + 1)
        f[i] = None

    assign(0)
    return found


def compose_all(M: IdealModule, maps: np.ndarray) -> np.ndarray:
    """comp[f, g, x] = f(g(x)) for every pair of maps."""
    return maps[:, M.position()[maps]]


def endo_ring_is_commutative(M: IdealModule, maps: np.ndarray | None = None) -> bool:
    if maps is None:
        maps = all_endomorphisms(M)
    comp = compose_all(M, maps)
    return bool((comp == comp.transpose(1, 0, 2)).all())


@dataclass(frozen=True)
class EndoRing:
    """End(M) with pointwise addition and composition, on indices into ``maps``."""

    maps: np.ndarray
    add: np.ndarray
    mul: np.ndarray
    one: int
    zero: int


def endo_ring(M: IdealModule, maps: np.ndarray | None = None) -> EndoRing:
    R = M.ring
    if maps is None:
        maps = all_endomorphisms(M)
    lookup = {tuple(row): i for i, row in enumerate(maps.tolist())}
    pos = M.position()
    m = len(maps)
    add = np.empty((m, m), dtype=np.int64)
    mul = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            add[i, j] = lookup[tuple(R.add[maps[i], maps[j]].tolist())]
            mul[i, j] = lookup[tuple(maps[i][pos[maps[j]]].tolist())]
    one = lookup[tuple(M.carrier)]
    zero = lookup[tuple([R.zero] * len(M.carrier))]
    return EndoRing(maps, add, mul, one, zero)


def lemma_exponent(R: FiniteRing, a: int) -> int | None:
    """Least n with a^n (1 - r a) = 0 for some r, or None."""
    one_minus_ra = R.one_minus()[R.mul[a]]
    for n in range(1, R.exponent_bound(a) + 1):
        if (R.mul[elem_pow(R, a, n), one_minus_ra] == R.zero).any():
            return n
    return None


def _commutativity_sweep(I: Ideal, powers, max_carrier, max_gens):
    """Per power: True/False for commutativity, or the cap message when skipped."""
    out = {}
    for n in powers:
        try:
            M = module_of_ideal_power(I, n, max_carrier, max_gens)
        except CapSkip as exc:
            out[n] = str(exc)
            continue
        out[n] = endo_ring_is_commutative(M)
    return out


def _sweep_verdict(check_id, subj, sweep, asserted, details):
    skipped = {n: v for n, v in sweep.items() if isinstance(v, str) and n in asserted}
    fails = [{"power": n} for n in asserted if sweep.get(n) is False]
    if fails:
        return verdict(check_id, subj, fails, details=details)
    if skipped:
        n, msg = next(iter(skipped.items()))
        return Verdict(check_id, subj, SKIPPED, {"power": n, "cap": msg}, details=details)
    return verdict(check_id, subj, [], details=details)


def check_pure_endo(I: Ideal, max_carrier: int = DEFAULT_MAX_CARRIER,
                    max_gens: int = DEFAULT_MAX_GENS) -> Verdict:
    """End(I^n) is commutative for a pure I, n up to one past stabilization."""
    R = I.ring
    subj = subject(R, I)
    if not is_pure(I):
        return verdict("ThmV-endo", subj, [], applicable=False)
    top = stabilization_index(I) + 1
    sweep = _commutativity_sweep(I, range(1, top + 1), max_carrier, max_gens)
    return _sweep_verdict("ThmV-endo", subj, sweep, list(range(1, top + 1)),
                          {"powers": top, "sweep": {str(k): v for k, v in sweep.items()}})


def principal_generator(I: Ideal) -> int | None:
    """Least a with (a) = I, if I is principal."""
    for a in range(I.ring.size):
        if a in I and generate_ideal(I.ring, [a]) == I:
            return a
    return None


def check_principal_endo(I: Ideal, max_carrier: int = DEFAULT_MAX_CARRIER,
                         max_gens: int = DEFAULT_MAX_GENS) -> Verdict:
    """For I = Ra N-pure, End(I^i) is commutative for every i past the exponent n."""
    R = I.ring
    subj = subject(R, I)
    a = principal_generator(I)
    if a is None or not is_npure(I):
        return verdict("LemVIIb-endo", subj, [], applicable=False)
    n = lemma_exponent(R, a)
    if n is None:
        return verdict("LemVIIb-endo", subj, [{"generator": a, "exponent": None}])
    top = max(n, stabilization_index(I) + 1)
    sweep = _commutativity_sweep(I, range(1, top + 1), max_carrier, max_gens)
    asserted = list(range(n, top + 1))
    details = {"generator": a, "exponent": n, "sweep": {str(k): v for k, v in sweep.items()},
               "belowExponent": {str(k): v for k, v in sweep.items() if k < n}}
    return _sweep_verdict("LemVIIb-endo", subj, sweep, asserted, details)


def check_endo_theorems(R: FiniteRing, max_carrier: int = DEFAULT_MAX_CARRIER,
                        max_gens: int = DEFAULT_MAX_GENS) -> list[Verdict]:
    from .ideals import all_ideals
    out = []
    for I in all_ideals(R):
        out.append(check_pure_endo(I, max_carrier, max_gens))
        out.append(check_principal_endo(I, max_carrier, max_gens))
    return out
