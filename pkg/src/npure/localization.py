"""Localization of a finite ring, realized as a kernel quotient.

For a finite ring R and a multiplicative set S, the natural map R -> S^-1 R
is surjective with kernel K = {a : sa = 0 for some s in S}, so S^-1 R is
R/K.  Each construction carries an explicit inverse for every image of S,
which certifies the identification.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ideals import (Ideal, from_mask, generate_ideal, intersect_all, radical)
from .purity import is_npure, is_pure, push_forward
from .rings import FiniteRing, RingHom, nilradical_set, quotient, units_set
from .spectrum import compute_spectrum, is_gelfand, is_mp_ring, is_prime_ideal
from .verdict import Verdict, subject, verdict


class LocalizationError(RuntimeError):
    """An image of S failed to be invertible; indicates a bug, never a theorem failure."""


@dataclass(frozen=True)
class MultiplicativeSet:
    ring: FiniteRing
    members: frozenset

    def __post_init__(self):
        R = self.ring
        if R.one not in self.members:
            raise ValueError("a multiplicative set must contain 1")
        elems = sorted(self.members)
        mask = np.zeros(R.size, dtype=bool)
        mask[elems] = True
        if not mask[R.mul[np.ix_(elems, elems)]].all():
            raise ValueError("set is not closed under multiplication")

    def __contains__(self, a: int) -> bool:
        return a in self.members


@dataclass(frozen=True)
class LocalizationResult:
    source: FiniteRing
    multset: MultiplicativeSet
    kernel: Ideal
    quotient: FiniteRing
    projection: RingHom
    certificate: dict

    def image(self, I: Ideal) -> Ideal:
        """The extension of I to the localization."""
        return push_forward(self.projection, I)


def one_plus_ideal(I: Ideal) -> MultiplicativeSet:
    R = I.ring
    return MultiplicativeSet(R, frozenset(R.plus(R.one, a) for a in I))


def complement_of_prime(p: Ideal) -> MultiplicativeSet:
    if not is_prime_ideal(p):
        raise ValueError(f"{p!r} is not prime")
    return MultiplicativeSet(p.ring, frozenset(range(p.ring.size)) - p.members)


def localization_kernel(S: MultiplicativeSet) -> frozenset:
    R = S.ring
    killed = (R.mul[sorted(S.members)] == R.zero).any(axis=0)
    return frozenset(np.nonzero(killed)[0].tolist())


def localize(S: MultiplicativeSet) -> LocalizationResult:
    R = S.ring

    def build():
        kernel = from_mask(R, localization_kernel(S))
        if generate_ideal(R, kernel.gens) != kernel:
            raise LocalizationError("localization kernel is not an ideal")
        Q, proj = quotient(R, kernel.gens)
        cert = {}
        for s in sorted(S.members):
            t = proj(s)
            inv = np.nonzero(Q.mul[t] == Q.one)[0]
            if not len(inv):
                raise LocalizationError(f"image of {s} is not a unit of the quotient")
            cert[s] = int(inv[0])
        return LocalizationResult(R, S, kernel, Q, proj, cert)
    return R.cached(("localize", S.members), build)


def kernel_of_pi(p: Ideal) -> Ideal:
    """Kernel of R -> R_p."""
    return localize(complement_of_prime(p)).kernel


def _induced_map(R: FiniteRing, K: Ideal, L: FiniteRing, phi_map: np.ndarray):
    """R/K -> L induced by phi: R -> L, or None when phi does not kill K.

    Returns (table, bijective, homomorphic).
    """
    Q, proj = quotient(R, K.gens)
    table = np.full(Q.size, -1, dtype=np.int64)
    for a in range(R.size):
        q = proj(a)
        if table[q] < 0:
            table[q] = phi_map[a]
        elif table[q] != phi_map[a]:
            return None
    bijective = Q.size == L.size and len(np.unique(table)) == Q.size
    homomorphic = (
        bool((table[Q.add] == L.add[table[:, None], table[None, :]]).all())
        and bool((table[Q.mul] == L.mul[table[:, None], table[None, :]]).all())
        and table[Q.one] == L.one)
    return table, bijective, homomorphic


def _pulled_back_primes(L: LocalizationResult) -> set:
    Q = L.quotient
    return {L.projection.preimage(P.members) for P in compute_spectrum(Q).primes}


def check_theorem_iii(I: Ideal) -> Verdict:
    """Criteria (ii)-(v) of the 1+I localization each hold exactly when I is N-pure."""
    R = I.ring
    npure = is_npure(I)
    L = localize(one_plus_ideal(I))
    Q, proj = L.quotient, L.projection
    rad = radical(I)

    over_I = {P.members for P in compute_spectrum(R).primes if I <= P}
    c2 = _pulled_back_primes(L) == over_I

    c3 = nilradical_set(Q) == proj.image(rad.members)

    c4 = radical(L.kernel) == rad

    # (v) two routes: kernel comparison, and the explicit induced map
    nil_Q = nilradical_set(Q)
    _, to_reduced = quotient(Q, sorted(nil_Q))
    composite = to_reduced.map[proj.map]
    kernel_route = frozenset(np.nonzero(composite == to_reduced.codomain.zero)[0].tolist()) == rad.members
    induced = _induced_map(R, rad, to_reduced.codomain, composite)
    map_route = induced is not None and induced[1] and induced[2]
    criteria = {"ii": c2, "iii": c3, "iv": c4, "v": kernel_route, "vMap": bool(map_route)}
    fails = [{"criterion": k, "holds": v, "npure": npure} for k, v in criteria.items() if v != npure]
    return verdict("ThmIII", subject(R, I), fails, details=criteria)


def check_theorem_iv(I: Ideal) -> Verdict:
    """S^-1 R = R/I and S^-1 I = 0 each hold exactly when I is pure."""
    R = I.ring
    pure = is_pure(I)
    L = localize(one_plus_ideal(I))
    Q, proj = L.quotient, L.projection
    c3 = L.image(I).is_zero
    c2_kernel = L.kernel == I
    # a/s -> a + I, read off through the certificate
    Rq, to_RI = quotient(R, I.gens)
    psi = np.full(Q.size, -1, dtype=np.int64)
    well_defined = True
    for a in range(R.size):
        q = proj(a)
        if psi[q] < 0:
            psi[q] = to_RI(a)
        elif psi[q] != to_RI(a):
            well_defined = False
    fractions_ok = well_defined and all(
        psi[Q.times(proj(a), L.certificate[s])] == to_RI(a)
        for a in range(R.size) for s in L.certificate)
    c2_map = bool(well_defined and fractions_ok and Q.size == Rq.size
                  and len(np.unique(psi)) == Q.size)
    criteria = {"ii": c2_kernel, "iiMap": c2_map, "iii": c3}
    fails = [{"criterion": k, "holds": v, "pure": pure} for k, v in criteria.items() if v != pure]
    return verdict("ThmIV", subject(R, I), fails, details=criteria)


def _maximals_over(I: Ideal) -> list[Ideal]:
    return [M for M in compute_spectrum(I.ring).maximals if I <= M]


def check_proposition_ii(I: Ideal) -> Verdict:
    """sqrt(I) is the meet of sqrt(Ker pi_m) over maximal m containing I."""
    R = I.ring
    if not is_npure(I):
        return verdict("PropII", subject(R, I), [], applicable=False)
    meet = intersect_all(R, [radical(kernel_of_pi(M)) for M in _maximals_over(I)])
    rad = radical(I)
    fails = [] if meet == rad else [{"radical": list(rad.elements), "meet": list(meet.elements)}]
    return verdict("PropII", subject(R, I), fails)


def check_corollary_i(I: Ideal) -> Verdict:
    """I lies in sqrt(Ker pi_m) for each maximal m containing it."""
    R = I.ring
    over = _maximals_over(I)
    if not is_npure(I) or not over:
        return verdict("CorI", subject(R, I), [], applicable=False)
    fails = [{"m": list(M.elements)} for M in over if not I <= radical(kernel_of_pi(M))]
    return verdict("CorI", subject(R, I), fails)


def check_theorem_ii(I: Ideal) -> Verdict:
    """On an mp-ring both intersections over V(I) agree and are N-pure."""
    R = I.ring
    if not I.is_proper or not is_mp_ring(R):
        return verdict("ThmII", subject(R, I), [], applicable=False)
    spec = compute_spectrum(R)
    over = _maximals_over(I)
    j1 = intersect_all(R, [radical(kernel_of_pi(M)) for M in over])
    j2 = intersect_all(R, [P for M in over for P in spec.minimals if P <= M])
    fails = []
    if j1 != j2:
        fails.append({"J1": list(j1.elements), "J2": list(j2.elements)})
    elif not is_npure(j1):
        fails.append({"J": list(j1.elements), "npure": False})
    return verdict("ThmII", subject(R, I), fails)


def check_gelfand_kernels(R: FiniteRing) -> list[Verdict]:
    """Kernels of R -> R_m on a Gelfand ring: pure; equal to m iff m is pure;
    and sqrt(Ker pi_p) = p for N-pure primes p."""
    spec = compute_spectrum(R)
    gelfand = is_gelfand(R)
    lem3 = [{"m": list(M.elements)} for M in spec.maximals if not is_pure(kernel_of_pi(M))]
    prop4 = [{"m": list(M.elements), "pure": is_pure(M)} for M in spec.maximals
             if is_pure(M) != (kernel_of_pi(M) == M)]
    npure_primes = [P for P in spec.primes if is_npure(P)]
    lem4 = [{"p": list(P.elements)} for P in npure_primes if radical(kernel_of_pi(P)) != P]
    has_max = gelfand and bool(spec.maximals)
    return [verdict("LemIII", subject(R), lem3, applicable=has_max),
            verdict("PropIV", subject(R), prop4, applicable=has_max),
            verdict("LemIV", subject(R), lem4, applicable=bool(npure_primes))]


def _reduced_localization_kernel(I: Ideal) -> Ideal:
    """Kernel of R -> S^-1 R / S^-1 sqrt(I) with S = 1 + I."""
    R = I.ring
    L = localize(one_plus_ideal(I))
    image = L.image(radical(I))
    return from_mask(R, image.mask[L.projection.map])


def check_corollary_ii(I: Ideal, J: Ideal) -> Verdict:
    """Same radical and I N-pure: the two reduced localizations agree as R-algebras."""
    R = I.ring
    subj = subject(R, I, f"J={list(J.elements)}")
    if radical(I) != radical(J) or not is_npure(I):
        return verdict("CorII", subj, [], applicable=False)
    k1 = _reduced_localization_kernel(I)
    k2 = _reduced_localization_kernel(J)
    fails = []
    if k1 != k2:
        fails.append({"kernelI": list(k1.elements), "kernelJ": list(k2.elements)})
    else:
        # explicit bijection R/k1 -> R/k2 induced by the identity of R
        Q2, p2 = quotient(R, k2.gens)
        induced = _induced_map(R, k1, Q2, p2.map)
        if induced is None or not (induced[1] and induced[2]):
            fails.append({"bijection": False})
    return verdict("CorII", subj, fails)


def check_corollary_iii(I: Ideal) -> Verdict:
    """R/I is Gelfand (mp) iff the 1+I localization is, for pure and for N-pure I."""
    R = I.ring
    pure, npure = is_pure(I), is_npure(I)
    if not npure:
        return verdict("CorIII", subject(R, I), [], applicable=False)
    Q = localize(one_plus_ideal(I)).quotient
    RI, _ = quotient(R, I.gens)
    gel = (is_gelfand(RI), is_gelfand(Q))
    mp = (is_mp_ring(RI), is_mp_ring(Q))
    details = {"pureHypothesis": pure, "gelfand": list(gel), "mp": list(mp)}
    fails = []
    variants = (["pure", "npure"] if pure else ["npure"])
    for hyp in variants:
        if gel[0] != gel[1]:
            fails.append({"hypothesis": hyp, "property": "gelfand", "values": list(gel)})
        if mp[0] != mp[1]:
            fails.append({"hypothesis": hyp, "property": "mp", "values": list(mp)})
    return verdict("CorIII", subject(R, I), fails, details=details)


def smoke_units(R: FiniteRing) -> bool:
    """Localizing at the units kills nothing; localizing at {1} is the identity."""
    at_units = localize(MultiplicativeSet(R, units_set(R)))
    trivial = localize(MultiplicativeSet(R, frozenset([R.one])))
    return at_units.kernel.is_zero and trivial.quotient.size == R.size
