"""Prime, maximal and minimal spectra and the ring-class predicates."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ideals import Ideal, all_ideals, intersect_all, radical, unit_ideal
from .rings import FiniteRing, RingError, nilradical_set


@dataclass(frozen=True)
class SpectrumData:
    primes: tuple
    maximals: tuple
    minimals: tuple
    jacobson: Ideal


def is_prime_ideal(P: Ideal) -> bool:
    """Proper, and no product of two elements outside P lands in P."""
    if not P.is_proper:
        return False
    R = P.ring
    outside = np.nonzero(~P.mask)[0]
    return not P.mask[R.mul[np.ix_(outside, outside)]].any()


def compute_spectrum(R: FiniteRing) -> SpectrumData:
    def build():
        primes = tuple(P for P in all_ideals(R) if is_prime_ideal(P))
        maximals = tuple(P for P in primes if not any(P < Q for Q in primes))
        minimals = tuple(P for P in primes if not any(Q < P for Q in primes))
        jac = intersect_all(R, maximals) if maximals else unit_ideal(R)
        return SpectrumData(primes, maximals, minimals, jac)
    return R.cached("spectrum", build)


def vanishing_set(I: Ideal) -> list[Ideal]:
    """V(I): primes containing I."""
    return [P for P in compute_spectrum(I.ring).primes if I <= P]


def lambda_set(p: Ideal) -> list[Ideal]:
    """Primes contained in the prime p."""
    if not is_prime_ideal(p):
        raise RingError(f"{p!r} is not a prime ideal")
    return [Q for Q in compute_spectrum(p.ring).primes if Q <= p]


def jacobson_radical(R: FiniteRing) -> Ideal:
    return compute_spectrum(R).jacobson


def is_reduced(R: FiniteRing) -> bool:
    return nilradical_set(R) == frozenset([R.zero])


def is_zero_dimensional(R: FiniteRing) -> bool:
    spec = compute_spectrum(R)
    return set(spec.primes) == set(spec.maximals)


def is_gelfand(R: FiniteRing) -> bool:
    spec = compute_spectrum(R)
    return all(sum(P <= M for M in spec.maximals) == 1 for P in spec.primes)


def is_mp_ring(R: FiniteRing) -> bool:
    spec = compute_spectrum(R)
    return all(sum(Q <= P for Q in spec.minimals) == 1 for P in spec.primes)


def is_primary_ideal(q: Ideal) -> bool:
    """Proper, and ab in q with a outside q forces b into the radical of q."""
    if not q.is_proper:
        return False
    R = q.ring
    rad = radical(q).mask
    outside = np.nonzero(~q.mask)[0]
    # rows a outside q, columns b outside sqrt(q): no product may fall in q
    not_rad = np.nonzero(~rad)[0]
    if len(not_rad) == 0:
        return True
    return not q.mask[R.mul[np.ix_(outside, not_rad)]].any()


def is_mid_ring(R: FiniteRing) -> tuple[bool, bool]:
    """Both characterizations of a mid ring, computed independently.

    The first asks that every annihilator Ann(a) be N-pure; the second that
    the kernel of R -> R_p be primary for every prime p.
    """
    from .ideals import annihilator_of_element
    from .localization import kernel_of_pi
    from .purity import is_npure_basic

    by_annihilators = all(is_npure_basic(annihilator_of_element(R, a)) for a in range(R.size))
    by_kernels = all(is_primary_ideal(kernel_of_pi(P)) for P in compute_spectrum(R).primes)
    return by_annihilators, by_kernels
