"""Pure, N-pure and strongly pi-regular ideals, and the lemmas local to one ideal.

Every "there exists n >= 1" quantifier is closed off by the power cycle of
the element in question: if a^n x = 0 holds for some n it already holds for
some n <= mu + c.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ideals import (Ideal, all_ideals, annihilator_of_element, contains_one,
                     generate_ideal, intersect_all, radical)
from .rings import FiniteRing, RingHom, elem_pow, nilradical_set, quotient
from .spectrum import compute_spectrum, is_zero_dimensional
from .verdict import TheoremViolation, Verdict, subject, verdict


def _nil_mask(R: FiniteRing) -> np.ndarray:
    def build():
        mask = np.zeros(R.size, dtype=bool)
        mask[list(nilradical_set(R))] = True
        return mask
    return R.cached("nil_mask", build)


def _one_minus_in(I: Ideal) -> np.ndarray:
    return I.ring.one_minus()[list(I.elements)]


def pure_by_witness(I: Ideal) -> bool:
    """Each a in I has b in I with a(1 - b) = 0."""
    R = I.ring
    prods = R.mul[np.ix_(I.elements, _one_minus_in(I))]
    return bool((prods == R.zero).any(axis=1).all())


def pure_by_annihilator(I: Ideal) -> bool:
    """Ann(a) + I = R for every a in I."""
    R = I.ring
    return all(contains_one(I.mask, R, annihilator_of_element(R, a)) for a in I)


def is_pure(I: Ideal) -> bool:
    by_witness = pure_by_witness(I)
    if by_witness != pure_by_annihilator(I):
        raise TheoremViolation(f"the two purity tests disagree on {I!r}")
    return by_witness


def npure_by_nilpotence(I: Ideal) -> bool:
    """Each a in I has b in I with a(1 - b) nilpotent."""
    R = I.ring
    prods = R.mul[np.ix_(I.elements, _one_minus_in(I))]
    return bool(_nil_mask(R)[prods].any(axis=1).all())


def is_npure_basic(I: Ideal) -> bool:
    return npure_by_nilpotence(I)


def npure_witnesses(I: Ideal) -> dict | None:
    """Least (n, b) per a in I with a^n (1 - b) = 0, or None if some a has none."""
    R = I.ring
    elems = list(I.elements)
    om = _one_minus_in(I)
    out = {}
    for a in elems:
        seq = R.powers(a)
        for n in range(1, R.exponent_bound(a) + 1):
            hits = np.nonzero(R.mul[seq[n], om] == R.zero)[0]
            if len(hits):
                out[a] = (n, elems[hits[0]])
                break
        else:
            return None
    return out


def _ann_power_hits(I: Ideal, a: int) -> bool:
    """Some t <= mu_a + c_a has Ann(a^t) + I = R."""
    R = I.ring
    seq = R.powers(a)
    return any(contains_one(I.mask, R, annihilator_of_element(R, seq[t]))
               for t in range(1, R.exponent_bound(a) + 1))


def annihilator_radical(I: Ideal) -> frozenset:
    """{a in R : Ann(a^n) + I = R for some n}."""
    return frozenset(a for a in range(I.ring.size) if _ann_power_hits(I, a))


def pure_ideals(R: FiniteRing) -> list[Ideal]:
    return R.cached("pure_ideals", lambda: [J for J in all_ideals(R) if is_pure(J)])


@dataclass(frozen=True)
class PurityVerdict:
    """Pure / N-pure / strongly pi-regular status of one ideal.

    ``npure`` holds the five equivalent N-purity criteria in order; they
    must all agree.  ``npure_power_form`` is criterion (i) restated with an
    explicit exponent.
    """

    pure: bool
    pure_by_annihilator: bool
    npure: tuple
    npure_power_form: bool
    strongly_pi_regular: bool
    pure_partner: Ideal | None
    partner_count: int
    witnesses: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        forms = set(self.npure) | {self.npure_power_form}
        return (len(forms) == 1 and self.pure == self.pure_by_annihilator
                and (not self.pure or self.npure[0]) and self.partner_count <= 1
                and (not self.npure[0] or len(self.witnesses) > 0))

    @property
    def is_npure(self) -> bool:
        return self.npure[0]


def purity_verdict(I: Ideal) -> PurityVerdict:
    R = I.ring

    def build():
        rad = radical(I)
        c1 = npure_by_nilpotence(I)
        witnesses = npure_witnesses(I)
        c2 = all(_ann_power_hits(I, a) for a in I)
        c3 = annihilator_radical(I) == rad.members
        c4 = npure_by_nilpotence(rad)
        partners = [J for J in pure_ideals(R) if radical(J) == rad]
        c5 = len(partners) == 1
        return PurityVerdict(
            pure=pure_by_witness(I),
            pure_by_annihilator=pure_by_annihilator(I),
            npure=(c1, c2, c3, c4, c5),
            npure_power_form=witnesses is not None,
            strongly_pi_regular=is_strongly_pi_regular(I),
            pure_partner=partners[0] if partners else None,
            partner_count=len(partners),
            witnesses=witnesses or {},
        )
    return R.cached(("purity", I.members), build)


def is_npure(I: Ideal) -> bool:
    return purity_verdict(I).is_npure


def is_strongly_pi_regular(I: Ideal) -> bool:
    """Each a in I has n >= 1 and b in I with a^n = a^(n+1) b."""
    R = I.ring
    elems = list(I.elements)
    for a in elems:
        for n in range(1, R.exponent_bound(a) + 1):
            if (R.mul[elem_pow(R, a, n + 1), elems] == elem_pow(R, a, n)).any():
                break
        else:
            return False
    return True


def uniform_exponent_witness(I: Ideal) -> tuple[int, int]:
    """Least (n, b) in lexicographic order with a^n (1 - b) = 0 for every a in I."""
    R = I.ring
    if not npure_by_nilpotence(I):
        raise ValueError(f"{I!r} is not N-pure")
    elems = list(I.elements)
    om = _one_minus_in(I)
    bound = max(R.exponent_bound(a) for a in elems)
    for n in range(1, bound + 1):
        pows = [elem_pow(R, a, n) for a in elems]
        ok = (R.mul[np.ix_(pows, om)] == R.zero).all(axis=0)
        hits = np.nonzero(ok)[0]
        if len(hits):
            return n, elems[hits[0]]
    raise TheoremViolation(f"no uniform exponent witness for N-pure {I!r}")


def principal_radical_witness(I: Ideal) -> int:
    """Least a in I whose principal ideal has the same radical as I."""
    R = I.ring
    if not npure_by_nilpotence(I):
        raise ValueError(f"{I!r} is not N-pure")
    rad = radical(I)
    for a in I:
        if radical(generate_ideal(R, [a])) == rad:
            return a
    raise TheoremViolation(f"no principal radical witness for N-pure {I!r}")


def push_forward(phi: RingHom, I: Ideal) -> Ideal:
    """The extended ideal I S of the codomain."""
    return generate_ideal(phi.codomain, [phi(g) for g in I.gens])


# --------------------------------------------------------------------------
# Checks
# --------------------------------------------------------------------------


def check_characterizations(I: Ideal) -> Verdict:
    """The five N-purity criteria (and both purity forms) agree on I."""
    R = I.ring
    v = purity_verdict(I)
    fails = []
    if not v.consistent:
        fails.append({"npure": list(v.npure), "powerForm": v.npure_power_form,
                      "pure": [v.pure, v.pure_by_annihilator], "partners": v.partner_count})
    if v.is_npure and set(v.witnesses) != set(I.elements):
        fails.append({"missingWitness": sorted(set(I.elements) - set(v.witnesses))})
    if I.elements and set(I.elements) <= nilradical_set(R):
        if not all(R.times(a, R.one_minus()[R.zero]) in nilradical_set(R) for a in I):
            fails.append({"nilIdealWitness": "b = 0 fails"})
    return verdict("T2.6", subject(R, I), fails,
                   details={"npure": v.is_npure, "pure": v.pure})


def check_lemma_v(I: Ideal) -> Verdict:
    """A proper N-pure ideal containing a prime equals it and is a minimal prime."""
    R = I.ring
    if not I.is_proper or not is_npure(I):
        return verdict("LemV", subject(R, I), [], applicable=False)
    spec = compute_spectrum(R)
    inside = [P for P in spec.primes if P <= I]
    fails = []
    for P in inside:
        if P != I or I not in spec.minimals:
            fails.append({"prime": list(P.elements)})
    return verdict("LemV", subject(R, I), fails, applicable=bool(inside))


def check_lemma_vi(R: FiniteRing) -> Verdict:
    """N-pure ideals inside the Jacobson radical are nil."""
    jac = compute_spectrum(R).jacobson
    nil = nilradical_set(R)
    tested = [I for I in all_ideals(R) if I <= jac and is_npure(I)]
    fails = [{"ideal": list(I.elements)} for I in tested if not I.members <= nil]
    return verdict("LemVI", subject(R), fails, applicable=bool(tested))


def check_corollary_iv(I: Ideal) -> Verdict:
    """sqrt(I) is the intersection of the minimal primes over I."""
    R = I.ring
    if not is_npure(I):
        return verdict("CorIV", subject(R, I), [], applicable=False)
    over = [P for P in compute_spectrum(R).minimals if I <= P]
    meet = intersect_all(R, over)
    rad = radical(I)
    fails = [] if meet == rad else [{"radical": list(rad.elements), "meet": list(meet.elements)}]
    return verdict("CorIV", subject(R, I), fails)


def check_proposition_iii(I: Ideal) -> Verdict:
    """For J containing an N-pure I: J is N-pure iff J/I is N-pure in R/I."""
    R = I.ring
    if not is_npure(I):
        return verdict("PropIII", subject(R, I), [], applicable=False)
    Q, proj = quotient(R, I.gens)
    fails = []
    for J in all_ideals(R):
        if not I <= J:
            continue
        upstairs = is_npure(J)
        downstairs = is_npure(push_forward(proj, J))
        if upstairs != downstairs:
            fails.append({"J": list(J.elements), "inR": upstairs, "inQuotient": downstairs})
    return verdict("PropIII", subject(R, I), fails)


def check_lemma_ii(phi: RingHom, I: Ideal) -> Verdict:
    """The extension of an N-pure ideal along a ring map is N-pure."""
    subj = subject(phi.domain, I, f"hom={phi.label or 'map'} to {subject(phi.codomain)}")
    if not is_npure(I):
        return verdict("LemII", subj, [], applicable=False)
    image = push_forward(phi, I)
    fails = [] if is_npure(image) else [{"image": list(image.elements)}]
    return verdict("LemII", subj, fails)


def check_proposition_v(R: FiniteRing) -> Verdict:
    """On a zero-dimensional ring N-pure and strongly pi-regular ideals coincide."""
    zero_dim = is_zero_dimensional(R)
    fails = []
    for I in all_ideals(R):
        v = purity_verdict(I)
        if v.strongly_pi_regular and not v.is_npure:
            fails.append({"ideal": list(I.elements), "spr": True, "npure": False})
        elif zero_dim and v.is_npure != v.strongly_pi_regular:
            fails.append({"ideal": list(I.elements), "spr": v.strongly_pi_regular,
                          "npure": v.is_npure})
    return verdict("PropV", subject(R), fails, applicable=zero_dim,
                   details={"zeroDimensional": zero_dim})


def check_proposition_vi(I: Ideal) -> Verdict:
    R = I.ring
    if not is_npure(I):
        return verdict("PropVI", subject(R, I), [], applicable=False)
    a = principal_radical_witness(I)
    ok = a in I and radical(generate_ideal(R, [a])) == radical(I)
    return verdict("PropVI", subject(R, I), [] if ok else [{"a": a}], details={"a": a})


def check_uniform_exponent(I: Ideal) -> Verdict:
    """Find the uniform (n, b) and re-verify it by a direct scan."""
    R = I.ring
    if not is_npure(I):
        return verdict("LemVIIa", subject(R, I), [], applicable=False)
    n, b = uniform_exponent_witness(I)
    ok = b in I and all(R.times(elem_pow(R, a, n), R.minus(R.one, b)) == R.zero for a in I)
    return verdict("LemVIIa", subject(R, I), [] if ok else [{"n": n, "b": b}],
                   details={"n": n, "b": b})
