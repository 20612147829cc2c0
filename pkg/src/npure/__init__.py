"""Pure and N-pure ideals of finite commutative rings.

Rings are dense-table :class:`FiniteRing` objects; ideals, spectra,
localizations at ``1 + I`` and endomorphism rings of ideal powers are
computed exhaustively on top of them.
"""
from .ideals import (Ideal, all_ideals, annihilator_of_element, generate_ideal, ideal_intersect,
                     ideal_power, ideal_product, ideal_sum, radical)
from .localization import (complement_of_prime, kernel_of_pi, localize, one_plus_ideal)
from .purity import (is_npure, is_pure, is_strongly_pi_regular, principal_radical_witness,
                     purity_verdict, uniform_exponent_witness)
from .rings import (FiniteRing, RingHom, build_hom, build_ring, elem_pow, idempotents_set,
                    nilradical_set, parse_spec, power_cycle, units_set)
from .spectrum import compute_spectrum, is_gelfand, is_mp_ring, is_reduced, is_zero_dimensional

__all__ = [
    "all_ideals",
    "annihilator_of_element",
    "build_hom",
    "build_ring",
    "complement_of_prime",
    "compute_spectrum",
    "elem_pow",
    "FiniteRing",
    "generate_ideal",
    "Ideal",
    "ideal_intersect",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "idempotents_set",
    "is_gelfand",
    "is_mp_ring",
    "is_npure",
    "is_pure",
    "is_reduced",
    "is_strongly_pi_regular",
    "is_zero_dimensional",
    "kernel_of_pi",
    "localize",
    "nilradical_set",
    "one_plus_ideal",
    "parse_spec",
    "power_cycle",
    "principal_radical_witness",
    "purity_verdict",
    "radical",
    "RingHom",
    "uniform_exponent_witness",
    "units_set",
]

__version__ = "0.1.0"
