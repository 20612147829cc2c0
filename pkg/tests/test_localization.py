import pytest

from npure.ideals import all_ideals, generate_ideal, unit_ideal, zero_ideal
from npure.localization import (MultiplicativeSet, check_corollary_i, check_corollary_ii,
                                check_corollary_iii, check_gelfand_kernels, check_proposition_ii,
                                check_theorem_ii, check_theorem_iii, check_theorem_iv,
                                complement_of_prime, kernel_of_pi, localize, one_plus_ideal,
                                smoke_units)
from npure.rings import build_ring, nilradical_set
from npure.spectrum import compute_spectrum


def ideal(R, *gens):
    return generate_ideal(R, list(gens))


class TestMultiplicativeSets:
    def test_one_plus(self, z12):
        assert one_plus_ideal(ideal(z12, 2)).members == {1, 3, 5, 7, 9, 11}
        assert one_plus_ideal(zero_ideal(z12)).members == {1}
        assert one_plus_ideal(ideal(z12, 3)).members == {1, 4, 7, 10}

    def test_complement(self, z12):
        assert complement_of_prime(ideal(z12, 2)).members == {1, 3, 5, 7, 9, 11}
        F = build_ring("zmod:5")
        assert complement_of_prime(zero_ideal(F)).members == {1, 2, 3, 4}
        Z8 = build_ring("zmod:8")
        assert complement_of_prime(ideal(Z8, 2)).members == {1, 3, 5, 7}
        with pytest.raises(ValueError):
            complement_of_prime(ideal(z12, 6))

    def test_rejects_non_multiplicative(self, z12):
        with pytest.raises(ValueError):
            MultiplicativeSet(z12, frozenset({1, 2}))
        with pytest.raises(ValueError):
            MultiplicativeSet(z12, frozenset({5}))


class TestLocalize:
    def test_at_one_plus_two(self, z12):
        L = localize(one_plus_ideal(ideal(z12, 2)))
        assert L.kernel.members == {0, 4, 8}
        assert L.quotient.size == 4
        assert len(compute_spectrum(L.quotient).primes) == 1

    def test_at_one_plus_three(self, z12):
        L = localize(one_plus_ideal(ideal(z12, 3)))
        assert L.kernel.members == {0, 3, 6, 9}
        assert L.quotient.size == 3
        assert L.image(ideal(z12, 3)).is_zero

    def test_trivial(self, z12):
        L = localize(MultiplicativeSet(z12, frozenset([1])))
        assert L.kernel.is_zero and L.quotient.size == 12

    def test_zero_in_set(self, z12):
        L = localize(one_plus_ideal(unit_ideal(z12)))
        assert L.kernel == unit_ideal(z12) and L.quotient.size == 1

    def test_kernel_and_certificate_oracles(self, corpus32):
        for _, R in corpus32:
            for I in all_ideals(R):
                S = one_plus_ideal(I)
                L = localize(S)
                brute = {a for a in range(R.size) if any(R.times(s, a) == R.zero for s in S.members)}
                assert L.kernel.members == brute
                Q = L.quotient
                for s, inv in L.certificate.items():
                    assert Q.times(L.projection(s), inv) == Q.one

    def test_smoke(self, corpus32):
        assert all(smoke_units(R) for _, R in corpus32)


class TestKernelOfPi:
    def test_examples(self, z12):
        assert kernel_of_pi(ideal(z12, 2)).members == {0, 4, 8}
        assert kernel_of_pi(ideal(z12, 3)).members == {0, 3, 6, 9}
        assert kernel_of_pi(zero_ideal(build_ring("zmod:7"))).is_zero

    def test_non_prime(self, z12):
        with pytest.raises(ValueError):
            kernel_of_pi(ideal(z12, 4))


class TestTheoremIII:
    def test_z12_two(self, z12):
        v = check_theorem_iii(ideal(z12, 2))
        assert v.status == "pass" and all(v.details.values())
        L = localize(one_plus_ideal(ideal(z12, 2)))
        assert len(nilradical_set(L.quotient)) == 2

    def test_zero_ideal(self, z12):
        assert check_theorem_iii(zero_ideal(z12)).status == "pass"


class TestTheoremIV:
    def test_pure(self, z12):
        v = check_theorem_iv(ideal(z12, 3))
        assert v.status == "pass" and v.details == {"ii": True, "iiMap": True, "iii": True}

    def test_not_pure(self, z12):
        v = check_theorem_iv(ideal(z12, 2))
        assert v.status == "pass" and v.details == {"ii": False, "iiMap": False, "iii": False}

    def test_whole_ring(self, z12):
        assert check_theorem_iv(unit_ideal(z12)).status == "pass"


class TestKernelIntersections:
    def test_proposition_ii(self, z12):
        for g in (2, 0, 1):
            assert check_proposition_ii(ideal(z12, g)).status == "pass"
        assert check_corollary_i(ideal(z12, 2)).status == "pass"
        assert check_corollary_i(unit_ideal(z12)).status == "vacuous"

    def test_theorem_ii(self, z12):
        assert check_theorem_ii(ideal(z12, 6)).status == "pass"
        assert check_theorem_ii(zero_ideal(build_ring("zmod:5"))).status == "pass"
        assert check_theorem_ii(ideal(build_ring("zmod:8"), 2)).status == "pass"
        assert check_theorem_ii(unit_ideal(z12)).status == "vacuous"

    def test_gelfand_kernels(self, z12):
        assert [v.status for v in check_gelfand_kernels(z12)] == ["pass"] * 3
        assert [v.status for v in check_gelfand_kernels(build_ring("zmod:3"))] == ["pass"] * 3


class TestCorollaries:
    def test_corollary_ii(self, z12):
        assert check_corollary_ii(ideal(z12, 2), ideal(z12, 4)).status == "pass"
        assert check_corollary_ii(ideal(z12, 2), ideal(z12, 2)).status == "pass"
        Z8 = build_ring("zmod:8")
        assert check_corollary_ii(ideal(Z8, 2), zero_ideal(Z8)).status == "pass"
        assert check_corollary_ii(ideal(z12, 2), ideal(z12, 3)).status == "vacuous"

    def test_corollary_iii(self, z12):
        for g in (3, 0, 2):
            assert check_corollary_iii(ideal(z12, g)).status == "pass"
