import pytest

from npure import zint
from npure.ideals import generate_ideal
from npure.localization import localize, one_plus_ideal
from npure.rings import build_ring
from npure.spectrum import compute_spectrum


def test_purity():
    assert zint.z_purity(zint.ZIdeal(0)) == (True, True)
    assert zint.z_purity(zint.ZIdeal(1)) == (True, True)
    assert zint.z_purity(zint.ZIdeal(6)) == (False, False)
    with pytest.raises(ValueError):
        zint.ZIdeal(-3)


def test_examples():
    assert zint.z_spec_localized(6) == [0, 2, 3]
    assert zint.z_spec_localized(9) == [0, 3]
    with pytest.raises(ValueError):
        zint.z_spec_localized(1)


def test_against_brute_force():
    for n in range(2, 1001):
        assert zint.z_spec_localized(n) == zint.brute_force_spec_localized(n, 1000), n


def test_radical_facts():
    f = zint.z_radical_kernel_facts(12)
    assert (f.radical, f.kernel, f.criterion_iv) == (6, 0, False)
    assert zint.z_radical_kernel_facts(1).criterion_iv
    assert zint.z_radical_kernel_facts(0).criterion_iv


def test_flag():
    assert zint.localized_example(7).flag == "quotient is a field, localization is not"
    assert zint.localized_example(49).flag == ""
    assert zint.localized_example(6).flag == ""


def test_prime_helpers():
    assert zint.primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert zint.rad(72) == 6
    assert zint.prime_factors(1) == []


def test_finite_bridge():
    # localizing Z/nm at 1 + (n) keeps the primary components at primes dividing n
    for n in range(2, 33):
        for m in range(2, 64 // n + 1):
            R = build_ring(f"zmod:{n * m}")
            L = localize(one_plus_ideal(generate_ideal(R, [n])))
            want = [q for q in zint.prime_factors(n * m) if n % q == 0]
            size = 1
            for q in want:
                while (n * m) % (size * q) == 0:
                    size *= q
            assert len(compute_spectrum(L.quotient).primes) == len(want), (n, m)
            assert L.quotient.size == size, (n, m)
