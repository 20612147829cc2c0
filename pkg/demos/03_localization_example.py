"""Localize Z/12 at 1 + (2) and at 1 + (3), then compare with the integers."""
from npure import build_ring, compute_spectrum, generate_ideal, is_npure, is_pure, localize, one_plus_ideal
from npure import zint

R = build_ring("zmod:12")
for g in (2, 3):
    I = generate_ideal(R, [g])
    L = localize(one_plus_ideal(I))
    print(f"I = ({g}): pure={is_pure(I)} npure={is_npure(I)}")
    print(f"  kernel of R -> S^-1 R: {sorted(L.kernel.members)}")
    print(f"  S^-1 R has {L.quotient.size} elements and "
          f"{len(compute_spectrum(L.quotient).primes)} prime(s)")
    print(f"  image of I is zero: {L.image(I).is_zero}")

print("\nOver Z, localizing at 1 + nZ keeps 0 and the primes dividing n:")
for n in (2, 4, 6, 7, 12):
    ex = zint.localized_example(n)
    print(f"  n={n:<3} primes {ex.primes}  {ex.flag}")
