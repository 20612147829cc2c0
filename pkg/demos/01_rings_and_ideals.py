"""Build a few small rings and look at their ideal lattices."""
from npure import all_ideals, build_ring, compute_spectrum, nilradical_set, radical, units_set

for text in ("zmod:12", "polyquot:p=2;f=0,0,1", "prod:(zmod:2,zmod:3)"):
    R = build_ring(text)
    print(f"{text}: {R.size} elements")
    print("  units     ", sorted(units_set(R)))
    print("  nilradical", sorted(nilradical_set(R)))
    for I in all_ideals(R):
        print(f"  ideal {I.label():<24} radical {radical(I).label()}")
    spec = compute_spectrum(R)
    print("  primes    ", [P.label() for P in spec.primes])
    print()
