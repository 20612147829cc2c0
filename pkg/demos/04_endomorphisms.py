"""Endomorphism rings of ideal powers, counted exhaustively."""
from npure import build_ring, generate_ideal
from npure.endo import all_endomorphisms, endo_ring_is_commutative, module_of_ideal_power

R = build_ring("zmod:12")
for g, n in ((3, 1), (4, 1), (2, 1), (2, 2), (6, 1)):
    M = module_of_ideal_power(generate_ideal(R, [g]), n)
    maps = all_endomorphisms(M)
    print(f"End(({g})^{n}): carrier {list(M.carrier)}, {len(maps)} maps, "
          f"commutative={endo_ring_is_commutative(M, maps)}")
