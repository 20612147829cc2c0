"""Pure versus N-pure on Z/12 and Z/8.

A finite ring is zero-dimensional, so every ideal turns out N-pure; purity
is the stricter notion and only idempotent-generated ideals have it.
"""
from npure import build_ring, generate_ideal, purity_verdict, uniform_exponent_witness

for text in ("zmod:12", "zmod:8"):
    R = build_ring(text)
    print(text)
    for g in range(R.size):
        I = generate_ideal(R, [g])
        if min(I.members - {0}, default=0) != g and g:
            continue
        v = purity_verdict(I)
        n, b = uniform_exponent_witness(I)
        print(f"  ({g}) pure={v.pure!s:<5} npure={v.is_npure!s:<5} "
              f"criteria agree={v.consistent}  a^{n}(1-{b}) = 0 for all a")
