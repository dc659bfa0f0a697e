"""
Even presentations by blowing down a characteristic vector
==========================================================

Start from an odd rank-2 pairing V, add a hyperbolic plane (and maybe a
<+-1>), and blow down a characteristic vector of square +-1.  What is
left is even and still presents the same form.
"""

from lensgenus import even_presentation, parity
from lensgenus.forms import characteristic_vector, GramPairing, HYPERBOLIC, direct_sum

V = GramPairing(((-15, 10), (10, -7)))
v = characteristic_vector(V)
print("V =", V.gram, " characteristic v =", v, " v.v =", V.square(v))

# in H every characteristic vector is (2k, 2l) with square 8kl, so
# v + w reaches exactly the squares congruent to v.v mod 8
W = direct_sum(V, HYPERBOLIC)
print("V + H =", W.gram)

c = even_presentation(5, 2)
print("\neven presentation of (2/5), rank", c.rank, parity(c.gram).value)
for line in c.trace:
    print("   ", line)

for p, q in [(8, 3), (24, 19), (9, 2)]:
    c = even_presentation(p, q)
    print(f"({q}/{p}) rank {c.rank}:", c.gram.gram)
