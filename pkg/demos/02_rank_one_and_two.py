"""
Rank one and rank two
=====================

(q/p) has a rank-1 presentation [+-p] exactly when +-q is a square mod p.
Otherwise two dimensions always suffice: solve d q' - p b^2 = +-1 with
q' = +-q (mod p) and take [[-dp, bp], [bp, -q']].
"""

from lensgenus import rank1_presentation, rank2_presentation, rank2_constructive

for p, q in [(7, 3), (5, 1), (5, 2), (12, 5)]:
    c = rank1_presentation(p, q)
    print(f"({q}/{p}) rank 1:", c.gram.gram if c else "none")

c = rank2_presentation(5, 2)
print("\n(2/5) by direct search:", c.gram.gram)
for line in c.trace:
    print("   ", line)

# the constructive route picks q' prime and 3 mod 4 (Dirichlet)
c = rank2_constructive(5, 2)
print("(2/5) through a prime q':", c.gram.gram, c.details["q_prime"])

# for (5/12) the [[-dp, bp], [bp, -q']] shape only reaches (-5/12), so the
# negated matrix is used; it is positive definite
c = rank2_presentation(12, 5)
print("\n(5/12):", c.gram.gram, c.gram.definiteness.value)
for line in c.trace:
    print("   ", line)
