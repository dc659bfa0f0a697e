"""
Linking forms from intersection pairings
========================================

A symmetric integer matrix S with nonzero determinant presents the linking
form -S^{-1} mod 1 on coker(S).  For a lens space L(p, q) that form is
(q/p) on Z/p, and q only matters up to multiplication by unit squares.
"""

from lensgenus import GramPairing, CyclicLinkingForm, presented_linking_form, presents
from lensgenus.forms import as_cyclic, canonical_q, cyclic_equivalent

# [5] presents -1/5, i.e. 4/5 on Z/5
L = presented_linking_form(GramPairing(((5,),)))
print("[5]:", L.invariant_factors, L.pairing)

# 4 = 2^2, so (4/5) and (1/5) are the same form; 2 is not a square mod 5
print("(4/5) ~ (1/5):", cyclic_equivalent(CyclicLinkingForm(5, 4), CyclicLinkingForm(5, 1)))
print("(1/5) ~ (2/5):", cyclic_equivalent(CyclicLinkingForm(5, 1), CyclicLinkingForm(5, 2)))

# a rank-2 matrix for (2/5)
S = GramPairing(((-15, 10), (10, -7)))
L = presented_linking_form(S)
print("S =", S.gram, "det", S.det)
print("presents (2/5):", presents(S, CyclicLinkingForm(5, 2)))
print("canonical q:", canonical_q(as_cyclic(L)))

# a non-cyclic group: two copies of Z/3
L = presented_linking_form(GramPairing(((3, 0), (0, -3))))
print("diag(3,-3):", L.invariant_factors, L.pairing)
