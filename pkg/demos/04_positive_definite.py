"""
Positive definite presentations
===============================

Each round adds 3<+1> and blows down u + a, where u = 2 v0 for a vector v0
of negative odd square and |a|^2 = -u.u - 1 (three squares, since that
number is 3 mod 8).  The rank goes up by 2 and the signature by 4.
"""

from lensgenus import definite_presentation, search_definite_presentation

for p, q in [(5, 2), (5, 1), (7, 3), (24, 19)]:
    c = definite_presentation(p, q)
    print(f"({q}/{p}): seed {c.details['seed_case'].value}, rank {c.rank}")
    print("   ", c.gram.gram)

c = definite_presentation(5, 2)
print("\ntrace for (2/5):")
for line in c.trace:
    print("   ", line)

# the brute-force oracle looks for the smallest reduced witness directly
for p, q in [(3, 1), (5, 2), (8, 5)]:
    w = search_definite_presentation(p, q, 3)
    print(f"search ({q}/{p}):", w.gram.gram if w else None)
