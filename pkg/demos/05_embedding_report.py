"""
Embedding certificates
======================

Bounds on how many copies of CP2 # -CP2, S2 x S2 and CP2 are needed to
embed L(p, q), each backed by a verified matrix.  The passage from a
matrix to a 4-manifold is quoted as an assumption, not computed.
"""

from lensgenus.certify import embedding_report, report_to_text

print(report_to_text(embedding_report(5, 2)))
print(report_to_text(embedding_report(7, 3)))

r = embedding_report(24, 19)
print("L(24, 19):", "b2", r.coboundary_b2, " S2xS2", r.s2xs2_bound, " CP2", r.cp2_bound,
      " #5 CP2 flag", r.five_cp2_flag)
