"""Resolve every orbit closure of equioriented A3 with dimension vector (2,2,2).

For each orbit we print the predicted projective dimension (from dim End)
next to the one read off a minimal free resolution of the rank-condition
ideal, plus the Cohen-Macaulay verdict.
"""

from quivercm import enumerate_orbits, linear_quiver, representation_of
from quivercm.groebner import verify_cm

q = linear_quiver(3)
d = (2, 2, 2)

print("%-42s %4s %4s %4s %4s  %s" % ("orbit", "gens", "dim", "pd", "pred", "CM"))
for label in enumerate_orbits(q, d):
    m = representation_of(q, label)
    r = verify_cm(q, m)
    print("%-42s %4d %4d %4d %4d  %s" % (label, r.generators, r.dim, r.pd_resolution, r.pd_formula, r.cm))

# one Betti diagram in full: the orbit whose closure needs the most equations
worst = max(enumerate_orbits(q, d), key=lambda lab: verify_cm(q, representation_of(q, lab)).generators)
print()
print("Betti diagram for", worst)
print(verify_cm(q, representation_of(q, worst)).betti.format())
