"""Degeneration order for D4 at the highest root, with pd annotations.

Writes the Hasse diagram as DOT to the path given on the command line,
or to d4_degenerations.dot in the current directory.
"""

import sys
from pathlib import Path

from quivercm import Quiver, corollary1_check, degeneration_poset, export_dot

# three arms pointing into the central vertex, which is listed last
q = Quiver(["1", "2", "3", "4"], [("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")])
p = degeneration_poset(q, (1, 1, 1, 2))

for i, (label, note) in enumerate(zip(p.labels, p.annotations)):
    tags = [t for t, on in (("open", note.open), ("closed", note.closed)) if on]
    print("%2d  %-44s dim O = %d  pd = %d  %s" % (i, label, note.orbit_dim, note.pd_formula, " ".join(tags)))

report = corollary1_check(p)
print("\npd is minimal at each orbit over its degenerations:", not report.minimality_violations)
print("closed orbits are exactly those with constant pd above them:", not report.closed_criterion_violations)

out = Path(sys.argv[1] if len(sys.argv) > 1 else "d4_degenerations.dot")
out.write_text(export_dot(p))
print("wrote", out)
