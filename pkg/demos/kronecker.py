"""The pd prediction on a Kronecker point, where it is not expected to hold.

Only the formula side is computed; the orbit closure of this point is not
cut out by rank conditions, so no resolution is attempted.
"""

from pathlib import Path

from quivercm import end_dim, parse_representation, pd_formula, rep_space_dim
from quivercm.homology import pd_formula_caveat

m = parse_representation(Path(__file__).with_name("data").joinpath("kronecker.rep").read_text())
l = rep_space_dim(m.quiver, m.dims)
print("l =", l)
print("dim End =", end_dim(m))
print("predicted pd = l + dim End - sum d_i^2 =", pd_formula(m))
print("caveat:", pd_formula_caveat(m.quiver))
