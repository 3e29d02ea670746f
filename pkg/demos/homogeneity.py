"""Scaling symmetry: trees always have it, a two-loop example does not."""

import random

from quivercm import Representation, is_homogeneous, loop_quiver, scale_representation, scaling_isomorphism
from quivercm.homogeneity import is_homogeneous_at
from quivercm.quiver import Quiver

# On a tree, vertex scalars lam^r with r increasing along arrows turn M into lam*M.
q = Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "3", "2"), ("c", "2", "4")])
rng = random.Random(1)
dims = (2, 1, 2, 3)
maps = [[[rng.randint(-3, 3) for _ in range(dims[q.index(a.source)])] for _ in range(dims[q.index(a.target)])] for a in q.arrows]
m = Representation(q, dims, maps)
s = scaling_isomorphism(q, dims, 3)
print("exponents:", s.exponents)
print("conjugation gives 3*M:", s.apply(m) == scale_representation(m, 3))
print("verdict:", is_homogeneous(m).describe())

# Two loops with beta = alpha^2: scaling both by lam forces lam = lam^2.
alpha = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
beta = [[0, 0, 0], [0, 0, 0], [1, 0, 0]]
loops = Representation(loop_quiver(2), [3], {"alpha": alpha, "beta": beta})
print()
print("two loops:", is_homogeneous(loops).describe())
for lam in (1, -1, 2, 3):
    print("  lam = %2d: lam*M isomorphic to M? %s" % (lam, is_homogeneous_at(loops, lam)))
