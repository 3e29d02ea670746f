from fractions import Fraction

from quivercm.quiver import Quiver, Representation, dynkin_quiver, linear_quiver


def random_matrix(rng, rows, cols, lo=-2, hi=2):
    return [[Fraction(rng.randint(lo, hi)) for _ in range(cols)] for _ in range(rows)]


def random_rep(rng, q, dims, lo=-2, hi=2, field=None):
    maps = []
    for k in range(len(q.arrows)):
        s, t = q.ends(k)
        maps.append(random_matrix(rng, dims[t], dims[s], lo, hi))
    if field is None:
        return Representation(q, dims, maps)
    return Representation(q, dims, [[[field(x) for x in row] for row in m] for m in maps], field)


def random_orientation(rng, q):
    arrows = [(a.name, a.target, a.source) if rng.random() < 0.5 else tuple(a) for a in q.arrows]
    return Quiver(q.vertices, arrows)


def random_tree_quiver(rng, n):
    vertices = [str(i + 1) for i in range(n)]
    arrows = []
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = (vertices[i], vertices[j]) if rng.random() < 0.5 else (vertices[j], vertices[i])
        arrows.append(("a%d" % i, a, b))
    return Quiver(vertices, arrows)


def small_dynkin(rng):
    kind = rng.choice(["A2", "A3", "A4", "D4"])
    q = linear_quiver(int(kind[1])) if kind[0] == "A" else dynkin_quiver("D", 4)
    return random_orientation(rng, q)


def d4_central_sink():
    return Quiver(["1", "2", "3", "4"], [("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")])


def remark1_rep():
    from quivercm.quiver import loop_quiver

    alpha = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    beta = [[0, 0, 0], [0, 0, 0], [1, 0, 0]]
    return Representation(loop_quiver(2), [3], {"alpha": alpha, "beta": beta})


def kronecker_point():
    from quivercm.quiver import kronecker_quiver

    alpha = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    beta = [[1, 0, 0], [0, 0, 0], [0, 0, 1]]
    return Representation(kronecker_quiver(), [3, 3], {"alpha": alpha, "beta": beta})
