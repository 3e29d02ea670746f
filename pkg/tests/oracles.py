"""Independent reference computations used to check the library."""

from itertools import product

import sympy


def hom_dim_sympy(m, n):
    """dim Hom(m, n) from a sympy nullspace of the intertwiner equations."""
    q = m.quiver
    blocks = []
    for v in range(q.n):
        blocks.append(sympy.Matrix(n.dims[v], m.dims[v], lambda i, j: sympy.Symbol("h%d_%d_%d" % (v, i, j))))
    unknowns = [x for b in blocks for x in b]
    eqs = []
    for k, f in enumerate(m.maps):
        s, t = q.ends(k)
        if not (m.dims[s] and n.dims[t]):
            continue
        F = sympy.Matrix(m.dims[t], m.dims[s], lambda i, j: sympy.Rational(str(f[i][j])))
        G = sympy.Matrix(n.dims[t], n.dims[s], lambda i, j: sympy.Rational(str(n.maps[k][i][j])))
        eqs.extend(blocks[t] * F - G * blocks[s])
    if not unknowns:
        return 0
    if not eqs:
        return len(unknowns)
    A = sympy.Matrix([[sympy.diff(e, x) for x in unknowns] for e in eqs])
    return len(unknowns) - A.rank()


def _gl(n, p):
    out = []
    for entries in product(range(p), repeat=n * n):
        g = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if round(sympy.Matrix(g).det()) % p:
            out.append(g)
    return out


def _mul(a, b, p):
    if not a or not b or not b[0]:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) % p for j in range(len(b[0]))] for i in range(len(a))]


def _inv(g, p):
    if not g:
        return []
    m = sympy.Matrix(g).inv_mod(p)
    return [[int(x) % p for x in m.row(i)] for i in range(len(g))]


def orbit_count_fp(q, dims, p=2):
    """Number of GL(d)-orbits on rep(Q, d) over F_p, by exhaustive search."""
    shapes = [(dims[q.ends(k)[1]], dims[q.ends(k)[0]]) for k in range(len(q.arrows))]
    size = sum(r * c for r, c in shapes)
    groups = [_gl(d, p) if d else [[]] for d in dims]
    group = list(product(*groups))
    inverses = [tuple(_inv(g, p) for g in gs) for gs in group]

    def split(flat):
        out, pos = [], 0
        for r, c in shapes:
            out.append([list(flat[pos + i * c:pos + (i + 1) * c]) for i in range(r)])
            pos += r * c
        return out

    def flatten(mats):
        return tuple(x for m in mats for row in m for x in row)

    seen = set()
    orbits = 0
    for flat in product(range(p), repeat=size):
        if flat in seen:
            continue
        orbits += 1
        mats = split(flat)
        for gs, ginv in zip(group, inverses):
            image = []
            for k, f in enumerate(mats):
                s, t = q.ends(k)
                image.append(_mul(_mul(gs[t], f, p), ginv[s], p) if f and f[0] else f)
            seen.add(flatten(image))
    return orbits


def ext1_from_label(q, label, field=None):
    """dim Ext^1(M, M) from the summands of M: sum of mu_r mu_s (hom(X_r, X_s) - <r, s>)."""
    from quivercm.fields import QQ
    from quivercm.quiver import euler_form
    from quivercm.roots import hom_matrix, positive_roots

    field = field or QQ
    roots = positive_roots(q)
    pos = {r: i for i, r in enumerate(roots)}
    H = hom_matrix(q, field)
    total = 0
    for r, a in label.parts:
        for s, b in label.parts:
            total += a * b * (H[pos[r]][pos[s]] - euler_form(q, r, s))
    return total
