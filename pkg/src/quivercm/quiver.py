"""Quivers, dimension vectors and representations.

A representation assigns to every arrow ``a: i -> j`` a matrix of shape
``d_j x d_i`` acting on column vectors. The base-change group
``prod_i GL(d_i)`` acts by ``g_j f_a g_i^{-1}``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Sequence

from . import linalg
from .errors import InputError, NotApplicableError
from .fields import QQ, Field


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __init__(self, vertices: Sequence, arrows: Sequence):
        verts = tuple(str(v) for v in vertices)
        arrs = tuple(Arrow(str(a[0]), str(a[1]), str(a[2])) for a in arrows)
        dup = [v for v, c in Counter(verts).items() if c > 1]
        if dup:
            raise InputError("duplicate vertex identifier %r" % dup[0])
        dup = [a for a, c in Counter(a.name for a in arrs).items() if c > 1]
        if dup:
            raise InputError("duplicate arrow identifier %r" % dup[0])
        vset = set(verts)
        for a in arrs:
            for end in (a.source, a.target):
                if end not in vset:
                    raise InputError("arrow %r references unknown vertex %r" % (a.name, end))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        return self.vertices.index(vertex)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def arrow_index(self, name: str) -> int:
        for k, a in enumerate(self.arrows):
            if a.name == name:
                return k
        raise KeyError(name)

    def ends(self, k: int) -> tuple[int, int]:
        """Vertex indices (source, target) of the k-th arrow."""
        a = self.arrows[k]
        return self.index(a.source), self.index(a.target)

    def is_sink(self, v: str) -> bool:
        return all(a.source != v for a in self.arrows)

    def is_source(self, v: str) -> bool:
        return all(a.target != v for a in self.arrows)

    def reverse_at(self, v: str) -> "Quiver":
        """Reverse every arrow incident to ``v`` (names and order kept)."""
        arrows = []
        for a in self.arrows:
            if a.source == v or a.target == v:
                arrows.append(Arrow(a.name, a.target, a.source))
            else:
                arrows.append(a)
        return Quiver(self.vertices, arrows)

    def relabel(self, vmap: dict, amap: dict | None = None) -> "Quiver":
        amap = amap or {}
        return Quiver(
            [vmap.get(v, v) for v in self.vertices],
            [(amap.get(a.name, a.name), vmap.get(a.source, a.source), vmap.get(a.target, a.target)) for a in self.arrows],
        )


def check_dims(q: Quiver, d) -> tuple:
    d = tuple(int(x) for x in d)
    if len(d) != q.n:
        raise InputError("dimension vector has %d entries, quiver has %d vertices" % (len(d), q.n))
    if any(x < 0 for x in d):
        raise InputError("dimension vector entries must be nonnegative")
    return d


def rep_space_dim(q: Quiver, d) -> int:
    """Dimension ``l`` of rep(Q, d): the sum over arrows of d_source * d_target."""
    d = check_dims(q, d)
    return sum(d[q.index(a.source)] * d[q.index(a.target)] for a in q.arrows)


def vertex_end_dim(d) -> int:
    return sum(x * x for x in d)


def has_oriented_cycle(q: Quiver) -> bool:
    indeg = Counter()
    out = {v: [] for v in q.vertices}
    for a in q.arrows:
        if a.source == a.target:
            return True
        indeg[a.target] += 1
        out[a.source].append(a.target)
    queue = deque(v for v in q.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen != q.n


def require_acyclic(q: Quiver, what: str = "this operation"):
    if has_oriented_cycle(q):
        raise NotApplicableError("%s requires a quiver without oriented cycles" % what)


def euler_form(q: Quiver, d, e) -> int:
    """``<d, e> = sum_i d_i e_i - sum_a d_s(a) e_t(a)`` for acyclic ``q``."""
    require_acyclic(q, "the Euler form")
    d = check_dims(q, d)
    e = check_dims(q, e)
    val = sum(x * y for x, y in zip(d, e))
    for k in range(len(q.arrows)):
        s, t = q.ends(k)
        val -= d[s] * e[t]
    return val


# --- classification ------------------------------------------------------------


@dataclass(frozen=True)
class QuiverClass:
    connected: bool
    acyclic: bool
    tree: bool
    dynkin_type: tuple | None = None
    equioriented_a: bool = False

    @property
    def dynkin(self) -> str | None:
        if self.dynkin_type is None:
            return None
        return "%s%d" % self.dynkin_type

    def flags(self) -> dict:
        return {
            "connected": self.connected,
            "acyclic": self.acyclic,
            "tree": self.tree,
            "dynkin": self.dynkin,
            "equioriented_a": self.equioriented_a,
        }


def _neighbours(q: Quiver) -> dict:
    nb = {v: [] for v in q.vertices}
    for a in q.arrows:
        nb[a.source].append(a.target)
        if a.source != a.target:
            nb[a.target].append(a.source)
    return nb


def _is_connected(q: Quiver) -> bool:
    if q.n == 0:
        return False
    nb = _neighbours(q)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        v = stack.pop()
        for w in nb[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == q.n


def _arm_length(nb, start, prev):
    length = 1
    while len(nb[start]) == 2:
        nxt = nb[start][0] if nb[start][1] == prev else nb[start][1]
        prev, start = start, nxt
        length += 1
    return length


def _dynkin_type(q: Quiver, tree: bool):
    if not tree:
        return None
    nb = _neighbours(q)
    degrees = sorted(len(nb[v]) for v in q.vertices)
    n = q.n
    if not degrees or degrees[-1] <= 2:
        return ("A", n)
    if degrees[-1] > 3 or degrees[-2] > 2:
        return None
    center = next(v for v in q.vertices if len(nb[v]) == 3)
    arms = sorted(_arm_length(nb, w, center) for w in nb[center])
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return ("E", n)
    return None


def type_a_path(q: Quiver) -> list:
    """Vertices of a type-A quiver in path order.

    The path starts at the end that is a source when the orientation is
    linear; otherwise at the first endpoint in file order.
    """
    if q.n == 1:
        return list(q.vertices)
    nb = _neighbours(q)
    ends = [v for v in q.vertices if len(nb[v]) == 1]
    start = next((v for v in ends if q.is_source(v)), ends[0])
    path = [start]
    prev = None
    while len(path) < q.n:
        cur = path[-1]
        nxt = [w for w in nb[cur] if w != prev]
        prev = cur
        path.append(nxt[0])
    return path


def equioriented_chain(q: Quiver) -> tuple[list, list]:
    """``(vertices, arrow indices)`` along an equioriented A_n, in arrow direction."""
    cls = classify(q)
    if not cls.equioriented_a:
        raise NotApplicableError("quiver is not an equioriented A_n")
    path = type_a_path(q)
    arrows = []
    for v, w in zip(path, path[1:]):
        arrows.append(next(k for k, a in enumerate(q.arrows) if a.source == v and a.target == w))
    return path, arrows


def classify(q: Quiver) -> QuiverClass:
    connected = _is_connected(q)
    acyclic = not has_oriented_cycle(q)
    tree = connected and len(q.arrows) == q.n - 1
    dt = _dynkin_type(q, tree)
    equi = False
    if dt is not None and dt[0] == "A":
        path = type_a_path(q)
        pos = {v: i for i, v in enumerate(path)}
        equi = all(pos[a.target] == pos[a.source] + 1 for a in q.arrows)
    return QuiverClass(connected, acyclic, tree, dt, equi)


# --- standard quivers ------------------------------------------------------------


def linear_quiver(n: int, reverse: bool = False) -> Quiver:
    """Equioriented A_n: 1 -> 2 -> ... -> n (or the reverse)."""
    verts = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(1, n):
        s, t = (i, i + 1) if not reverse else (i + 1, i)
        arrows.append(("a%d" % i, str(s), str(t)))
    return Quiver(verts, arrows)


def dynkin_edges(letter: str, n: int) -> list:
    letter = letter.upper()
    if letter == "A" and n >= 1:
        return [(i, i + 1) for i in range(1, n)]
    if letter == "D" and n >= 4:
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if letter == "E" and n in (6, 7, 8):
        return [(i, i + 1) for i in range(1, n - 1)] + [(3, n)]
    raise InputError("no Dynkin diagram %s%d" % (letter, n))


def dynkin_quiver(letter: str, n: int, orientation: Sequence[bool] | None = None) -> Quiver:
    """A quiver on the Dynkin diagram; ``orientation[k]`` flips the k-th edge.

    By default each edge ``(i, j)`` with ``i < j`` is oriented ``i -> j``.
    """
    edges = dynkin_edges(letter, n)
    orientation = orientation or [False] * len(edges)
    arrows = []
    for k, ((i, j), flip) in enumerate(zip(edges, orientation)):
        s, t = (j, i) if flip else (i, j)
        arrows.append(("a%d" % (k + 1), str(s), str(t)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows)


def kronecker_quiver() -> Quiver:
    return Quiver(["1", "2"], [("alpha", "1", "2"), ("beta", "1", "2")])


def loop_quiver(loops: int = 2) -> Quiver:
    names = ["alpha", "beta", "gamma", "delta"]
    return Quiver(["1"], [(names[k] if k < len(names) else "l%d" % k, "1", "1") for k in range(loops)])


# --- representations -----------------------------------------------------------


def _freeze(mat):
    return tuple(tuple(row) for row in mat)


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple
    maps: tuple
    field: Field = dc_field(default=QQ, compare=True)

    def __init__(self, quiver: Quiver, dims, maps, field: Field = QQ):
        dims = check_dims(quiver, dims)
        if isinstance(maps, dict):
            missing = [a.name for a in quiver.arrows if a.name not in maps]
            if missing:
                raise InputError("no matrix given for arrow %r" % missing[0])
            extra = set(maps) - {a.name for a in quiver.arrows}
            if extra:
                raise InputError("matrix given for unknown arrow %r" % sorted(extra)[0])
            maps = [maps[a.name] for a in quiver.arrows]
        maps = list(maps)
        if len(maps) != len(quiver.arrows):
            raise InputError("expected %d arrow matrices, got %d" % (len(quiver.arrows), len(maps)))
        frozen = []
        for k, mat in enumerate(maps):
            s, t = quiver.ends(k)
            rows = len(mat)
            if rows != dims[t] or any(len(r) != dims[s] for r in mat):
                cols = len(mat[0]) if rows else 0
                raise InputError(
                    "matrix for arrow %r has shape %dx%d, expected %dx%d"
                    % (quiver.arrows[k].name, rows, cols, dims[t], dims[s])
                )
            frozen.append(_freeze([[field(x) for x in row] for row in mat]))
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(frozen))
        object.__setattr__(self, "field", field)

    def map(self, arrow: str):
        return self.maps[self.quiver.arrow_index(arrow)]

    @property
    def dim_vector(self) -> tuple:
        return self.dims

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return all(not x for mat in self.maps for row in mat for x in row)

    @classmethod
    def zero(cls, quiver: Quiver, dims, field: Field = QQ) -> "Representation":
        dims = check_dims(quiver, dims)
        maps = []
        for k in range(len(quiver.arrows)):
            s, t = quiver.ends(k)
            maps.append(linalg.zeros(dims[t], dims[s], field))
        return cls(quiver, dims, maps, field)

    @classmethod
    def simple(cls, quiver: Quiver, vertex: str, field: Field = QQ) -> "Representation":
        dims = [0] * quiver.n
        dims[quiver.index(vertex)] = 1
        return cls.zero(quiver, dims, field)


def scale_representation(m: Representation, lam) -> Representation:
    """The point ``lam * m``: every arrow matrix multiplied by ``lam``."""
    lam = m.field(lam)
    return Representation(m.quiver, m.dims, [[[lam * x for x in row] for row in mat] for mat in m.maps], m.field)


def change_field(m: Representation, field: Field) -> Representation:
    return Representation(m.quiver, m.dims, [[[field(x) for x in row] for row in mat] for mat in m.maps], field)


def conjugate(m: Representation, g) -> Representation:
    """Act by ``g = (g_i)``: each arrow ``i -> j`` becomes ``g_j f g_i^{-1}``."""
    F = m.field
    if len(g) != m.quiver.n:
        raise InputError("need one matrix per vertex")
    ginv = []
    for i, gi in enumerate(g):
        if len(gi) != m.dims[i]:
            raise InputError("vertex matrix %d has wrong size" % i)
        ginv.append(linalg.inverse(gi, F) if m.dims[i] else [])
    maps = []
    for k, f in enumerate(m.maps):
        s, t = m.quiver.ends(k)
        if not m.dims[s] or not m.dims[t]:
            maps.append(f)
            continue
        maps.append(linalg.matmul(linalg.matmul(g[t], f, F), ginv[s], F))
    return Representation(m.quiver, m.dims, maps, F)


def direct_sum(reps: Sequence[Representation], quiver: Quiver | None = None, field: Field | None = None) -> Representation:
    """Block-diagonal direct sum; an empty sum needs ``quiver``."""
    if not reps:
        if quiver is None:
            raise InputError("empty direct sum needs a quiver")
        return Representation.zero(quiver, [0] * quiver.n, field or QQ)
    q = reps[0].quiver
    F = reps[0].field
    for r in reps:
        if r.quiver != q or r.field != F:
            raise InputError("direct sum of representations over different quivers or fields")
    dims = [sum(r.dims[i] for r in reps) for i in range(q.n)]
    maps = []
    for k in range(len(q.arrows)):
        s, t = q.ends(k)
        big = linalg.zeros(dims[t], dims[s], F)
        ro = co = 0
        for r in reps:
            block = r.maps[k]
            for i, row in enumerate(block):
                for j, x in enumerate(row):
                    big[ro + i][co + j] = x
            ro += r.dims[t]
            co += r.dims[s]
        maps.append(big)
    return Representation(q, dims, maps, F)
