"""Line-based text formats for quivers and representations.

Quiver file::

    # comment
    vertex 1
    vertex 2
    arrow a: 1 -> 2

Representation file::

    field Q            # or F<p>
    dim 1 2
    dim 2 2
    map a 2 2
    1 0
    0 0

A representation file may also carry its own ``vertex``/``arrow`` lines, in
which case it can be read without a separate quiver file.
"""

from __future__ import annotations

import re

from .errors import InputError
from .fields import Field, field_from_name
from .quiver import Quiver, Representation

_ARROW_RE = re.compile(r"^arrow\s+([^\s:]+)\s*:\s*(\S+)\s*->\s*(\S+)$")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _quiver_line(lineno, line, vertices, arrows) -> bool:
    if line.startswith("vertex"):
        parts = line.split()
        if len(parts) != 2 or parts[0] != "vertex":
            raise InputError("line %d: expected 'vertex <id>'" % lineno)
        if parts[1] in vertices:
            raise InputError("line %d: duplicate vertex identifier %r" % (lineno, parts[1]))
        vertices.append(parts[1])
        return True
    if line.startswith("arrow"):
        m = _ARROW_RE.match(line)
        if not m:
            raise InputError("line %d: expected 'arrow <id>: <src> -> <tgt>'" % lineno)
        name, s, t = m.groups()
        if any(a[0] == name for a in arrows):
            raise InputError("line %d: duplicate arrow identifier %r" % (lineno, name))
        for end in (s, t):
            if end not in vertices:
                raise InputError("line %d: arrow %r references unknown vertex %r" % (lineno, name, end))
        arrows.append((name, s, t))
        return True
    return False


def parse_quiver(text: str) -> Quiver:
    vertices, arrows = [], []
    for lineno, line in _lines(text):
        if not _quiver_line(lineno, line, vertices, arrows):
            raise InputError("line %d: unrecognised line %r" % (lineno, line))
    return Quiver(vertices, arrows)


def serialize_quiver(q: Quiver) -> str:
    out = ["vertex %s" % v for v in q.vertices]
    out += ["arrow %s: %s -> %s" % a for a in q.arrows]
    return "\n".join(out) + "\n"


def parse_representation(text: str, q: Quiver | None = None, field: Field | None = None) -> Representation:
    """Read a representation; ``field`` overrides the file's declaration.

    An override is accepted only when every entry is an integer, so that the
    file means the same thing in both fields.
    """
    vertices, arrows = [], []
    declared = None
    dims = {}
    maps = {}
    lines = list(_lines(text))
    pos = 0
    all_integral = True
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        if _quiver_line(lineno, line, vertices, arrows):
            continue
        parts = line.split()
        head = parts[0]
        if head == "field":
            if len(parts) != 2:
                raise InputError("line %d: expected 'field Q' or 'field F<p>'" % lineno)
            try:
                declared = field_from_name(parts[1])
            except InputError as exc:
                raise InputError("line %d: %s" % (lineno, exc)) from None
        elif head == "dim":
            if len(parts) != 3 or not re.match(r"^\d+$", parts[2]):
                raise InputError("line %d: expected 'dim <vertex> <n>'" % lineno)
            if parts[1] in dims:
                raise InputError("line %d: dimension of vertex %r given twice" % (lineno, parts[1]))
            dims[parts[1]] = int(parts[2])
        elif head == "map":
            if len(parts) != 4 or not (parts[2].isdigit() and parts[3].isdigit()):
                raise InputError("line %d: expected 'map <arrow> <rows> <cols>'" % lineno)
            if declared is None and field is None:
                raise InputError("line %d: 'field' declaration must precede the first map" % lineno)
            name, rows, cols = parts[1], int(parts[2]), int(parts[3])
            if name in maps:
                raise InputError("line %d: matrix for arrow %r given twice" % (lineno, name))
            mat = []
            for _ in range(rows if cols else 0):
                if pos >= len(lines):
                    raise InputError("line %d: matrix for arrow %r ends early" % (lineno, name))
                rlineno, rline = lines[pos]
                pos += 1
                tokens = rline.split()
                if len(tokens) != cols:
                    raise InputError("line %d: expected %d entries, found %d" % (rlineno, cols, len(tokens)))
                mat.append((rlineno, tokens))
            if not cols:
                mat = [(lineno, [])] * rows
            maps[name] = (lineno, rows, cols, mat)
        else:
            raise InputError("line %d: unrecognised line %r" % (lineno, line))
    if declared is None and field is None:
        raise InputError("missing 'field' declaration")

    if vertices:
        embedded = Quiver(vertices, arrows)
        if q is not None and q != embedded:
            raise InputError("embedded quiver differs from the given quiver")
        q = embedded
    if q is None:
        raise InputError("no quiver: pass a quiver file or embed vertex/arrow lines")

    F = field or declared
    entries = {}
    for name, (lineno, rows, cols, mat) in maps.items():
        converted = []
        for rlineno, tokens in mat:
            row = []
            for tok in tokens:
                if "/" in tok:
                    all_integral = False
                try:
                    row.append(F.parse(tok))
                except InputError as exc:
                    raise InputError("line %d: %s" % (rlineno, exc)) from None
            converted.append(row)
        entries[name] = (lineno, rows, cols, converted)
    if field is not None and declared is not None and field != declared and not all_integral:
        raise InputError("cannot reinterpret non-integer entries over %s" % field.name)

    for v in dims:
        if v not in q.vertices:
            raise InputError("dimension given for unknown vertex %r" % v)
    missing = [v for v in q.vertices if v not in dims]
    if missing:
        raise InputError("no dimension given for vertex %r" % missing[0])
    dvec = [dims[v] for v in q.vertices]
    matrices = {}
    for k, a in enumerate(q.arrows):
        s, t = q.ends(k)
        if a.name not in entries:
            if dvec[s] and dvec[t]:
                raise InputError("missing matrix for arrow %r" % a.name)
            matrices[a.name] = [[] for _ in range(dvec[t])]
            continue
        lineno, rows, cols, mat = entries[a.name]
        if (rows, cols) != (dvec[t], dvec[s]):
            raise InputError(
                "line %d: arrow %r needs a %dx%d matrix, declared %dx%d" % (lineno, a.name, dvec[t], dvec[s], rows, cols)
            )
        matrices[a.name] = mat if rows else [[] for _ in range(rows)]
    for name in entries:
        if name not in matrices:
            raise InputError("line %d: matrix for unknown arrow %r" % (entries[name][0], name))
    return Representation(q, dvec, matrices, F)


def serialize_representation(m: Representation, include_quiver: bool = False) -> str:
    out = []
    if include_quiver:
        out.append(serialize_quiver(m.quiver).rstrip("\n"))
    out.append("field %s" % m.field.name)
    for v, d in zip(m.quiver.vertices, m.dims):
        out.append("dim %s %d" % (v, d))
    for k, a in enumerate(m.quiver.arrows):
        s, t = m.quiver.ends(k)
        out.append("map %s %d %d" % (a.name, m.dims[t], m.dims[s]))
        for row in m.maps[k] if m.dims[s] else ():
            out.append(" ".join(m.field.format(x) for x in row))
    return "\n".join(out) + "\n"
