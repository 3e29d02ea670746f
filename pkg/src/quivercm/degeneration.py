"""Degeneration order on the orbits of rep(Q, d) for Dynkin quivers.

``M <=_deg N`` means that N lies in the orbit closure of M. For Dynkin
quivers this coincides with the hom order: ``dim Hom(X, M) <= dim Hom(X, N)``
for every indecomposable X. The generic orbit is therefore the top of the
poset and the semisimple orbit the bottom.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import InputError
from .fields import QQ, Field
from .homology import invariant_report
from .quiver import Quiver, check_dims
from .roots import OrbitLabel, _require_dynkin, enumerate_orbits, label_hom_vector, representation_of


def hom_leq(m_label: OrbitLabel, n_label: OrbitLabel, q: Quiver, field: Field = QQ) -> bool:
    """Whether N is a degeneration of M (hom-order test)."""
    _require_dynkin(q)
    if m_label.dims != n_label.dims:
        raise InputError("labels have different dimension vectors %s, %s" % (m_label.dims, n_label.dims))
    hm = label_hom_vector(q, m_label, field)
    hn = label_hom_vector(q, n_label, field)
    return all(a <= b for a, b in zip(hm, hn))


@dataclass(frozen=True)
class Annotation:
    orbit_dim: int
    pd_formula: int
    ext1_dim: int
    end_dim: int
    open: bool
    closed: bool


@dataclass(frozen=True)
class DegenerationPoset:
    quiver: Quiver
    dims: tuple
    labels: tuple
    leq: tuple  # leq[i][j]: labels[j] is a degeneration of labels[i]
    covers: tuple  # Hasse edges (i, j), labels[j] covers-below labels[i]
    annotations: tuple

    def __len__(self):
        return len(self.labels)

    def up_set(self, i: int) -> list:
        """Indices of all degenerations of ``labels[i]`` (itself included)."""
        return [j for j in range(len(self.labels)) if self.leq[i][j]]

    def top(self) -> list:
        return [i for i in range(len(self)) if all(self.leq[i][j] for j in range(len(self)))]

    def bottom(self) -> list:
        return [j for j in range(len(self)) if all(self.leq[i][j] for i in range(len(self)))]

    def as_dict(self) -> dict:
        return {
            "quiver": {"vertices": list(self.quiver.vertices), "arrows": [list(a) for a in self.quiver.arrows]},
            "dim": list(self.dims),
            "labels": [
                {
                    "id": i,
                    "roots": [[list(r), m] for r, m in lab.parts],
                    "orbit_dim": a.orbit_dim,
                    "pd_formula": a.pd_formula,
                    "ext1_dim": a.ext1_dim,
                    "end_dim": a.end_dim,
                    "open": a.open,
                    "closed": a.closed,
                }
                for i, (lab, a) in enumerate(zip(self.labels, self.annotations))
            ],
            "leq": [[i, j] for i in range(len(self)) for j in range(len(self)) if self.leq[i][j]],
            "covers": [list(e) for e in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def transitive_reduction(leq) -> list:
    """Cover relations of a finite partial order given as a boolean matrix."""
    n = len(leq)
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k != i and k != j and leq[i][k] and leq[k][j] for k in range(n)):
                covers.append((i, j))
    return covers


def degeneration_poset(q: Quiver, d, field: Field = QQ) -> DegenerationPoset:
    _require_dynkin(q)
    d = check_dims(q, d)
    labels = enumerate_orbits(q, d)
    vecs = [label_hom_vector(q, lab, field) for lab in labels]
    n = len(labels)
    leq = tuple(tuple(all(a <= b for a, b in zip(vecs[i], vecs[j])) for j in range(n)) for i in range(n))
    notes = []
    for lab in labels:
        rep = invariant_report(representation_of(q, lab, field))
        notes.append(Annotation(rep.orbit_dim, rep.pd_formula, rep.ext1_dim, rep.end_dim, rep.orbit_open, rep.orbit_closed))
    return DegenerationPoset(q, d, tuple(labels), leq, tuple(transitive_reduction(leq)), tuple(notes))


@dataclass(frozen=True)
class Corollary1Report:
    minimality_violations: tuple  # (i, j): pd(labels[j]) < pd(labels[i]) although labels[j] degenerates from labels[i]
    closed_criterion_violations: tuple  # i where "closed" and "pd constant on up-set" disagree
    closed_labels: tuple
    constant_pd_labels: tuple

    @property
    def ok(self) -> bool:
        return not self.minimality_violations and not self.closed_criterion_violations

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "minimality_violations": [list(v) for v in self.minimality_violations],
            "closed_criterion_violations": list(self.closed_criterion_violations),
            "closed_labels": list(self.closed_labels),
            "constant_pd_labels": list(self.constant_pd_labels),
        }


def corollary1_check(p: DegenerationPoset) -> Corollary1Report:
    """Check pd minimality over degenerations and the closed-orbit criterion.

    For every label M, the pd value of M must be the minimum over all N with
    ``M <=_deg N``; and M is closed exactly when pd is constant on that set.
    """
    minimality = []
    closed_bad = []
    closed = []
    constant = []
    for i, note in enumerate(p.annotations):
        up = p.up_set(i)
        values = [p.annotations[j].pd_formula for j in up]
        for j in up:
            if p.annotations[j].pd_formula < note.pd_formula:
                minimality.append((i, j))
        is_constant = all(v == note.pd_formula for v in values)
        if note.closed:
            closed.append(i)
        if is_constant:
            constant.append(i)
        if note.closed != is_constant:
            closed_bad.append(i)
    return Corollary1Report(tuple(minimality), tuple(closed_bad), tuple(closed), tuple(constant))


def export_dot(p: DegenerationPoset) -> str:
    """Hasse diagram as a DOT digraph; edges point from M down to its covers."""
    lines = ["digraph degenerations {", "  rankdir=TB;"]
    for i, (lab, a) in enumerate(zip(p.labels, p.annotations)):
        text = "%s\\ndim O = %d, pd = %d" % (lab, a.orbit_dim, a.pd_formula)
        lines.append('  n%d [label="%s"];' % (i, text))
    for i, j in p.covers:
        lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
