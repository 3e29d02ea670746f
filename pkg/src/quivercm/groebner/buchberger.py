"""Buchberger's algorithm for ideals and for submodules of free modules.

Module elements are dicts ``{(position, exponents): coefficient}``. Terms are
ordered position-over-term: a smaller position index is larger, and within a
position degrevlex decides. An ideal is the rank-one case (position 0).

Pairs are processed by increasing degree, where a free-module basis vector
may carry a degree shift. For homogeneous input this is the usual
degree-by-degree computation, and an input element that still has a nonzero
normal form when its degree is reached is a minimal generator.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .polynomial import Poly, PolyRing, degrevlex_key, monomial_divides, monomial_lcm, monomial_quotient


def term_key(term) -> tuple:
    pos, exps = term
    return (-pos, degrevlex_key(exps))


def lead(vec: dict):
    return max(vec, key=term_key)


def vec_degree(vec: dict, shifts) -> int:
    return max(sum(e) + (shifts[p] if shifts else 0) for p, e in vec)


def is_homogeneous_vec(vec: dict, shifts) -> bool:
    return len({sum(e) + (shifts[p] if shifts else 0) for p, e in vec}) <= 1


def _mul_term(vec: dict, exps: tuple, coef) -> dict:
    out = {}
    for (p, e), c in vec.items():
        out[(p, tuple(a + b for a, b in zip(e, exps)))] = c * coef
    return out


def _axpy(target: dict, vec: dict, exps: tuple, coef):
    """target -= coef * x^exps * vec, in place."""
    for (p, e), c in vec.items():
        key = (p, tuple(a + b for a, b in zip(e, exps)))
        v = target.get(key)
        v = -coef * c if v is None else v - coef * c
        if v:
            target[key] = v
        else:
            target.pop(key, None)


class _Basis:
    """Growing list of monic basis elements with their leading terms."""

    def __init__(self):
        self.vecs = []
        self.leads = []
        self.by_pos = {}

    def add(self, vec, lt):
        idx = len(self.vecs)
        self.vecs.append(vec)
        self.leads.append(lt)
        self.by_pos.setdefault(lt[0], []).append(idx)
        return idx

    def find_reducer(self, term):
        pos, exps = term
        for idx in self.by_pos.get(pos, ()):
            if monomial_divides(self.leads[idx][1], exps):
                return idx
        return None


def normal_form(vec: dict, basis: _Basis, one) -> dict:
    """Full reduction of ``vec`` modulo the basis elements (all monic)."""
    p = dict(vec)
    rem = {}
    while p:
        lt = lead(p)
        c = p[lt]
        idx = basis.find_reducer(lt)
        if idx is None:
            rem[lt] = c
            del p[lt]
            continue
        g = basis.vecs[idx]
        q = monomial_quotient(lt[1], basis.leads[idx][1])
        _axpy(p, g, q, c)
    return rem


def _monic(vec: dict, one) -> tuple:
    lt = lead(vec)
    inv = one / vec[lt]
    return {t: c * inv for t, c in vec.items()}, lt


@dataclass
class GroebnerRun:
    basis: list  # monic vectors, not inter-reduced
    minimal_inputs: list  # indices of inputs that were not redundant when reached


def groebner_module(inputs, one, shifts=None) -> GroebnerRun:
    """Groebner basis of the submodule generated by ``inputs``.

    ``one`` is the field's unit (it fixes the coefficient type); ``shifts`` are
    the degrees of the free-module basis vectors.
    """
    basis = _Basis()
    pairs = []
    counter = 0
    pending = []
    for i, v in enumerate(inputs):
        if v:
            heapq.heappush(pending, (vec_degree(v, shifts), i))
    minimal = []
    ideal_mode = all(p == 0 for v in inputs for (p, _) in v)

    def pair_degree(i, j):
        pos, _ = basis.leads[i]
        L = monomial_lcm(basis.leads[i][1], basis.leads[j][1])
        return sum(L) + (shifts[pos] if shifts else 0), L

    def insert(vec, lt):
        nonlocal counter, pairs
        h = basis.add(vec, lt)
        pos, hexp = lt
        same = [i for i in basis.by_pos[pos] if i != h]
        # Gebauer-Moeller update
        lcms = {i: monomial_lcm(basis.leads[i][1], hexp) for i in same}
        keep = []
        for i in same:
            Li = lcms[i]
            dominated = False
            for j in same:
                if j == i:
                    continue
                Lj = lcms[j]
                if monomial_divides(Lj, Li) and (Lj != Li or j < i):
                    dominated = True
                    break
            if not dominated:
                keep.append(i)
        survivors = []
        for item in pairs:
            _, _, i, j = item
            if basis.leads[i][0] == pos:
                Lij = monomial_lcm(basis.leads[i][1], basis.leads[j][1])
                if (
                    monomial_divides(hexp, Lij)
                    and monomial_lcm(basis.leads[i][1], hexp) != Lij
                    and monomial_lcm(basis.leads[j][1], hexp) != Lij
                ):
                    continue
            survivors.append(item)
        pairs = survivors
        heapq.heapify(pairs)
        for i in keep:
            # coprime leading monomials: the S-polynomial reduces to zero (ideals only)
            if ideal_mode and all(a * b == 0 for a, b in zip(basis.leads[i][1], hexp)):
                continue
            deg, _ = pair_degree(i, h)
            counter += 1
            heapq.heappush(pairs, (deg, counter, i, h))

    while pairs or pending:
        take_input = pending and (not pairs or pending[0][0] < pairs[0][0])
        if take_input:
            _, i = heapq.heappop(pending)
            h = normal_form(inputs[i], basis, one)
            if h:
                minimal.append(i)
        else:
            _, _, i, j = heapq.heappop(pairs)
            gi, gj = basis.vecs[i], basis.vecs[j]
            L = monomial_lcm(basis.leads[i][1], basis.leads[j][1])
            s = dict(_mul_term(gi, monomial_quotient(L, basis.leads[i][1]), one))
            _axpy(s, gj, monomial_quotient(L, basis.leads[j][1]), one)
            h = normal_form(s, basis, one)
        if h:
            vec, lt = _monic(h, one)
            insert(vec, lt)
    return GroebnerRun(list(basis.vecs), sorted(minimal))


def reduce_basis(vecs, one) -> list:
    """Reduced Groebner basis from any Groebner basis, sorted by leading term."""
    items = []
    for v in vecs:
        if v:
            items.append(_monic(v, one))
    items.sort(key=lambda it: term_key(it[1]))
    kept = []
    for i, (v, lt) in enumerate(items):
        redundant = False
        for j, (w, lt2) in enumerate(items):
            if j == i or lt2[0] != lt[0]:
                continue
            if monomial_divides(lt2[1], lt[1]) and (lt2[1] != lt[1] or j < i):
                redundant = True
                break
        if not redundant:
            kept.append((v, lt))
    out = []
    for i, (v, lt) in enumerate(kept):
        others = _Basis()
        for j, (w, lt2) in enumerate(kept):
            if j != i:
                others.add(w, lt2)
        rest = dict(v)
        del rest[lt]
        nf = normal_form(rest, others, one)
        nf[lt] = one
        out.append(nf)
    out.sort(key=lambda v: term_key(lead(v)), reverse=True)
    return out


def to_vec(p: Poly, pos: int = 0) -> dict:
    return {(pos, e): c for e, c in p.terms.items()}


def from_vec(vec: dict, ring: PolyRing) -> Poly:
    return Poly(ring, {e: c for (_, e), c in vec.items()})


def buchberger(gens, ring: PolyRing) -> list:
    """Reduced Groebner basis (degrevlex) of the ideal generated by ``gens``."""
    one = ring.field.one
    vecs = [to_vec(g) for g in gens if g]
    run = groebner_module(vecs, one, [0])
    return [from_vec(v, ring) for v in reduce_basis(run.basis, one)]


def ideal_normal_form(p: Poly, gb, ring: PolyRing) -> Poly:
    basis = _Basis()
    for g in gb:
        v, lt = _monic(to_vec(g), ring.field.one)
        basis.add(v, lt)
    return from_vec(normal_form(to_vec(p), basis, ring.field.one), ring)


def is_groebner(gb, ring: PolyRing) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    one = ring.field.one
    basis = _Basis()
    for g in gb:
        v, lt = _monic(to_vec(g), one)
        basis.add(v, lt)
    n = len(basis.vecs)
    for i in range(n):
        for j in range(i + 1, n):
            L = monomial_lcm(basis.leads[i][1], basis.leads[j][1])
            s = dict(_mul_term(basis.vecs[i], monomial_quotient(L, basis.leads[i][1]), one))
            _axpy(s, basis.vecs[j], monomial_quotient(L, basis.leads[j][1]), one)
            if normal_form(s, basis, one):
                return False
    return True
