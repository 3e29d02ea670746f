"""Krull dimension and Hilbert series of quotients by monomial ideals.

Both quantities of R/I agree with those of R/in(I), so everything here works
on the leading monomials of a Groebner basis.
"""

from __future__ import annotations

from itertools import combinations

from .polynomial import monomial_divides


def minimalize_monomials(monomials) -> list:
    mons = sorted(set(map(tuple, monomials)), key=lambda m: (sum(m), m))
    out = []
    for m in mons:
        if not any(monomial_divides(g, m) for g in out):
            out.append(m)
    return out


def monomial_dimension(monomials, nvars: int) -> int:
    """Largest set of variables containing the support of no generator."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in minimalize_monomials(monomials)]
    if any(not s for s in supports):
        return -1  # unit ideal: empty quotient
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def hilbert_dimension(gb, ring) -> int:
    """Krull dimension of R/I from a Groebner basis of I."""
    if not gb:
        return ring.nvars
    return monomial_dimension([g.leading_monomial() for g in gb], ring.nvars)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _shift(a, k):
    return [0] * k + list(a) if a else []


def kpolynomial(monomials, nvars: int) -> list:
    """Numerator K(t) of the Hilbert series ``K(t) / (1 - t)^nvars`` of R/(monomials).

    Returned as integer coefficients ``[k_0, k_1, ...]``. Uses the recursion
    ``K(I + (m)) = K(I) - t^deg(m) K(I : m)``.
    """
    gens = minimalize_monomials(monomials)
    return _kpoly(tuple(gens))


def _kpoly(gens):
    if not gens:
        return [1]
    # pairwise coprime generators: product of (1 - t^deg)
    if all(not any(a and b for a, b in zip(g, h)) for i, g in enumerate(gens) for h in gens[i + 1:]):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_sub(out, _shift(out, d))
        return out
    m = gens[-1]
    rest = list(gens[:-1])
    quotient = minimalize_monomials([tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest])
    return _poly_sub(_kpoly(tuple(rest)), _shift(_kpoly(tuple(quotient)), sum(m)))


def hilbert_numerator(gb, ring) -> list:
    if not gb:
        return [1]
    return kpolynomial([g.leading_monomial() for g in gb], ring.nvars)


def dimension_from_kpoly(k, nvars: int) -> int:
    """Pole order at t = 1 of ``K(t) / (1 - t)^nvars``."""
    k = list(k)
    order = 0
    while k and sum(k) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in k[:-1]:
            acc += c
            q.append(acc)
        k = q
        order += 1
    return nvars - order if k else -1


def hilbert_function(gb, ring, degree: int) -> int:
    """Number of standard monomials of the given degree."""
    leads = [g.leading_monomial() for g in gb]
    count = 0

    def rec(i, left, exps):
        nonlocal count
        if i == ring.nvars - 1:
            e = tuple(exps + [left])
            if not any(monomial_divides(m, e) for m in leads):
                count += 1
            return
        for k in range(left, -1, -1):
            rec(i + 1, left - k, exps + [k])

    if ring.nvars == 0:
        return 1 if degree == 0 and not leads else 0
    rec(0, degree, [])
    return count
