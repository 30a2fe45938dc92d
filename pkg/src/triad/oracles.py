"""Brute-force references used to check the closed-form answers.

Each function here works from definitions only: brackets, actions and
linear algebra inside a finite degree window.  None of them consults the
ordinal formulas they are compared against, except to decide membership in
an ideal I_mu, which is by definition the span of basis vectors of ordinal
degree <= mu.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from . import ordinal as o
from .lie import BasisVector, Element, act, bracket, canonical_basis, ord_basis
from .linalg import Echelon, nullspace
from .polynomial import Polynomial, md_get, multidegrees
from .weyl import WeylElement, weyl_act


# --------------------------------------------------------------------------
# ideals of u_n


def ideal_closure_window(gens: Sequence[Element], window: int) -> Echelon:
    """Span of everything reachable from gens by ad of basis vectors while
    staying inside total degree <= window."""
    n = gens[0].rank
    ops = [Element.basis(b.alpha, b.slot, n) for b in canonical_basis(n, window + 1)]
    span = Echelon()
    queue = [g for g in gens if g and g.degree() <= window and span.add(g.terms)]
    while queue:
        v = queue.pop()
        for x in ops:
            w = bracket(x, v)
            if w and w.degree() <= window and span.add(w.terms):
                queue.append(w)
    return span


def ideal_window_basis(n: int, lam: o.Ordinal, window: int) -> list[BasisVector]:
    """Basis vectors of I_lam (ordinal degree <= lam) with degree <= window."""
    return [b for b in canonical_basis(n, window) if ord_basis(b, n) <= lam]


def same_span(vectors: Iterable, basis: Iterable[BasisVector]) -> bool:
    ea = Echelon()
    for v in vectors:
        ea.add(v)
    eb = Echelon()
    for b in basis:
        eb.add({b: 1})
    return len(ea) == len(eb) and all(eb.contains(r) for r in ea.rows.values())


def _outside(w: Element, n: int, mu: o.Ordinal) -> dict:
    return {b: c for b, c in w if ord_basis(b, n) > mu}


def quotient_centre_window(n: int, mu: o.Ordinal, a_degree: int = 4, b_degree: int | None = None) -> list[dict]:
    """Elements a (degree <= a_degree, outside I_mu) with [a, b] in I_mu for
    every basis vector b of degree <= b_degree, together with I_mu itself:
    the preimage of the centre of u_n / I_mu inside the window.

    A non-central a may only be exposed by a partner of high degree (d_2 is
    central modulo I_(2w+1) in u_3 until x_2^4 d_3 is tried), so by default
    the partner window grows with the coefficients of mu.
    """
    if b_degree is None:
        b_degree = a_degree + sum(c for _, c in mu.terms) + 1
    unknowns = [b for b in canonical_basis(n, a_degree) if ord_basis(b, n) > mu]
    partners = [Element.basis(b.alpha, b.slot, n) for b in canonical_basis(n, b_degree)]
    eqs: dict = {}
    for u in unknowns:
        ue = Element.basis(u.alpha, u.slot, n)
        for pi, p in enumerate(partners):
            for out, c in _outside(bracket(ue, p), n, mu).items():
                eqs.setdefault((pi, out), {})[u] = c
    sols = nullspace(eqs.values(), unknowns)
    inside = [{b: Fraction(1)} for b in canonical_basis(n, a_degree) if ord_basis(b, n) <= mu]
    return inside + sols


def centralizer_window(n: int, lam: o.Ordinal, degree: int = 3) -> list[dict]:
    """{a of degree <= degree : [a, b] = 0 for b in I_lam of degree <= degree}."""
    unknowns = canonical_basis(n, degree)
    members = [Element.basis(b.alpha, b.slot, n) for b in ideal_window_basis(n, lam, degree)]
    eqs: dict = {}
    for u in unknowns:
        ue = Element.basis(u.alpha, u.slot, n)
        for mi, m in enumerate(members):
            for out, c in bracket(ue, m):
                eqs.setdefault((mi, out), {})[u] = c
    return nullspace(eqs.values(), unknowns)


# --------------------------------------------------------------------------
# the module P_n


def _mono_rank(a, n: int) -> tuple:
    """Reverse-lexicographic comparison key, highest variable first."""
    return tuple(md_get(a, k) for k in range(n, 0, -1))


def initial_segment(n: int, lead, window: int) -> list:
    """Monomials of degree <= window that come strictly before x^lead.

    With P_lam spanned by the monomials before the one read off from lam,
    this gives P_lam inside the window without going through ordinals.
    """
    key = _mono_rank(lead, n)
    return [a for a in multidegrees(n, window) if _mono_rank(a, n) < key]


def p_prime_window(n: int, members: set, window: int) -> list:
    """Monomials outside P (given as a set) all of whose partials lie in P."""
    out = []
    for a in multidegrees(n, window):
        if a in members:
            continue
        ok = True
        for i in range(1, n + 1):
            e = md_get(a, i)
            if e and _shift(a, i, -1) not in members:
                ok = False
                break
        if ok:
            out.append(a)
    return out


def p_doubleprime_window(n: int, members: set, window: int, mult_degree: int) -> list:
    """Monomials x^b outside P with x^g * d(x^b)/dx_i in P for all monomials
    x^g in x_1..x_(i-1) of degree <= mult_degree."""
    out = []
    for a in multidegrees(n, window):
        if a in members:
            continue
        ok = True
        for i in range(1, n + 1):
            if not md_get(a, i):
                continue
            d = _shift(a, i, -1)
            for g in multidegrees(i - 1, mult_degree):
                if _mul(d, g) not in members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(a)
    return out


def _shift(a, i: int, by: int):
    v = [md_get(a, k) for k in range(1, max(len(a), i) + 1)]
    v[i - 1] += by
    while v and not v[-1]:
        v.pop()
    return tuple(v)


def _mul(a, b):
    m = max(len(a), len(b))
    v = [md_get(a, k) + md_get(b, k) for k in range(1, m + 1)]
    while v and not v[-1]:
        v.pop()
    return tuple(v)


def annihilator_window(n: int, members: Iterable, degree: int = 3) -> list[dict]:
    """{a in u_n of degree <= degree : a * x^b = 0 for the listed monomials}."""
    unknowns = canonical_basis(n, degree)
    mons = list(members)
    eqs: dict = {}
    for u in unknowns:
        ue = Element.basis(u.alpha, u.slot, n)
        for mi, m in enumerate(mons):
            for out, c in act(ue, Polynomial.monomial(m)):
                eqs.setdefault((mi, out), {})[u] = c
    return nullspace(eqs.values(), unknowns)


def linear_kernel_window(fn, n: int, window: int) -> list[dict]:
    """Kernel of a linear map on polynomials restricted to degree <= window."""
    mons = list(multidegrees(n, window))
    eqs: dict = {}
    for a in mons:
        for out, c in fn(Polynomial.monomial(a)):
            eqs.setdefault(out, {})[a] = c
    return nullspace(eqs.values(), mons)


# --------------------------------------------------------------------------
# Weyl algebra


def weyl_by_action(a: WeylElement, b: WeylElement, probes: Sequence[Polynomial]) -> list[Polynomial]:
    """(a b)(p) computed as a(b(p)) for each probe polynomial."""
    return [weyl_act(a, weyl_act(b, p)) for p in probes]


def probe_polynomials(n: int, degree: int) -> list[Polynomial]:
    """Every monomial up to the given degree: enough to separate operators of
    order <= degree."""
    return [Polynomial.monomial(a) for a in multidegrees(n, degree)]


# --------------------------------------------------------------------------
# isomorphism clauses, generated from the case lists


def _nus(k: int, bound: int) -> list[o.Ordinal]:
    """All ordinals below w^k with every CNF coefficient <= bound."""
    out = []
    for cs in product(range(bound + 1), repeat=k):
        out.append(o.Ordinal.from_coeffs({e: c for e, c in enumerate(cs)}))
    return out


def _prefix(n: int, s: int) -> o.Ordinal:
    total = o.ZERO
    for e in range(n - 1, s - 1, -1):
        total = o.add(total, o.omega_pow(e))
    return total


def _plus(*parts: o.Ordinal) -> o.Ordinal:
    total = o.ZERO
    for p in parts:
        total = o.add(total, p)
    return total


def iso_pairs(n: int, m: int, bound: int) -> set[tuple[o.Ordinal, o.Ordinal]]:
    """Pairs (lam, mu) with u_n/I_lam isomorphic to u_m/I_mu, listed clause by
    clause for multipliers i, j <= bound and residues nu with coefficients
    <= bound.  Requires n <= m."""
    assert 2 <= n <= m
    pairs = set()
    head = _prefix(m, n)  # empty when n == m
    for i, j in product(range(bound + 1), repeat=2):
        for nu in _nus(n - 2, bound):
            pairs.add((_plus(o.omega_pow(n - 2, i) if i else o.ZERO, nu),
                       _plus(head, o.omega_pow(n - 2, j) if j else o.ZERO, nu)))
        for s in range(2, n):
            for nu in _nus(s - 2, bound):
                pairs.add((_plus(_prefix(n, s), o.omega_pow(s - 2, i) if i else o.ZERO, nu),
                           _plus(_prefix(m, s), o.omega_pow(s - 2, j) if j else o.ZERO, nu)))
    for eps in (0, 1):
        pairs.add((_plus(_prefix(n, 1), o.Ordinal.of(eps)), _plus(_prefix(m, 1), o.Ordinal.of(eps))))
    return pairs


def iso_by_clauses(n: int, lam: o.Ordinal, m: int, mu: o.Ordinal, table: dict) -> bool:
    """Look (lam, mu) up in the generated clause sets; ``table`` caches them."""
    if n > m:
        n, lam, m, mu = m, mu, n, lam
    key = (n, m)
    if key not in table:
        table[key] = iso_pairs(n, m, 4)
    return (lam, mu) in table[key]


def handle_grid(n: int, bound: int = 3) -> list[o.Ordinal]:
    """prefix + a w^2 + b w + c for every prefix of u_n, kept when <= stack(n)."""
    top = _prefix(n, 0)
    seen = set()
    for s in range(0, n + 1):
        for a, b, c in product(range(bound + 1), repeat=3):
            lam = _plus(_prefix(n, s), o.omega_pow(2, a) if a else o.ZERO,
                        o.omega_pow(1, b) if b else o.ZERO, o.Ordinal.of(c))
            if lam <= top:
                seen.add(lam)
    return sorted(seen)


# --------------------------------------------------------------------------
# nilpotency


def generator_layers(gens: Sequence[Element], cap: int = 50) -> tuple[int, int]:
    """(dimension, nilpotency class) of the subalgebra generated by gens.

    Layer k is spanned by the left-normed brackets [g1, [g2, ... g_k]] of
    generators; the layers together span the subalgebra, and the class is
    the last k whose layer is nonzero.
    """
    rank = gens[0].rank
    total = Echelon()
    layer = Echelon()
    for g in gens:
        if g:
            layer.add(g.terms)
    k = 0
    while len(layer):
        k += 1
        if k > cap:
            raise RuntimeError("layers did not vanish")
        for r in layer.rows.values():
            total.add(r)
        rows = [Element(r, rank) for r in layer.rows.values()]
        layer = Echelon()
        for g in gens:
            for t in rows:
                w = bracket(g, t)
                if w:
                    layer.add(w.terms)
    return len(total), k
