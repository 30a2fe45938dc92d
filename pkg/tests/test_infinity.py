import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import elements, random_element
from triad import ordinal as o
from triad.errors import DomainError
from triad.grammar import parse_element as E
from triad.ideals import IdealHandle, membership
from triad.infinity import (Mixed, PrefixElement, TailKind, Tail, Whole, Zero, bracket_prefix,
                            classify_closed_open, classify_generated, exponential_series,
                            from_handle, inf_compare, inf_contains, iso_factors_inf, tail,
                            to_handle, udim_inf, non_nilpotence_witness)
from triad.iso import iso_factors
from triad.lie import Element, bracket, canonical_basis
from triad.oracles import ideal_closure_window
from triad.polynomial import Polynomial, unit

W = o.OMEGA


def chain_sample():
    out = [Whole(), Zero()]
    for n in (2, 3, 4):
        out.append(Tail(n))
        for lam in (o.ONE, o.Ordinal.of(3), W, W + 2, o.omega_pow(2)):
            if lam < o.omega_pow(n - 1):
                out.append(Mixed(n, lam))
    return out


def test_compare_examples():
    # u_(oo,2) holds every level-2 term, so it contains I_(5,2) + u_(oo,3)
    assert inf_compare(Tail(2), Mixed(2, o.Ordinal.of(5))) == 1
    assert inf_compare(Mixed(2, o.Ordinal.of(5)), Tail(3)) == 1
    assert inf_compare(Mixed(3, W), Mixed(3, o.Ordinal.of(2))) == 1
    assert inf_compare(Zero(), Tail(9)) == -1
    assert tail(1) == Whole()
    with pytest.raises(DomainError):
        Mixed(2, W)


def test_compare_matches_inclusion():
    # a <= b iff every probe element of a lies in b
    probes = [Element.basis(b.alpha, b.slot, 5) for b in canonical_basis(5, 4)]
    sample = chain_sample()
    for a in sample:
        for b in sample:
            included = all(inf_contains(b, u) for u in probes if inf_contains(a, u))
            if inf_compare(a, b) <= 0:
                assert included, (a, b)
            else:
                assert not included, (a, b)


def test_compare_total_order():
    s = sorted(chain_sample(), key=lambda x: [inf_compare(x, y) for y in chain_sample()])
    for a, b in zip(s, s[1:]):
        assert inf_compare(a, b) == -1 and inf_compare(b, a) == 1


def test_classify_examples():
    assert classify_generated(E("d2")) == Mixed(2, o.ONE)
    assert classify_generated(E("d1")) == Whole()
    assert classify_generated(Element.zero(3)) == Zero()
    assert str(classify_generated(E("d2"))) == "I[1]@2+U[oo,3]"


def test_classify_proof_trace():
    # windowed ideal closure inside u4 against the claimed normal form
    probes = [Element.basis(c.alpha, c.slot, 4) for c in canonical_basis(4, 3)]
    for b in canonical_basis(3, 2):
        u = Element.basis(b.alpha, b.slot, 3)
        cls = classify_generated(u)
        span = ideal_closure_window([u.with_rank(4)], 3)
        for p in probes:
            assert span.contains(p.terms) == inf_contains(cls, p), (u, cls, p)
    # [a, x_l d_(m+1)] = d_(m+1) for a = d_l + ...
    a = E("d2 + x1 d3", 4)
    assert bracket(a, E("x2 d4", 4)) == E("d4")


@given(elements(3), elements(3))
def test_classify_monotone(u, v):
    if not u or not v or u.max_slot() != v.max_slot():
        return
    from triad.lie import ord_element
    if ord_element(u.with_rank(max(2, u.max_slot()))) <= ord_element(v.with_rank(max(2, v.max_slot()))):
        assert inf_compare(classify_generated(u), classify_generated(v)) <= 0


def test_handle_round_trip():
    for a in chain_sample():
        if isinstance(a, Zero):
            continue
        for m in range(max(2, 4), 6):
            assert from_handle(to_handle(a, m)) == a


def test_iso_inf_examples():
    assert iso_factors_inf(Zero(), Zero())
    assert not iso_factors_inf(Zero(), Mixed(2, o.ONE))
    assert not iso_factors_inf(Mixed(3, o.ONE), Mixed(3, o.Ordinal.of(2)))
    for a in chain_sample():
        assert iso_factors_inf(a, Zero()) == isinstance(a, Zero)


def test_factor_compatibility():
    # truncation to level n is a homomorphism, and I_(lam,n) is the preimage of I_lam
    rng = random.Random(4)
    for n in (2, 3):
        for lam in (o.ONE, o.Ordinal.of(2), W):
            if lam >= o.omega_pow(n - 1):
                continue
            ideal = Mixed(n, lam)
            for _ in range(30):
                u, v = random_element(rng, n + 2, 2), random_element(rng, n + 2, 2)
                cut = lambda x: Element({b: c for b, c in x if b.slot <= n}, n)
                assert cut(bracket(u, v)) == bracket(cut(u), cut(v))
                assert inf_contains(ideal, u) == membership(cut(u), IdealHandle(n, lam))
            assert iso_factors(to_handle(ideal, n), IdealHandle(n, lam))


def test_udim_and_topology():
    assert udim_inf() == o.TOP
    assert all(o.compare(udim_inf(), o.stack(n)) == 1 for n in range(2, 10))
    assert o.compare(udim_inf(), udim_inf()) == 0
    assert classify_closed_open(Zero()) == (False, True)
    assert classify_closed_open(Tail(5)) == (True, True)
    assert classify_closed_open(Mixed(3, W)) == (True, True)
    assert classify_closed_open(Whole()) == (True, True)


def _series(n_max):
    comps = {m: Polynomial.monomial(unit(1, m), Fraction(1, factorial(m))) for m in range(2, n_max + 1)}
    return PrefixElement.from_levels(comps, n_max)


def test_bracket_prefix_examples():
    d1 = PrefixElement.from_element(E("d1"))
    N = 7
    b = bracket_prefix(d1, _series(N))
    expected = {m: Polynomial.monomial(unit(1, m - 1), Fraction(1, factorial(m - 1))) for m in range(2, N + 1)}
    assert dict(b.components) == expected
    assert b.known_to == N and b.tail is TailKind.UNKNOWN
    a = PrefixElement.from_element(E("x1 d2 + x2^2 d3"))
    assert bracket_prefix(a, a).is_zero_to_reach()


def test_bracket_prefix_matches_lie_exhaustively():
    basis = canonical_basis(4, 3)
    els = [Element.basis(b.alpha, b.slot, 4) for b in basis]
    for u in els:
        pu = PrefixElement.from_element(u)
        for v in els:
            got = bracket_prefix(pu, PrefixElement.from_element(v))
            assert got.tail is TailKind.ZERO
            assert got.to_element(4) == bracket(u, v)


@given(elements(4, 2), elements(4, 2), st.integers(4, 6))
def test_validity_levels_are_stable(u, v, extra):
    a = PrefixElement.from_element(u).truncate(4)
    b = PrefixElement.from_element(v).truncate(4)
    short = bracket_prefix(a, b)
    long = bracket_prefix(PrefixElement.from_element(u).truncate(4 + extra),
                          PrefixElement.from_element(v).truncate(4 + extra))
    for k in range(1, short.known_to + 1):
        assert short.component(k) == long.component(k)


def test_derived_levels():
    d1 = PrefixElement.from_element(E("d1"))
    for depth in (4, 6):
        b = bracket_prefix(d1, exponential_series(1, depth))
        assert 1 not in b.components


def test_witness_examples():
    steps = non_nilpotence_witness(PrefixElement.from_element(E("d1")), 3)
    assert len(steps) == 3 and all(not s.is_zero_to_reach() for s in steps)
    steps = non_nilpotence_witness(PrefixElement.from_element(E("x1 d2")), 2)
    for i, s in enumerate(steps, start=1):
        lead = s.component(s.minimal_level())
        assert lead == Polynomial.monomial(unit(1, i))
    with pytest.raises(DomainError):
        non_nilpotence_witness(PrefixElement.from_element(Element.zero(2)), 3)
    with pytest.raises(DomainError):
        non_nilpotence_witness(PrefixElement.from_levels({2: Polynomial.var(1)}, 3), 3)


@given(elements(3, 2))
def test_witness_for_random_elements(u):
    if not u:
        return
    steps = non_nilpotence_witness(PrefixElement.from_element(u), 3)
    assert all(not s.is_zero_to_reach() for s in steps)


def test_centre_is_zero():
    partners = [Element.basis(b.alpha, b.slot, 5) for b in canonical_basis(5, 1)]
    for b in canonical_basis(4, 3):
        z = Element.basis(b.alpha, b.slot, 5)
        assert any(bracket(z, p) for p in partners), b


def test_prefix_validation():
    with pytest.raises(DomainError):
        PrefixElement({1: Polynomial.var(1)}, 2)
    with pytest.raises(DomainError):
        PrefixElement({3: Polynomial.var(1)}, 2)
    p = PrefixElement.from_element(E("x1 d2"))
    assert p.to_json() == {"components": {"2": "x1"}, "known_to": 2, "tail": "zero"}
