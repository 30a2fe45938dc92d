import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import elements
from triad.errors import DomainError, RankMismatch
from triad.grammar import parse_element as E
from triad.grammar import parse_weyl
from triad.lie import Element, bracket
from triad.oracles import probe_polynomials, weyl_by_action
from triad.polynomial import mdeg, multidegrees, unit
from triad.weyl import (NOT_IN_SPAN, WeylElement, WPrime, chi, express_in_Wprime, in_Wn_span,
                        kernel_generator_check, prec, products_span, weyl_act, weyl_mul,
                        wprime_basis)


def A(text, rank):
    return parse_weyl(text, rank)


def random_weyl(rng, n, degree, terms=3):
    mons = [(a, b) for a in multidegrees(n, degree) for b in multidegrees(n, degree) if sum(a) + sum(b) <= degree]
    return WeylElement({rng.choice(mons): rng.randint(-3, 3) for _ in range(terms)}, n)


def test_weyl_mul_examples():
    assert weyl_mul(A("d1", 1), A("x1", 1)) == A("x1 d1 + 1", 1)
    assert weyl_mul(A("d1^2", 1), A("x1^2", 1)) == A("x1^2 d1^2 + 4 x1 d1 + 2", 1)
    assert weyl_mul(A("x1 d2", 2), A("x1 d2", 2)) == A("x1^2 d2^2", 2)
    with pytest.raises(RankMismatch):
        weyl_mul(A("d1", 1), A("d1", 2))


def test_chi_examples():
    assert chi(E("x1^2 d3")) == A("x1^2 d3", 3)
    assert chi(Element.zero(2)) == WeylElement({}, 2)
    assert chi(E("2 x1 d2 - d1")) == A("2 x1 d2 - d1", 2)


def test_prec_examples():
    assert prec((), (0, 3))
    assert prec((1,), (0, 1))
    assert not prec((0, 1), (1,))
    assert not prec((1,), (1,))


def test_in_image_examples():
    assert in_Wn_span(A("x1^2 d2^2", 2))
    assert not in_Wn_span(A("x1 d1", 1))


def test_products_of_chi_images_stay_in_image():
    rng = random.Random(7)
    for _ in range(20):
        n = 3
        u = Element.basis(*_rand_basis(rng, n), rank=n)
        v = Element.basis(*_rand_basis(rng, n), rank=n)
        assert in_Wn_span(weyl_mul(chi(u), chi(v)))


def _rand_basis(rng, n):
    slot = rng.randint(1, n)
    alpha = rng.choice(list(multidegrees(slot - 1, 2)))
    return alpha, slot


def test_kernel_generator_examples():
    assert kernel_generator_check((1,), 2, (1,), 2, 2)
    assert kernel_generator_check((), 1, (2,), 2)
    assert kernel_generator_check((1,), 2, (0, 1), 3)
    with pytest.raises(DomainError):
        kernel_generator_check((), 3, (), 2)


def test_kernel_generators_exhaustive():
    for j in range(1, 5):
        for i in range(1, j + 1):
            for alpha in multidegrees(i - 1, 3):
                for beta in multidegrees(j - 1, 3):
                    assert kernel_generator_check(alpha, i, beta, j, 4)


def test_express_examples():
    assert express_in_Wprime(A("d1 d2", 2)) == {WPrime(mdeg([1, 1])): 1}
    assert express_in_Wprime(A("x1 d2", 2)) == {WPrime((), (1,), 2, 1): 1}
    assert express_in_Wprime(A("x1 d1", 2)) is NOT_IN_SPAN


def test_wprime_elements_lie_in_image():
    for w in wprime_basis(3, 3):
        assert in_Wn_span(w.element(3))


def test_non_finite_generation_chain():
    # x1^(i-1) d2 is not a polynomial in the x1^j d2 with j < i-1
    for i in range(2, 7):
        gens = [A(f"x1^{j} d2" if j else "d2", 2) for j in range(i - 1)]
        span = products_span(gens, i + 1)
        assert not span.contains(A(f"x1^{i - 1} d2", 2).terms)


def test_weyl_mul_matches_action_seeded():
    rng = random.Random(500)
    for k in range(500):
        n = 1 + k % 3
        a, b = random_weyl(rng, n, 4), random_weyl(rng, n, 4)
        probes = probe_polynomials(n, 6 if n < 3 else 5)
        ab = weyl_mul(a, b)
        assert [weyl_act(ab, p) for p in probes] == weyl_by_action(a, b, probes)


def test_weyl_associativity_seeded():
    rng = random.Random(9)
    for _ in range(60):
        a, b, c = (random_weyl(rng, 2, 3) for _ in range(3))
        assert weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c))


@given(elements(3, 2), elements(3, 2))
def test_chi_is_lie_homomorphism(u, v):
    lhs = weyl_mul(chi(u), chi(v)) - weyl_mul(chi(v), chi(u))
    assert lhs == chi(bracket(u, v))


@given(st.lists(st.tuples(st.integers(1, 3), st.integers(0, 2), st.integers(0, 2)), min_size=2, max_size=4))
def test_image_closed_under_products(factors):
    prod_ = WeylElement.one(3)
    for slot, e1, e2 in factors:
        alpha = mdeg([e1, e2][:slot - 1])
        prod_ = weyl_mul(prod_, chi(Element.basis(alpha, slot, 3)))
    assert in_Wn_span(prod_)


def test_non_surjectivity_witness():
    x1d1 = WeylElement.monomial(unit(1), unit(1), 2)
    assert not in_Wn_span(x1d1)
    assert x1d1  # it is a genuine element of the Weyl algebra


def test_weyl_rank_validation():
    with pytest.raises(DomainError):
        WeylElement.monomial((0, 0, 1), (), 2)
    for alpha, beta in product([(), (1,)], repeat=2):
        assert str(WeylElement.monomial(alpha, beta, 1)) in {"1", "x1", "d1", "x1 d1"}
