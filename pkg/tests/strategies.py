"""Hypothesis strategies and seeded samplers shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from triad import ordinal as o
from triad.lie import BasisVector, Element
from triad.polynomial import Polynomial, mdeg, multidegrees

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def multidegree(nvars: int, max_total: int):
    if nvars == 0:
        return st.just(())
    return st.lists(st.integers(0, max_total), min_size=nvars, max_size=nvars).filter(
        lambda xs: sum(xs) <= max_total).map(mdeg)


@st.composite
def basis_vectors(draw, n: int, max_degree: int = 3):
    slot = draw(st.integers(1, n))
    return BasisVector(draw(multidegree(slot - 1, max_degree)), slot)


@st.composite
def elements(draw, n: int, max_degree: int = 3, max_terms: int = 4):
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        terms[draw(basis_vectors(n, max_degree))] = draw(coeffs)
    return Element(terms, n)


@st.composite
def polynomials(draw, n: int, max_degree: int = 3, max_terms: int = 4):
    k = draw(st.integers(0, max_terms))
    return Polynomial({draw(multidegree(n, max_degree)): draw(coeffs) for _ in range(k)})


@st.composite
def ordinals(draw, max_exp: int = 3, max_coeff: int = 3):
    return o.Ordinal.from_coeffs({e: draw(st.integers(0, max_coeff)) for e in range(max_exp + 1)})


def random_element(rng: random.Random, n: int, max_degree: int, max_terms: int = 4) -> Element:
    basis = [BasisVector(a, i) for i in range(1, n + 1) for a in multidegrees(i - 1, max_degree)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(basis)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Element(terms, n)


def random_polynomial(rng: random.Random, n: int, max_degree: int, max_terms: int = 4) -> Polynomial:
    mons = list(multidegrees(n, max_degree))
    return Polynomial({rng.choice(mons): rng.randint(-3, 3) for _ in range(rng.randint(1, max_terms))})
