"""Shared fixture values and generators for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from ifnorder import (
    DEFAULT_SEQUENCE,
    Ifn,
    Relation,
    c_stream,
    embed_triangular,
    make_trapezoidal,
)


def F(text) -> Fraction:
    return Fraction(str(text))


# Three triangular operands whose first-index scores already rank them.
def triangular_trio() -> tuple[Ifn, Ifn, Ifn]:
    first = embed_triangular(("0.20", "0.30", "0.50"), ("0.35", "0.55", "0.65"))
    second = embed_triangular(("0.17", "0.32", "0.58"), ("0.37", "0.63", "0.73"))
    third = embed_triangular(("0.25", "0.40", "0.70"), ("0.45", "0.75", "0.85"))
    return first, second, third


# A pair tied at the first score and split by the second.
def shoulder_pair() -> tuple[Ifn, Ifn]:
    a = make_trapezoidal(("0.35", "0.35", "0.4", "0.6"), ("0.1", "0.2", "0.3", "0.35"))
    b = make_trapezoidal(("0.35", "0.35", "0.45", "0.55"), ("0", "0.3", "0.3", "0.35"))
    return a, b


# A pair tied through the whole first level, split only at the second level.
def deep_pair() -> tuple[Ifn, Ifn]:
    a = make_trapezoidal(("0.3", "0.35", "0.4", "0.5"), ("0.1", "0.2", "0.25", "0.3"))
    b = make_trapezoidal(("0.35", "0.35", "0.4", "0.55"), ("0", "0.2", "0.25", "0.35"))
    return a, b


# A trapezoid pair with the nonmembership hat left of the membership hat.
def left_nu_sample() -> Ifn:
    return make_trapezoidal(("0.17", "0.3", "0.47", "0.56"), ("0.05", "0.13", "0.16", "0.23"))


# Two triangulars that legacy triangular scores cannot tell apart.
def blurred_triangulars() -> tuple[Ifn, Ifn]:
    m = embed_triangular(("0", "0.2", "0.4"), ("0.4", "0.45", "0.5"))
    n = embed_triangular(("0.25", "0.25", "0.25"), ("0.4", "0.45", "0.5"))
    return m, n


def _leg_ok(mu: tuple[int, ...], nu: tuple[int, ...], den: int) -> bool:
    first = nu[0] >= mu[2] and nu[1] >= mu[3]
    second = nu[2] <= mu[0] and nu[3] <= mu[1]
    if not (first or second):
        return False
    if max(mu[1], nu[1]) <= min(mu[2], nu[2]) and mu[2] + nu[2] > den:
        return False
    return True


def random_trifn(rng: random.Random, den: int = 32) -> Ifn:
    """Uniformly sampled valid IFN with all knots on a 1/den grid."""
    while True:
        mu = tuple(sorted(rng.randrange(den + 1) for _ in range(4)))
        nu = tuple(sorted(rng.randrange(den + 1) for _ in range(4)))
        if _leg_ok(mu, nu, den):
            return make_trapezoidal(
                tuple(Fraction(k, den) for k in mu),
                tuple(Fraction(k, den) for k in nu),
            )


def oracle_compare(a: Ifn, b: Ifn, terms: int = 400) -> Relation:
    """Reference comparator: materialize both score streams, compare the lists."""
    sa = c_stream(a, DEFAULT_SEQUENCE, terms)
    sb = c_stream(b, DEFAULT_SEQUENCE, terms)
    for va, vb in zip(sa, sb):
        if va < vb:
            return Relation.LESS
        if va > vb:
            return Relation.GREATER
    return Relation.EQUIVALENT


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
