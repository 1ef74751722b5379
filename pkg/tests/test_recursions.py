import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monotri.alpha import classical_formula
from monotri.operators import SpecSet
from monotri.recursions import (
    Variant,
    alpha_point_recursion,
    gbinom,
    indicator_coeffs,
    isum,
    q_boundary_terms,
    summation_at_point,
    top_row_count_via_alpha,
)
from monotri.ring import LaurentPQ
from monotri.triangles import enumerate_monotone, p_weight_weak_brute, q_weight_brute

P = LaurentPQ.monomial(1, 0)
Q = LaurentPQ.monomial(0, 1)
CLASSICAL = SpecSet.classical()


def test_extended_sum():
    assert isum(1, 3, lambda l: l) == 6
    assert isum(3, 2, lambda l: l) == 0
    assert isum(4, 1, lambda l: l) == -(2 + 3)


def test_generalized_binomial():
    assert gbinom(5, 2) == 10
    assert gbinom(-1, 3) == -1
    assert gbinom(2, 3) == 0


def test_point_recursion_examples():
    assert alpha_point_recursion((2, 3), Variant("P1Q1", CLASSICAL, 1)) == 5
    assert alpha_point_recursion((1, 2, 3), "Qonly") == 6 + Q
    assert alpha_point_recursion((1, 2), "Ponly") == P + 1
    with pytest.raises(ValueError):
        Variant("Qonly", SpecSet(), 0)
    with pytest.raises(ValueError):
        Variant("bogus")


@pytest.mark.parametrize("k", [(1, 2, 4), (0, 1, 3, 5), (2, 3, 4, 7)])
def test_weighted_recursions_match_oracles(k):
    assert alpha_point_recursion(k, "Qonly") == q_weight_brute(k)
    assert alpha_point_recursion(k, "Ponly") == p_weight_weak_brute(k)


@pytest.mark.parametrize("k", [(1, 1), (1, 3, 3), (0, 2, 2), (1, 2, 4, 4), (-1, 0, 2, 2)])
def test_q_boundary_term(k):
    d = q_boundary_terms(k)
    assert d["value"] - d["naive"] == (1 - Q) * d["first"]
    assert d["value"] == classical_formula(k, "Q")
    with pytest.raises(ValueError):
        q_boundary_terms((1, 2))


def test_indicator_examples():
    assert indicator_coeffs(2, 1).coeffs == (2, -1)
    assert indicator_coeffs(2, 2).coeffs == (-1, 1)
    assert indicator_coeffs(1, 1).coeffs == (1,)


@pytest.mark.parametrize("n", range(1, 6))
def test_indicator_property(n):
    for i in range(1, n + 1):
        ic = indicator_coeffs(n, i)
        for k in range(1, n + 1):
            assert ic.value_at(k) == (1 if k == i else 0)


def test_top_row_examples():
    assert top_row_count_via_alpha((1, 2), 1) == 1
    assert top_row_count_via_alpha((1, 2), 2) == 1
    assert top_row_count_via_alpha((1, 2, 3), 2) == 3


def test_nodes_one_to_n_only_cover_small_ranges():
    # with nodes 1..n the interpolant is only pinned on 1..n
    assert top_row_count_via_alpha((1, 5), 1, range(1, 3)) != enumerate_monotone((1, 5), 1)
    assert top_row_count_via_alpha((1, 2, 3), 1, range(1, 4)) == enumerate_monotone((1, 2, 3), 1)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(1, 6), min_size=1, max_size=4).map(sorted), st.data())
def test_top_row_count(k, data):
    i = data.draw(st.integers(1, len(k)))
    assert top_row_count_via_alpha(k, i) == enumerate_monotone(k, i)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-2, 4), min_size=1, max_size=4), st.integers(-3, 3),
       st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_summation_shift_covariance(k, p, coeffs):
    spec = SpecSet.from_dict({(0, 0): -1, (1, -1): Fraction(2, 3)})

    def A(l):
        return sum(c * x ** (i + 1) for i, (c, x) in enumerate(zip(coeffs, l))) + 1

    lhs = summation_at_point(lambda l: A(tuple(x - p for x in l)), k, spec)
    rhs = summation_at_point(A, tuple(x - p for x in k), spec)
    assert lhs == rhs


def test_summation_at_point_counts_triangles():
    for k in itertools.combinations(range(1, 6), 3):
        via = summation_at_point(lambda l: classical_formula(l).coeff(0, 0), k, CLASSICAL)
        assert via == enumerate_monotone(k)
