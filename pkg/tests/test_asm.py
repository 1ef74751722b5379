import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monotri.alpha import classical_formula
from monotri.asm import (
    AsmMatrix,
    PartialAsm,
    asm_counts,
    asm_to_mt,
    census,
    doubly_refined_check,
    doubly_refined_lhs,
    doubly_refined_q1,
    iter_asms,
    iter_partial_asms,
    mt_to_asm,
    mt_to_partial,
    partial_asm_brute,
    pochhammer,
    refined_two_enum_brute,
    two_enum,
    vsasm_brute,
)
from monotri.triangles import TriArray, enumerate_monotone, iter_monotone, q_weight_brute

MIDDLE = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


def test_bijection_example():
    t = asm_to_mt(AsmMatrix(MIDDLE))
    assert t.rows == ((1, 2, 3), (1, 3), (2,))
    assert mt_to_asm(t).rows == MIDDLE


def test_identity_matrix():
    n = 4
    eye = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    assert asm_to_mt(AsmMatrix(eye)).rows == ((1, 2, 3, 4), (1, 2, 3), (1, 2), (1,))


def test_validation_errors():
    with pytest.raises(ValueError, match="row 2 sums"):
        AsmMatrix(((1, 0), (0, 0)))
    with pytest.raises(ValueError, match="column 2"):
        AsmMatrix(((0, 1), (0, 1)))
    with pytest.raises(ValueError, match="square"):
        AsmMatrix(((1, 0),))
    with pytest.raises(ValueError, match="first nonzero"):
        PartialAsm(((-1, 1, 1),))
    with pytest.raises(ValueError, match="alternate"):
        PartialAsm(((1, 0, 1, -1, 0),))
    with pytest.raises(ValueError, match="not in"):
        PartialAsm(((2, -1),))
    with pytest.raises(ValueError, match="m <= n"):
        PartialAsm(((1,), (1,)))
    with pytest.raises(ValueError, match="bottom row"):
        mt_to_asm(TriArray(((1, 3), (2,))))


def test_text_round_trip():
    a = AsmMatrix(MIDDLE)
    assert a.to_text() == "0 1 0\n1 -1 1\n0 1 0\n"
    assert AsmMatrix.from_text(a.to_text()) == a


@pytest.mark.parametrize("n", range(1, 6))
def test_bijection_round_trip(n):
    seen = set()
    for t in iter_monotone(range(1, n + 1)):
        a = mt_to_asm(t)
        assert asm_to_mt(a) == t
        assert a.minus_ones() == t.strictly_between_count()
        seen.add(a.rows)
    assert len(seen) == asm_counts(n)


def _direct_asms(n):
    """All n x n {-1,0,1} matrices that pass validation (tiny n only)."""
    out = []
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        try:
            AsmMatrix(rows)
        except ValueError:
            continue
        out.append(rows)
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_triangle_route_matches_direct_enumeration(n):
    assert sorted(iter_asms(n)) == sorted(_direct_asms(n))


def test_direct_partial_enumeration():
    m, n = 2, 3
    direct = []
    for flat in itertools.product((-1, 0, 1), repeat=m * n):
        rows = (flat[:n], flat[n:])
        try:
            PartialAsm(rows)
        except ValueError:
            continue
        direct.append(rows)
    assert sorted(direct) == sorted(iter_partial_asms(m, n))
    assert sum(2 ** sum(r.count(-1) for r in rows) for rows in direct) == partial_asm_brute(m, n, 2)
    for rows in direct:
        assert mt_to_partial(asm_to_mt(PartialAsm(rows)), n).rows == rows


def test_counts():
    assert [asm_counts(n) for n in range(1, 6)] == [1, 2, 7, 42, 429]
    assert asm_counts(3, 2) == 3
    assert [asm_counts(5, i) for i in range(1, 6)] == [42, 105, 135, 105, 42]
    assert asm_counts(4, 0) == 0 and asm_counts(4, 5) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_brute(n):
    mats = list(iter_asms(n))
    assert asm_counts(n) == len(mats) == enumerate_monotone(range(1, n + 1))
    for i in range(1, n + 1):
        assert asm_counts(n, i) == sum(1 for r in mats if r[0][i - 1] == 1)


def test_two_enum_examples():
    assert two_enum("total", (1, 2, 3)) == 8
    assert two_enum("refined", 3, 2) == 4
    assert two_enum("partial", 1, 6) == 6
    assert two_enum("vsasm_claim", 3) == 4
    with pytest.raises(ValueError):
        two_enum("bogus")


def test_partial_examples():
    assert partial_asm_brute(2, 2, 2) == 2
    assert partial_asm_brute(1, 4, 2) == 4
    assert partial_asm_brute(2, 3, 2) == two_enum("partial", 2, 3)
    with pytest.raises(ValueError):
        partial_asm_brute(3, 2, 2)


@pytest.mark.parametrize("n", range(1, 6))
def test_refined_two_enumeration(n):
    for l in range(1, n + 1):
        assert refined_two_enum_brute(n, l) == two_enum("refined", n, l)


@pytest.mark.parametrize("n", range(1, 6))
def test_total_two_enumeration(n):
    k = tuple(range(1, n + 1))
    assert q_weight_brute(k).evaluate(1, 2) == two_enum("total", k)


@settings(max_examples=30, deadline=None)
@given(st.sets(st.integers(1, 7), min_size=1, max_size=4).map(sorted))
def test_total_two_enumeration_general(k):
    assert classical_formula(k, "Q").evaluate(1, 2) == two_enum("total", k)


def test_q_census_matches_formula():
    for n in range(1, 6):
        c = census(iter_asms(n))
        poly = classical_formula(range(1, n + 1), "Q")
        assert {e: Fraction(v) for e, v in c.items()} == {e: poly.coeff(0, e) for e in c}


def test_vsasm():
    assert vsasm_brute(1) == {0: 1}
    assert vsasm_brute(3) == {1: 1}
    assert sum(vsasm_brute(5).values()) == 3
    assert sum(vsasm_brute(7).values()) == 26
    with pytest.raises(ValueError):
        vsasm_brute(4)


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(3, 2) == 12
    assert pochhammer(5, -2) == Fraction(1, 12)
    with pytest.raises(ZeroDivisionError):
        pochhammer(1, -1)


def test_conjecture_checker_reports():
    assert doubly_refined_lhs(3, 1, 0) == 5
    assert doubly_refined_lhs(3, 2, 0) == 6
    assert doubly_refined_q1(3, 2, 0) == 2
    r = doubly_refined_check(3, 1, 0)
    assert r["alpha"] == 5 and r["formula"] == Fraction(67, 4) and r["agree"] is False
    for n in range(2, 6):
        for j in range(2, n + 1):
            assert isinstance(doubly_refined_q1(n, j, 0), Fraction)
