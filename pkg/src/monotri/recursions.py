"""Integer-point recursions for alpha and the top-row interpolation.

These evaluate the simplified recursions directly at integer arguments with
memoization, as an oracle independent of the operator engine. Integer sums
use the extended convention

    sum_{l=a}^{b} g(l) = -sum_{l=b+1}^{a-1} g(l)   for b < a - 1,

so the recursions make sense for arbitrary integer bottom rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import sympy

from .operators import SpecSet
from .ring import LaurentPQ, RatFuncPQ, to_laurent

_Q = LaurentPQ.monomial(0, 1)


def isum(a: int, b: int, g, zero=0):
    """Extended integer sum of g(l) for l from a to b."""
    if b >= a - 1:
        acc = zero
        for l in range(a, b + 1):
            acc = acc + g(l)
        return acc
    acc = zero
    for l in range(b + 1, a):
        acc = acc + g(l)
    return -acc


def gbinom(k: int, m: int) -> Fraction:
    """binom(k, m) as a polynomial in k, valid for negative k."""
    out = Fraction(1)
    for i in range(m):
        out = out * (k - i) / (i + 1)
    return out


def pbinom_value(k: int, m: int) -> LaurentPQ:
    """P-binomial [k choose m]_P as a Laurent polynomial in P, for any integer k."""
    # prod_{j<m} (1 - P^{k-j}) / (1 - P^{j+1}); polynomial in P^k, exact division
    num = LaurentPQ.const(1)
    for j in range(m):
        num = num * (1 - LaurentPQ.monomial(k - j, 0))
    den = LaurentPQ.const(1)
    for j in range(1, m + 1):
        den = den * (1 - LaurentPQ.monomial(j, 0))
    return to_laurent(RatFuncPQ(num, den))


@dataclass(frozen=True)
class Variant:
    """Which simplified recursion to run.

    ``kind`` is "P1Q1" (general S, f and m; rational values), "Qonly"
    (Laurent in Q) or "Ponly" (Laurent in P). The last two fix the classical
    S = {(0,0)}, f = -1 and m = 0.
    """

    kind: str = "P1Q1"
    spec: SpecSet = field(default_factory=SpecSet.classical)
    m: int = 0

    def __post_init__(self):
        if self.kind not in ("P1Q1", "Qonly", "Ponly"):
            raise ValueError(f"unknown recursion variant {self.kind!r}")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.kind != "P1Q1" and (self.m != 0 or self.spec != SpecSet.classical()):
            raise ValueError(f"variant {self.kind} fixes S={{(0,0)}}, f=-1, m=0")


def alpha_point_recursion(bottom, variant: Variant | str = "P1Q1"):
    """Evaluate alpha at an integer bottom row through the point recursion."""
    if isinstance(variant, str):
        variant = Variant(variant)
    return _evaluator(variant)[0](tuple(int(x) for x in bottom))


@lru_cache(maxsize=64)
def _evaluator(v: Variant):
    kind = v.kind
    zero = Fraction(0) if kind == "P1Q1" else LaurentPQ()
    spec = list(v.spec)

    @lru_cache(maxsize=None)
    def alpha(k):
        if len(k) == 1:
            if kind == "P1Q1":
                return gbinom(k[0], v.m)
            return LaurentPQ.const(1)
        return sumop((), k)

    @lru_cache(maxsize=None)
    def sumop(suffix, k):
        # Sum over (l_1..l_{N-1}) interlacing k of alpha(l + suffix)
        N = len(k)
        if N == 0:
            return zero
        if N == 1:
            return alpha(suffix)
        a, b = k[N - 2], k[N - 1]
        head = k[:N - 1]

        def inner(l):
            return sumop((l,) + suffix, head)

        if kind == "P1Q1":
            out = isum(a, b, inner, zero)
            if N >= 3:
                for (i, j), f in spec:
                    out = out + f * sumop((a + i, a + j) + suffix, k[:N - 2])
            return out
        corner = sumop((a, a) + suffix, k[:N - 2]) if N >= 3 else zero
        if kind == "Qonly":
            return (_Q * isum(a + 1, b - 1, inner, zero)
                    + inner(b) + inner(a) - corner)
        # Ponly
        return (isum(a, b - 1, lambda l: LaurentPQ.monomial(l, 0) * inner(l), zero)
                + inner(b) - corner)

    return alpha, sumop


def summation_at_point(A, k, spec: SpecSet):
    """The P=Q=1 summation operator applied to a callable A at the point k.

    A takes a tuple of len(k) - 1 integers and returns a rational.
    """
    spec = list(spec)

    @lru_cache(maxsize=None)
    def sumop(suffix, kk):
        N = len(kk)
        if N == 0:
            return Fraction(0)
        if N == 1:
            return Fraction(A(suffix))
        a, b = kk[N - 2], kk[N - 1]
        out = isum(a, b, lambda l: sumop((l,) + suffix, kk[:N - 1]), Fraction(0))
        if N >= 3:
            for (i, j), f in spec:
                out += f * sumop((a + i, a + j) + suffix, kk[:N - 2])
        return out

    return sumop((), tuple(int(x) for x in k))


def q_boundary_terms(bottom) -> dict:
    """The pieces of the Q-recursion when k_{n-1} = k_n.

    ``first`` is the sum over (l_1..l_{n-2}) interlacing (k_1..k_{n-1}) of
    alpha(l, k_{n-1}), ``corner`` is the sum of alpha(l, k_{n-1}, k_{n-1})
    over (l_1..l_{n-3}), ``value`` the recursion value and ``naive`` the
    combination first - corner that the unweighted recursion would give.
    """
    k = tuple(int(x) for x in bottom)
    n = len(k)
    if n < 2 or k[-1] != k[-2]:
        raise ValueError("needs n >= 2 and k_{n-1} = k_n")
    alpha, sumop = _evaluator(Variant("Qonly"))
    first = sumop((k[-1],), k[:-1])
    corner = sumop((k[-1], k[-1]), k[:-2]) if n >= 3 else LaurentPQ()
    return {"first": first, "corner": corner, "value": alpha(k), "naive": first - corner}


# --------------------------------------------------------------------------
# top-row interpolation
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IndicatorCoeffs:
    n: int
    i: int
    coeffs: tuple
    nodes: tuple

    def value_at(self, k: int) -> Fraction:
        return sum((c * comb_poly(k, q) for q, c in enumerate(self.coeffs)), Fraction(0))


def comb_poly(k: int, q: int) -> Fraction:
    return Fraction(comb(k, q)) if k >= 0 else gbinom(k, q)


def indicator_coeffs(n: int, i: int, nodes=None) -> IndicatorCoeffs:
    """Solve sum_{q<size} c_q binom(k,q) = [k = i] at the given nodes.

    The default nodes are 1..n. Passing another window of consecutive
    integers gives a system of the matching size.
    """
    nodes = tuple(range(1, n + 1)) if nodes is None else tuple(int(x) for x in nodes)
    size = len(nodes)
    if size < 1 or len(set(nodes)) != size:
        raise ValueError("nodes must be distinct and non-empty")
    if i not in nodes:
        raise ValueError(f"target {i} is not among the nodes")
    M = sympy.Matrix(size, size, lambda r, q: sympy.Rational(comb_poly(nodes[r], q)))
    rhs = sympy.Matrix(size, 1, lambda r, _: 1 if nodes[r] == i else 0)
    sol = M.LUsolve(rhs)
    coeffs = tuple(Fraction(int(x.p), int(x.q)) for x in sol)
    return IndicatorCoeffs(size, i, coeffs, nodes)


def top_row_count_via_alpha(bottom, i: int, nodes=None) -> Fraction:
    """sum_q c_q alpha_{1,1}(n, q, {(0,0)}, -1; bottom).

    By default the interpolation nodes are the window of integers that a top
    entry can take together with the target, i.e. [min(k_1, i), max(k_n, i)];
    ``nodes`` overrides this (e.g. ``range(1, n+1)``).
    """
    k = tuple(int(x) for x in bottom)
    if nodes is None:
        nodes = range(min(min(k), i), max(max(k), i) + 1)
    ic = indicator_coeffs(len(tuple(nodes)), i, nodes)
    total = Fraction(0)
    for q, c in enumerate(ic.coeffs):
        if c:
            total += c * alpha_point_recursion(k, Variant("P1Q1", SpecSet.classical(), q))
    return total
