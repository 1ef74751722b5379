"""The master quantity alpha_{P,Q}(n, (m_1..m_r), S, f) and its specializations.

Two independent routes are provided:

* :func:`alpha_recursive` builds alpha level by level through the summation
  operator (definite P-sums, PQ operators, and the S-term).
* :func:`alpha_closed_xpoly` applies prod V_{k_t,k_s} to a P-binomial
  determinant and multiplies the P, Q prefactor.

:func:`classical_formula` and :func:`p_genfun` are the P=1 and Q=1 operator
formulas, computed in their own function spaces.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .operators import (
    SpecSet,
    apply_basic_op,
    definite_p_sum,
    merge_vars,
    pbinom_det,
    pbinom_xpoly,
    v_product,
)
from .ring import LaurentPQ
from .spaces import KPoly, XPoly


@dataclass(frozen=True)
class AlphaSpec:
    n: int
    m: tuple = (0,)
    spec: SpecSet = field(default_factory=SpecSet)

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        if self.n < 1:
            raise ValueError("n must be positive")
        if not m or any(x < 0 for x in m):
            raise ValueError("m must be a non-empty vector of non-negative integers")
        object.__setattr__(self, "m", m)

    @property
    def r(self) -> int:
        return len(self.m)

    @property
    def nargs(self) -> int:
        return self.n + self.r - 1

    def to_json(self) -> dict:
        return {"n": self.n, "m": list(self.m), "spec": self.spec.to_json()}

    @classmethod
    def from_json(cls, obj) -> "AlphaSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            m = obj["m"]
            m = (m,) if isinstance(m, int) else tuple(m)
            return cls(int(obj["n"]), m, SpecSet.from_json(obj.get("spec", {"S": []})))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed AlphaSpec: {exc}") from exc


# --------------------------------------------------------------------------
# summation operator
# --------------------------------------------------------------------------

def summation_operator(A: XPoly, nargs: int, spec: SpecSet) -> XPoly:
    """Apply the summation operator with upper arguments k_1..k_nargs.

    ``A`` has variables (l_1, ..., l_{nargs-1}, e_1, ...); the trailing e's
    are carried through untouched. The result has variables
    (k_1, ..., k_nargs, e_1, ...).
    """
    extra = A.nvars - (nargs - 1)
    if extra < 0:
        raise ValueError("not enough variables for the summation operator")
    if nargs == 0:
        return XPoly.zero(extra)
    if nargs == 1:
        return A.insert_vars(0)
    N = nargs
    # first summand: inner operator on (l_1..l_{N-2}), then the P-sum over l_{N-1}
    inner = summation_operator(A, N - 1, spec)        # (k_1..k_{N-1}, l, e..)
    inner = inner.insert_vars(N - 1)                  # (k_1..k_{N-1}, k_N, l, e..)
    inner = inner.insert_vars(inner.nvars)            # (..., e.., k*)
    star = inner.nvars - 1
    summed = definite_p_sum(inner, sum_var=N, lower_var=star, upper_var=N - 1)
    star -= 1                                         # (k_1..k_N, e.., k*)
    first = apply_basic_op(summed, N - 1, "pqE")
    first = apply_basic_op(first, star, "pqId")
    first = first.scale(LaurentPQ.monomial(0, -1))

    total = first
    if N >= 3 and len(spec):
        # second summand: the last two arguments of A become (k_{N-1}, k*)
        shifted = XPoly.zero(A.nvars)
        for (i, j), f in spec:
            part = apply_basic_op(A, N - 3, "pE", i)
            part = apply_basic_op(part, N - 2, "pE", j)
            shifted = shifted + part.scale(f)
        second = summation_operator(shifted, N - 2, spec)  # (k_1..k_{N-2}, k_{N-1}, k*, e..)
        second = second.insert_vars(N)                     # (k_1..k_{N-1}, k*, k_N, e..)
        second = second.move_var(N - 1, second.nvars - 1)  # (k_1..k_N, e.., k*)
        total = total + second
    return merge_vars(total, keep=N - 2, drop=total.nvars - 1).simplify()


def alpha_base(m, spec: SpecSet) -> XPoly:
    """alpha at n=1: prod_{s<t<=r} V_{k_t,k_s} det [k_i choose m_j]_P."""
    m = list(m)
    r = len(m)
    det = pbinom_xpoly(0, m[0], 1) if r == 1 else pbinom_det(r, m)
    return v_product(det, spec)


def alpha_recursive(a: AlphaSpec) -> XPoly:
    """alpha_{P,Q}(n, m, S, f) through the summation-operator recursion."""
    value = alpha_base(a.m, a.spec)
    for level in range(2, a.n + 1):
        value = summation_operator(value, level + a.r - 1, a.spec)
    return value.simplify()


def closed_columns(n: int, m) -> list:
    m = list(m)
    r = len(m)
    return [j - 1 if j < n else m[j - n] + n - 1 for j in range(1, n + r)]


def closed_prefactor(n: int, m, printed_q: bool = False) -> LaurentPQ:
    """P^{(n+3r-3)(n-1)(n-2)/6 + |m|(n-1)} Q^{-binom(n,2) - (r-1)(n-1)}.

    Each level of the recursion with N arguments contributes Q^{-(N-1)},
    which gives the extra (r-1)(n-1) for r > 1. ``printed_q=True`` drops it
    and returns the bare Q^{-binom(n,2)} form, which only agrees for r = 1.
    """
    r = len(m)
    ep = (n + 3 * r - 3) * (n - 1) * (n - 2) // 6 + sum(m) * (n - 1)
    eq = -(n * (n - 1) // 2)
    if not printed_q:
        eq -= (r - 1) * (n - 1)
    return LaurentPQ.monomial(ep, eq)


def alpha_closed_xpoly(a: AlphaSpec) -> XPoly:
    """Operator closed form of alpha as an XPoly in k_1..k_{n+r-1}."""
    N = a.nargs
    det = pbinom_det(N, closed_columns(a.n, a.m))
    return v_product(det, a.spec).scale(closed_prefactor(a.n, a.m)).simplify()


def alpha_closed(a: AlphaSpec, k) -> LaurentPQ:
    k = tuple(int(x) for x in k)
    if len(k) != a.nargs:
        raise ValueError(f"alpha needs {a.nargs} arguments, got {len(k)}")
    return _alpha_closed_cached(a).evaluate(k)


@lru_cache(maxsize=256)
def _alpha_closed_cached(a: AlphaSpec) -> XPoly:
    return alpha_closed_xpoly(a)


# --------------------------------------------------------------------------
# specializations
# --------------------------------------------------------------------------

def classical_operator(n: int, weight_mode: str = "plain") -> KPoly:
    """prod_{s<t} (id - (2-Q) E_s + E_s E_t) applied to prod (k_j-k_i)/(j-i)."""
    if weight_mode not in ("plain", "Q"):
        raise ValueError(f"unknown weight mode {weight_mode!r}")
    return _classical_cached(n, weight_mode)


@lru_cache(maxsize=None)
def _classical_cached(n: int, weight_mode: str) -> KPoly:
    two_minus_q = LaurentPQ.const(1) if weight_mode == "plain" else 2 - LaurentPQ.monomial(0, 1)
    fn = KPoly.vandermonde(n)
    for s in range(n):
        for t in range(s + 1, n):
            es = apply_basic_op(fn, s, "E")
            fn = fn - es * two_minus_q + apply_basic_op(es, t, "E")
    return fn


def classical_formula(k, weight_mode: str = "plain") -> LaurentPQ:
    k = tuple(int(x) for x in k)
    return classical_operator(len(k), weight_mode).evaluate(k)


def symmetric_operator(n: int) -> KPoly:
    """prod_{s<t} (id + E_s E_t) applied to the Vandermonde product."""
    fn = KPoly.vandermonde(n)
    for s in range(n):
        for t in range(s + 1, n):
            fn = fn + apply_basic_op(apply_basic_op(fn, s, "E"), t, "E")
    return fn


@lru_cache(maxsize=None)
def p_operator(n: int) -> XPoly:
    """P^{binom(n+1,3)} prod_{s<t} (pE_t + pdelta_s pdelta_t) prod (P^{k_j}-P^{k_i})/(P^j-P^i)."""
    fn = XPoly.vandermonde(n)
    for s in range(n):
        for t in range(s + 1, n):
            a = apply_basic_op(fn, t, "pE")
            b = apply_basic_op(apply_basic_op(fn, s, "pdelta"), t, "pdelta")
            fn = a + b
    return fn.scale(LaurentPQ.monomial((n + 1) * n * (n - 1) // 6, 0)).simplify()


def p_genfun(k) -> LaurentPQ:
    k = tuple(int(x) for x in k)
    if any(a > b for a, b in zip(k, k[1:])):
        raise ValueError("bottom row must be weakly increasing")
    return p_operator(len(k)).evaluate(k)


def spec_from_s_polynomial(s_terms: dict) -> SpecSet:
    """S and f with s(X,Y) = -sum f(i,j) Y^i X^j, from s = sum c_{a,b} X^a Y^b."""
    return SpecSet(tuple(((b, a), -Fraction(c)) for (a, b), c in s_terms.items() if c))
