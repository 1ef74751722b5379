"""Exact coefficient arithmetic in the formal variables P and Q.

Three layers:

* ``Fraction`` from the standard library is the scalar field.
* :class:`LaurentPQ` is an element of Q[P, 1/P, Q, 1/Q], stored as a
  sparse map ``(e_P, e_Q) -> coefficient``.
* :class:`RatFuncPQ` is a reduced quotient of two polynomials in P, Q.
  Reduction uses the multivariate gcd of ``sympy.polys``.

The module-level helpers prefixed ``c`` work on the raw term dictionaries and
are the hot path of the operator engine; they never copy more than needed.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as _sympy_ring

Rational = Fraction

_SYM_RING, _SYM_P, _SYM_Q = _sympy_ring("P,Q", QQ, grlex)


def parse_rational(text) -> Fraction:
    """Parse ``"a/b"``, ``"a"`` or an int into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = str(text).strip()
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


# --------------------------------------------------------------------------
# raw term-dict helpers: dict[(eP, eQ)] -> int | Fraction, no zero entries
# --------------------------------------------------------------------------

def cadd_into(acc: dict, other: dict, scale=1) -> None:
    for key, val in other.items():
        v = acc.get(key, 0) + scale * val
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def cadd(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    cadd_into(out, b, scale)
    return out


def cmul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for (p1, q1), v1 in a.items():
        for (p2, q2), v2 in b.items():
            key = (p1 + p2, q1 + q2)
            v = out.get(key, 0) + v1 * v2
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def cscale(a: dict, s) -> dict:
    if not s:
        return {}
    return {k: v * s for k, v in a.items()}


def cshift(a: dict, dp: int, dq: int = 0) -> dict:
    return {(p + dp, q + dq): v for (p, q), v in a.items()}


# --------------------------------------------------------------------------
# univariate integer polynomials in P, cyclotomic factors
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple:
    """Coefficients (lowest degree first) of the k-th cyclotomic polynomial."""
    num = [-1] + [0] * (k - 1) + [1]  # P^k - 1
    for d in range(1, k):
        if k % d == 0:
            num = _exact_div_int(num, cyclotomic(d))
    return tuple(num)


def _exact_div_int(num: list, monic: tuple) -> list:
    num = list(num)
    dm = len(monic) - 1
    quot = [0] * (len(num) - dm)
    for i in range(len(num) - 1, dm - 1, -1):
        c = num[i]
        if c:
            quot[i - dm] = c
            for j, m in enumerate(monic):
                num[i - dm + j] -= c * m
    if any(num[:dm]):
        raise ArithmeticError("inexact cyclotomic division")
    return quot


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def cmul_upoly(a: dict, coeffs) -> dict:
    """Multiply a term dict by a polynomial in P given as a coefficient list."""
    out: dict = {}
    for (p, q), v in a.items():
        for i, c in enumerate(coeffs):
            if c:
                key = (p + i, q)
                w = out.get(key, 0) + v * c
                if w:
                    out[key] = w
                else:
                    del out[key]
    return out


def cdiv_monic_upoly(a: dict, monic) -> dict | None:
    """Exact division of a term dict by a monic polynomial in P.

    Works slice by slice in Q. Returns None when the division leaves a
    remainder. A Laurent slice is shifted to a polynomial first, which is
    harmless for divisors coprime to P.
    """
    slices: dict = {}
    for (p, q), v in a.items():
        slices.setdefault(q, {})[p] = v
    dm = len(monic) - 1
    out: dict = {}
    for q, sl in slices.items():
        lo = min(sl)
        hi = max(sl)
        num = [0] * (hi - lo + 1)
        for p, v in sl.items():
            num[p - lo] = v
        if len(num) <= dm:
            return None
        for i in range(len(num) - 1, dm - 1, -1):
            c = num[i]
            if c:
                for j in range(dm + 1):
                    if monic[j]:
                        num[i - dm + j] -= c * monic[j]
                num[i] = c  # quotient coefficient at i - dm, stored shifted
        if any(num[:dm]):
            return None
        for i in range(dm, len(num)):
            if num[i]:
                out[(lo + i - dm, q)] = num[i]
    return out


# --------------------------------------------------------------------------
# LaurentPQ
# --------------------------------------------------------------------------

class LaurentPQ:
    """Immutable Laurent polynomial in P and Q over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {(0, 0): terms}
        clean = {}
        for (p, q), v in terms.items():
            if v:
                clean[(int(p), int(q))] = v
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPQ":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, ep: int = 0, eq: int = 0, coeff=1) -> "LaurentPQ":
        return cls({(ep, eq): coeff})

    @classmethod
    def const(cls, c) -> "LaurentPQ":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPQ._raw(cadd(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPQ._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPQ._raw(cadd(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPQ._raw(cscale(self._terms, other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPQ._raw(cmul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((p, q), v), = self._terms.items()
            return LaurentPQ({(p * e, q * e): Fraction(1) / Fraction(v) ** (-e)})
        out = LaurentPQ.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def coeff(self, ep: int = 0, eq: int = 0) -> Fraction:
        return Fraction(self._terms.get((ep, eq), 0))

    def evaluate(self, p0=1, q0=1) -> Fraction:
        return eval_pq(self, p0, q0)

    def subs_q(self, q0) -> "LaurentPQ":
        """Substitute a rational value for Q, keeping P symbolic."""
        q0 = Fraction(q0)
        out: dict = {}
        for (p, q), v in self._terms.items():
            if q < 0 and q0 == 0:
                raise ZeroDivisionError("Q=0 substituted into a negative power")
            cadd_into(out, {(p, 0): v * q0 ** q})
        return LaurentPQ._raw(out)

    def subs_p(self, p0) -> "LaurentPQ":
        p0 = Fraction(p0)
        out: dict = {}
        for (p, q), v in self._terms.items():
            if p < 0 and p0 == 0:
                raise ZeroDivisionError("P=0 substituted into a negative power")
            cadd_into(out, {(0, q): v * p0 ** p})
        return LaurentPQ._raw(out)

    def to_json(self) -> dict:
        return {
            "vars": ["P", "Q"],
            "terms": [{"exp": [p, q], "coeff": format_rational(v)}
                      for (p, q), v in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LaurentPQ":
        if obj.get("vars", ["P", "Q"]) != ["P", "Q"]:
            raise ValueError(f"unsupported variable list {obj.get('vars')}")
        terms = {}
        for t in obj["terms"]:
            p, q = t["exp"]
            terms[(int(p), int(q))] = parse_rational(t["coeff"])
        return cls(terms)

    def __repr__(self):
        return f"LaurentPQ({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (p, q), v in sorted(self._terms.items(), key=lambda kv: (-kv[0][0] - kv[0][1], kv[0])):
            mono = []
            for name, e in (("P", p), ("Q", q)):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            v = Fraction(v)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append("*".join(mono))
            elif v == -1:
                parts.append("-" + "*".join(mono))
            else:
                parts.append(f"{v}*" + "*".join(mono))
        return " + ".join(parts).replace("+ -", "- ")


P = LaurentPQ.monomial(1, 0)
Q = LaurentPQ.monomial(0, 1)


def eval_pq(v: LaurentPQ, p0, q0) -> Fraction:
    """Exact value of ``v`` at P=p0, Q=q0."""
    p0 = Fraction(p0)
    q0 = Fraction(q0)
    total = Fraction(0)
    for (p, q), c in v._terms.items():
        if (p < 0 and p0 == 0) or (q < 0 and q0 == 0):
            raise ZeroDivisionError("zero substituted into a negative power")
        total += c * p0 ** p * q0 ** q
    return total


# --------------------------------------------------------------------------
# RatFuncPQ
# --------------------------------------------------------------------------

def _grlex_key(exp):
    p, q = exp
    return (p + q, p, q)


def _to_sympy(terms: dict):
    return _SYM_RING({k: QQ(Fraction(v).numerator, Fraction(v).denominator)
                      for k, v in terms.items()})


def _from_sympy(poly) -> dict:
    return {tuple(k): Fraction(int(v.numerator), int(v.denominator))
            for k, v in poly.terms()}


class RatFuncPQ:
    """Reduced rational function num/den in P, Q.

    ``num`` and ``den`` are polynomials (non-negative exponents) without
    common factor; ``den`` has leading coefficient 1 in graded lex order
    with P before Q. Build instances through :func:`normalize`.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPQ, den: LaurentPQ):
        self.num = num
        self.den = den

    @classmethod
    def from_laurent(cls, v: LaurentPQ) -> "RatFuncPQ":
        return normalize(v, LaurentPQ.const(1))

    def __add__(self, other):
        other = _as_ratfunc(other)
        return normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncPQ(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfunc(other))

    def __rsub__(self, other):
        return _as_ratfunc(other) - self

    def __mul__(self, other):
        other = _as_ratfunc(other)
        return normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return normalize(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        try:
            other = _as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"RatFuncPQ(({self.num}) / ({self.den}))"


def _as_ratfunc(x) -> RatFuncPQ:
    if isinstance(x, RatFuncPQ):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFuncPQ(LaurentPQ.const(x), LaurentPQ.const(1))
    if isinstance(x, LaurentPQ):
        return RatFuncPQ.from_laurent(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RatFuncPQ")


def normalize(num, den) -> RatFuncPQ:
    """Reduce ``num/den`` to its canonical representative.

    Inputs may be LaurentPQ (negative exponents are cleared by a monomial
    shift), plain term dicts, or scalars.
    """
    num = num if isinstance(num, LaurentPQ) else LaurentPQ(num)
    den = den if isinstance(den, LaurentPQ) else LaurentPQ(den)
    if den.is_zero():
        raise ZeroDivisionError("division by zero")
    if num.is_zero():
        return RatFuncPQ(LaurentPQ(), LaurentPQ.const(1))
    nt, dt = num._terms, den._terms
    sp = min(min(p for p, _ in nt), min(p for p, _ in dt))
    sq = min(min(q for _, q in nt), min(q for _, q in dt))
    nt, dt = cshift(nt, -sp, -sq), cshift(dt, -sp, -sq)
    a, b = _to_sympy(nt), _to_sympy(dt)
    g = a.gcd(b)
    a, b = a.exquo(g), b.exquo(g)
    nt, dt = _from_sympy(a), _from_sympy(b)
    lead = dt[max(dt, key=_grlex_key)]
    nt = {k: v / lead for k, v in nt.items()}
    dt = {k: v / lead for k, v in dt.items()}
    return RatFuncPQ(LaurentPQ._raw(nt), LaurentPQ._raw(dt))


def to_laurent(v: RatFuncPQ) -> LaurentPQ:
    """Return ``v`` as a Laurent polynomial; fails unless den is a monomial."""
    v = normalize(v.num, v.den)
    if len(v.den._terms) != 1:
        raise ValueError("not a Laurent polynomial")
    ((p, q), c), = v.den._terms.items()
    return LaurentPQ._raw({(a - p, b - q): x / c for (a, b), x in v.num._terms.items()})
