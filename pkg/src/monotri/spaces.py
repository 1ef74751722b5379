"""Function spaces acted on by the shift and difference operators.

``KPoly`` is a polynomial in integer variables k_1..k_n with coefficients in
Q[Q, 1/Q]; it carries the P-free (classical) calculus.

``XPoly`` is a polynomial in X_1..X_n, where X_i stands for P^{k_i}, with
coefficients in Q(P, Q). All coefficients share one denominator, a product of
cyclotomic polynomials in P. Every denominator that occurs in this library
(P-binomials, geometric sums, q-Vandermonde factors) is of that type, so
lcm's and cancellations reduce to bookkeeping on cyclotomic indices.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .ring import (
    LaurentPQ,
    RatFuncPQ,
    cadd_into,
    cdiv_monic_upoly,
    cmul,
    cmul_upoly,
    cscale,
    cshift,
    cyclotomic,
    divisors,
    format_rational,
    normalize,
    parse_rational,
)

_ONE = {(0, 0): 1}


def _clean(terms: dict) -> dict:
    return {xe: c for xe, c in terms.items() if c}


def _add_terms(a: dict, b: dict, scale=1) -> dict:
    out = {xe: dict(c) for xe, c in a.items()}
    for xe, c in b.items():
        tgt = out.setdefault(xe, {})
        cadd_into(tgt, c, scale)
        if not tgt:
            del out[xe]
    return out


# --------------------------------------------------------------------------
# KPoly
# --------------------------------------------------------------------------

class KPoly:
    """Polynomial in k_1..k_n over Laurent polynomials in Q."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            if not isinstance(c, dict):
                c = c._terms if isinstance(c, LaurentPQ) else {(0, 0): c}
            if any(p for p, _ in c):
                raise ValueError("KPoly coefficients must be free of P")
            if any(x < 0 for x in e) or len(e) != nvars:
                raise ValueError("invariant violation: bad exponent vector")
            c = {k: v for k, v in c.items() if v}
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, nvars: int, c=1) -> "KPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "KPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def vandermonde(cls, nvars: int) -> "KPoly":
        """prod_{i<j} (k_j - k_i)/(j - i)."""
        out = cls.const(nvars)
        for i in range(nvars):
            for j in range(i + 1, nvars):
                out = out * (cls.var(nvars, j) - cls.var(nvars, i)) * Fraction(1, j - i)
        return out

    def __add__(self, other):
        return KPoly._raw(self.nvars, _add_terms(self.terms, other.terms))

    def __sub__(self, other):
        return KPoly._raw(self.nvars, _add_terms(self.terms, other.terms, -1))

    def __neg__(self):
        return KPoly._raw(self.nvars, {e: cscale(c, -1) for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KPoly._raw(self.nvars, _clean({e: cscale(c, other) for e, c in self.terms.items()}))
        if isinstance(other, LaurentPQ):
            return KPoly._raw(self.nvars, _clean({e: cmul(c, other._terms) for e, c in self.terms.items()}))
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                tgt = out.setdefault(e, {})
                cadd_into(tgt, cmul(c1, c2))
                if not tgt:
                    del out[e]
        return KPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, k) -> LaurentPQ:
        if len(k) != self.nvars:
            raise ValueError(f"expected {self.nvars} arguments, got {len(k)}")
        out: dict = {}
        for e, c in self.terms.items():
            m = 1
            for ki, ei in zip(k, e):
                m *= ki ** ei
            if m:
                cadd_into(out, c, m)
        return LaurentPQ._raw(out)

    def subs_q(self, q0) -> "KPoly":
        return KPoly._raw(self.nvars, _clean({e: LaurentPQ._raw(c).subs_q(q0)._terms
                                              for e, c in self.terms.items()}))

    def __repr__(self):
        return f"KPoly(nvars={self.nvars}, terms={len(self.terms)})"


def _kpoly_shift(fn: KPoly, var: int, e: int) -> KPoly:
    """k_var -> k_var + e by binomial expansion."""
    out: dict = {}
    for ex, c in fn.terms.items():
        d = ex[var]
        for a in range(d + 1):
            w = comb(d, a) * e ** (d - a)
            if not w:
                continue
            ne = ex[:var] + (a,) + ex[var + 1:]
            tgt = out.setdefault(ne, {})
            cadd_into(tgt, c, w)
            if not tgt:
                del out[ne]
    return KPoly._raw(fn.nvars, out)


# --------------------------------------------------------------------------
# XPoly
# --------------------------------------------------------------------------

class XPoly:
    """Polynomial in X_1..X_n (X_i = P^{k_i}) over Q(P, Q).

    ``terms`` maps exponent tuples to numerator coefficients (raw LaurentPQ
    term dicts); ``den`` maps cyclotomic indices to multiplicities and is
    shared by all coefficients.
    """

    __slots__ = ("nvars", "terms", "den")

    def __init__(self, nvars: int, terms: dict | None = None, den: dict | None = None):
        self.nvars = nvars
        self.den = {k: m for k, m in (den or {}).items() if m}
        if any(m < 0 for m in self.den.values()):
            raise ValueError("negative cyclotomic multiplicity")
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has wrong length")
            if any(x < 0 for x in e):
                raise ValueError("invariant violation: negative X exponent")
            if isinstance(c, LaurentPQ):
                c = c._terms
            elif not isinstance(c, dict):
                c = {(0, 0): c}
            c = {k: v for k, v in c.items() if v}
            if c:
                self.terms[e] = c

    @classmethod
    def _raw(cls, nvars, terms, den):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj.den = den
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "XPoly":
        return cls._raw(nvars, {}, {})

    @classmethod
    def const(cls, nvars: int, c=1) -> "XPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "XPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def vandermonde(cls, nvars: int) -> "XPoly":
        """prod_{i<j} (X_j - X_i)/(P^j - P^i), positions counted from 1."""
        out = cls.const(nvars)
        for i in range(1, nvars + 1):
            for j in range(i + 1, nvars + 1):
                diff = cls.var(nvars, j - 1) - cls.var(nvars, i - 1)
                # P^j - P^i = P^i * prod_{d | j-i} Phi_d(P)
                diff = diff.scale(LaurentPQ.monomial(-i, 0))
                out = out * diff.divide_by_pow_minus_one(j - i)
        return out

    # ---- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps) -> RatFuncPQ:
        num = self.terms.get(tuple(exps), {})
        return normalize(LaurentPQ._raw(dict(num)), LaurentPQ._raw(den_poly(self.den)))

    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def depends_on(self, var: int) -> bool:
        return any(e[var] for e in self.terms)

    def denominator(self) -> LaurentPQ:
        return LaurentPQ._raw(den_poly(self.den))

    # ---- arithmetic ------------------------------------------------------

    def _aligned(self, other: "XPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        if self.den == other.den:
            return self.terms, other.terms, dict(self.den)
        den = dict(self.den)
        for k, m in other.den.items():
            den[k] = max(den.get(k, 0), m)
        return (_mul_cyclo(self.terms, _den_diff(den, self.den)),
                _mul_cyclo(other.terms, _den_diff(den, other.den)), den)

    def __add__(self, other):
        a, b, den = self._aligned(other)
        return XPoly._raw(self.nvars, _add_terms(a, b), den)

    def __sub__(self, other):
        a, b, den = self._aligned(other)
        return XPoly._raw(self.nvars, _add_terms(a, b, -1), den)

    def __neg__(self):
        return XPoly._raw(self.nvars, {e: cscale(c, -1) for e, c in self.terms.items()}, dict(self.den))

    def scale(self, c) -> "XPoly":
        """Multiply by a scalar or a LaurentPQ."""
        if isinstance(c, LaurentPQ):
            c = c._terms
            return XPoly._raw(self.nvars, _clean({e: cmul(v, c) for e, v in self.terms.items()}), dict(self.den))
        return XPoly._raw(self.nvars, _clean({e: cscale(v, c) for e, v in self.terms.items()}), dict(self.den))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPQ)):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                tgt = out.setdefault(e, {})
                cadd_into(tgt, cmul(c1, c2))
                if not tgt:
                    del out[e]
        den = dict(self.den)
        for k, m in other.den.items():
            den[k] = den.get(k, 0) + m
        return XPoly._raw(self.nvars, out, den)

    __rmul__ = __mul__

    def divide_by_pow_minus_one(self, j: int) -> "XPoly":
        """Divide by P^j - 1."""
        den = dict(self.den)
        for d in divisors(j):
            den[d] = den.get(d, 0) + 1
        return XPoly._raw(self.nvars, {e: dict(c) for e, c in self.terms.items()}, den)

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def simplify(self) -> "XPoly":
        """Cancel every cyclotomic factor dividing all numerator coefficients."""
        if not self.terms:
            return XPoly._raw(self.nvars, {}, {})
        terms = self.terms
        den = dict(self.den)
        for k in sorted(den):
            while den.get(k):
                trial = {}
                for e, c in terms.items():
                    qc = cdiv_monic_upoly(c, cyclotomic(k))
                    if qc is None:
                        break
                    trial[e] = qc
                else:
                    terms = trial
                    den[k] -= 1
                    continue
                break
        return XPoly._raw(self.nvars, terms, {k: m for k, m in den.items() if m})

    # ---- variable manipulation ---------------------------------------

    def insert_vars(self, pos: int, count: int = 1) -> "XPoly":
        z = (0,) * count
        return XPoly._raw(self.nvars + count,
                          {e[:pos] + z + e[pos:]: c for e, c in self.terms.items()}, dict(self.den))

    def permute(self, order) -> "XPoly":
        """New variable i is old variable order[i]."""
        order = list(order)
        if sorted(order) != list(range(self.nvars)):
            raise ValueError("not a permutation")
        return XPoly._raw(self.nvars, {tuple(e[i] for i in order): c for e, c in self.terms.items()},
                          dict(self.den))

    def move_var(self, src: int, dst: int) -> "XPoly":
        order = list(range(self.nvars))
        order.insert(dst, order.pop(src))
        return self.permute(order)

    def drop_var(self, var: int) -> "XPoly":
        if self.depends_on(var):
            raise ValueError("cannot drop a variable the polynomial depends on")
        return XPoly._raw(self.nvars - 1, {e[:var] + e[var + 1:]: c for e, c in self.terms.items()},
                          dict(self.den))

    # ---- evaluation ----------------------------------------------------

    def numerator_at(self, k) -> dict:
        if len(k) != self.nvars:
            raise ValueError(f"expected {self.nvars} arguments, got {len(k)}")
        out: dict = {}
        for e, c in self.terms.items():
            shift = sum(ki * ei for ki, ei in zip(k, e))
            cadd_into(out, cshift(c, shift))
        return out

    def evaluate(self, k) -> LaurentPQ:
        """Substitute X_i = P^{k_i}; the result must be a Laurent polynomial."""
        num = self.numerator_at(k)
        for kk, m in sorted(self.den.items()):
            for _ in range(m):
                if not num:
                    return LaurentPQ()
                num = cdiv_monic_upoly(num, cyclotomic(kk))
                if num is None:
                    raise ValueError("not a Laurent polynomial")
        return LaurentPQ._raw(num)

    def subs_q(self, q0) -> "XPoly":
        return XPoly._raw(self.nvars, _clean({e: LaurentPQ._raw(c).subs_q(q0)._terms
                                              for e, c in self.terms.items()}), dict(self.den))

    # ---- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        s = self.simplify()
        terms = []
        for e in sorted(s.terms):
            for (p, q), v in sorted(s.terms[e].items()):
                terms.append({"x": list(e), "exp": [p, q], "coeff": format_rational(v)})
        return {
            "vars": ["P", "Q"],
            "xvars": [f"X{i + 1}" for i in range(s.nvars)],
            "den": LaurentPQ._raw(den_poly(s.den)).to_json()["terms"],
            "den_cyclotomic": [[k, m] for k, m in sorted(s.den.items())],
            "terms": terms,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "XPoly":
        nvars = len(obj["xvars"])
        terms: dict = {}
        for t in obj["terms"]:
            terms.setdefault(tuple(t["x"]), {})[tuple(t["exp"])] = parse_rational(t["coeff"])
        den = {int(k): int(m) for k, m in obj.get("den_cyclotomic", [])}
        return cls(nvars, terms, den)

    def __repr__(self):
        return f"XPoly(nvars={self.nvars}, terms={len(self.terms)}, den={self.den})"


def den_poly(den: dict) -> dict:
    out = dict(_ONE)
    for k, m in sorted(den.items()):
        for _ in range(m):
            out = cmul_upoly(out, cyclotomic(k))
    return out


def _den_diff(big: dict, small: dict) -> dict:
    return {k: m - small.get(k, 0) for k, m in big.items() if m - small.get(k, 0)}


def _mul_cyclo(terms: dict, factors: dict) -> dict:
    if not factors:
        return terms
    poly = [1]
    for k, m in factors.items():
        for _ in range(m):
            poly = _upoly_mul(poly, cyclotomic(k))
    return {e: cmul_upoly(c, poly) for e, c in terms.items()}


def _upoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
