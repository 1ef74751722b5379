"""Shift, difference and PQ operators on KPoly / XPoly.

Every single-variable operator acts on a monomial X^d as a short list of
``(d', coefficient)`` pairs; these tables are cached by ``(op, e, d)``.
Applying an operator to a multivariate polynomial is then one pass over the
terms. Operators in distinct variables commute, so products are applied
factor by factor.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ring import (
    LaurentPQ,
    cadd_into,
    cmul,
    cmul_upoly,
    cyclotomic,
    divisors,
    format_rational,
    parse_rational,
)
from .spaces import KPoly, XPoly, _add_terms, _kpoly_shift, _upoly_mul

OPS = ("E", "delta", "pdelta", "pE", "pqE", "pqId")
P_OPS = ("pdelta", "pE", "pqE", "pqId")


# --------------------------------------------------------------------------
# single-variable tables
# --------------------------------------------------------------------------

def _combine(*parts):
    """Linear combination of table rows: parts are (coeff_dict, rows)."""
    acc: dict = {}
    for coeff, rows in parts:
        for d, c in rows:
            tgt = acc.setdefault(d, {})
            cadd_into(tgt, cmul(c, coeff))
    return tuple((d, c) for d, c in sorted(acc.items()) if c)


def _then(table_fn, rows):
    """Apply the operator behind ``table_fn`` after the rows ``rows``."""
    parts = []
    for d, c in rows:
        parts.append((c, table_fn(d)))
    return _combine(*parts)


@lru_cache(maxsize=None)
def op_table(op: str, e: int, d: int) -> tuple:
    """Image of X^d under ``op`` raised to the power ``e``."""
    ident = ((d, {(0, 0): 1}),)
    if op == "E":
        return ((d, {(e * d, 0): 1}),)
    if op in ("delta", "pdelta"):
        if e < 0:
            raise ValueError(f"negative power of {op} is not defined")
        rows = ident
        for _ in range(e):
            rows = _then(lambda dd: _basic(op, dd), rows)
        return rows
    if op == "pE":
        if e == 0:
            return ident
        step = (lambda dd: _basic("pE", dd)) if e > 0 else _pe_inverse
        rows = ident
        for _ in range(abs(e)):
            rows = _then(step, rows)
        return rows
    if op in ("pqE", "pqId"):
        if e < 0:
            raise ValueError(f"negative power of {op} is not supported")
        rows = ident
        for _ in range(e):
            rows = _then(lambda dd: _basic(op, dd), rows)
        return rows
    raise ValueError(f"unknown operator {op!r}")


@lru_cache(maxsize=None)
def _basic(op: str, d: int) -> tuple:
    ident = ((d, {(0, 0): 1}),)
    if op == "delta":
        return ((d, {(d, 0): 1, (0, 0): -1}),) if d else ()
    pd = ((d - 1, {(d, 0): 1, (0, 0): -1}),) if d else ()
    if op == "pdelta":
        return pd
    if op == "pE":
        return _combine(({(0, 0): 1}, ident), ({(0, 0): 1}, pd))
    if op == "pqE":
        return _combine(({(0, 1): 1}, ident), ({(0, 0): 1}, pd))
    if op == "pqId":
        return _combine(({(0, 1): 1}, ident), ({(0, 1): 1, (0, 0): -1}, pd))
    raise ValueError(op)


@lru_cache(maxsize=None)
def _pe_inverse(d: int) -> tuple:
    # (id + pdelta)^{-1} = sum_j (-1)^j pdelta^j, finite since pdelta lowers degree
    parts = []
    rows = ((d, {(0, 0): 1}),)
    sign = 1
    while rows:
        parts.append(({(0, 0): sign}, rows))
        rows = _then(lambda dd: _basic("pdelta", dd), rows)
        sign = -sign
    return _combine(*parts)


def _xpoly_apply_table(fn: XPoly, var: int, table) -> XPoly:
    out: dict = {}
    for ex, c in fn.terms.items():
        rows = table(ex[var])
        if not rows:
            continue
        head, tail = ex[:var], ex[var + 1:]
        for d, oc in rows:
            ne = head + (d,) + tail
            tgt = out.get(ne)
            if tgt is None:
                tgt = out[ne] = {}
            for (p, q), v in c.items():
                for (op_, oq), ov in oc.items():
                    key = (p + op_, q + oq)
                    w = tgt.get(key, 0) + v * ov
                    if w:
                        tgt[key] = w
                    else:
                        del tgt[key]
    return XPoly._raw(fn.nvars, {e: c for e, c in out.items() if c}, dict(fn.den))


def apply_basic_op(fn, var: int, op: str, e: int = 1):
    """Apply ``op``^e in variable ``var``.

    ``op`` is one of ``E`` (shift), ``delta``, ``pdelta``, ``pE``, ``pqE``,
    ``pqId``. Negative powers are allowed for ``E`` and ``pE``; the latter is
    the terminating Neumann series.
    """
    if op not in OPS:
        raise ValueError(f"unknown operator {op!r}")
    if isinstance(fn, KPoly):
        if op in P_OPS:
            raise ValueError("P-operator on P-free space")
        if not 0 <= var < fn.nvars:
            raise IndexError(var)
        if op == "E":
            return _kpoly_shift(fn, var, e)
        if e < 0:
            raise ValueError("negative power of delta is not defined")
        for _ in range(e):
            fn = _kpoly_shift(fn, var, 1) - fn
        return fn
    if not isinstance(fn, XPoly):
        raise TypeError(f"expected KPoly or XPoly, got {type(fn).__name__}")
    if not 0 <= var < fn.nvars:
        raise IndexError(var)
    return _xpoly_apply_table(fn, var, lambda d: op_table(op, e, d))


# --------------------------------------------------------------------------
# sums, merges, P-binomials
# --------------------------------------------------------------------------

def definite_p_sum(fn: XPoly, sum_var: int, lower_var: int, upper_var: int) -> XPoly:
    """sum_{x=a}^{b} P^x fn, with X_lower = P^a and X_upper = P^{b+1}.

    The summation variable disappears; indices of the result are those of
    ``fn`` with ``sum_var`` removed. The monomial X^d maps to
    (X_upper^{d+1} - X_lower^{d+1}) / (P^{d+1} - 1).
    """
    if sum_var in (lower_var, upper_var):
        raise ValueError("bounds must be distinct from the summation variable")
    if any(x < 0 for ex in fn.terms for x in ex):
        raise ValueError("invariant violation")
    degrees = {ex[sum_var] for ex in fn.terms}
    needed: set = set()
    for d in degrees:
        needed.update(divisors(d + 1))
    fill = {}
    for d in degrees:
        poly = [1]
        for k in sorted(needed - set(divisors(d + 1))):
            poly = _upoly_mul(poly, cyclotomic(k))
        fill[d] = poly

    lo = lower_var - (lower_var > sum_var)
    up = upper_var - (upper_var > sum_var)
    out: dict = {}
    for ex, c in fn.terms.items():
        d = ex[sum_var]
        c = cmul_upoly(c, fill[d]) if len(fill[d]) > 1 else c
        base = list(ex[:sum_var] + ex[sum_var + 1:])
        for idx, sign in ((up, 1), (lo, -1)):
            ne = list(base)
            ne[idx] += d + 1
            ne = tuple(ne)
            tgt = out.setdefault(ne, {})
            cadd_into(tgt, c, sign)
            if not tgt:
                del out[ne]
    den = dict(fn.den)
    for k in needed:
        den[k] = den.get(k, 0) + 1
    return XPoly._raw(fn.nvars - 1, out, den).simplify()


def merge_vars(fn: XPoly, keep: int, drop: int) -> XPoly:
    """Substitute X_drop <- X_keep and remove ``drop`` from the variables."""
    if keep == drop:
        raise ValueError("keep and drop must differ")
    out: dict = {}
    for ex, c in fn.terms.items():
        ne = list(ex)
        ne[keep] += ne[drop]
        del ne[drop]
        ne = tuple(ne)
        tgt = out.setdefault(ne, {})
        cadd_into(tgt, c)
        if not tgt:
            del out[ne]
    return XPoly._raw(fn.nvars - 1, out, dict(fn.den))


def pbinom_xpoly(var: int, m: int, nvars: int = 1) -> XPoly:
    """P-binomial [k_var choose m] as a degree-m polynomial in X_var."""
    if m < 0:
        raise ValueError("m must be non-negative")
    # prod_{j<m} (1 - P^{-j} X) / prod_{j=1}^{m} (1 - P^j)
    rows = {0: {(0, 0): (-1) ** m}}
    for j in range(m):
        new: dict = {}
        for d, c in rows.items():
            cadd_into(new.setdefault(d, {}), c)
            cadd_into(new.setdefault(d + 1, {}), {(p - j, q): -v for (p, q), v in c.items()})
        rows = new
    terms = {}
    for d, c in rows.items():
        ex = [0] * nvars
        ex[var] = d
        terms[tuple(ex)] = c
    den: dict = {}
    for j in range(1, m + 1):
        for k in divisors(j):
            den[k] = den.get(k, 0) + 1
    return XPoly(nvars, terms, den)


def pbinom_det(n: int, columns) -> XPoly:
    """det_{1<=i,j<=n} [k_i choose c_j]_P by memoized Laplace expansion.

    Row i only involves X_i, so each minor is a product of univariate
    factors in distinct variables and no division is ever needed.
    """
    columns = list(columns)
    if len(columns) != n:
        raise ValueError("need one column index per row")
    if any(c < 0 for c in columns):
        raise ValueError("column indices must be non-negative")
    entries = {}
    memo: dict = {}

    def entry(i, c):
        if (i, c) not in entries:
            entries[(i, c)] = pbinom_xpoly(i, c, n)
        return entries[(i, c)]

    def minor(row: int, remaining: tuple) -> XPoly:
        if row == n:
            return XPoly.const(n)
        if remaining in memo:
            return memo[remaining]
        acc = XPoly.zero(n)
        for pos, col in enumerate(remaining):
            rest = remaining[:pos] + remaining[pos + 1:]
            term = entry(row, columns[col]) * minor(row + 1, rest)
            acc = acc - term if pos % 2 else acc + term
        memo[remaining] = acc
        return acc

    return minor(0, tuple(range(n))).simplify()


# --------------------------------------------------------------------------
# SpecSet and the V operator
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecSet:
    """Finite S in Z^2 with a rational weight f on each point."""

    entries: tuple = ()

    def __post_init__(self):
        clean = tuple(((int(i), int(j)), Fraction(f)) for (i, j), f in self.entries)
        pts = [p for p, _ in clean]
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate point in SpecSet")
        object.__setattr__(self, "entries", tuple(sorted(clean)))

    @classmethod
    def from_dict(cls, mapping: dict) -> "SpecSet":
        return cls(tuple(mapping.items()))

    @classmethod
    def classical(cls) -> "SpecSet":
        """S = {(0,0)}, f = -1."""
        return cls((((0, 0), Fraction(-1)),))

    def as_dict(self) -> dict:
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_json(self) -> dict:
        return {"S": [{"i": i, "j": j, "f": format_rational(f)} for (i, j), f in self.entries]}

    @classmethod
    def from_json(cls, obj) -> "SpecSet":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            items = obj["S"]
            return cls(tuple(((int(t["i"]), int(t["j"])), parse_rational(t["f"])) for t in items))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed SpecSet: {exc}") from exc


def v_apply(fn: XPoly, t_var: int, s_var: int, spec: SpecSet) -> XPoly:
    """V_{k_t,k_s} = pqE_t pqId_s - pdelta_t pdelta_s sum f(i,j) pE_t^i pE_s^j."""
    main = apply_basic_op(apply_basic_op(fn, s_var, "pqId"), t_var, "pqE")
    if not len(spec):
        return main
    base = apply_basic_op(apply_basic_op(fn, s_var, "pdelta"), t_var, "pdelta")
    by_i: dict = {}
    for (i, j), f in spec:
        by_i.setdefault(i, []).append((j, f))
    total = main.terms
    for i, items in sorted(by_i.items()):
        inner: dict = {}
        for j, f in items:
            inner = _add_terms(inner, apply_basic_op(base, s_var, "pE", j).terms, f)
        inner = apply_basic_op(XPoly._raw(fn.nvars, inner, dict(fn.den)), t_var, "pE", i)
        total = _add_terms(total, inner.terms, -1)
    return XPoly._raw(fn.nvars, total, dict(fn.den))


def v_product(fn: XPoly, spec: SpecSet, nvars: int | None = None) -> XPoly:
    """prod_{1<=s<t<=n} V_{k_t,k_s}, factors applied in lexicographic (s,t) order."""
    n = fn.nvars if nvars is None else nvars
    for s in range(n):
        for t in range(s + 1, n):
            fn = v_apply(fn, t, s, spec)
    return fn
