"""Triangular arrays and brute-force enumerators.

Rows are stored bottom-up: ``rows[0]`` is the bottom row (a_{1,1..n}) and
``rows[-1]`` the single top entry a_{n,n}. Between two consecutive rows, the
entry at position q of the upper row sits between positions q and q+1 of the
lower row.

Enumerators recurse row by row and memoize on the current row, which keeps
everything exact and fast at desk scale (n <= 6, entries spanning <= 8).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .operators import SpecSet
from .ring import LaurentPQ


@dataclass(frozen=True)
class TriArray:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        n = len(rows)
        for idx, r in enumerate(rows):
            if len(r) != n - idx:
                raise ValueError(f"row {idx + 1} has length {len(r)}, expected {n - idx}")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def bottom(self) -> tuple:
        return self.rows[0]

    @property
    def top(self) -> int:
        return self.rows[-1][0]

    def a(self, i: int, j: int) -> int:
        """Entry a_{i,j}, 1 <= i <= j <= n."""
        if not 1 <= i <= j <= self.n:
            raise IndexError((i, j))
        return self.rows[i - 1][j - i]

    def is_gt(self) -> bool:
        return all(lo[q] <= up[q] <= lo[q + 1]
                   for lo, up in zip(self.rows, self.rows[1:]) for q in range(len(up)))

    def is_monotone(self) -> bool:
        return self.is_gt() and all(x < y for r in self.rows for x, y in zip(r, r[1:]))

    def is_weak_monotone(self) -> bool:
        # a_{i,j-1} < a_{i-1,j} for i != 1, i < j
        if not self.is_gt():
            return False
        for lo, up in zip(self.rows, self.rows[1:]):
            for q in range(len(up) - 1):
                if not up[q] < lo[q + 2]:
                    return False
        return True

    def strictly_between_count(self) -> int:
        """Entries strictly between their two lower neighbours (the -1s of the ASM)."""
        return sum(1 for lo, up in zip(self.rows, self.rows[1:])
                   for q in range(len(up)) if lo[q] < up[q] < lo[q + 1])

    def line(self, marks: dict | None = None) -> str:
        """Listing format: rows bottom-to-top, ',' within rows, '|' between rows."""
        marks = marks or {}
        out = []
        for ri, r in enumerate(self.rows):
            cells = []
            for pos, x in enumerate(r):
                if (ri, pos) in marks:
                    rr, tt = marks[(ri, pos)]
                    cells.append(f"{x}*({rr},{tt})")
                else:
                    cells.append(str(x))
            out.append(",".join(cells))
        return "|".join(out)


def _strict(row) -> bool:
    return all(x < y for x, y in zip(row, row[1:]))


def _weak(row) -> bool:
    return all(x <= y for x, y in zip(row, row[1:]))


def _interlacing_rows(row, strict: bool):
    ranges = [range(row[q], row[q + 1] + 1) for q in range(len(row) - 1)]
    for cand in itertools.product(*ranges):
        if not strict or _strict(cand):
            yield cand


# --------------------------------------------------------------------------
# monotone triangles and Gelfand-Tsetlin patterns
# --------------------------------------------------------------------------

def iter_monotone(bottom):
    """Yield every monotone triangle with the given strictly increasing bottom row."""
    bottom = tuple(bottom)
    if not _strict(bottom):
        raise ValueError("monotone triangles need a strictly increasing bottom row")

    def rec(rows):
        if len(rows[-1]) == 1:
            yield TriArray(rows)
            return
        for nxt in _interlacing_rows(rows[-1], strict=True):
            yield from rec(rows + (nxt,))

    yield from rec((bottom,))


def enumerate_monotone(bottom, top_filter: int | None = None) -> int:
    bottom = tuple(bottom)
    if not _strict(bottom):
        raise ValueError("monotone triangles need a strictly increasing bottom row")

    @lru_cache(maxsize=None)
    def count(row):
        if len(row) == 1:
            return 1 if top_filter is None or row[0] == top_filter else 0
        return sum(count(nxt) for nxt in _interlacing_rows(row, strict=True))

    return count(bottom)


def enumerate_gt(bottom) -> int:
    bottom = tuple(bottom)
    if not _weak(bottom):
        raise ValueError("Gelfand-Tsetlin patterns need a weakly increasing bottom row")

    @lru_cache(maxsize=None)
    def count(row):
        if len(row) == 1:
            return 1
        return sum(count(nxt) for nxt in _interlacing_rows(row, strict=False))

    return count(bottom)


def gt_product_formula(bottom) -> Fraction:
    k = list(bottom)
    out = Fraction(1)
    for i in range(len(k)):
        for j in range(i + 1, len(k)):
            out *= Fraction(k[j] - k[i] + j - i, j - i)
    return out


def q_weight_brute(bottom) -> LaurentPQ:
    """Sum of Q^{#strictly-between entries} over monotone triangles."""
    bottom = tuple(bottom)
    if not _strict(bottom):
        raise ValueError("monotone triangles need a strictly increasing bottom row")

    @lru_cache(maxsize=None)
    def gen(row):
        if len(row) == 1:
            return LaurentPQ.const(1)
        acc = LaurentPQ()
        for nxt in _interlacing_rows(row, strict=True):
            e = sum(1 for q, x in enumerate(nxt) if row[q] < x < row[q + 1])
            acc = acc + gen(nxt) * LaurentPQ.monomial(0, e)
        return acc

    return gen(bottom)


def p_weight_weak_brute(bottom) -> LaurentPQ:
    """P-weighted count of weak monotone triangles.

    Each entry a_{i,j} (i >= 2) with a_{i,j} < a_{i-1,j} contributes
    P^{a_{i,j}} - [a_{i,j} = a_{i,j-1}]; a missing left neighbour counts
    as not equal.
    """
    bottom = tuple(bottom)
    if not _weak(bottom):
        raise ValueError("weak monotone triangles need a weakly increasing bottom row")

    @lru_cache(maxsize=None)
    def gen(row):
        if len(row) == 1:
            return LaurentPQ.const(1)
        acc = LaurentPQ()
        for nxt in _interlacing_rows(row, strict=False):
            if any(not nxt[q] < row[q + 2] for q in range(len(nxt) - 1)):
                continue
            w = LaurentPQ.const(1)
            for q, x in enumerate(nxt):
                if x < row[q + 1]:
                    factor = LaurentPQ.monomial(x, 0)
                    if q > 0 and nxt[q - 1] == x:
                        factor = factor - 1
                    w = w * factor
            acc = acc + w * gen(nxt)
        return acc

    return gen(bottom)


# --------------------------------------------------------------------------
# S-triangles
# --------------------------------------------------------------------------

_Q = LaurentPQ.monomial(0, 1)


def _entry_weight(left: int, right: int, x: int, q_mode):
    """Weight of a non-parent entry x above (left, right); None if forbidden."""
    if q_mode is None:
        if left <= right:
            return 1 if left <= x <= right else None
        return -1 if right < x < left else None
    if left <= right:
        if not left <= x <= right:
            return None
        if left < x < right:
            return _Q
        if left == x == right:
            return 2 - _Q
        return LaurentPQ.const(1)
    if not right <= x <= left:
        return None
    if right < x < left:
        return -_Q
    return 1 - _Q


def _entry_range(left: int, right: int, q_mode):
    if q_mode is None and left > right:
        return range(right + 1, left)
    return range(min(left, right), max(left, right) + 1)


def _special_configs(row, spec: SpecSet):
    """Non row-adjacent special sets among inner positions, with S-labels."""
    L = len(row)
    inner = list(range(1, L - 1))
    points = [p for p, _ in spec]

    def rec(idx, chosen):
        if idx >= len(inner):
            yield dict(chosen)
            return
        yield from rec(idx + 1, chosen)
        pos = inner[idx]
        for pt in points:
            chosen.append((pos, pt))
            yield from rec(idx + 2, chosen)
            chosen.pop()

    yield from rec(0, [])


def _next_rows_s(row, spec: SpecSet, q_mode):
    """Yield (next_row, specials_in_row, weight_factor) for S-triangles."""
    fvals = spec.as_dict()
    for config in _special_configs(row, spec):
        fixed = {}
        wf = 1
        for pos, (r, t) in config.items():
            fixed[pos - 1] = row[pos] + r
            fixed[pos] = row[pos] + t
            wf = wf * fvals[(r, t)]
        slots = []
        for q in range(len(row) - 1):
            if q in fixed:
                slots.append(((fixed[q], 1),))
                continue
            opts = []
            for x in _entry_range(row[q], row[q + 1], q_mode):
                w = _entry_weight(row[q], row[q + 1], x, q_mode)
                if w is not None:
                    opts.append((x, w))
            slots.append(tuple(opts))
        for choice in itertools.product(*slots):
            w = wf
            for _, ew in choice:
                w = w * ew
            yield tuple(x for x, _ in choice), config, w


def _zero(q_mode):
    return Fraction(0) if q_mode is None else LaurentPQ()


def s_sum_brute(bottom, spec: SpecSet, q_mode=None):
    """Weighted sum over all S-triangles with the given bottom row.

    ``q_mode`` is None for the plain weights (a Fraction is returned), the
    string ``"Q"`` for symbolic Q (a LaurentPQ), or a rational value of Q.
    """
    bottom = tuple(int(x) for x in bottom)
    symbolic = q_mode is not None
    mode = "Q" if symbolic else None

    @lru_cache(maxsize=None)
    def total(row):
        if len(row) == 1:
            return LaurentPQ.const(1) if symbolic else Fraction(1)
        acc = _zero(mode)
        for nxt, _, w in _next_rows_s(row, spec, mode):
            sub = total(nxt)
            if sub:
                acc = acc + sub * w
        return acc

    out = total(bottom)
    if symbolic and q_mode != "Q":
        return out.subs_q(q_mode).coeff(0, 0)
    return out


def iter_s_triangles(bottom, spec: SpecSet):
    """Yield (STrianglePattern, weight) for all S-triangles with this bottom row."""
    bottom = tuple(int(x) for x in bottom)

    def rec(rows, marks, w):
        row = rows[-1]
        if len(row) == 1:
            yield STrianglePattern(TriArray(rows), dict(marks)), w
            return
        ri = len(rows) - 1
        for nxt, config, ew in _next_rows_s(row, spec, None):
            new_marks = dict(marks)
            for pos, pt in config.items():
                new_marks[(ri, pos)] = pt
            yield from rec(rows + (nxt,), new_marks, w * ew)

    yield from rec((bottom,), {}, Fraction(1))


@dataclass(frozen=True)
class STrianglePattern:
    """A triangle with marked special entries.

    ``specials`` maps (row_index, position) -- both 0-based, row 0 being the
    bottom -- to the point (r, t) of S the entry is associated with.
    """

    tri: TriArray
    specials: dict = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.tri, TriArray):
            object.__setattr__(self, "tri", TriArray(self.tri))
        rows = self.tri.rows
        for (ri, pos), (r, t) in self.specials.items():
            if not (0 <= ri < len(rows) and 1 <= pos <= len(rows[ri]) - 2):
                raise ValueError(f"special entry {(ri, pos)} is not an inner entry")
            if (ri, pos + 1) in self.specials:
                raise ValueError(f"special entries {(ri, pos)} and {(ri, pos + 1)} are row adjacent")
            x = rows[ri][pos]
            parents = (rows[ri + 1][pos - 1], rows[ri + 1][pos])
            if parents != (x + r, x + t):
                raise ValueError(f"parents {parents} of special entry {(ri, pos)} do not match offset {(r, t)}")
        for ri in range(1, len(rows)):
            lo, up = rows[ri - 1], rows[ri]
            parent_pos = set()
            for (rj, pos) in self.specials:
                if rj == ri - 1:
                    parent_pos.update((pos - 1, pos))
            for q, x in enumerate(up):
                if q in parent_pos:
                    continue
                if _entry_weight(lo[q], lo[q + 1], x, None) is None:
                    raise ValueError(
                        f"entry {x} at row {ri + 1}, position {q + 1} violates interlacing with {(lo[q], lo[q + 1])}")

    def line(self) -> str:
        return self.tri.line(self.specials)


def s_triangle_weight(pat: STrianglePattern, spec: SpecSet, q_mode=None):
    """Weight of a single S-triangle.

    Plain mode: (-1)^{#inversions} prod f(s)^{#specials at s}. With
    ``q_mode="Q"`` (or a rational Q) each non-parent entry above row 1
    carries its Q-weight instead of the inversion sign.
    """
    fvals = spec.as_dict()
    mode = None if q_mode is None else "Q"
    w = LaurentPQ.const(1) if mode else Fraction(1)
    for pt in pat.specials.values():
        if pt not in fvals:
            raise ValueError(f"special entry associated to {pt}, which is not in S")
        w = w * fvals[pt]
    rows = pat.tri.rows
    for ri in range(1, len(rows)):
        lo, up = rows[ri - 1], rows[ri]
        parent_pos = set()
        for (rj, pos) in pat.specials:
            if rj == ri - 1:
                parent_pos.update((pos - 1, pos))
        for q, x in enumerate(up):
            if q in parent_pos:
                continue
            ew = _entry_weight(lo[q], lo[q + 1], x, mode)
            if ew is None:
                raise ValueError(f"entry {x} above {(lo[q], lo[q + 1])} is not allowed")
            w = w * ew
    if mode and q_mode != "Q":
        return w.subs_q(q_mode).coeff(0, 0)
    return w
