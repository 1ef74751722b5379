"""Alternating sign matrices, their counts and 2-enumerations."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from .triangles import TriArray, iter_monotone, q_weight_brute
from .recursions import Variant, alpha_point_recursion
from .operators import SpecSet


def _check_alternating(line, what: str, first_positive: bool = True) -> None:
    last = 0
    for x in line:
        if x not in (-1, 0, 1):
            raise ValueError(f"{what}: entry {x} not in {{-1,0,1}}")
        if x == 0:
            continue
        if last == 0 and first_positive and x != 1:
            raise ValueError(f"{what}: first nonzero entry is -1")
        if x == last:
            raise ValueError(f"{what}: nonzero entries do not alternate")
        last = x


@dataclass(frozen=True)
class PartialAsm:
    """m x n matrix: rows are ASM-like, columns start with a 1 if nonzero."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        self.validate()

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def validate(self) -> None:
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("rows have different lengths")
        if self.m > self.n:
            raise ValueError(f"partial ASMs need m <= n, got {self.m} x {self.n}")
        for i, r in enumerate(self.rows, 1):
            _check_alternating(r, f"row {i}")
            if sum(r) != 1:
                raise ValueError(f"row {i} sums to {sum(r)}, not 1")
        for j in range(self.n):
            _check_alternating([r[j] for r in self.rows], f"column {j + 1}")

    def minus_ones(self) -> int:
        return sum(r.count(-1) for r in self.rows)

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in r) + "\n" for r in self.rows)

    @classmethod
    def from_text(cls, text: str):
        return cls(tuple(tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()))


class AsmMatrix(PartialAsm):
    """Square ASM: additionally every column sums to 1."""

    def validate(self) -> None:
        if self.m != self.n:
            raise ValueError(f"ASM must be square, got {self.m} x {self.n}")
        super().validate()
        for j in range(self.n):
            s = sum(r[j] for r in self.rows)
            if s != 1:
                raise ValueError(f"column {j + 1} sums to {s}, not 1")


def _partial_to_rows(a: PartialAsm) -> list:
    sums = [0] * a.n
    out = []
    for r in a.rows:
        sums = [s + x for s, x in zip(sums, r)]
        out.append(tuple(j + 1 for j, s in enumerate(sums) if s == 1))
    return out


def asm_to_mt(a: PartialAsm) -> TriArray:
    """Monotone triangle whose row of length i lists the columns with partial sum 1 after i matrix rows."""
    if not isinstance(a, PartialAsm):
        a = AsmMatrix(a)
    return TriArray(tuple(reversed(_partial_to_rows(a))))


def mt_to_asm(t: TriArray) -> PartialAsm:
    """Inverse of :func:`asm_to_mt`.

    A triangle with bottom (1..n) gives an n x n ASM; any monotone triangle with
    m rows and bottom inside [1, n] gives a partial m x n ASM when ``n`` is passed
    through :func:`mt_to_partial`.
    """
    if not isinstance(t, TriArray):
        t = TriArray(t)
    n = t.n
    if t.bottom != tuple(range(1, n + 1)):
        raise ValueError("bottom row must be (1, ..., n)")
    if not t.is_monotone():
        raise ValueError("not a monotone triangle")
    return AsmMatrix(_rows_from_triangle(t, n))


def mt_to_partial(t: TriArray, n: int) -> PartialAsm:
    if not t.is_monotone():
        raise ValueError("not a monotone triangle")
    if t.bottom and (t.bottom[0] < 1 or t.bottom[-1] > n):
        raise ValueError(f"bottom row must lie inside [1, {n}]")
    return PartialAsm(_rows_from_triangle(t, n))


def _rows_from_triangle(t: TriArray, n: int) -> tuple:
    prev = [0] * n
    rows = []
    for tri_row in reversed(t.rows):
        cur = [0] * n
        for c in tri_row:
            cur[c - 1] = 1
        rows.append(tuple(c - p for c, p in zip(cur, prev)))
        prev = cur
    return tuple(rows)


def iter_asms(n: int):
    """All n x n ASMs, via monotone triangles with bottom (1..n)."""
    if n == 0:
        return
    for t in iter_monotone(range(1, n + 1)):
        yield _rows_from_triangle(t, n)


def iter_partial_asms(m: int, n: int):
    if m > n:
        raise ValueError(f"partial ASMs need m <= n, got {m} x {n}")
    for bottom in itertools.combinations(range(1, n + 1), m):
        for t in iter_monotone(bottom):
            yield _rows_from_triangle(t, n)


def census(rows_iter) -> dict:
    """{#(-1): count} over an iterable of matrices (as row tuples)."""
    c = Counter(sum(r.count(-1) for r in rows) for rows in rows_iter)
    return dict(sorted(c.items()))


# --------------------------------------------------------------------------
# closed-form counts
# --------------------------------------------------------------------------

def asm_counts(n: int, i: int | None = None) -> int:
    """A_n, or A_{n,i} (the 1 of the first row in column i) when i is given."""
    if n < 1:
        raise ValueError("n must be positive")
    if i is None:
        num = prod(factorial(3 * j + 1) for j in range(n))
        den = prod(factorial(n + j) for j in range(n))
        return num // den
    if not 1 <= i <= n:
        return 0
    val = Fraction(comb(n + i - 2, i - 1) * factorial(2 * n - i - 1), factorial(n - i))
    for j in range(n - 1):
        val *= Fraction(factorial(3 * j + 1), factorial(n + j))
    if val.denominator != 1:
        raise ArithmeticError("refined count is not an integer")
    return int(val)


def pochhammer(a, j: int) -> Fraction:
    """Rising factorial (a)_j, with (a)_{-k} = 1/((a-1)(a-2)...(a-k))."""
    a = Fraction(a)
    out = Fraction(1)
    if j >= 0:
        for t in range(j):
            out *= a + t
        return out
    den = Fraction(1)
    for t in range(1, -j + 1):
        den *= a - t
    if den == 0:
        raise ZeroDivisionError(f"({a})_{j} is undefined")
    return out / den


def two_enum_total(k) -> int:
    k = list(k)
    n = len(k)
    val = Fraction(2 ** comb(n, 2))
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(k[j] - k[i], j - i)
    return int(val)


def two_enum_refined(n: int, l: int) -> int:
    if not 1 <= l <= n:
        raise ValueError("column out of range")
    return 2 ** comb(n - 1, 2) * comb(n - 1, l - 1)


def two_enum_vsasm_claim(n: int) -> int:
    return 2 ** ((n - 1) * (n - 2))


def two_enum_partial(m: int, n: int) -> int:
    if m > n:
        raise ValueError(f"partial ASMs need m <= n, got {m} x {n}")
    val = Fraction(2 ** comb(m, 2))
    for i in range(1, m + 1):
        val *= pochhammer(n - m + i, i) / pochhammer(i, i)
    return int(val)


def two_enum(kind: str, *args) -> int:
    table = {
        "total": two_enum_total,
        "refined": two_enum_refined,
        "vsasm_claim": two_enum_vsasm_claim,
        "partial": two_enum_partial,
    }
    if kind not in table:
        raise ValueError(f"unknown 2-enumeration kind {kind!r}")
    return table[kind](*args)


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------

def partial_asm_brute(m: int, n: int, q0) -> Fraction:
    """sum over partial m x n ASMs of q0^{#(-1)}, through monotone triangles."""
    if m > n:
        raise ValueError(f"partial ASMs need m <= n, got {m} x {n}")
    if m == 0:
        return Fraction(1)
    total = Fraction(0)
    for bottom in itertools.combinations(range(1, n + 1), m):
        total += q_weight_brute(bottom).evaluate(1, q0)
    return total


def refined_two_enum_brute(n: int, l: int) -> int:
    return sum(2 ** sum(r.count(-1) for r in rows)
               for rows in iter_asms(n) if rows[0][l - 1] == 1)


def vsasm_brute(order: int) -> dict:
    """Census {#(-1): count} of ASMs fixed by left-right reflection."""
    if order % 2 == 0 or order < 1:
        raise ValueError("vertically symmetric ASMs exist only in odd order")
    if order > 7:
        raise ValueError("order too large for exhaustive enumeration")
    return census(rows for rows in iter_asms(order)
                  if all(r == r[::-1] for r in rows))


# --------------------------------------------------------------------------
# doubly refined conjecture (report-only)
# --------------------------------------------------------------------------

def doubly_refined_q1(n: int, j: int, p: int) -> Fraction:
    """Value of the conjectured closed form; raises ZeroDivisionError where undefined."""
    if not 1 <= j <= n:
        raise ValueError("column out of range")
    a_prev = asm_counts(n - 1, j) if n >= 2 else 0
    num = asm_counts(n) * pochhammer(n - j + 1, 2 * j - 3) * n * (n - 2 * j + 1) * (n + j - 1)
    den = (2 * n - j - 1) * pochhammer(2 * n - j + 1, j - 1) * factorial(j - 1)
    if den == 0:
        raise ZeroDivisionError("formula denominator vanishes")
    return (j - p) * a_prev + Fraction(num) / den


def doubly_refined_lhs(n: int, j: int, p: int) -> Fraction:
    args = [c - p for c in range(1, n + 1) if c != j]
    return alpha_point_recursion(args, Variant("P1Q1", SpecSet.classical(), 1))


def doubly_refined_check(n: int, j: int, p: int) -> dict:
    """Compare the conjectured formula with alpha; never raises on disagreement."""
    lhs = doubly_refined_lhs(n, j, p)
    try:
        rhs = doubly_refined_q1(n, j, p)
    except ZeroDivisionError as exc:
        return {"n": n, "j": j, "p": p, "alpha": lhs, "formula": None,
                "agree": False, "note": str(exc)}
    return {"n": n, "j": j, "p": p, "alpha": lhs, "formula": rhs,
            "agree": lhs == rhs, "difference": rhs - lhs}
