"""Exact linear algebra over Q and over polynomial rings."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .poly import ONE, ZERO, Poly, exact_divide


class PolyMatrix:
    """Dense immutable matrix of polynomials."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence[object]]):
        rows = [tuple(Poly.coerce(x) for x in r) for r in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")
        self._e = tuple(rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]]) -> PolyMatrix:
        if not columns:
            return cls([])
        n = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list[Poly]]:
        return [list(r) for r in self._e]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def submatrix(self, rows: Iterable[int], cols: Iterable[int] | None = None) -> PolyMatrix:
        cols = list(range(self.cols)) if cols is None else list(cols)
        return PolyMatrix([[self._e[i][j] for j in cols] for i in rows])

    def subs(self, mapping) -> PolyMatrix:
        return PolyMatrix([[x.subs(mapping) for x in r] for r in self._e])

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        body = ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._e)
        return f"PolyMatrix([{body}])"


class QMatrix:
    """Dense immutable matrix of rationals."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence[object]], cols: int | None = None):
        rows = [tuple(Fraction(x) for x in r) for r in entries]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")
        self._e = tuple(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._e]

    def apply(self, v: Sequence[object]) -> list[Fraction]:
        return [sum((a * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self._e]

    def __repr__(self) -> str:
        return f"QMatrix({[[str(x) for x in r] for r in self._e]})"


def _as_rows(M) -> list[list]:
    return M.tolist() if isinstance(M, (PolyMatrix, QMatrix)) else [list(r) for r in M]


# ---------------------------------------------------------------------------
# determinants

def det_cofactor(M) -> Poly:
    """Laplace expansion along the first row (reference implementation)."""
    a = [[Poly.coerce(x) for x in r] for r in _as_rows(M)]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    return _cofactor(a, tuple(range(n)), 0, {})


def _cofactor(a, cols: tuple[int, ...], r: int, memo) -> Poly:
    # minor on rows r.. and the given columns; memoized on the column set
    if not cols:
        return ONE
    hit = memo.get(cols)
    if hit is not None:
        return hit
    acc = ZERO
    for k, j in enumerate(cols):
        x = a[r][j]
        if x.is_zero():
            continue
        sub = _cofactor(a, cols[:k] + cols[k + 1:], r + 1, memo)
        if sub.is_zero():
            continue
        term = x * sub
        acc = acc - term if k % 2 else acc + term
    memo[cols] = acc
    return acc


def det_bareiss(M) -> Poly:
    """Fraction-free one-step Bareiss elimination with row swaps."""
    a = [[Poly.coerce(x) for x in r] for r in _as_rows(M)]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                v = piv * row_i[j]
                if not aik.is_zero() and not row_k[j].is_zero():
                    v = v - aik * row_k[j]
                row_i[j] = v if prev == ONE else exact_divide(v, prev)
            row_i[k] = ZERO
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det(M) -> Poly:
    """Exact determinant of a square polynomial (or rational) matrix."""
    rows = _as_rows(M)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n <= 4:
        return det_cofactor(rows)
    # sparse symbolic matrices expand cheaply; dense ones go through Bareiss
    zeros = sum(1 for r in rows for x in r if not x)
    if zeros * 2 >= n * n and n <= 12:
        return det_cofactor(rows)
    return det_bareiss(rows)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("MUCURVE_THREADS", "1")))
    except ValueError:
        return 1


def maximal_minors(M, deleted_rows: Iterable[Iterable[int]] | None = None) -> list[tuple[tuple[int, ...], Poly]]:
    """Determinants of the square submatrices keeping ``cols`` rows.

    ``deleted_rows`` selects which row sets to delete (default: all).  The
    result is a list of (kept row indices, determinant) ordered by the kept
    row set.
    """
    rows = _as_rows(M)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    if nc > nr:
        raise ValueError("maximal minors need cols <= rows")
    if deleted_rows is None:
        keeps = list(combinations(range(nr), nc))
    else:
        keeps = []
        for dl in deleted_rows:
            dl = set(dl)
            if len(dl) != nr - nc:
                raise ValueError("each selection must delete rows - cols rows")
            keeps.append(tuple(i for i in range(nr) if i not in dl))
        keeps.sort()

    def one(keep):
        return keep, det([rows[i] for i in keep])

    workers = min(_threads(), len(keeps))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            out = list(ex.map(one, keeps))
    else:
        out = [one(k) for k in keeps]
    out.sort(key=lambda kv: kv[0])
    return out


# ---------------------------------------------------------------------------
# rational linear algebra

def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    a = [[Fraction(x) for x in r] for r in _as_rows(M)]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def _integer_vector(v: list[Fraction]) -> list[int]:
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints] if g else ints
    first = next((x for x in ints if x), 0)
    return [-x for x in ints] if first < 0 else ints


def nullspace(M, cols: int | None = None) -> list[list[int]]:
    """Right kernel basis, one vector per free column, as coprime integers."""
    rows = _as_rows(M)
    nc = len(rows[0]) if rows else (cols if cols is not None else getattr(M, "cols", 0))
    a, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][f]
        basis.append(_integer_vector(v))
    return basis


def solve(M, b: Sequence[object], cols: int | None = None) -> list[Fraction] | None:
    """One exact solution of M x = b (free variables zero), or None."""
    rows = _as_rows(M)
    nc = len(rows[0]) if rows else (cols if cols is not None else getattr(M, "cols", 0))
    sparse = []
    for r, rhs in zip(rows, b):
        d = {j: Fraction(x) for j, x in enumerate(r) if x}
        sparse.append((d, Fraction(rhs)))
    if len(b) != len(rows):
        raise ValueError("right-hand side has the wrong length")
    return solve_sparse(sparse, nc)


def solve_sparse(eqs: list[tuple[dict[int, Fraction], Fraction]], ncols: int) -> list[Fraction] | None:
    """Solve sum_j row[j] x_j = rhs for sparse dict rows; None when inconsistent.

    Pivots are chosen by scanning rows in order and taking the smallest
    column index present, so the output is deterministic.
    """
    pivot_rows: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
    order: list[int] = []
    for row, rhs in eqs:
        row = dict(row)
        # pivot rows never contain other pivot columns, so one pass suffices
        for c in [c for c in row if c in pivot_rows]:
            f = row.get(c)
            if not f:
                continue
            prow, prhs = pivot_rows[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            rhs = rhs - f * prhs
        if not row:
            if rhs:
                return None
            continue
        c = min(row)
        inv = 1 / row[c]
        row = {k: v * inv for k, v in row.items()}
        rhs = rhs * inv
        # keep pivot rows fully reduced against each other
        for pc in order:
            prow, prhs = pivot_rows[pc]
            f = prow.get(c)
            if f:
                for k, v in row.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
                pivot_rows[pc] = (prow, prhs - f * rhs)
        pivot_rows[c] = (row, rhs)
        order.append(c)
    x = [Fraction(0)] * ncols
    for c in order:
        x[c] = pivot_rows[c][1]
    return x
