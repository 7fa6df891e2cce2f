"""Sylvester matrices, resultants, first-order subresultants and the D-determinants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .linalg import PolyMatrix, det, solve_sparse
from .poly import ONE, ZERO, Poly, var

X1, X2 = var("X1"), var("X2")


def W(i: int) -> Poly:
    return var(f"W{i}")


def Z(i: int) -> Poly:
    """Border variable of the subresultant determinants."""
    return var(f"Z{i}")


@dataclass(frozen=True)
class FormPair:
    """f1 = sum U_i X1^(d1-i) X2^i and f2 = sum V_j X1^(d2-j) X2^j."""

    U: tuple[Poly, ...]
    V: tuple[Poly, ...]

    def __init__(self, U: Sequence[object], V: Sequence[object], ordered: bool = True):
        U = tuple(Poly.coerce(u) for u in U)
        V = tuple(Poly.coerce(v) for v in V)
        if len(U) < 2 or len(V) < 2:
            raise ValueError("both forms must have degree at least 1")
        if ordered and len(U) > len(V):
            raise ValueError("degrees must satisfy d1 <= d2")
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "V", V)

    @classmethod
    def from_forms(cls, f1: Poly, f2: Poly, d1: int | None = None, d2: int | None = None, ordered: bool = True) -> FormPair:
        from .mubasis import binary_coeffs

        d1 = f1.degree(["X1", "X2"]) if d1 is None else d1
        d2 = f2.degree(["X1", "X2"]) if d2 is None else d2
        return cls(binary_coeffs(f1, d1), binary_coeffs(f2, d2), ordered)

    @classmethod
    def generic(cls, d1: int, d2: int) -> FormPair:
        return cls([var(f"U{i}") for i in range(d1 + 1)], [var(f"V{j}") for j in range(d2 + 1)])

    @property
    def d1(self) -> int:
        return len(self.U) - 1

    @property
    def d2(self) -> int:
        return len(self.V) - 1

    @property
    def delta(self) -> int:
        return self.d1 + self.d2 - 2

    @property
    def f1(self) -> Poly:
        return _form(self.U)

    @property
    def f2(self) -> Poly:
        return _form(self.V)

    def subs(self, mapping) -> FormPair:
        return FormPair([u.subs(mapping) for u in self.U], [v.subs(mapping) for v in self.V], False)


def _form(c: Sequence[Poly]) -> Poly:
    d = len(c) - 1
    acc = ZERO
    for i, x in enumerate(c):
        if x:
            acc = acc + x * X1 ** (d - i) * X2**i
    return acc


def _shifted_columns(coeffs: Sequence[Poly], ncols: int, nrows: int) -> list[list[Poly]]:
    cols = []
    for j in range(ncols):
        col = [ZERO] * nrows
        for k, c in enumerate(coeffs):
            col[j + k] = c
        cols.append(col)
    return cols


def sylvester_matrix(fp: FormPair) -> PolyMatrix:
    """(delta+2) square matrix: d2 shifted U-columns, then d1 shifted V-columns."""
    n = fp.d1 + fp.d2
    cols = _shifted_columns(fp.U, fp.d2, n) + _shifted_columns(fp.V, fp.d1, n)
    return PolyMatrix.from_columns(cols)


def resultant(fp: FormPair) -> Poly:
    return det(sylvester_matrix(fp))


def bordered_matrix(fp: FormPair, border: Sequence[object] | None = None) -> PolyMatrix:
    """(delta+1) square matrix: d2-1 U-columns, d1-1 V-columns, border column."""
    n = fp.delta + 1
    if border is None:
        border = [Z(i) for i in range(n)]
    cols = _shifted_columns(fp.U, fp.d2 - 1, n) + _shifted_columns(fp.V, fp.d1 - 1, n)
    cols.append(list(border))
    return PolyMatrix.from_columns(cols)


def subresultants(fp: FormPair) -> list[Poly]:
    """[SRes_0, ..., SRes_delta], read off the border-column expansion.

    The bordered determinant equals sum_i SRes_(delta-i) * Z_i, so
    SRes_(delta-i) is the signed cofactor of row i in the last column.
    """
    n = fp.delta + 1
    M = bordered_matrix(fp, [ZERO] * n).tolist()
    out = [ZERO] * n
    for i in range(n):
        minor = [r[:-1] for k, r in enumerate(M) if k != i]
        c = det(minor)
        out[fp.delta - i] = -c if (i + n - 1) % 2 else c
    return out


def _check_nu(fp: FormPair, nu: int, top: int) -> None:
    if not 0 <= nu <= top:
        raise ValueError(f"nu must lie in [0, {top}]")


def D_matrix(fp: FormPair, nu: int) -> PolyMatrix:
    """Matrix of D(nu): size delta-nu+3, last row carries X1^nu .. X2^nu."""
    _check_nu(fp, nu, fp.d1 - 1)
    n = fp.delta - nu + 3
    w = [W(i) for i in range(fp.delta - 2 * nu + 2)]
    cols = _shifted_columns(fp.U, fp.d2 - nu, n) + _shifted_columns(fp.V, fp.d1 - nu, n)
    wcols = _shifted_columns(w, nu + 1, n)
    for j, col in enumerate(wcols):
        col[n - 1] = X1 ** (nu - j) * X2**j
    return PolyMatrix.from_columns(cols + wcols)


def D_determinant(fp: FormPair, nu: int) -> Poly:
    return det(D_matrix(fp, nu))


def D1_matrix(fp: FormPair, nu: int) -> PolyMatrix:
    """Matrix of D_1(nu): size delta-nu+1 with one border column and nu W-columns."""
    _check_nu(fp, nu, fp.d1 - 1)
    n = fp.delta - nu + 1
    w = [W(i) for i in range(fp.delta - 2 * nu + 2)]
    cols = _shifted_columns(fp.U, fp.d2 - nu - 1, n) + _shifted_columns(fp.V, fp.d1 - nu - 1, n)
    cols.append([Z(i) for i in range(n)])
    cols += _shifted_columns(w, nu, n)
    return PolyMatrix.from_columns(cols)


def D1_determinant(fp: FormPair, nu: int) -> Poly:
    return det(D1_matrix(fp, nu))


def h_form(fp: FormPair, nu: int) -> Poly:
    """h = sum W_i X1^(delta-2nu+1-i) X2^i."""
    k = fp.delta - 2 * nu + 1
    return _form([W(i) for i in range(k + 1)])


def phi_form(fp: FormPair, nu: int) -> Poly:
    """The generic form sum Z_i X1^(delta-nu-i) X2^i."""
    return _form([Z(i) for i in range(fp.delta - nu + 1)])


def D_beta_coefficients(fp: FormPair, nu: int) -> dict[tuple[int, ...], Poly]:
    """W-monomial coefficients of D(nu); keys are exponent vectors over W_0.."""
    _check_nu(fp, nu, fp.d1 - 1)
    D = D_determinant(fp, nu)
    names = [f"W{i}" for i in range(fp.delta - 2 * nu + 2)]
    return {k: v for k, v in sorted(D.coefficients(names).items(), reverse=True)}


def D_i_family(fp: FormPair) -> list[Poly]:
    """[D_0, ..., D_(delta-1)] with D(1) = sum D_i W_i."""
    coeffs = D_beta_coefficients(fp, 1)
    n = fp.delta
    out = []
    for i in range(n):
        key = tuple(1 if k == i else 0 for k in range(n))
        out.append(coeffs.get(key, ZERO))
    return out


# ---------------------------------------------------------------------------
# the derivative-of-resultant congruence

def _monomials(names: Sequence[str], degs: Sequence[int]) -> list[Poly]:
    """All monomials with per-variable degree bounds."""
    out = []
    for exps in product(*(range(d + 1) for d in degs)):
        out.append(Poly.monomial(dict(zip(names, exps))))
    return out


def ideal_member_bounded(F: Poly, gens: Sequence[Poly], names: Sequence[str], bounds: Sequence[Sequence[int]]) -> list[Poly] | None:
    """Cofactors A_k with F = sum A_k gens[k], each A_k supported on monomials
    within the per-variable degree bounds; None when no such cofactors exist.
    Coefficients of F and gens may involve other variables only if those are
    listed in ``names`` too."""
    unknowns = []
    for k, b in enumerate(bounds):
        for m in _monomials(names, b):
            unknowns.append((k, m))
    rows: dict[int, dict[int, Fraction]] = {}
    for col, (k, m) in enumerate(unknowns):
        prod_ = gens[k] * m
        for mono, c in prod_.terms.items():
            rows.setdefault(mono, {})[col] = Fraction(c)
    rhs = {mono: Fraction(c) for mono, c in F.terms.items()}
    for mono in rhs:
        rows.setdefault(mono, {})
    eqs = [(rows[m], rhs.get(m, Fraction(0))) for m in sorted(rows, reverse=True)]
    x = solve_sparse(eqs, len(unknowns))
    if x is None:
        return None
    cof = [ZERO] * len(gens)
    for (k, m), v in zip(unknowns, x):
        if v:
            cof[k] = cof[k] + m.scale(v)
    return cof


def jacobian_factor(g1: Poly, g2: Poly, tname: str, xname: str = "x") -> Poly:
    """det [[dg1/dT, dg2/dT], [dg1/dX1, dg2/dX1]] evaluated at (X1, X2) = (x, 1)."""
    at = {"X1": var(xname), "X2": ONE}
    a = g1.diff(tname).subs(at)
    b = g2.diff(tname).subs(at)
    c = g1.diff("X1").subs(at)
    d = g2.diff("X1").subs(at)
    return a * d - b * c


def congruence_sign(d1: int, d2: int) -> int:
    """Sign in dRes/dT == sign * J(x) * SRes_0: the Laplace expansion along the
    last two Sylvester rows uses columns d2 and d1+d2, giving (-1)^d1."""
    return -1 if d1 % 2 else 1


def resultant_derivative_congruence(g1: Poly, g2: Poly, tname: str = "T", xname: str = "x", sign: int | None = None) -> bool:
    """Check dRes/dT == sign * J(x) * SRes_0 modulo (g1(x,1), g2(x,1)) in Q[T, x].

    ``sign`` defaults to congruence_sign(d1, d2).  A True answer comes with
    explicit cofactors; False means none exist within the degree bounds.
    """
    d1 = g1.degree(["X1", "X2"])
    d2 = g2.degree(["X1", "X2"])
    if min(d1, d2) < 2:
        raise ValueError("both forms must have degree at least 2")
    if sign is None:
        sign = congruence_sign(d1, d2)
    fp = FormPair.from_forms(g1, g2, d1, d2, ordered=False)
    res = resultant(fp)
    sres0 = subresultants(fp)[0]
    J = jacobian_factor(g1, g2, tname, xname)
    diff = res.diff(tname) - (J * sres0).scale(sign)
    if diff.is_zero():
        return True
    at = {"X1": var(xname), "X2": ONE}
    a = g1.subs(at)
    b = g2.subs(at)
    dt = diff.degree_in(tname)
    dx = diff.degree_in(xname)
    bound = [dt + 1, dx + max(d1, d2)]
    return ideal_member_bounded(diff, [a, b], [tname, xname], [bound, bound]) is not None
