"""Sylvester and Morley forms, the M_nu minors, and the inertia-form membership oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .linalg import PolyMatrix, det, maximal_minors, rank, solve_sparse
from .poly import (
    ONE,
    ZERO,
    Poly,
    bihomogeneous_component,
    content_primitive,
    exact_divide,
    var,
)
from .resultants import FormPair, D_beta_coefficients, _shifted_columns, resultant

X1, X2, Y1, Y2 = var("X1"), var("X2"), var("Y1"), var("Y2")
XV = ("X1", "X2")
YV = ("Y1", "Y2")
TV = ("T1", "T2", "T3")


# ---------------------------------------------------------------------------
# Sylvester forms

def sylvester_split(f: Poly, beta: tuple[int, int]) -> tuple[Poly, Poly]:
    """f = X1^(b1+1) f_1 + X2^(b2+1) f_2, routing by the X1-exponent."""
    b1, b2 = beta
    one = {}
    two = {}
    for (a, b), c in f.coefficients(XV).items():
        if a >= b1 + 1:
            one[(a - b1 - 1, b)] = c
        elif b >= b2 + 1:
            two[(a, b - b2 - 1)] = c
        else:
            raise ValueError("form degree too small for this split")
    def build(parts):
        acc = ZERO
        for (a, b), c in parts.items():
            acc = acc + c * X1**a * X2**b
        return acc
    return build(one), build(two)


def sylvester_form(fp: FormPair, beta: tuple[int, int]) -> Poly:
    b1, b2 = beta
    if b1 < 0 or b2 < 0 or b1 + b2 > fp.d1 - 1:
        raise ValueError("Sylvester forms need |beta| <= d1 - 1")
    f11, f12 = sylvester_split(fp.f1, beta)
    f21, f22 = sylvester_split(fp.f2, beta)
    return f11 * f22 - f12 * f21


def sylvester_forms(fp: FormPair, order: int) -> dict[tuple[int, int], Poly]:
    """All sylv_beta with |beta| = order, keyed by beta (beta_1 descending)."""
    return {(order - j, j): sylvester_form(fp, (order - j, j)) for j in range(order + 1)}


# ---------------------------------------------------------------------------
# Morley forms

@dataclass(frozen=True)
class MorleyForm:
    value: Poly
    delta: int

    def component(self, xdeg: int) -> Poly:
        """The part of X-degree xdeg and Y-degree delta - xdeg."""
        return bihomogeneous_component(self.value, xdeg, self.delta - xdeg)

    @property
    def components(self) -> dict[tuple[int, int], Poly]:
        return {(a, self.delta - a): self.component(a) for a in range(self.delta + 1)}


def to_y(f: Poly) -> Poly:
    return f.subs({"X1": Y1, "X2": Y2})


def swap_xy(f: Poly) -> Poly:
    return f.subs({"X1": Y1, "X2": Y2, "Y1": X1, "Y2": X2})


def morley_decomposition(f: Poly) -> tuple[Poly, Poly]:
    mid = f.subs({"X1": Y1})
    h1 = exact_divide(f - mid, X1 - Y1)
    h2 = exact_divide(mid - to_y(f), X2 - Y2)
    return h1, h2


def morley_form(fp: FormPair) -> MorleyForm:
    h11, h12 = morley_decomposition(fp.f1)
    h21, h22 = morley_decomposition(fp.f2)
    return MorleyForm(h11 * h22 - h12 * h21, fp.delta)


# ---------------------------------------------------------------------------
# the matrices M_nu

def _check_M_range(fp: FormPair, nu: int) -> None:
    if not fp.d1 - 1 <= nu <= fp.d2 - 2:
        raise ValueError(f"M_nu needs {fp.d1 - 1} <= nu <= {fp.d2 - 2}")


def M_matrix(fp: FormPair, nu: int, morley: MorleyForm | None = None) -> PolyMatrix:
    """Rows: Y^beta, |beta| = delta - nu, Y1 first.  Columns: shifted f1, then
    the Morley coefficients q_beta(X) of bidegree (nu, delta - nu)."""
    _check_M_range(fp, nu)
    n = fp.delta - nu + 1
    cols = _shifted_columns(fp.U, fp.delta - nu - fp.d1 + 1, n)
    morley = morley or morley_form(fp)
    comp = morley.component(nu).coefficients(YV)
    cols.append([comp.get((n - 1 - i, i), ZERO) for i in range(n)])
    return PolyMatrix.from_columns(cols)


def M_minors(fp: FormPair, nu: int, morley: MorleyForm | None = None) -> list[tuple[tuple[int, ...], Poly]]:
    """Maximal minors of M_nu as (deleted rows, determinant), deleted sets ascending."""
    M = M_matrix(fp, nu, morley)
    out = []
    for keep, val in maximal_minors(M):
        deleted = tuple(i for i in range(M.rows) if i not in keep)
        out.append((deleted, val))
    out.sort(key=lambda kv: kv[0])
    return out


def iterated_sylvester(fp: FormPair) -> dict[int, Poly]:
    """{nu: h_nu} for nu = delta .. 0 with h_delta = sylv_(0,0)(f1, f2)."""
    if fp.d1 != 1:
        raise ValueError("iterated Sylvester forms need d1 = 1")
    out = {fp.delta: sylvester_form(fp, (0, 0))}
    for nu in range(fp.delta - 1, -1, -1):
        prev = out[nu + 1]
        pair = FormPair.from_forms(fp.f1, prev, 1, nu + 1)
        out[nu] = sylvester_form(pair, (0, 0))
    return out


# ---------------------------------------------------------------------------
# membership oracle

def _monomials(names: Sequence[str], deg: int) -> list[Poly]:
    if deg < 0:
        return []
    if not names:
        return [ONE] if deg == 0 else []
    out = []
    for exps in product(range(deg + 1), repeat=len(names) - 1):
        s = sum(exps)
        if s <= deg:
            out.append(Poly.monomial(dict(zip(names, exps + (deg - s,)))))
    return out


def _degrees(f: Poly, groups: Sequence[Sequence[str]]) -> tuple[int, ...] | None:
    degs = []
    for g in groups:
        if not f.is_homogeneous(g):
            return None
        degs.append(f.degree(g))
    return tuple(degs)


def graded_membership(F: Poly, gens: Sequence[Poly], groups: Sequence[Sequence[str]]) -> list[Poly] | None:
    """Cofactors with F = sum A_k gens[k], or None.

    F and every generator must be homogeneous in each variable group; the
    cofactors range over all monomials of the complementary multidegree, so
    over the ring generated by the grouped variables this decides membership
    in that multidegree exactly.  Variables outside the groups are treated
    as coefficients that the cofactors may not involve.
    """
    if F.is_zero():
        return [ZERO] * len(gens)
    target = _degrees(F, groups)
    if target is None:
        raise ValueError("membership target is not multihomogeneous")
    unknowns = []
    for k, g in enumerate(gens):
        if g.is_zero():
            continue
        gd = _degrees(g, groups)
        if gd is None:
            raise ValueError("generator is not multihomogeneous")
        need = [t - d for t, d in zip(target, gd)]
        if min(need) < 0:
            continue
        mons = [ONE]
        for names, dg in zip(groups, need):
            mons = [a * b for a in mons for b in _monomials(list(names), dg)]
        for m in mons:
            unknowns.append((k, m))
    rows: dict[int, dict[int, Fraction]] = {}
    for col, (k, m) in enumerate(unknowns):
        for mono, c in (gens[k] * m).terms.items():
            rows.setdefault(mono, {})[col] = Fraction(c)
    for mono in F.terms:
        rows.setdefault(mono, {})
    eqs = [(rows[mono], Fraction(F.terms.get(mono, 0))) for mono in sorted(rows, reverse=True)]
    x = solve_sparse(eqs, len(unknowns))
    if x is None:
        return None
    cof = [ZERO] * len(gens)
    for (k, m), v in zip(unknowns, x):
        if v:
            cof[k] = cof[k] + m.scale(v)
    return cof


def in_ideal(F: Poly, gens: Sequence[Poly], groups: Sequence[Sequence[str]], split: Sequence[str] = ()) -> bool:
    """Membership, splitting F first into coefficients of the ``split`` variables
    (which the generators must not involve)."""
    if split:
        parts = F.coefficients(split).values()
    else:
        parts = [F]
    for part in parts:
        for comp in _multihomogeneous_parts(part, groups):
            if graded_membership(comp, gens, groups) is None:
                return False
    return True


def _multihomogeneous_parts(F: Poly, groups: Sequence[Sequence[str]]) -> list[Poly]:
    buckets: dict[tuple[int, ...], dict] = {}
    for exps, c in F.items():
        key = tuple(sum(exps.get(n, 0) for n in g) for g in groups)
        buckets.setdefault(key, {})
        buckets[key][tuple(sorted(exps.items()))] = c
    out = []
    for key in sorted(buckets):
        acc = ZERO
        for exps, c in buckets[key].items():
            acc = acc + Poly.monomial(dict(exps), c)
        out.append(acc)
    return out


def is_inertia_form(F: Poly, mb, k: int) -> bool:
    """X1^k F and X2^k F both lie in (p, q), cofactors of bounded bidegree."""
    if F.is_zero():
        return True
    groups = (XV, TV)
    for x in (X1, X2):
        if graded_membership(F * x**k, [mb.p, mb.q], groups) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# generator sets

@dataclass(frozen=True)
class Generator:
    tag: str
    index: tuple[int, ...]
    form: Poly
    scale: Fraction = Fraction(1)

    @property
    def xdeg(self) -> int:
        return self.form.degree(XV)

    @property
    def tdeg(self) -> int:
        return self.form.degree(TV)

    def label(self) -> str:
        if not self.index:
            return self.tag
        return f"{self.tag}[{','.join(str(i) for i in self.index)}]"


@dataclass(frozen=True)
class GeneratorSet:
    mu_case: str
    generators: tuple[Generator, ...]
    complete: bool
    condition: str
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def flag(self) -> str:
        return "complete" if self.complete else "partial"

    def forms(self) -> list[Poly]:
        return [g.form for g in self.generators]


_TAG_ORDER = {"p": 0, "q": 1, "Res": 2, "D_beta": 3, "detM": 4, "Delta": 5, "sylv": 6}


def _normalized(tag: str, index, F: Poly) -> Generator | None:
    if F.is_zero():
        return None
    c, G = content_primitive(F)
    return Generator(tag, tuple(index), G, c)


def moving_curve_generators(mb, deg_phi: int | None = None) -> GeneratorSet:
    """Inertia forms spanning the moving curve ideal in every X-degree."""
    from .mubasis import degree_of_map

    fp = mb.form_pair()
    d1, d2, delta = fp.d1, fp.d2, fp.delta
    mu = mb.mu
    gens: list[Generator] = []
    gens.append(_normalized("p", (), mb.p))
    gens.append(_normalized("q", (), mb.q))
    notes = []
    for nu in range(0, d1 - 1):
        coeffs = D_beta_coefficients(fp, nu)
        if nu == 0:
            gens.append(_normalized("Res", (), coeffs[next(iter(coeffs))]))
            continue
        for beta, F in coeffs.items():
            gens.append(_normalized("D_beta", (nu,) + beta, F))
    morley = morley_form(fp) if d1 - 1 <= d2 - 2 else None
    for nu in range(d1 - 1, d2 - 1):
        for deleted, F in M_minors(fp, nu, morley):
            if nu == 0:
                gens.append(_normalized("Res", (), F))
                continue
            tag = "detM" if d1 == 1 else "Delta"
            gens.append(_normalized(tag, (nu,) + deleted, F))
    for order in range(0, d1):
        for beta, F in sylvester_forms(fp, order).items():
            gens.append(_normalized("sylv", beta, F))
    seen = set()
    unique = []
    for g in gens:
        if g is None:
            continue
        key = g.form
        if key in seen or (-key) in seen:
            continue
        seen.add(key)
        unique.append(g)
    unique.sort(key=lambda g: (_TAG_ORDER[g.tag], g.index))
    e = degree_of_map(mb.phi) if deg_phi is None else deg_phi
    if mu == 1:
        case, complete, cond = "mu=1", True, "unconditional for mu = 1"
    elif mu == 2:
        case = "mu=2"
        rk = _linear_form_rank(mb.U)
        if e != 1:
            complete, cond = False, f"deg(phi) = {e} != 1"
        elif mb.d == 4:
            complete, cond = True, "deg(phi) = 1 and d = 4"
        elif rk == 3:
            complete, cond = True, "deg(phi) = 1 and U0, U1, U2 have no common zero (rank 3)"
        else:
            complete, cond = False, f"U0, U1, U2 have rank {rk} < 3"
    else:
        case = "mu>=3"
        complete = False
        rk = _linear_form_rank(mb.U)
        cond = f"not certified; heuristic surrogate: rank of U-coefficient matrix = {rk}"
        notes.append("heuristic surrogate")
    return GeneratorSet(case, tuple(unique), complete, cond, tuple(notes))


def _linear_form_rank(forms: Iterable[Poly]) -> int:
    rows = []
    for f in forms:
        parts = f.coefficients(TV)
        rows.append([Fraction(parts.get(e, ZERO).constant_coeff()) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))])
    return rank(rows)


def certify_generators(gs: GeneratorSet, mb) -> dict[str, bool]:
    """is_inertia_form with k = delta - nu + 1 for every generator."""
    delta = mb.delta
    return {g.label(): is_inertia_form(g.form, mb, delta - g.xdeg + 1) for g in gs.generators}
