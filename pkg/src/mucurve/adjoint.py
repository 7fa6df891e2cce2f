"""Adjoint curves, the D-resultant and singularity reports."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .inertia import M_matrix, is_inertia_form, sylvester_form
from .linalg import det
from .mubasis import (
    InconsistencyError,
    Implicitization,
    MuBasis,
    Parametrization,
    degree_of_map,
    implicitize,
    mu_basis,
)
from .poly import (
    ONE,
    ZERO,
    Poly,
    content_primitive,
    from_dense,
    order_at_origin,
    primitive,
    rational_roots,
    squarefree_factorization,
    to_dense,
    upoly_divmod,
    upoly_gcd,
    var,
)
from .resultants import subresultants

TV = ("T1", "T2", "T3")
X1, X2 = var("X1"), var("X2")


class CurveError(ValueError):
    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CurveModel:
    phi: Parametrization
    mb: MuBasis
    C: Poly
    alpha: Fraction
    deg_phi: int

    @property
    def d(self) -> int:
        return self.phi.d

    @property
    def mu(self) -> int:
        return self.mb.mu


def curve_model(phi: Parametrization) -> CurveModel:
    mb = mu_basis(phi)
    e = degree_of_map(phi)
    im: Implicitization = implicitize(mb, e)
    return CurveModel(phi, mb, im.C, im.alpha, e)


def _require_birational(cm: CurveModel) -> None:
    if cm.deg_phi != 1:
        raise CurveError(f"not birational: deg(phi) = {cm.deg_phi}", "E_NOT_BIRATIONAL")


def _require_singular(cm: CurveModel) -> None:
    _require_birational(cm)
    if cm.d < 3:
        raise CurveError("no singularities: curves of degree < 3 are smooth", "E_NO_SINGULARITIES")


def _subres(cm: CurveModel) -> list[Poly]:
    return subresultants(cm.mb.form_pair())


def _x_coefficients(F: Poly) -> list[Poly]:
    parts = F.coefficients(("X1", "X2"))
    return [parts.get((1, 0), ZERO), parts.get((0, 1), ZERO)]


def _positive(F: Poly) -> Poly:
    return content_primitive(F)[1]


def adjoint_pencils(cm: CurveModel) -> list[Poly]:
    """Moving curves linear in X whose T-coefficients are adjoint to C."""
    _require_singular(cm)
    fp = cm.mb.form_pair()
    if cm.mu == 1:
        if cm.d == 3:
            return [sylvester_form(fp, (0, 0))]
        return [det(M_matrix(fp, 1))]
    S = _subres(cm)
    out = []
    for i in range(cm.d - 2):
        F = X1 * S[i] - X2 * S[i + 1]
        if F:
            out.append(F)
    return out


def adjoint_candidates(cm: CurveModel) -> list[Poly]:
    """Adjoint curves: SRes_i for mu >= 2, pencil coefficients for mu = 1."""
    _require_singular(cm)
    if cm.mu >= 2:
        forms = [S for S in _subres(cm)[: cm.d - 1] if S]
    else:
        forms = [c for F in adjoint_pencils(cm) for c in _x_coefficients(F) if c]
    out = []
    for F in forms:
        G = _positive(F)
        if G not in out:
            out.append(G)
    return out


def d_resultant(cm: CurveModel) -> Poly:
    """Delta(t) = SRes_0(p, q)(g1(t,1), g2(t,1), g3(t,1)), made primitive."""
    _require_birational(cm)
    S0 = _subres(cm)[0]
    g = cm.phi.affine("t")
    D = S0.subs({"T1": g[0], "T2": g[1], "T3": g[2]})
    if D.is_zero():
        raise InconsistencyError("principal subresultant vanishes on the curve")
    return primitive(D)


def expected_dres_degree(cm: CurveModel) -> int:
    """Degree of Delta(t) when no singular parameter sits at t = infinity."""
    return (cm.d - 1) * (cm.d - 2)


# ---------------------------------------------------------------------------
# singularity reports

@dataclass
class Cluster:
    parameters: str
    factors: list[Poly]
    roots: list[Fraction]
    epsilon: int
    point: tuple[Fraction, Fraction, Fraction] | None
    multiplicity: int | None

    @property
    def resolved(self) -> bool:
        return self.point is not None and self.multiplicity is not None


@dataclass
class SingularityReport:
    dres: Poly
    dres_unit: Fraction
    squarefree: list[tuple[Poly, int]]
    total_degree: int
    expected_degree: int
    clusters: list[Cluster]
    genus_left: Fraction
    genus_resolved: Fraction
    genus_unresolved: Fraction
    epsilon_half: Fraction
    chart: int = 0
    attempts: int = 1
    notes: list[str] = field(default_factory=list)

    @property
    def ledger_balanced(self) -> bool:
        return self.genus_resolved + self.genus_unresolved == self.genus_left

    @property
    def degree_ok(self) -> bool:
        return self.total_degree == self.expected_degree


def normalize_point(pt: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    """Scale so that the last nonzero coordinate is 1."""
    pt = [Fraction(x) for x in pt]
    for x in reversed(pt):
        if x:
            return tuple(y / x for y in pt)
    raise ValueError("the zero vector is not a projective point")


def point_str(pt: Sequence[Fraction]) -> str:
    return "(" + ":".join(str(x) for x in pt) + ")"


def order_at_point(F: Poly, pt: Sequence[Fraction]) -> int:
    """Multiplicity of the plane curve F = 0 at a rational projective point."""
    if F.is_zero():
        raise ValueError("order of the zero polynomial")
    pt = normalize_point(pt)
    k = max(i for i in range(3) if pt[i])
    rest = [i for i in range(3) if i != k]
    names = [TV[i] for i in rest]
    sub = {TV[k]: ONE}
    for i in rest:
        sub[TV[i]] = var(TV[i]) + Poly.const(pt[i])
    return order_at_origin(F.subs(sub), names)


def _root_factor(r: Fraction) -> Poly:
    return from_dense([-r, Fraction(1)], "t")


def _uresultant(a: Poly, b: Poly) -> Poly:
    """Res_t(a, b) for a in Q[t] and b in Q[lam][t]."""
    A = [Poly.const(c) for c in to_dense(a, "t")][::-1]
    bc = b.coefficients(("t",))
    n = b.degree_in("t")
    B = [bc.get((n - i,), ZERO) for i in range(n + 1)]
    m = len(A) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([ZERO] * i + A + [ZERO] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ZERO] * i + B + [ZERO] * (size - n - 1 - i))
    return det(rows)


def _monic(f: Poly) -> Poly:
    return primitive(f) if f.degree() > 0 else ONE


def _split_by_ratio(F: Poly, num: Poly, den: Poly) -> list[tuple[Fraction, Poly]]:
    """Factors gcd(F, num - c den) for the rational values c of num/den on the roots of F."""
    lam = var("s")
    R = _uresultant(F, num - lam * den)
    if R.is_zero():
        return []
    out = []
    for c, _ in rational_roots(R, "s") if R.degree() > 0 else []:
        h = upoly_gcd(F, num - den.scale(c), "t")
        if h.degree() > 0:
            out.append((c, _monic(h)))
    return out


def rational_point_factors(phi: Parametrization, f: Poly) -> tuple[list[tuple[tuple[Fraction, Fraction, Fraction], Poly]], Poly]:
    """Split a squarefree f in Q[t] into factors whose roots share one rational
    image point, plus the leftover factor with no rational image."""
    g = phi.affine("t")
    found: list[tuple[tuple, Poly]] = []

    def walk(F: Poly, k: int) -> None:
        # roots of F have g_j = 0 for all j < k
        if F.degree() <= 0 or k > 2:
            return
        zero = upoly_gcd(F, g[k], "t") if g[k] else F
        walk(zero, k + 1)
        rest = upoly_divmod(F, zero, "t")[0]
        if rest.degree() <= 0:
            return
        others = [j for j in range(k + 1, 3)]
        pieces = [({}, rest)]
        for j in others:
            nxt = []
            for vals, P in pieces:
                for c, h in _split_by_ratio(P, g[j], g[k]):
                    nxt.append(({**vals, j: c}, h))
            pieces = nxt
        for vals, P in pieces:
            pt = [Fraction(0)] * 3
            pt[k] = Fraction(1)
            for j, c in vals.items():
                pt[j] = c
            found.append((normalize_point(pt), P))

    walk(_monic(f), 0)
    left = _monic(f)
    for _, P in found:
        left = upoly_divmod(left, P, "t")[0]
    return found, _monic(left)


def singularity_report(cm: CurveModel) -> SingularityReport:
    _require_birational(cm)
    D = d_resultant(cm)
    if D.degree() > 0:
        unit, sqf = squarefree_factorization(D, "t")
    else:
        unit, sqf = Fraction(D.constant_coeff()), []
    by_point: dict[tuple, Cluster] = {}
    clusters: list[Cluster] = []
    for f, e in sqf:
        found, left = rational_point_factors(cm.phi, f)
        for pt, P in found:
            cl = by_point.get(pt)
            if cl is None:
                cl = by_point[pt] = Cluster("", [], [], 0, pt, None)
                clusters.append(cl)
            cl.factors.append(P)
            cl.epsilon += e * P.degree_in("t")
        if left.degree() > 0:
            clusters.append(Cluster("", [left], [], e * left.degree_in("t"), None, None))
    for cl in clusters:
        parts = []
        for P in cl.factors:
            rts = rational_roots(P, "t")
            if sum(m for _, m in rts) == P.degree_in("t"):
                cl.roots += [r for r, _ in rts]
                parts += [f"t = {r}" for r, _ in rts]
            else:
                parts.append(f"roots of {P}")
        cl.parameters = ", ".join(parts)
        if cl.point is not None:
            cl.multiplicity = order_at_point(cm.C, cl.point)
    d = cm.d
    left = Fraction((d - 1) * (d - 2), 2)
    resolved = sum((Fraction(cl.multiplicity * (cl.multiplicity - 1), 2) for cl in clusters if cl.resolved), Fraction(0))
    unresolved = sum((Fraction(cl.epsilon, 2) for cl in clusters if not cl.resolved), Fraction(0))
    eps_half = Fraction(sum(cl.epsilon for cl in clusters), 2)
    return SingularityReport(
        dres=D,
        dres_unit=unit,
        squarefree=sqf,
        total_degree=D.degree_in("t") if D.degree() > 0 else 0,
        expected_degree=expected_dres_degree(cm),
        clusters=clusters,
        genus_left=left,
        genus_resolved=resolved,
        genus_unresolved=unresolved,
        epsilon_half=eps_half,
    )


def analyze(phi: Parametrization, chart_retries: int = 5, seed: int = 0) -> tuple[CurveModel, SingularityReport]:
    """Singularity report, changing the parameter chart X2 -> X2 + c X1 until
    the D-resultant reaches its expected degree or the retries run out."""
    rng = random.Random(seed)
    cm = curve_model(phi)
    rep = singularity_report(cm)
    c_total = 0
    attempts = 1
    while not rep.degree_ok and attempts <= chart_retries:
        c = rng.choice([k for k in range(-5, 6) if k])
        cand_phi = phi.reparametrize(c_total + c)
        cand = curve_model(cand_phi)
        cand_rep = singularity_report(cand)
        attempts += 1
        if cand_rep.total_degree > rep.total_degree:
            cm, rep, c_total = cand, cand_rep, c_total + c
    rep.chart = c_total
    rep.attempts = attempts
    if not rep.degree_ok:
        rep.notes.append("expected D-resultant degree not reached; some singular parameter may lie at infinity")
    return cm, rep


# ---------------------------------------------------------------------------
# polar curves and the branch criterion

def polar_curve(C: Poly, q: Sequence[object]) -> Poly:
    if C.is_zero():
        raise ValueError("polar curve of the zero polynomial")
    acc = ZERO
    for name, qi in zip(TV, q):
        qi = Fraction(qi)
        if qi:
            acc = acc + C.diff(name).scale(qi)
    return acc


def line_through(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    c = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    return sum((var(n).scale(ci) for n, ci in zip(TV, c) if ci), ZERO)


def _eval_T(F: Poly, pt: Sequence[Fraction]) -> Fraction:
    return Fraction(F.subs({n: Poly.const(x) for n, x in zip(TV, pt)}).constant_coeff())


def default_polar_point(C: Poly) -> tuple[Fraction, Fraction, Fraction]:
    cands = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
    cands += [(a, b, 1) for a in range(-3, 4) for b in range(-3, 4)]
    for q in cands:
        if _eval_T(C, q):
            return tuple(Fraction(x) for x in q)
    raise CurveError("no test point off the curve found", "E_INTERNAL")


def _order_at(f: Poly, r: Fraction) -> int:
    if f.is_zero():
        return 10**9
    lin = _root_factor(r)
    k = 0
    while True:
        q, rem = upoly_divmod(f, lin, "t")
        if rem:
            return k
        f = q
        k += 1


@dataclass
class BranchRecord:
    parameter: Fraction
    point: tuple[Fraction, Fraction, Fraction]
    ord_D: int
    ord_polar: int
    ord_line: int

    @property
    def bound(self) -> int:
        return self.ord_polar - self.ord_line + 1

    @property
    def holds(self) -> bool:
        return self.ord_D >= self.bound

    @property
    def equality(self) -> bool:
        return self.ord_D == self.bound


def branch_records(cm: CurveModel, D: Poly, q: Sequence[object] | None = None) -> list[BranchRecord]:
    _require_birational(cm)
    q = tuple(Fraction(x) for x in q) if q is not None else default_polar_point(cm.C)
    if _eval_T(cm.C, q) == 0:
        raise CurveError("polar undefined for test: q lies on C", "E_POLAR_POINT")
    dres = d_resultant(cm)
    roots = rational_roots(dres, "t") if dres.degree() > 0 else []
    if sum(m for _, m in roots) != (dres.degree_in("t") if dres.degree() > 0 else 0):
        raise CurveError("unsupported fixture: singular parameters are not all rational", "E_UNSUPPORTED")
    g = cm.phi.affine("t")
    sub = {"T1": g[0], "T2": g[1], "T3": g[2]}
    P = polar_curve(cm.C, q)
    Dt = Poly.coerce(D).subs(sub)
    Pt = P.subs(sub)
    out = []
    for r, _ in roots:
        pt = normalize_point(cm.phi.point(r, 1))
        L = line_through(pt, q).subs(sub)
        out.append(BranchRecord(r, pt, _order_at(Dt, r), _order_at(Pt, r), _order_at(L, r)))
    return out


def branch_adjoint_check(cm: CurveModel, D: Poly, q: Sequence[object] | None = None) -> bool:
    return all(b.holds for b in branch_records(cm, D, q))


# ---------------------------------------------------------------------------
# inverse map

@dataclass(frozen=True)
class InverseMap:
    A: Poly
    B: Poly
    index: int | None
    orientation: int
    route: str


def inverse_map(cm: CurveModel) -> InverseMap:
    """(A : B) with A(phi(t,1)) = orientation * t * B(phi(t,1))."""
    _require_birational(cm)
    if cm.mu >= 2:
        S = _subres(cm)
        i = next((k for k in range(len(S) - 1) if S[k]), None)
        if i is None:
            raise InconsistencyError("all subresultants vanish")
        A, B, route = S[i + 1], S[i], "subresultants"
    else:
        U = cm.mb.U
        A, B, i, route = -U[1], U[0], None, "mu-basis"
    g = cm.phi.affine("t")
    sub = {"T1": g[0], "T2": g[1], "T3": g[2]}
    At = A.subs(sub)
    Bt = B.subs(sub)
    t = var("t")
    for s in (1, -1):
        if At - (t * Bt).scale(s) == ZERO:
            return InverseMap(A, B, i, s, route)
    raise InconsistencyError("inverse map relation does not hold")


def adjoint_order_report(cm: CurveModel, rep: SingularityReport) -> list[tuple[str, str, int, int]]:
    """(candidate, point, order, required) for each adjoint candidate and resolved point."""
    out = []
    for F in adjoint_candidates(cm):
        for cl in rep.clusters:
            if cl.resolved:
                out.append((str(F), point_str(cl.point), order_at_point(F, cl.point), cl.multiplicity - 1))
    return out


def pencils_are_inertia(cm: CurveModel) -> bool:
    delta = cm.mb.delta
    return all(is_inertia_form(F, cm.mb, delta) for F in adjoint_pencils(cm))
