"""Parametrizations, their syzygies, mu-bases and the degree of the map."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import nullspace, rref
from .poly import (
    ONE,
    ZERO,
    NotDivisibleError,
    Poly,
    content_primitive,
    exact_divide,
    from_dense,
    parse_poly,
    primitive,
    to_dense,
    upoly_gcd,
    var,
)

X1, X2 = var("X1"), var("X2")
T = (var("T1"), var("T2"), var("T3"))


class ParametrizationError(ValueError):
    """Invalid input parametrization; ``code`` is a machine-readable tag."""

    def __init__(self, message: str, code: str = "E_INPUT"):
        super().__init__(message)
        self.code = code


class InconsistencyError(RuntimeError):
    """An internal identity that must hold exactly did not."""

    code = "E_INTERNAL"


def binary_coeffs(f: Poly, d: int) -> list[Poly]:
    """[c_0..c_d] with f = sum c_i X1^(d-i) X2^i (c_i free of X)."""
    parts = f.coefficients(["X1", "X2"])
    out = [ZERO] * (d + 1)
    for (a, b), c in parts.items():
        if a + b != d:
            raise ValueError("form is not homogeneous of the stated degree")
        out[b] = c
    return out


def binary_form(coeffs: Sequence[object], x1: Poly = X1, x2: Poly = X2) -> Poly:
    d = len(coeffs) - 1
    acc = ZERO
    for i, c in enumerate(coeffs):
        c = Poly.coerce(c)
        if c:
            acc = acc + c * x1 ** (d - i) * x2**i
    return acc


def dehomogenize(f: Poly, name: str = "t") -> Poly:
    return f.subs({"X1": var(name), "X2": ONE})


def binary_gcd(forms: Sequence[Poly]) -> Poly:
    """Gcd of binary forms in X1, X2 (monic in the X1 chart, times a power of X2)."""
    nz = [f for f in forms if f]
    if not nz:
        raise ValueError("gcd of zero forms")
    g = None
    for f in nz:
        u = dehomogenize(f)
        g = u if g is None else upoly_gcd(g, u, "t")
    g = g if g.variables() else ONE
    if g != ONE:
        lc_ = Fraction(to_dense(g, "t")[-1])
        g = g.scale(1 / lc_)
    # powers of X2 are invisible in the chart X2 = 1
    x2pow = min(min(b for (a, b) in f.coefficients(["X1", "X2"])) for f in nz)
    k = g.degree_in("t") if g != ONE else 0
    gh = ZERO
    for i, c in enumerate(to_dense(g, "t")):
        if c:
            gh = gh + Poly.const(c) * X1**i * X2 ** (k - i)
    return gh * X2**x2pow


@dataclass(frozen=True)
class Parametrization:
    """A triple of binary forms (g1, g2, g3) of common degree d."""

    g: tuple[Poly, Poly, Poly]
    d: int

    @classmethod
    def from_forms(cls, g1, g2, g3, check_gcd: bool = True) -> Parametrization:
        gs = tuple(Poly.coerce(x) for x in (g1, g2, g3))
        for i, f in enumerate(gs):
            extra = f.variables() - {"X1", "X2"}
            if extra:
                raise ParametrizationError(f"g{i + 1} uses variables other than X1, X2: {sorted(extra)}")
        if all(f.is_zero() for f in gs):
            raise ParametrizationError("degenerate parametrization: all forms are zero", "E_DEGENERATE")
        degs = set()
        for i, f in enumerate(gs):
            if f.is_zero():
                continue
            if not f.is_homogeneous():
                raise ParametrizationError(f"g{i + 1} is not homogeneous", "E_INHOMOGENEOUS")
            degs.add(f.degree())
        if len(degs) != 1:
            raise ParametrizationError("forms have unequal degrees", "E_DEGREE")
        d = degs.pop()
        if d < 1:
            raise ParametrizationError("forms must have positive degree", "E_DEGREE")
        phi = cls(gs, d)
        if check_gcd and binary_gcd(gs).degree() > 0:
            raise ParametrizationError("improper parametrization: gcd is not constant", "E_GCD")
        return phi

    @classmethod
    def parse(cls, g1: str, g2: str, g3: str) -> Parametrization:
        allowed = {"X1", "X2"}
        return cls.from_forms(*(parse_poly(s, allowed) for s in (g1, g2, g3)))

    def affine(self, name: str = "t") -> tuple[Poly, Poly, Poly]:
        """(g1(t,1), g2(t,1), g3(t,1))."""
        return tuple(dehomogenize(f, name) for f in self.g)

    def substitute(self, F: Poly, x1=None, x2=None) -> Poly:
        """F(g1, g2, g3) for a form F in T1, T2, T3 (optionally at X = (x1, x2))."""
        gs = self.g
        if x1 is not None:
            gs = tuple(f.subs({"X1": x1, "X2": x2}) for f in gs)
        return F.subs({"T1": gs[0], "T2": gs[1], "T3": gs[2]})

    def reparametrize(self, c: int) -> Parametrization:
        """Compose with (X1, X2) -> (X1, X2 + c X1)."""
        sub = {"X1": X1, "X2": X2 + X1.scale(c)}
        return Parametrization(tuple(f.subs(sub) for f in self.g), self.d)

    def point(self, x1, x2) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(f.subs({"X1": Poly.coerce(x1), "X2": Poly.coerce(x2)}).constant_coeff()) for f in self.g)


def syzygy_matrix(phi: Parametrization, k: int) -> list[list[int]]:
    """Coefficient matrix of (a, b, c) -> a g1 + b g2 + c g3 on forms of degree k."""
    d = phi.d
    gc = [[Fraction(c.constant_coeff()) for c in binary_coeffs(f, d)] for f in phi.g]
    rows = [[Fraction(0)] * (3 * (k + 1)) for _ in range(d + k + 1)]
    for s in range(3):
        for j in range(k + 1):
            for i, c in enumerate(gc[s]):
                if c:
                    rows[i + j][s * (k + 1) + j] = c
    return rows


def _vec_to_triple(v: Sequence[int], k: int) -> tuple[Poly, Poly, Poly]:
    return tuple(binary_form(v[s * (k + 1):(s + 1) * (k + 1)]) for s in range(3))


def syzygies_of_degree(phi: Parametrization, k: int) -> list[tuple[Poly, Poly, Poly]]:
    if k < 0:
        return []
    return [_vec_to_triple(v, k) for v in nullspace(syzygy_matrix(phi, k))]


def moving_line(triple: Sequence[Poly]) -> Poly:
    return triple[0] * T[0] + triple[1] * T[1] + triple[2] * T[2]


def triple_of(F: Poly) -> tuple[Poly, Poly, Poly]:
    parts = F.coefficients(["T1", "T2", "T3"])
    return tuple(parts.get(e, ZERO) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def cross(p: Sequence[Poly], q: Sequence[Poly]) -> tuple[Poly, Poly, Poly]:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def _reduce(v: list[Fraction], basis_rref: list[list[Fraction]], pivots: list[int]) -> list[Fraction]:
    v = list(v)
    for row, pc in zip(basis_rref, pivots):
        f = v[pc]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return v


def _shift_vector(v: Sequence[int], k: int, extra: int, j: int) -> list[Fraction]:
    """Coefficient vector of X1^(extra-j) X2^j * (triple of degree k)."""
    K = k + extra
    out = [Fraction(0)] * (3 * (K + 1))
    for s in range(3):
        for i in range(k + 1):
            out[s * (K + 1) + i + j] = Fraction(v[s * (k + 1) + i])
    return out


@dataclass(frozen=True)
class MuBasis:
    phi: Parametrization
    p: Poly
    q: Poly
    mu: int
    U: tuple[Poly, ...]
    V: tuple[Poly, ...]
    c: Fraction = field(default=Fraction(-1))

    @property
    def d(self) -> int:
        return self.phi.d

    @property
    def delta(self) -> int:
        return self.phi.d - 2

    def form_pair(self):
        from .resultants import FormPair

        return FormPair(self.U, self.V)


def _check_basis(phi: Parametrization, p: Poly, q: Poly) -> Fraction:
    for F in (p, q):
        if phi.substitute(F):
            raise InconsistencyError("moving line is not a syzygy")
    cr = cross(triple_of(p), triple_of(q))
    ratio = None
    for cf, gf in zip(cr, phi.g):
        if gf:
            m = max(gf.terms)
            ratio = Fraction(cf.terms.get(m, 0)) / Fraction(gf.terms[m])
            break
    if not ratio or any(cf != gf.scale(ratio) for cf, gf in zip(cr, phi.g)):
        raise InconsistencyError("cross product of the mu-basis is not a nonzero multiple of phi")
    return ratio


def mu_basis(phi: Parametrization) -> MuBasis:
    d = phi.d
    mu = None
    for k in range(0, d + 1):
        ker = nullspace(syzygy_matrix(phi, k))
        if ker:
            mu = k
            break
    if mu == 0:
        raise ParametrizationError("degenerate parametrization: g1, g2, g3 are linearly dependent (mu = 0)", "E_DEGENERATE")
    if mu is None or mu > d - mu:
        raise ParametrizationError("improper parametrization: no mu-basis of expected degrees", "E_GCD")
    # the kernel vector attached to the last free coordinate
    pvec = ker[-1]
    p = primitive(moving_line(_vec_to_triple(pvec, mu)))
    nu = d - mu
    if nu == mu:
        span = [list(map(Fraction, pvec))]
        cands = ker[:-1]
    else:
        span = [_shift_vector(pvec, mu, nu - mu, j) for j in range(nu - mu + 1)]
        cands = nullspace(syzygy_matrix(phi, nu))
    red, piv = rref(span)
    red = red[: len(piv)]
    q = None
    for v in cands:
        w = _reduce([Fraction(x) for x in v], red, piv)
        if any(w):
            q = primitive(moving_line(_vec_to_triple(w, nu)))
            break
    if q is None:
        raise InconsistencyError("no partner syzygy found")
    c = _check_basis(phi, p, q)
    if c > 0:
        q = -q
        c = -c
    U = tuple(binary_coeffs(p, mu))
    V = tuple(binary_coeffs(q, nu))
    return MuBasis(phi, p, q, mu, U, V, c)


# ---------------------------------------------------------------------------
# degree of the map

def _prem(a: Poly, b: Poly, x: str) -> Poly:
    """Pseudo-remainder of a by b with respect to x."""
    db = b.degree_in(x)
    lb = b.coefficients([x])[(db,)]
    xv = var(x)
    r = a
    while r and r.degree_in(x) >= db:
        dr = r.degree_in(x)
        lr = r.coefficients([x])[(dr,)]
        r = r * lb - lr * b * xv ** (dr - db)
    return r


def _content_in(f: Poly, x: str, y: str) -> Poly:
    g = None
    for c in f.coefficients([x]).values():
        g = c if g is None else upoly_gcd(g, c, y)
        if g.is_constant():
            return ONE
    return g


def _primitive_in(f: Poly, x: str, y: str) -> Poly:
    c = _content_in(f, x, y)
    if c != ONE:
        f = exact_divide(f, c)
    return primitive(f)


def gcd_over_rational_functions(a: Poly, b: Poly, x: str = "t", y: str = "s") -> Poly:
    """Gcd in Q(y)[x] of two polynomials in Q[y][x], made primitive in Q[y][x]."""
    if a.is_zero():
        return _primitive_in(b, x, y) if b else ZERO
    if b.is_zero():
        return _primitive_in(a, x, y)
    a = _primitive_in(a, x, y)
    b = _primitive_in(b, x, y)
    if a.degree_in(x) < b.degree_in(x):
        a, b = b, a
    while b and b.degree_in(x) > 0:
        r = _prem(a, b, x)
        a, b = b, (_primitive_in(r, x, y) if r else ZERO)
    if b.is_zero():
        return a
    return ONE


def fiber_polynomial(phi: Parametrization) -> Poly:
    gt = phi.affine("t")
    gs = phi.affine("s")
    g = ZERO
    for i in range(3):
        for j in range(i + 1, 3):
            g = gcd_over_rational_functions(g, gt[i] * gs[j] - gt[j] * gs[i])
    return g


def degree_of_map(phi: Parametrization) -> int:
    """Number of parameters over a generic point of the image."""
    g = fiber_polynomial(phi)
    if g.is_zero():
        raise ParametrizationError("constant map", "E_DEGENERATE")
    return g.degree_in("t")


# ---------------------------------------------------------------------------
# exact roots of polynomials

def exact_root(f: Poly, e: int) -> Poly | None:
    """r with r**e == f, or None; term-by-term Newton step in canonical order."""
    if e == 1:
        return f
    if f.is_zero():
        return ZERO
    lead_exps, lc_ = f.leading()
    if any(v % e for v in lead_exps.values()):
        return None
    c = _rational_root(Fraction(lc_), e)
    if c is None:
        return None
    r = Poly.monomial({k: v // e for k, v in lead_exps.items()}, c)
    lt_r = r
    denom_lead = (lt_r ** (e - 1)).scale(e)
    budget = len(f.terms) * (f.degree() + 2) + 10
    for _ in range(budget):
        rem = f - r**e
        if rem.is_zero():
            return r
        m_exps, m_c = rem.leading()
        lt_rem = Poly.monomial(m_exps, m_c)
        try:
            step = exact_divide(lt_rem, denom_lead)
        except NotDivisibleError:
            return None
        if step.is_zero() or max(step.terms) >= min(r.terms):
            return None
        r = r + step
    return None


def _rational_root(c: Fraction, e: int) -> Fraction | None:
    def iroot(n: int) -> int | None:
        if n < 0:
            if e % 2 == 0:
                return None
            s = iroot(-n)
            return None if s is None else -s
        if n == 0:
            return 0
        x = 1 << (n.bit_length() // e + 1)
        while True:
            y = ((e - 1) * x + n // x ** (e - 1)) // e
            if y >= x:
                break
            x = y
        for cand in (x - 1, x, x + 1):
            if cand >= 0 and cand**e == n:
                return cand
        return None

    a = iroot(c.numerator)
    b = iroot(c.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


@dataclass(frozen=True)
class Implicitization:
    C: Poly
    alpha: Fraction
    deg_phi: int
    res: Poly


def implicitize(mb: MuBasis, deg_phi: int | None = None) -> Implicitization:
    """C and alpha with Res(p, q) = alpha * C^deg_phi and C primitive."""
    from .resultants import resultant

    res = resultant(mb.form_pair())
    if res.is_zero():
        raise InconsistencyError("resultant of the mu-basis vanishes")
    e = degree_of_map(mb.phi) if deg_phi is None else deg_phi
    cont, prim = content_primitive(res)
    root = exact_root(prim, e)
    if root is None and e % 2 == 0:
        root = exact_root(-prim, e)
        if root is not None:
            cont = -cont
            prim = -prim
    if root is None:
        raise InconsistencyError(f"resultant is not an exact power of order {e}")
    c2, C = content_primitive(root)
    alpha = cont * c2**e
    if C.scale(1) ** e != prim.scale(1 / c2**e):
        raise InconsistencyError("exact root verification failed")
    return Implicitization(C, alpha, e, res)
