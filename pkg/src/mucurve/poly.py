"""Exact multivariate polynomials over the rationals.

Monomials are packed into a single Python int: every variable owns a
10-bit exponent field, variables with a smaller id sit in higher bits, and
the total degree is stored above all fields.  Comparing two packed
monomials as integers is therefore graded-lexicographic comparison with
respect to the variable ids, and multiplying monomials is integer addition.

Variable ids are fixed so that the id order is the canonical order

    X1 > X2 > Y1 > Y2 > T1 > T2 > T3 > W0 > W1 > ... > U* > V* > Z* > ... > t > x > s

which makes printed output canonical and diffable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from heapq import heapify, heappop, heappush
from math import gcd, lcm
from typing import Iterable, Mapping, Union

Scalar = Fraction
Coeff = Union[int, Fraction]

FIELD = 10
EXP_MASK = (1 << FIELD) - 1
NSLOTS = 80
DEG_SHIFT = FIELD * NSLOTS
LOW_MASK = (1 << DEG_SHIFT) - 1

_FIXED = (
    ["X1", "X2", "Y1", "Y2", "T1", "T2", "T3"]
    + [f"W{i}" for i in range(24)]
    + [f"U{i}" for i in range(10)]
    + [f"V{i}" for i in range(10)]
    + [f"Z{i}" for i in range(16)]
)
_TAIL = ["t", "x", "s"]
_FIRST_DYNAMIC = len(_FIXED)
_LAST_DYNAMIC = NSLOTS - len(_TAIL) - 1

_ID_OF: dict[str, int] = {}
_NAME_OF: dict[int, str] = {}
for _i, _n in enumerate(_FIXED):
    _ID_OF[_n] = _i
    _NAME_OF[_i] = _n
for _i, _n in enumerate(_TAIL):
    _ID_OF[_n] = NSLOTS - len(_TAIL) + _i
    _NAME_OF[NSLOTS - len(_TAIL) + _i] = _n
_next_dynamic = _FIRST_DYNAMIC

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

X_VARS = ("X1", "X2")
Y_VARS = ("Y1", "Y2")
T_VARS = ("T1", "T2", "T3")


class NotDivisibleError(ArithmeticError):
    pass


def var_id(name: str) -> int:
    global _next_dynamic
    vid = _ID_OF.get(name)
    if vid is not None:
        return vid
    if not _NAME_RE.match(name):
        raise ValueError(f"invalid variable name {name!r}")
    if _next_dynamic > _LAST_DYNAMIC:
        raise ValueError("variable table exhausted")
    vid = _next_dynamic
    _next_dynamic += 1
    _ID_OF[name] = vid
    _NAME_OF[vid] = name
    return vid


def _shift(vid: int) -> int:
    return FIELD * (NSLOTS - 1 - vid)


def _mono(exps: Mapping[int, int]) -> int:
    m = 0
    deg = 0
    for vid, e in exps.items():
        if e < 0 or e > EXP_MASK:
            raise OverflowError(f"exponent {e} out of range")
        if e:
            m += e << _shift(vid)
            deg += e
    return m + (deg << DEG_SHIFT)


@lru_cache(maxsize=1 << 17)
def _exps(m: int) -> tuple[tuple[int, int], ...]:
    """(var id, exponent) pairs of a packed monomial, in canonical order."""
    low = m & LOW_MASK
    out = []
    while low:
        top = (low.bit_length() - 1) // FIELD
        sh = top * FIELD
        e = (low >> sh) & EXP_MASK
        out.append((NSLOTS - 1 - top, e))
        low ^= e << sh
    return tuple(out)


def _mdeg(m: int) -> int:
    return m >> DEG_SHIFT


def _divides(a: int, b: int) -> bool:
    for vid, e in _exps(a):
        if (b >> _shift(vid)) & EXP_MASK < e:
            return False
    return True


def _norm(c: Coeff) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


def to_scalar(c) -> Fraction:
    """Exact rational value of an int, Fraction, or constant polynomial."""
    if isinstance(c, Poly):
        if not c.is_constant():
            raise ValueError("polynomial is not constant")
        return Fraction(c.constant_coeff())
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms: Mapping[int, Coeff] | None = None, *, _clean: bool = False):
        if terms is None:
            self._t: dict[int, Coeff] = {}
        elif _clean:
            self._t = dict(terms) if not isinstance(terms, dict) else terms
        else:
            self._t = {}
            for m, c in terms.items():
                if c:
                    if not isinstance(c, (int, Fraction)):
                        c = Fraction(c)
                    self._t[m] = _norm(c)
        self._h = None

    # -- construction ---------------------------------------------------
    @classmethod
    def const(cls, c) -> Poly:
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        return cls({0: c} if c else {}, _clean=True)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1) -> Poly:
        return cls({_mono({var_id(n): e for n, e in exps.items()}): coeff})

    @classmethod
    def coerce(cls, x) -> Poly:
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Poly")

    # -- basic queries --------------------------------------------------
    @property
    def terms(self) -> dict[int, Coeff]:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_coeff(self) -> Coeff:
        return self._t.get(0, 0)

    def __len__(self) -> int:
        return len(self._t)

    def variables(self) -> set[str]:
        ids = set()
        for m in self._t:
            ids.update(v for v, _ in _exps(m))
        return {_NAME_OF[v] for v in ids}

    def sorted_variables(self) -> list[str]:
        ids = set()
        for m in self._t:
            ids.update(v for v, _ in _exps(m))
        return [_NAME_OF[v] for v in sorted(ids)]

    def degree(self, variables: Iterable[str] | None = None) -> int:
        """Total degree, or degree in the given group of variables; -1 for zero."""
        if not self._t:
            return -1
        if variables is None:
            return max(_mdeg(m) for m in self._t)
        ids = {var_id(v) for v in variables}
        return max(sum(e for v, e in _exps(m) if v in ids) for m in self._t)

    def degree_in(self, name: str) -> int:
        if not self._t:
            return -1
        sh = _shift(var_id(name))
        return max((m >> sh) & EXP_MASK for m in self._t)

    def is_homogeneous(self, variables: Iterable[str] | None = None) -> bool:
        if not self._t:
            return True
        if variables is None:
            return len({_mdeg(m) for m in self._t}) == 1
        ids = {var_id(v) for v in variables}
        return len({sum(e for v, e in _exps(m) if v in ids) for m in self._t}) == 1

    def items(self):
        """(exponent dict, coefficient) pairs in canonical (descending) order."""
        for m in sorted(self._t, reverse=True):
            yield {_NAME_OF[v]: e for v, e in _exps(m)}, self._t[m]

    def leading(self) -> tuple[dict[str, int], Coeff]:
        m = max(self._t)
        return {_NAME_OF[v]: e for v, e in _exps(m)}, self._t[m]

    def lc(self) -> Coeff:
        return self._t[max(self._t)]

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self._t.items()}, _clean=True)

    def __pos__(self) -> Poly:
        return self

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v) if type(v) is Fraction else v
            else:
                out.pop(m, None)
        return Poly(out, _clean=True)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                other = Poly.const(other)
            else:
                return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            v = out.get(m, 0) - c
            if v:
                out[m] = _norm(v) if type(v) is Fraction else v
            else:
                out.pop(m, None)
        return Poly(out, _clean=True)

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def scale(self, c) -> Poly:
        if not c:
            return Poly()
        if c == 1:
            return self
        if type(c) is int:
            return Poly({m: v * c for m, v in self._t.items()}, _clean=True)
        return Poly({m: v * c for m, v in self._t.items()})

    def mul_monomial(self, exps: Mapping[str, int], c=1) -> Poly:
        mm = _mono({var_id(n): e for n, e in exps.items()})
        return Poly({m + mm: v for m, v in self._t.items()}, _clean=True).scale(c)

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self.scale(other)
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return Poly()
        if len(a) < len(b):
            a, b = b, a
        if _mdeg(max(a)) + _mdeg(max(b)) > EXP_MASK:
            raise OverflowError("product degree exceeds exponent field")
        if len(b) == 1:
            (mb, cb), = b.items()
            return Poly({m + mb: c * cb for m, c in a.items()})
        out: dict[int, Coeff] = {}
        get = out.get
        bl = list(b.items())
        for ma, ca in a.items():
            for mb, cb in bl:
                k = ma + mb
                out[k] = get(k, 0) + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other) -> Poly:
        if isinstance(other, Poly):
            return exact_divide(self, other)
        c = Fraction(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(1 / c)

    # -- comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == (Poly.const(other)._t)
        return NotImplemented

    def __hash__(self) -> int:
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    # -- calculus and substitution --------------------------------------
    def diff(self, name: str) -> Poly:
        vid = var_id(name)
        sh = _shift(vid)
        unit = (1 << sh) + (1 << DEG_SHIFT)
        out = {}
        for m, c in self._t.items():
            e = (m >> sh) & EXP_MASK
            if e:
                out[m - unit] = c * e
        return Poly(out, _clean=True)

    def subs(self, mapping: Mapping[str, object]) -> Poly:
        """Substitute polynomials (or scalars) for variables, simultaneously."""
        if not mapping:
            return self
        ids = {var_id(n): Poly.coerce(v) for n, v in mapping.items()}
        powers: dict[tuple[int, int], Poly] = {}

        def power(vid: int, e: int) -> Poly:
            key = (vid, e)
            p = powers.get(key)
            if p is None:
                p = ids[vid] if e == 1 else power(vid, e - 1) * ids[vid]
                powers[key] = p
            return p

        acc: dict[int, Coeff] = {}
        for m, c in self._t.items():
            kept = m
            factor = None
            for vid, e in _exps(m):
                if vid in ids:
                    kept -= (e << _shift(vid)) + (e << DEG_SHIFT)
                    pw = power(vid, e)
                    factor = pw if factor is None else factor * pw
            if factor is None:
                acc[kept] = acc.get(kept, 0) + c
            else:
                for fm, fc in factor._t.items():
                    k = fm + kept
                    acc[k] = acc.get(k, 0) + c * fc
        return Poly(acc)

    def evaluate(self, values: Mapping[str, object]) -> Poly:
        return self.subs(values)

    def coefficients(self, variables: Iterable[str]) -> dict[tuple[int, ...], Poly]:
        """Split self = sum_a c_a * v^a over the given variables.

        Keys are exponent tuples aligned with ``variables``; values are the
        coefficient polynomials in the remaining variables.
        """
        names = list(variables)
        ids = [var_id(n) for n in names]
        shifts = [_shift(v) for v in ids]
        out: dict[tuple[int, ...], dict[int, Coeff]] = {}
        for m, c in self._t.items():
            key = tuple((m >> sh) & EXP_MASK for sh in shifts)
            rest = m
            for sh, e in zip(shifts, key):
                if e:
                    rest -= (e << sh) + (e << DEG_SHIFT)
            out.setdefault(key, {})[rest] = c
        return {k: Poly(v, _clean=True) for k, v in out.items()}

    def homogeneous_component(self, degrees: Mapping[tuple[str, ...], int]) -> Poly:
        """Sum of the terms whose degree in each variable group matches."""
        groups = [([var_id(n) for n in g], d) for g, d in degrees.items()]
        out = {}
        for m, c in self._t.items():
            ok = True
            for ids, d in groups:
                if sum((m >> _shift(v)) & EXP_MASK for v in ids) != d:
                    ok = False
                    break
            if ok:
                out[m] = c
        return Poly(out, _clean=True)

    def map_coeffs(self, fn) -> Poly:
        return Poly({m: fn(c) for m, c in self._t.items()})

    # -- printing -------------------------------------------------------
    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Poly({to_string(self)!r})"


def var(name: str) -> Poly:
    vid = var_id(name)
    return Poly({_mono({vid: 1}): 1}, _clean=True)


def variables(*names: str) -> tuple[Poly, ...]:
    return tuple(var(n) for n in names)


ZERO = Poly()
ONE = Poly.const(1)


def _fmt_coeff(c: Coeff) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _fmt_mono(m: int) -> str:
    parts = []
    for vid, e in _exps(m):
        name = _NAME_OF[vid]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def to_string(f: Poly) -> str:
    """Canonical text form: terms in descending canonical order."""
    if not f.terms:
        return "0"
    out = []
    for i, m in enumerate(sorted(f.terms, reverse=True)):
        c = f.terms[m]
        neg = c < 0
        a = -c if neg else c
        mono = _fmt_mono(m)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str, line: int):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if not mt or mt.end() == pos:
            col = pos + 1
            while col <= len(text) and text[col - 1].isspace():
                col += 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        num, name, op = mt.groups()
        col = mt.start(mt.lastindex) + 1
        if num is not None:
            toks.append(("num", int(num), col))
        elif name is not None:
            toks.append(("name", name, col))
        else:
            toks.append(("op", "^" if op == "**" else op, col))
        pos = mt.end()
    toks.append(("end", None, len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str, line: int, allowed: set[str] | None):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.line = line
        self.allowed = allowed

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        e = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return e

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.error("division only by a nonzero constant", tok)
                acc = acc.scale(1 / Fraction(rhs.constant_coeff()))
        return acc

    def unary(self) -> Poly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer", tok)
            base = base ** tok[1]
        return base

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Poly.const(val)
        if kind == "name":
            if self.allowed is not None and val not in self.allowed:
                self.error(f"unknown variable {val!r}", tok)
            return var(val)
        if kind == "op" and val == "(":
            e = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return e
        self.error("unexpected end of expression" if kind == "end" else f"unexpected token {val!r}", tok)


def parse_poly(text: str, allowed: Iterable[str] | None = None, line: int = 1) -> Poly:
    """Parse the canonical text form (``^`` powers, ``*`` products, ``a/b`` scalars)."""
    return _Parser(text, line, set(allowed) if allowed is not None else None).parse()


# ---------------------------------------------------------------------------
# module-level operations

def bihomogeneous_component(f: Poly, xd: int, yd: int) -> Poly:
    """Terms of f with degree xd in (X1, X2) and degree yd in (Y1, Y2)."""
    return f.homogeneous_component({X_VARS: xd, Y_VARS: yd})


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Quotient of an exact division; raises NotDivisibleError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    gt = g.terms
    lm = max(gt)
    lc = gt[lm]
    if len(gt) == 1:
        out = {}
        for m, c in f.terms.items():
            if not _divides(lm, m):
                raise NotDivisibleError("not divisible")
            out[m - lm] = _cdiv(c, lc)
        return Poly(out, _clean=True)
    rest = [(m, c) for m, c in gt.items() if m != lm]
    r = dict(f.terms)
    heap = [-m for m in r]
    heapify(heap)
    q: dict[int, Coeff] = {}
    lm_exps = _exps(lm)
    while heap:
        m = -heappop(heap)
        c = r.pop(m, None)
        if c is None:
            continue
        for vid, e in lm_exps:
            if (m >> _shift(vid)) & EXP_MASK < e:
                raise NotDivisibleError("not divisible")
        qm = m - lm
        qc = _cdiv(c, lc)
        q[qm] = qc
        for mg, cg in rest:
            k = qm + mg
            old = r.get(k)
            v = (old or 0) - qc * cg
            if v:
                if old is None:
                    heappush(heap, -k)
                r[k] = v
            elif old is not None:
                del r[k]
    return Poly(q)


def divides(g: Poly, f: Poly) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisibleError:
        return False
    return True


def content(f: Poly) -> Fraction:
    """Positive rational c with f / c having coprime integer coefficients."""
    if f.is_zero():
        raise ValueError("content of the zero polynomial")
    num = 0
    den = 1
    for c in f.terms.values():
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    return Fraction(num, den)


def content_primitive(f: Poly) -> tuple[Fraction, Poly]:
    """Split f = c * g with g primitive over Z and positive leading coefficient."""
    if f.is_zero():
        raise ValueError("content_primitive of the zero polynomial")
    c = content(f)
    if f.lc() < 0:
        c = -c
    return c, f.scale(1 / c)


def primitive(f: Poly) -> Poly:
    if f.is_zero():
        return f
    return content_primitive(f)[1]


def normalize_sign(f: Poly) -> Poly:
    return -f if f and f.lc() < 0 else f


def proportional(f: Poly, g: Poly) -> bool:
    """True when f = c * g for a nonzero rational c (both zero counts too)."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if f.terms.keys() != g.terms.keys():
        return False
    return primitive(f) == primitive(g)


def ratio(f: Poly, g: Poly) -> Fraction | None:
    """The scalar c with f = c * g, or None."""
    if g.is_zero():
        return None
    m = max(g.terms)
    c = Fraction(f.terms.get(m, 0)) / Fraction(g.terms[m])
    return c if c and f == g.scale(c) else None


def translate(f: Poly, point: Mapping[str, object]) -> Poly:
    return f.subs({n: var(n) + Poly.coerce(v) for n, v in point.items()})


def order_at_origin(f: Poly, names: Iterable[str]) -> int:
    """Lowest total degree in the given variables among the terms of f."""
    names = list(names)
    if f.is_zero():
        raise ValueError("order of the zero polynomial is infinite")
    ids = [var_id(n) for n in names]
    return min(sum((m >> _shift(v)) & EXP_MASK for v in ids) for m in f.terms)


# ---------------------------------------------------------------------------
# univariate helpers (dense coefficient lists, lowest degree first)

def _univariate_var(f: Poly, name: str | None) -> str:
    if name is not None:
        return name
    vs = f.variables()
    if len(vs) > 1:
        raise ValueError("polynomial is not univariate")
    return vs.pop() if vs else "t"


def to_dense(f: Poly, name: str) -> list[Fraction]:
    if f.is_zero():
        return []
    others = f.variables() - {name}
    if others:
        raise ValueError(f"polynomial is not univariate in {name}")
    out = [Fraction(0)] * (f.degree_in(name) + 1)
    sh = _shift(var_id(name))
    for m, c in f.terms.items():
        out[(m >> sh) & EXP_MASK] = Fraction(c)
    return out


def from_dense(coeffs: list, name: str) -> Poly:
    vid = var_id(name)
    return Poly({_mono({vid: i}): c for i, c in enumerate(coeffs) if c})


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lb
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _trim(a[: len(b) - 1])


def _dense_gcd(a: list, b: list) -> list:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _dense_divmod(a, b)[1]
    if not a:
        return []
    lc_ = a[-1]
    return [c / lc_ for c in a]


def _dense_diff(a: list) -> list:
    return [i * a[i] for i in range(1, len(a))]


def upoly_gcd(f: Poly, g: Poly, name: str | None = None) -> Poly:
    """Monic gcd of two univariate polynomials over Q."""
    name = name or _univariate_var(f + g, None)
    return from_dense(_dense_gcd(to_dense(f, name), to_dense(g, name)), name)


def upoly_divmod(f: Poly, g: Poly, name: str) -> tuple[Poly, Poly]:
    q, r = _dense_divmod(to_dense(f, name), to_dense(g, name))
    return from_dense(q, name), from_dense(r, name)


def squarefree_factorization(f: Poly, name: str | None = None) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Yun's algorithm: f = unit * prod(f_i ** e_i) with primitive squarefree f_i."""
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    name = _univariate_var(f, name)
    a = to_dense(f, name)
    if len(a) == 1:
        return a[0], []
    lead = a[-1]
    a = [c / lead for c in a]
    out = []
    b = _dense_diff(a)
    c = _dense_gcd(a, b)
    w = _dense_divmod(a, c)[0]
    y = _dense_divmod(b, c)[0]
    z = [yi - wi for yi, wi in zip(_pad(y, len(w)), _pad(_dense_diff(w), len(w)))]
    _trim(z)
    i = 1
    while len(w) > 1:
        g = _dense_gcd(w, z)
        if len(g) > 1:
            out.append((from_dense(g, name), i))
        w = _dense_divmod(w, g)[0]
        y = _dense_divmod(z, g)[0]
        z = _trim([yi - wi for yi, wi in zip(_pad(y, len(w)), _pad(_dense_diff(w), len(w)))])
        i += 1
    unit = Fraction(lead)
    prim = []
    for fac, e in out:
        c, p = content_primitive(fac)
        unit *= c ** e
        prim.append((p, e))
    return unit, prim


def _pad(a: list, n: int) -> list:
    return list(a) + [Fraction(0)] * (n - len(a))


def squarefree_decomposition(f: Poly, name: str | None = None) -> list[tuple[Poly, int]]:
    return squarefree_factorization(f, name)[1]


def squarefree_part(f: Poly, name: str | None = None) -> Poly:
    out = ONE
    for fac, _ in squarefree_decomposition(f, name):
        out = out * fac
    return out


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        f = lambda v: (v * v + c) % n  # noqa: E731
        while g == 1:
            x = y
            for _ in range(r):
                y = f(y)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = f(y)
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = f(ys)
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
        c += 1


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n != 0)."""
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _integer_coeffs(a: list) -> list[int]:
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    return [int(c * den) for c in a]


def rational_roots(f: Poly, name: str | None = None) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, ordered by (|r|, sign)."""
    if f.is_zero():
        raise ValueError("rational roots of zero")
    name = _univariate_var(f, name)
    a = to_dense(f, name)
    out = []
    k = 0
    while a and not a[0]:
        a.pop(0)
        k += 1
    if k:
        out.append((Fraction(0), k))
    if len(a) > 1:
        den = 1
        for c in a:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in a]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        # test candidates against the squarefree part only, in integers
        sq = _integer_coeffs(to_dense(squarefree_part(from_dense(ints, name), name), name))
        n = len(sq) - 1
        f_one = sum(sq)
        f_minus = sum(c if i % 2 == 0 else -c for i, c in enumerate(sq))
        bound = 1 + max(abs(c) for c in sq[:-1]) // abs(sq[-1]) + 1
        found = []
        numerators = divisors(sq[0])
        for b in divisors(sq[-1]):
            for p in numerators:
                if p > bound * b or gcd(p, b) != 1:
                    continue
                for a_ in (p, -p):
                    # a root a_/b of an integer polynomial has (b - a_) | f(1) and (b + a_) | f(-1)
                    if f_one and (b - a_ == 0 or f_one % (b - a_)):
                        continue
                    if f_minus and (b + a_ == 0 or f_minus % (b + a_)):
                        continue
                    if sum(c * a_**i * b ** (n - i) for i, c in enumerate(sq)) == 0:
                        found.append(Fraction(a_, b))
        for r in found:
            mult = 0
            cur = list(a)
            lin = [-r, Fraction(1)]
            while True:
                qd, rem = _dense_divmod(cur, lin)
                if rem:
                    break
                cur = qd
                mult += 1
            out.append((r, mult))
    out.sort(key=lambda rm: (abs(rm[0]), rm[0] < 0))
    return out
