"""Shared builders and the sympy bridge used as an independent oracle."""

from __future__ import annotations

import random
from pathlib import Path

import sympy

from mucurve.poly import Poly, parse_poly, var
from mucurve.resultants import FormPair

DATA = Path(__file__).parent / "data"

X1, X2 = var("X1"), var("X2")

CUSP = ("X1^2*X2", "X1^3", "X2^3")
NODAL = ("X1^2*X2 - X2^3", "X1^3 - X1*X2^2", "X2^3")
QUARTIC = ("X1^4", "X1^3*X2 + X1*X2^3", "X2^4")
DOUBLE_COVER = ("X1^2*X2^2", "X1^4", "X2^4")


def to_sympy(f: Poly):
    return sympy.sympify(str(f).replace("^", "**"))


def from_sympy(e) -> Poly:
    return parse_poly(str(sympy.expand(e)).replace("**", "^"))


def random_form(rng: random.Random, d: int, lo: int = -9, hi: int = 9) -> Poly:
    acc = Poly.const(0)
    for i in range(d + 1):
        acc = acc + Poly.const(rng.randint(lo, hi)) * X1 ** (d - i) * X2**i
    return acc


def random_pair(rng: random.Random, d1: int, d2: int, lo: int = -9, hi: int = 9) -> FormPair:
    U = [rng.randint(lo, hi) for _ in range(d1 + 1)]
    V = [rng.randint(lo, hi) for _ in range(d2 + 1)]
    return FormPair(U, V)


def random_poly(rng: random.Random, names, terms: int = 4, deg: int = 3) -> Poly:
    acc = Poly.const(0)
    for _ in range(terms):
        exps = {}
        left = rng.randint(0, deg)
        for n in names:
            e = rng.randint(0, left)
            exps[n] = e
            left -= e
        acc = acc + Poly.monomial(exps, rng.randint(-5, 5))
    return acc


# acceptance results, printed by the terminal-summary hook in conftest
ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(n: int, ok: bool, detail: str = "") -> bool:
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE[n] = (status, detail)
    print(f"criterion {n:2d}: {status} {detail}")
    return ok
