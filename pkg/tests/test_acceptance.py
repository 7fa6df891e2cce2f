"""One test per acceptance criterion; each records a PASS/FAIL line."""

import random
import time
from itertools import product

import pytest

from helpers import CUSP, NODAL, QUARTIC, DATA, random_pair, record
from mucurve.adjoint import (
    analyze,
    branch_records,
    curve_model,
    d_resultant,
    order_at_point,
    point_str,
    singularity_report,
)
from mucurve.cli import parse_curve, run_command
from mucurve.inertia import (
    M_matrix,
    certify_generators,
    in_ideal,
    is_inertia_form,
    iterated_sylvester,
    morley_form,
    moving_curve_generators,
    sylvester_form,
    sylvester_forms,
    to_y,
)
from mucurve.linalg import det
from mucurve.mubasis import Parametrization, binary_coeffs, mu_basis
from mucurve.poly import ZERO, Poly, parse_poly, proportional, var
from mucurve.resultants import (
    D_i_family,
    FormPair,
    resultant,
    resultant_derivative_congruence,
    subresultants,
)

P = parse_poly
X1, X2 = var("X1"), var("X2")
IDENTITY_SECONDS: dict[int, float] = {}


def nonsingular_pair(rng, d1, d2):
    while True:
        fp = random_pair(rng, d1, d2)
        if resultant(fp):
            return fp


def test_criterion_01_cusp_pipeline():
    start = time.perf_counter()
    cm = curve_model(Parametrization.parse(*CUSP))
    mb = cm.mb
    gs = moving_curve_generators(mb)
    dres = d_resultant(cm)
    elapsed = time.perf_counter() - start
    forms = gs.forms()
    checks = {
        "mu": mb.mu == 1,
        "p": proportional(mb.p, P("T1*X1 - T2*X2")),
        "q": proportional(mb.q, P("T3*X1^2 - T1*X2^2")),
        "C": proportional(cm.C, P("T2^2*T3 - T1^3")),
        "deg_phi": cm.deg_phi == 1,
        "dres": dres == P("t^2") and dres.degree() == (3 - 1) * (3 - 2),
        "generators": len(forms) == 4
        and any(proportional(F, mb.p) for F in forms)
        and any(proportional(F, mb.q) for F in forms)
        and any(proportional(F, resultant(mb.form_pair())) for F in forms)
        and any(proportional(F, P("T2*T3*X1 - T1^2*X2")) for F in forms),
        "flag": gs.flag == "complete",
        "time": elapsed < 1.0,
    }
    bad = [k for k, v in checks.items() if not v]
    assert record(1, not bad, f"cusp pipeline in {elapsed:.3f}s" + (f"; failed {bad}" if bad else ""))


def test_criterion_02_nodal_pipeline():
    cm = curve_model(Parametrization.parse(*NODAL))
    rep = singularity_report(cm)
    dres = d_resultant(cm)
    cl = rep.clusters
    ok = (
        proportional(dres, P("t^2 - 1"))
        and dres.lc() > 0
        and len(cl) == 1
        and sorted(cl[0].roots) == [-1, 1]
        and cl[0].point is not None
        and cl[0].multiplicity == 2
        and rep.genus_left == 1
        and rep.genus_resolved + rep.genus_unresolved == 1
    )
    assert record(2, ok, f"Delta = {dres}, node {point_str(cl[0].point)}, ledger {rep.genus_left} = {rep.genus_resolved}")


QUARTIC_SRES_STATED = [P("T2^2 - T1*T3 + T3^2"), P("-T2*(T1 + T3)"), P("T1^2 - T1*T3 + T2^2")]


def test_criterion_03_quartic_fixture():
    cm = curve_model(Parametrization.parse(*QUARTIC))
    S = subresultants(cm.mb.form_pair())
    dres = d_resultant(cm)
    gs = moving_curve_generators(cm.mb)
    attainable = (
        cm.mu == 2
        and S[0] == QUARTIC_SRES_STATED[0]
        and S[2] == QUARTIC_SRES_STATED[2]
        and S[1] == -QUARTIC_SRES_STATED[1]
        and dres == P("t^6 + t^4 + t^2 + 1")
        and dres.degree() == (4 - 1) * (4 - 2)
        and all(order_at_point(s, (1, 0, 1)) >= 1 for s in S)
        and gs.flag == "complete"
    )
    exact = S == QUARTIC_SRES_STATED
    detail = "mu = 2, Delta, node orders and flag match"
    if not exact:
        detail += f"; SRes_1 = {S[1]} has the opposite sign to the stated value"
    record(3, attainable and exact, detail)
    assert attainable


@pytest.mark.xfail(strict=True, reason="SRes_1 sign: the bordered expansion gives +T2*(T1 + T3)")
def test_criterion_03_sres1_sign_as_stated():
    S = subresultants(mu_basis(Parametrization.parse(*QUARTIC)).form_pair())
    assert S[1] == QUARTIC_SRES_STATED[1]


def test_criterion_04_res_sres_identity():
    start = time.perf_counter()
    rng = random.Random(2024)
    n = 0
    ok = True
    while n < 60:
        d1 = rng.randint(1, 4)
        d2 = rng.randint(d1, 5)
        fp = nonsingular_pair(rng, d1, d2)
        S = subresultants(fp)
        q = binary_coeffs(sylvester_form(fp, (0, 0)), fp.delta)
        rhs = sum((S[fp.delta - i] * q[i] for i in range(fp.delta + 1)), ZERO).scale((-1) ** (d1 + 1))
        ok = ok and resultant(fp) == rhs
        n += 1
    elapsed = time.perf_counter() - start
    IDENTITY_SECONDS[4] = elapsed
    assert record(4, ok and elapsed < 30, f"{n} random pairs up to (4,5) in {elapsed:.2f}s")


def test_criterion_05_sylvester_duality():
    start = time.perf_counter()
    rng = random.Random(5)
    shapes = [(d1, d2) for d1 in range(1, 4) for d2 in range(d1, 5)]
    ok = True
    n = 0
    while n < 24:
        d1, d2 = shapes[n % len(shapes)]
        fp = nonsingular_pair(rng, d1, d2)
        s00 = sylvester_form(fp, (0, 0))
        for order in range(d1):
            forms = sylvester_forms(fp, order)
            for a, b in product(forms, forms):
                lhs = X1 ** a[0] * X2 ** a[1] * forms[b]
                if a == b:
                    lhs = lhs - s00
                ok = ok and in_ideal(lhs, [fp.f1, fp.f2], [("X1", "X2")])
        n += 1
    IDENTITY_SECONDS[5] = time.perf_counter() - start
    assert record(5, ok, f"{n} random pairs up to (3,4)")


def test_criterion_06_morley():
    start = time.perf_counter()
    rng = random.Random(6)
    groups = [("X1", "X2"), ("Y1", "Y2")]
    ok = True
    n = 0
    while n < 20:
        d1 = rng.randint(1, 3)
        d2 = rng.randint(d1, 4)
        fp = nonsingular_pair(rng, d1, d2)
        gens = [fp.f1, fp.f2, to_y(fp.f1), to_y(fp.f2)]
        m = morley_form(fp)
        delta = fp.delta
        ok = ok and in_ideal(m.component(delta) - sylvester_form(fp, (0, 0)), gens, groups)
        for x, y in (("X1", "Y1"), ("X2", "Y2")):
            ok = ok and in_ideal((var(x) - var(y)) * m.value, gens, groups)
        for nu in range(delta + 1):
            if delta - nu <= d1 - 1:
                exp = ZERO
                for (a1, a2), s in sylvester_forms(fp, delta - nu).items():
                    exp = exp + X1**a1 * X2**a2 * to_y(s)
                ok = ok and in_ideal(m.component(delta - nu) - exp, gens, groups)
        n += 1
    IDENTITY_SECONDS[6] = time.perf_counter() - start
    assert record(6, ok, f"{n} random pairs")


def test_criterion_07_iterated_sylvester():
    start = time.perf_counter()
    rng = random.Random(7)
    ok = True
    n = 0
    for k in range(12):
        d2 = 1 + k % 5
        fp = nonsingular_pair(rng, 1, d2)
        h = iterated_sylvester(fp)
        mf = morley_form(fp)
        for nu in range(0, d2 - 1):
            dm = det(M_matrix(fp, nu, mf))
            ok = ok and h[nu] in (dm, -dm)
        n += 1
    IDENTITY_SECONDS[7] = time.perf_counter() - start
    assert record(7, ok and n >= 10, f"{n} random (1, d2) pairs, d2 <= 5")


def test_criterion_08_cross_identities():
    start = time.perf_counter()
    fp = FormPair.generic(3, 3)
    S = subresultants(fp)
    d = fp.delta
    cor = all(Di == X2 * S[d - i] - X1 * S[d - i - 1] for i, Di in enumerate(D_i_family(fp)))
    lem = True
    for d2 in range(2, 6):
        g = FormPair.generic(2, d2)
        if not g.d1 - 1 <= 1 <= g.d2 - 2:
            continue
        Sg = subresultants(g)
        dg = g.delta
        M = M_matrix(g, 1).tolist()
        full = det([row + [var(f"Z{i}")] for i, row in enumerate(M)])
        coeffs = full.coefficients([f"Z{i}" for i in range(dg)])
        for i in range(dg):
            # Delta_i is minus the Z_(delta-1-i) coefficient of the bordered M_1
            Delta_i = -coeffs[tuple(int(k == dg - 1 - i) for k in range(dg))]
            lem = lem and Delta_i == X2 * Sg[i + 1] - X1 * Sg[i]
    IDENTITY_SECONDS[8] = time.perf_counter() - start
    assert record(8, cor and lem, f"D_i at (3,3): {cor}; Delta_i at (2, 3..5): {lem}")


def _parametric_form(rng, d):
    t = var("T")
    while True:
        cs = [rng.randint(-5, 5) for _ in range(d + 1)]
        ts = [rng.randint(-2, 2) for _ in range(d + 1)]
        if cs[0] and any(ts):
            return sum((Poly.const(c) + t.scale(s)) * X1 ** (d - i) * X2**i for i, (c, s) in enumerate(zip(cs, ts)))


def test_criterion_09_derivative_congruence():
    start = time.perf_counter()
    rng = random.Random(9)
    shapes = [(2, 2), (2, 3), (3, 2), (3, 3)]
    ok = True
    n = 0
    literal = 0
    for k in range(12):
        d1, d2 = shapes[k % 4]
        g1, g2 = _parametric_form(rng, d1), _parametric_form(rng, d2)
        ok = ok and resultant_derivative_congruence(g1, g2)
        literal += resultant_derivative_congruence(g1, g2, sign=(-1) ** (d1 + d2))
        n += 1
    IDENTITY_SECONDS[9] = time.perf_counter() - start
    detail = f"{n} random parameterized pairs with sign (-1)^d1; sign (-1)^(d1+d2) holds on {literal}/{n} (even d2 only)"
    assert record(9, ok, detail)


def test_criterion_09_literal_sign_needs_even_d2():
    rng = random.Random(99)
    g1, g2 = _parametric_form(rng, 2), _parametric_form(rng, 3)
    assert resultant_derivative_congruence(g1, g2, sign=-1) is False
    g1, g2 = _parametric_form(rng, 3), _parametric_form(rng, 2)
    assert resultant_derivative_congruence(g1, g2, sign=-1) is True


def test_criterion_10_inertia_certification():
    counts = []
    ok = True
    for g in (CUSP, NODAL, QUARTIC):
        mb = mu_basis(Parametrization.parse(*g))
        gs = moving_curve_generators(mb)
        for gen in gs.generators:
            ok = ok and is_inertia_form(gen.form, mb, mb.delta - gen.xdeg + 1)
        ok = ok and all(certify_generators(gs, mb).values())
        counts.append(len(gs.generators))
    assert record(10, ok, f"generators certified on three fixtures: {counts}")


def test_criterion_11_branch_criterion():
    ok = True
    details = []
    for name, g in (("cusp", CUSP), ("nodal", NODAL)):
        cm = curve_model(Parametrization.parse(*g))
        D = subresultants(cm.mb.form_pair())[0]
        recs = branch_records(cm, D)
        ok = ok and bool(recs) and all(r.holds and r.equality for r in recs)
        details.append(f"{name}: {len(recs)} branches")
    assert record(11, ok, "equality on " + ", ".join(details))


def test_criterion_12_performance():
    times = {}
    ok = True
    for name in ("cusp", "nodal", "quartic"):
        phi = parse_curve((DATA / f"{name}.curve").read_text())
        start = time.perf_counter()
        payload, passed = run_command("verify", phi)
        times[name] = time.perf_counter() - start
        ok = ok and passed and times[name] < 10
    identity = sum(IDENTITY_SECONDS.values())
    ok = ok and len(IDENTITY_SECONDS) == 6 and identity < 60
    detail = ", ".join(f"{k} {v:.2f}s" for k, v in times.items()) + f"; identity suites {identity:.2f}s"
    assert record(12, ok, detail)
