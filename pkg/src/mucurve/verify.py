"""Invariant checks run by ``mucurve verify`` on a single parametrization."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .adjoint import (
    CurveError,
    CurveModel,
    SingularityReport,
    adjoint_candidates,
    adjoint_pencils,
    branch_records,
    inverse_map,
    order_at_point,
)
from .inertia import certify_generators, is_inertia_form, moving_curve_generators, sylvester_form
from .mubasis import cross, triple_of
from .poly import ZERO
from .resultants import D_determinant, resultant, subresultants


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _run(name: str, fn: Callable[[], tuple[bool, str] | None]) -> Check:
    try:
        out = fn()
    except CurveError as exc:
        return Check(name, "skip", str(exc))
    except Exception as exc:  # noqa: BLE001
        return Check(name, "fail", f"{type(exc).__name__}: {exc}")
    if out is None:
        return Check(name, "skip", "not applicable")
    ok, detail = out
    return Check(name, "pass" if ok else "fail", detail)


def run_checks(cm: CurveModel, rep: SingularityReport | None) -> list[Check]:
    mb = cm.mb
    phi = cm.phi
    fp = mb.form_pair()
    checks: list[Check] = []

    def mu_basis_check():
        syz = all(phi.substitute(F).is_zero() for F in (mb.p, mb.q))
        cr = cross(triple_of(mb.p), triple_of(mb.q))
        prop = all(a == g.scale(mb.c) for a, g in zip(cr, phi.g))
        return syz and prop and mb.mu <= cm.d - mb.mu, f"mu = {mb.mu}, p x q = {mb.c} * phi"

    def implicit_check():
        res = resultant(fp)
        ok = res == cm.C ** cm.deg_phi * cm.alpha and phi.substitute(cm.C).is_zero()
        return ok, f"Res = {cm.alpha} * C^{cm.deg_phi}"

    def res_sres_check():
        S = subresultants(fp)
        sylv = sylvester_form(fp, (0, 0))
        n = fp.delta
        coeffs = sylv.coefficients(("X1", "X2"))
        acc = ZERO
        for i in range(n + 1):
            qi = coeffs.get((n - i, i), ZERO)
            acc = acc + S[n - i] * qi
        sign = 1 if (fp.d1 + 1) % 2 == 0 else -1
        return resultant(fp) == acc.scale(sign), "Res = (-1)^(d1+1) sum SRes_(delta-i) q_i"

    def d0_check():
        return D_determinant(fp, 0) == resultant(fp), "D(0) = Res"

    def generators_check():
        gs = moving_curve_generators(mb, cm.deg_phi)
        cert = certify_generators(gs, mb)
        vanish = all(phi.substitute(F).is_zero() for F in gs.forms())
        bad = [k for k, v in cert.items() if not v]
        return vanish and not bad, f"{len(cert)} generators, flag {gs.flag}" + (f", failed {bad}" if bad else "")

    checks.append(_run("mu-basis", mu_basis_check))
    checks.append(_run("implicitization", implicit_check))
    checks.append(_run("res-sres-identity", res_sres_check))
    checks.append(_run("D0-equals-Res", d0_check))
    checks.append(_run("generators-inertia", generators_check))

    if rep is None:
        return checks

    def dres_degree_check():
        ok = rep.total_degree <= rep.expected_degree
        ok = ok and sum(cl.epsilon for cl in rep.clusters) == rep.total_degree
        return ok, f"deg Delta = {rep.total_degree}, expected {rep.expected_degree}"

    def adjoint_order_check():
        if cm.d < 3:
            return None
        fails = []
        for F in adjoint_candidates(cm):
            for cl in rep.clusters:
                if cl.resolved and order_at_point(F, cl.point) < cl.multiplicity - 1:
                    fails.append(str(F))
        return not fails, "orders >= m_p - 1 at resolved points" + (f"; failed {fails}" if fails else "")

    def pencil_check():
        if cm.d < 3:
            return None
        pens = adjoint_pencils(cm)
        return all(is_inertia_form(F, mb, mb.delta) for F in pens), f"{len(pens)} pencils"

    def ledger_check():
        detail = f"{rep.genus_left} = {rep.genus_resolved} + {rep.genus_unresolved}"
        if rep.ledger_balanced:
            return True, detail
        if any(cl.resolved and cl.epsilon != cl.multiplicity * (cl.multiplicity - 1) for cl in rep.clusters):
            raise CurveError("infinitely near singular points are not resolved; " + detail, "E_SKIP")
        return False, detail

    def branch_check():
        if cm.d < 3:
            return None
        D = subresultants(fp)[0]
        recs = branch_records(cm, D)
        ok = all(r.holds for r in recs)
        eq = all(r.equality for r in recs)
        return ok, f"{len(recs)} branches, equality {'everywhere' if eq else 'not everywhere'}"

    def inverse_check():
        inv = inverse_map(cm)
        return True, f"({inv.A} : {inv.B}), orientation {inv.orientation:+d}"

    checks.append(_run("dres-degree", dres_degree_check))
    checks.append(_run("adjoint-orders", adjoint_order_check))
    checks.append(_run("adjoint-pencils-inertia", pencil_check))
    checks.append(_run("genus-ledger", ledger_check))
    checks.append(_run("branch-criterion", branch_check))
    checks.append(_run("inverse-map", inverse_check))
    return checks
