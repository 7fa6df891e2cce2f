import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import CUSP, QUARTIC, random_pair, to_sympy
from mucurve.inertia import M_matrix, in_ideal, sylvester_form
from mucurve.linalg import det
from mucurve.mubasis import Parametrization, binary_coeffs, mu_basis
from mucurve.poly import ONE, ZERO, Poly, parse_poly, var
from mucurve.resultants import (
    D1_determinant,
    D_beta_coefficients,
    D_determinant,
    D_i_family,
    D_matrix,
    FormPair,
    bordered_matrix,
    congruence_sign,
    phi_form,
    resultant,
    resultant_derivative_congruence,
    subresultants,
    sylvester_matrix,
)

P = parse_poly
X1, X2 = var("X1"), var("X2")


def nonsingular_pair(rng, d1, d2):
    while True:
        fp = random_pair(rng, d1, d2)
        if resultant(fp):
            return fp


def test_sylvester_matrix_examples():
    fp = FormPair.from_forms(P("X1"), P("X2^2"))
    assert sylvester_matrix(fp).tolist() == [[P("1"), P("0"), P("0")], [P("0"), P("1"), P("0")], [P("0"), P("0"), P("1")]]
    g = FormPair.generic(1, 2)
    U0, U1, V0, V1, V2 = (var(n) for n in ("U0", "U1", "V0", "V1", "V2"))
    assert sylvester_matrix(g).tolist() == [[U0, ZERO, V0], [U1, U0, V1], [ZERO, U1, V2]]


def test_resultant_examples():
    assert resultant(FormPair.from_forms(P("X1"), P("X2"))) == ONE
    for d1 in range(1, 4):
        for d2 in range(d1, 5):
            U = [var("U0")] + [ZERO] * d1
            V = [ZERO] * d2 + [var(f"V{d2}")]
            assert resultant(FormPair(U, V)) == var("U0") ** d2 * var(f"V{d2}") ** d1
    mb = mu_basis(Parametrization.parse(*CUSP))
    assert resultant(mb.form_pair()) == P("-T1^3 + T2^2*T3")


def test_subresultant_monomial_case():
    for d1 in range(1, 4):
        for d2 in range(d1, 5):
            U = [var("U0")] + [ZERO] * d1
            V = [ZERO] * d2 + [var(f"V{d2}")]
            S = subresultants(FormPair(U, V))
            for i, s in enumerate(S):
                if i == d1 - 1:
                    # the signed cofactor carries (-1)^(d1-1) relative to the bare minor
                    expected = var("U0") ** (d2 - 1) * var(f"V{d2}") ** (d1 - 1)
                    assert s == expected.scale((-1) ** (d1 - 1))
                else:
                    assert s.is_zero()


def test_generic_2_2_subresultants():
    S = subresultants(FormPair.generic(2, 2))
    assert S[0] == P("U0*V1 - U1*V0")
    assert S[2] == P("U1*V2 - U2*V1")
    # the bordered expansion fixes SRes_1 = U2*V0 - U0*V2
    assert S[1] == P("U2*V0 - U0*V2")


def test_quartic_subresultants():
    S = subresultants(mu_basis(Parametrization.parse(*QUARTIC)).form_pair())
    assert S[0] == P("T2^2 - T1*T3 + T3^2")
    assert S[2] == P("T1^2 - T1*T3 + T2^2")
    assert S[1] == P("T2*(T1 + T3)")


def test_bordered_expansion_defines_subresultants():
    for d1, d2 in [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3)]:
        fp = FormPair.generic(d1, d2)
        S = subresultants(fp)
        full = det(bordered_matrix(fp))
        assert full == sum((S[fp.delta - i] * var(f"Z{i}") for i in range(fp.delta + 1)), ZERO)


def test_resultant_matches_sympy():
    # sympy.resultant drops the sign in some mixed-degree cases, so the
    # oracle is sympy's own Sylvester matrix
    from sympy.polys.subresultants_qq_zz import sylvester

    rng = random.Random(7)
    x = sympy.Symbol("X1")
    for d1 in range(1, 4):
        for d2 in range(d1, 5):
            fp = random_pair(rng, d1, d2)
            a = to_sympy(fp.f1).subs(sympy.Symbol("X2"), 1)
            b = to_sympy(fp.f2).subs(sympy.Symbol("X2"), 1)
            if fp.U[0] and fp.V[0]:
                assert sylvester(a, b, x).det() == resultant(fp).constant_coeff()


def _res_sres_rhs(fp):
    S = subresultants(fp)
    q = binary_coeffs(sylvester_form(fp, (0, 0)), fp.delta)
    acc = sum((S[fp.delta - i] * q[i] for i in range(fp.delta + 1)), ZERO)
    return acc.scale((-1) ** (fp.d1 + 1))


def test_res_equals_sres_combination_random():
    rng = random.Random(11)
    count = 0
    for _ in range(60):
        d1 = rng.randint(1, 4)
        d2 = rng.randint(d1, 5)
        fp = nonsingular_pair(rng, d1, d2)
        assert resultant(fp) == _res_sres_rhs(fp)
        count += 1
    assert count >= 50


def test_res_equals_sres_combination_generic():
    for d1, d2 in [(1, 2), (2, 2), (2, 3)]:
        fp = FormPair.generic(d1, d2)
        assert resultant(fp) == _res_sres_rhs(fp)


def test_bordered_specialized_to_sylvester_coefficients():
    rng = random.Random(5)
    for d1, d2 in [(1, 3), (2, 2), (2, 4), (3, 4)]:
        fp = nonsingular_pair(rng, d1, d2)
        q = binary_coeffs(sylvester_form(fp, (0, 0)), fp.delta)
        assert det(bordered_matrix(fp, q)) == resultant(fp).scale((-1) ** (d1 + 1))


def test_D0_and_D1_0():
    rng = random.Random(2)
    for d1, d2 in [(1, 1), (2, 3), (3, 3), (3, 5)]:
        fp = random_pair(rng, d1, d2)
        assert D_determinant(fp, 0) == resultant(fp)
        S = subresultants(fp)
        expected = sum((S[fp.delta - i] * var(f"Z{i}") for i in range(fp.delta + 1)), ZERO)
        assert D1_determinant(fp, 0) == expected


def test_D1_small_example():
    assert D1_determinant(FormPair.generic(1, 2), 0) == P("U0*Z1 - U1*Z0")


def test_D_matrix_size_and_range():
    fp = FormPair.generic(3, 4)
    for nu in range(3):
        assert D_matrix(fp, nu).rows == fp.delta - nu + 3
    with pytest.raises(ValueError):
        D_determinant(fp, 3)
    with pytest.raises(ValueError):
        D1_determinant(fp, -1)
    with pytest.raises(ValueError):
        D_beta_coefficients(fp, 5)


def test_monomial_specializations():
    for d1 in range(2, 5):
        for d2 in range(d1, 6):
            U = [1] + [0] * d1
            V = [0] * d2 + [1]
            fp = FormPair(U, V)
            for nu in range(d1):
                # h -> X1^(d1-nu-1) X2^(d2-nu)
                w = {f"W{i}": int(i == d2 - nu) for i in range(fp.delta - 2 * nu + 2)}
                z = {f"Z{i}": int(i == d2 - nu - 1) for i in range(fp.delta - nu + 1)}
                assert D_determinant(fp, nu).subs(w) == X2**nu * (-1) ** (nu * (d1 - nu))
                assert D1_determinant(fp, nu).subs(w).subs(z) == Poly.const((-1) ** ((d1 - nu - 1) * (nu + 1)))


def test_D_beta_nu0_is_res():
    fp = FormPair.generic(2, 3)
    coeffs = D_beta_coefficients(fp, 0)
    assert len(coeffs) == 1
    assert next(iter(coeffs.values())) == resultant(fp)


def test_D_i_family_generic_3_3():
    fp = FormPair.generic(3, 3)
    S = subresultants(fp)
    d = fp.delta
    for i, Di in enumerate(D_i_family(fp)):
        assert Di == X2 * S[d - i] - X1 * S[d - i - 1]


def test_delta_minors_generic_d1_2():
    # the displayed bordered M_1 determinant sum Delta_(delta-i) Z_i carries
    # Delta_(j+1) = -(X2 SRes_(j+1) - X1 SRes_j)
    for d2 in range(3, 6):
        fp = FormPair.generic(2, d2)
        S = subresultants(fp)
        d = fp.delta
        M = M_matrix(fp, 1).tolist()
        full = det([row + [var(f"Z{i}")] for i, row in enumerate(M)])
        coeffs = full.coefficients([f"Z{i}" for i in range(d)])
        for i in range(d):
            key = tuple(int(k == i) for k in range(d))
            j = d - i - 1
            assert coeffs[key] == -(X2 * S[j + 1] - X1 * S[j])


@pytest.mark.parametrize("d1,d2", [(3, 3), (3, 4)])
def test_phi_D_identity_membership(d1, d2):
    fp = nonsingular_pair(random.Random(d1 * 10 + d2), d1, d2)
    s00 = sylvester_form(fp, (0, 0))
    for nu in range(1, d1):
        lhs = phi_form(fp, nu) * D_determinant(fp, nu) - (D1_determinant(fp, nu) * s00).scale((-1) ** (d1 + 1))
        names = [f"W{i}" for i in range(fp.delta - 2 * nu + 2)] + [f"Z{i}" for i in range(fp.delta - nu + 1)]
        assert in_ideal(lhs, [fp.f1, fp.f2], [("X1", "X2")], split=names)


def test_phi_D_identity_wrong_sign_fails():
    fp = nonsingular_pair(random.Random(34), 3, 4)
    s00 = sylvester_form(fp, (0, 0))
    lhs = phi_form(fp, 1) * D_determinant(fp, 1) + (D1_determinant(fp, 1) * s00).scale((-1) ** 4)
    names = [f"W{i}" for i in range(fp.delta)] + [f"Z{i}" for i in range(fp.delta)]
    assert not in_ideal(lhs, [fp.f1, fp.f2], [("X1", "X2")], split=names)


def test_congruence_examples():
    assert resultant_derivative_congruence(P("X1^2 - T*X2^2"), P("X2^2"))
    assert resultant_derivative_congruence(P("X1^2 + 3*X1*X2 - X2^2"), P("2*X1^2 - X2^2"))
    assert resultant_derivative_congruence(P("X1^2 + T*X1*X2 - 2*X2^2"), P("3*X1^2 + X1*X2 + 5*X2^2"))
    with pytest.raises(ValueError):
        resultant_derivative_congruence(P("X1 - T*X2"), P("X2^2"))


def test_congruence_sign_parity():
    assert congruence_sign(2, 2) == 1
    assert congruence_sign(3, 2) == -1
    assert congruence_sign(2, 3) == 1


def _random_parametric(rng, d):
    t = var("T")
    while True:
        cs = [rng.randint(-5, 5) for _ in range(d + 1)]
        ts = [rng.randint(-2, 2) for _ in range(d + 1)]
        if cs[0] == 0 or not any(ts):
            continue
        return sum((Poly.const(c) + t.scale(s)) * X1 ** (d - i) * X2**i for i, (c, s) in enumerate(zip(cs, ts)))


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3)]), st.integers(0, 10**6))
def test_congruence_random_pairs(degs, seed):
    rng = random.Random(seed)
    g1 = _random_parametric(rng, degs[0])
    g2 = _random_parametric(rng, degs[1])
    assert resultant_derivative_congruence(g1, g2)


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.integers(0, 10**6))
def test_res_equals_sres_property(d1, extra, seed):
    fp = random_pair(random.Random(seed), d1, d1 + extra)
    assert resultant(fp) == _res_sres_rhs(fp)
