from fractions import Fraction

import pytest

from hecke_forge.pseudocoef import (
    PseudoCoefParams, assemble_F0, assemble_F0_terms, average_pseudocoef,
    hecke_elt_to_json, kottwitz_ep, kottwitz_pseudocoef, laumon_f0,
    projection_check, representative_systems, support_filter,
    support_filter_is_unique, validate_representative_system,
)
from hecke_forge.qpoly import QPoly
from hecke_forge.weyl import (
    affine_identity, epsilon, orbit_reps, parahoric_type, pi_element,
    _volume_any,
)


def params(e, q, e_prime=1, omega=1):
    return PseudoCoefParams(e=e, q=q, e_prime=e_prime, omega_at_pi=omega)


def test_kottwitz_ep_e1():
    p = params(1, 2)
    elt = kottwitz_ep(orbit_reps(1), p)
    # single vertex orbit: coefficient 1/vol(Kbar) = 1/n_T = 1 on the unit class
    assert elt.terms == {affine_identity(1): QPoly.const(1)}


def test_kottwitz_ep_identity_class_coefficient_e2_q2():
    p = params(2, 2)
    elt = kottwitz_ep(orbit_reps(2), p)
    # T = {1}: simplex dim 0, vol(Kbar) = 1 * (1+q) = 3, sign +
    # T = empty: simplex dim 1, vol(Kbar) = 2 * 1 = 2, sign -
    ident = affine_identity(2)
    assert elt.coeff(ident) == QPoly.const(Fraction(1, 3) - Fraction(1, 2))
    # the Pi-supported class for T = empty carries epsilon = (-1)^(e-1)
    pi = pi_element(2)
    assert elt.coeff(pi) == QPoly.const(Fraction(-1, 2) * epsilon(parahoric_type((), 2)))


def test_kottwitz_ep_rejects_bad_theta():
    p = params(2, 2)
    with pytest.raises(ValueError):
        kottwitz_ep([parahoric_type((), 2)], p)  # missing the vertex orbit
    with pytest.raises(ValueError):
        kottwitz_ep([parahoric_type((), 2), parahoric_type({1}, 2),
                     parahoric_type({0}, 2)], p)  # orbit hit twice


def test_kottwitz_ep_accepts_rotated_representatives():
    p = params(2, 3)
    a = kottwitz_ep([parahoric_type((), 2), parahoric_type({1}, 2)], p)
    b = kottwitz_ep([parahoric_type((), 2), parahoric_type({0}, 2)], p)
    # different systems give different functions, but both are valid
    assert a != b
    assert a.coeff(affine_identity(2)) == b.coeff(affine_identity(2))


def test_omega_must_be_trivial():
    with pytest.raises(ValueError):
        laumon_f0(params(2, 2, omega=-1))
    with pytest.raises(ValueError):
        kottwitz_ep(orbit_reps(2), params(2, 2, omega=1j))


def test_laumon_f0_e1():
    elt = laumon_f0(params(1, 5))
    assert elt.terms == {affine_identity(1): QPoly.const(1)}


def test_laumon_f0_e2_q2_coefficients():
    elt = laumon_f0(params(2, 2))
    e = 2
    sign = -1  # (-1)^(e-1)
    ident = affine_identity(e)
    # identity class: T=empty contributes -(1/2), T={1} contributes +1/3
    assert elt.coeff(ident) == QPoly.const(sign * (Fraction(-1, 2) + Fraction(1, 3)))
    # s_1 class: only T={1}; Pi class: only T=empty with epsilon twist
    from hecke_forge.weyl import simple_reflection
    s1 = simple_reflection(2, 1)
    assert elt.coeff(s1) == QPoly.const(sign * Fraction(1, 3))
    assert elt.coeff(pi_element(2)) == QPoly.const(sign * Fraction(-1, 2) * (-1))


def test_representative_system_counts():
    assert len(list(representative_systems(2))) == 1
    assert len(list(representative_systems(3))) == 2
    assert len(list(representative_systems(4))) == 6


@pytest.mark.parametrize("e", [2, 3, 4])
@pytest.mark.parametrize("q", [2, 3])
def test_laumon_average_identity_exact(e, q):
    p = params(e, q)
    assert average_pseudocoef(p) == laumon_f0(p)


def test_average_needs_the_sign():
    # without the (-1)^(e-1), the average does NOT equal f_0 for even e
    p = params(2, 2)
    systems = list(representative_systems(2))
    total = None
    for theta in systems:
        elt = kottwitz_ep(theta, p)
        total = elt if total is None else total + elt
    mean_unsigned = total.scale(QPoly.const(Fraction(1, len(systems))))
    assert mean_unsigned != laumon_f0(p)


# --- the lift ---------------------------------------------------------------

def test_assemble_F0_e1():
    f = assemble_F0(params(1, 3))
    assert f.terms == {affine_identity(1): QPoly.const(1)}


def test_assemble_F0_e2_support_and_terms():
    p = params(2, 2)
    terms = assemble_F0_terms(p)
    # T = empty: w = 1, l in {0, 1}; T = {1}: w in {1, s}, l in {0}
    assert len(terms) == 4
    f = assemble_F0(p)
    assert len(f.terms) == 3  # 1, Pi, s_1: the two w=1 terms overlap at T_1
    for T, l, w, x, c in terms:
        d = T.d
        vol = _volume_any(T, Fraction(2))
        expect = Fraction(1, (d + 1)) / vol
        assert abs(c) == expect
        assert c == Fraction((-1) ** (2 - 1) * (-1) ** d, (d + 1)) / vol \
            * epsilon(T) ** l


@pytest.mark.parametrize("e", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("e_prime", [1, 2])
def test_projection_identity(e, q, e_prime):
    assert projection_check(params(e, q, e_prime=e_prime))


def test_term_coefficients_carry_only_displayed_factors():
    for e, q, ep in [(2, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1)]:
        p = params(e, q, e_prime=ep)
        for T, l, w, x, c in assemble_F0_terms(p):
            vol = _volume_any(T, Fraction(q))
            assert abs(c) == Fraction(1, ep * (T.d + 1)) / vol


# --- the support filter -------------------------------------------------------

def test_support_filter_examples():
    sols = support_filter(4, 1, 1)
    assert sols == [(parahoric_type((), 4), 1, 0)]
    sols = support_filter(6, 2, 5)
    assert sols == [(parahoric_type((), 3), 5, 0)]
    # non-coprime nu: an extra solution with n_T = 2 appears
    sols = support_filter(4, 1, 2)
    assert (parahoric_type((), 4), 2, 0) in sols
    extra = [s for s in sols if s[0].nodes]
    assert extra
    from hecke_forge.weyl import period_and_n
    assert any(period_and_n(T)[1] == 2 for T, _, _ in extra)


def test_support_filter_uniqueness_exhaustive():
    for N in range(1, 13):
        for e_prime in range(1, N + 1):
            if N % e_prime:
                continue
            for nu in range(N):
                from math import gcd
                if gcd(nu, N) != 1:
                    continue
                assert support_filter_is_unique(N, e_prime, nu)


def test_support_filter_validation():
    with pytest.raises(ValueError):
        support_filter(4, 3, 1)
    with pytest.raises(ValueError):
        support_filter(4, 1, 4)
    with pytest.raises(ValueError):
        support_filter_is_unique(4, 1, 2)


def test_json_export_roundtrip_shape():
    f = assemble_F0(params(2, 2))
    data = hecke_elt_to_json(f)
    assert len(data) == len(f.terms)
    for rec in data:
        assert set(rec) == {"element", "coefficient"}
        assert set(rec["element"]) == {"translation", "permutation"}
