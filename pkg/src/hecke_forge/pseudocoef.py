"""Euler-Poincare functions, the averaged variant, and its finite lift.

All three live over the extended affine Hecke algebra of GL_e:

* `kottwitz_ep(theta)`: the alternating sum over a representative system
  theta of simplex-orbit types of signed, volume-normalized parahoric
  indicators with the rotation sign character,

      sum over T of (-1)^{d_T} (1/(n_T vol P_T)) 1_{K_T} sgn_T,

  expanded through K_T = union of z_T^k P_T and 1_{P_T} = sum of f_w^0.
  Signing it by (-1)^{e-1} gives the Steinberg pseudo-coefficient.

* `laumon_f0`: the exact average of the signed functions over all
  representative systems drawn from subsets of S = {1..e-1}; its weights
  collapse termwise because each orbit meets the subsets of S in
  u_T (d_T + 1) / e members.

* `assemble_F0`: the finite lift in the plain Iwahori-Hecke algebra whose
  central-character reduction at omega = 1 recovers laumon_f0.

Everything is exact rational arithmetic at a concrete q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .hecke import CentralHeckeElt, HeckeElt, central_reduction
from .qpoly import QPoly
from .weyl import (
    AffineElt, ParahoricType, _volume_any, canonical_rep, epsilon, mul,
    orbit_reps, parahoric_type, period_and_n, pi_power,
    parahoric_weyl_group, proper_subsets_of_s, standard_orbit_members,
)


@dataclass(frozen=True)
class PseudoCoefParams:
    e: int
    q: Fraction
    e_prime: int = 1
    omega_at_pi: object = 1

    def __post_init__(self):
        if self.e < 1 or self.e_prime < 1:
            raise ValueError("e and e' must be positive")


def _require_trivial_omega(params: PseudoCoefParams):
    if params.omega_at_pi != 1:
        raise ValueError(
            "Euler-Poincare elements carry sgn_T with sgn_T(uniformizer) = "
            "epsilon_T^{n_T} = 1, so they live at omega(pi) = 1 only")


def _type_data(T: ParahoricType, q):
    u, n = period_and_n(T)
    vol = _volume_any(T, Fraction(q))
    return u, n, epsilon(T), vol, parahoric_weyl_group(T)


def validate_representative_system(theta, e: int) -> list[ParahoricType]:
    theta = list(theta)
    canon = sorted(
        (canonical_rep(T) for T in theta),
        key=lambda T: (len(T.nodes), T.sorted_nodes()))
    expected = orbit_reps(e)
    if canon != expected or any(T.e != e for T in theta):
        raise ValueError("theta is not a representative system of the "
                         "rotation orbits of proper subsets of Z/e")
    return theta


def kottwitz_ep(theta, params: PseudoCoefParams) -> CentralHeckeElt:
    """The Euler-Poincare element attached to a representative system."""
    _require_trivial_omega(params)
    e = params.e
    theta = validate_representative_system(theta, e)
    terms: dict = {}
    for T in theta:
        u, n, eps, vol, W_T = _type_data(T, params.q)
        base = Fraction((-1) ** T.d, n) / vol
        for k in range(n):
            zk = pi_power(e, u * k)
            c = QPoly.const(base * eps ** k)
            for w in W_T:
                x = mul(zk, w)
                terms[x] = terms.get(x, QPoly()) + c
    return CentralHeckeElt(e, params.omega_at_pi, terms)


def kottwitz_pseudocoef(theta, params: PseudoCoefParams) -> CentralHeckeElt:
    """(-1)^(e-1) times the Euler-Poincare element: the Steinberg
    pseudo-coefficient attached to theta."""
    return kottwitz_ep(theta, params).scale(QPoly.const((-1) ** (params.e - 1)))


def laumon_f0(params: PseudoCoefParams) -> CentralHeckeElt:
    """The averaged pseudo-coefficient, summed over all T ⊆ S directly."""
    _require_trivial_omega(params)
    e = params.e
    sign = (-1) ** (e - 1)
    terms: dict = {}
    for T in proper_subsets_of_s(e):
        u, n, eps, vol, W_T = _type_data(T, params.q)
        base = Fraction(sign * (-1) ** T.d, T.d + 1) / vol
        for l in range(n):
            zl = pi_power(e, u * l)
            c = QPoly.const(base * eps ** l)
            for w in W_T:
                x = mul(zl, w)
                terms[x] = terms.get(x, QPoly()) + c
    return CentralHeckeElt(e, params.omega_at_pi, terms)


def representative_systems(e: int):
    """All representative systems whose members are subsets of S."""
    choices = [standard_orbit_members(R) for R in orbit_reps(e)]
    for combo in itertools.product(*choices):
        yield combo


def average_pseudocoef(params: PseudoCoefParams) -> CentralHeckeElt:
    """Exact mean of the signed Euler-Poincare elements over all standard
    representative systems; equals laumon_f0."""
    systems = list(representative_systems(params.e))
    total = None
    for theta in systems:
        elt = kottwitz_pseudocoef(theta, params)
        total = elt if total is None else total + elt
    return total.scale(QPoly.const(Fraction(1, len(systems))))


def assemble_F0_terms(params: PseudoCoefParams) -> list:
    """The raw terms of the lift: tuples (T, l, w, element, coefficient).

    Each coefficient carries exactly the four displayed factors
    (-1)^(e-1)/e' , (-1)^(d_T), 1/((d_T+1) vol P_T), epsilon_T^l.
    """
    e, ep = params.e, params.e_prime
    out = []
    for T in proper_subsets_of_s(e):
        u, n, eps, vol, W_T = _type_data(T, params.q)
        base = Fraction((-1) ** (e - 1) * (-1) ** T.d, ep * (T.d + 1)) / vol
        for w in W_T:
            for l in range(ep * n):
                x = mul(pi_power(e, u * l), w)
                out.append((T, l, w, x, base * eps ** l))
    return out


def assemble_F0(params: PseudoCoefParams) -> HeckeElt:
    """The finitely-supported lift of laumon_f0 in the T-basis."""
    terms: dict = {}
    for _T, _l, _w, x, c in assemble_F0_terms(params):
        terms[x] = terms.get(x, QPoly()) + QPoly.const(c)
    return HeckeElt(params.e, terms)


def projection_check(params: PseudoCoefParams) -> bool:
    """central_reduction(F_0, omega) = f_0, exactly."""
    lhs = central_reduction(assemble_F0(params), params.omega_at_pi)
    return lhs == laumon_f0(params)


def support_filter(N: int, e_prime: int, nu: int) -> list:
    """Solutions (T, l, k) of l*N/(n_T*e') = nu - k*N with T ⊆ S and
    0 <= l < e'*n_T; k scanned over a window wide enough to be exhaustive.

    For nu coprime to N the unique solution is (empty type, nu, 0).
    """
    if N < 1 or e_prime < 1 or N % e_prime:
        raise ValueError("need e' | N")
    if not 0 <= nu < N:
        raise ValueError("need 0 <= nu < N")
    e = N // e_prime
    out = []
    for T in proper_subsets_of_s(e):
        u, n = period_and_n(T)
        for l in range(e_prime * n):
            for k in range(-(e_prime * n + 1), e_prime * n + 2):
                # l * N/(n_T e') = l * u_T
                if l * u == nu - k * N:
                    out.append((T, l, k))
    return sorted(out, key=lambda t: (len(t[0].nodes), t[0].sorted_nodes(),
                                      t[1], t[2]))


def support_filter_is_unique(N: int, e_prime: int, nu: int) -> bool:
    if gcd(nu, N) != 1:
        raise ValueError("uniqueness is only guaranteed for nu coprime to N")
    sols = support_filter(N, e_prime, nu)
    e = N // e_prime
    return sols == [(parahoric_type((), e), nu, 0)]


# ---------------------------------------------------------------------------
# JSON export

def _coeff_to_json(c):
    if isinstance(c, QPoly):
        if c.is_constant():
            return str(c.constant_value())
        return [str(x) for x in c.coeffs]
    return str(c)


def _elt_to_json(x: AffineElt) -> dict:
    return {"translation": list(x.trans),
            "permutation": [i + 1 for i in x.perm]}


def hecke_elt_to_json(f: HeckeElt) -> list:
    return [{"element": _elt_to_json(x), "coefficient": _coeff_to_json(c)}
            for x, c in sorted(f.terms.items())]


def central_elt_to_json(f: CentralHeckeElt) -> list:
    return [{"element": _elt_to_json(x), "coefficient": _coeff_to_json(c)}
            for x, c in sorted(f.terms.items())]
