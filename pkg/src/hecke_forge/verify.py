"""Registry of verification checks behind `verify all`.

Each check emits VerificationReport records; group-enumeration checks
convert size-cap violations into `skipped` records.  Ranges follow the
module invariants, intersected with the requested (max_e, max_q) wherever
a finite group has to be enumerated; pure-combinatorics checks run at
their natural desk-scale ranges regardless (they cost milliseconds).
"""

from __future__ import annotations

import random
import time

from . import charformula, finglq, hecke, pseudocoef, repth, weyl
from .finglq import GroupSizeError, MultChar, all_characters, gl_group
from .qpoly import QPoly
from .report import VerificationReport

PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9)


def _timed(fn):
    t0 = time.perf_counter()
    reports = fn()
    ms = max(1, int((time.perf_counter() - t0) * 1000))
    share = max(1, ms // max(1, len(reports)))
    for r in reports:
        if r.status != "skipped":
            r.elapsed_ms = share
    return reports


# --- weyl --------------------------------------------------------------------

def check_length_oracle(max_e, max_q):
    out = []
    for e in range(2, min(4, max_e) + 1):
        ball = weyl.bfs_ball(e, 6)
        bad = sum(1 for x, d in ball.items() if weyl.length(x) != d)
        out.append(VerificationReport.exact(
            "weyl.length_closed_form_vs_bfs",
            {"e": e, "radius": 6, "elements": len(ball)},
            f"{len(ball) - bad} agree", f"{len(ball)} in ball", bad == 0))
    return out


def check_epsilon_sign_rule(max_e, max_q):
    out = []
    for e in range(1, 9):
        val = weyl.epsilon(weyl.parahoric_type((), e))
        out.append(VerificationReport.exact(
            "weyl.epsilon_empty_type", {"e": e},
            val, (-1) ** (e - 1), val == (-1) ** (e - 1)))
    return out


def check_orbit_partition(max_e, max_q):
    import itertools
    out = []
    for e in range(1, 9):
        reps = weyl.orbit_reps(e)
        ok = True
        count = 0
        for r in range(e):
            for nodes in itertools.combinations(range(e), r):
                T = weyl.parahoric_type(nodes, e)
                ok &= sum(1 for R in reps
                          if weyl.canonical_rep(T) == R) == 1
                count += 1
        out.append(VerificationReport.exact(
            "weyl.orbit_reps_partition", {"e": e, "proper_subsets": count},
            "each subset matched once", "partition", ok))
    return out


def check_rotation_period(max_e, max_q):
    import itertools
    out = []
    for e in range(1, 7):
        ok = True
        for r in range(e):
            for nodes in itertools.combinations(range(e), r):
                T = weyl.parahoric_type(nodes, e)
                u, n = weyl.period_and_n(T)
                ok &= u * n == e and weyl.rotate(T, u) == T
                ok &= all(weyl.rotate(T, j) != T for j in range(1, u))
        out.append(VerificationReport.exact(
            "weyl.rotation_period", {"e": e}, "minimal and divides",
            "u_T * n_T = e", ok))
    return out


def check_volume_poincare(max_e, max_q):
    out = []
    for e in range(1, 6):
        for q in [q for q in (2, 3, 4, 5) if q <= max(max_q, 2)]:
            S = weyl.parahoric_type(range(1, e), e)
            lhs = weyl.parahoric_volume(S, q)
            rhs = weyl.poincare_poly(e)(q)
            out.append(VerificationReport.exact(
                "weyl.full_volume_is_poincare", {"e": e, "q": q},
                lhs, rhs, lhs == rhs))
    return out


def check_perm_sign_multiplicative(max_e, max_q):
    rng = random.Random(2024)
    ok = True
    for _ in range(60):
        e = rng.randint(2, 6)
        a = tuple(rng.sample(range(e), e))
        b = tuple(rng.sample(range(e), e))
        ok &= weyl.perm_sign(weyl.perm_mul(a, b)) \
            == weyl.perm_sign(a) * weyl.perm_sign(b)
    return [VerificationReport.exact(
        "weyl.sign_multiplicative", {"trials": 60},
        "sign(ab)", "sign(a)sign(b)", ok)]


# --- hecke ---------------------------------------------------------------------

ORACLE_PAIRS = ((2, 2), (2, 3), (2, 5), (3, 2), (3, 3))


def check_hecke_oracle(max_e, max_q):
    out = []
    for e, q in ORACLE_PAIRS:
        if e > max_e or q > max_q:
            continue
        ok = hecke.oracle_matches_t_mul(e, q)
        out.append(VerificationReport.exact(
            "hecke.oracle_equivalence", {"e": e, "q": q},
            "t_mul constants at q", "double-coset convolution", ok))
    return out


def check_hecke_associativity(max_e, max_q):
    rng = random.Random(77)
    out = []
    for e in range(2, min(4, max_e) + 1):
        ok = True
        for _ in range(67):
            xs = []
            for _ in range(3):
                lam = tuple(rng.randint(-1, 1) for _ in range(e))
                w = tuple(rng.sample(range(e), e))
                xs.append(hecke.HeckeElt.basis(weyl.AffineElt(lam, w)))
            a, b, c = xs
            ok &= hecke.t_mul(hecke.t_mul(a, b), c) \
                == hecke.t_mul(a, hecke.t_mul(b, c))
        out.append(VerificationReport.exact(
            "hecke.t_mul_associative", {"e": e, "triples": 67},
            "(ab)c", "a(bc)", ok))
    return out


def check_central_morphism(max_e, max_q):
    rng = random.Random(99)
    out = []
    for omega in (1, -1):
        ok = True
        for _ in range(50):
            terms = {}
            for elt_terms in (1, 2):
                lam = tuple(rng.randint(-1, 1) for _ in range(2))
                w = tuple(rng.sample(range(2), 2))
                terms[weyl.AffineElt(lam, w)] = QPoly(
                    (rng.randint(-2, 2), rng.randint(0, 1)))
            a = hecke.HeckeElt(2, dict(terms))
            lam = tuple(rng.randint(-1, 1) for _ in range(2))
            w = tuple(rng.sample(range(2), 2))
            b = hecke.HeckeElt.basis(weyl.AffineElt(lam, w))
            lhs = hecke.central_reduction(hecke.t_mul(a, b), omega)
            rhs = hecke.central_mul(hecke.central_reduction(a, omega),
                                    hecke.central_reduction(b, omega))
            ok &= lhs == rhs
        out.append(VerificationReport.exact(
            "hecke.central_reduction_morphism", {"e": 2, "omega": omega,
                                                 "pairs": 50},
            "P(a*b)", "P(a)*P(b)", ok))
    return out


def check_pi_power_identities(max_e, max_q):
    out = []
    for e in range(2, max(2, max_e) + 1):
        pi = weyl.pi_element(e)
        t_pi = hecke.HeckeElt.basis(pi)
        inv_ok = hecke.t_mul(t_pi, hecke.HeckeElt.basis(weyl.inv(pi))) \
            == hecke.HeckeElt.unit(e)
        pow_ok = all(hecke.t_power(t_pi, k)
                     == hecke.HeckeElt.basis(weyl.pi_power(e, k))
                     for k in range(2 * e + 1))
        out.append(VerificationReport.exact(
            "hecke.rotation_invertible_and_powers", {"e": e},
            "T_Pi^k", "T_{Pi^k}", inv_ok and pow_ok))
    return out


# --- finglq ---------------------------------------------------------------------

def check_field_axioms(max_e, max_q):
    return [VerificationReport.exact(
        "finglq.field_axioms", {"q": q}, "axioms", "hold",
        finglq.check_field_axioms(q)) for q in PRIME_POWERS]


def check_gl_orders(max_e, max_q):
    out = []
    for n in range(1, max(2, max_e) + 1):
        for q in [q for q in PRIME_POWERS if q <= max_q]:
            params = {"n": n, "q": q}
            try:
                els = finglq.enumerate_group(n, q, finglq.SubgroupSpec.full())
            except GroupSizeError as exc:
                out.append(VerificationReport.skipped(
                    "finglq.gl_order_formula", params, str(exc)))
                continue
            expect = finglq.gl_order(n, q)
            out.append(VerificationReport.exact(
                "finglq.gl_order_formula", params, len(els), expect,
                len(els) == expect))
    return out


def check_elliptic_equivalence(max_e, max_q):
    out = []
    for n, q in ((2, 2), (2, 3), (3, 2)):
        if n > max_e or q > max_q:
            continue
        G = gl_group(n, q)
        G.precompute_inverses()
        ok = all(finglq.elliptic_regular(q, g)
                 == finglq.proper_parabolic_avoidance(n, q, g)
                 for g in G.elements)
        out.append(VerificationReport.exact(
            "finglq.elliptic_iff_avoids_parabolics", {"n": n, "q": q},
            "char poly irreducible", "avoids all conjugates", ok))
    return out


# --- repth ------------------------------------------------------------------------

def check_e_tau(max_e, max_q):
    out = []
    for e, q in ORACLE_PAIRS:
        if e > max_e or q > max_q:
            continue
        for chi in all_characters(q):
            params = {"e": e, "q": q, "chi": chi.k}
            try:
                d = repth.dim_from_e_tau(e, q, chi)  # e_tau checks idempotency
            except ValueError as exc:
                out.append(VerificationReport(
                    "repth.e_tau_idempotent_dim", params, str(exc), "",
                    1.0, 0.0, "fail"))
                continue
            err = abs(complex(d) - 1)
            tol = 0.0 if chi.is_rational else 1e-10
            out.append(VerificationReport.passfail(
                "repth.e_tau_idempotent_dim", params, d, 1, err, tol))
    return out


def check_trace_formula(max_e, max_q):
    out = []
    plan = [(2, 2, "all"), (2, 3, "all"), (3, 2, "reps")]
    for e, q, mode in plan:
        if e > max_e or q > max_q:
            continue
        G = gl_group(e, q)
        gammas = G.elements if mode == "all" else G.class_reps()
        from .finglq import get_field, mat_det
        F = get_field(q)
        for chi in all_characters(q):
            et = repth.e_tau(e, q, chi)
            ind = repth.induce(e, q, chi)
            worst = 0.0
            for gamma in gammas:
                val = repth.trace_via_coset_sum(gamma, et, ind)
                expect = chi(mat_det(F, gamma))
                worst = max(worst, abs(complex(val) - complex(expect)))
            out.append(VerificationReport.passfail(
                "repth.trace_via_coset_sum",
                {"e": e, "q": q, "chi": chi.k, "gammas": len(gammas)},
                "coset sum", "chi(det)", worst, 1e-8))
    return out


def check_generalized_trivial_char(max_e, max_q):
    out = []
    for e, q in ((2, 2), (2, 3), (3, 2)):
        if e > max_e or q > max_q:
            continue
        G = gl_group(e, q)
        from .finglq import get_field, mat_det
        F = get_field(q)
        for chi in all_characters(q):
            worst = 0.0
            for cls in G.conjugacy_classes():
                val = repth.char_generalized_trivial(cls[0], e, q, chi)
                expect = chi(mat_det(F, cls[0]))
                worst = max(worst, abs(complex(val) - complex(expect)))
            out.append(VerificationReport.passfail(
                "repth.generalized_trivial_character", {"e": e, "q": q, "chi": chi.k},
                "conjugation sum of Tr e_tau", "chi(det)", worst, 1e-8))
    return out


def check_alvis_curtis(max_e, max_q):
    out = []
    for e, q in ((2, 2), (2, 3), (3, 2), (2, 5)):
        if e > max_e or q > max_q:
            continue
        reps = repth.elliptic_regular_class_reps(e, q)
        for chi in all_characters(q):
            ok = all(repth.alvis_curtis_sign_check(g, e, q, chi, tol=1e-7)
                     for g in reps)
            out.append(VerificationReport.exact(
                "repth.alvis_curtis_sign",
                {"e": e, "q": q, "chi": chi.k, "classes": len(reps)},
                "Tr tau", "(-1)^(e-1) Tr St", ok))
    return out


def check_group_averaged_trace(max_e, max_q):
    import numpy as np
    out = []
    for e, q in ((2, 2), (2, 3)):
        if e > max_e or q > max_q:
            continue
        reps = [_steinberg_rep(e, q)]
        G = gl_group(e, q)
        from .finglq import get_field, mat_det
        F = get_field(q)
        for chi in all_characters(q):
            reps.append(repth.FinRep.from_character(
                G, lambda g, c=chi: c(mat_det(F, g))))
        rng = np.random.default_rng(17)
        worst = 0.0
        for trial in range(20):
            rep = reps[trial % len(reps)]
            v = rng.normal(size=rep.dim) + 1j * rng.normal(size=rep.dim)
            M = rep.invariant_inner_product()
            v = v / np.sqrt((v.conj() @ M @ v).real)
            T = rng.normal(size=(rep.dim, rep.dim)) \
                + 1j * rng.normal(size=(rep.dim, rep.dim))
            got = repth.conj_avg(T, rep, v)
            worst = max(worst, abs(got - np.trace(T)))
        out.append(VerificationReport.passfail(
            "repth.group_averaged_trace",
            {"e": e, "q": q, "trials": 20, "reps": len(reps)},
            "averaged form", "Tr T", worst, 1e-7))
    return out


def _steinberg_rep(e, q):
    import numpy as np
    chi = MultChar(q, 0)
    ind = repth.induce(e, q, chi)
    G = gl_group(e, q)
    st_vals = repth.steinberg_char(e, q, chi)
    P = np.zeros((ind.dim, ind.dim), dtype=complex)
    for g in G.elements:
        P += complex(st_vals.at(g)).conjugate() * ind.mat(g)
    P *= complex(st_vals.at(G.identity)) / G.order
    rank = int(round(np.trace(P).real))
    u, _s, _ = np.linalg.svd(P)
    basis = u[:, :rank]
    mats = {g: basis.conj().T @ ind.mat(g) @ basis for g in G.elements}
    return repth.FinRep(G, mats, rank)


def check_matrix_coefficient_sum(max_e, max_q):
    import numpy as np
    out = []
    for e, q in ((2, 2), (2, 3)):
        if e > max_e or q > max_q:
            continue
        st = _steinberg_rep(e, q)
        G = st.group
        M = st.invariant_inner_product()
        rng = np.random.default_rng(29)
        v = rng.normal(size=st.dim) + 1j * rng.normal(size=st.dim)
        v = v / np.sqrt((v.conj() @ M @ v).real)
        pick = random.Random(31)
        worst = 0.0
        for gamma in pick.sample(G.elements, min(10, G.order)):
            acc = 0j
            for x in G.elements:
                y = G.mul(G.mul(x, gamma), G.inv(x))
                acc += v.conj() @ M @ (st.mat(y) @ v)
            rhs = acc * st.dim / G.order
            worst = max(worst, abs(st.char_value(gamma) - rhs))
        out.append(VerificationReport.passfail(
            "repth.matrix_coefficient_sum",
            {"e": e, "q": q, "gammas": 10},
            "character", "coefficient sum", worst, 1e-7))
    return out


def check_frobenius_transport(max_e, max_q):
    out = []
    configs = []
    if 2 <= max_e and 2 <= max_q:
        configs.append(("gl22_borel_trivial", 2, 2,
                        lambda: repth.sigma_tilde(2, 2, MultChar(2, 0))))
    if 2 <= max_e and 3 <= max_q:
        configs.append(("gl23_borel_sign_sign", 2, 3,
                        lambda: repth.torus_character(3, (1, 1))))
        configs.append(("gl23_borel_asymmetric", 2, 3,
                        lambda: repth.torus_character(3, (0, 1))))
    for label, e, q, mk in configs:
        G = gl_group(e, q)
        B = repth.borel(e, q)
        dev = repth.frobenius_transport_check(G, B, mk(), trials=20)
        out.append(VerificationReport.passfail(
            "repth.module_action_transport", {"config": label, "pairs": 20},
            "transported action", "displayed sum", dev, 1e-9))
    return out


# --- pseudocoef ----------------------------------------------------------------------

def check_laumon_average(max_e, max_q):
    out = []
    for e in (2, 3, 4):
        if e > max_e:
            continue
        for q in (2, 3):
            if q > max_q:
                continue
            p = pseudocoef.PseudoCoefParams(e=e, q=q)
            ok = pseudocoef.average_pseudocoef(p) == pseudocoef.laumon_f0(p)
            out.append(VerificationReport.exact(
                "pseudocoef.laumon_average", {"e": e, "q": q},
                "mean of signed EP elements", "f_0", ok))
    return out


def check_projection(max_e, max_q):
    out = []
    for e in range(1, min(4, max_e) + 1):
        for q in (2, 3):
            if q > max_q:
                continue
            for ep in (1, 2):
                p = pseudocoef.PseudoCoefParams(e=e, q=q, e_prime=ep)
                ok = pseudocoef.projection_check(p)
                out.append(VerificationReport.exact(
                    "pseudocoef.central_reduction_of_lift",
                    {"e": e, "q": q, "e_prime": ep},
                    "P(F_0)", "f_0", ok))
    return out


def check_support_filter(max_e, max_q):
    from math import gcd
    ok = True
    cases = 0
    for N in range(1, 13):
        for ep in range(1, N + 1):
            if N % ep:
                continue
            for nu in range(N):
                if gcd(nu, N) != 1:
                    continue
                ok &= pseudocoef.support_filter_is_unique(N, ep, nu)
                cases += 1
    return [VerificationReport.exact(
        "pseudocoef.support_filter_unique", {"N_max": 12, "cases": cases},
        "surviving triples", "(empty, nu, 0)", ok)]


# --- charformula ------------------------------------------------------------------------

def check_constant_collapse(max_e, max_q):
    out = []
    for e in range(1, 7):
        for q in [q for q in (2, 3, 4, 5) if q <= max(max_q, 2)]:
            ok = charformula.normalized_constant_check(e, q) \
                and charformula.volume_is_poincare(e, q)
            out.append(VerificationReport.exact(
                "charformula.constant_collapse", {"e": e, "q": q},
                "C_S * (-1)^(e-1)", 1, ok))
    return out


def check_unramified_consistency(max_e, max_q):
    out = []
    for e, q in ((2, 2), (2, 3), (3, 2), (2, 5)):
        if e > max_e or q > max_q:
            continue
        reps = repth.elliptic_regular_class_reps(e, q)
        worst = 0.0
        for chi in all_characters(q):
            p = charformula.CharFormulaParams(e=e, q=q, chi=chi)
            st = repth.steinberg_char(e, q, chi)
            for gamma in reps:
                val = charformula.unramified_character_rhs(gamma, p, tol=1e-7)
                expect = (-1) ** (e - 1) * complex(st.at(gamma))
                worst = max(worst, abs(complex(val) - expect))
        out.append(VerificationReport.passfail(
            "charformula.unramified_consistency",
            {"e": e, "q": q, "classes": len(reps)},
            "idempotent sum", "signed Steinberg", worst, 1e-7))
    return out


def check_prefactor(max_e, max_q):
    from math import gcd
    ok = True
    cases = 0
    for N in range(1, 11):
        for nu in range(max(N, 1)):
            if gcd(nu, N) == 1:
                ok &= charformula.epsilon_cross_check(nu, N)
                cases += 1
    return [VerificationReport.exact(
        "charformula.ramified_prefactor", {"N_max": 10, "cases": cases},
        "k-averaged prefactor", "rotation sign power", ok)]


def check_power_identity(max_e, max_q):
    out = []
    for e in range(1, min(4, max_e) + 1):
        ok = charformula.power_identity_check(e)
        out.append(VerificationReport.exact(
            "charformula.power_identity", {"e": e, "k_max": 2 * e},
            "(a T_Pi)^k", "a^k T_{Pi^k}", ok))
    return out


ALL_CHECKS = [
    check_length_oracle,
    check_epsilon_sign_rule,
    check_orbit_partition,
    check_rotation_period,
    check_volume_poincare,
    check_perm_sign_multiplicative,
    check_hecke_oracle,
    check_hecke_associativity,
    check_central_morphism,
    check_pi_power_identities,
    check_field_axioms,
    check_gl_orders,
    check_elliptic_equivalence,
    check_e_tau,
    check_trace_formula,
    check_generalized_trivial_char,
    check_alvis_curtis,
    check_group_averaged_trace,
    check_matrix_coefficient_sum,
    check_frobenius_transport,
    check_laumon_average,
    check_projection,
    check_support_filter,
    check_constant_collapse,
    check_unramified_consistency,
    check_prefactor,
    check_power_identity,
]


def run_all(max_e: int = 3, max_q: int = 5, jobs: int = 1):
    """Run every check; reports come back in canonical order."""
    def run_one(fn):
        try:
            return _timed(lambda: fn(max_e, max_q))
        except GroupSizeError as exc:
            return [VerificationReport.skipped(fn.__name__, {}, str(exc))]

    reports = []
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(run_one, ALL_CHECKS):
                reports.extend(batch)
    else:
        for fn in ALL_CHECKS:
            reports.extend(run_one(fn))
    reports.sort(key=lambda r: r.sort_key())
    return reports
