"""Finite-group representation machinery for GL(e, F_q), f = 1 scope.

The inducing datum is a character chi of F_q^x, inflated to the Borel B
through the diagonal product; the intertwining algebra of the induced
module has the e!-element basis

    fbar_w(b1 w b2) = (1/|B|) * sigma(b1) * sigma(b2),   w in W_0,

supported on the Bruhat cell of w, and the normalized sum of the basis is
the idempotent cutting out the one-dimensional constituent chi∘det.  The
trace formulas, the Steinberg alternating sum, the sign identity on
elliptic regular classes, and the module-action transport identity are
all implemented against brute-force sums over the group.

Convolution uses the counting measure giving every singleton volume 1,
so the unit is the function (1/|H|) sigma on H.  Values stay exact
Fractions whenever the character is rational (k = 0 or (q-1)/2).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import finglq
from .finglq import (
    MatrixGroup, MultChar, SubgroupSpec, bruhat_decomposition, diag_product,
    get_field, gl_group, perm_matrix, subgroup,
)
from .weyl import all_perms, from_perm, length, poincare_poly


@lru_cache(maxsize=None)
def borel(e: int, q: int) -> MatrixGroup:
    return subgroup(e, q, SubgroupSpec.borel())


def sigma_tilde(e: int, q: int, chi: MultChar):
    """chi inflated to the Borel: b -> chi(product of diagonal entries)."""
    F = get_field(q)

    def sig(b):
        return chi(diag_product(F, b))

    return sig


# ---------------------------------------------------------------------------
# bi-equivariant End(X)-valued functions (X is 1-dimensional for f = 1)

@dataclass
class FinHeckeElt:
    """P-bi-equivariant function on GL(e, F_q) with scalar values.

    `values` maps group elements to scalars (Fraction or complex); missing
    keys are zero.  `sigma` is the restriction datum on the subgroup.
    """
    group: MatrixGroup
    sub: MatrixGroup
    sigma: object
    values: dict = field(repr=False)

    def __call__(self, g):
        return self.values.get(g, 0)

    def scale(self, c) -> "FinHeckeElt":
        return FinHeckeElt(self.group, self.sub, self.sigma,
                           {g: c * v for g, v in self.values.items()})

    def __add__(self, other: "FinHeckeElt") -> "FinHeckeElt":
        out = dict(self.values)
        for g, v in other.values.items():
            out[g] = out.get(g, 0) + v
        return FinHeckeElt(self.group, self.sub, self.sigma, out)

    def support_size(self) -> int:
        return sum(1 for v in self.values.values() if v != 0)

    def convolve_at(self, other: "FinHeckeElt", g):
        """(self * other)(g) = sum_x self(x) other(x^-1 g)."""
        G = self.group
        acc = 0
        for x, vx in self.values.items():
            if vx == 0:
                continue
            w = other.values.get(G.mul(G.inv(x), g), 0)
            if w != 0:
                acc += vx * w
        return acc

    def convolve(self, other: "FinHeckeElt") -> "FinHeckeElt":
        """Full convolution; quadratic in the support, desk scale only."""
        G = self.group
        out: dict = {}
        for x, vx in self.values.items():
            if vx == 0:
                continue
            for y, vy in other.values.items():
                if vy == 0:
                    continue
                z = G.mul(x, y)
                out[z] = out.get(z, 0) + vx * vy
        return FinHeckeElt(self.group, self.sub, self.sigma, out)

    def equivariance_check(self, samples: int = 50, seed: int = 0,
                           tol: float = 1e-9) -> bool:
        """f(h1 g h2) = sigma(h1) f(g) sigma(h2) on random triples."""
        rng = random.Random(seed)
        G, H = self.group, self.sub
        for _ in range(samples):
            g = rng.choice(G.elements)
            h1 = rng.choice(H.elements)
            h2 = rng.choice(H.elements)
            lhs = complex(self(G.mul(G.mul(h1, g), h2)))
            rhs = complex(self.sigma(h1)) * complex(self(g)) \
                * complex(self.sigma(h2))
            if abs(lhs - rhs) > tol:
                return False
        return True


@lru_cache(maxsize=None)
def finite_hecke_basis(e: int, q: int, chi: MultChar) -> list[FinHeckeElt]:
    """The e! basis functions fbar_w, ordered by one-line permutation.

    Verifies that the commutant of the induced module has dimension e!,
    so the (visibly independent) basis spans it.
    """
    G = gl_group(e, q)
    B = borel(e, q)
    sig = sigma_tilde(e, q, chi)
    dec = bruhat_decomposition(e, q)
    norm = Fraction(1, B.order)
    per_cell: dict = {w: {} for w in all_perms(e)}
    for g, (w, v) in dec.items():
        per_cell[w][g] = norm * chi(v)
    basis = [FinHeckeElt(G, B, sig, per_cell[w]) for w in all_perms(e)]
    dim = intertwining_dimension(e, q, chi)
    if dim != len(basis):
        raise ValueError(
            f"intertwining dimension {dim} != expected {len(basis)}")
    return basis


def intertwining_dimension(e: int, q: int, chi: MultChar) -> int:
    """dim End_G(Ind_B sigma) = <chi_Ind, chi_Ind>, by a full-group sum."""
    ind = induced_character(e, q, chi)
    G = gl_group(e, q)
    acc = 0.0
    for g in G.elements:
        acc += abs(complex(ind(g))) ** 2
    val = acc / G.order
    out = round(val)
    if abs(val - out) > 1e-6:
        raise ValueError(f"non-integral character norm {val}")
    return out


def induced_character(e: int, q: int, chi: MultChar):
    """Character of Ind_B^G of the inflated chi, via fixed cosets."""
    G = gl_group(e, q)
    B = borel(e, q)
    data = _coset_data(G, B)
    sig = sigma_tilde(e, q, chi)

    def char(g):
        acc = 0
        for r in data.transversal:
            i, h = data.coset_of[G.mul(r, g)]
            if data.transversal[i] == r:
                acc += sig(h)
        return acc

    return char


def basis_sign(chi: MultChar, w) -> object:
    """chi(-1)^l(w): the support-preserving renormalization constant.

    det(b1 w b2) = (-1)^l(w) diag(b1) diag(b2), so chi(-1)^l(w) * fbar_w is
    (1/|B|) chi∘det on the cell of w; these renormalized elements satisfy
    the standard quadratic relations for every chi (the natural fbar_w do
    only when chi(-1) = 1).  Idempotency and the dimension identity force
    this constant.
    """
    F = get_field(chi.q)
    return chi(F.neg(1)) ** length(from_perm(w))


@lru_cache(maxsize=None)
def e_tau(e: int, q: int, chi: MultChar) -> FinHeckeElt:
    """Idempotent of the one-dimensional constituent chi∘det: the
    normalized sum of the renormalized basis (plain sum when chi(-1) = 1).
    Raises if idempotency fails."""
    basis = finite_hecke_basis(e, q, chi)
    p_inv = Fraction(1, int(poincare_poly(e)(q)))
    out = None
    for w, b in zip(all_perms(e), basis):
        term = b.scale(p_inv * basis_sign(chi, w))
        out = term if out is None else out + term
    if not _idempotency_holds(out, e, q):
        raise ValueError("e_tau failed idempotency: normalization bug")
    return out


def _idempotency_holds(elt: FinHeckeElt, e: int, q: int,
                       tol: float = 1e-10) -> bool:
    """Check elt * elt = elt.  Both sides are bi-equivariant, so checking
    at one point per Bruhat cell is equivalent; small groups are also
    checked in full."""
    G = elt.group
    G.precompute_inverses()
    exact = all(isinstance(v, Fraction) for v in elt.values.values())
    for w in all_perms(e):
        pt = perm_matrix(e, w)
        lhs = elt.convolve_at(elt, pt)
        rhs = elt(pt)
        if exact:
            if lhs != rhs:
                return False
        elif abs(complex(lhs) - complex(rhs)) > tol:
            return False
    if G.order <= 700:
        full = elt.convolve(elt)
        for g in G.elements:
            if exact and full(g) != elt(g):
                return False
            if not exact and abs(complex(full(g)) - complex(elt(g))) > tol:
                return False
    return True


def dim_from_e_tau(e: int, q: int, chi: MultChar) -> Fraction:
    """Tr(e_tau(1)) * |G|; the dimension of the cut-out constituent."""
    et = e_tau(e, q, chi)
    G = gl_group(e, q)
    val = et(G.identity) * G.order
    return val


# ---------------------------------------------------------------------------
# induced representations as explicit matrix modules

@dataclass
class _CosetData:
    transversal: list
    coset_of: dict  # g -> (i, h) with g = h * transversal[i]


def _coset_data(G: MatrixGroup, H: MatrixGroup) -> _CosetData:
    key = "_coset_cache"
    cache = getattr(G, key, None)
    if cache is None:
        cache = {}
        setattr(G, key, cache)
    got = cache.get(H.spec)
    if got is not None:
        return got
    coset_of: dict = {}
    transversal: list = []
    for g in [G.identity] + G.elements:
        if g in coset_of:
            continue
        i = len(transversal)
        transversal.append(g)
        for h in H.elements:
            coset_of[G.mul(h, g)] = (i, h)
    data = _CosetData(transversal, coset_of)
    cache[H.spec] = data
    return data


@dataclass
class FinRep:
    """Matrix representation: element -> invertible complex matrix."""
    group: MatrixGroup
    mats: dict = field(repr=False)
    dim: int = 0

    @classmethod
    def from_character(cls, group: MatrixGroup, char_fn) -> "FinRep":
        mats = {g: np.array([[complex(char_fn(g))]]) for g in group.elements}
        return cls(group, mats, 1)

    def mat(self, g) -> np.ndarray:
        return self.mats[g]

    def char_value(self, g) -> complex:
        return complex(np.trace(self.mats[g]))

    def check_homomorphism(self, samples: int = 40, seed: int = 1,
                           tol: float = 1e-9) -> bool:
        rng = random.Random(seed)
        G = self.group
        for _ in range(samples):
            a, b = rng.choice(G.elements), rng.choice(G.elements)
            if np.max(np.abs(self.mat(G.mul(a, b))
                             - self.mat(a) @ self.mat(b))) > tol:
                return False
        return True

    def invariant_inner_product(self) -> np.ndarray:
        """Group-averaged Hermitian form M with rho(g)^H M rho(g) = M."""
        M = np.zeros((self.dim, self.dim), dtype=complex)
        for g in self.group.elements:
            R = self.mat(g)
            M += R.conj().T @ R
        return M / self.group.order

    def character_norm(self) -> float:
        acc = 0.0
        for cls in self.group.conjugacy_classes():
            acc += len(cls) * abs(self.char_value(cls[0])) ** 2
        return acc / self.group.order


class InducedRep:
    """Ind_H^G of a scalar sigma: functions f with f(hg) = sigma(h) f(g),
    right translation action, coordinates = values on a right transversal."""

    def __init__(self, G: MatrixGroup, H: MatrixGroup, sigma):
        self.group = G
        self.sub = H
        self.sigma = sigma
        data = _coset_data(G, H)
        self.transversal = data.transversal
        self.coset_of = data.coset_of
        self.dim = len(self.transversal)
        self._mats: dict = {}

    def mat(self, y) -> np.ndarray:
        got = self._mats.get(y)
        if got is None:
            G = self.group
            m = np.zeros((self.dim, self.dim), dtype=complex)
            for i, r in enumerate(self.transversal):
                j, h = self.coset_of[G.mul(r, y)]
                m[i, j] = complex(self.sigma(h))
            self._mats[y] = got = m
        return got

    def char_value(self, y) -> complex:
        G = self.group
        acc = 0j
        for i, r in enumerate(self.transversal):
            j, h = self.coset_of[G.mul(r, y)]
            if j == i:
                acc += complex(self.sigma(h))
        return acc

    def as_finrep(self) -> FinRep:
        mats = {g: self.mat(g) for g in self.group.elements}
        return FinRep(self.group, mats, self.dim)

    def coordinates(self, fn) -> np.ndarray:
        """Coordinate vector of a function given on the whole group."""
        return np.array([complex(fn(r)) for r in self.transversal])

    def value_at(self, vec: np.ndarray, g) -> complex:
        i, h = self.coset_of[g]
        return complex(self.sigma(h)) * vec[i]

    def hecke_operator(self, phi: FinHeckeElt) -> np.ndarray:
        """Matrix of f -> phi * f in the transversal coordinates."""
        G, H = self.group, self.sub
        n = self.dim
        m = np.zeros((n, n), dtype=complex)
        for i, ri in enumerate(self.transversal):
            for j, rj in enumerate(self.transversal):
                base = G.mul(ri, G.inv(rj))
                acc = 0j
                for h in H.elements:
                    v = phi.values.get(G.mul(base, G.inv(h)), 0)
                    if v != 0:
                        acc += complex(v) * complex(self.sigma(h))
                m[i, j] = acc
        return m


def induce(e: int, q: int, chi: MultChar) -> InducedRep:
    """Ind_B^G of the inflated chi."""
    return InducedRep(gl_group(e, q), borel(e, q), sigma_tilde(e, q, chi))


def induce_from(G: MatrixGroup, H: MatrixGroup, sigma) -> InducedRep:
    return InducedRep(G, H, sigma)


def subrep_from_idempotent(e_idem: FinHeckeElt, ind: InducedRep,
                           tol: float = 1e-8) -> FinRep:
    """Restrict the action to the image of the convolution idempotent.

    Verifies idempotency of the operator and irreducibility of the result
    (character norm 1).
    """
    E = ind.hecke_operator(e_idem)
    if np.max(np.abs(E @ E - E)) > tol:
        raise ValueError("operator is not idempotent")
    rank = int(round(np.trace(E).real))
    if rank == 0:
        raise ValueError("zero idempotent")
    u, s, _ = np.linalg.svd(E)
    basis = u[:, :rank]
    if s[rank - 1] < tol:
        raise ValueError("idempotent rank does not match its trace")
    mats = {}
    for g in ind.group.elements:
        mats[g] = basis.conj().T @ ind.mat(g) @ basis
    rep = FinRep(ind.group, mats, rank)
    norm = rep.character_norm()
    if abs(norm - 1) > 1e-6:
        raise ValueError(f"cut-out module is not irreducible: <chi,chi>={norm}")
    return rep


def isotypic_projector_character(ind: InducedRep, char_fn, degree: int):
    """Oracle: character of the char_fn-isotypic component of ind.

    Classical projector P = (deg/|G|) sum_g conj(char(g)) rho(g); returns
    the class function gamma -> Tr(rho(gamma) P).
    """
    G = ind.group
    n = ind.dim
    P = np.zeros((n, n), dtype=complex)
    for g in G.elements:
        P += complex(char_fn(g)).conjugate() * ind.mat(g)
    P *= degree / G.order

    def value(gamma) -> complex:
        return complex(np.trace(ind.mat(gamma) @ P))

    return value


# ---------------------------------------------------------------------------
# trace formulas

def conj_avg(T: np.ndarray, rep: FinRep, v: np.ndarray) -> complex:
    """Average of <v, rho(x) T rho(x^-1) v> over the group, times dim/|G|.

    For irreducible rep and unit v (in the invariant form) this equals
    Tr(T).
    """
    G = rep.group
    M = rep.invariant_inner_product()
    nv = (v.conj() @ M @ v).real
    if abs(nv - 1) > 1e-8:
        raise ValueError("v must be a unit vector for the invariant form")
    acc = 0j
    for x in G.elements:
        Rx = rep.mat(x)
        Rxi = rep.mat(G.inv(x))
        acc += v.conj() @ M @ (Rx @ T @ Rxi @ v)
    return complex(acc * rep.dim / G.order)


def trace_via_coset_sum(gamma, e_idem: FinHeckeElt,
                      ind: InducedRep | None = None,
                      tol: float = 1e-9) -> complex:
    """Trace of the idempotent-cut subrepresentation at gamma, evaluated
    through the coset sum

        (1/lam1) (dim pi_e / dim sigma) (|H|/|G|)
            * sum over H\\G of [Tr e](x gamma x^-1).

    Hypotheses are checked, not assumed: the cut module is irreducible
    (character norm), e(x^-1) is the adjoint of e(x), and e(1) is a
    positive scalar lam1.
    """
    G, H = e_idem.group, e_idem.sub
    if ind is None:
        ind = InducedRep(G, H, e_idem.sigma)
    lam1 = e_idem(G.identity)
    if abs(complex(lam1).imag) > tol or complex(lam1).real <= 0:
        raise ValueError("e(1) must be a positive scalar")
    G.precompute_inverses()
    for x in G.elements:  # adjointness: scalar sigma, so adjoint = conjugate
        if abs(complex(e_idem(G.inv(x))) - complex(e_idem(x)).conjugate()) > tol:
            raise ValueError("e(x^-1) is not the adjoint of e(x)")
    E = ind.hecke_operator(e_idem)
    dim_pi = int(round(np.trace(E).real))
    norm = _operator_char_norm(ind, E)
    if abs(norm - 1) > 1e-6:
        raise ValueError("pi_e is not irreducible")
    data = _coset_data(G, H)
    acc = 0
    for x in data.transversal:
        acc += e_idem(G.mul(G.mul(x, gamma), G.inv(x)))
    scale = Fraction(dim_pi) * Fraction(H.order, G.order)
    if isinstance(lam1, Fraction) and isinstance(acc, Fraction):
        return scale / lam1 * acc
    return complex(scale) / complex(lam1) * complex(acc)


def _operator_char_norm(ind: InducedRep, E: np.ndarray) -> float:
    G = ind.group
    acc = 0.0
    for cls in G.conjugacy_classes():
        val = complex(np.trace(ind.mat(cls[0]) @ E))
        acc += len(cls) * abs(val) ** 2
    return acc / G.order


def char_generalized_trivial(gamma, e: int, q: int, chi: MultChar):
    """Full-group conjugation sum of Tr e_tau, class-bucketed."""
    G = gl_group(e, q)
    et = e_tau(e, q, chi)
    cls = G.conjugacy_classes()[G.class_index(gamma)]
    centralizer = G.order // len(cls)
    acc = 0
    for y in cls:
        acc += et(y)
    return centralizer * acc


# ---------------------------------------------------------------------------
# Steinberg characters and the sign identity

@dataclass
class ClassFunction:
    group: MatrixGroup
    values: list  # indexed by class

    def at(self, g):
        return self.values[self.group.class_index(g)]

    def to_csv(self, path: str):
        import csv
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["class_rep", "class_size", "value_re", "value_im"])
            for cls, v in zip(self.group.conjugacy_classes(), self.values):
                rep = " ".join(str(x) for x in finglq.mat_to_ints(cls[0]))
                vc = complex(v)
                writer.writerow([f"q={self.group.q};{rep}", len(cls),
                                 repr(vc.real), repr(vc.imag)])


def parabolic_induction_character(e: int, q: int, nodes) -> ClassFunction:
    """Character of Ind_{P_T}^G 1 by fixed-point counting on G/P_T."""
    G = gl_group(e, q)
    P = subgroup(e, q, SubgroupSpec.parahoric_image(frozenset(nodes), e))
    p_set = set(P.elements)
    G.precompute_inverses()
    values = []
    for cls in G.conjugacy_classes():
        gamma = cls[0]
        count = sum(1 for x in G.elements
                    if G.mul(G.mul(G.inv(x), gamma), x) in p_set)
        values.append(Fraction(count, P.order))
    return ClassFunction(G, values)


@lru_cache(maxsize=None)
def _steinberg_base(e: int, q: int) -> tuple:
    """Alternating sum over T of the parabolic induction characters."""
    G = gl_group(e, q)
    total = [Fraction(0)] * len(G.conjugacy_classes())
    for r in range(e):
        for nodes in itertools.combinations(range(1, e), r):
            sign = (-1) ** len(nodes)
            part = parabolic_induction_character(e, q, nodes)
            total = [t + sign * v for t, v in zip(total, part.values)]
    return tuple(total)


def steinberg_char(e: int, q: int, chi: MultChar) -> ClassFunction:
    """Generalized Steinberg character: the alternating sum of parabolic
    inductions, twisted by chi∘det."""
    G = gl_group(e, q)
    base = _steinberg_base(e, q)
    F = get_field(q)
    values = []
    for cls, b in zip(G.conjugacy_classes(), base):
        det = finglq.mat_det(F, cls[0])
        values.append(chi(det) * b)
    return ClassFunction(G, values)


def alvis_curtis_sign_check(gamma, e: int, q: int, chi: MultChar,
                            tol: float = 1e-8) -> bool:
    """Tr tau(gamma) = (-1)^(e-1) Tr St(gamma) on elliptic regular gamma."""
    if not finglq.elliptic_regular(q, gamma):
        raise ValueError("gamma is not elliptic regular")
    lhs = char_generalized_trivial(gamma, e, q, chi)
    rhs = (-1) ** (e - 1) * steinberg_char(e, q, chi).at(gamma)
    return abs(complex(lhs) - complex(rhs)) <= tol


def elliptic_regular_class_reps(e: int, q: int) -> list:
    G = gl_group(e, q)
    return [cls[0] for cls in G.conjugacy_classes()
            if finglq.elliptic_regular(q, cls[0])]


# ---------------------------------------------------------------------------
# intertwining algebra of a general scalar sigma, and the module-action
# transport identity

def double_coset_basis(G: MatrixGroup, H: MatrixGroup, sigma) -> list[FinHeckeElt]:
    """Basis of the functions f with f(h1 g h2) = sigma(h1) f(g) sigma(h2):
    one per double coset on which the extension is consistent."""
    G.precompute_inverses()
    seen: set = set()
    basis = []
    for d in G.elements:
        if d in seen:
            continue
        values: dict = {}
        consistent = True
        for h1 in H.elements:
            left = G.mul(h1, d)
            s1 = sigma(h1)
            for h2 in H.elements:
                g = G.mul(left, h2)
                val = s1 * sigma(h2)
                prev = values.get(g)
                if prev is None:
                    values[g] = val
                elif abs(complex(prev) - complex(val)) > 1e-12:
                    consistent = False
        seen.update(values.keys())
        if consistent:
            basis.append(FinHeckeElt(G, H, sigma, values))
    return basis


def hom_space(ind: InducedRep) -> np.ndarray:
    """Basis (columns) of Hom_H(sigma, Ind sigma) = the sigma-eigenvectors."""
    G, H = ind.group, ind.sub
    rows = []
    for h in H.elements:
        rows.append(ind.mat(h) - complex(ind.sigma(h)) * np.eye(ind.dim))
    A = np.vstack(rows)
    _, s, vh = np.linalg.svd(A)
    null_mask = s < 1e-9  # len(s) = ind.dim since A has >= dim rows
    basis = vh.conj().T[:, null_mask]
    if basis.shape[1] == 0:
        raise ValueError("sigma does not occur in the induced module")
    return basis


def _transport_action(ind: InducedRep, phi_vec: np.ndarray,
                      f: FinHeckeElt) -> np.ndarray:
    """phi . f computed through the Frobenius maps: Psi(Phi(phi) ∘ f_*)."""
    G, H = ind.group, ind.sub
    # T_1 in coordinates: supported on the identity coset
    t1 = np.zeros(ind.dim, dtype=complex)
    t1[0] = 1.0  # transversal[0] is the identity
    # f * T_1
    ft = np.zeros(ind.dim, dtype=complex)
    for i, r in enumerate(ind.transversal):
        acc = 0j
        for h in H.elements:
            v = f.values.get(G.mul(r, G.inv(h)), 0)
            if v != 0:
                acc += complex(v) * complex(ind.sigma(h))
        ft[i] = acc
    # Phi(phi) applied to (f * T_1): (1/|H|) sum_x F(x^-1) pi(x) phi_vec
    out = np.zeros(ind.dim, dtype=complex)
    for x in G.elements:
        val = ind.value_at(ft, G.inv(x))
        if val != 0:
            out += val * (ind.mat(x) @ phi_vec)
    return out / H.order


def _direct_action(ind: InducedRep, phi_vec: np.ndarray,
                   f: FinHeckeElt) -> np.ndarray:
    """The displayed sum: phi . f = sum_x f(x^-1) pi(x) phi_vec."""
    G = ind.group
    out = np.zeros(ind.dim, dtype=complex)
    for x, v in f.values.items():
        if v != 0:
            out += complex(v) * (ind.mat(G.inv(x)) @ phi_vec)
    return out


def frobenius_transport_check(G: MatrixGroup, H: MatrixGroup, sigma,
                              trials: int = 20, seed: int = 0,
                              tol: float = 1e-9) -> float:
    """Max deviation between the transported and displayed module actions
    over random (phi, f) pairs; the unit acts as the identity exactly."""
    ind = InducedRep(G, H, sigma)
    G.precompute_inverses()
    homs = hom_space(ind)
    basis = double_coset_basis(G, H, sigma)
    rng = random.Random(seed)
    # unit = (1/|H|) sigma on H must act as the identity
    unit = FinHeckeElt(G, H, sigma,
                       {h: Fraction(1, H.order) * sigma(h)
                        for h in H.elements})
    worst = 0.0
    phi0 = homs[:, 0]
    ua = _direct_action(ind, phi0, unit)
    worst = max(worst, float(np.max(np.abs(ua - phi0))))
    ta = _transport_action(ind, phi0, unit)
    worst = max(worst, float(np.max(np.abs(ta - phi0))))
    for _ in range(trials):
        coeffs = [rng.randint(-3, 3) for _ in range(homs.shape[1])]
        phi = sum(c * homs[:, i] for i, c in enumerate(coeffs))
        if np.max(np.abs(phi)) < 1e-12:
            phi = homs[:, 0]
        f = basis[0].scale(rng.randint(-3, 3))
        for b in basis[1:]:
            f = f + b.scale(rng.randint(-3, 3))
        lhs = _transport_action(ind, phi, f)
        rhs = _direct_action(ind, phi, f)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    if worst > tol:
        raise AssertionError(f"transport identity fails: deviation {worst}")
    return worst


def torus_character(q: int, ks) -> object:
    """Character of B/U given by componentwise characters of the diagonal."""
    chars = [MultChar(q, k) for k in ks]

    def sig(b):
        acc = None
        for i, chi in enumerate(chars):
            v = chi(b[i][i])
            acc = v if acc is None else acc * v
        return acc

    return sig
