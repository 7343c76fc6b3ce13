"""Type-A Iwahori-Hecke algebras in the T-basis, with exact coefficients.

Elements are finitely supported maps from the extended affine Weyl group
to polynomials in q.  Products use the Iwahori-Matsumoto relations

    T_s * T_w = T_{sw}                  if l(sw) > l(w)
    T_s * T_w = q*T_{sw} + (q-1)*T_w    otherwise

together with free multiplication by the length-zero rotation:
T_x * T_{Pi^k} = T_{x Pi^k}.  The ground truth for the relations is the
double-coset convolution algebra of GL(e, F_q) over the Borel, built here
by brute force (`convolution_oracle`).

Central-character reduction collapses the basis along central
translations (lam, w) ~ (lam + n*(1..1), w), weighting by omega^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .qpoly import QPoly
from .weyl import (
    AffineElt, affine_identity, all_perms, central_index, from_perm,
    length, mul, pi_power, simple_reflection,
)


def _as_poly(c) -> QPoly:
    return c if isinstance(c, QPoly) else QPoly.const(c)


@dataclass
class HeckeElt:
    """Finitely supported map AffineElt -> QPoly; zero terms are dropped."""
    e: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {x: _as_poly(c) for x, c in self.terms.items()
                      if not _as_poly(c).is_zero()}
        for x in self.terms:
            if x.rank != self.e:
                raise ValueError("rank mismatch in support")

    @classmethod
    def unit(cls, e: int) -> "HeckeElt":
        return cls.basis(affine_identity(e))

    @classmethod
    def basis(cls, x: AffineElt, coeff=1) -> "HeckeElt":
        return cls(x.rank, {x: _as_poly(coeff)})

    def coeff(self, x: AffineElt) -> QPoly:
        return self.terms.get(x, QPoly())

    def support(self) -> list[AffineElt]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        if self.e != other.e:
            raise ValueError("rank mismatch")
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, QPoly()) + c
        return HeckeElt(self.e, out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElt":
        c = _as_poly(c)
        return HeckeElt(self.e, {x: c * v for x, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, HeckeElt) and self.e == other.e
                and self.terms == other.terms)

    def evaluate(self, q) -> dict[AffineElt, Fraction]:
        return {x: c(q) for x, c in self.terms.items()}

    def __repr__(self):
        if not self.terms:
            return f"HeckeElt(e={self.e}, 0)"
        bits = [f"({c})*T[{x.trans},{x.perm}]"
                for x, c in sorted(self.terms.items())]
        return " + ".join(bits)


def _right_descent_word(y: AffineElt) -> list[AffineElt]:
    """Reduced word s_{i1}..s_{ik} with y = s_{i1} * ... * s_{ik}.

    Greedy stripping of right descents; valid because the closed-form
    length is exact on the whole extended group.
    """
    e = y.rank
    word_rev = []
    gens = [simple_reflection(e, i) for i in range(e)] if e > 1 else []
    cur = y
    cur_len = length(cur)
    while cur_len > 0:
        for s in gens:
            nxt = mul(cur, s)
            if length(nxt) < cur_len:
                word_rev.append(s)
                cur, cur_len = nxt, cur_len - 1
                break
        else:
            raise AssertionError("nonzero length without a descent")
    if cur != affine_identity(e):
        raise ValueError("element has length zero but is not the identity; "
                         "pi-part must be stripped first")
    return list(reversed(word_rev))


def _mul_basis_by_gen(e: int, terms: dict, s: AffineElt) -> dict:
    """Right-multiply sum(c_x T_x) by T_s for a simple reflection s."""
    q = QPoly.gen()
    qm1 = QPoly((-1, 1))
    out: dict[AffineElt, QPoly] = {}
    for x, c in terms.items():
        xs = mul(x, s)
        if length(xs) > length(x):
            out[xs] = out.get(xs, QPoly()) + c
        else:
            out[xs] = out.get(xs, QPoly()) + c * q
            out[x] = out.get(x, QPoly()) + c * qm1
    return out


def t_mul(a: HeckeElt, b: HeckeElt, e: int | None = None) -> HeckeElt:
    """Product in the T-basis."""
    if a.e != b.e or (e is not None and e != a.e):
        raise ValueError("rank mismatch")
    e = a.e
    out: dict[AffineElt, QPoly] = {}
    for y, cb in b.terms.items():
        k = central_index(y)
        y_aff = mul(pi_power(e, -k), y)
        word = _right_descent_word(y_aff)
        # T_x T_y = T_{x Pi^k} T_{y_aff}: Pi^k multiplies freely
        cur = {mul(x, pi_power(e, k)): ca * cb for x, ca in a.terms.items()}
        for s in word:
            cur = _mul_basis_by_gen(e, cur, s)
        for x, c in cur.items():
            out[x] = out.get(x, QPoly()) + c
    return HeckeElt(e, out)


def t_power(a: HeckeElt, k: int) -> HeckeElt:
    out = HeckeElt.unit(a.e)
    for _ in range(k):
        out = t_mul(out, a)
    return out


def structure_constants(e: int) -> dict:
    """c^{w3}_{w1,w2} over the finite Weyl basis, as polynomials in q."""
    perms = all_perms(e)
    out = {}
    for w1 in perms:
        for w2 in perms:
            prod = t_mul(HeckeElt.basis(from_perm(w1)),
                         HeckeElt.basis(from_perm(w2)))
            for x, c in prod.terms.items():
                if any(x.trans):
                    raise AssertionError("spherical product left W_0")
                out[(w1, w2, x.perm)] = c
    return out


# ---------------------------------------------------------------------------
# brute-force oracle: the Borel double-coset algebra of GL(e, F_q)

def convolution_oracle(e: int, q: int) -> dict:
    """Structure constants of the normalized indicators (1/|B|) 1_{BwB}.

    Counting-measure convolution on GL(e, F_q); the identity-coset element
    is the unit.  Constants are exact Fractions, indexed by (w1, w2, w3).
    """
    from . import finglq
    G = finglq.gl_group(e, q)
    B = finglq.subgroup(e, q, finglq.SubgroupSpec.borel())
    G.precompute_inverses()
    label = {g: wv[0] for g, wv in finglq.bruhat_decomposition(e, q).items()}
    perms = all_perms(e)
    cells: dict = {w: [] for w in perms}
    for g, w in label.items():
        cells[w].append(g)
    consts: dict = {}
    for w1 in perms:
        inv_c1 = [G.inv(x) for x in cells[w1]]
        for w3 in perms:
            wm3 = finglq.perm_matrix(e, w3)
            counts: dict = {w: 0 for w in perms}
            for xi in inv_c1:
                counts[label[G.mul(xi, wm3)]] += 1
            for w2 in perms:
                # f_{w1} * f_{w2} at w3: (1/|B|^2) count; coefficient on
                # f_{w3} multiplies by |B|
                consts[(w1, w2, w3)] = Fraction(counts[w2], B.order)
    return consts


def oracle_matches_t_mul(e: int, q: int) -> bool:
    oracle = convolution_oracle(e, q)
    symbolic = structure_constants(e)
    perms = all_perms(e)
    for w1 in perms:
        for w2 in perms:
            for w3 in perms:
                lhs = oracle[(w1, w2, w3)]
                rhs = symbolic.get((w1, w2, w3), QPoly())(q)
                if lhs != rhs:
                    return False
    return True


def constants_to_csv(consts: dict, path: str):
    """CSV rows (w1, w2, w3, coefficient); permutations in one-line notation,
    translations as comma-separated integers (zero for spherical tables)."""
    import csv

    def render(w):
        if isinstance(w, AffineElt):
            return ";".join((",".join(map(str, w.trans)),
                             ",".join(str(i + 1) for i in w.perm)))
        return ",".join(str(i + 1) for i in w)

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["w1", "w2", "w3", "coefficient"])
        for (w1, w2, w3), c in sorted(consts.items()):
            writer.writerow([render(w1), render(w2), render(w3), str(c)])


# ---------------------------------------------------------------------------
# central-character reduction

def canonical_central_rep(x: AffineElt) -> tuple[AffineElt, int]:
    """(rep, n): rep = x shifted by -n central units, sum(trans) in [0, e)."""
    e = x.rank
    n = central_index(x) // e  # floor division, also for negative sums
    rep = AffineElt(tuple(t - n for t in x.trans), x.perm)
    return rep, n


@dataclass
class CentralHeckeElt:
    """Element of the fixed-central-character algebra.

    Terms are indexed by canonical class representatives (translation sum
    in [0, e)); the underlying function at pi^n * rep is omega^{-n} times
    the stored coefficient.
    """
    e: int
    omega: object = 1
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for x, c in self.terms.items():
            rep, n = canonical_central_rep(x)
            if rep != x:
                raise ValueError("terms must be keyed by canonical reps")
            if not _is_zero_scalar(c):
                clean[x] = c
        self.terms = clean

    def coeff(self, x: AffineElt):
        rep, n = canonical_central_rep(x)
        c = self.terms.get(rep, 0)
        return c * self.omega ** (-n) if n else c

    def __add__(self, other: "CentralHeckeElt") -> "CentralHeckeElt":
        if self.e != other.e or self.omega != other.omega:
            raise ValueError("mismatched central algebras")
        out = dict(self.terms)
        for x, c in other.terms.items():
            out[x] = out.get(x, 0) + c
        return CentralHeckeElt(self.e, self.omega, out)

    def scale(self, c) -> "CentralHeckeElt":
        return CentralHeckeElt(self.e, self.omega,
                               {x: c * v for x, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, CentralHeckeElt) and self.e == other.e
                and self.omega == other.omega and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def lift(self) -> HeckeElt:
        """Canonical section: one T-basis term per class."""
        return HeckeElt(self.e, {x: _as_poly(c) for x, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"CentralHeckeElt(e={self.e}, 0)"
        bits = [f"({c})*[{x.trans},{x.perm}]"
                for x, c in sorted(self.terms.items())]
        return " + ".join(bits)


def _is_zero_scalar(c) -> bool:
    if isinstance(c, QPoly):
        return c.is_zero()
    return c == 0


def central_reduction(f: HeckeElt, omega_at_pi=1) -> CentralHeckeElt:
    """Collapse along central translations with weight omega^n.

    The class coefficient is sum_n omega^n * f(pi^n * rep), which is the
    value at the canonical representative of the reduced function.
    """
    rational = isinstance(omega_at_pi, (int, Fraction))
    out: dict = {}
    for x, c in f.terms.items():
        rep, n = canonical_central_rep(x)
        if rational:
            contrib = c * Fraction(omega_at_pi) ** n
        else:
            contrib = complex(omega_at_pi) ** n * c.constant_value()
        prev = out.get(rep)
        out[rep] = contrib if prev is None else prev + contrib
    return CentralHeckeElt(f.e, omega_at_pi, out)


def central_mul(a: CentralHeckeElt, b: CentralHeckeElt) -> CentralHeckeElt:
    """Product in the fixed-central-character algebra via canonical lifts."""
    if a.e != b.e or a.omega != b.omega:
        raise ValueError("mismatched central algebras")
    return central_reduction(t_mul(a.lift(), b.lift()), a.omega)
