"""Extended affine Weyl group of GL_e and parahoric-type combinatorics.

The group is Z^e ⋊ S_e.  An element (lam, w) acts on column vectors as the
monomial matrix diag(pi^lam) * P_w, so the product rule is

    (lam1, w1) * (lam2, w2) = (lam1 + w1·lam2, w1∘w2)

with (w·lam)_i = lam_{w^{-1}(i)}.  Permutations are tuples in one-line
notation on 0-based positions: w[i] is the image of i.

Affine nodes are Z/e with node 0 the affine one; the finite generators
S = {1, .., e-1} give s_i = transposition of positions i-1, i.  The
length-zero rotation Pi is fixed as (e_1, i ↦ i+1 mod e) and validated by
its three defining invariants (Pi^e central, conjugation rotates the
affine generators, length zero) rather than by trusting the coordinates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .qpoly import QPoly, geometric


# ---------------------------------------------------------------------------
# finite permutations (one-line tuples, 0-based)

def identity_perm(e: int) -> tuple[int, ...]:
    return tuple(range(e))


def perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a∘b)(i) = a(b(i)).

    >>> perm_mul((1, 0, 2), (0, 2, 1))
    (1, 2, 0)
    """
    return tuple(a[b[i]] for i in range(len(a)))


def perm_inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai] = i
    return tuple(out)


def perm_sign(a: tuple[int, ...]) -> int:
    seen = [False] * len(a)
    sign = 1
    for i in range(len(a)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = a[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def inversions(a: tuple[int, ...]) -> int:
    e = len(a)
    return sum(1 for i in range(e) for j in range(i + 1, e) if a[i] > a[j])


def transposition(e: int, i: int, j: int) -> tuple[int, ...]:
    out = list(range(e))
    out[i], out[j] = out[j], out[i]
    return tuple(out)


def all_perms(e: int) -> list[tuple[int, ...]]:
    import itertools
    return sorted(itertools.permutations(range(e)))


# ---------------------------------------------------------------------------
# extended affine elements

class AffineElt(NamedTuple):
    trans: tuple[int, ...]
    perm: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.perm)

    def __mul__(self, other):  # type: ignore[override]
        return mul(self, other)


def affine_identity(e: int) -> AffineElt:
    return AffineElt((0,) * e, identity_perm(e))


def from_perm(w: tuple[int, ...]) -> AffineElt:
    return AffineElt((0,) * len(w), tuple(w))


def translation(lam: tuple[int, ...]) -> AffineElt:
    return AffineElt(tuple(lam), identity_perm(len(lam)))


def mul(x: AffineElt, y: AffineElt) -> AffineElt:
    if x.rank != y.rank:
        raise ValueError(f"rank mismatch: {x.rank} vs {y.rank}")
    winv = perm_inv(x.perm)
    lam = tuple(x.trans[i] + y.trans[winv[i]] for i in range(x.rank))
    return AffineElt(lam, perm_mul(x.perm, y.perm))


def inv(x: AffineElt) -> AffineElt:
    # (lam, w)^-1 = (-w^-1·lam, w^-1)
    wi = perm_inv(x.perm)
    lam = tuple(-x.trans[x.perm[i]] for i in range(x.rank))
    return AffineElt(lam, wi)


def pi_element(e: int) -> AffineElt:
    """The length-zero diagram rotation; Pi^e is the central translation."""
    lam = (1,) + (0,) * (e - 1)
    perm = tuple((i + 1) % e for i in range(e))
    return AffineElt(lam, perm)


def pi_power(e: int, k: int) -> AffineElt:
    pi = pi_element(e)
    out = affine_identity(e)
    step = pi if k >= 0 else inv(pi)
    for _ in range(abs(k)):
        out = mul(out, step)
    return out


def simple_reflection(e: int, i: int) -> AffineElt:
    """s_i for an affine node i in Z/e; node 0 is the affine reflection."""
    i %= e
    if e == 1:
        raise ValueError("rank 1 has no reflections")
    if i == 0:
        lam = [0] * e
        lam[0], lam[-1] = 1, -1
        return AffineElt(tuple(lam), transposition(e, 0, e - 1))
    return from_perm(transposition(e, i - 1, i))


def central_index(x: AffineElt) -> int:
    """Sum of the translation vector; x = Pi^k * (affine part) with this k."""
    return sum(x.trans)


def pi_normal_form(x: AffineElt) -> tuple[int, AffineElt]:
    k = central_index(x)
    return k, mul(pi_power(x.rank, -k), x)


def length(x: AffineElt) -> int:
    """Extended length: number of positive affine roots made negative.

    Closed form sum over position pairs; the BFS oracle `length_bfs` is the
    ground truth it is tested against.
    """
    lam, w = x.trans, x.perm
    e = len(w)
    total = 0
    for i in range(e):
        wi = w[i]
        for j in range(i + 1, e):
            wj = w[j]
            a = lam[wi] - lam[wj] + (1 if wi > wj else 0)
            total += a if a >= 0 else -a
    return total


def bfs_ball(e: int, radius: int) -> dict[AffineElt, int]:
    """Word-length distances from 1 in {s_0..s_{e-1}}, out to the radius.

    Covers the non-extended affine Weyl group (translation sum 0); the
    extended length of Pi^k * y equals the distance of y.
    """
    if e == 1:
        return {affine_identity(1): 0}
    gens = [simple_reflection(e, i) for i in range(e)]
    start = affine_identity(e)
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        x = frontier.popleft()
        d = dist[x]
        if d == radius:
            continue
        for s in gens:
            y = mul(x, s)
            if y not in dist:
                dist[y] = d + 1
                frontier.append(y)
    return dist


def length_bfs(x: AffineElt, radius: int = 12) -> int:
    """Oracle length: minimal word for the affine part of x, by BFS."""
    k, y = pi_normal_form(x)
    if y == affine_identity(x.rank):
        return 0
    if x.rank == 1:
        raise ValueError("rank-1 affine part must be trivial")
    gens = [simple_reflection(x.rank, i) for i in range(x.rank)]
    start = affine_identity(x.rank)
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        z = frontier.popleft()
        d = dist[z]
        if d == radius:
            continue
        for s in gens:
            znew = mul(z, s)
            if znew == y:
                return d + 1
            if znew not in dist:
                dist[znew] = d + 1
                frontier.append(znew)
    raise ValueError(f"element beyond BFS radius {radius}")


# ---------------------------------------------------------------------------
# parahoric types: proper subsets of the affine node set Z/e

@dataclass(frozen=True)
class ParahoricType:
    nodes: frozenset
    e: int

    def __post_init__(self):
        if not all(0 <= t < self.e for t in self.nodes):
            raise ValueError("nodes must lie in Z/e")
        if len(self.nodes) >= self.e:
            raise ValueError("type must be a proper subset of Z/e")

    @property
    def d(self) -> int:
        """Dimension of the fixed simplex: e - 1 - |T|."""
        return self.e - 1 - len(self.nodes)

    def sorted_nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.nodes))

    def is_standard(self) -> bool:
        return 0 not in self.nodes

    def __repr__(self):
        return f"ParahoricType({set(self.sorted_nodes()) or '{}'}, e={self.e})"


def parahoric_type(nodes, e: int) -> ParahoricType:
    return ParahoricType(frozenset(nodes), e)


def rotate(T: ParahoricType, j: int) -> ParahoricType:
    """Shift every node by j mod e.

    >>> rotate(parahoric_type({1, 3}, 4), 2) == parahoric_type({1, 3}, 4)
    True
    """
    return ParahoricType(frozenset((t + j) % T.e for t in T.nodes), T.e)


def period_and_n(T: ParahoricType) -> tuple[int, int]:
    """(u_T, n_T): u_T = rotation period of T, n_T = e / u_T.

    z_T = Pi^{u_T} generates the normalizer of P_T over P_T, and
    z_T^{n_T} is the central uniformizer translation.
    """
    for j in range(1, T.e + 1):
        if rotate(T, j) == T:
            return j, T.e // j
    raise AssertionError("rotation by e always fixes T")


def epsilon(T: ParahoricType) -> int:
    """Sign of the vertex permutation induced by z_T on the fixed simplex.

    The d_T + 1 vertices are the nodes of Z/e not in T; z_T rotates them
    by u_T, and the sign is taken relative to their sorted order.
    """
    u, _ = period_and_n(T)
    comp = sorted(set(range(T.e)) - set(T.nodes))
    pos = {c: i for i, c in enumerate(comp)}
    perm = tuple(pos[(c + u) % T.e] for c in comp)
    return perm_sign(perm)


def canonical_rep(T: ParahoricType) -> ParahoricType:
    """Canonical orbit representative: lex-minimal rotation avoiding node 0.

    Every proper subset has a rotation avoiding node 0 (rotate by -c for
    any node c outside T), so the preference is always satisfiable.
    """
    best = None
    for j in range(T.e):
        R = rotate(T, j)
        if 0 in R.nodes:
            continue
        key = R.sorted_nodes()
        if best is None or key < best:
            best = key
    return ParahoricType(frozenset(best), T.e)


def orbit_reps(e: int) -> list[ParahoricType]:
    """One canonical representative per Pi-rotation orbit of proper subsets."""
    if e < 1:
        raise ValueError("e must be positive")
    import itertools
    reps = set()
    for r in range(e):
        for nodes in itertools.combinations(range(e), r):
            reps.add(canonical_rep(parahoric_type(nodes, e)))
    return sorted(reps, key=lambda T: (len(T.nodes), T.sorted_nodes()))


def standard_orbit_members(T: ParahoricType) -> list[ParahoricType]:
    """The rotations of T that avoid node 0, sorted; all possible standard
    representatives of T's orbit."""
    u, _ = period_and_n(T)
    members = {rotate(T, j) for j in range(u)}
    return sorted((R for R in members if R.is_standard()),
                  key=lambda R: R.sorted_nodes())


def parahoric_weyl_group(T: ParahoricType) -> list[AffineElt]:
    """The finite subgroup generated by {s_i : i in T}; closure by BFS."""
    e = T.e
    out = {affine_identity(e)}
    if T.nodes:
        gens = [simple_reflection(e, i) for i in T.nodes]
        frontier = deque(out)
        while frontier:
            x = frontier.popleft()
            for s in gens:
                y = mul(x, s)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
    return sorted(out)


def _volume_any(T: ParahoricType, q) -> Fraction:
    return sum((Fraction(q) ** length(w) for w in parahoric_weyl_group(T)),
               Fraction(0))


def parahoric_volume(T: ParahoricType, q) -> Fraction:
    """Sum of q^l(w) over the subgroup of W_0 generated by T ⊆ {1..e-1}.

    Equals the index [P_T : I] counted with q-powers, i.e. the Haar volume
    of P_T when the Iwahori has volume 1.
    """
    if not T.is_standard():
        raise ValueError("only standard types (node 0 excluded) have a "
                         "spherical volume; rotate first")
    if q <= 0:
        raise ValueError("q must be positive")
    return _volume_any(T, q)


def volume_poly(T: ParahoricType) -> QPoly:
    """parahoric_volume with q left symbolic."""
    out = QPoly()
    for w in parahoric_weyl_group(T):
        out = out + QPoly.monomial(length(w))
    return out


def poincare_poly(e: int) -> QPoly:
    """prod_{k=1}^{e-1} (1 + X + ... + X^k); counts Borel cosets at X=q."""
    if e < 1:
        raise ValueError("e must be positive")
    out = QPoly.const(1)
    for k in range(1, e):
        out = out * geometric(k)
    return out


def proper_subsets_of_s(e: int) -> Iterator[ParahoricType]:
    """All subsets of the finite node set S = {1..e-1} (all are proper)."""
    import itertools
    s = range(1, e)
    for r in range(e):
        for nodes in itertools.combinations(s, r):
            yield parahoric_type(nodes, e)
