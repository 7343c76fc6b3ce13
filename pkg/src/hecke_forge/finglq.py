"""Finite fields F_q (q <= 9) and the matrix groups GL(n, F_q) at desk scale.

Field elements are encoded as integers 0..q-1: the base-p digits of the
code are the coefficients of the residue polynomial, so for prime q the
code is just the residue.  The irreducible polynomials are pinned for
reproducibility:

    q = 4:  x^2 + x + 1        q = 8:  x^3 + x + 1        q = 9:  x^2 + 1

Matrices are tuples of row tuples of element codes.  Enumeration is
capped (default 25000 elements, override via HECKE_FORGE_MAX_GROUP_ORDER)
and every enumerated order is checked against the closed-form count.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

DEFAULT_MAX_GROUP_ORDER = 25000

# fixed irreducibles, little-endian coefficient tuples (constant first)
_IRREDUCIBLE = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
}

_PRIMES = (2, 3, 5, 7)


class GroupSizeError(ValueError):
    """Requested enumeration exceeds the configured element cap."""


def max_group_order() -> int:
    raw = os.environ.get("HECKE_FORGE_MAX_GROUP_ORDER")
    return int(raw) if raw else DEFAULT_MAX_GROUP_ORDER


def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in _PRIMES:
        if q % p == 0:
            d = 0
            m = q
            while m % p == 0:
                m //= p
                d += 1
            if m != 1:
                break
            return p, d
    raise ValueError(f"q={q} is not a supported prime power (q <= 9)")


class Fq:
    """Arithmetic tables for F_q, q <= 9."""

    def __init__(self, q: int):
        if q < 2 or q > 9:
            raise ValueError("supported field sizes are prime powers <= 9")
        p, d = _factor_prime_power(q)
        self.q, self.p, self.deg = q, p, d
        self._mul = [[0] * q for _ in range(q)]
        self._add = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(q):
                self._add[a][b] = self._add_codes(a, b)
                self._mul[a][b] = self._mul_codes(a, b)
        self._inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    self._inv[a] = b
                    break
        self._neg = [0] * q
        for a in range(q):
            for b in range(q):
                if self._add[a][b] == 0:
                    self._neg[a] = b
                    break
        self.generator = self._find_generator()
        self._log = {1: 0}
        g, acc = self.generator, 1
        for k in range(1, q - 1):
            acc = self._mul[acc][g]
            self._log[acc] = k

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.deg):
            out.append(a % self.p)
            a //= self.p
        return out

    def _code(self, digits) -> int:
        out = 0
        for c in reversed(list(digits)):
            out = out * self.p + (c % self.p)
        return out

    def _add_codes(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._code((x + y) % self.p for x, y in zip(da, db))

    def _mul_codes(self, a: int, b: int) -> int:
        if self.deg == 1:
            return (a * b) % self.p
        da, db = self._digits(a), self._digits(b)
        prod_coeffs = [0] * (2 * self.deg - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod_coeffs[i + j] = (prod_coeffs[i + j] + x * y) % self.p
        irr = _IRREDUCIBLE[self.q]
        for k in range(len(prod_coeffs) - 1, self.deg - 1, -1):
            c = prod_coeffs[k]
            if c:
                for j in range(self.deg + 1):
                    prod_coeffs[k - self.deg + j] = (
                        prod_coeffs[k - self.deg + j] - c * irr[j]) % self.p
        return self._code(prod_coeffs[: self.deg])

    def _find_generator(self) -> int:
        # smallest code of multiplicative order q-1; deterministic
        n = self.q - 1
        for g in range(1, self.q):
            acc, order = g, 1
            while acc != 1:
                acc = self._mul[acc][g]
                order += 1
            if order == n:
                return g
        raise AssertionError("cyclic group must have a generator")

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def neg(self, a):
        return self._neg[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting 0")
        return self._inv[a]

    def log(self, a) -> int:
        """Discrete log base the fixed generator."""
        if a == 0:
            raise ZeroDivisionError("log of 0")
        return self._log[a]

    def units(self) -> list[int]:
        return list(range(1, self.q))

    def __repr__(self):
        return f"Fq({self.q})"


@lru_cache(maxsize=None)
def get_field(q: int) -> Fq:
    return Fq(q)


def check_field_axioms(q: int) -> bool:
    """Exhaustive associativity / distributivity / inverse check."""
    F = get_field(q)
    els = range(q)
    for a in els:
        for b in els:
            if F.add(a, b) != F.add(b, a) or F.mul(a, b) != F.mul(b, a):
                return False
            for c in els:
                if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
                    return False
                if F.add(F.add(a, b), c) != F.add(a, F.add(b, c)):
                    return False
                if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
                    return False
    for a in range(1, q):
        if F.mul(a, F.inv(a)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# characters of F_q^x

class MultChar:
    """Character chi_k of F_q^x: the generator g maps to exp(2*pi*i*k/(q-1)).

    Values are exact Fractions (+-1) when k is 0 or (q-1)/2, complex
    otherwise.
    """

    def __init__(self, q: int, k: int):
        self.field = get_field(q)
        self.q = q
        self.k = k % (q - 1) if q > 2 else 0

    @property
    def is_rational(self) -> bool:
        n = self.q - 1
        return self.k == 0 or 2 * self.k == n

    def __call__(self, unit_code: int):
        from fractions import Fraction
        import cmath
        m = self.field.log(unit_code)
        n = self.q - 1
        if self.k == 0:
            return Fraction(1)
        if 2 * self.k == n:
            return Fraction(-1) if (m % 2) else Fraction(1)
        return cmath.exp(2j * cmath.pi * self.k * m / n)

    def __eq__(self, other):
        return (isinstance(other, MultChar)
                and (self.q, self.k) == (other.q, other.k))

    def __hash__(self):
        return hash(("MultChar", self.q, self.k))

    def __repr__(self):
        return f"MultChar(q={self.q}, k={self.k})"


def all_characters(q: int) -> list[MultChar]:
    return [MultChar(q, k) for k in range(max(q - 1, 1))]


# ---------------------------------------------------------------------------
# matrices

Mat = tuple  # tuple of row tuples of element codes


def identity_mat(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: Fq, a: Mat, b: Mat) -> Mat:
    n = len(a)
    mul_, add = F.mul, F.add
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = add(acc, mul_(ai[k], b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(F: Fq, a: Mat) -> int:
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = F.mul(det, F.neg(1))
        det = F.mul(det, m[col][col])
        inv_p = F.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col]:
                factor = F.mul(m[r][col], inv_p)
                for c in range(col, n):
                    m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]))
    return det


def mat_inv(F: Fq, a: Mat) -> Mat:
    n = len(a)
    m = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[col], m[pivot] = m[pivot], m[col]
        inv_p = F.inv(m[col][col])
        m[col] = [F.mul(inv_p, x) for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [F.sub(x, F.mul(factor, y))
                        for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def char_poly(F: Fq, a: Mat) -> tuple[int, ...]:
    """Monic characteristic polynomial det(xI - a), little-endian coeffs."""
    n = len(a)
    # polynomial entries of xI - a, as coefficient lists of length <= 2
    entries = [[(F.neg(a[i][j]), 1 if i == j else 0) for j in range(n)]
               for i in range(n)]

    def poly_mul(u, v):
        out = [0] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
        return out

    acc = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign_neg = _perm_parity(perm)
        term = [1]
        for i in range(n):
            term = poly_mul(term, entries[i][perm[i]])
        for k, c in enumerate(term):
            c = F.neg(c) if sign_neg else c
            acc[k] = F.add(acc[k], c)
    return tuple(acc)


def _perm_parity(perm) -> bool:
    inv_count = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                    if perm[i] > perm[j])
    return inv_count % 2 == 1


def poly_is_irreducible(F: Fq, coeffs: tuple[int, ...]) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True

    def poly_mod(num, den):
        num = list(num)
        dd = len(den) - 1
        lead_inv = F.inv(den[-1])
        for k in range(len(num) - 1, dd - 1, -1):
            c = num[k]
            if c:
                factor = F.mul(c, lead_inv)
                for j in range(dd + 1):
                    num[k - dd + j] = F.sub(num[k - dd + j],
                                            F.mul(factor, den[j]))
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        return num

    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(F.q), repeat=d):
            den = tuple(tail) + (1,)
            if poly_mod(coeffs, den) == [0]:
                return False
    return True


def elliptic_regular(q: int, g: Mat) -> bool:
    """True iff the characteristic polynomial is irreducible over F_q."""
    F = get_field(q)
    return poly_is_irreducible(F, char_poly(F, g))


def mat_to_ints(g: Mat) -> list[int]:
    """Row-major serialization."""
    return [x for row in g for x in row]


def mat_from_ints(n: int, vals) -> Mat:
    vals = list(vals)
    if len(vals) != n * n:
        raise ValueError("wrong entry count")
    return tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n))


# ---------------------------------------------------------------------------
# subgroup specifications

@dataclass(frozen=True)
class SubgroupSpec:
    kind: str
    blocks: tuple[int, ...] = ()

    @staticmethod
    def full() -> "SubgroupSpec":
        return SubgroupSpec("full")

    @staticmethod
    def borel() -> "SubgroupSpec":
        return SubgroupSpec("borel")

    @staticmethod
    def standard_parabolic(blocks) -> "SubgroupSpec":
        return SubgroupSpec("standard_parabolic", tuple(blocks))

    @staticmethod
    def unipotent_radical(blocks) -> "SubgroupSpec":
        return SubgroupSpec("unipotent_radical", tuple(blocks))

    @staticmethod
    def levi(blocks) -> "SubgroupSpec":
        return SubgroupSpec("levi", tuple(blocks))

    @staticmethod
    def parahoric_image(nodes, e: int) -> "SubgroupSpec":
        """Reduction of the parahoric of type T ⊆ {1..e-1}: the standard
        parabolic whose blocks are the runs of consecutive nodes in T."""
        return SubgroupSpec("standard_parabolic", blocks_from_type(nodes, e))


def blocks_from_type(nodes, e: int) -> tuple[int, ...]:
    nodes = set(nodes)
    if any(t < 1 or t >= e for t in nodes):
        raise ValueError("type nodes must lie in {1..e-1}")
    blocks, size = [], 1
    for i in range(1, e):
        if i in nodes:
            size += 1
        else:
            blocks.append(size)
            size = 1
    blocks.append(size)
    return tuple(blocks)


def _validate_blocks(n: int, blocks):
    if sum(blocks) != n or any(b < 1 for b in blocks):
        raise ValueError(f"blocks {blocks} do not partition {n}")


def gl_order(n: int, q: int) -> int:
    return prod(q ** n - q ** i for i in range(n))


def group_order(n: int, q: int, spec: SubgroupSpec) -> int:
    if spec.kind == "full":
        return gl_order(n, q)
    if spec.kind == "borel":
        return (q - 1) ** n * q ** (n * (n - 1) // 2)
    _validate_blocks(n, spec.blocks)
    above = _entries_above_blocks(spec.blocks)
    if spec.kind == "standard_parabolic":
        return prod(gl_order(b, q) for b in spec.blocks) * q ** above
    if spec.kind == "unipotent_radical":
        return q ** above
    if spec.kind == "levi":
        return prod(gl_order(b, q) for b in spec.blocks)
    raise ValueError(f"unknown subgroup kind {spec.kind!r}")


def _entries_above_blocks(blocks) -> int:
    n = sum(blocks)
    return (n * n - sum(b * b for b in blocks)) // 2


def _block_starts(blocks) -> list[int]:
    starts, acc = [], 0
    for b in blocks:
        starts.append(acc)
        acc += b
    return starts


def is_block_upper(g: Mat, blocks) -> bool:
    starts = _block_starts(blocks)
    n = len(g)
    block_of = [0] * n
    for bi, s in enumerate(starts):
        for i in range(s, s + blocks[bi]):
            block_of[i] = bi
    for i in range(n):
        for j in range(n):
            if g[i][j] != 0 and block_of[i] > block_of[j]:
                return False
    return True


def enumerate_group(n: int, q: int, spec: SubgroupSpec) -> list[Mat]:
    """Complete duplicate-free element list; order checked against the
    closed-form count, capped at max_group_order()."""
    order = group_order(n, q, spec)
    cap = max_group_order()
    if order > cap:
        raise GroupSizeError(
            f"{spec.kind} subgroup of GL({n},{q}) has order {order} > cap {cap}")
    F = get_field(q)
    if spec.kind == "full":
        out = [m for m in _all_matrices(n, q) if mat_det(F, m) != 0]
    elif spec.kind == "borel":
        out = list(_enumerate_parabolic(F, n, (1,) * n))
    elif spec.kind == "standard_parabolic":
        _validate_blocks(n, spec.blocks)
        out = list(_enumerate_parabolic(F, n, spec.blocks))
    elif spec.kind == "unipotent_radical":
        _validate_blocks(n, spec.blocks)
        out = list(_enumerate_unipotent(n, q, spec.blocks))
    elif spec.kind == "levi":
        _validate_blocks(n, spec.blocks)
        out = list(_enumerate_levi(F, n, spec.blocks))
    else:
        raise ValueError(f"unknown subgroup kind {spec.kind!r}")
    if len(out) != order:
        raise AssertionError(
            f"enumeration bug: got {len(out)} elements, expected {order}")
    return out


def _all_matrices(n: int, q: int):
    for flat in itertools.product(range(q), repeat=n * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def _enumerate_parabolic(F: Fq, n: int, blocks):
    """Block upper triangular with invertible diagonal blocks."""
    starts = _block_starts(blocks)
    gl_blocks = []
    for b in blocks:
        gl_blocks.append([m for m in _all_matrices(b, F.q)
                          if mat_det(F, m) != 0])
    above = [(i, j) for bi, si in enumerate(starts)
             for i in range(si, si + blocks[bi])
             for j in range(si + blocks[bi], n)]
    for diag_choice in itertools.product(*gl_blocks):
        base = [[0] * n for _ in range(n)]
        for bi, m in enumerate(diag_choice):
            s = starts[bi]
            for i in range(blocks[bi]):
                for j in range(blocks[bi]):
                    base[s + i][s + j] = m[i][j]
        for vals in itertools.product(range(F.q), repeat=len(above)):
            g = [row[:] for row in base]
            for (i, j), v in zip(above, vals):
                g[i][j] = v
            yield tuple(tuple(row) for row in g)


def _enumerate_unipotent(n: int, q: int, blocks):
    starts = _block_starts(blocks)
    above = [(i, j) for bi, si in enumerate(starts)
             for i in range(si, si + blocks[bi])
             for j in range(si + blocks[bi], n)]
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for vals in itertools.product(range(q), repeat=len(above)):
        g = [row[:] for row in ident]
        for (i, j), v in zip(above, vals):
            g[i][j] = v
        yield tuple(tuple(row) for row in g)


def _enumerate_levi(F: Fq, n: int, blocks):
    starts = _block_starts(blocks)
    gl_blocks = [[m for m in _all_matrices(b, F.q) if mat_det(F, m) != 0]
                 for b in blocks]
    for diag_choice in itertools.product(*gl_blocks):
        g = [[0] * n for _ in range(n)]
        for bi, m in enumerate(diag_choice):
            s = starts[bi]
            for i in range(blocks[bi]):
                for j in range(blocks[bi]):
                    g[s + i][s + j] = m[i][j]
        yield tuple(tuple(row) for row in g)


# ---------------------------------------------------------------------------
# a concrete finite matrix group

@dataclass
class MatrixGroup:
    """GL(n, q) or one of its standard subgroups, fully enumerated."""
    n: int
    q: int
    spec: SubgroupSpec
    elements: list = field(repr=False)
    _index: dict = field(default=None, repr=False)
    _inverses: dict = field(default=None, repr=False)
    _classes: list = field(default=None, repr=False)
    _class_of: dict = field(default=None, repr=False)

    @property
    def field_(self) -> Fq:
        return get_field(self.q)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Mat:
        return identity_mat(self.n)

    def index(self, g: Mat) -> int:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index[g]

    def __contains__(self, g: Mat) -> bool:
        if self._index is None:
            self.index(self.identity)
        return g in self._index

    def mul(self, a: Mat, b: Mat) -> Mat:
        return mat_mul(self.field_, a, b)

    def inv(self, a: Mat) -> Mat:
        if self._inverses is None:
            self._inverses = {}
        got = self._inverses.get(a)
        if got is None:
            got = mat_inv(self.field_, a)
            self._inverses[a] = got
        return got

    def precompute_inverses(self):
        F = self.field_
        self._inverses = {g: mat_inv(F, g) for g in self.elements}

    def det(self, a: Mat) -> int:
        return mat_det(self.field_, a)

    def conjugacy_classes(self) -> list[list[Mat]]:
        if self._classes is None:
            classes, class_of = [], {}
            for g in self.elements:
                if g in class_of:
                    continue
                orbit = {self.mul(self.mul(x, g), self.inv(x))
                         for x in self.elements}
                orbit = sorted(orbit)
                idx = len(classes)
                classes.append(orbit)
                for y in orbit:
                    class_of[y] = idx
            self._classes = classes
            self._class_of = class_of
        return self._classes

    def class_index(self, g: Mat) -> int:
        self.conjugacy_classes()
        return self._class_of[g]

    def class_reps(self) -> list[Mat]:
        return [cls[0] for cls in self.conjugacy_classes()]

    def centralizer_order(self, g: Mat) -> int:
        cls = self.conjugacy_classes()[self.class_index(g)]
        return self.order // len(cls)


@lru_cache(maxsize=None)
def gl_group(n: int, q: int) -> MatrixGroup:
    return MatrixGroup(n, q, SubgroupSpec.full(),
                       enumerate_group(n, q, SubgroupSpec.full()))


@lru_cache(maxsize=None)
def subgroup(n: int, q: int, spec: SubgroupSpec) -> MatrixGroup:
    return MatrixGroup(n, q, spec, enumerate_group(n, q, spec))


def perm_matrix(n: int, w) -> Mat:
    """Permutation matrix with column j carrying a 1 in row w(j)."""
    return tuple(tuple(1 if i == w[j] else 0 for j in range(n))
                 for i in range(n))


def diag_product(F: Fq, g: Mat) -> int:
    acc = 1
    for i in range(len(g)):
        acc = F.mul(acc, g[i][i])
    return acc


@lru_cache(maxsize=None)
def bruhat_decomposition(e: int, q: int) -> dict:
    """For every g in GL(e, F_q): (w, v) with g in B w B and v in F_q^x the
    product diag(b1) * diag(b2) of any decomposition g = b1 w b2.

    v is well defined: stabilizer pairs b1 w b2 = w have diag products
    multiplying to 1, because conjugation by a permutation matrix permutes
    the diagonal of a triangular matrix.
    """
    import itertools
    F = get_field(q)
    G = gl_group(e, q)
    B = subgroup(e, q, SubgroupSpec.borel())
    out: dict = {}
    b_data = [(b, diag_product(F, b)) for b in B.elements]
    for w in itertools.permutations(range(e)):
        wm = perm_matrix(e, w)
        for b1, v1 in b_data:
            left = mat_mul(F, b1, wm)
            for b2, v2 in b_data:
                g = mat_mul(F, left, b2)
                if g not in out:
                    out[g] = (w, F.mul(v1, v2))
    if len(out) != G.order:
        raise AssertionError("Bruhat cells do not cover the group")
    return out


def proper_parabolic_avoidance(n: int, q: int, g: Mat) -> bool:
    """True iff g lies in no conjugate of a proper standard parabolic.

    Brute force over all conjugates and all proper block compositions;
    must agree with elliptic_regular.
    """
    G = gl_group(n, q)
    if g not in G:
        raise ValueError("element is not invertible of the right size")
    compositions = [c for c in _compositions(n) if len(c) >= 2]
    for x in G.elements:
        y = G.mul(G.mul(x, g), G.inv(x))
        for blocks in compositions:
            if is_block_upper(y, blocks):
                return False
    return True


def _compositions(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            out.append((first,) + rest)
    return out
