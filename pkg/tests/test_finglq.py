import os
from fractions import Fraction

import pytest

from hecke_forge import finglq
from hecke_forge.finglq import (
    GroupSizeError, MultChar, SubgroupSpec, all_characters, blocks_from_type,
    char_poly, check_field_axioms, elliptic_regular, enumerate_group,
    get_field, gl_group, gl_order, group_order, identity_mat, mat_det,
    mat_from_ints, mat_inv, mat_mul, mat_to_ints, poly_is_irreducible,
    proper_parabolic_avoidance,
)

ALL_Q = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", ALL_Q)
def test_field_axioms_exhaustive(q):
    assert check_field_axioms(q)


@pytest.mark.parametrize("q", ALL_Q)
def test_generator_and_log(q):
    F = get_field(q)
    if q == 2:
        assert F.generator == 1
        return
    seen = set()
    acc = 1
    for _ in range(q - 1):
        acc = F.mul(acc, F.generator)
        seen.add(acc)
    assert seen == set(range(1, q))
    for u in F.units():
        k = F.log(u)
        acc = 1
        for _ in range(k):
            acc = F.mul(acc, F.generator)
        assert acc == u


def test_fixed_irreducibles_are_pinned():
    assert finglq._IRREDUCIBLE[4] == (1, 1, 1)      # x^2+x+1
    assert finglq._IRREDUCIBLE[8] == (1, 1, 0, 1)   # x^3+x+1
    assert finglq._IRREDUCIBLE[9] == (1, 0, 1)      # x^2+1


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_characters(q):
    chars = all_characters(q)
    assert len(chars) == q - 1
    F = get_field(q)
    for chi in chars:
        # multiplicative on all unit pairs
        for a in F.units():
            for b in F.units():
                va, vb = complex(chi(a)), complex(chi(b))
                assert abs(va * vb - complex(chi(F.mul(a, b)))) < 1e-12
    trivial = chars[0]
    assert all(trivial(u) == Fraction(1) for u in F.units())
    if q % 2 == 1:
        sign_char = MultChar(q, (q - 1) // 2)
        assert sign_char.is_rational
        vals = {sign_char(u) for u in F.units()}
        assert vals == {Fraction(1), Fraction(-1)}


def test_enumerate_group_examples():
    assert len(enumerate_group(2, 2, SubgroupSpec.full())) == 6
    assert len(enumerate_group(2, 3, SubgroupSpec.borel())) == 12
    assert len(enumerate_group(1, 5, SubgroupSpec.full())) == 4


ENUMERABLE = [(1, q) for q in ALL_Q] + [
    (2, 2), (2, 3), (2, 4), (2, 5), (2, 7), (2, 8), (2, 9),
    (3, 2), (3, 3), (4, 2),
]


@pytest.mark.parametrize("n,q", ENUMERABLE)
def test_gl_order_formula(n, q):
    els = enumerate_group(n, q, SubgroupSpec.full())
    assert len(els) == gl_order(n, q)
    assert len(set(els)) == len(els)


def test_size_cap():
    with pytest.raises(GroupSizeError):
        enumerate_group(3, 4, SubgroupSpec.full())
    os.environ["HECKE_FORGE_MAX_GROUP_ORDER"] = "5"
    try:
        with pytest.raises(GroupSizeError):
            enumerate_group(2, 2, SubgroupSpec.full())
    finally:
        del os.environ["HECKE_FORGE_MAX_GROUP_ORDER"]


def test_subgroup_orders_and_membership():
    q, n = 3, 3
    for spec in [SubgroupSpec.borel(),
                 SubgroupSpec.standard_parabolic((2, 1)),
                 SubgroupSpec.unipotent_radical((2, 1)),
                 SubgroupSpec.levi((2, 1)),
                 SubgroupSpec.parahoric_image({1}, 3)]:
        els = enumerate_group(n, q, spec)
        assert len(els) == group_order(n, q, spec)
        F = get_field(q)
        for g in els[:20]:
            assert mat_det(F, g) != 0


def test_blocks_from_type():
    assert blocks_from_type(set(), 3) == (1, 1, 1)
    assert blocks_from_type({1}, 3) == (2, 1)
    assert blocks_from_type({1, 2}, 3) == (3,)
    assert blocks_from_type({2}, 4) == (1, 2, 1)


def test_mat_ops_random():
    import random
    rng = random.Random(3)
    for q in (3, 4, 9):
        F = get_field(q)
        G = gl_group(2, q) if q <= 5 else None
        for _ in range(25):
            a = tuple(tuple(rng.randrange(q) for _ in range(3)) for _ in range(3))
            if mat_det(F, a) == 0:
                continue
            assert mat_mul(F, a, mat_inv(F, a)) == identity_mat(3)


def test_char_poly_examples():
    F2 = get_field(2)
    # identity, n=2: (x-1)^2 = x^2 + 1 over F_2 -> coeffs (1, 0, 1)
    assert char_poly(F2, identity_mat(2)) == (1, 0, 1)
    # companion matrix of f has char poly f
    f = (1, 1, 1)  # x^2+x+1 over F_2
    comp = ((0, 1), (1, 1))  # companion of x^2+x+1: last column = -coeffs
    assert char_poly(F2, comp) == f
    # [[0,1],[1,1]] over F_3: x^2 - x - 1 -> little-endian (-1, -1, 1) = (2,2,1)
    F3 = get_field(3)
    assert char_poly(F3, ((0, 1), (1, 1))) == (2, 2, 1)


def test_elliptic_regular_examples():
    assert not elliptic_regular(2, identity_mat(2))
    assert elliptic_regular(2, ((0, 1), (1, 1)))
    assert not elliptic_regular(3, ((1, 0), (0, 2)))


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2)])
def test_elliptic_equals_parabolic_avoidance_exhaustive(n, q):
    G = gl_group(n, q)
    G.precompute_inverses()
    for g in G.elements:
        assert elliptic_regular(q, g) == proper_parabolic_avoidance(n, q, g)


def test_poly_irreducibility_against_root_count():
    # degree-2 polynomials over F_q are irreducible iff they have no roots
    for q in (2, 3, 5):
        F = get_field(q)
        import itertools
        for c0, c1 in itertools.product(range(q), repeat=2):
            coeffs = (c0, c1, 1)
            has_root = any(
                F.add(F.add(c0, F.mul(c1, x)), F.mul(x, x)) == 0
                for x in range(q))
            assert poly_is_irreducible(F, coeffs) == (not has_root)


def test_conjugacy_classes_gl22():
    G = gl_group(2, 2)
    classes = G.conjugacy_classes()
    assert sorted(len(c) for c in classes) == [1, 2, 3]  # S_3
    for cls in classes:
        rep = cls[0]
        assert G.centralizer_order(rep) * len(cls) == G.order


def test_serialization_roundtrip():
    g = ((0, 1), (2, 1))
    assert mat_from_ints(2, mat_to_ints(g)) == g
