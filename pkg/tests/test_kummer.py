import pytest

from conftest import random_point
from fastkummer._errors import DegenerateSurface
from fastkummer.field import counting
from fastkummer.isogeny33 import tpl
from fastkummer.kummer import (KummerPoint, ThetaConstants, hadamard, invert_map, ladder, node_translate,
                               nodes, normalize, on_surface, proj_equal, scale_map, square_map,
                               surface_from_thetas, tripling_constants, validate_thetas, xadd, xdbl)


def test_hadamard_is_involution_up_to_four(toy3):
    F = toy3.field
    P = KummerPoint(F(j, 2 * j) for j in range(1, 5))
    four = F(4)
    assert hadamard(hadamard(P)) == KummerPoint(four * x for x in P)


def test_invert_map_is_projective_inverse(toy3):
    P = toy3.D_R[0]
    prod = scale_map(P, invert_map(P))
    assert proj_equal(prod, KummerPoint([toy3.field.one()] * 4))


def test_identity_and_nodes_on_surface(toy):
    O = toy.thetas
    assert on_surface(O, O)
    for T in nodes(O):
        assert on_surface(T, O)
    assert len({normalize(T) for T in nodes(O)}) == 16


def test_node_translations_are_involutions(toy):
    P = toy.D_R[3]
    for i in range(16):
        assert proj_equal(node_translate(node_translate(P, i), i), P)
    with pytest.raises(ValueError):
        node_translate(P, 16)


def test_nodes_are_two_torsion(toy):
    TC = toy.tc
    for T in nodes(toy.thetas):
        assert proj_equal(xdbl(T, TC), toy.thetas)


def test_pseudo_group_law_consistency(toy, rng):
    TC = toy.tc
    P = random_point(toy, rng)
    assert on_surface(xdbl(P, TC), toy.thetas)
    # [a+b]P from [a]P, [b]P and [a-b]P
    for a, b in ((5, 3), (7, 2), (11, 4)):
        A, B, D = ladder(a, P, TC), ladder(b, P, TC), ladder(a - b, P, TC)
        assert proj_equal(xadd(A, B, D, TC), ladder(a + b, P, TC))
    assert proj_equal(ladder(0, P, TC), toy.thetas)
    assert proj_equal(ladder(-3, P, TC), ladder(3, P, TC))


def test_tpl_matches_ladder(toy, rng):
    for _ in range(10):
        P = random_point(toy, rng)
        assert proj_equal(tpl(P, toy.tc), ladder(3, P, toy.tc))


def test_kernel_points_have_order_3k(toy):
    TC = toy.tc
    n = 3 ** toy.k
    for P in toy.D_R[:3]:
        assert proj_equal(ladder(n, P, TC), toy.thetas)
        assert not proj_equal(ladder(n // 3, P, TC), toy.thetas)


def test_primitive_costs(toy):
    P, Q, D = toy.D_R[0], toy.D_R[1], toy.D_R[5]
    TC = toy.tc
    with counting() as c:
        xdbl(P, TC)
    assert c.triple() == (8, 8, 16) and c.xdbl == 1
    with counting() as c:
        xadd(P, Q, D, TC)
    assert c.triple() == (18, 8, 24) and c.xadd == 1
    iD = invert_map(D)
    with counting() as c:
        xadd(P, Q, D, TC, iD)
    assert c.triple() == (12, 8, 24)
    with counting() as c:
        tripling_constants(toy.thetas)
    assert (c.mul, c.sqr) == (12, 4) and c.inv == 0


def test_surface_equation_rejects_off_points(toy3):
    F = toy3.field
    P = toy3.D_R[0]
    Q = KummerPoint((P[0], P[1], P[2], P[3] + F.one()))
    assert on_surface(P, toy3.thetas)
    assert not on_surface(Q, toy3.thetas)


def test_degenerate_thetas(toy3):
    F = toy3.field
    bad = ThetaConstants((F.one(), F.one(), F.one(), F.one()))
    with pytest.raises(DegenerateSurface):
        validate_thetas(bad)
    with pytest.raises(DegenerateSurface):
        tripling_constants(ThetaConstants((F.zero(), F.one(), F(2), F(3))))
    with pytest.raises(ValueError):
        KummerPoint((F.one(),) * 3)


def test_point_hex_roundtrip(toy5):
    P = toy5.D_S[4]
    assert KummerPoint.from_hex(toy5.field, P.hex()) == P


def test_on_surface_accepts_precomputed_coefficients(toy):
    K = surface_from_thetas(toy.thetas)
    assert all(on_surface(P, K) for P in list(toy.D_R) + list(toy.D_S))
