import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fastkummer._errors import ChainInvariantViolation, InvalidKernel, ScalarOutOfRange
from fastkummer.chain3dac import (CASES, KernelTuple, chain_length, encode, ind, three_dac,
                                  three_dac_mod, validate_kernel_tuple)
from fastkummer.field import counting
from fastkummer.kummer import KummerPoint, proj_equal, xadd


@given(st.integers(4, 40), st.data())
@settings(max_examples=60, deadline=None)
def test_encode_shapes(ell, data):
    beta = data.draw(st.integers(0, (1 << ell) - 1))
    gamma = data.draw(st.integers(0, (1 << ell) - 1))
    enc = encode(beta, gamma, ell)
    for v in (enc.b0, enc.b1, enc.b2, enc.b3):
        assert len(v) == ell - 1 and set(v) <= {0, 1}
    assert enc.b in (0, 1)
    assert enc.b3[0] == beta & 1


def test_encode_rejects_out_of_range():
    with pytest.raises(ScalarOutOfRange):
        encode(16, 1, 4)
    with pytest.raises(ScalarOutOfRange):
        encode(-1, 1, 4)


def test_ind_table():
    assert ind((1, 1, 0, 0, 0, 0)) == 1
    assert ind((0, 0, 1, 1, 0, 0)) == 2
    assert ind((0, 1, 1, 0, 0, 0)) == 3
    assert ind((1, 0, 0, 1, 0, 0)) == 4
    with pytest.raises(ChainInvariantViolation):
        ind((0, 0, 0, 0, 0, 0))


def test_cases_cover_all_bit_patterns():
    assert len(CASES) == 16


def test_three_dac_small_cases(toy):
    D = toy.D_R
    TC = toy.tc
    # (0, 0) gives P1, (0, 1) gives P1 + P3, (1, 0) gives P1 + P2
    assert proj_equal(three_dac_mod(D, 0, 0, toy.k, TC), D[0])
    assert proj_equal(three_dac_mod(D, 0, 1, toy.k, TC), xadd(D[0], D[2], D[6], TC))
    assert proj_equal(three_dac_mod(D, 1, 0, toy.k, TC), xadd(D[0], D[1], D[5], TC))


def test_three_dac_mod_reduces(toy, rng):
    n = 3 ** toy.k
    for _ in range(5):
        b, g = rng.randrange(n), rng.randrange(n)
        ref = three_dac_mod(toy.D_S, b, g, toy.k, toy.tc)
        assert proj_equal(three_dac_mod(toy.D_S, b + 5 * n, g + 2 * n, toy.k, toy.tc), ref)
        assert proj_equal(three_dac_mod(toy.D_S, b, g, toy.k, toy.tc, reuse_inverses=True), ref)


def test_window_and_mod_agree(toy, rng):
    ell = toy.ell
    n = 3 ** toy.k
    for _ in range(5):
        b = rng.randrange(1 << (ell - 1), 1 << ell)
        g = rng.randrange(1 << (ell - 1), 1 << ell)
        assert proj_equal(three_dac(toy.D_R, b, g, ell, toy.tc),
                          three_dac_mod(toy.D_R, b % n, g % n, toy.k, toy.tc))


def test_three_dac_window_enforced(toy3):
    with pytest.raises(ScalarOutOfRange):
        three_dac(toy3.D_R, 1, 1 << (toy3.ell - 1), toy3.ell, toy3.tc)


@pytest.mark.parametrize("reuse", [False, True])
def test_cost_and_uniform_trace(toy5, rng, reuse):
    ell = toy5.ell
    traces = set()
    for _ in range(12):
        b = rng.randrange(1 << (ell - 1), 1 << ell)
        g = rng.randrange(1 << (ell - 1), 1 << ell)
        with counting(trace=True, ops=True) as c:
            three_dac(toy5.D_R, b, g, ell, toy5.tc, reuse_inverses=reuse)
        assert (c.xadd, c.xdbl) == (3 * ell - 2, ell - 1)
        traces.add((tuple(c.trace), tuple(c.ops)))
    assert len(traces) == 1


def test_chain_length():
    assert chain_length(3) == 6
    assert chain_length(75) == 120


def test_kernel_tuple_validation(toy):
    ok, msg = validate_kernel_tuple(toy.D_R, toy.tc)
    assert ok, msg
    pts = list(toy.D_R)
    pts[3], pts[4] = pts[4], pts[3]
    ok, msg = validate_kernel_tuple(pts, toy.tc)
    assert not ok
    with pytest.raises(InvalidKernel):
        KernelTuple(tuple(pts[:9]))
    F = toy.field
    with pytest.raises(InvalidKernel):
        KernelTuple(tuple(pts[:9]) + (KummerPoint((F.zero(), F.one(), F.one(), F.one())),))
