import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_point
from fastkummer._errors import InvalidKernel
from fastkummer.field import counting
from fastkummer.isogeny33 import (compute_33_coefficients, compute_image_thetas, compute_strategy,
                                  intermediate_quantities, isogeny_33_chain, isogeny_33_evaluate,
                                  naive_strategy, strategy_cost, tpl, validate_strategy)
from fastkummer.kummer import ladder, node_translate, on_surface, proj_equal, xdbl


def order3(ps, P):
    for _ in range(ps.k - 1):
        P = tpl(P, ps.tc)
    return P


@pytest.fixture(scope="module", params=["toy3", "toy5"])
def step(request):
    from conftest import params
    ps = params(request.param)
    R, S = order3(ps, ps.D_R[0]), order3(ps, ps.D_S[0])
    cs = compute_33_coefficients(R, S, ps.tc)
    return ps, R, S, cs, compute_image_thetas(cs, ps.tc)


def test_whole_kernel_maps_to_identity(step):
    ps, R, S, cs, O2 = step
    R2, S2 = xdbl(R, ps.tc), xdbl(S, ps.tc)
    for P in (R, S, R2, S2, ps.thetas):
        assert proj_equal(isogeny_33_evaluate(P, cs), O2)


def test_image_is_fast_kummer_and_points_land_on_it(step, rng):
    ps, R, S, cs, O2 = step
    assert on_surface(O2, O2)
    for _ in range(5):
        P = random_point(ps, rng)
        assert on_surface(isogeny_33_evaluate(P, cs), O2)


def test_equivariance_under_node_translation(step, rng):
    ps, R, S, cs, O2 = step
    P = random_point(ps, rng)
    Q = isogeny_33_evaluate(P, cs)
    for i in range(16):
        assert proj_equal(isogeny_33_evaluate(node_translate(P, i), cs), node_translate(Q, i))


def test_homomorphism_on_multiples(step, rng):
    ps, R, S, cs, O2 = step
    P = random_point(ps, rng)
    assert proj_equal(isogeny_33_evaluate(xdbl(P, ps.tc), cs), xdbl(isogeny_33_evaluate(P, cs), O2))


def test_coefficients_symmetric_in_generators(step):
    ps, R, S, cs, O2 = step
    assert compute_33_coefficients(S, R, ps.tc).proj_equal(cs)


def test_intermediate_quantities_consistent(step):
    ps, R, S, cs, O2 = step
    iq = intermediate_quantities(R, S, ps.thetas)
    assert not (iq.beta1.is_zero() and iq.beta2.is_zero())


def test_exact_counts(step, rng):
    ps, R, S, cs, O2 = step
    P = random_point(ps, rng)
    with counting() as c:
        isogeny_33_evaluate(P, cs)
    assert c.triple() == (26, 4, 16)
    with counting() as c:
        compute_image_thetas(cs, ps.tc)
    assert c.triple() == (26, 0, 16)
    with counting() as c:
        tpl(P, ps.tc)
    assert c.triple() == (26, 12, 32)
    with counting() as c:
        compute_33_coefficients(R, S, ps.tc)
    assert c.triple() == (72, 8, 81)


def test_dependent_kernel_rejected(step):
    ps, R, S, cs, O2 = step
    with pytest.raises(InvalidKernel):
        compute_33_coefficients(R, R, ps.tc)


def test_chain_strategies_agree(toy, rng):
    pushed = [random_point(toy, rng) for _ in range(3)]
    R, S = toy.D_R[0], toy.D_S[0]
    outs = []
    for strat in (naive_strategy(toy.k), compute_strategy(toy.k), toy.strategy):
        outs.append(isogeny_33_chain(toy.k, toy.thetas, R, S, strat, push=pushed, paranoid=True))
    for O, imgs in outs[1:]:
        assert proj_equal(O, outs[0][0])
        assert all(proj_equal(a, b) for a, b in zip(imgs, outs[0][1]))


def test_chain_kills_kernel_generators(toy):
    R, S = toy.D_R[0], toy.D_S[0]
    O, imgs = isogeny_33_chain(toy.k, toy.thetas, R, S, toy.strategy, push=[R, S])
    assert all(proj_equal(X, O) for X in imgs)


def test_chain_paranoid_rejects_low_order(toy):
    R, S = toy.D_R[0], toy.D_S[0]
    R3 = tpl(R, toy.tc)
    with pytest.raises(InvalidKernel):
        isogeny_33_chain(toy.k, toy.thetas, R3, S, toy.strategy, paranoid=True)


def test_chain_cost_is_independent_of_kernel(toy5):
    costs = set()
    for j in range(4):
        R = ladder(1 + 3 * j, toy5.D_R[0], toy5.tc)
        with counting() as c:
            isogeny_33_chain(toy5.k, toy5.thetas, R, toy5.D_S[0], toy5.strategy)
        costs.add(c.triple())
    assert len(costs) == 1


# ---------------------------------------------------------------- strategies

def _exhaustive(n, ratio):
    if n == 1:
        return Fraction(0)
    return min(_exhaustive(n - m, ratio) + _exhaustive(m, ratio) + m * ratio + (n - m)
               for m in range(1, n))


@given(st.integers(1, 9), st.sampled_from([Fraction(1), Fraction(11, 10), Fraction(3, 2), Fraction(2)]))
@settings(max_examples=40, deadline=None)
def test_strategy_is_optimal(k, ratio):
    s = compute_strategy(k, ratio)
    validate_strategy(s, k)
    assert strategy_cost(s, ratio) == _exhaustive(k, ratio)


def test_naive_strategy_cost():
    # k(k-1)/2 triplings and k-1 evaluations along the spine
    for k in range(1, 8):
        assert strategy_cost(naive_strategy(k), 1, 1) == Fraction(k * (k - 1), 2) + (k - 1)


def test_strategy_validation():
    with pytest.raises(ValueError):
        validate_strategy([1, 1], 2)
    with pytest.raises(ValueError):
        validate_strategy([2], 2)
    with pytest.raises(ValueError):
        compute_strategy(0)
    assert compute_strategy(1) == []


def test_every_split_table_gives_same_chain(toy3):
    R, S = toy3.D_R[0], toy3.D_S[0]
    ref = None
    for s in itertools.product(*[range(1, n) for n in range(2, toy3.k + 1)]):
        O, _ = isogeny_33_chain(toy3.k, toy3.thetas, R, S, list(s))
        ref = ref or O
        assert proj_equal(O, ref)
