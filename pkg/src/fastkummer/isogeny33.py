"""(3,3)-isogenies between fast Kummer surfaces and chains of them.

One step with kernel <R, S> is the cubic map

    x1' = x1 (c1 x1^2 + c2 x2^2 + c3 x3^2 + c4 x4^2) + c5 x2 x3 x4

and its three sign/index-permuted companions.  The coefficients come from two
invariant cubics evaluated at the kernel generators; see
``compute_33_coefficients`` for the arrangement and its cost.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._counter import uncounted
from ._errors import DegenerateImage, InvalidKernel
from .kummer import (KummerPoint, ThetaConstants, TriplingConstants, as_tc, hadamard,
                     invert_map, proj_equal, scale_map, square_map, tripling_constants)

__all__ = [
    "TriplingConstants", "tripling_constants", "IsogenyCoefficients", "tpl",
    "compute_33_coefficients", "isogeny_33_evaluate", "compute_image_thetas",
    "compute_strategy", "strategy_cost", "naive_strategy", "validate_strategy",
    "isogeny_33_chain", "intermediate_quantities", "TPL_EVAL_RATIO",
]

TPL_EVAL_RATIO = Fraction(11, 10)


@dataclass(frozen=True)
class IsogenyCoefficients:
    """c1..c5 of one step, plus c1 + c3 and c2 + c4 which every evaluation reuses."""

    c1: object
    c2: object
    c3: object
    c4: object
    c5: object
    s13: object
    s24: object

    def as_tuple(self):
        return (self.c1, self.c2, self.c3, self.c4, self.c5)

    def proj_equal(self, other):
        a, b = self.as_tuple(), other.as_tuple()
        with uncounted():
            return all(a[i] * b[j] == a[j] * b[i] for i in range(5) for j in range(i + 1, 5))


# ---------------------------------------------------------------- tripling

def tpl(P, TC):
    """[3]P as the doubling of P followed by the pseudo-addition 2P + P: 26M + 12S + 32a."""
    TC = as_tc(TC)
    R = hadamard(square_map(P))
    Q = hadamard(scale_map(square_map(R), TC.inv_sq_duals))
    Q = scale_map(Q, TC.inv_thetas)
    Q = hadamard(square_map(Q))
    Q = scale_map(Q, scale_map(R, TC.inv_sq_duals))
    return scale_map(hadamard(Q), invert_map(P))


# ---------------------------------------------------------------- one step

def _point_terms(P, W, TC):
    """Per-generator quantities: (2*gamma, 2*Y_t weighted, h) in 16M + 4S + 30a.

    gamma and the Y_t share their products: with sigma = m1 + m2, delta = m1 - m2
    for the two monomials of a pair type, sigma*(e-) + delta*(e+) and
    sigma*(e-) - delta*(e+) give twice each cross term.
    """
    x1, x2, x3, x4 = P
    pairs = ((x1 * x2, x3 * x4), (x1 * x3, x2 * x4), (x1 * x4, x2 * x3))
    g = []
    Y = []
    for (m1, m2), (wm, wp) in zip(pairs, W):
        u = (m1 + m2) * wm
        v = (m1 - m2) * wp
        g.append(u + v)
        Y.append(u - v)
    gamma = g[0] + g[1] + g[2]
    h = hadamard(scale_map(hadamard(square_map(P)), TC.inv_sq_duals))
    return gamma, Y, h


def _shared_terms(O):
    a, b, c, d = O
    ab, cd, ac, bd, ad, bc = a * b, c * d, a * c, b * d, a * d, b * c
    e = ((ab - cd, ab + cd), (ac - bd, ac + bd), (ad - bc, ad + bc))
    D1 = e[0][0] * e[0][1]
    D2 = e[1][0] * e[1][1]
    D3 = e[2][0] * e[2][1]
    Dw = (D2 * D3, D1 * D3, D1 * D2)
    W = tuple((w * em, w * ep) for w, (em, ep) in zip(Dw, e))
    return (D1, D2, D3), Dw, W


def compute_33_coefficients(R, S, TC):
    """Coefficients of the (3,3)-isogeny with kernel <R, S>: 72M + 8S + 81a.

    gamma(P) = D23 (x1x2 ab - x3x4 cd) + D13 (x1x3 ac - x2x4 bd) + D12 (x1x4 ad - x2x3 bc)
    Y_t(P)   = the same monomials with the theta products swapped (D-weighted here)
    h(P)     = H(C_{1/A^2}(H(S(P))))
    beta1    = gamma(R) Y_1(S) - gamma(S) Y_1(R)
    beta2    = h2(R) h1(S) - h1(R) h2(S)
    c1       = 2 beta1 h1(R) h1(S)
    c_{t+1}  = beta1 (h1(R) h_{t+1}(S) + h_{t+1}(R) h1(S)) + beta2 (gamma(R) Y_t(S) + gamma(S) Y_t(R))
    c5       = 2 beta2 gamma(R) gamma(S)
    gamma and Y carry a common factor 2, so the tuple is scaled by 4 overall.
    """
    TC = as_tc(TC)
    _, _, W = _shared_terms(TC.thetas)
    gR, YR, hR = _point_terms(R, W, TC)
    gS, YS, hS = _point_terms(S, W, TC)
    p1 = gR * YS[0]
    q1 = gS * YR[0]
    beta1 = p1 - q1
    u = hR[0] * hS[1]
    v = hR[1] * hS[0]
    beta2 = v - u
    with uncounted():
        if beta1.is_zero() and beta2.is_zero():
            raise InvalidKernel("beta1 and beta2 both vanish")
    c1 = beta1 * (hR[0] * hS[0])
    c1 = c1 + c1
    c2 = beta1 * (u + v) + beta2 * (p1 + q1)
    c3 = (beta1 * (hR[0] * hS[2] + hR[2] * hS[0])
          + beta2 * (gR * YS[1] + gS * YR[1]))
    c4 = (beta1 * (hR[0] * hS[3] + hR[3] * hS[0])
          + beta2 * (gR * YS[2] + gS * YR[2]))
    c5 = beta2 * (gS * gR)
    c5 = c5 + c5
    if all(x.is_zero() for x in (c1, c2, c3, c4, c5)):
        raise InvalidKernel("all isogeny coefficients vanish")
    return IsogenyCoefficients(c1, c2, c3, c4, c5, c1 + c3, c2 + c4)


def _evaluate_core(P, s, cs):
    """The four cubics given the squares s of P's coordinates: 26M + 16a.

    The 4x4 coefficient matrix is [[A, B], [B, A]] with A, B symmetric 2x2
    circulants; the lower half is (A + B)(s_top + s_bottom) minus the upper half.
    """
    x1, x2, x3, x4 = P
    s1, s2, s3, s4 = s
    c1, c2, c3, c4, c5 = cs.c1, cs.c2, cs.c3, cs.c4, cs.c5
    top1 = (c1 * s1 + c2 * s2) + (c3 * s3 + c4 * s4)
    top2 = (c2 * s1 + c1 * s2) + (c4 * s3 + c3 * s4)
    t1 = s1 + s3
    t2 = s2 + s4
    bot1 = (cs.s13 * t1 + cs.s24 * t2) - top1
    bot2 = (cs.s24 * t1 + cs.s13 * t2) - top2
    t12 = x1 * x2
    t34 = x3 * x4
    out = KummerPoint((x1 * top1 + c5 * (x2 * t34),
                       x2 * top2 + c5 * (x1 * t34),
                       x3 * bot1 + c5 * (t12 * x4),
                       x4 * bot2 + c5 * (t12 * x3)))
    if all(x.is_zero() for x in out):
        raise DegenerateImage("isogeny evaluation returned the zero tuple")
    return out


def isogeny_33_evaluate(P, cs):
    """Image of P under one (3,3)-step: 26M + 4S + 16a."""
    return _evaluate_core(P, square_map(P), cs)


def compute_image_thetas(cs, TC):
    """Image theta constants phi(a:b:c:d), reusing the squared thetas: 26M + 16a."""
    TC = as_tc(TC)
    return ThetaConstants(_evaluate_core(TC.thetas, TC.sq_thetas, cs))


@dataclass(frozen=True)
class IntermediateQuantities:
    D1: object
    D2: object
    D3: object
    D12: object
    D13: object
    D23: object
    gamma_R: object
    gamma_S: object
    h_R: tuple
    h_S: tuple
    beta1: object
    beta2: object


def intermediate_quantities(R, S, O):
    """Unscaled gamma, h and beta values for inspection (uncounted)."""
    with uncounted():
        TC = as_tc(O)
        (D1, D2, D3), (D23, D13, D12), W = _shared_terms(TC.thetas)
        gR, YR, hR = _point_terms(R, W, TC)
        gS, YS, hS = _point_terms(S, W, TC)
        half = TC.thetas[0].field(2).inv()
        gR, gS = gR * half, gS * half
        YR = [y * half for y in YR]
        YS = [y * half for y in YS]
        beta1 = gR * YS[0] - gS * YR[0]
        beta2 = hR[1] * hS[0] - hR[0] * hS[1]
        return IntermediateQuantities(D1, D2, D3, D12, D13, D23, gR, gS, tuple(hR), tuple(hS),
                                      beta1, beta2)


# ---------------------------------------------------------------- strategies

def _split_costs(k, cost_tpl, cost_eval):
    cost = [Fraction(0)] * (k + 1)
    split = [0] * (k + 1)
    for n in range(2, k + 1):
        best, arg = None, None
        for m in range(1, n):
            c = cost[n - m] + cost[m] + m * cost_tpl + (n - m) * cost_eval
            if best is None or c < best:
                best, arg = c, m
        cost[n], split[n] = best, arg
    return cost, split


def compute_strategy(k, cost_tpl=TPL_EVAL_RATIO, cost_eval=1):
    """Optimal split table: entry n-2 is the number of triplings taken first in an n-step subtree.

    A subtree of n steps that triples m times first costs
    C(n - m) + C(m) + m * cost_tpl + (n - m) * cost_eval.  Ties go to the smaller m.
    """
    if k < 1:
        raise ValueError("chain length must be at least 1")
    _, split = _split_costs(k, Fraction(cost_tpl), Fraction(cost_eval))
    return [split[n] for n in range(2, k + 1)]


def naive_strategy(k):
    """Triple all the way down at every step, keeping only the original generators."""
    return [n - 1 for n in range(2, k + 1)]


def validate_strategy(strategy, k):
    if len(strategy) != max(k - 1, 0):
        raise ValueError(f"strategy for {k} steps needs {k - 1} entries, got {len(strategy)}")
    for n, m in enumerate(strategy, start=2):
        if not 1 <= m < n:
            raise ValueError(f"strategy entry for {n} steps is {m}, outside 1..{n - 1}")


def strategy_cost(strategy, cost_tpl=TPL_EVAL_RATIO, cost_eval=1):
    """Weighted cost of following the table (triplings and point evaluations only)."""
    cost_tpl, cost_eval = Fraction(cost_tpl), Fraction(cost_eval)

    @lru_cache(maxsize=None)
    def c(n):
        if n <= 1:
            return Fraction(0)
        m = strategy[n - 2]
        return c(n - m) + c(m) + m * cost_tpl + (n - m) * cost_eval

    return c(len(strategy) + 1)


# ---------------------------------------------------------------- chains

def _check_order(P, TC, k, label):
    with uncounted():
        Q = P
        for _ in range(k - 1):
            Q = tpl(Q, TC)
        if proj_equal(Q, TC.thetas):
            raise InvalidKernel(f"{label} has order dividing 3^{k - 1}")
        if not proj_equal(tpl(Q, TC), TC.thetas):
            raise InvalidKernel(f"{label} does not have order 3^{k}")


def isogeny_33_chain(k, O, R, S, strategy, push=(), paranoid=False):
    """Image thetas of the (3^k, 3^k)-isogeny with kernel <R, S>, and the images of ``push``.

    The loop body runs k - 1 times; the last step, whose generators already
    have order 3, sits after it.  Saved generator pairs live on a stack tagged
    with the size of the subtree they still have to serve.
    """
    validate_strategy(strategy, k)
    O = ThetaConstants(O)
    TC = tripling_constants(O)
    if paranoid:
        _check_order(R, TC, k, "R")
        _check_order(S, TC, k, "S")
    push = [KummerPoint(P) for P in push]
    stack = []
    n = k
    for _ in range(k - 1):
        while n > 1:
            m = strategy[n - 2]
            stack.append((R, S, m))
            for _ in range(m):
                R = tpl(R, TC)
                S = tpl(S, TC)
            n -= m
        cs = compute_33_coefficients(R, S, TC)
        O = compute_image_thetas(cs, TC)
        stack = [(isogeny_33_evaluate(P1, cs), isogeny_33_evaluate(P2, cs), h)
                 for P1, P2, h in stack]
        push = [isogeny_33_evaluate(P, cs) for P in push]
        R, S, n = stack.pop()
        TC = tripling_constants(O)
    cs = compute_33_coefficients(R, S, TC)
    O = compute_image_thetas(cs, TC)
    push = [isogeny_33_evaluate(P, cs) for P in push]
    return O, push
