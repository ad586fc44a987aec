"""Weil pairing on genus-2 Jacobians via Miller's algorithm, and symplectic bases of J[n]."""

import random

from .fp2 import Fp2
from .jac import eval_factors


class Degenerate(Exception):
    pass


def miller_values(J, D, n, tests):
    """Values of f with div f = n*E_D - E_{nD} + (...)inf at each effective divisor in tests."""
    p = J.p
    num = [Fp2(p, 1) for _ in tests]
    den = [Fp2(p, 1) for _ in tests]
    T = D
    for bit in bin(n)[3:]:
        T2, fac = J.add_f(T, T)
        for i, E in enumerate(tests):
            a, b = eval_factors(fac, E)
            num[i] = num[i] * num[i] * a
            den[i] = den[i] * den[i] * b
        T = T2
        if bit == "1":
            T2, fac = J.add_f(T, D)
            for i, E in enumerate(tests):
                a, b = eval_factors(fac, E)
                num[i] = num[i] * a
                den[i] = den[i] * b
            T = T2
    for i in range(len(tests)):
        if num[i].is_zero() or den[i].is_zero():
            raise Degenerate
    return [num[i] / den[i] for i in range(len(tests))]


def weil(J, A, B, n, rng=random, tries=50):
    from . import poly as P

    for _ in range(tries):
        R1 = J.random_point(rng)
        R2 = J.random_point(rng)
        AR = J.add(A, R1)
        BR = J.add(B, R2)
        if any(P.deg(X[0]) != 2 for X in (R1, R2, AR, BR)):
            continue
        try:
            fa = miller_values(J, AR, n, [BR, R2])
            fr = miller_values(J, R1, n, [BR, R2])
            fb = miller_values(J, BR, n, [AR, R1])
            fs = miller_values(J, R2, n, [AR, R1])
        except Degenerate:
            continue
        gA_at_DB = (fa[0] / fr[0]) / (fa[1] / fr[1])
        gB_at_DA = (fb[0] / fs[0]) / (fb[1] / fs[1])
        return gA_at_DB / gB_at_DA
    raise Degenerate("could not find a disjoint support")


def dlog3(z, zeta, k):
    """m with zeta^m = z, zeta of order 3^k."""
    n = 3**k
    m = 0
    gen3 = zeta ** (3 ** (k - 1))
    roots = {Fp2(z.p, 1): 0, gen3: 1, gen3 * gen3: 2}
    for j in range(k):
        t = (z * zeta ** (-m)) ** (3 ** (k - 1 - j))
        d = roots[t]
        m += d * 3**j
    assert zeta**m == z
    return m % n


def symplectic_basis(J, pts, k, rng=random):
    """Return (Q1,Q2,Q3,Q4, zeta) with e(Q1,Q3) = e(Q2,Q4) = zeta and every other pairing trivial."""
    n = 3**k
    E = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            E[i][j] = weil(J, pts[i], pts[j], n, rng)
    zeta = None
    for i in range(4):
        for j in range(i + 1, 4):
            if E[i][j] ** (3 ** (k - 1)) != Fp2(J.p, 1):
                zeta = E[i][j]
                break
        if zeta is not None:
            break
    if zeta is None:
        raise Degenerate("pairing matrix not invertible")
    M = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            M[i][j] = dlog3(E[i][j], zeta, k)
            M[j][i] = (-M[i][j]) % n

    def form(x, y):
        return sum(x[i] * M[i][j] * y[j] for i in range(4) for j in range(4)) % n

    basis = [[int(i == j) for j in range(4)] for i in range(4)]
    pair = None
    for i in range(4):
        for j in range(4):
            if form(basis[i], basis[j]) % 3:
                pair = (i, j)
                break
        if pair:
            break
    i, j = pair
    x, y = basis[i], basis[j]
    s = pow(form(x, y), -1, n)
    y = [(c * s) % n for c in y]
    rest = [basis[t] for t in range(4) if t not in pair]
    proj = []
    for z in rest:
        a = form(z, y)
        b = form(z, x)
        proj.append([(z[t] - a * x[t] + b * y[t]) % n for t in range(4)])
    z1, z2 = proj
    w = form(z1, z2)
    if w % 3 == 0:
        raise Degenerate("points do not span J[n]")
    z2 = [(c * pow(w, -1, n)) % n for c in z2]
    coeffs = [x, z1, y, z2]

    def combine(c):
        R = J.zero()
        for t in range(4):
            R = J.add(R, J.mul(c[t], pts[t]))
        return R

    Q = [combine(c) for c in coeffs]
    return Q, zeta, coeffs
