"""Cantor arithmetic on the Jacobian of y^2 = h(x), deg h = 5, with Miller-function tracking.

Divisor classes are reduced Mumford pairs (u, v): u monic, deg v < deg u <= 2, u | h - v^2.
Every addition also returns the factors of a function whose divisor is
D1 + D2 - (D1 + D2)_reduced (up to multiples of the point at infinity).
A factor is ("x", g, e) for g(x)^e or ("y", v, e) for (y - v(x))^e.
"""

import random

from . import poly as P
from .fp2 import Fp2, rand


class Jacobian:
    def __init__(self, h):
        self.h = P.trim(h)
        self.p = self.h[0].p
        assert P.deg(self.h) == 5

    def zero(self):
        return ([Fp2(self.p, 1)], [])

    def is_zero(self, D):
        return P.deg(D[0]) == 0

    def on_jacobian(self, D):
        u, v = D
        return not P.mod(P.sub(self.h, P.mul(v, v)), u)

    def neg(self, D):
        u, v = D
        return (u, P.neg(v))

    def eq(self, A, B):
        return A[0] == B[0] and P.trim(A[1]) == P.trim(B[1])

    def add_f(self, D1, D2):
        u1, v1 = D1
        u2, v2 = D2
        h = self.h
        one = [Fp2(self.p, 1)]
        d0, e1, e2 = P.xgcd(u1, u2)
        if P.deg(d0) == 0:
            d, s1, s2, s3 = one, e1, e2, []
        else:
            d, c1, c2 = P.xgcd(d0, P.add(v1, v2))
            s1, s2, s3 = P.mul(c1, e1), P.mul(c1, e2), c2
        factors = []
        if P.deg(d) > 0:
            factors.append(("x", d, 1))
        dd = P.mul(d, d)
        u, r = P.divmod_(P.mul(u1, u2), dd)
        assert not r
        num = P.add(P.add(P.mul(P.mul(s1, u1), v2), P.mul(P.mul(s2, u2), v1)),
                    P.mul(s3, P.add(P.mul(v1, v2), h)))
        v, r = P.divmod_(num, d)
        assert not r
        v = P.mod(v, u)
        while P.deg(u) > 2:
            up, r = P.divmod_(P.sub(h, P.mul(v, v)), u)
            assert not r
            factors.append(("y", v, 1))
            factors.append(("x", up, -1))
            u = P.monic(up)
            v = P.mod(P.neg(v), u)
        return (u, v), factors

    def add(self, D1, D2):
        return self.add_f(D1, D2)[0]

    def mul(self, n, D):
        if n < 0:
            return self.mul(-n, self.neg(D))
        R = self.zero()
        Q = D
        while n:
            if n & 1:
                R = self.add(R, Q)
            Q = self.add(Q, Q)
            n >>= 1
        return R

    def sub(self, A, B):
        return self.add(A, self.neg(B))

    def random_point(self, rng=random):
        """A random class, sum of two random affine points."""
        pts = []
        while len(pts) < 2:
            x = rand(self.p, rng)
            y = P.evaluate(self.h, x).sqrt()
            if y is None:
                continue
            if rng.randrange(2):
                y = -y
            pts.append(([-x, Fp2(self.p, 1)], [y]))
        return self.add(pts[0], pts[1])


def eval_factors(factors, E):
    """(numerator, denominator) of the product of factors evaluated at the effective divisor E."""
    uE, vE = E
    p = uE[0].p
    num = Fp2(p, 1)
    den = Fp2(p, 1)
    for kind, g, e in factors:
        if kind == "x":
            val = P.resultant_monic(uE, g)
        else:
            val = P.resultant_monic(uE, P.sub(vE, g))
        if e > 0:
            num = num * val
        else:
            den = den * val
    return num, den
