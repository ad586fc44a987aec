"""Plain F_{p^2} = F_p(i), i^2 = -1, with no operation counting."""

import random


class Fp2:
    __slots__ = ("p", "re", "im")

    def __init__(self, p, re, im=0):
        self.p = p
        self.re = re % p
        self.im = im % p

    def _c(self, o):
        if isinstance(o, Fp2):
            return o
        return Fp2(self.p, o, 0)

    def __add__(self, o):
        o = self._c(o)
        return Fp2(self.p, self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._c(o)
        return Fp2(self.p, self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return self._c(o) - self

    def __neg__(self):
        return Fp2(self.p, -self.re, -self.im)

    def __mul__(self, o):
        o = self._c(o)
        return Fp2(self.p, self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        r = Fp2(self.p, 1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def inv(self):
        n = (self.re * self.re + self.im * self.im) % self.p
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        ni = pow(n, -1, self.p)
        return Fp2(self.p, self.re * ni, -self.im * ni)

    def __truediv__(self, o):
        return self * self._c(o).inv()

    def __rtruediv__(self, o):
        return self._c(o) * self.inv()

    def __eq__(self, o):
        if isinstance(o, int):
            o = Fp2(self.p, o)
        return isinstance(o, Fp2) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __repr__(self):
        return f"({self.re}+{self.im}i)"

    def is_square(self):
        if self.is_zero():
            return True
        n = (self.re * self.re + self.im * self.im) % self.p
        return pow(n, (self.p - 1) // 2, self.p) == 1

    def sqrt(self):
        """Some square root, or None."""
        p = self.p
        if self.is_zero():
            return self
        a1 = self ** ((p - 3) // 4)
        alpha = a1 * a1 * self
        x0 = a1 * self
        if alpha == Fp2(p, -1):
            r = Fp2(p, 0, 1) * x0
        else:
            b = (alpha + 1) ** ((p - 1) // 2)
            r = b * x0
        return r if r * r == self else None


def rand(p, rng=random):
    return Fp2(p, rng.randrange(p), rng.randrange(p))
