"""Pure-Python field element; the reference for the compiled kernel in _kernel.pyx.

Both backends expose the same ``FieldElement`` class and must agree bit for bit,
counts included.
"""

from ._counter import CURRENT
from ._errors import FieldDivisionByZero, FieldMismatch


def _sqrt_int_pair(re, im, p, ext):
    """Some square root of re + im*i as an (re, im) pair, or None."""
    if not ext:
        if re == 0:
            return (0, 0)
        r = pow(re, (p + 1) // 4, p)
        return (r, 0) if r * r % p == re else None
    if re == 0 and im == 0:
        return (0, 0)
    # x = a + bi is a square iff its norm is a square in F_p
    n = (re * re + im * im) % p
    rn = pow(n, (p + 1) // 4, p)
    if rn * rn % p != n:
        return None
    inv2 = (p + 1) // 2
    for s in (rn, p - rn):
        t = (re + s) * inv2 % p
        x = pow(t, (p + 1) // 4, p)
        if x * x % p != t:
            continue
        if x == 0:
            continue
        y = im * pow(2 * x, -1, p) % p
        return (x, y)
    # re + s = 0 for both signs only when im = 0 and -re is a square: root is purely imaginary
    t = (-re) % p
    y = pow(t, (p + 1) // 4, p)
    if y * y % p == t:
        return (0, y)
    return None


class FieldElement:
    """An element of F_p or F_p(i), i^2 = -1, fully reduced after every operation."""

    __slots__ = ("re", "im", "field")

    def __init__(self, field, re, im=0):
        p = field.p
        self.field = field
        self.re = re % p
        self.im = im % p
        if self.im and not field.ext:
            raise FieldMismatch("base-field element with nonzero imaginary part")

    def _same(self, o):
        if not isinstance(o, FieldElement) or o.field is not self.field:
            if isinstance(o, FieldElement) and o.field == self.field:
                return
            raise FieldMismatch(f"operands from different fields: {self.field!r} and "
                                f"{getattr(o, 'field', type(o).__name__)!r}")

    def __add__(self, o):
        self._same(o)
        f = self.field
        c = CURRENT.get()
        if c is not None:
            if f.ext:
                c.a += 1
            else:
                c.ba += 1
            if c.ops is not None:
                c.ops.append("a")
        r = FieldElement.__new__(FieldElement)
        r.field = f
        p = f.p
        r.re = (self.re + o.re) % p
        r.im = (self.im + o.im) % p
        return r

    def __sub__(self, o):
        self._same(o)
        f = self.field
        c = CURRENT.get()
        if c is not None:
            if f.ext:
                c.a += 1
            else:
                c.ba += 1
            if c.ops is not None:
                c.ops.append("a")
        r = FieldElement.__new__(FieldElement)
        r.field = f
        p = f.p
        r.re = (self.re - o.re) % p
        r.im = (self.im - o.im) % p
        return r

    def __neg__(self):
        f = self.field
        c = CURRENT.get()
        if c is not None:
            if f.ext:
                c.a += 1
            else:
                c.ba += 1
            if c.ops is not None:
                c.ops.append("a")
        r = FieldElement.__new__(FieldElement)
        r.field = f
        p = f.p
        r.re = -self.re % p
        r.im = -self.im % p
        return r

    def __mul__(self, o):
        self._same(o)
        f = self.field
        p = f.p
        c = CURRENT.get()
        r = FieldElement.__new__(FieldElement)
        r.field = f
        if f.ext:
            if c is not None:
                c.m += 1
                if c.ops is not None:
                    c.ops.append("M")
            a0, a1, b0, b1 = self.re, self.im, o.re, o.im
            t0 = a0 * b0
            t1 = a1 * b1
            r.re = (t0 - t1) % p
            r.im = ((a0 + a1) * (b0 + b1) - t0 - t1) % p
        else:
            if c is not None:
                c.bm += 1
                if c.ops is not None:
                    c.ops.append("M")
            r.re = self.re * o.re % p
            r.im = 0
        return r

    def sqr(self):
        f = self.field
        p = f.p
        c = CURRENT.get()
        r = FieldElement.__new__(FieldElement)
        r.field = f
        if f.ext:
            if c is not None:
                c.s += 1
                if c.ops is not None:
                    c.ops.append("S")
            a0, a1 = self.re, self.im
            r.re = (a0 + a1) * (a0 - a1) % p
            r.im = 2 * a0 * a1 % p
        else:
            if c is not None:
                c.bs += 1
                if c.ops is not None:
                    c.ops.append("S")
            r.re = self.re * self.re % p
            r.im = 0
        return r

    def inv(self):
        f = self.field
        p = f.p
        if self.re == 0 and self.im == 0:
            raise FieldDivisionByZero("inverse of zero")
        c = CURRENT.get()
        r = FieldElement.__new__(FieldElement)
        r.field = f
        if f.ext:
            n = (self.re * self.re + self.im * self.im) % p
            ni = pow(n, -1, p)
            r.re = self.re * ni % p
            r.im = -self.im * ni % p
            if c is not None:
                c.i += 1
                c.inv_sqr += 2
                c.inv_mul += 2
                if c.ops is not None:
                    c.ops.append("I")
        else:
            r.re = pow(self.re, -1, p)
            r.im = 0
            if c is not None:
                c.bi += 1
                if c.ops is not None:
                    c.ops.append("I")
        return r

    def __truediv__(self, o):
        return self * o.inv()

    def sqrt(self):
        """Canonical square root (lexicographically smaller (re, im) of the two), or None."""
        f = self.field
        p = f.p
        rt = _sqrt_int_pair(self.re, self.im, p, f.ext)
        if rt is None:
            return None
        re, im = rt
        other = ((-re) % p, (-im) % p)
        if other < (re, im):
            re, im = other
        return FieldElement(f, re, im)

    def is_square(self):
        return _sqrt_int_pair(self.re, self.im, self.field.p, self.field.ext) is not None

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not (self.re == 0 and self.im == 0)

    def __eq__(self, o):
        if isinstance(o, int):
            p = self.field.p
            return self.re == o % p and self.im == 0
        if not isinstance(o, FieldElement):
            return NotImplemented
        return self.re == o.re and self.im == o.im and self.field == o.field

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.re, self.im, self.field.p))

    def __repr__(self):
        if self.field.ext:
            return f"({self.re} + {self.im}*i)"
        return str(self.re)

    def __reduce__(self):
        return (FieldElement, (self.field, self.re, self.im))
