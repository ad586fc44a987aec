"""Arithmetic in F_p and F_{p^2} = F_p(i), i^2 = -1, with operation counting.

The element type comes from the compiled kernel when it is importable and from
the pure-Python twin otherwise.  ``FASTKUMMER_BACKEND=python`` forces the
fallback.
"""

import os
import random as _random
from contextlib import contextmanager

from . import _kernel_py
from ._counter import CURRENT, OpCounter, counting, uncounted
from ._errors import FieldDivisionByZero, FieldMismatch

_want = os.environ.get("FASTKUMMER_BACKEND", "auto").lower()
if _want == "python":
    _backend = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel as _backend
        BACKEND = "cython"
    except ImportError:
        if _want == "cython":
            raise
        _backend = _kernel_py
        BACKEND = "python"

FieldElement = _backend.FieldElement
PyFieldElement = _kernel_py.FieldElement

__all__ = [
    "BACKEND", "Field", "PrimeModulus", "FieldElement", "OpCounter", "counting", "uncounted",
    "fe_mul", "fe_sqr", "fe_inv", "fe_sqrt", "fe_batch_inv", "FieldMismatch",
    "FieldDivisionByZero",
]


class Field:
    """F_p (``ext=False``) or F_p(i) (``ext=True``).  Instances are interned per (p, ext)."""

    _cache = {}

    def __new__(cls, p, ext=True, element=None):
        element = element or FieldElement
        key = (p, bool(ext), element)
        f = cls._cache.get(key)
        if f is not None:
            return f
        if p < 3 or p % 2 == 0:
            raise ValueError(f"modulus must be an odd prime, got {p}")
        if ext and p % 4 != 3:
            raise ValueError("F_p(i) needs p = 3 mod 4")
        f = super().__new__(cls)
        f.p = p
        f.ext = bool(ext)
        f.bitlength = p.bit_length()
        f.nbytes = (f.bitlength + 7) // 8
        f.element = element
        cls._cache[key] = f
        return f

    def __call__(self, re, im=0):
        return self.element(self, re, im)

    def zero(self):
        return self.element(self, 0)

    def one(self):
        return self.element(self, 1)

    def i(self):
        if not self.ext:
            raise FieldMismatch("F_p has no square root of -1")
        return self.element(self, 0, 1)

    def random(self, rng=_random):
        return self.element(self, rng.randrange(self.p), rng.randrange(self.p) if self.ext else 0)

    def random_nonzero(self, rng=_random):
        while True:
            x = self.random(rng)
            if not x.is_zero():
                return x

    def to_hex(self, x):
        n = self.nbytes
        return x.re.to_bytes(n, "big").hex() + x.im.to_bytes(n, "big").hex()

    def from_hex(self, s):
        n = 2 * self.nbytes
        if len(s) != 2 * n:
            raise ValueError(f"expected {2 * n} hex digits, got {len(s)}")
        if s != s.lower():
            raise ValueError("field elements are lowercase hex")
        re, im = int(s[:n], 16), int(s[n:], 16)
        if re >= self.p or im >= self.p:
            raise ValueError("hex value not reduced mod p")
        return self.element(self, re, im)

    def __eq__(self, o):
        return isinstance(o, Field) and o.p == self.p and o.ext == self.ext

    def __hash__(self):
        return hash((self.p, self.ext))

    def __repr__(self):
        return f"F_{self.p}^{2 if self.ext else 1}"

    def __reduce__(self):
        return (Field, (self.p, self.ext))


PrimeModulus = Field


@contextmanager
def _use(ctx):
    if ctx is None:
        yield
        return
    token = CURRENT.set(ctx)
    try:
        yield
    finally:
        CURRENT.reset(token)


def fe_mul(x, y, ctx=None):
    with _use(ctx):
        return x * y


def fe_sqr(x, ctx=None):
    with _use(ctx):
        return x.sqr()


def fe_inv(x, ctx=None):
    with _use(ctx):
        return x.inv()


def fe_sqrt(x):
    """Canonical root or None (NoRoot is a value)."""
    return x.sqrt()


def fe_batch_inv(xs, ctx=None):
    """Montgomery's trick: one inversion and 3(n-1) multiplications."""
    xs = list(xs)
    for idx, x in enumerate(xs):
        if x.is_zero():
            raise FieldDivisionByZero(f"batch inversion: element {idx} is zero")
    if not xs:
        return []
    with _use(ctx):
        pre = [xs[0]]
        for x in xs[1:]:
            pre.append(pre[-1] * x)
        t = pre[-1].inv()
        out = [None] * len(xs)
        for j in range(len(xs) - 1, 0, -1):
            out[j] = t * pre[j - 1]
            t = t * xs[j]
        out[0] = t
    return out
