"""Operation counters shared by both arithmetic backends.

A counter is active for the duration of a ``counting()`` block; outside of one
arithmetic runs uncounted.  Raw tallies are kept per operand field and converted
to the requested scope on read.
"""

import contextvars
from contextlib import contextmanager

CURRENT = contextvars.ContextVar("fastkummer_counter", default=None)

# base-field additions spent inside one extension-field operation
_ADD_IN_MUL = 5
_ADD_IN_SQR = 3


class OpCounter:
    """Tallies of field operations.

    ``scope`` selects how the public ``mul``/``sqr``/``add``/``inv`` views read:
    ``"ext"`` counts F_{p^2} operations as units, ``"base"`` converts them to F_p
    operations (one F_{p^2} multiplication is 3 base multiplications, one
    squaring is 2).  Work done inside inversions never reaches the headline
    views; it lands in ``inv_mul``/``inv_sqr`` in base units.
    """

    __slots__ = ("scope", "m", "s", "a", "i", "bm", "bs", "ba", "bi",
                 "inv_mul", "inv_sqr", "xadd", "xdbl", "trace", "ops")

    def __init__(self, scope="ext", trace=False, ops=False):
        if scope not in ("ext", "base"):
            raise ValueError(f"unknown counter scope {scope!r}")
        self.scope = scope
        self.m = self.s = self.a = self.i = 0
        self.bm = self.bs = self.ba = self.bi = 0
        self.inv_mul = self.inv_sqr = 0
        self.xadd = self.xdbl = 0
        self.trace = [] if trace else None
        self.ops = [] if ops else None

    @property
    def mul(self):
        if self.scope == "ext":
            return self.m + self.bm
        return 3 * self.m + 2 * self.s + self.bm

    @property
    def sqr(self):
        if self.scope == "ext":
            return self.s + self.bs
        return self.bs

    @property
    def add(self):
        if self.scope == "ext":
            return self.a + self.ba
        return 2 * self.a + _ADD_IN_MUL * self.m + _ADD_IN_SQR * self.s + self.ba

    @property
    def inv(self):
        return self.i + self.bi

    @property
    def headline(self):
        """Base-field M + S, the figure used for end-to-end cost comparisons."""
        return 3 * self.m + 2 * self.s + self.bm + self.bs

    def snapshot(self):
        return {"M": self.mul, "S": self.sqr, "a": self.add, "inv": self.inv,
                "inv_M": self.inv_mul, "inv_S": self.inv_sqr,
                "xadd": self.xadd, "xdbl": self.xdbl}

    def triple(self):
        return (self.mul, self.sqr, self.add)

    def __repr__(self):
        return (f"OpCounter({self.scope}: {self.mul}M {self.sqr}S {self.add}a "
                f"{self.inv}I, xadd={self.xadd}, xdbl={self.xdbl})")


@contextmanager
def counting(scope="ext", trace=False, ops=False):
    """Count every field operation performed inside the block."""
    ctx = OpCounter(scope, trace=trace, ops=ops)
    token = CURRENT.set(ctx)
    try:
        yield ctx
    finally:
        CURRENT.reset(token)


@contextmanager
def uncounted():
    """Suspend counting, e.g. for assertions inside audited code."""
    token = CURRENT.set(None)
    try:
        yield
    finally:
        CURRENT.reset(token)


def note(kind):
    """Record a primitive call (``"xadd"``/``"xdbl"``) on the active counter."""
    c = CURRENT.get()
    if c is None:
        return
    if kind == "xadd":
        c.xadd += 1
    else:
        c.xdbl += 1
    if c.trace is not None:
        c.trace.append(kind)
