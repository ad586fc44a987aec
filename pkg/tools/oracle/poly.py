"""Dense univariate polynomials over Fp2, coefficient lists from low to high degree."""

from .fp2 import Fp2


def trim(a):
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def deg(a):
    return len(a) - 1


def add(a, b):
    if not a:
        return trim(b)
    if not b:
        return trim(a)
    n = max(len(a), len(b))
    z = a[0] * 0
    return trim([(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)])


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return []
    r = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            r[i + j] = r[i + j] + x * y
    return trim(r)


def scale(a, c):
    return trim([x * c for x in a])


def divmod_(a, b):
    a = trim(a)
    b = trim(b)
    if not b:
        raise ZeroDivisionError
    if len(a) < len(b):
        return [], a
    inv = b[-1].inv()
    q = [b[0] * 0] * (len(a) - len(b) + 1)
    r = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1] * inv
        q[i] = c
        if not c.is_zero():
            for j, y in enumerate(b):
                r[i + j] = r[i + j] - c * y
    return trim(q), trim(r[: len(b) - 1])


def mod(a, b):
    return divmod_(a, b)[1]


def monic(a):
    a = trim(a)
    return scale(a, a[-1].inv())


def xgcd(a, b):
    """(g, s, t) with s*a + t*b = g monic (or g = [] when both are zero)."""
    p = (a or b)[0].p
    one = [Fp2(p, 1)]
    r0, r1 = trim(a), trim(b)
    s0, s1 = one, []
    t0, t1 = [], one
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    c = r0[-1].inv()
    return scale(r0, c), scale(s0, c), scale(t0, c)


def evaluate(a, x):
    r = x * 0
    for c in reversed(a):
        r = r * x + c
    return r


def resultant_monic(u, g):
    """prod g(r) over the roots r of the monic polynomial u (deg u <= 2)."""
    p = u[0].p
    g = mod(g, u)
    d = deg(u)
    if d == 0:
        return Fp2(p, 1)
    if not g:
        return Fp2(p, 0)
    if d == 1:
        return evaluate(g, -u[0])
    u0, u1 = u[0], u[1]
    g0 = g[0]
    g1 = g[1] if len(g) > 1 else Fp2(p, 0)
    return g1 * g1 * u0 - g1 * g0 * u1 + g0 * g0
