"""Reference fast-Kummer arithmetic written directly from the defining formulas.

Deliberately naive: no shared subexpressions, no counters, Fp2 from this package only.
"""

from .fp2 import Fp2
from . import poly as Pl


def H(X):
    x1, x2, x3, x4 = X
    return (x1 + x2 + x3 + x4, x1 + x2 - x3 - x4, x1 - x2 + x3 - x4, x1 - x2 - x3 + x4)


def S(X):
    return tuple(x * x for x in X)


def C(Y, X):
    return tuple(y * x for y, x in zip(Y, X))


def I(X):
    x1, x2, x3, x4 = X
    return (x2 * x3 * x4, x1 * x3 * x4, x1 * x2 * x4, x1 * x2 * x3)


def proj_eq(X, Y):
    return all(X[i] * Y[j] == X[j] * Y[i] for i in range(4) for j in range(4)) and any(
        not x.is_zero() for x in X) == any(not y.is_zero() for y in Y)


def sq_duals(O):
    return H(S(O))


def surface(O):
    a, b, c, d = O
    a2, b2, c2, d2 = S(O)
    A2, B2, C2, D2 = sq_duals(O)
    den1 = a2 * d2 - b2 * c2
    den2 = a2 * c2 - b2 * d2
    den3 = a2 * b2 - c2 * d2
    E = -(a * b * c * d * A2 * B2 * C2 * D2) / (den1 * den2 * den3)
    F = (a2 * a2 - b2 * b2 - c2 * c2 + d2 * d2) / den1
    G = (a2 * a2 - b2 * b2 + c2 * c2 - d2 * d2) / den2
    Hh = (a2 * a2 + b2 * b2 - c2 * c2 - d2 * d2) / den3
    return E, F, G, Hh


def on_surface(X, O):
    E, F, G, Hh = surface(O)
    x1, x2, x3, x4 = X
    v = (x1**4 + x2**4 + x3**4 + x4**4 - 2 * E * x1 * x2 * x3 * x4
         - F * (x1 * x1 * x4 * x4 + x2 * x2 * x3 * x3)
         - G * (x1 * x1 * x3 * x3 + x2 * x2 * x4 * x4)
         - Hh * (x1 * x1 * x2 * x2 + x3 * x3 * x4 * x4))
    return v.is_zero()


def xdbl(X, O):
    A2 = sq_duals(O)
    Y = H(S(X))
    Y = S(Y)
    Y = tuple(y / A for y, A in zip(Y, A2))
    Y = H(Y)
    return tuple(y / o for y, o in zip(Y, O))


def xadd(X, Y, D, O):
    A2 = sq_duals(O)
    U = H(S(X))
    V = H(S(Y))
    W = tuple(u * v / A for u, v, A in zip(U, V, A2))
    W = H(W)
    return tuple(w / t for w, t in zip(W, D))


def ladder(n, X, O):
    """[n]X by the Montgomery ladder, n >= 1."""
    R0, R1 = X, xdbl(X, O)
    for bit in bin(n)[3:]:
        if bit == "1":
            R0, R1 = xadd(R1, R0, X, O), xdbl(R1, O)
        else:
            R0, R1 = xdbl(R0, O), xadd(R1, R0, X, O)
    return R0


SIGMA = {}


def _sigma_tables():
    U1 = lambda X: (X[0], X[1], -X[2], -X[3])
    U2 = lambda X: (X[0], -X[1], X[2], -X[3])
    V1 = lambda X: (X[1], X[0], X[3], X[2])
    V2 = lambda X: (X[3], X[2], X[1], X[0])
    Id = lambda X: X
    comp = lambda *fs: (lambda X: _apply(fs, X))
    table = [
        (Id,), (U1,), (U2,), (U1, U2),
        (V1,), (V1, U1), (V1, U2), (V1, U1, U2),
        (V1, V2), (V1, V2, U1), (V1, V2, U2), (V1, V2, U1, U2),
        (V2,), (V2, U1), (V2, U2), (V2, U1, U2),
    ]
    for i, fs in enumerate(table):
        SIGMA[i] = comp(*fs)


def _apply(fs, X):
    # matrix product M1 M2 ... Mk acts as M1(M2(...(Mk X)))
    for f in reversed(fs):
        X = f(X)
    return X


_sigma_tables()


def sigma(i, X):
    return SIGMA[i](X)


# ---------------------------------------------------------------- thetas / Rosenhain

def thetas_from_rosenhain(lam, mu, nu, xsign=0):
    """(a^2 : b^2 : c^2 : d^2) from Rosenhain invariants; xsign picks the root of x^2 = lam*nu/mu."""
    x = (lam * nu / mu).sqrt()
    if x is None:
        return None
    if xsign:
        x = -x
    y = lam / x
    t = nu / x
    s2 = (t - y) * (y * t - 1) / ((t - x) * (x * t - 1))
    s = s2.sqrt()
    if s is None:
        return None
    one = Fp2(lam.p, 1)
    return (x * s, s, y, one)


def kappa_generic(D, sq, ros):
    lam, mu, nu = ros
    a2, b2, c2, d2 = sq
    u, v = D
    u0, u1 = u[0], u[1]
    v0 = v[0] if v else u0 * 0
    X1 = a2 * (u0 * (mu - u0) * (lam + u1 + nu) - v0 * v0)
    X2 = b2 * (u0 * (nu * lam - u0) * (1 + u1 + mu) - v0 * v0)
    X3 = c2 * (u0 * (nu - u0) * (lam + u1 + mu) - v0 * v0)
    X4 = d2 * (u0 * (mu * lam - u0) * (1 + u1 + nu) - v0 * v0)
    return (X1, X2, X3, X4)


def pi_from_sq(K, O):
    """Squared-Kummer point to the fast Kummer with thetas O."""
    A2 = sq_duals(O)
    Y = H(K)
    Y = S(Y)
    Y = C(I(A2), Y)
    Y = H(Y)
    return C(I(O), Y)
