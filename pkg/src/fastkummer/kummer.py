"""The fast Kummer surface: theta constants, the quartic, nodes, and pseudo-group law.

Points and theta constants are projective 4-tuples of field elements.  The
four coordinate maps below are the only places that touch coordinates
directly; everything else composes them so that operation counts can be read
off the composition:

    hadamard       8a      (x1+x2+x3+x4, x1+x2-x3-x4, x1-x2+x3-x4, x1-x2-x3+x4)
    square_map     4S
    scale_map      4M
    invert_map     6M      (x2x3x4, x1x3x4, x1x2x4, x1x2x3)
"""

from dataclasses import dataclass
from typing import NamedTuple

from ._counter import note, uncounted
from ._errors import DegenerateSurface, NodeProximity


class KummerPoint(tuple):
    """Projective point (X1 : X2 : X3 : X4)."""

    __slots__ = ()

    def __new__(cls, coords):
        t = tuple.__new__(cls, coords)
        if len(t) != 4:
            raise ValueError("a Kummer point has four coordinates")
        return t

    @property
    def field(self):
        return self[0].field

    def is_zero(self):
        return all(x.is_zero() for x in self)

    def hex(self):
        f = self[0].field
        return "".join(f.to_hex(x) for x in self)

    @classmethod
    def from_hex(cls, field, s):
        n = 4 * field.nbytes
        if len(s) != 4 * n:
            raise ValueError(f"expected {4 * n} hex digits for a point, got {len(s)}")
        return cls(field.from_hex(s[j * n:(j + 1) * n]) for j in range(4))

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(map(repr, self))})"


class ThetaConstants(KummerPoint):
    """Fundamental theta constants (a : b : c : d); also the identity point of its surface."""

    __slots__ = ()

    a = property(lambda self: self[0])
    b = property(lambda self: self[1])
    c = property(lambda self: self[2])
    d = property(lambda self: self[3])


class SurfaceCoefficients(NamedTuple):
    E: object
    F: object
    G: object
    H: object


# ---------------------------------------------------------------- coordinate maps

def hadamard(P):
    x1, x2, x3, x4 = P
    t1 = x1 + x2
    t2 = x3 + x4
    t3 = x1 - x2
    t4 = x3 - x4
    return KummerPoint((t1 + t2, t1 - t2, t3 + t4, t3 - t4))


def square_map(P):
    return KummerPoint((P[0].sqr(), P[1].sqr(), P[2].sqr(), P[3].sqr()))


def scale_map(P, Q):
    return KummerPoint((P[0] * Q[0], P[1] * Q[1], P[2] * Q[2], P[3] * Q[3]))


def invert_map(P):
    x1, x2, x3, x4 = P
    if x1.is_zero() or x2.is_zero() or x3.is_zero() or x4.is_zero():
        raise NodeProximity("invert_map needs four nonzero coordinates")
    t12 = x1 * x2
    t34 = x3 * x4
    return KummerPoint((x2 * t34, x1 * t34, t12 * x4, t12 * x3))


def _free_neg(x):
    # sign flips of node translations are bookkeeping, not arithmetic
    return type(x)(x.field, -x.re, -x.im)


# ---------------------------------------------------------------- theta constants

@dataclass(frozen=True)
class TriplingConstants:
    """Constants reused by every pseudo-doubling, tripling and isogeny step on one surface."""

    thetas: ThetaConstants
    inv_thetas: KummerPoint
    sq_thetas: KummerPoint
    sq_duals: KummerPoint
    inv_sq_duals: KummerPoint


def tripling_constants(O):
    """Projective inverses via invert_map, so no field inversion is spent: 12M + 4S + 8a."""
    O = ThetaConstants(O)
    if any(x.is_zero() for x in O):
        raise DegenerateSurface("a theta constant is zero")
    sq = square_map(O)
    duals = hadamard(sq)
    if any(x.is_zero() for x in duals):
        raise DegenerateSurface("a squared dual theta constant is zero")
    return TriplingConstants(O, invert_map(O), sq, duals, invert_map(duals))


def as_tc(O):
    return O if isinstance(O, TriplingConstants) else tripling_constants(O)


def _dual_denominators(O):
    a2, b2, c2, d2 = square_map(O)
    return (a2 * d2 - b2 * c2, a2 * c2 - b2 * d2, a2 * b2 - c2 * d2)


def surface_from_thetas(O):
    """Coefficients E, F, G, H of the quartic through the identity (a:b:c:d)."""
    a, b, c, d = O
    a2, b2, c2, d2 = square_map(O)
    A2, B2, C2, D2 = hadamard((a2, b2, c2, d2))
    den1 = a2 * d2 - b2 * c2
    den2 = a2 * c2 - b2 * d2
    den3 = a2 * b2 - c2 * d2
    for name, v in (("a^2d^2 - b^2c^2", den1), ("a^2c^2 - b^2d^2", den2), ("a^2b^2 - c^2d^2", den3)):
        if v.is_zero():
            raise DegenerateSurface(f"{name} vanishes")
    E = -(a * b * c * d * A2 * B2 * C2 * D2) / (den1 * den2 * den3)
    a4, b4, c4, d4 = a2.sqr(), b2.sqr(), c2.sqr(), d2.sqr()
    F = (a4 - b4 - c4 + d4) / den1
    G = (a4 - b4 + c4 - d4) / den2
    H = (a4 + b4 - c4 - d4) / den3
    return SurfaceCoefficients(E, F, G, H)


def validate_thetas(O):
    """Raise DegenerateSurface unless (a:b:c:d) defines a usable fast Kummer."""
    with uncounted():
        if all(x.is_zero() for x in O):
            raise DegenerateSurface("all theta constants are zero")
        surface_from_thetas(O)
        tripling_constants(O)


def on_surface(P, K):
    """Whether P satisfies the quartic; K may be SurfaceCoefficients or theta constants."""
    with uncounted():
        if not isinstance(K, SurfaceCoefficients):
            K = surface_from_thetas(K)
        E, F, G, H = K
        x1, x2, x3, x4 = P
        s1, s2, s3, s4 = x1.sqr(), x2.sqr(), x3.sqr(), x4.sqr()
        v = (s1.sqr() + s2.sqr() + s3.sqr() + s4.sqr()
             - (E + E) * x1 * x2 * x3 * x4
             - F * (s1 * s4 + s2 * s3)
             - G * (s1 * s3 + s2 * s4)
             - H * (s1 * s2 + s3 * s4))
        return v.is_zero()


# ---------------------------------------------------------------- nodes

def _u1(X):
    return (X[0], X[1], _free_neg(X[2]), _free_neg(X[3]))


def _u2(X):
    return (X[0], _free_neg(X[1]), X[2], _free_neg(X[3]))


def _v1(X):
    return (X[1], X[0], X[3], X[2])


def _v2(X):
    return (X[3], X[2], X[1], X[0])


# sigma_i as a word in U1, U2, V1, V2; the product M1 M2 ... acts right to left
SIGMA_WORDS = (
    (), ("U1",), ("U2",), ("U1", "U2"),
    ("V1",), ("V1", "U1"), ("V1", "U2"), ("V1", "U1", "U2"),
    ("V1", "V2"), ("V1", "V2", "U1"), ("V1", "V2", "U2"), ("V1", "V2", "U1", "U2"),
    ("V2",), ("V2", "U1"), ("V2", "U2"), ("V2", "U1", "U2"),
)
_GEN = {"U1": _u1, "U2": _u2, "V1": _v1, "V2": _v2}


def node_translate(P, i):
    """sigma_i(P): translation by the 2-torsion point T_i, a signed coordinate permutation."""
    if not 0 <= i < 16:
        raise ValueError(f"node index {i} outside 0..15")
    X = tuple(P)
    for g in reversed(SIGMA_WORDS[i]):
        X = _GEN[g](X)
    return KummerPoint(X)


def nodes(O):
    """T_0, ..., T_15 with T_i = sigma_i(O)."""
    return [node_translate(O, i) for i in range(16)]


def proj_equal(P, Q):
    """Projective equality by cross products; does not touch the active counter."""
    with uncounted():
        pz = all(x.is_zero() for x in P)
        qz = all(x.is_zero() for x in Q)
        if pz or qz:
            return pz and qz
        for i in range(4):
            for j in range(i + 1, 4):
                if P[i] * Q[j] != P[j] * Q[i]:
                    return False
        return True


def normalize(P):
    """Scale so the first nonzero coordinate is 1 (uncounted; for display and storage)."""
    with uncounted():
        for x in P:
            if not x.is_zero():
                s = x.inv()
                cls = type(P) if isinstance(P, KummerPoint) else KummerPoint
                return cls(y * s for y in P)
    raise ValueError("cannot normalize the zero tuple")


# ---------------------------------------------------------------- pseudo-group law

def xdbl(P, TC):
    """[2]P = C_{1/O} H C_{1/A^2} S H S (P): 8M + 8S + 16a."""
    TC = as_tc(TC)
    note("xdbl")
    Y = square_map(hadamard(square_map(P)))
    Y = hadamard(scale_map(Y, TC.inv_sq_duals))
    return scale_map(Y, TC.inv_thetas)


def xadd(P, Q, D, TC, inv_diff=None):
    """P + Q from the difference D: C_{I(D)} H (C_{1/A^2}(H S P) * H S Q).

    18M + 8S + 24a, or 12M + 8S + 24a when ``inv_diff = invert_map(D)`` is supplied.
    """
    TC = as_tc(TC)
    if inv_diff is None:
        inv_diff = invert_map(D)
    note("xadd")
    U = scale_map(hadamard(square_map(P)), TC.inv_sq_duals)
    V = hadamard(square_map(Q))
    return scale_map(hadamard(scale_map(U, V)), inv_diff)


def ladder(n, P, TC):
    """[n]P by the Montgomery ladder; [0]P is the identity."""
    TC = as_tc(TC)
    if n < 0:
        n = -n
    if n == 0:
        return KummerPoint(TC.thetas)
    iP = invert_map(P)
    R0, R1 = KummerPoint(P), xdbl(P, TC)
    for bit in bin(n)[3:]:
        if bit == "1":
            R0, R1 = xadd(R1, R0, P, TC, iP), xdbl(R1, TC)
        else:
            R0, R1 = xdbl(R0, TC), xadd(R1, R0, P, TC, iP)
    return R0
