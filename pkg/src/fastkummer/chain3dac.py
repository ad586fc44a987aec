"""Uniform three-dimensional differential addition chain for P1 + [beta]P2 + [gamma]P3.

The chain walks the bits of (beta, gamma) from the top down.  Every step is
one pseudo-doubling and three pseudo-additions, and the step shape never
depends on the scalars: only which stored points feed the four operations is
selected by the bit pattern.  Selection is table-driven, one row per
(b0, b1, b2, b3) case.

Scalars are read with 1-based bit positions, bit(x, i) = (x >> (i - 1)) & 1.
With that reading the literal chain of length ell - 1 is exact for
beta, gamma in [2^(ell-1), 2^ell).  ``three_dac_mod`` lifts arbitrary residues
mod 3^k into that window one bit higher, which is what hashing uses.
"""

from dataclasses import dataclass

from ._counter import uncounted
from ._errors import ChainInvariantViolation, InvalidKernel, ScalarOutOfRange
from .kummer import KummerPoint, as_tc, invert_map, on_surface, proj_equal, xadd, xdbl

TUPLE_LABELS = ("P1", "P2", "P3", "P2+P3", "P2-P3", "P1-P2", "P1-P3", "2(P2+P3)",
                "P1+P2+P3", "P1-P2-P3")


@dataclass(frozen=True)
class KernelTuple:
    """The ten points D1..D10 feeding the chain, in TUPLE_LABELS order."""

    points: tuple

    def __post_init__(self):
        pts = tuple(KummerPoint(P) for P in self.points)
        if len(pts) != 10:
            raise InvalidKernel(f"a kernel tuple has 10 points, got {len(pts)}")
        for idx, P in enumerate(pts):
            if any(x.is_zero() for x in P):
                raise InvalidKernel(f"D{idx + 1} ({TUPLE_LABELS[idx]}) has a zero coordinate")
        object.__setattr__(self, "points", pts)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return 10


@dataclass(frozen=True)
class EncodedScalars:
    b: int
    b0: tuple
    b1: tuple
    b2: tuple
    b3: tuple


def _bit(x, i):
    return (x >> (i - 1)) & 1


def encode(beta, gamma, ell):
    """Bit vectors b0..b3 (index 0 holds step i = 1) and the final carry b."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if not (0 <= beta < 1 << ell and 0 <= gamma < 1 << ell):
        raise ScalarOutOfRange(f"scalars must lie in [0, 2^{ell})")
    b = _bit(beta, 1)
    b0, b1, b2, b3 = [], [], [], []
    for i in range(1, ell):
        x1 = _bit(beta, i) ^ _bit(beta, i + 1)
        x0 = x1 ^ _bit(gamma, i) ^ _bit(gamma, i + 1)
        b1.append(x1)
        b0.append(x0)
        b2.append(_bit(beta, i + 1) ^ _bit(gamma, i + 1))
        b3.append(b)
        b = x1 ^ ((x0 ^ 1) & b)
    return EncodedScalars(b, tuple(b0), tuple(b1), tuple(b2), tuple(b3))


_IND = {(-1, -1): 1, (1, 1): 2, (1, -1): 3, (-1, 1): 4}


def ind(I):
    """Which of the four stored differences applies, from I3 - I1 and I4 - I2."""
    key = (I[2] - I[0], I[3] - I[1])
    try:
        return _IND[key]
    except KeyError:
        raise ChainInvariantViolation(f"index state {tuple(I)} gives difference pair {key}") from None


def _update_indices(I, kind):
    I1, I2, I3, I4, I5, I6 = I
    if kind == "A":
        return (I1 + I3, I2 + I4, 2 * I3, 2 * I4, I3 + I5, I4 + I6)
    if kind == "B":
        return (I1 + I3, I2 + I4, 2 * I1, 2 * I2, I1 + I5, I2 + I6)
    if kind == "C":
        return (I1 + I3, I2 + I4, 2 * I5, 2 * I6, I3 + I5, I4 + I6)
    return (I1 + I3, I2 + I4, 2 * I5, 2 * I6, I1 + I5, I2 + I6)


# (b0, b1, b2, b3) -> (index update, output slots for ([2]a0, a0+a1, a3+a4, a6+a7), operands).
# Operands name the current points P1..P4 and differences D1..D4; a2 and a5 are the
# differences of the first two additions, the third uses the difference picked by ind().
CASES = {
    (0, 0, 0, 0): ("A", (2, 1, 3, 4), ("P2", "P1", "D3", "P3", "P2", "D2", "P2", "P4")),
    (0, 0, 0, 1): ("A", (2, 1, 3, 4), ("P2", "P1", "D3", "P3", "P2", "D1", "P2", "P4")),
    (0, 0, 1, 0): ("A", (2, 1, 3, 4), ("P2", "P1", "D4", "P3", "P2", "D2", "P2", "P4")),
    (0, 0, 1, 1): ("A", (2, 1, 3, 4), ("P2", "P1", "D4", "P3", "P2", "D1", "P2", "P4")),
    (0, 1, 0, 0): ("B", (2, 1, 3, 4), ("P1", "P2", "D3", "P3", "P1", "D2", "P1", "P4")),
    (0, 1, 0, 1): ("B", (2, 1, 3, 4), ("P1", "P2", "D3", "P3", "P1", "D1", "P1", "P4")),
    (0, 1, 1, 0): ("B", (2, 1, 3, 4), ("P1", "P2", "D4", "P3", "P1", "D2", "P1", "P4")),
    (0, 1, 1, 1): ("B", (2, 1, 3, 4), ("P1", "P2", "D4", "P3", "P1", "D1", "P1", "P4")),
    (1, 0, 0, 0): ("C", (2, 3, 1, 4), ("P3", "P2", "D2", "P1", "P2", "D3", "P3", "P4")),
    (1, 0, 0, 1): ("D", (2, 3, 1, 4), ("P3", "P1", "D1", "P1", "P2", "D3", "P3", "P4")),
    (1, 0, 1, 0): ("C", (2, 3, 1, 4), ("P3", "P2", "D2", "P1", "P2", "D4", "P3", "P4")),
    (1, 0, 1, 1): ("D", (2, 3, 1, 4), ("P3", "P1", "D1", "P1", "P2", "D4", "P3", "P4")),
    (1, 1, 0, 0): ("D", (2, 3, 1, 4), ("P3", "P1", "D2", "P1", "P2", "D3", "P3", "P4")),
    (1, 1, 0, 1): ("C", (2, 3, 1, 4), ("P3", "P2", "D1", "P1", "P2", "D3", "P3", "P4")),
    (1, 1, 1, 0): ("D", (2, 3, 1, 4), ("P3", "P1", "D2", "P1", "P2", "D4", "P3", "P4")),
    (1, 1, 1, 1): ("C", (2, 3, 1, 4), ("P3", "P2", "D1", "P1", "P2", "D4", "P3", "P4")),
}


def dbl_thrice_add(P, Q, PmQ, R, S, RmS, T, U, TmU, O, inv_diffs=(None, None, None)):
    """([2]P, P+Q, R+S, T+U): one pseudo-doubling and three pseudo-additions.

    ``inv_diffs`` optionally carries invert_map of the three differences.
    """
    TC = as_tc(O)
    return (xdbl(P, TC),
            xadd(P, Q, PmQ, TC, inv_diffs[0]),
            xadd(R, S, RmS, TC, inv_diffs[1]),
            xadd(T, U, TmU, TC, inv_diffs[2]))


def _prepare(D, O, reuse_inverses):
    if not isinstance(D, KernelTuple):
        D = KernelTuple(tuple(D))
    TC = as_tc(O)
    if reuse_inverses:
        # one-off 10 invert_maps (60M), then every pseudo-addition saves 6M
        inv = [invert_map(P) for P in D]
    else:
        inv = [None] * 10
    return D, TC, inv


def three_dac(D, beta, gamma, ell, O, reuse_inverses=False):
    """P1 + [beta]P2 + [gamma]P3 for beta, gamma in [2^(ell-1), 2^ell).

    Cost: 3*ell - 2 pseudo-additions and ell - 1 pseudo-doublings.  By default
    each pseudo-addition inverts its difference (18M + 8S + 24a); with
    ``reuse_inverses`` the ten differences are inverted once up front and each
    pseudo-addition is 12M + 8S + 24a.
    """
    lo, hi = 1 << (ell - 1), 1 << ell
    if not (lo <= beta < hi and lo <= gamma < hi):
        raise ScalarOutOfRange(f"three_dac needs beta, gamma in [2^{ell - 1}, 2^{ell}); "
                               "use three_dac_mod for arbitrary residues")
    D, TC, inv = _prepare(D, O, reuse_inverses)
    enc = encode(beta, gamma, ell)

    # points: P1..P4; differences D1..D4 and their inverses; the Delta set for the third addition
    P = [D[3], D[7], D[3], D[8]]
    Dif = [D[1], D[2], D[3], D[4]]
    iDif = [inv[1], inv[2], inv[3], inv[4]]
    Delta = [D[0], D[9], D[5], D[6]]
    iDelta = [inv[0], inv[9], inv[5], inv[6]]
    I = [1, 1, 2, 2, 1, 1]
    if enc.b:
        P[2] = xadd(P[2], Dif[1], Dif[0], TC, iDif[0])
        I[5] += 1
    else:
        P[2] = xadd(P[2], Dif[0], Dif[1], TC, iDif[1])
        I[4] += 1
    I = tuple(I)

    for step in range(ell - 2, -1, -1):
        key = (enc.b0[step], enc.b1[step], enc.b2[step], enc.b3[step])
        kind, slots, names = CASES[key]
        I = _update_indices(I, kind)
        j = ind(I) - 1
        a = []
        ia = []
        for nm in names:
            idx = int(nm[1]) - 1
            if nm[0] == "P":
                a.append(P[idx])
                ia.append(None)
            else:
                a.append(Dif[idx])
                ia.append(iDif[idx])
        r = dbl_thrice_add(a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], Delta[j], TC,
                           (ia[2], ia[5], iDelta[j]))
        newP = list(P)
        for slot, val in zip(slots, r):
            newP[slot - 1] = val
        P = newP
    return P[3]


def three_dac_mod(D, beta, gamma, k, O, reuse_inverses=False):
    """P1 + [beta]P2 + [gamma]P3 for arbitrary beta, gamma, with P2, P3 of order dividing 3^k.

    The scalars are reduced mod 3^k and lifted by multiples of 3^k into
    [2^ell, 2^(ell+1)), ell = bitlength(3^k), then run through a chain of
    length ell + 1.  The operation trace depends only on k.
    """
    n = 3 ** k
    ell = n.bit_length()
    lo = 1 << ell
    b = beta % n
    g = gamma % n
    b += ((lo - b + n - 1) // n) * n
    g += ((lo - g + n - 1) // n) * n
    if b >= 2 * lo or g >= 2 * lo:
        raise ScalarOutOfRange("lift out of range")  # cannot happen: 3^k < 2^ell
    return three_dac(D, b, g, ell + 1, O, reuse_inverses)


def chain_length(k):
    return (3 ** k).bit_length() + 1


def validate_kernel_tuple(D, O):
    """(ok, message): the relations among D1..D10 that can be checked on the Kummer."""
    try:
        if not isinstance(D, KernelTuple):
            D = KernelTuple(tuple(D))
    except InvalidKernel as e:
        return False, str(e)
    with uncounted():
        TC = as_tc(O)
        for idx, P in enumerate(D):
            if not on_surface(P, TC.thetas):
                return False, f"D{idx + 1} ({TUPLE_LABELS[idx]}) is not on the surface"
        d = D.points
        y = xadd(d[5], d[2], d[9], TC)      # P1 - P2 + P3
        z = xadd(d[6], d[1], d[9], TC)      # P1 + P2 - P3
        checks = (
            ("xadd(D2, D3, D5) = D4", lambda: xadd(d[1], d[2], d[4], TC), lambda: d[3]),
            ("xadd(D2, D3, D4) = D5", lambda: xadd(d[1], d[2], d[3], TC), lambda: d[4]),
            ("xdbl(D4) = D8", lambda: xdbl(d[3], TC), lambda: d[7]),
            ("xadd(D1, D4, D10) = D9", lambda: xadd(d[0], d[3], d[9], TC), lambda: d[8]),
            ("xadd(D9, D10, D8) = xdbl(D1)", lambda: xadd(d[8], d[9], d[7], TC), lambda: xdbl(d[0], TC)),
            ("xadd(D6, D7, D5) = xadd(D1, D10, D4)", lambda: xadd(d[5], d[6], d[4], TC),
             lambda: xadd(d[0], d[9], d[3], TC)),
            ("D6 and D7 against D10", lambda: xadd(y, z, xdbl(d[4], TC), TC), lambda: xdbl(d[0], TC)),
        )
        for name, got, want in checks:
            if not proj_equal(got(), want()):
                return False, f"relation {name} fails"
    return True, "ok"
