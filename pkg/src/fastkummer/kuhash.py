"""KuHash: a message picks a (3^k, 3^k)-kernel, the digest is the codomain's theta constants.

A message is exactly 3 * ell bits, ell = bitlength(3^k).  It splits into three
big-endian chunks (alpha, beta, gamma), each reduced mod 3^k, and the kernel is
generated by

    R = Q1 + [alpha]Q3 + [beta]Q4,    S = Q2 + [beta]Q3 + [gamma]Q4.
"""

from dataclasses import dataclass

from ._counter import uncounted
from ._errors import InvalidKernel, MessageLengthError
from .chain3dac import three_dac_mod
from .isogeny33 import isogeny_33_chain
from .kummer import KummerPoint, ThetaConstants, on_surface


@dataclass(frozen=True)
class HashInput:
    alpha: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class HashOutput:
    thetas: ThetaConstants
    normalized: tuple = None

    def hex(self):
        f = self.thetas[0].field
        xs = self.normalized if self.normalized is not None else self.thetas
        return "".join(f.to_hex(x) for x in xs)

    def as_dict(self):
        f = self.thetas[0].field
        return {
            "thetas": [f.to_hex(x) for x in self.thetas],
            "normalized": None if self.normalized is None else [f.to_hex(x) for x in self.normalized],
            "digest": self.hex(),
        }


def message_bits(k):
    return 3 * (3 ** k).bit_length()


def parse_message(msg, k):
    """msg is a '0'/'1' string or (value, nbits) pair of exactly 3 * bitlength(3^k) bits."""
    n = 3 ** k
    ell = n.bit_length()
    if isinstance(msg, str):
        if any(c not in "01" for c in msg):
            raise MessageLengthError("a bit string holds only 0 and 1")
        nbits, value = len(msg), int(msg, 2) if msg else 0
    else:
        value, nbits = msg
    if nbits != 3 * ell:
        raise MessageLengthError(f"message must be exactly {3 * ell} bits for k = {k}, got {nbits}")
    mask = (1 << ell) - 1
    chunks = [(value >> (ell * (2 - j))) & mask for j in range(3)]
    return HashInput(*(c % n for c in chunks))


def message_from_hex(s, k):
    """Hex of ceil(3 ell / 4) digits; the leading padding bits must be zero."""
    nbits = message_bits(k)
    ndig = -(-nbits // 4)
    s = s.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if len(s) != ndig:
        raise MessageLengthError(f"message must be {ndig} hex digits ({nbits} bits) for k = {k}, "
                                 f"got {len(s)}")
    try:
        value = int(s, 16)
    except ValueError:
        raise MessageLengthError("message is not hexadecimal") from None
    if value >> nbits:
        raise MessageLengthError(f"the top {4 * ndig - nbits} padding bits must be zero")
    return (value, nbits)


def kernel_generators(inp, ps, reuse_inverses=False):
    R = three_dac_mod(ps.D_R, inp.alpha, inp.beta, ps.k, ps.tc, reuse_inverses)
    S = three_dac_mod(ps.D_S, inp.beta, inp.gamma, ps.k, ps.tc, reuse_inverses)
    return R, S


def kuhash(msg, ps, normalize=False, paranoid=False, reuse_inverses=False):
    """Digest of ``msg`` (bit string, (value, nbits), or HashInput) under parameter set ``ps``.

    The sequence of field operations depends only on ps.  ``reuse_inverses``
    inverts the kernel-tuple differences once per chain instead of once per
    pseudo-addition; the digest is the same.
    """
    inp = msg if isinstance(msg, HashInput) else parse_message(msg, ps.k)
    R, S = kernel_generators(inp, ps, reuse_inverses)
    try:
        O, _ = isogeny_33_chain(ps.k, ps.tc.thetas, R, S, ps.strategy, paranoid=paranoid)
    except InvalidKernel as e:
        raise InvalidKernel(f"kernel from the parameter set is invalid ({e}); parameters corrupted?") \
            from None
    if paranoid:
        with uncounted():
            if not on_surface(KummerPoint(O), O):
                raise InvalidKernel("output thetas do not lie on their own surface")
    out = HashOutput(ThetaConstants(O))
    return normalize_output(out) if normalize else out


def normalize_output(h):
    """(a/d, b/d, c/d) for one inversion and 3M; unchanged if d = 0 or already normalized."""
    if h.normalized is not None:
        return h
    a, b, c, d = h.thetas
    if d.is_zero():
        return h
    t = d.inv()
    return HashOutput(h.thetas, (a * t, b * t, c * t))
