"""(2,2)-isogenies on fast Kummers, used by the generator to walk away from y^2 = x^6 + 1."""

from .fp2 import Fp2
from .kummer_ref import H, S, I, sq_duals

# entries: 0, 1, -1, 'i', '-i'
ALPHA = {
    (1, 2): ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    (1, 4): ((1, 1, 0, 0), (1, -1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1)),
    (1, 6): ((1, "i", 0, 0), (1, "-i", 0, 0), (0, 0, 1, "i"), (0, 0, 1, "-i")),
    (2, 8): ((1, 0, 1, 0), (1, 0, -1, 0), (0, 1, 0, 1), (0, 1, 0, -1)),
    (2, 9): ((1, 0, "i", 0), (1, 0, "-i", 0), (0, 1, 0, "i"), (0, 1, 0, "-i")),
    (3, 12): ((1, 0, 0, 1), (1, 0, 0, -1), (0, 1, 1, 0), (0, 1, -1, 0)),
    (3, 14): ((1, 0, 0, "i"), (1, 0, 0, "-i"), (0, 1, "i", 0), (0, 1, "-i", 0)),
    (4, 8): ((1, 1, 1, 1), (1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1)),
    (4, 9): ((1, 1, "i", "i"), (1, 1, "-i", "-i"), (1, -1, "i", "-i"), (1, -1, "-i", "i")),
    (5, 10): ((-1, 1, 1, 1), (1, -1, 1, 1), (1, 1, -1, 1), (1, 1, 1, -1)),
    (5, 11): ((1, -1, "-i", "-i"), (1, -1, "i", "i"), (1, 1, "-i", "i"), (1, 1, "i", "-i")),
    (6, 8): ((1, "i", 1, "i"), (1, "i", -1, "-i"), (1, "-i", 1, "-i"), (1, "-i", -1, "i")),
    (6, 9): ((1, "-i", "-i", -1), (1, "-i", "i", 1), (1, "i", "-i", 1), (1, "i", "i", -1)),
    (7, 10): ((1, "-i", -1, "-i"), (1, "-i", 1, "i"), (1, "i", -1, "i"), (1, "i", 1, "-i")),
    (7, 11): ((1, "i", "i", 1), (1, "i", "-i", -1), (1, "-i", "i", -1), (1, "-i", "-i", 1)),
}


def entry(e, p):
    if e == "i":
        return Fp2(p, 0, 1)
    if e == "-i":
        return Fp2(p, 0, p - 1)
    return Fp2(p, e % p)


def alpha(ij, X):
    p = X[0].p
    M = ALPHA[ij]
    return tuple(sum((entry(M[r][c], p) * X[c] for c in range(4)), Fp2(p, 0)) for r in range(4))


def psi(ij, X):
    return H(S(alpha(ij, X)))


def image_thetas(ij, O):
    """Image thetas with each root taken as returned by Fp2.sqrt; None if a root is missing."""
    roots = [x.sqrt() for x in psi(ij, O)]
    if any(r is None for r in roots):
        return None
    return tuple(roots)


def phi(ij, X, O):
    """C_U(psi(X)) with U_i = sqrt(prod_{j != i} psi(O)_j)."""
    U = [u.sqrt() for u in I(psi(ij, O))]
    if any(u is None for u in U):
        return None
    return tuple(u * y for u, y in zip(U, psi(ij, X)))
