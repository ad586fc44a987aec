"""The fifteen (2,2)-isogenies out of a fast Kummer surface.

Each rational (2,2)-subgroup G of the 2-torsion is a group of four nodes.  A
linear map alpha moves G onto the kernel of H∘S; the isogeny is then

    phi = C_U ∘ H ∘ S ∘ alpha,    U = sqrt of I(H S alpha(O)) coordinatewise,

and the image theta constants are phi(O).  Every square root is the canonical
one, so images are determined only up to a node translation of the codomain.
"""

from ._errors import FieldExtensionRequired, InvalidKernel
from .kummer import (KummerPoint, ThetaConstants, hadamard, invert_map, node_translate, proj_equal,
                     square_map)

SUBGROUP_IDS = ((1, 2), (1, 4), (1, 6), (2, 8), (2, 9), (3, 12), (3, 14), (4, 8), (4, 9),
                (5, 10), (5, 11), (6, 8), (6, 9), (7, 10), (7, 11))

# entries are 0, 1, -1, "i", "-i"
_ALPHA = {
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


def parse_id(s):
    """'i,j' or (i, j) to a subgroup id, rejecting anything not in the table."""
    if isinstance(s, str):
        try:
            ij = tuple(int(t) for t in s.replace(" ", "").split(","))
        except ValueError:
            raise InvalidKernel(f"subgroup id {s!r} is not of the form i,j") from None
    else:
        ij = tuple(s)
    if ij not in _ALPHA:
        raise InvalidKernel(f"{ij} is not one of the 15 (2,2)-subgroup ids")
    return ij


def alpha_matrix(ij):
    """The 4x4 matrix for G_{i,j}, entries as 0, 1, -1, 'i', '-i'."""
    return _ALPHA[parse_id(ij)]


def kernel_nodes(ij, O):
    """Indices of the four nodes in G_{i,j}: T_0, T_i, T_j and T_i + T_j, located on the surface O."""
    i, j = parse_id(ij)
    target = node_translate(node_translate(O, j), i)
    k = next(m for m in range(16) if proj_equal(node_translate(O, m), target))
    return (0, i, j, k)


def _entry(e, field):
    if e == "i":
        return field.i()
    if e == "-i":
        return -field.i()
    return field(e % field.p)


def apply_alpha(ij, X):
    f = X[0].field
    M = alpha_matrix(ij)
    out = []
    for row in M:
        acc = f.zero()
        for e, x in zip(row, X):
            if e == 0:
                continue
            if e == 1:
                acc = acc + x
            elif e == -1:
                acc = acc - x
            else:
                acc = acc + _entry(e, f) * x
        out.append(acc)
    return KummerPoint(out)


def _psi(ij, X):
    return hadamard(square_map(apply_alpha(ij, X)))


def isogeny_22(O, ij):
    """(phi, image thetas) for the (2,2)-isogeny with kernel G_{i,j}.

    Raises FieldExtensionRequired when a scaling root is not in F_{p^2}.
    """
    ij = parse_id(ij)
    O = ThetaConstants(O)
    if not O[0].field.ext:
        raise FieldExtensionRequired("(2,2)-isogenies need i = sqrt(-1), work over F_{p^2}")
    Y = _psi(ij, O)
    if any(y.is_zero() for y in Y):
        raise FieldExtensionRequired(f"psi(O) has a zero coordinate for G{ij}; no scaling exists")
    U = []
    for idx, y in enumerate(invert_map(Y)):
        r = y.sqrt()
        if r is None:
            raise FieldExtensionRequired(
                f"scaling coordinate {idx + 1} for G{ij} has no square root in F_{{p^2}}")
        U.append(r)
    U = KummerPoint(U)

    def phi(X):
        Z = _psi(ij, X)
        return KummerPoint(u * z for u, z in zip(U, Z))

    return phi, ThetaConstants(phi(O))
