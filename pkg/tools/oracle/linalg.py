"""Null spaces over Fp2, and isogeny coefficients recovered by pure linear algebra.

``kernel_coefficients`` never uses the closed-form coefficient formulas: it
solves for the unique cubic map of the required shape that is invariant under
translation by the kernel generators, using Jacobian points pushed to the
Kummer.
"""

from .fp2 import Fp2


def nullspace(rows, n, p):
    zero, one = Fp2(p, 0), Fp2(p, 1)
    rows = [r[:] for r in rows]
    piv = []
    r0 = 0
    for c in range(n):
        pr = next((i for i in range(r0, len(rows)) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[r0], rows[pr] = rows[pr], rows[r0]
        iv = rows[r0][c].inv()
        rows[r0] = [x * iv for x in rows[r0]]
        for i in range(len(rows)):
            if i != r0 and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r0])]
        piv.append(c)
        r0 += 1
    out = []
    for fc in (c for c in range(n) if c not in piv):
        v = [zero] * n
        v[fc] = one
        for i, pc in enumerate(piv):
            v[pc] = -rows[i][fc]
        out.append(v)
    return out


def monomials(X):
    """Rows of the 4x5 matrix with phi(X)_i = sum_j M[i][j] c_j."""
    x1, x2, x3, x4 = X
    return [[x1 * x1 * x1, x1 * x2 * x2, x1 * x3 * x3, x1 * x4 * x4, x2 * x3 * x4],
            [x2 * x2 * x2, x2 * x1 * x1, x2 * x4 * x4, x2 * x3 * x3, x1 * x3 * x4],
            [x3 * x3 * x3, x3 * x4 * x4, x3 * x1 * x1, x3 * x2 * x2, x1 * x2 * x4],
            [x4 * x4 * x4, x4 * x3 * x3, x4 * x2 * x2, x4 * x1 * x1, x1 * x2 * x3]]


def kernel_coefficients(J, pi, Rj, Sj, rng, npts=6):
    """(c1:...:c5) normalised to c5 = 1, from phi(pi(D + T)) ~ phi(pi(D)) for T in {R, S}.

    Unknowns are the 15 products c_a c_b; the solution space must be one-dimensional.
    """
    p = J.p
    idx = [(a, b) for a in range(5) for b in range(a, 5)]
    eqs = []
    for _ in range(npts):
        D = J.random_point(rng)
        X = monomials(pi(D))
        for T in (Rj, Sj):
            Xp = monomials(pi(J.add(D, T)))
            for i in range(4):
                for j in range(i + 1, 4):
                    row = []
                    for a, b in idx:
                        q = Xp[i][a] * X[j][b] - Xp[j][a] * X[i][b]
                        if a != b:
                            q = q + Xp[i][b] * X[j][a] - Xp[j][b] * X[i][a]
                        row.append(q)
                    eqs.append(row)
    ns = nullspace(eqs, 15, p)
    if len(ns) != 1:
        raise ValueError(f"coefficient system has nullity {len(ns)}")
    z = dict(zip(idx, ns[0]))
    c = [z[(a, 4)] for a in range(5)]
    return [x / c[4] for x in c]


def translation_matrix(J, kappa, T, rng, npts=12):
    """4x4 matrix M with kappa(D + T) ~ M kappa(D), fitted from generic points."""
    p = J.p
    zero = Fp2(p, 0)
    rows = []
    for _ in range(npts):
        D = J.random_point(rng)
        v = kappa(D)
        w = kappa(J.add(D, T))
        for j in range(4):
            for k in range(j + 1, 4):
                r = [zero] * 16
                for c in range(4):
                    r[4 * j + c] = r[4 * j + c] + v[c] * w[k]
                    r[4 * k + c] = r[4 * k + c] - v[c] * w[j]
                rows.append(r)
    ns = nullspace(rows, 16, p)
    if len(ns) != 1:
        raise ValueError(f"translation fit has nullity {len(ns)}")
    M = ns[0]
    return [M[4 * j:4 * j + 4] for j in range(4)]


def apply(M, v):
    return tuple(sum((M[i][j] * v[j] for j in range(4)), Fp2(v[0].p, 0)) for i in range(4))
