"""Starting surface, Rosenhain invariants, torsion bases and the Jacobian-to-Kummer map."""

from . import iso22_ref
from . import poly as P
from .fp2 import Fp2
from .jac import Jacobian
from .kummer_ref import (S, kappa_generic, on_surface, pi_from_sq, proj_eq, sq_duals, surface,
                         thetas_from_rosenhain, xdbl)
from .weil import Degenerate, symplectic_basis


def is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def rosenhain_curve(ros):
    lam, mu, nu = ros
    p = lam.p
    one = Fp2(p, 1)
    h = [one]
    for r in (Fp2(p, 0), one, lam, mu, nu):
        h = P.mul(h, [-r, one])
    return Jacobian(h)


def sextic_roots_thetas(p, rng):
    """Theta constants of y^2 = x^6 + 1 for some ordering of its Weierstrass points."""
    while True:
        g = Fp2(p, rng.randrange(p), rng.randrange(p))
        w = g ** ((p * p - 1) // 12)
        if all(w ** (12 // q) != Fp2(p, 1) for q in (2, 3)):
            break
    roots = [w ** j for j in (1, 3, 5, 7, 9, 11)]
    for _ in range(200):
        e = roots[:]
        rng.shuffle(e)
        M = lambda x: (x - e[0]) * (e[2] - e[1]) / ((x - e[1]) * (e[2] - e[0]))
        lam, mu, nu = M(e[3]), M(e[4]), M(e[5])
        for xs in (0, 1):
            sq = thetas_from_rosenhain(lam, mu, nu, xs)
            if sq is None:
                continue
            O = tuple(s.sqrt() for s in sq)
            if any(o is None or o.is_zero() for o in O):
                continue
            if any(x.is_zero() for x in sq_duals(O)):
                continue
            return O
    raise RuntimeError("no usable ordering of the sextic's roots")


def two_two_walk(O, steps, rng):
    ids = list(iso22_ref.ALPHA)
    done = 0
    while done < steps:
        ij = rng.choice(ids)
        O2 = iso22_ref.image_thetas(ij, O)
        if O2 is None or any(x.is_zero() for x in O2):
            continue
        if any(x.is_zero() for x in sq_duals(O2)):
            continue
        O = O2
        done += 1
    return O


def ros_from_thetas(O, sign):
    a2, b2, c2, d2 = S(O)
    roots = [s.sqrt() for s in sq_duals(O)]
    if any(r is None for r in roots):
        return None
    A, B, C, D = roots
    A = A * sign
    ef = (A * B + C * D) / (A * B - C * D)
    return (a2 * c2 / (b2 * d2), c2 * ef / d2, a2 * ef / b2)


def pi_map(J, ros, O):
    sq = S(O)

    def pi(D):
        return pi_from_sq(kappa_generic(D, sq, ros), O)

    return pi


def surface_checks(J, ros, O, rng, trials=4):
    p = J.p
    pi = pi_map(J, ros, O)
    for _ in range(trials):
        D = J.random_point(rng)
        if not J.is_zero(J.mul(p + 1, D)):
            return False
        X = pi(D)
        if not on_surface(X, O):
            return False
        if not proj_eq(xdbl(X, O), pi(J.add(D, D))):
            return False
    return True


def _usable(O, p, rng):
    try:
        surface(O)
    except ZeroDivisionError:
        return None
    for sign in (1, -1):
        ros = ros_from_thetas(O, Fp2(p, sign))
        if ros is None or any(r.is_zero() for r in ros):
            continue
        J = rosenhain_curve(ros)
        if surface_checks(J, ros, O, rng):
            return ros, J
    return None


def starting_surface(p, rng, walk=20, patience=40):
    """Walk away from y^2 = x^6 + 1 until the thetas admit a consistent Rosenhain form.

    Some primes keep the walk on split (product) surfaces for a long time; after
    ``patience`` further steps the unwalked sextic surface is used instead.
    """
    O0 = sextic_roots_thetas(p, rng)
    O = two_two_walk(O0, walk, rng)
    for _ in range(patience):
        got = _usable(O, p, rng)
        if got:
            return (O,) + got
        O = two_two_walk(O, 1, rng)
    for _ in range(patience):
        got = _usable(O0, p, rng)
        if got:
            return (O0,) + got
        O0 = sextic_roots_thetas(p, rng)
    raise RuntimeError("no starting surface passed its checks")


def full_torsion_point(J, k, cof, rng):
    n = 3 ** k
    while True:
        Q = J.mul(cof, J.random_point(rng))
        if not J.is_zero(J.mul(n // 3, Q)):
            return Q


def basis(J, k, rng):
    p = J.p
    n = 3 ** k
    cof = (p + 1) // n
    while True:
        pts = [full_torsion_point(J, k, cof, rng) for _ in range(4)]
        try:
            Q, zeta, _ = symplectic_basis(J, pts, k, rng)
        except Degenerate:
            continue
        return Q, zeta


def kernel_tuple(J, P1, P2, P3):
    add, sub = J.add, J.sub
    s23 = add(P2, P3)
    return [P1, P2, P3, s23, sub(P2, P3), sub(P1, P2), sub(P1, P3), add(s23, s23),
            add(P1, s23), sub(P1, s23)]


def is_generic(D):
    u, v = D
    return P.deg(u) == 2 and not u[0].is_zero()
