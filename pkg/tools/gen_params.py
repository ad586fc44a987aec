"""Generate shipped parameter sets and the toy fixtures from the reference code in tools/oracle.

    python3 tools/gen_params.py params [toy3 toy5 lambda128 lambda192 lambda256]
    python3 tools/gen_params.py fixtures [toy3 toy5]

Everything here uses the independent reference arithmetic (Fp2, Cantor on the
Jacobian, Weil pairings, the reference Kummer maps); the library is only used
to write files in its canonical format.
"""

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tools"))
sys.path.insert(0, str(ROOT / "src"))

from oracle import iso33_ref as I3  # noqa: E402
from oracle import kummer_ref as KR  # noqa: E402
from oracle import linalg as LA  # noqa: E402
from oracle import poly as P  # noqa: E402
from oracle import setup_ref as SR  # noqa: E402
from oracle.fp2 import Fp2  # noqa: E402

SETS = {
    "toy3": (None, 1, 3),
    "toy5": (None, 4, 5),
    "lambda128": (128, 5, 75),
    "lambda192": (192, 37, 115),
    "lambda256": (256, 11, 154),
}
PARAMS_DIR = ROOT / "src" / "fastkummer" / "data" / "params"
FIX_DIR = ROOT / "tests" / "fixtures"


def hx(p, x):
    n = (p.bit_length() + 7) // 8
    return x.re.to_bytes(n, "big").hex() + x.im.to_bytes(n, "big").hex()


def norm(X):
    s = X[0].inv()
    return tuple(x * s for x in X)


def pt(p, X):
    return [hx(p, x) for x in norm(X)]


def split_table(k, ratio=Fraction(11, 10)):
    """Reference optimal split table by direct recursion (no shared code with the library)."""
    cost = {1: Fraction(0)}
    best = {}
    for n in range(2, k + 1):
        cands = [(cost[n - m] + cost[m] + m * ratio + (n - m), m) for m in range(1, n)]
        c, m = min(cands)
        cost[n], best[n] = c, m
    return [best[n] for n in range(2, k + 1)]


class Setup:
    def __init__(self, name, seed):
        sec, f, k = SETS[name]
        self.name, self.sec, self.f, self.k = name, sec, f, k
        self.n = 3 ** k
        self.p = p = 16 * f * self.n - 1
        assert SR.is_prime(p), p
        self.rng = rng = random.Random(seed)
        self.O, self.ros, self.J = SR.starting_surface(p, rng)
        self.pi = SR.pi_map(self.J, self.ros, self.O)
        while True:
            Q, zeta = SR.basis(self.J, k, rng)
            DR = SR.kernel_tuple(self.J, Q[0], Q[2], Q[3])
            DS = SR.kernel_tuple(self.J, Q[1], Q[2], Q[3])
            kR = [self.pi(D) for D in DR]
            kS = [self.pi(D) for D in DS]
            if all(not x.is_zero() for X in kR + kS for x in X):
                break
        self.Q, self.zeta = Q, zeta
        self.DR, self.DS = kR, kS
        self.ell = self.n.bit_length()
        self.strategy = split_table(k)

    def params_text(self):
        from fastkummer.field import Field
        from fastkummer.params import ParameterSet, dumps
        from fastkummer.kummer import KummerPoint, ThetaConstants
        from fastkummer.chain3dac import KernelTuple
        F = Field(self.p)
        cv = lambda x: F(x.re, x.im)  # noqa: E731
        cp = lambda X: KummerPoint(cv(x) for x in norm(X))  # noqa: E731
        ps = ParameterSet(self.sec, self.f, self.k, self.p, ThetaConstants(cp(self.O)),
                          tuple(cv(r) for r in self.ros), KernelTuple(tuple(cp(X) for X in self.DR)),
                          KernelTuple(tuple(cp(X) for X in self.DS)), tuple(self.strategy), self.ell)
        return dumps(ps)


# ---------------------------------------------------------------- fixtures

def mumford_json(p, D):
    u, v = D
    return {"u": [hx(p, c) for c in u], "v": [hx(p, c) for c in v]}


def oracle_chain(k, O, R, S, push):
    """Naive chain on the reference maps: triple the generators down to order 3 at every step."""
    for step in range(k):
        Rk, Sk = R, S
        for _ in range(k - 1 - step):
            Rk = KR.ladder(3, Rk, O)
            Sk = KR.ladder(3, Sk, O)
        cs = I3.coefficients(Rk, Sk, O)
        O = I3.evaluate(O, cs)
        R, S = I3.evaluate(R, cs), I3.evaluate(S, cs)
        push = [I3.evaluate(X, cs) for X in push]
    return O, push


def msg_scalars(value, ell, n):
    mask = (1 << ell) - 1
    return [((value >> (ell * (2 - j))) & mask) % n for j in range(3)]


def fixtures(S, n_msgs=12):
    J, pi, rng, p, k, n = S.J, S.pi, S.rng, S.p, S.k, S.n
    O = S.O
    out = {"name": S.name, "p": str(p), "k": k}

    # pseudo-group law and ladder
    lad = []
    for _ in range(50):
        D = J.random_point(rng)
        m = rng.randrange(1, 3 * n)
        lad.append({"point": pt(p, pi(D)), "n": m, "result": pt(p, pi(J.mul(m, D)))})
    out["ladder"] = lad
    law = []
    for _ in range(20):
        A, B = J.random_point(rng), J.random_point(rng)
        law.append({"P": pt(p, pi(A)), "Q": pt(p, pi(B)), "diff": pt(p, pi(J.sub(A, B))),
                    "sum": pt(p, pi(J.add(A, B))), "dbl": pt(p, pi(J.add(A, A)))})
    out["law"] = law

    # kappa / pi
    sq = KR.S(O)
    kap = []
    for _ in range(20):
        D = J.random_point(rng)
        kap.append({"D": mumford_json(p, D), "kappa": pt(p, KR.kappa_generic(D, sq, S.ros)),
                    "pi": pt(p, pi(D)), "pi2": pt(p, pi(J.add(D, D)))})
    out["kappa_generic"] = kap
    kfun = lambda D: KR.kappa_generic(D, sq, S.ros)  # noqa: E731
    special = []
    one = Fp2(p, 1)
    lam, mu, nu = S.ros
    mats = {}
    for name, roots in (("1lambda", (one, lam)), ("munu", (mu, nu))):
        u = P.mul([-roots[0], one], [-roots[1], one])
        mats[name] = (([c for c in u], []), LA.translation_matrix(J, kfun, (u, []), rng))
    for kind in ("deg1", "u0zero"):
        for _ in range(3):
            while True:
                x = Fp2(p, rng.randrange(p), rng.randrange(p))
                y = P.evaluate(J.h, x).sqrt()
                if y is not None and not y.is_zero():
                    break
            D = ([-x, one], [y])
            if kind == "u0zero":
                D = J.add(D, ([Fp2(p, 0), one], []))
            # reference value: translate by T_{1 lambda}, evaluate generically, undo with the fitted matrix
            T, M = mats["1lambda"]
            E = J.add(D, T)
            assert SR.is_generic(E)
            ref = LA.apply(M, KR.kappa_generic(E, sq, S.ros))
            special.append({"kind": kind, "D": mumford_json(p, D), "kappa": pt(p, ref),
                            "pi": pt(p, KR.pi_from_sq(ref, O))})
    out["kappa_special"] = special

    # 3DAC on window scalars and on arbitrary residues
    ell = S.ell
    Q = S.Q

    def comb(P1, P2, P3, b, g):
        return J.add(J.add(P1, J.mul(b, P2)), J.mul(g, P3))

    dac = []
    for _ in range(100):
        b = rng.randrange(1 << (ell - 1), 1 << ell)
        g = rng.randrange(1 << (ell - 1), 1 << ell)
        dac.append({"beta": b, "gamma": g, "R": pt(p, pi(comb(Q[0], Q[2], Q[3], b, g)))})
    out["three_dac"] = dac
    dacm = []
    for j in range(100):
        b = rng.randrange(n) if j > 1 else 0
        g = rng.randrange(n) if j > 1 else (0 if j == 0 else 1)
        dacm.append({"beta": b, "gamma": g, "S": pt(p, pi(comb(Q[1], Q[2], Q[3], b, g)))})
    out["three_dac_mod"] = dacm

    # one (3,3)-step: kernel of order-3 points, coefficients by linear algebra
    R3 = J.mul(n // 3, J.add(Q[0], J.mul(rng.randrange(n), Q[2])))
    S3 = J.mul(n // 3, J.add(Q[1], J.mul(rng.randrange(n), Q[3])))
    truth = LA.kernel_coefficients(J, pi, R3, S3, rng)
    cs = I3.coefficients(pi(R3), pi(S3), O)
    assert all(a * cs[4] == b for a, b in zip(truth, cs)), "closed-form coefficients disagree"
    pushed = [pi(J.random_point(rng)) for _ in range(20)]
    out["step"] = {
        "R": pt(p, pi(R3)), "S": pt(p, pi(S3)),
        "coefficients": [hx(p, c) for c in truth],
        "image_thetas": pt(p, I3.evaluate(O, cs)),
        "points": [pt(p, X) for X in pushed],
        "images": [pt(p, I3.evaluate(X, cs)) for X in pushed],
    }

    # full chain with the naive strategy on reference maps
    a_, b_, g_ = (rng.randrange(n) for _ in range(3))
    Rk = pi(comb(Q[0], Q[2], Q[3], a_, b_))
    Sk = pi(comb(Q[1], Q[2], Q[3], b_, g_))
    extra = [pi(J.random_point(rng)) for _ in range(5)]
    Oc, imgs = oracle_chain(k, O, Rk, Sk, extra)
    out["chain"] = {"R": pt(p, Rk), "S": pt(p, Sk), "image_thetas": pt(p, Oc),
                    "points": [pt(p, X) for X in extra], "images": [pt(p, X) for X in imgs]}

    # end-to-end hashes, scalars from the message, kernel from the Jacobian
    nbits = 3 * ell
    ndig = -(-nbits // 4)
    msgs = [0, (1 << nbits) - 1] + [rng.getrandbits(nbits) for _ in range(n_msgs - 2)]
    hashes = []
    for v in msgs:
        a_, b_, g_ = msg_scalars(v, ell, n)
        Rk = pi(comb(Q[0], Q[2], Q[3], a_, b_))
        Sk = pi(comb(Q[1], Q[2], Q[3], b_, g_))
        Oc, _ = oracle_chain(k, O, Rk, Sk, [])
        d = Oc[3]
        normalized = [hx(p, x / d) for x in Oc[:3]]
        hashes.append({"msg_hex": format(v, f"0{ndig}x"), "scalars": [a_, b_, g_],
                       "thetas": pt(p, Oc), "normalized": normalized})
    out["kuhash"] = hashes
    return out


def dump_json(obj, path):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1) + "\n")


SEEDS = {"toy3": 3, "toy5": 5, "lambda128": 128, "lambda192": 192, "lambda256": 256}


def main(argv):
    what = argv[0] if argv else "params"
    names = argv[1:] or (list(SETS) if what == "params" else ["toy3", "toy5"])
    for name in names:
        S = Setup(name, SEEDS[name])
        PARAMS_DIR.mkdir(parents=True, exist_ok=True)
        (PARAMS_DIR / f"{name}.params").write_text(S.params_text())
        print(f"{name}: p = {S.p} ({S.p.bit_length()} bits), ell = {S.ell}", flush=True)
        if what == "fixtures":
            dump_json(fixtures(S), FIX_DIR / f"{name}.json")
            print(f"  fixtures written", flush=True)


if __name__ == "__main__":
    main(sys.argv[1:])
