"""Parameter sets, their file format, and the maps from the Jacobian to the Kummer.

A parameter file is UTF-8 JSON with a fixed layout and formatting::

    {
      "header": {"lambda": 128, "f": 5, "k": 75, "p": "<decimal>"},
      "body": {
        "thetas": [4 hex],
        "rosenhains": [3 hex],
        "D_R": [[4 hex] x 10],
        "D_S": [[4 hex] x 10],
        "strategy": [k - 1 ints],
        "ell": <bit length of 3^k>
      }
    }

Field elements are lowercase hex, re then im, each zero-padded to the byte
length of p.  ``dumps`` reproduces a canonical file byte for byte.

D_R is the kernel tuple for P1 + [alpha]P2 + [beta]P3 built from basis points
(Q1, Q3, Q4); D_S is the one for (Q2, Q3, Q4).
"""

import json
import os
from dataclasses import dataclass, field as dc_field
from importlib import resources
from pathlib import Path

from ._counter import uncounted
from ._errors import DegenerateSurface, InvalidKernel, KummerError, ParamsError
from .chain3dac import KernelTuple, validate_kernel_tuple
from .field import Field
from .isogeny33 import tpl, validate_strategy
from .kummer import (KummerPoint, ThetaConstants, hadamard, proj_equal, scale_map, square_map,
                     tripling_constants, validate_thetas)

PARAMS_ENV = "KUMMER_PARAMS_DIR"
SUFFIX = ".params"


def is_probable_prime(n):
    """Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24, overwhelming above)."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
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


@dataclass(frozen=True)
class ParameterSet:
    security: object  # the lambda header field; None for toy sets
    f: int
    k: int
    p: int
    thetas: ThetaConstants
    rosenhains: tuple
    D_R: KernelTuple
    D_S: KernelTuple
    strategy: tuple
    ell: int
    name: str = ""
    _tc: list = dc_field(default_factory=list, repr=False, compare=False)

    @property
    def field(self):
        return Field(self.p)

    @property
    def tc(self):
        if not self._tc:
            with uncounted():
                self._tc.append(tripling_constants(self.thetas))
        return self._tc[0]

    @property
    def message_bits(self):
        return 3 * self.ell


# ---------------------------------------------------------------- file format

def _fe_list(F, xs, what):
    try:
        return [F.from_hex(x) for x in xs]
    except (TypeError, ValueError) as e:
        raise ParamsError(f"{what}: {e}") from None


def _point(F, xs, what):
    if not isinstance(xs, list) or len(xs) != 4:
        raise ParamsError(f"{what}: a point is a list of 4 hex strings")
    return KummerPoint(_fe_list(F, xs, what))


def _require(d, key, what):
    if not isinstance(d, dict) or key not in d:
        raise ParamsError(f"missing field {what}.{key}")
    return d[key]


def _line_of(text, key):
    for n, line in enumerate(text.splitlines(), start=1):
        if f'"{key}"' in line:
            return n
    return None


def loads(text, name=""):
    """Parse a parameter file's text.  Structural problems raise ParamsError naming the field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParamsError(f"line {e.lineno}: {e.msg}") from None
    header = _require(doc, "header", "file")
    body = _require(doc, "body", "file")
    sec = _require(header, "lambda", "header")
    try:
        f = int(_require(header, "f", "header"))
        k = int(_require(header, "k", "header"))
        p = int(_require(header, "p", "header"))
        ell = int(_require(body, "ell", "body"))
        strategy = tuple(int(m) for m in _require(body, "strategy", "body"))
    except (TypeError, ValueError) as e:
        raise ParamsError(f"integer field malformed: {e}") from None
    if p < 3 or p % 4 != 3:
        raise ParamsError(f"header.p (line {_line_of(text, 'p')}): need an odd prime p = 3 mod 4")
    F = Field(p)
    thetas = ThetaConstants(_point(F, _require(body, "thetas", "body"), "body.thetas"))
    ros = _require(body, "rosenhains", "body")
    if not isinstance(ros, list) or len(ros) != 3:
        raise ParamsError("body.rosenhains: three hex strings expected")
    ros = tuple(_fe_list(F, ros, "body.rosenhains"))
    tuples = []
    for key in ("D_R", "D_S"):
        pts = _require(body, key, "body")
        if not isinstance(pts, list) or len(pts) != 10:
            raise ParamsError(f"body.{key}: ten points expected")
        pts = [_point(F, P, f"body.{key}[{j}]") for j, P in enumerate(pts)]
        try:
            tuples.append(KernelTuple(tuple(pts)))
        except InvalidKernel as e:
            raise ParamsError(f"body.{key}: {e}") from None
    return ParameterSet(sec, f, k, p, thetas, ros, tuples[0], tuples[1], strategy, ell, name)


def _hexes(F, xs):
    return "[" + ", ".join(f'"{F.to_hex(x)}"' for x in xs) + "]"


def dumps(ps):
    F = ps.field
    sec = "null" if ps.security is None else json.dumps(ps.security)
    lines = [
        "{",
        '  "header": {',
        f'    "lambda": {sec},',
        f'    "f": {ps.f},',
        f'    "k": {ps.k},',
        f'    "p": "{ps.p}"',
        "  },",
        '  "body": {',
        f'    "thetas": {_hexes(F, ps.thetas)},',
        f'    "rosenhains": {_hexes(F, ps.rosenhains)},',
    ]
    for key in ("D_R", "D_S"):
        D = getattr(ps, key)
        lines.append(f'    "{key}": [')
        lines.extend(f"      {_hexes(F, P)}{',' if j < 9 else ''}" for j, P in enumerate(D))
        lines.append("    ],")
    lines.append(f'    "strategy": [{", ".join(str(m) for m in ps.strategy)}],')
    lines.append(f'    "ell": {ps.ell}')
    lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def shipped_names():
    root = resources.files("fastkummer") / "data" / "params"
    return sorted(e.name[:-len(SUFFIX)] for e in root.iterdir() if e.name.endswith(SUFFIX))


def resolve(name_or_path):
    """A path as given if it exists, else NAME.params in $KUMMER_PARAMS_DIR, else a shipped set."""
    p = Path(name_or_path)
    if p.is_file():
        return p
    fname = name_or_path if name_or_path.endswith(SUFFIX) else name_or_path + SUFFIX
    env = os.environ.get(PARAMS_ENV)
    if env:
        q = Path(env) / fname
        if q.is_file():
            return q
    q = resources.files("fastkummer") / "data" / "params" / fname
    if q.is_file():
        return q
    raise ParamsError(f"no parameter file {name_or_path!r} (searched the path, ${PARAMS_ENV}, "
                      f"and shipped sets {', '.join(shipped_names())})")


def load_params(name_or_path, validate=True):
    """Load and (by default) validate a parameter set; raises ParamsError naming a failed check."""
    path = resolve(str(name_or_path))
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParamsError(f"cannot read {path}: {e}") from None
    name = path.name[:-len(SUFFIX)] if path.name.endswith(SUFFIX) else path.name
    ps = loads(text, name)
    if validate:
        report = validate_params(ps)
        if not report.ok:
            bad = report.failures()[0]
            raise ParamsError(f"{name}: check {bad[0]!r} failed: {bad[2]}")
    return ps


# ---------------------------------------------------------------- validation

@dataclass
class ValidationReport:
    checks: list = dc_field(default_factory=list)

    def add(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self):
        return all(c[1] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[1]]

    def lines(self):
        return [f"{'PASS' if ok else 'FAIL'}  {name}{': ' + d if d else ''}"
                for name, ok, d in self.checks]


def rosenhain_consistent(thetas, ros):
    """lambda = a^2c^2/(b^2d^2), mu/nu = c^2b^2/(d^2a^2), and t = nu b^2/a^2 solves
    A^2B^2 (t - 1)^2 = C^2D^2 (t + 1)^2 with (A^2 : B^2 : C^2 : D^2) = H(a^2 : b^2 : c^2 : d^2)."""
    with uncounted():
        lam, mu, nu = ros
        a2, b2, c2, d2 = square_map(thetas)
        A2, B2, C2, D2 = hadamard((a2, b2, c2, d2))
        if lam * b2 * d2 != a2 * c2:
            return False, "lambda != a^2c^2/(b^2d^2)"
        if mu * d2 * a2 != nu * c2 * b2:
            return False, "mu/nu != c^2b^2/(d^2a^2)"
        t = nu * b2 / a2
        one = t.field.one()
        if A2 * B2 * (t - one).sqr() != C2 * D2 * (t + one).sqr():
            return False, "e^2/f^2 relation fails"
    return True, ""


def _order_3k(P, TC, k):
    with uncounted():
        Q = P
        for _ in range(k - 1):
            Q = tpl(Q, TC)
        if proj_equal(Q, TC.thetas):
            return False
        return proj_equal(tpl(Q, TC), TC.thetas)


def validate_params(ps, orders=True):
    """Run every invariant that can be checked without a Weil pairing; returns a ValidationReport.

    Pairing conditions on the basis are trusted from the generator.
    """
    r = ValidationReport()
    n = 3 ** ps.k
    r.add("p = 16 f 3^k - 1", ps.p == 16 * ps.f * n - 1, f"p = {ps.p}")
    r.add("p prime", is_probable_prime(ps.p))
    r.add("p = 3 mod 4", ps.p % 4 == 3)
    r.add("ell", ps.ell == n.bit_length(), f"file {ps.ell}, bit length of 3^k is {n.bit_length()}")
    try:
        validate_strategy(ps.strategy, ps.k)
        r.add("strategy", True)
    except ValueError as e:
        r.add("strategy", False, str(e))
    try:
        validate_thetas(ps.thetas)
        r.add("thetas define a fast Kummer", True)
    except DegenerateSurface as e:
        r.add("thetas define a fast Kummer", False, str(e))
        return r
    ok, why = rosenhain_consistent(ps.thetas, ps.rosenhains)
    r.add("Rosenhain/theta consistency", ok, why)
    for key in ("D_R", "D_S"):
        D = getattr(ps, key)
        ok, why = validate_kernel_tuple(D, ps.tc)
        r.add(f"{key} tuple relations", ok, why)
        if orders:
            for j in range(3):
                r.add(f"{key} P{j + 1} order 3^k", _order_3k(D[j], ps.tc, ps.k))
    return r


# ---------------------------------------------------------------- Jacobian points

def _ptrim(a):
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def _padd(a, b):
    n = max(len(a), len(b))
    z = (a or b)[0].field.zero() if (a or b) else None
    return _ptrim([(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)])


def _pneg(a):
    return [-x for x in a]


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return []
    z = a[0].field.zero()
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pdivmod(a, b):
    a = _ptrim(a)
    b = _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    ib = b[-1].inv()
    z = b[0].field.zero()
    q = [z] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] * ib
        s = len(r) - len(b)
        q[s] = c
        for i, y in enumerate(b):
            r[s + i] = r[s + i] - c * y
        r = _ptrim(r)
    return _ptrim(q), r


def _pmonic(a):
    a = _ptrim(a)
    s = a[-1].inv()
    return [x * s for x in a]


def _xgcd(a, b):
    one = (a or b)[0].field.one()
    r0, r1, s0, s1, t0, t1 = _ptrim(a), _ptrim(b), [one], [], [], [one]
    while r1:
        q, r = _pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1))
        t0, t1 = t1, _psub(t0, _pmul(q, t1))
    s = r0[-1].inv()
    return [x * s for x in r0], [x * s for x in s0], [x * s for x in t0]


def rosenhain_sextic(ros):
    """x(x - 1)(x - lambda)(x - mu)(x - nu) as a coefficient list, constant term first."""
    lam, mu, nu = ros
    F = lam.field
    h = [F.one()]
    for r in (F.zero(), F.one(), lam, mu, nu):
        h = _pmul(h, [-r, F.one()])
    return h


@dataclass(frozen=True)
class MumfordPoint:
    """(u, v) with u monic of degree 0, 1 or 2 and deg v < deg u, coefficient lists constant first.

    Degree 2: u = x^2 + u1 x + u0, v = v1 x + v0.  Degree 1: u = x + u0, v = v0.
    Degree 0 is the identity.
    """

    u: tuple
    v: tuple

    @classmethod
    def from_coeffs(cls, u1, u0, v1, v0):
        F = u0.field
        return cls((u0, u1, F.one()), (v0, v1))

    @classmethod
    def identity(cls, field):
        return cls((field.one(),), ())

    @classmethod
    def from_polys(cls, u, v):
        u = _pmonic(u)
        v = _ptrim(v)
        z = u[0].field.zero()
        return cls(tuple(u), tuple(v + [z] * (len(u) - 1 - len(v))))

    @property
    def degree(self):
        return len(self.u) - 1

    @property
    def is_identity(self):
        return self.degree == 0

    @property
    def degenerate(self):
        return self.degree == 1 or (self.degree == 2 and self.u[0].is_zero())

    @property
    def u0(self):
        return self.u[0] if self.degree else None

    @property
    def u1(self):
        return self.u[1] if self.degree == 2 else None

    @property
    def v0(self):
        return self.v[0] if self.degree else None

    @property
    def v1(self):
        return self.v[1] if self.degree == 2 else None

    def on_jacobian(self, ros):
        with uncounted():
            h = rosenhain_sextic(ros)
            _, r = _pdivmod(_psub(h, _pmul(list(self.v), list(self.v))), list(self.u))
            return not r


def jacobian_add(D1, D2, ros):
    """Cantor composition and reduction on y^2 = x(x-1)(x-lambda)(x-mu)(x-nu)."""
    with uncounted():
        h = rosenhain_sextic(ros)
        u1, v1 = _ptrim(D1.u), _ptrim(D1.v)
        u2, v2 = _ptrim(D2.u), _ptrim(D2.v)
        d0, e1, e2 = _xgcd(u1, u2)
        if len(d0) == 1:
            d, s1, s2, s3 = d0, e1, e2, []
        else:
            d, c1, c2 = _xgcd(d0, _padd(v1, v2))
            s1, s2, s3 = _pmul(c1, e1), _pmul(c1, e2), c2
        u, _ = _pdivmod(_pmul(u1, u2), _pmul(d, d))
        num = _padd(_padd(_pmul(_pmul(s1, u1), v2), _pmul(_pmul(s2, u2), v1)),
                    _pmul(s3, _padd(_pmul(v1, v2), h)))
        v, _ = _pdivmod(num, d)
        v = _pdivmod(v, u)[1]
        while len(u) > 3:
            u, _ = _pdivmod(_psub(h, _pmul(v, v)), u)
            u = _pmonic(u)
            v = _pdivmod(_pneg(v), u)[1]
        return MumfordPoint.from_polys(u, v)


def two_torsion(ros, roots):
    """The 2-torsion class whose u is the product of (x - e) over the named roots."""
    lam, mu, nu = ros
    F = lam.field
    vals = {"0": F.zero(), "1": F.one(), "lambda": lam, "mu": mu, "nu": nu}
    u = [F.one()]
    for r in roots:
        u = _pmul(u, [-vals[r], F.one()])
    return MumfordPoint.from_polys(u, [])


# Translations by these three 2-torsion points act on the squared Kummer as plain
# coordinate permutations; the other twelve do not.
_KAPPA_SHIFTS = (
    (("1", "lambda"), (3, 2, 1, 0)),
    (("mu", "nu"), (2, 3, 0, 1)),
    (("0",), (1, 0, 3, 2)),
)


def _kappa_generic(D, sq, ros):
    lam, mu, nu = ros
    a2, b2, c2, d2 = sq
    u0, u1, v0 = D.u0, D.u1, D.v0
    one = u0.field.one()
    w = v0.sqr()
    X1 = a2 * (u0 * (mu - u0) * (lam + u1 + nu) - w)
    X2 = b2 * (u0 * (nu * lam - u0) * (one + u1 + mu) - w)
    X3 = c2 * (u0 * (nu - u0) * (lam + u1 + mu) - w)
    X4 = d2 * (u0 * (mu * lam - u0) * (one + u1 + nu) - w)
    return KummerPoint((X1, X2, X3, X4))


def kappa(D, ps, shifts=None):
    """Image of a Mumford point on the squared Kummer.

    Points with u0 = 0 or of degree 1 are first translated by a 2-torsion
    point T that makes them generic; the translation is undone by the
    coordinate permutation T induces.  ``shifts`` restricts which T are tried.
    """
    thetas, ros = (ps.thetas, ps.rosenhains) if isinstance(ps, ParameterSet) else ps
    with uncounted():
        sq = square_map(thetas)
        if not D.on_jacobian(ros):
            raise InvalidKernel("point is not on the Jacobian of the Rosenhain curve")
        if D.is_identity:
            return KummerPoint(sq)
        if not D.degenerate:
            return _kappa_generic(D, sq, ros)
        for roots, perm in (shifts or _KAPPA_SHIFTS):
            E = jacobian_add(D, two_torsion(ros, roots), ros)
            if E.is_identity:
                X = sq
            elif E.degenerate:
                continue
            else:
                X = _kappa_generic(E, sq, ros)
            return KummerPoint(X[perm[i]] for i in range(4))
    raise KummerError("no 2-torsion translation makes this point generic")


def from_squared(X, TC):
    """Squared Kummer to the fast Kummer: C_{I(O)} H C_{I(A^2)} S H."""
    Y = scale_map(square_map(hadamard(X)), TC.inv_sq_duals)
    return scale_map(hadamard(Y), TC.inv_thetas)


def project_to_fast(D, ps):
    """The map pi from the Jacobian to the fast Kummer with the parameter set's thetas."""
    if isinstance(ps, ParameterSet):
        TC = ps.tc
    else:
        with uncounted():
            TC = tripling_constants(ps[0])
    with uncounted():
        return from_squared(kappa(D, ps), TC)
