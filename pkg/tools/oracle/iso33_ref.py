"""(3,3)-isogeny coefficients and evaluation, transcribed term by term with no sharing.

h(P) here is H(C_{1/A^2}(H(S(P)))); the coefficient identities were re-derived from the
explicit biquadratic forms and checked against kernel_coefficients below.
"""

from .kummer_ref import H, S, sq_duals


def _D(O):
    a, b, c, d = O
    D1 = (a * b - c * d) * (a * b + c * d)
    D2 = (a * c - b * d) * (a * c + b * d)
    D3 = (a * d - b * c) * (a * d + b * c)
    return D1, D2, D3


def gamma(P, O):
    a, b, c, d = O
    x1, x2, x3, x4 = P
    D1, D2, D3 = _D(O)
    return (D2 * D3 * (x1 * x2 * a * b - x3 * x4 * c * d)
            + D1 * D3 * (x1 * x3 * a * c - x2 * x4 * b * d)
            + D1 * D2 * (x1 * x4 * a * d - x2 * x3 * b * c))


def h(P, O):
    A2 = sq_duals(O)
    return H(tuple(x / y for x, y in zip(H(S(P)), A2)))


def coefficients(R, Sp, O):
    a, b, c, d = O
    r1, r2, r3, r4 = R
    s1, s2, s3, s4 = Sp
    D1, D2, D3 = _D(O)
    D12, D13, D23 = D1 * D2, D1 * D3, D2 * D3
    gR, gS = gamma(R, O), gamma(Sp, O)
    hR, hS = h(R, O), h(Sp, O)
    b1 = D23 * (gR * (s3 * s4 * a * b - s1 * s2 * c * d) - gS * (r3 * r4 * a * b - r1 * r2 * c * d))
    b2 = hR[1] * hS[0] - hR[0] * hS[1]
    c1 = 2 * b1 * hR[0] * hS[0]
    c2 = (b1 * (hR[0] * hS[1] + hR[1] * hS[0])
          + b2 * (gR * (s3 * s4 * a * b - s1 * s2 * c * d) + gS * (r3 * r4 * a * b - r1 * r2 * c * d)) * D23)
    c3 = (b1 * (hR[0] * hS[2] + hR[2] * hS[0])
          + b2 * (gR * (s2 * s4 * a * c - s1 * s3 * b * d) + gS * (r2 * r4 * a * c - r1 * r3 * b * d)) * D13)
    c4 = (b1 * (hR[0] * hS[3] + hR[3] * hS[0])
          + b2 * (gR * (s2 * s3 * a * d - s1 * s4 * b * c) + gS * (r2 * r3 * a * d - r1 * r4 * b * c)) * D12)
    c5 = 2 * b2 * gS * gR
    return c1, c2, c3, c4, c5


def evaluate(P, cs):
    c1, c2, c3, c4, c5 = cs
    x1, x2, x3, x4 = P
    return (x1 * (c1 * x1 * x1 + c2 * x2 * x2 + c3 * x3 * x3 + c4 * x4 * x4) + c5 * x2 * x3 * x4,
            x2 * (c2 * x1 * x1 + c1 * x2 * x2 + c4 * x3 * x3 + c3 * x4 * x4) + c5 * x1 * x3 * x4,
            x3 * (c3 * x1 * x1 + c4 * x2 * x2 + c1 * x3 * x3 + c2 * x4 * x4) + c5 * x1 * x2 * x4,
            x4 * (c4 * x1 * x1 + c3 * x2 * x2 + c2 * x3 * x3 + c1 * x4 * x4) + c5 * x1 * x2 * x3)
