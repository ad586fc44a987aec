import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fastkummer import field as FM
from fastkummer._errors import FieldDivisionByZero, FieldMismatch
from fastkummer.field import Field, PyFieldElement, counting, fe_batch_inv, uncounted

P431 = 431
P15551 = 15551
P128 = 48661343017068616729574719409508904559

residues = st.integers(min_value=0, max_value=P128 - 1)


def el(p, re, im=0):
    return Field(p)(re % p, im % p)


def test_field_interning_and_validation():
    assert Field(431) is Field(431)
    assert Field(431, ext=False) is not Field(431)
    with pytest.raises(ValueError):
        Field(13)  # 13 = 1 mod 4
    with pytest.raises(ValueError):
        Field(10)


def test_small_known_values():
    F = Field(P431)
    i = F.i()
    assert i * i == F(-1 % P431)
    x = F(3, 4)
    assert x * x.inv() == F.one()
    assert (x / x) == F.one()
    assert x.sqr() == x * x
    assert -x + x == F.zero()


@given(residues, residues, residues, residues)
@settings(max_examples=100, deadline=None)
def test_ring_axioms_large(a, b, c, d):
    x, y = el(P128, a, b), el(P128, c, d)
    assert x * y == y * x
    assert (x + y) * (x - y) == x.sqr() - y.sqr()
    if not x.is_zero():
        assert x * x.inv() == Field(P128).one()


@given(residues, residues)
@settings(max_examples=60, deadline=None)
def test_sqrt_is_canonical_root(a, b):
    x = el(P128, a, b)
    r = x.sqrt()
    if r is None:
        assert not x.is_square()
    else:
        assert r.sqr() == x
        assert (-r).sqr() == x
        assert r == (r.sqr()).sqrt()


@given(st.integers(0, P431 - 1), st.integers(0, P431 - 1), st.integers(0, P431 - 1), st.integers(0, P431 - 1))
@settings(max_examples=100, deadline=None)
def test_backends_agree(a, b, c, d):
    Fc = Field(P431)
    Fp = Field(P431, element=PyFieldElement)
    xc, yc = Fc(a, b), Fc(c, d)
    xp, yp = Fp(a, b), Fp(c, d)
    for u, v in ((xc * yc, xp * yp), (xc + yc, xp + yp), (xc - yc, xp - yp), (xc.sqr(), xp.sqr())):
        assert (u.re, u.im) == (v.re, v.im)
    if not xc.is_zero():
        u, v = xc.inv(), xp.inv()
        assert (u.re, u.im) == (v.re, v.im)
    rc, rp = xc.sqrt(), xp.sqrt()
    assert (rc is None) == (rp is None)
    if rc is not None:
        assert (rc.re, rc.im) == (rp.re, rp.im)


def test_counts_per_operation():
    F = Field(P431)
    x, y = F(5, 7), F(11, 13)
    with counting() as c:
        x * y
    assert (c.mul, c.sqr, c.add) == (1, 0, 0)
    with counting() as c:
        x.sqr()
        x + y
        x - y
        -x
    assert (c.mul, c.sqr, c.add) == (0, 1, 3)
    with counting("base") as c:
        x * y
        x.sqr()
    assert c.headline == 5
    assert c.mul == 5 and c.sqr == 0
    with counting() as c:
        x.inv()
    assert c.inv == 1 and c.mul == 0


def test_uncounted_and_nesting():
    F = Field(P431)
    x = F(2, 3)
    with counting() as c:
        with uncounted():
            x * x
        x * x
        with counting() as inner:
            x * x
    assert c.mul == 1 and inner.mul == 1


def test_mismatch_and_division_by_zero():
    with pytest.raises(FieldMismatch):
        Field(P431)(1) * Field(P15551)(1)
    with pytest.raises(FieldDivisionByZero):
        Field(P431).zero().inv()


def test_base_field_elements():
    F = Field(P431, ext=False)
    x = F(5)
    assert (x * x.inv()) == F.one()
    with pytest.raises(FieldMismatch):
        F.i()


def test_hex_roundtrip_and_rejects():
    F = Field(P128)
    x = F(123456789, 987654321)
    assert F.from_hex(F.to_hex(x)) == x
    with pytest.raises(ValueError):
        F.from_hex("00")
    with pytest.raises(ValueError):
        F.from_hex("ff" * (2 * F.nbytes))
    with pytest.raises(ValueError):
        F.from_hex(F.to_hex(x).upper())


def test_batch_inversion():
    F = Field(P431)
    xs = [F(j, j + 1) for j in range(1, 9)]
    with counting() as c:
        ys = fe_batch_inv(xs)
    assert all(a * b == F.one() for a, b in zip(xs, ys))
    assert c.inv == 1 and c.mul == 3 * (len(xs) - 1)
    with pytest.raises(FieldDivisionByZero):
        fe_batch_inv([F(1), F.zero()])
    assert fe_batch_inv([]) == []


def test_pickle():
    F = Field(P431)
    x = F(3, 4)
    assert pickle.loads(pickle.dumps(x)) == x
    assert pickle.loads(pickle.dumps(F)) is F


def test_backend_name():
    assert FM.BACKEND in ("cython", "python")
