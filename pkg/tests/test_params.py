import json
from dataclasses import replace

import pytest

from fastkummer._errors import ParamsError
from fastkummer.kummer import on_surface, proj_equal, xdbl
from fastkummer.params import (MumfordPoint, dumps, is_probable_prime, jacobian_add, kappa,
                               load_params, loads, project_to_fast, resolve, rosenhain_sextic,
                               shipped_names, validate_params)

SHIPPED = ["lambda128", "lambda192", "lambda256", "toy3", "toy5"]


def test_shipped_names():
    assert shipped_names() == SHIPPED


@pytest.mark.parametrize("name", SHIPPED)
def test_shipped_sets_validate(name):
    ps = load_params(name, validate=False)
    rep = validate_params(ps)
    assert rep.ok, rep.lines()
    assert ps.ell == (3 ** ps.k).bit_length()
    assert ps.message_bits == 3 * ps.ell


def test_security_levels():
    bits = {name: load_params(name, validate=False).p.bit_length() for name in SHIPPED[:3]}
    assert bits == {"lambda128": 126, "lambda192": 192, "lambda256": 252}


@pytest.mark.parametrize("name", SHIPPED)
def test_roundtrip_is_byte_identical(name):
    text = resolve(name).read_text()
    assert dumps(loads(text, name)) == text


def test_primality():
    assert is_probable_prime(431) and is_probable_prime(15551)
    assert not is_probable_prime(431 * 15551)
    assert not is_probable_prime(1) and is_probable_prime(2)


def _doc(name="toy3"):
    return json.loads(resolve(name).read_text())


@pytest.mark.parametrize("mutate, needle", [
    (lambda d: d.pop("header"), "header"),
    (lambda d: d["body"].pop("D_S"), "D_S"),
    (lambda d: d["body"]["thetas"].pop(), "thetas"),
    (lambda d: d["body"]["D_R"][3].__setitem__(0, "zz"), "D_R[3]"),
    (lambda d: d["header"].__setitem__("p", "433"), "header.p"),
    (lambda d: d["body"].__setitem__("rosenhains", []), "rosenhains"),
])
def test_malformed_files_name_the_field(mutate, needle):
    d = _doc()
    mutate(d)
    with pytest.raises(ParamsError, match=needle.replace("[", r"\[").replace("]", r"\]")):
        loads(json.dumps(d))


def test_bad_json_reports_line():
    with pytest.raises(ParamsError, match="line 2"):
        loads('{\n  "header": ,\n}')


def test_corrupted_sets_fail_validation(toy3):
    bad_p = replace(toy3, f=2)
    assert not validate_params(bad_p).ok
    bad_ell = replace(toy3, ell=toy3.ell + 1)
    assert [c[0] for c in validate_params(bad_ell).failures()] == ["ell"]
    bad_strategy = replace(toy3, strategy=(1, 3))
    assert not validate_params(bad_strategy).ok
    swapped = replace(toy3, D_R=toy3.D_S, D_S=toy3.D_R)
    assert validate_params(swapped).ok
    ros = (toy3.rosenhains[1], toy3.rosenhains[0], toy3.rosenhains[2])
    assert not validate_params(replace(toy3, rosenhains=ros)).ok


def test_params_dir_env(tmp_path, monkeypatch):
    text = resolve("toy3").read_text()
    (tmp_path / "mine.params").write_text(text)
    monkeypatch.setenv("KUMMER_PARAMS_DIR", str(tmp_path))
    assert load_params("mine").name == "mine"
    assert load_params(str(tmp_path / "mine.params")).p == 431
    with pytest.raises(ParamsError):
        load_params("nonexistent")


def test_load_rejects_invalid_file(tmp_path):
    d = _doc()
    d["header"]["f"] = 3
    path = tmp_path / "bad.params"
    path.write_text(json.dumps(d))
    with pytest.raises(ParamsError, match="p = 16 f 3\\^k - 1"):
        load_params(str(path))
    assert load_params(str(path), validate=False).f == 3


# ---------------------------------------------------------------- Jacobian side

def _points(ps, rng, n):
    """Random degree-1 Mumford points (x - x0, y0) from curve points."""
    F = ps.field
    h = rosenhain_sextic(ps.rosenhains)
    out = []
    while len(out) < n:
        x = F.random(rng)
        y2 = sum((c * _pow(x, j) for j, c in enumerate(h)), F.zero())
        y = y2.sqrt()
        if y is None or y.is_zero():
            continue
        out.append(MumfordPoint.from_polys([-x, F.one()], [y]))
    return out


def _pow(x, e):
    r = x.field.one()
    for _ in range(e):
        r = r * x
    return r


def test_projection_respects_the_group_law(toy, rng):
    pts = _points(toy, rng, 6)
    for D in pts:
        assert D.on_jacobian(toy.rosenhains)
    for D1, D2 in zip(pts[::2], pts[1::2]):
        E = jacobian_add(D1, D2, toy.rosenhains)
        assert on_surface(project_to_fast(E, toy), toy.thetas)
        twice = jacobian_add(E, E, toy.rosenhains)
        assert proj_equal(project_to_fast(twice, toy), xdbl(project_to_fast(E, toy), toy.tc))


def test_identity_projects_to_identity(toy):
    O = MumfordPoint.identity(toy.field)
    assert proj_equal(project_to_fast(O, toy), toy.thetas)
    assert kappa(O, toy) is not None
