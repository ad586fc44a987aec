"""Acceptance criteria, one PASS/FAIL line each.

Run under pytest (the lines are printed even when output is captured) or
directly with ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import fixture_doc, params, point, random_point  # noqa: E402
from fastkummer import chain3dac as C  # noqa: E402
from fastkummer import isogeny33 as I3  # noqa: E402
from fastkummer.field import counting  # noqa: E402
from fastkummer.isogeny22 import SUBGROUP_IDS, isogeny_22, kernel_nodes  # noqa: E402
from fastkummer.kuhash import kuhash, message_from_hex  # noqa: E402
from fastkummer.kummer import (hadamard, invert_map, ladder, node_translate, nodes,  # noqa: E402
                               normalize, on_surface, proj_equal, scale_map, square_map,
                               tripling_constants)

HEADLINE = {"lambda128": 177956, "lambda192": 286636, "lambda256": 396942}

EXPECTED_COUNTS = {
    "tripling_constants": (12, 4, 6),
    "compute_33_coefficients": (76, 8, 97),
    "isogeny_33_evaluate": (26, 4, 16),
    "compute_image_thetas": (26, 0, 16),
    "tpl": (26, 12, 32),
}


def _line(n, ok, text, seconds):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text} ({seconds:.2f} s)"


def _order3(ps, P):
    for _ in range(ps.k - 1):
        P = I3.tpl(P, ps.tc)
    return P


def _random_kernel(ps, rng):
    n = 3 ** ps.k
    a, b, g = (rng.randrange(n) for _ in range(3))
    R = C.three_dac_mod(ps.D_R, a, b, ps.k, ps.tc)
    S = C.three_dac_mod(ps.D_S, b, g, ps.k, ps.tc)
    return R, S


# ---------------------------------------------------------------- 1

def check_primitive_counts():
    t0 = time.perf_counter()
    rng = random.Random(1)
    seen = {name: set() for name in EXPECTED_COUNTS}
    for name in ("toy3", "toy5", "lambda128"):
        ps = params(name)
        R, S = (_order3(ps, X) for X in _random_kernel(ps, rng))
        P = random_point(ps, rng)
        cs = I3.compute_33_coefficients(R, S, ps.tc)
        calls = {
            "tripling_constants": lambda: tripling_constants(ps.thetas),
            "compute_33_coefficients": lambda: I3.compute_33_coefficients(R, S, ps.tc),
            "isogeny_33_evaluate": lambda: I3.isogeny_33_evaluate(P, cs),
            "compute_image_thetas": lambda: I3.compute_image_thetas(cs, ps.tc),
            "tpl": lambda: I3.tpl(P, ps.tc),
        }
        for prim, fn in calls.items():
            with counting() as c:
                fn()
            seen[prim].add((c.mul, c.sqr, c.add, c.inv))
    dt = time.perf_counter() - t0
    parts, ok = [], dt < 1.0
    for prim, want in EXPECTED_COUNTS.items():
        got = seen[prim]
        good = got == {want + (0,)}
        ok &= good
        m, s, a, _ = sorted(got)[0]
        parts.append(f"{prim} {m}M+{s}S+{a}a" + ("" if good else f" (want {want[0]}M+{want[1]}S+{want[2]}a)"))
    return ok, "exact op counts: " + "; ".join(parts), dt


def test_criterion_1_primitive_counts(capsys):
    _run(capsys, 1, check_primitive_counts)


# ---------------------------------------------------------------- 2

def check_three_dac():
    t0 = time.perf_counter()
    ps = params("lambda128")
    ell = ps.ell
    n = 3 ** ps.k
    rng = random.Random(2)
    want = (3 * ell - 2, ell - 1)
    traces = set()
    window = set()
    for _ in range(50):
        b = rng.randrange(1 << (ell - 1), 1 << ell)
        g = rng.randrange(1 << (ell - 1), 1 << ell)
        with counting(trace=True, ops=True) as c:
            C.three_dac(ps.D_R, b, g, ell, ps.tc)
        window.add((c.xadd, c.xdbl))
        traces.add(hash((tuple(c.trace), tuple(c.ops))))
    # every residue pair, as the hash feeds them
    residues = set()
    for _ in range(50):
        with counting() as c:
            C.three_dac_mod(ps.D_R, rng.randrange(n), rng.randrange(n), ps.k, ps.tc)
        residues.add((c.xadd, c.xdbl))
    dt = time.perf_counter() - t0
    ok = window == {want} and residues == {want} and len(traces) == 1 and dt < 10
    fmt = lambda s: ", ".join(f"{a} xadd / {d} xdbl" for a, d in sorted(s))  # noqa: E731
    return ok, (f"3DAC at ell={ell}, want {want[0]} xadd / {want[1]} xdbl: window scalars {fmt(window)}, "
                f"arbitrary residues {fmt(residues)}; "
                f"{len(traces)} distinct trace(s) over 50 pairs"), dt


def test_criterion_2_three_dac_cost_and_uniformity(capsys):
    _run(capsys, 2, check_three_dac)


# ---------------------------------------------------------------- 3

def check_oracles():
    t0 = time.perf_counter()
    tallies = {"a": 0, "b": 0, "c": 0, "d": 0, "e": 0}
    bad = []
    for name in ("toy3", "toy5"):
        ps, fx = params(name), fixture_doc(name)

        def pt(xs):
            return point(ps.field, xs)

        for e in fx["ladder"][:50]:
            P = pt(e["point"])
            ok = proj_equal(I3.tpl(P, ps.tc), ladder(3, P, ps.tc)) and \
                proj_equal(ladder(e["n"], P, ps.tc), pt(e["result"]))
            tallies["a"] += 1
            if not ok:
                bad.append(f"{name} (a)")
        for e in fx["three_dac"][:100]:
            tallies["b"] += 1
            if not proj_equal(C.three_dac(ps.D_R, e["beta"], e["gamma"], ps.ell, ps.tc), pt(e["R"])):
                bad.append(f"{name} (b)")
        st = fx["step"]
        cs = I3.compute_33_coefficients(pt(st["R"]), pt(st["S"]), ps.tc)
        tallies["c"] += 1 + len(st["points"])
        if not proj_equal(I3.compute_image_thetas(cs, ps.tc), pt(st["image_thetas"])):
            bad.append(f"{name} (c) thetas")
        for a, b in zip(st["points"], st["images"]):
            if not proj_equal(I3.isogeny_33_evaluate(pt(a), cs), pt(b)):
                bad.append(f"{name} (c) point")
        ch = fx["chain"]
        O, _ = I3.isogeny_33_chain(ps.k, ps.thetas, pt(ch["R"]), pt(ch["S"]), ps.strategy)
        tallies["d"] += 1
        if not proj_equal(O, pt(ch["image_thetas"])):
            bad.append(f"{name} (d)")
        for e in fx["kuhash"]:
            tallies["e"] += 1
            h = kuhash(message_from_hex(e["msg_hex"], ps.k), ps, normalize=True)
            if [ps.field.to_hex(x) for x in h.normalized] != e["normalized"]:
                bad.append(f"{name} (e)")
    dt = time.perf_counter() - t0
    ok = not bad and tallies["a"] == 100 and tallies["b"] == 200 and tallies["e"] >= 20 and dt < 60
    detail = ", ".join(f"({k}) {v}" for k, v in tallies.items())
    return ok, f"toy oracle equivalence at k=3 and k=5: {detail} checks" + (
        f"; mismatches: {sorted(set(bad))}" if bad else ""), dt


def test_criterion_3_toy_oracles(capsys):
    _run(capsys, 3, check_oracles)


# ---------------------------------------------------------------- 4

def _step_invariants(ps, R, S, TC, pushed, bad, tag):
    """One (3,3)-step with order-3 generators R, S; returns the coefficients and image."""
    cs = I3.compute_33_coefficients(R, S, TC)
    O2 = I3.compute_image_thetas(cs, TC)
    phi = lambda X: I3.isogeny_33_evaluate(X, cs)  # noqa: E731
    if not (proj_equal(phi(R), O2) and proj_equal(phi(S), O2)):
        bad.append(f"{tag} annihilation")
    if not I3.compute_33_coefficients(S, R, TC).proj_equal(cs):
        bad.append(f"{tag} symmetry")
    for P in pushed:
        Q = phi(P)
        if not on_surface(Q, O2):
            bad.append(f"{tag} on_surface")
        for i in range(1, 16):
            if not proj_equal(phi(node_translate(P, i)), node_translate(Q, i)):
                bad.append(f"{tag} sigma_{i}")
    return cs, O2


def check_structure():
    t0 = time.perf_counter()
    rng = random.Random(4)
    bad = []
    steps = 0
    for name in ("toy3", "toy5"):
        ps = params(name)
        for trial in range(3):
            R, S = _random_kernel(ps, rng)
            O = ps.thetas
            TC = ps.tc
            pushed = [random_point(ps, rng) for _ in range(3)]
            # walk the chain naively so every step is checked on fresh order-3 generators
            for step in range(ps.k):
                R3, S3 = R, S
                for _ in range(ps.k - 1 - step):
                    R3, S3 = I3.tpl(R3, TC), I3.tpl(S3, TC)
                cs, O = _step_invariants(ps, R3, S3, TC, pushed, bad, f"{name} step {step}")
                R, S = I3.isogeny_33_evaluate(R, cs), I3.isogeny_33_evaluate(S, cs)
                pushed = [I3.isogeny_33_evaluate(P, cs) for P in pushed]
                TC = tripling_constants(O)
                steps += 1
    ps = params("toy5")
    for _ in range(5):
        R, S = _random_kernel(ps, rng)
        extra = [random_point(ps, rng)]
        a = I3.isogeny_33_chain(ps.k, ps.thetas, R, S, I3.naive_strategy(ps.k), push=extra)
        b = I3.isogeny_33_chain(ps.k, ps.thetas, R, S, I3.compute_strategy(ps.k), push=extra)
        if not (proj_equal(a[0], b[0]) and proj_equal(a[1][0], b[1][0])):
            bad.append("naive vs optimal")
    dt = time.perf_counter() - t0
    return not bad, (f"structural invariants over {steps} steps (annihilation, 15 sigma_i, on_surface, "
                     f"(R,S) symmetry) and naive = optimal at k=5"
                     + (f"; violations: {sorted(set(bad))[:6]}" if bad else "")), dt


def test_criterion_4_structural_invariants(capsys):
    _run(capsys, 4, check_structure)


# ---------------------------------------------------------------- 5

def check_two_two():
    t0 = time.perf_counter()
    ps = params("toy3")
    O = ps.thetas
    rng = random.Random(5)
    sample = [random_point(ps, rng) for _ in range(5)]
    kernel_ok, onto_ok, into_ok = [], [], []
    for ij in SUBGROUP_IDS:
        phi, O2 = isogeny_22(O, ij)
        kernel_ok.append(all(proj_equal(phi(node_translate(O, m)), O2) for m in kernel_nodes(ij, O)))
        image = {normalize(T) for T in nodes(O2)}
        hit = {normalize(phi(T)) for T in nodes(O)}
        onto_ok.append(hit == image)
        into_ok.append(hit <= image)
    # (1,2): phi = C_{I(U)} H S with U = (A:B:C:D) a square root of the squared duals
    phi, U = isogeny_22(O, (1, 2))
    displayed = proj_equal(square_map(U), hadamard(square_map(O))) and all(
        proj_equal(phi(P), scale_map(hadamard(square_map(P)), invert_map(U))) for P in sample + [O])
    dt = time.perf_counter() - t0
    ok = all(kernel_ok) and all(onto_ok) and displayed and dt < 10
    return ok, (f"(2,2) suite over 15 ids: kernel->identity {sum(kernel_ok)}/15, "
                f"16 nodes onto 16 image nodes {sum(onto_ok)}/15 "
                f"(into the image node set {sum(into_ok)}/15), "
                f"(1,2) equals C_I(A:B:C:D) H S: {'yes' if displayed else 'no'}"), dt


def test_criterion_5_two_two_suite(capsys):
    _run(capsys, 5, check_two_two)


# ---------------------------------------------------------------- 6

def check_headline(name):
    t0 = time.perf_counter()
    ps = params(name)
    nbits = ps.message_bits
    rng = random.Random(6)
    heads = set()
    for v in (0, (1 << nbits) - 1, rng.getrandbits(nbits)):
        with counting("base") as c:
            kuhash((v, nbits), ps)
        heads.add(c.headline)
    dt = time.perf_counter() - t0
    want = HEADLINE[name]
    got = heads.pop() if len(heads) == 1 else None
    dev = None if got is None else (got - want) / want
    ok = dev is not None and abs(dev) <= 0.05 and dt < 120
    text = (f"{name} headline F_p M+S {got} vs {want} ({dev:+.2%})" if got is not None
            else f"{name} headline not constant across messages: {sorted(heads)}")
    return ok, text, dt


@pytest.mark.parametrize("name", list(HEADLINE))
def test_criterion_6_headline_cost(capsys, name):
    _run(capsys, 6, lambda: check_headline(name))


# ---------------------------------------------------------------- 7

def _all_tables(k):
    return itertools.product(*[range(1, n) for n in range(2, k + 1)])


def check_strategies():
    t0 = time.perf_counter()
    bad = []
    for ratio in (Fraction(11, 10), Fraction(1)):
        for k in range(1, 9):
            best = min(I3.strategy_cost(list(t), ratio) for t in _all_tables(k))
            got = I3.strategy_cost(I3.compute_strategy(k, ratio), ratio)
            if got != best:
                bad.append((float(ratio), k, got, best))
    dt = time.perf_counter() - t0
    return not bad and dt < 5, ("compute_strategy matches exhaustive enumeration for k <= 8 at ratios 1.1 and 1.0"
                                + (f"; mismatches {bad}" if bad else "")), dt


def test_criterion_7_strategy_optimality(capsys):
    _run(capsys, 7, check_strategies)


# ---------------------------------------------------------------- driver

def _run(capsys, n, fn):
    ok, text, dt = fn()
    with capsys.disabled():
        print("\n" + _line(n, ok, text, dt))
    assert ok, text


def main():
    checks = [(1, check_primitive_counts), (2, check_three_dac), (3, check_oracles),
              (4, check_structure), (5, check_two_two)]
    checks += [(6, lambda name=name: check_headline(name)) for name in HEADLINE]
    checks += [(7, check_strategies)]
    failed = 0
    for n, fn in checks:
        ok, text, dt = fn()
        failed += not ok
        print(_line(n, ok, text, dt))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
