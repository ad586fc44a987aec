"""Command-line interface.

Exit codes: 0 success, 1 domain error (any KummerError), 2 usage error.
Parameter sets are looked up as a path, then in $KUMMER_PARAMS_DIR, then among
the shipped sets (toy3, toy5, lambda128, lambda192, lambda256).
"""

import argparse
import json
import random
import sys
import time
from importlib import resources

from . import __version__
from ._counter import counting, uncounted
from ._errors import KummerError
from .field import BACKEND
from .kummer import normalize

JSON_SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _emit(args, payload, text):
    if args.output_format == "json":
        payload = {"schema": JSON_SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(args):
    from .params import load_params
    return load_params(args.params, validate=args.paranoid)


def _hexpoint(P):
    f = P[0].field
    return [f.to_hex(x) for x in P]


# ---------------------------------------------------------------- hash

def _hash_once(args, ps, msg_hex):
    from .kuhash import kuhash, message_from_hex
    msg = message_from_hex(msg_hex, ps.k)
    return kuhash(msg, ps, normalize=args.normalize, paranoid=args.paranoid,
                  reuse_inverses=args.reuse_inverses)


def _counter_dict(c):
    d = c.snapshot()
    d["headline"] = c.headline
    return d


def cmd_hash(args):
    ps = _load(args)
    if args.bench:
        # counts must not include audit work
        args.paranoid = False
        return _hash_bench(args, ps)
    if args.msg_hex is None:
        raise UsageError("hash: --msg-hex is required unless --bench is given")
    h = _hash_once(args, ps, args.msg_hex)
    _emit(args, {"params": ps.name, **h.as_dict()}, h.hex())
    return 0


def _hash_bench(args, ps):
    from .kuhash import kuhash
    rng = random.Random(args.seed)
    nbits = ps.message_bits
    counts = set()
    t0 = time.perf_counter()
    last = None
    for _ in range(args.trials):
        v = rng.getrandbits(nbits)
        with counting("base") as c:
            kuhash((v, nbits), ps, normalize=args.normalize, reuse_inverses=args.reuse_inverses)
        counts.add(c.headline)
        last = c
    dt = (time.perf_counter() - t0) / args.trials
    payload = {"params": ps.name, "trials": args.trials, "seconds_per_hash": dt,
               "uniform": len(counts) == 1, "counts_base": _counter_dict(last)}
    with counting() as ce:
        kuhash((0, nbits), ps, normalize=args.normalize, reuse_inverses=args.reuse_inverses)
    payload["counts_ext"] = _counter_dict(ce)
    text = "\n".join([
        f"params {ps.name}  k={ps.k}  ell={ps.ell}  backend={BACKEND}",
        f"F_p^2 ops  {ce.mul}M {ce.sqr}S {ce.add}a {ce.inv}I  xadd={ce.xadd} xdbl={ce.xdbl}",
        f"F_p ops    {last.mul}M {last.sqr}S {last.add}a {last.inv}I",
        f"headline (F_p M+S)  {last.headline}   uniform over {args.trials} messages: "
        f"{'yes' if len(counts) == 1 else 'NO'}",
        f"time  {dt * 1000:.1f} ms per hash",
    ])
    _emit(args, payload, text)
    return 0


# ---------------------------------------------------------------- chain

def cmd_chain(args):
    from .isogeny33 import compute_strategy, isogeny_33_chain, naive_strategy
    from .kuhash import HashInput, kernel_generators
    ps = _load(args)
    n = 3 ** ps.k
    if (args.scalars is None) == (args.msg_hex is None):
        raise UsageError("chain: give exactly one of --scalars and --msg-hex")
    if args.msg_hex is not None:
        from .kuhash import message_from_hex, parse_message
        inp = parse_message(message_from_hex(args.msg_hex, ps.k), ps.k)
        scal = [inp.alpha, inp.beta, inp.gamma]
    else:
        try:
            scal = [int(x, 0) % n for x in args.scalars.split(",")]
        except ValueError:
            raise UsageError(f"chain: --scalars {args.scalars!r} is not a list of integers") from None
        if len(scal) != 3:
            raise UsageError("chain: --scalars takes alpha,beta,gamma")
    strategy = {"shipped": ps.strategy, "optimal": compute_strategy(ps.k),
                "naive": naive_strategy(ps.k)}[args.strategy]
    with counting() as c:
        R, S = kernel_generators(HashInput(*scal), ps, args.reuse_inverses)
        O, _ = isogeny_33_chain(ps.k, ps.thetas, R, S, strategy, paranoid=args.paranoid)
    # projective output differs between strategies; print the representative with x1 = 1
    O = normalize(O)
    payload = {"params": ps.name, "scalars": scal, "strategy": args.strategy,
               "image_thetas": _hexpoint(O), "counts": _counter_dict(c)}
    _emit(args, payload, "".join(_hexpoint(O)))
    return 0


# ---------------------------------------------------------------- bench

def _primitive_rows(ps, rng):
    from . import isogeny33 as I3
    from .chain3dac import three_dac
    from .kummer import tripling_constants, xadd, xdbl
    F = ps.field
    O = ps.thetas
    TC = ps.tc
    P = ps.D_R[0]
    # order-3 kernel points from the shipped basis
    with uncounted():
        R, S = ps.D_R[0], ps.D_S[0]
        for _ in range(ps.k - 1):
            R, S = I3.tpl(R, TC), I3.tpl(S, TC)
        cs = I3.compute_33_coefficients(R, S, TC)
    ell = ps.ell
    b = rng.randrange(1 << (ell - 1), 1 << ell)
    g = rng.randrange(1 << (ell - 1), 1 << ell)
    rows = [
        ("tripling_constants", lambda: tripling_constants(O)),
        ("compute_33_coefficients", lambda: I3.compute_33_coefficients(R, S, TC)),
        ("isogeny_33_evaluate", lambda: I3.isogeny_33_evaluate(P, cs)),
        ("compute_image_thetas", lambda: I3.compute_image_thetas(cs, TC)),
        ("tpl", lambda: I3.tpl(P, TC)),
        ("xdbl", lambda: xdbl(P, TC)),
        ("xadd", lambda: xadd(P, ps.D_R[1], ps.D_R[5], TC)),
        ("three_dac", lambda: three_dac(ps.D_R, b, g, ell, TC)),
        ("field inversion", lambda: F.random_nonzero(rng).inv()),
    ]
    out = []
    for name, fn in rows:
        with counting() as c:
            fn()
        out.append((name, c))
    return out


def cmd_bench(args):
    from .kuhash import kuhash
    ps = _load(args)
    rng = random.Random(args.seed)
    rows = _primitive_rows(ps, rng)
    lines = [f"params {ps.name}  k={ps.k}  ell={ps.ell}  backend={BACKEND}", "",
             f"{'primitive':26s} {'F_p^2 ops':>20s}  {'xadd':>5s} {'xdbl':>5s}"]
    payload = {"params": ps.name, "primitives": {}}
    for name, c in rows:
        lines.append(f"{name:26s} {f'{c.mul}M {c.sqr}S {c.add}a':>20s}  {c.xadd:5d} {c.xdbl:5d}"
                     + (f"  ({c.inv}I)" if c.inv else ""))
        payload["primitives"][name] = _counter_dict(c)
    nbits = ps.message_bits
    lines.append("")
    for label, reuse in (("kuhash", False), ("kuhash, reused inverses", True)):
        heads = set()
        t0 = time.perf_counter()
        for _ in range(args.trials):
            with counting("base") as c:
                kuhash((rng.getrandbits(nbits), nbits), ps, reuse_inverses=reuse)
            heads.add(c.headline)
        dt = (time.perf_counter() - t0) / args.trials
        lines.append(f"{label:26s} headline {c.headline} F_p M+S  ({c.mul}M {c.sqr}S)  "
                     f"uniform={'yes' if len(heads) == 1 else 'NO'}  {dt * 1000:.1f} ms")
        payload["reuse_inverses" if reuse else "kuhash"] = {
            **_counter_dict(c), "uniform": len(heads) == 1, "seconds": dt}
    _emit(args, payload, "\n".join(lines))
    return 0


# ---------------------------------------------------------------- params

def cmd_params(args):
    from .params import load_params, validate_params
    ps = load_params(args.file, validate=False)
    if args.action == "validate":
        rep = validate_params(ps)
        payload = {"file": args.file, "ok": rep.ok,
                   "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in rep.checks]}
        _emit(args, payload, "\n".join(rep.lines() + ["OK" if rep.ok else "FAILED"]))
        return 0 if rep.ok else 1
    info = {
        "name": ps.name, "lambda": ps.security, "f": ps.f, "k": ps.k, "p": str(ps.p),
        "p_bits": ps.p.bit_length(), "ell": ps.ell, "message_bits": ps.message_bits,
        "message_hex_digits": -(-ps.message_bits // 4), "strategy_length": len(ps.strategy),
        "thetas": _hexpoint(ps.thetas),
    }
    text = "\n".join(f"{k:20s} {v}" for k, v in info.items() if k != "thetas")
    _emit(args, info, text)
    return 0


# ---------------------------------------------------------------- iso22

def cmd_iso22(args):
    from .isogeny22 import isogeny_22, parse_id
    ps = _load(args)
    ij = parse_id(args.id)
    _, O2 = isogeny_22(ps.thetas, ij)
    O2 = normalize(O2)
    payload = {"params": ps.name, "id": list(ij), "image_thetas": _hexpoint(O2)}
    _emit(args, payload, "".join(_hexpoint(O2)))
    return 0


# ---------------------------------------------------------------- selftest

def run_selftest():
    """(name, ok) pairs from the embedded toy fixture."""
    from . import isogeny33 as I3
    from .chain3dac import three_dac, three_dac_mod
    from .kuhash import kuhash, message_from_hex
    from .kummer import KummerPoint, ladder, proj_equal
    from .params import load_params
    doc = json.loads((resources.files("fastkummer") / "data" / "selftest.json").read_text())
    ps = load_params(doc["name"])
    F = ps.field
    TC = ps.tc

    def pt(xs):
        return KummerPoint(F.from_hex(x) for x in xs)

    res = [("parameter set validates", True)]
    res.append(("ladder", all(proj_equal(ladder(e["n"], pt(e["point"]), TC), pt(e["result"]))
                              for e in doc["ladder"])))
    res.append(("three_dac", all(proj_equal(three_dac(ps.D_R, e["beta"], e["gamma"], ps.ell, TC),
                                            pt(e["R"])) for e in doc["three_dac"])))
    res.append(("three_dac_mod", all(proj_equal(three_dac_mod(ps.D_S, e["beta"], e["gamma"], ps.k, TC),
                                                pt(e["S"])) for e in doc["three_dac_mod"])))
    st = doc["step"]
    cs = I3.compute_33_coefficients(pt(st["R"]), pt(st["S"]), TC)
    res.append(("(3,3) step", proj_equal(I3.compute_image_thetas(cs, TC), pt(st["image_thetas"]))
                and all(proj_equal(I3.isogeny_33_evaluate(pt(a), cs), pt(b))
                        for a, b in zip(st["points"], st["images"]))))
    ok = True
    for e in doc["kuhash"]:
        h = kuhash(message_from_hex(e["msg_hex"], ps.k), ps, normalize=True)
        ok &= [F.to_hex(x) for x in h.normalized] == e["normalized"]
    res.append(("kuhash digests", ok))
    return res


def cmd_selftest(args):
    res = run_selftest()
    ok = all(r[1] for r in res)
    payload = {"ok": ok, "backend": BACKEND, "checks": [{"name": n, "ok": o} for n, o in res]}
    text = "\n".join([f"{'PASS' if o else 'FAIL'}  {n}" for n, o in res]
                     + [f"backend {BACKEND}: {'OK' if ok else 'FAILED'}"])
    _emit(args, payload, text)
    return 0 if ok else 1


# ---------------------------------------------------------------- parser

def _shared():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--params", default="toy3", help="parameter file or shipped set name")
    p.add_argument("--output-format", choices=("hex", "json"), default="hex")
    p.add_argument("--paranoid", action="store_true",
                   help="validate parameters and check kernel orders (not counted)")
    return p


def _hash_args(p):
    p.add_argument("--msg-hex", help="message, ceil(3*ell/4) hex digits")
    p.add_argument("--normalize", action="store_true", help="output (a/d, b/d, c/d)")
    p.add_argument("--bench", action="store_true", help="report operation counts")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--reuse-inverses", action="store_true",
                   help="invert kernel-tuple differences once per chain")


def build_parser():
    sh = _shared()
    ap = _Parser(prog="fastkummer", description="Fast Kummer surface isogenies and KuHash.")
    ap.add_argument("--version", action="version", version=f"fastkummer {__version__}")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    for name in ("hash", "kuhash"):
        p = sub.add_parser(name, parents=[sh], help="hash a message")
        _hash_args(p)
        p.set_defaults(func=cmd_hash)
    p = sub.add_parser("chain", parents=[sh], help="(3^k,3^k)-isogeny from kernel scalars")
    p.add_argument("--scalars", help="alpha,beta,gamma (reduced mod 3^k)")
    p.add_argument("--msg-hex", help="take the scalars from a message instead")
    p.add_argument("--strategy", choices=("shipped", "optimal", "naive"), default="shipped")
    p.add_argument("--reuse-inverses", action="store_true")
    p.set_defaults(func=cmd_chain)
    p = sub.add_parser("bench", parents=[sh], help="per-primitive and end-to-end op counts")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    p = sub.add_parser("params", parents=[sh], help="inspect parameter files")
    p.add_argument("action", choices=("validate", "info"))
    p.add_argument("file")
    p.set_defaults(func=cmd_params)
    p = sub.add_parser("iso22", parents=[sh], help="image thetas of a (2,2)-isogeny")
    p.add_argument("--id", required=True, help="subgroup id i,j")
    p.set_defaults(func=cmd_iso22)
    p = sub.add_parser("selftest", parents=[sh], help="run the embedded fixture checks")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(str(e).rstrip(), file=sys.stderr)
        return 2
    except KummerError as e:
        print(f"error [{_raising_module(e)}] {type(e).__name__}: {e}", file=sys.stderr)
        return 1


def _raising_module(e):
    """Innermost package module in the traceback, e.g. fastkummer.kuhash."""
    mod = "fastkummer"
    tb = e.__traceback__
    while tb is not None:
        name = tb.tb_frame.f_globals.get("__name__", "")
        if name.startswith("fastkummer.") and name != __name__:
            mod = name
        tb = tb.tb_next
    return mod


def kuhash_main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    return main(["hash", *argv])


if __name__ == "__main__":
    sys.exit(main())
