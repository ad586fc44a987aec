"""Time the compiled and pure-Python F_{p^2} backends on the same workloads.

    python3 tools/bench_backends.py [--params lambda128] [--repeat 3]

Each backend runs in its own interpreter (FASTKUMMER_BACKEND selects it at
import), so the two never share a module cache.
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from fastkummer.field import BACKEND
from fastkummer.params import load_params
from fastkummer.kuhash import kuhash
from fastkummer import isogeny33 as I3
from fastkummer.kummer import xadd, xdbl

ps = load_params(sys.argv[1], validate=False)
repeat = int(sys.argv[2])
rng = random.Random(0)
F, TC = ps.field, ps.tc
x, y = F.random_nonzero(rng), F.random_nonzero(rng)
P, Q, D = ps.D_R[0], ps.D_R[1], ps.D_R[5]

def best(fn, n):
    out = []
    for _ in range(repeat):
        t = time.perf_counter()
        for _ in range(n):
            fn()
        out.append((time.perf_counter() - t) / n)
    return min(out)

nbits = ps.message_bits
res = {
    "backend": BACKEND,
    "mul": best(lambda: x * y, 20000),
    "sqr": best(lambda: x.sqr(), 20000),
    "inv": best(lambda: x.inv(), 500),
    "xdbl": best(lambda: xdbl(P, TC), 500),
    "xadd": best(lambda: xadd(P, Q, D, TC), 500),
    "tpl": best(lambda: I3.tpl(P, TC), 500),
    "kuhash": best(lambda: kuhash((rng.getrandbits(nbits), nbits), ps), 2),
}
print(json.dumps(res))
"""


def run(backend, params, repeat):
    env = dict(os.environ, FASTKUMMER_BACKEND=backend)
    r = subprocess.run([sys.executable, "-c", WORKER, params, str(repeat)], env=env,
                       capture_output=True, text=True)
    if r.returncode != 0:
        raise SystemExit(f"{backend} backend failed:\n{r.stderr}")
    return json.loads(r.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--params", default="lambda128")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    fast = run("cython", args.params, args.repeat)
    slow = run("python", args.params, args.repeat)
    if args.json:
        print(json.dumps({"cython": fast, "python": slow}, indent=2))
        return 0
    print(f"params {args.params}, best of {args.repeat}")
    print(f"{'op':8s} {'cython':>12s} {'python':>12s} {'speedup':>8s}")
    for key in ("mul", "sqr", "inv", "xdbl", "xadd", "tpl", "kuhash"):
        a, b = fast[key], slow[key]
        print(f"{key:8s} {a * 1e6:10.2f}us {b * 1e6:10.2f}us {b / a:7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
