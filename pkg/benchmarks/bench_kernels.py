"""Compare the compiled and pure-Python polynomial kernels on one workload.

Each backend runs in its own interpreter, because the choice is made at
import time.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import timeit

WORKLOAD = {
    "poly_mul": "p * q",
    "poly_pow": "(p + q) ** 4",
    "rf_add": "r + s",
    "eval": "big.evaluate(point)",
    "tau_order": "order(tau)",
    "psi_pullback": "pullback(fx.psi, fx.target_form)",
    "jacobian_4x4": "jacobian_det(fxp.phi)",
}

SETUP = """
from fractions import Fraction
from birvol.exact import Polynomial, RationalFunction, variables
from birvol.logform import pullback
from birvol.ratmap import cluster_tau, jacobian_det, order
from birvol.scenario.fixtures import (cubic_boundary_samples, phi_fixture, psi_fixture,
                                      quartic_boundary_samples)
x, y, z, w = variables(4)
p = (x + 2 * y - z + 3) ** 3
q = (x * y - z * w + Fraction(1, 2)) ** 3
big = (p * q) ** 2
point = [Fraction(3, 2), -2, 5, Fraction(-1, 3)]
r = RationalFunction(p, q + 1)
s = RationalFunction(q, p - 1)
tau = cluster_tau()
fx = psi_fixture(cubic_boundary_samples()[1])
fxp = phi_fixture(quartic_boundary_samples()[1])
"""


def child(repeat: int) -> dict:
    from birvol.exact import BACKEND

    out = {"backend": BACKEND, "timings_ms": {}}
    for name, stmt in WORKLOAD.items():
        t = timeit.Timer(stmt, setup=SETUP)
        number, _ = t.autorange()
        best = min(t.repeat(repeat=repeat, number=number)) / number
        out["timings_ms"][name] = best * 1000.0
    return out


def run_backend(pure: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("BIRVOL_PURE_PYTHON", None)
    if pure:
        env["BIRVOL_PURE_PYTHON"] = "1"
    cmd = [sys.executable, __file__, "--child", "--repeat", str(repeat)]
    res = subprocess.run(cmd, env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)
    if args.child:
        print(json.dumps(child(args.repeat)))
        return 0
    compiled = run_backend(False, args.repeat)
    pure = run_backend(True, args.repeat)
    if args.json:
        print(json.dumps({"compiled": compiled, "pure": pure}, indent=2))
        return 0
    if compiled["backend"] != "cython":
        print("note: the compiled extension is not built; both runs use the Python kernels")
    print(f"{'workload':14} {compiled['backend']:>12} {pure['backend']:>12} {'speedup':>8}")
    for name in WORKLOAD:
        a, b = compiled["timings_ms"][name], pure["timings_ms"][name]
        print(f"{name:14} {a:10.3f}ms {b:10.3f}ms {b / a:7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
