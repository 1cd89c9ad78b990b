"""
End-to-end walkthrough.

Works when executed either as a module
    python -m boole_witt.src.demo
or directly as a script
    python boole_witt/src/demo.py

Imports are resolved through the package name in script mode so the
relative imports inside the modules keep working.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

if __package__ is None or __package__ == "":
    import importlib

    _SRC_DIR = os.path.dirname(os.path.abspath(__file__))
    _PKG_ROOT = os.path.dirname(_SRC_DIR)
    _PARENT = os.path.dirname(_PKG_ROOT)
    if _PARENT not in sys.path:
        sys.path.insert(0, _PARENT)
    _PKG = "boole_witt.src"

    boole = importlib.import_module(f"{_PKG}.boole")  # type: ignore
    euler = importlib.import_module(f"{_PKG}.euler")  # type: ignore
    padic = importlib.import_module(f"{_PKG}.padic")  # type: ignore
    stirling = importlib.import_module(f"{_PKG}.stirling")  # type: ignore
    verify = importlib.import_module(f"{_PKG}.verify")  # type: ignore
    config = importlib.import_module(f"{_PKG}.config")  # type: ignore
else:
    from . import boole, config, euler, padic, stirling, verify


def main():
    print("=== Euler polynomials E_n(x), n <= 4 ===")
    for n, p in enumerate(euler.euler_polys(1, 4).polys):
        print(f"E_{n}(x) = {p}")
    print()

    lam = Fraction(2)
    params = boole.BooleParams(lam)
    print(f"=== Boole polynomials Bl_n(x|{lam}), n <= 4 ===")
    gf_route = boole.boole_polys(params, 4, route="gf")
    euler_route = boole.boole_polys(params, 4, route="euler")
    for n, p in enumerate(gf_route.polys):
        print(f"Bl_{n}(x|{lam}) = {p}")
    print("generating-function and Stirling/Euler routes agree:", gf_route.polys == euler_route.polys)
    print()

    print("=== Boole polynomials of the second kind, order 2, as JSON ===")
    second = boole.boole_polys(boole.BooleParams(lam, boole.BooleKind.SECOND, 2), 3)
    print(json.dumps(second.to_json(), indent=2))
    print()

    print("=== Changhee polynomials Ch_n(x), n <= 3 ===")
    for n, p in enumerate(boole.changhee_polys(3)):
        print(f"Ch_{n}(x) = {p}")
    print()

    print("=== Stirling numbers of the first kind, n <= 5 ===")
    table = stirling.stirling_table("s1", 5)
    for row in table.values:
        print(" ".join(f"{v:>5}" for v in row))
    print()

    print("=== Witt-type congruences, p = 3, lambda = 1, x = 0 ===")
    for N in (1, 2, 3):
        ctx = padic.PadicContext(3, N)
        for n in range(4):
            report = padic.witt_check("first", 1, n, 1, 0, ctx, N)
            mark = "ok" if report.agree else "MISMATCH"
            print(f"N={N} n={n}: {report.lhs_residue} vs {report.rhs_residue} mod {report.modulus} {mark}")
    print()

    print("=== Identity verification (reduced grids) ===")
    grids = config.GridConfig(lambdas=[Fraction(1), Fraction(1, 2)], n_max=6, k_max=2, levels=[1, 2], primes=[3, 5])
    report = verify.verify_all(grids)
    summary = report.summary_frame()
    print(summary[summary.sum(axis=1) > 0].to_string())
    failing = report.failures(include_expected=True)
    print(f"\n{len(report.cases)} cases, {len(failing)} failing ({len(report.failures())} unexpected)")
    for case in failing[:3]:
        print(f"- {case.identity_id} {case.to_json()['parameters']}: {case.message}")


if __name__ == "__main__":
    main()
