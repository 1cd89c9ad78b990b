"""
Executable checks of the Boole polynomial identities.

Every exact check compares canonical polynomials in x (or exact rationals)
for literal equality. p-adic checks compare residues. Each check returns a
list of ``VerificationCase``; ``verify_all`` runs the configured grids and
assembles a ``VerificationReport`` in canonical order.

Identity ids:
    eq2              I(f(y+1)) = -I(f) + 2 f(0)
    thm1             I((x + lambda y)_n) = 2 Bl_n(x|lambda), exact and p-adic
    witt             Witt-type congruences for both kinds and order k
    thm2             sum_n Bl_n(x|lambda) S2(m,n) = lambda^m E_m(x/lambda) / 2
    remark           2 Bl_n(x|lambda) = sum_l S1(n,l) lambda^l E_l(x/lambda)
    eq12             order-k form of the remark
    thm3             sum_n Bl_n^{(k)} S2(m,n) = lambda^m E_m^{(k)}(x/lambda) / 2^k
    thm4a / thm4b    second kind: Stirling transform / Euler expansion
    thm5a / thm5b    second kind of order k: the same two identities
    thm6a            (-1)^n Bl_n(x)/n! = sum_m C(n-1,m-1) B^l_m(-x)/m!
    thm6b_printed    mirror identity with n! in the sum (known to fail)
    thm6b_corrected  mirror identity with m! in the sum
"""

from __future__ import annotations

import logging
import random
import time
from fractions import Fraction
from math import comb, factorial
from typing import Any, Callable, Dict, List, Optional, Union

try:  # package import
    from .boole import BooleKind, BooleParams, boole_polys_gf
    from .config import GridConfig
    from .errors import BooleWittError, ZeroLambda
    from .euler import euler_polys, integrate_poly
    from .padic import PadicContext, fermionic_sum, witt_check, witt_integrand
    from .polynomial import Poly, RationalLike, as_rational, poly_eval, poly_shift, rational_to_str
    from .records import VerificationCase, VerificationReport
    from .stirling import stirling1, stirling2
    from .validator import EXPECTED_FAIL_IDENTITIES, IDENTITY_ORDER
except ImportError:  # script import fallback
    from boole import BooleKind, BooleParams, boole_polys_gf  # type: ignore
    from config import GridConfig  # type: ignore
    from errors import BooleWittError, ZeroLambda  # type: ignore
    from euler import euler_polys, integrate_poly  # type: ignore
    from padic import PadicContext, fermionic_sum, witt_check, witt_integrand  # type: ignore
    from polynomial import Poly, RationalLike, as_rational, poly_eval, poly_shift, rational_to_str  # type: ignore
    from records import VerificationCase, VerificationReport  # type: ignore
    from stirling import stirling1, stirling2  # type: ignore
    from validator import EXPECTED_FAIL_IDENTITIES, IDENTITY_ORDER  # type: ignore

__all__ = [
    "random_poly",
    "verify_eq2",
    "verify_thm1",
    "verify_witt",
    "verify_thm2",
    "verify_remark",
    "verify_eq12",
    "verify_thm3",
    "verify_thm4",
    "verify_thm5",
    "verify_thm6",
    "verify_all",
    "REPORT_HEADER",
]

logger = logging.getLogger(__name__)

REPORT_HEADER: Dict[str, str] = {
    "thm2_argument_order": "thm2 is read with arguments (x|lambda), the order every other identity uses",
    "remark_upper_limit": "remark sums over l = 0..n; S1(n,l) = 0 for l > n",
    "thm6b_denominator": "the mirror identity is checked with n! (thm6b_printed, expected to fail) and with m! (thm6b_corrected)",
    "exactness": "exact identities compare polynomials in x coefficientwise; p-adic identities compare residues",
}

Value = Union[Poly, Fraction]


def _compare(identity_id: str, params: Dict[str, Any], lhs: Value, rhs: Value) -> VerificationCase:
    if lhs == rhs:
        return VerificationCase(identity_id, params, "pass")
    message = None
    if isinstance(lhs, Poly) and isinstance(rhs, Poly):
        top = max(len(lhs.coeffs), len(rhs.coeffs))
        i = next(i for i in range(top) if lhs.coefficient(i) != rhs.coefficient(i))
        message = (
            f"coefficient of x^{i}: {rational_to_str(lhs.coefficient(i))} != {rational_to_str(rhs.coefficient(i))}"
        )
    logger.debug("%s failed at %s", identity_id, params)
    return VerificationCase(identity_id, params, "fail", witness=(lhs, rhs), message=message)


def _require_lambda(lam: Fraction) -> None:
    if lam == 0:
        raise ZeroLambda()


def _boole(lam: Fraction, kind: BooleKind, k: int, max_n: int):
    return boole_polys_gf(BooleParams(lam, kind, k), max_n)


def _euler_at(k: int, l: int, scale: Fraction, shift: Fraction = Fraction(0)) -> Poly:
    """E_l^{(k)}(shift + scale*x) as a polynomial in x."""
    return euler_polys(k, l).polys[l].compose_linear(scale, shift)


def random_poly(rng: random.Random, degree: int) -> Poly:
    """Random polynomial of degree <= degree; denominators are powers of 2, so p-integral for odd p."""
    d = rng.randint(0, degree)
    return Poly(Fraction(rng.randint(-9, 9), rng.choice((1, 2, 4))) for _ in range(d + 1))


# --- functional equation ---

def verify_eq2(
    samples: int,
    degree: int,
    seed: int,
    primes: Optional[List[int]] = None,
    levels: Optional[List[int]] = None,
) -> List[VerificationCase]:
    """
    Functional equation on seeded random polynomials: exactly through the
    Euler-number moments, and modulo p^N on the truncated sums.
    """
    rng = random.Random(seed)
    polys = [random_poly(rng, degree) for _ in range(samples)]
    cases = []
    for i, f in enumerate(polys):
        lhs = integrate_poly(poly_shift(f, 1))
        rhs = -integrate_poly(f) + 2 * poly_eval(f, 0)
        cases.append(_compare("eq2", {"route": "exact", "sample": i, "seed": seed}, lhs, rhs))
    for p in primes or []:
        for N in levels or []:
            ctx = PadicContext(p, N)
            for i, f in enumerate(polys):
                total = fermionic_sum(poly_shift(f, 1), ctx, N) + fermionic_sum(f, ctx, N)
                expected = ctx(2 * poly_eval(f, 0))
                params = {"route": "padic", "sample": i, "seed": seed, "p": p, "N": N}
                cases.append(_compare("eq2", params, Fraction(total.residue), Fraction(expected.residue)))
    return cases


# --- fermionic integral of falling factorials, Witt-type formulas ---

def verify_thm1(
    lam: RationalLike,
    x: RationalLike,
    n_max: int,
    ctx: Optional[PadicContext] = None,
    N: Optional[int] = None,
    slack: int = 0,
    exact: bool = True,
) -> List[VerificationCase]:
    """
    I((x + lambda y)_n) = 2 Bl_n(x|lambda) for n = 0..n_max, exactly (unless
    exact=False); and as a congruence mod p^N when a context and level are given.
    """
    lam, x = as_rational(lam), as_rational(x)
    seq = _boole(lam, BooleKind.FIRST, 1, max(n_max, 0))
    cases = []
    for n in range(n_max + 1 if exact else 0):
        lhs = integrate_poly(witt_integrand(BooleKind.FIRST, n, lam, x))
        rhs = 2 * poly_eval(seq.polys[n], x)
        cases.append(_compare("thm1", {"route": "exact", "lambda": lam, "x": x, "n": n}, lhs, rhs))
    if ctx is not None and N is not None:
        for n in range(n_max + 1):
            report = witt_check(BooleKind.FIRST, 1, n, lam, x, ctx, N, slack)
            params = {"route": "padic", "lambda": lam, "x": x, "n": n, "p": ctx.p, "N": N}
            cases.append(_compare("thm1", params, Fraction(report.lhs_residue), Fraction(report.rhs_residue)))
    return cases


def verify_witt(
    kind: Union[BooleKind, str],
    k: int,
    lam: RationalLike,
    x: RationalLike,
    n_max: int,
    ctx: PadicContext,
    N: int,
    slack: int = 0,
) -> List[VerificationCase]:
    """Witt-type congruences of either kind and any order, n = 0..n_max."""
    kind = BooleKind(kind)
    cases = []
    for n in range(n_max + 1):
        report = witt_check(kind, k, n, lam, x, ctx, N, slack)
        params = {
            "kind": kind.value, "k": k, "lambda": report.lam, "x": report.x,
            "n": n, "p": ctx.p, "N": N,
        }
        cases.append(_compare("witt", params, Fraction(report.lhs_residue), Fraction(report.rhs_residue)))
    return cases


# --- Stirling transforms and Euler expansions ---

def _stirling_transform(seq, m: int) -> Poly:
    acc = Poly()
    for n in range(m + 1):
        acc = acc + seq.polys[n] * stirling2(m, n)
    return acc


def _euler_expansion(k: int, n: int, lam: Fraction, kind: BooleKind) -> Poly:
    """sum_l S1(n,l) lambda^l E_l^{(k)}(x/lambda), or its second-kind sign variant."""
    acc = Poly()
    for l in range(n + 1):
        if kind is BooleKind.FIRST:
            term = _euler_at(k, l, 1 / lam) * lam ** l
        else:
            term = _euler_at(k, l, -1 / lam) * (-lam) ** l
        acc = acc + term * stirling1(n, l)
    return acc


def verify_thm2(lam: RationalLike, m_max: int) -> List[VerificationCase]:
    """sum_{n<=m} Bl_n(x|lambda) S2(m,n) = (1/2) lambda^m E_m(x/lambda)."""
    lam = as_rational(lam)
    _require_lambda(lam)
    seq = _boole(lam, BooleKind.FIRST, 1, max(m_max, 0))
    return [
        _compare(
            "thm2", {"lambda": lam, "m": m},
            _stirling_transform(seq, m),
            _euler_at(1, m, 1 / lam) * (lam ** m / 2),
        )
        for m in range(m_max + 1)
    ]


def verify_remark(lam: RationalLike, n_max: int) -> List[VerificationCase]:
    """2 Bl_n(x|lambda) = sum_{l<=n} S1(n,l) lambda^l E_l(x/lambda)."""
    lam = as_rational(lam)
    _require_lambda(lam)
    seq = _boole(lam, BooleKind.FIRST, 1, max(n_max, 0))
    return [
        _compare("remark", {"lambda": lam, "n": n}, seq.polys[n] * 2, _euler_expansion(1, n, lam, BooleKind.FIRST))
        for n in range(n_max + 1)
    ]


def verify_eq12(lam: RationalLike, k_max: int, n_max: int) -> List[VerificationCase]:
    """2^k Bl_n^{(k)}(x|lambda) = sum_{l<=n} S1(n,l) lambda^l E_l^{(k)}(x/lambda)."""
    lam = as_rational(lam)
    _require_lambda(lam)
    cases = []
    for k in range(1, k_max + 1):
        seq = _boole(lam, BooleKind.FIRST, k, max(n_max, 0))
        for n in range(n_max + 1):
            cases.append(_compare(
                "eq12", {"lambda": lam, "k": k, "n": n},
                seq.polys[n] * 2 ** k, _euler_expansion(k, n, lam, BooleKind.FIRST),
            ))
    return cases


def verify_thm3(lam: RationalLike, k_max: int, m_max: int) -> List[VerificationCase]:
    """sum_{n<=m} Bl_n^{(k)}(x|lambda) S2(m,n) = lambda^m E_m^{(k)}(x/lambda) / 2^k."""
    lam = as_rational(lam)
    _require_lambda(lam)
    cases = []
    for k in range(1, k_max + 1):
        seq = _boole(lam, BooleKind.FIRST, k, max(m_max, 0))
        for m in range(m_max + 1):
            cases.append(_compare(
                "thm3", {"lambda": lam, "k": k, "m": m},
                _stirling_transform(seq, m),
                _euler_at(k, m, 1 / lam) * (lam ** m / 2 ** k),
            ))
    return cases


def _second_kind_cases(lam: Fraction, k: int, m_max: int, ids: tuple) -> List[VerificationCase]:
    transform_id, expansion_id = ids
    seq = _boole(lam, BooleKind.SECOND, k, max(m_max, 0))
    params_base: Dict[str, Any] = {"lambda": lam}
    if transform_id == "thm5a":
        params_base["k"] = k
    cases = []
    for m in range(m_max + 1):
        # lambda^m / 2^k E_m^{(k)}(k + x/lambda)
        rhs = _euler_at(k, m, 1 / lam, Fraction(k)) * (lam ** m / 2 ** k)
        cases.append(_compare(transform_id, {**params_base, "m": m}, rhs, _stirling_transform(seq, m)))
    for m in range(m_max + 1):
        expansion = _euler_expansion(k, m, lam, BooleKind.SECOND) / 2 ** k
        cases.append(_compare(expansion_id, {**params_base, "m": m}, seq.polys[m], expansion))
    return cases


def verify_thm4(lam: RationalLike, m_max: int) -> List[VerificationCase]:
    """
    thm4a: (lambda^m / 2) E_m((lambda + x)/lambda) = sum_n B^l_n(x|lambda) S2(m,n)
    thm4b: B^l_m(x|lambda) = sum_l S1(m,l) (-1)^l (lambda^l / 2) E_l(-x/lambda)
    """
    lam = as_rational(lam)
    _require_lambda(lam)
    return _second_kind_cases(lam, 1, m_max, ("thm4a", "thm4b"))


def verify_thm5(lam: RationalLike, k_max: int, m_max: int) -> List[VerificationCase]:
    """Order-k versions of thm4a/thm4b (ids thm5a/thm5b)."""
    lam = as_rational(lam)
    _require_lambda(lam)
    cases = []
    for k in range(1, k_max + 1):
        cases.extend(_second_kind_cases(lam, k, m_max, ("thm5a", "thm5b")))
    return cases


def verify_thm6(lam: RationalLike, n_max: int) -> List[VerificationCase]:
    """
    thm6a: (-1)^n Bl_n(x|lambda)/n! = sum_{m=1}^n C(n-1,m-1) B^l_m(-x|lambda)/m!
    mirror (-1)^n B^l_n(x|lambda)/n! = sum_{m=1}^n C(n-1,m-1) Bl_m(-x|lambda)/d
    with d = n! (thm6b_printed) and d = m! (thm6b_corrected).

    Uses the gf route only, so lambda = 0 is accepted.
    """
    lam = as_rational(lam)
    top = max(n_max, 0)
    first = _boole(lam, BooleKind.FIRST, 1, top)
    second = _boole(lam, BooleKind.SECOND, 1, top)
    first_neg = [p.scale_arg(-1) for p in first.polys]
    second_neg = [p.scale_arg(-1) for p in second.polys]
    cases = []
    for n in range(1, n_max + 1):
        sign = (-1) ** n
        params = {"lambda": lam, "n": n}

        rhs_a = Poly()
        rhs_printed = Poly()
        rhs_corrected = Poly()
        for m in range(1, n + 1):
            c = comb(n - 1, m - 1)
            rhs_a = rhs_a + second_neg[m] * Fraction(c, factorial(m))
            rhs_printed = rhs_printed + first_neg[m] * Fraction(c, factorial(n))
            rhs_corrected = rhs_corrected + first_neg[m] * Fraction(c, factorial(m))

        cases.append(_compare("thm6a", params, first.polys[n] * Fraction(sign, factorial(n)), rhs_a))
        mirror_lhs = second.polys[n] * Fraction(sign, factorial(n))
        cases.append(_compare("thm6b_printed", params, mirror_lhs, rhs_printed))
        cases.append(_compare("thm6b_corrected", params, mirror_lhs, rhs_corrected))
    return cases


# --- harness ---

def _guard(identity_id: str, params: Dict[str, Any], check: Callable[[], List[VerificationCase]]) -> List[VerificationCase]:
    """Run a check; a domain error becomes a single error case instead of aborting the run."""
    try:
        return check()
    except BooleWittError as exc:
        logger.warning("%s errored at %s: %s", identity_id, params, exc)
        return [VerificationCase(identity_id, params, "error", message=f"{type(exc).__name__}: {exc}")]


def _padic_jobs(config: GridConfig):
    for p in config.primes:
        for N in config.levels:
            for lam in config.padic_lambdas:
                for x in config.padic_xs:
                    yield p, N, lam, x


def verify_all(config: Optional[GridConfig] = None) -> VerificationReport:
    """Run every selected identity over the configured grids."""
    config = GridConfig() if config is None else config
    started = time.perf_counter()
    cases: List[VerificationCase] = []
    sel = config.selects

    if sel("eq2") and config.eq2_samples > 0:
        cases += _guard("eq2", {"seed": config.seed}, lambda: verify_eq2(
            config.eq2_samples, config.eq2_degree, config.seed, config.primes, config.levels))

    if sel("thm1"):
        for lam in config.lambdas:
            for x in config.thm1_xs:
                cases += _guard("thm1", {"lambda": lam, "x": x}, lambda: verify_thm1(lam, x, config.n_max))
        for p, N, lam, x in _padic_jobs(config):
            params = {"route": "padic", "lambda": lam, "x": x, "p": p, "N": N}
            cases += _guard("thm1", params, lambda: verify_thm1(
                lam, x, config.padic_n_max, PadicContext(p, N), N, config.slack, exact=False))

    if sel("witt"):
        for p, N, lam, x in _padic_jobs(config):
            for kind in (BooleKind.FIRST, BooleKind.SECOND):
                for k in range(1, config.padic_k_max + 1):
                    if kind is BooleKind.FIRST and k == 1:
                        continue  # covered by thm1
                    params = {"kind": kind.value, "k": k, "lambda": lam, "x": x, "p": p, "N": N}
                    cases += _guard("witt", params, lambda: verify_witt(
                        kind, k, lam, x, config.padic_n_max, PadicContext(p, N), N, config.slack))

    per_lambda = [
        ("thm2", lambda lam: verify_thm2(lam, config.n_max)),
        ("remark", lambda lam: verify_remark(lam, config.n_max)),
        ("eq12", lambda lam: verify_eq12(lam, config.k_max, config.n_max)),
        ("thm3", lambda lam: verify_thm3(lam, config.k_max, config.n_max)),
        ("thm4", lambda lam: verify_thm4(lam, config.n_max)),
        ("thm5", lambda lam: verify_thm5(lam, config.k_max, config.n_max)),
        ("thm6", lambda lam: verify_thm6(lam, config.n_max)),
    ]
    for group, run in per_lambda:
        members = [i for i in IDENTITY_ORDER if i == group or (i.startswith(group) and not i[len(group)].isdigit())]
        wanted = [i for i in members if sel(i)]
        if not wanted:
            continue
        for lam in config.lambdas:
            produced = _guard(members[0], {"lambda": lam}, lambda: run(lam))
            if produced and produced[0].status == "error":
                # one error case per requested member id
                err = produced[0]
                cases += [VerificationCase(i, dict(err.parameters), "error", message=err.message) for i in wanted]
                continue
            cases += [c for c in produced if c.identity_id in wanted]

    report = VerificationReport(cases=cases, header=dict(REPORT_HEADER)).sorted()
    for ident, counts in report.summary.items():
        if not any(counts.values()):
            continue
        logger.info("%s: %s", ident, counts)
        bad = counts["fail"] + counts["error"]
        if bad and ident in EXPECTED_FAIL_IDENTITIES:
            logger.warning("%s: %d expected failure(s)", ident, bad)
        elif bad:
            logger.warning("%s: %d failing case(s)", ident, bad)
    logger.info("verified %d cases in %.2fs", len(report.cases), time.perf_counter() - started)
    return report
