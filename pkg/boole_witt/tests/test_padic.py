import random
from fractions import Fraction as F

import numpy as np
import pytest

from boole_witt.src.boole import BooleKind
from boole_witt.src.errors import BudgetExceeded, DenominatorNotUnit, InvalidParameter
from boole_witt.src.padic import (
    PadicContext,
    PadicInt,
    embed_rational,
    extended_gcd,
    fermionic_sum,
    fermionic_sum_multi,
    inverse_mod,
    sum_cost,
    witt_check,
    witt_integrand,
)
from boole_witt.src.polynomial import Poly, poly_shift


def test_extended_gcd_and_inverse():
    g, s, t = extended_gcd(240, 46)
    assert g == 2 and s * 240 + t * 46 == 2
    assert inverse_mod(2, 9) == 5
    with pytest.raises(ValueError):
        inverse_mod(3, 9)


def test_context_validation():
    with pytest.raises(InvalidParameter, match="p must be an odd prime"):
        PadicContext(4, 2)
    with pytest.raises(InvalidParameter):
        PadicContext(2, 2)
    with pytest.raises(InvalidParameter):
        PadicContext(5, 0)
    assert PadicContext(5, 3).modulus == 125


def test_embedding_and_arithmetic():
    ctx = PadicContext(5, 3)
    half = ctx(F(1, 2))
    assert half.residue == 63
    assert (half * 2).residue == 1
    assert (half + half).residue == 1
    assert (1 - half).residue == half.residue
    assert (ctx(3) / ctx(7) * 7).residue == 3
    with pytest.raises(DenominatorNotUnit):
        embed_rational(F(1, 5), ctx)


def test_valuation_and_norm():
    ctx = PadicContext(5, 3)
    assert ctx(25).valuation() == 2
    assert ctx(25).norm() == F(1, 25)
    assert ctx(7).is_unit()
    assert PadicInt(ctx, 0).valuation() == 3
    with pytest.raises(ZeroDivisionError):
        ctx(10).inverse()


def test_single_sum_small_cases():
    ctx = PadicContext(3, 2)
    # 0 - 1 + 2 - 3 + ... + 8 = 4
    assert fermionic_sum(Poly.x(), ctx, 2).residue == 4
    # the alternating count over an odd range is 1
    assert fermionic_sum(Poly.constant(1), ctx, 2).residue == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_multi_sum_matches_brute_force(k):
    ctx = PadicContext(3, 3)
    f = Poly((1, -2, 0, 1))
    expected = 0
    width = 3
    for idx in np.ndindex(*([width] * k)):
        s = sum(idx)
        expected += (-1) ** s * int(f(s))
    assert fermionic_sum_multi(f, k, ctx, 1).residue == expected % ctx.modulus


def test_functional_equation_mod_p_power():
    ctx = PadicContext(5, 2)
    f = Poly((F(1, 2), 3, F(-1, 4), 2))
    total = fermionic_sum(poly_shift(f, 1), ctx, 2) + fermionic_sum(f, ctx, 2)
    assert total.residue == ctx(2 * f(0)).residue


def test_budget(small_budget):
    ctx = PadicContext(3, 2)
    assert sum_cost(3, 2, 2) == 81 + 17
    with pytest.raises(BudgetExceeded) as ei:
        fermionic_sum_multi(Poly.constant(1), 2, ctx, 2)
    assert ei.value.budget == small_budget
    # an explicit budget wins over the environment
    fermionic_sum_multi(Poly.constant(1), 2, ctx, 2, budget=10 ** 6)


def test_level_must_be_positive():
    with pytest.raises(InvalidParameter):
        fermionic_sum_multi(Poly.x(), 1, PadicContext(3, 2), 0)


def test_witt_integrand():
    # (x - 2s)_2 at x = 1: (1 - 2s)(-2s) = 4s^2 - 2s
    assert witt_integrand(BooleKind.SECOND, 2, 2, 1) == Poly((0, -2, 4))
    assert witt_integrand("first", 0, 5, 3) == Poly.constant(1)


def test_witt_check_examples():
    report = witt_check("first", 1, 1, 1, 0, PadicContext(3, 2), 2)
    assert report.agree
    assert (report.lhs_residue, report.rhs_residue, report.modulus) == (4, 4, 9)

    report = witt_check("first", 1, 0, 2, 1, PadicContext(5, 1), 1)
    assert report.agree and report.lhs_residue == 1 and report.modulus == 5


@pytest.mark.parametrize("kind", ["first", "second"])
@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_witt_congruences_hold(kind, k, N):
    ctx = PadicContext(3, N)
    for n in range(5):
        for lam in (1, 2, 4):
            for x in (0, 1, 2):
                assert witt_check(kind, k, n, lam, x, ctx, N, budget=10 ** 7).agree


def test_witt_check_precision_and_slack():
    with pytest.raises(InvalidParameter):
        witt_check("first", 1, 1, 1, 0, PadicContext(3, 1), 2)
    report = witt_check("first", 1, 2, 1, 0, PadicContext(3, 3), 3, slack=1)
    assert report.modulus == 9 and report.agree


def test_report_json_keys():
    report = witt_check("second", 2, 1, F(1, 2), 0, PadicContext(5, 2), 2)
    data = report.to_json()
    assert data["lambda"] == "1/2"
    assert data["kind"] == "second"
    assert set(data) == {
        "p", "M", "N", "n", "k", "kind", "lambda", "x",
        "lhs_residue", "rhs_residue", "modulus", "agree",
    }


@pytest.mark.parametrize("p", [3, 5, 7])
def test_power_sums_approximate_euler_numbers(p):
    from boole_witt.src.euler import euler_numbers

    numbers = euler_numbers(1, 6)
    for N in (1, 2):
        ctx = PadicContext(p, N)
        for n in range(7):
            assert fermionic_sum(Poly.monomial(n), ctx, N).residue == ctx(numbers[n]).residue


@pytest.mark.parametrize("p", [3, 5])
@pytest.mark.parametrize("N", [1, 2])
def test_consecutive_levels_agree_mod_p_power(p, N):
    ctx = PadicContext(p, N + 1)
    f = Poly((F(1, 2), 3, F(-1, 4), 2))
    coarse = fermionic_sum(f, ctx, N).reduce(p ** N)
    fine = fermionic_sum(f, ctx, N + 1).reduce(p ** N)
    assert coarse == fine


def test_embedding_is_a_ring_homomorphism():
    ctx = PadicContext(5, 4)
    rng = random.Random(11)

    def unit_denominator():
        while True:
            d = rng.randint(1, 60)
            if d % 5:
                return d

    for _ in range(50):
        a = F(rng.randint(-200, 200), unit_denominator())
        b = F(rng.randint(-200, 200), unit_denominator())
        assert embed_rational(a + b, ctx).residue == (embed_rational(a, ctx) + embed_rational(b, ctx)).residue
        assert embed_rational(a * b, ctx).residue == (embed_rational(a, ctx) * embed_rational(b, ctx)).residue
