from fractions import Fraction as F

import pytest

from boole_witt.src.config import DEFAULT_TERM_BUDGET, GridConfig, term_budget
from boole_witt.src.errors import InvalidParameter
from boole_witt.src.polynomial import Poly
from boole_witt.src.records import VerificationCase, VerificationReport, serialize_value
from boole_witt.src.validator import IDENTITY_ORDER, is_prime, validate_name, validate_order


def test_failing_case_needs_unequal_witness():
    with pytest.raises(ValueError):
        VerificationCase("thm2", {"m": 1}, "fail")
    with pytest.raises(ValueError):
        VerificationCase("thm2", {"m": 1}, "fail", witness=(F(1), F(1)))
    with pytest.raises(ValueError):
        VerificationCase("thm2", {}, "skipped")


def test_case_json():
    case = VerificationCase(
        "thm6b_printed", {"lambda": F(1, 2), "n": 2}, "fail",
        witness=(Poly((F(1, 2),)), Poly((1, 1))), message="coefficient of x^0: 1/2 != 1",
    )
    data = case.to_json()
    assert data["parameters"] == {"lambda": "1/2", "n": 2}
    assert data["witness"] == {"lhs": ["1/2"], "rhs": ["1", "1"]}
    assert case.expected_fail


def test_summary_is_zero_filled_and_ordered():
    report = VerificationReport(cases=[VerificationCase("thm2", {"m": 0}, "pass")])
    summary = report.summary
    assert list(summary) == list(IDENTITY_ORDER)
    assert summary["thm2"] == {"pass": 1, "fail": 0, "error": 0}
    assert summary["eq2"] == {"pass": 0, "fail": 0, "error": 0}


def test_ok_ignores_expected_failures_only():
    printed = VerificationCase("thm6b_printed", {"n": 2}, "fail", witness=(F(0), F(1)))
    real = VerificationCase("thm6a", {"n": 2}, "fail", witness=(F(0), F(1)))
    assert VerificationReport(cases=[printed]).ok
    assert not VerificationReport(cases=[printed, real]).ok
    assert not VerificationReport(cases=[VerificationCase("thm1", {}, "error", message="boom")]).ok


def test_frames():
    report = VerificationReport(cases=[
        VerificationCase("thm1", {"n": 0, "lambda": F(2)}, "pass"),
        VerificationCase("thm6b_printed", {"n": 2}, "fail", witness=(F(0), F(1, 2))),
    ])
    frame = report.to_frame()
    assert list(frame.columns) == ["identity", "parameters", "status", "detail"]
    assert frame.loc[0, "parameters"] == "lambda=2 n=0"
    assert frame.loc[1, "status"] == "fail (expected)"
    assert frame.loc[1, "detail"] == "lhs=0 rhs=1/2"
    assert report.summary_frame().loc["thm1", "pass"] == 1


def test_serialize_value_nested():
    assert serialize_value([F(1, 2), Poly((1,)), 3]) == ["1/2", ["1"], 3]


def test_term_budget_from_environment(monkeypatch):
    monkeypatch.delenv("BOOLE_WITT_TERM_BUDGET", raising=False)
    assert term_budget() == DEFAULT_TERM_BUDGET
    monkeypatch.setenv("BOOLE_WITT_TERM_BUDGET", "1234")
    assert term_budget() == 1234
    monkeypatch.setenv("BOOLE_WITT_TERM_BUDGET", "lots")
    with pytest.raises(InvalidParameter):
        term_budget()


def test_grid_overrides_and_selection():
    cfg = GridConfig().with_overrides(n_max=3, lambdas=None, ids=["thm1"])
    assert cfg.n_max == 3
    assert cfg.lambdas == GridConfig().lambdas
    assert cfg.selects("thm1") and not cfg.selects("thm2")
    assert GridConfig().selects("anything")


def test_validator():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    # Carmichael numbers and strong pseudoprimes to small bases
    assert not any(is_prime(n) for n in (561, 1105, 2047, 3215031751, 3825123056546413051))
    assert is_prime(1_000_000_007) and is_prime(2 ** 61 - 1)
    assert not is_prime((2 ** 61 - 1) * (2 ** 31 - 1))
    with pytest.raises(InvalidParameter, match="Did you mean thm1"):
        validate_name("identity", "thm11")
    with pytest.raises(InvalidParameter):
        validate_order(0)
