import pytest

import ringline.symplectic
from ringline.oracle import (
    CHECK_NAMES,
    CheckResult,
    VerificationReport,
    construct_witness,
    verify_all,
    verify_group,
    verify_theorem1,
    verify_theorem2,
    verify_witness_construction,
)
from ringline.ring import make_modulus


def test_verify_all_passes_for_d6():
    report = verify_all(make_modulus(6))
    assert report.d == 6
    assert [c.name for c in report.checks] == sorted(CHECK_NAMES)
    assert all(c.status == "pass" for c in report.checks)
    assert report.all_passed


def test_verify_all_skips_square_free_checks_for_d12():
    report = verify_all(make_modulus(12))
    by_name = {c.name: c for c in report.checks}
    assert by_name["theorem1"].status == "pass"
    assert by_name["theorem2"].status == "skip"
    assert "square-free" in by_name["theorem2"].scope
    assert by_name["witness_construction"].status == "skip"
    assert by_name["group"].status == "pass"
    assert report.all_passed  # skips do not fail a report


def test_verify_all_skips_group_for_large_d():
    report = verify_all(make_modulus(33), checks=["group"])
    (entry,) = report.checks
    assert entry.status == "skip"
    assert "32" in entry.scope


def test_verify_all_rejects_unknown_check_names():
    with pytest.raises(ValueError, match="nosuch"):
        verify_all(make_modulus(6), checks=["nosuch"])


def test_verify_all_check_subset():
    report = verify_all(make_modulus(6), checks=["theorem1"])
    assert [c.name for c in report.checks] == ["theorem1"]


def test_theorem_checks_reject_non_square_free():
    m12 = make_modulus(12)
    with pytest.raises(ValueError):
        verify_theorem2(m12)
    with pytest.raises(ValueError):
        verify_witness_construction(m12)
    with pytest.raises(ValueError, match="32"):
        verify_group(make_modulus(34))


def test_theorem1_holds_without_square_freeness():
    for d in (7, 12):
        assert verify_theorem1(make_modulus(d)).status == "pass"


def test_theorem2_passes_for_small_square_free():
    for d in (2, 10, 30):
        assert verify_theorem2(make_modulus(d)).status == "pass"


def test_group_check_passes():
    for d in (2, 6, 10, 12):
        assert verify_group(make_modulus(d)).status == "pass"


def test_witness_construction_golden_example():
    m6 = make_modulus(6)
    gen, u, s = construct_witness((2, 0), (2, 3), m6)
    assert gen == (2, 3)
    assert (u * gen[0] % 6, u * gen[1] % 6) == (2, 0)
    assert (s * gen[0] % 6, s * gen[1] % 6) == (2, 3)


def test_witness_construction_fallback_branch():
    # w = (0,0) forces the all-ones component on the vanishing prime
    m6 = make_modulus(6)
    gen, u, s = construct_witness((2, 0), (0, 0), m6)
    assert gen == (5, 3)
    assert u == 4 and (4 * 5 % 6, 4 * 3 % 6) == (2, 0)
    assert s == 0


def test_witness_construction_prime_case_degenerates():
    m7 = make_modulus(7)
    gen, u, s = construct_witness((3, 2), (6, 4), m7)
    assert gen == (3, 2)
    assert u == 1
    assert (s * 3 % 7, s * 2 % 7) == (6, 4)


def test_witness_construction_check_passes():
    for d in (2, 6, 10):
        assert verify_witness_construction(make_modulus(d)).status == "pass"


def test_reports_are_deterministic():
    m = make_modulus(6)
    first = verify_all(m)
    second = verify_all(m)
    strip = lambda r: [(c.name, c.scope, c.status, c.counterexample) for c in r.checks]
    assert strip(first) == strip(second)


def test_report_json_shape_and_elapsed_toggle():
    report = verify_all(make_modulus(6), checks=["theorem1"])
    with_t = report.to_json_dict()
    without_t = report.to_json_dict(include_elapsed=False)
    assert list(with_t) == ["d", "checks", "all_passed"]
    assert list(with_t["checks"][0]) == [
        "name", "scope", "status", "passed", "counterexample", "elapsed",
    ]
    assert "elapsed" not in without_t["checks"][0]
    assert with_t["all_passed"] is True


def test_all_passed_semantics():
    ok = CheckResult("a", "s", "pass", None, 0.0)
    skipped = CheckResult("b", "skipped: reason", "skip", None, 0.0)
    failed = CheckResult("c", "s", "fail", {"claim": "x"}, 0.0)
    assert VerificationReport(6, (ok, skipped)).all_passed
    assert not VerificationReport(6, (ok, skipped, failed)).all_passed


def test_oracle_catches_a_dropped_form_term(monkeypatch):
    # fault: form loses its second term, so perp-sets of (b, 0) vectors balloon
    m6 = make_modulus(6)
    monkeypatch.setattr(
        ringline.symplectic, "form", lambda v, w, m: (v[1] * w[0]) % m.d
    )
    t2 = verify_theorem2(m6)
    assert t2.status == "fail"
    assert t2.counterexample is not None
    grp = verify_group(m6)
    assert grp.status == "fail"
    assert grp.counterexample is not None


def test_oracle_catches_a_symmetrized_form(monkeypatch):
    # fault: plus instead of minus makes the form symmetric, not alternating
    m6 = make_modulus(6)
    monkeypatch.setattr(
        ringline.symplectic, "form", lambda v, w, m: (v[1] * w[0] + w[1] * v[0]) % m.d
    )
    t2 = verify_theorem2(m6)
    assert t2.status == "fail"
    assert t2.counterexample is not None


def test_failed_entry_always_carries_a_witness(monkeypatch):
    monkeypatch.setattr(ringline.symplectic, "form", lambda v, w, m: 0)
    for entry in (verify_theorem2(make_modulus(6)), verify_group(make_modulus(6))):
        assert entry.status == "fail"
        assert isinstance(entry.counterexample, dict)
        assert "claim" in entry.counterexample
