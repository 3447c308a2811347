"""
Tests del servicio de fuzzing diferencial.
"""
from condensation_kit import fuzz_service
from condensation_kit.fuzz_service import FuzzService, run_fuzz_case
from condensation_kit.matrix import leibniz_det


def test_default_run_agrees():
    summary = FuzzService(workers=1).run(seed=0)
    assert summary.total_cases == 1000
    assert summary.failures == 0
    assert {r.check for r in summary.results} == {"det", "mtt"}
    assert any(r.ring == "Z" for r in summary.results)
    assert any(r.ring.startswith("Z/") for r in summary.results)
    assert any(r.ring == "Z[t,u]" for r in summary.results)
    assert max(r.n for r in summary.results) <= 5


def test_zero_cases():
    summary = FuzzService(workers=1).run(cases=0, seed=0)
    assert summary.total_cases == 0
    assert summary.failures == 0
    assert summary.results == []


def test_cases_are_reproducible_in_isolation():
    summary = FuzzService(workers=1).run(cases=30, seed=123)
    assert run_fuzz_case(123, 17, 8) == summary.results[17]


def test_workers_preserve_order():
    sequential = FuzzService(workers=1).run(cases=40, seed=9)
    parallel = FuzzService(workers=2).run(cases=40, seed=9)
    assert parallel.results == sequential.results


def test_injected_bug_is_detected(monkeypatch):
    monkeypatch.setattr(fuzz_service, "chio_det", lambda A: leibniz_det(A) + 1)
    summary = FuzzService(workers=1).run(cases=25, seed=4)
    assert summary.failures == 25
    assert all(r.detail and r.detail.startswith("chio=") for r in summary.results)
    assert summary.results[0].to_line().endswith("FAIL")
