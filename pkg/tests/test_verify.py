"""Tests for the verification harness: per-instance checks, sweeps, reports."""

import json

import pytest

from unitcodes.rings import CaseTag
from unitcodes.verify import (
    Check,
    CheckRecord,
    Status,
    SweepConfig,
    check_instance,
    report_json,
    summarize,
    summary_csv,
    sweep,
)


CONFIG = SweepConfig(n_range=(2, 6), m_range=(2, 6), fields=(2, 3))


def _by_name(record):
    return {c.name: c for c in record.checks}


# ---------------------------------------------------------------------------
# single instances


def test_check_instance_5_5_gf2():
    rec = check_instance(5, 5, 2, CONFIG)
    assert rec.case_tag == CaseTag.PP_ODD_ODD
    checks = _by_name(rec)
    assert checks["EdgeCountFormula"].status == Status.PASS
    assert checks["EdgeCountFormula"].observed == 192
    assert checks["DiameterBound"].status == Status.PASS
    assert checks["LambdaFormula"].status == Status.PASS
    assert checks["LambdaFormula"].observed == 15
    assert checks["CodeParamsVsPredicted"].status == Status.PASS
    assert checks["CodeDistanceEqualsLambda"].status == Status.PASS
    assert checks["DualDistanceVsPredicted"].status == Status.PASS
    assert checks["DualDistanceEqualsGirth(GF(2))"].status == Status.PASS
    assert not rec.has_theorem_failure()


def test_check_instance_3_5_gf2_values():
    checks = _by_name(check_instance(3, 5, 2, CONFIG))
    assert checks["CodeParamsVsPredicted"].observed == [56, 14, 7]
    assert checks["DualDimension"].status == Status.PASS
    assert checks["DualDistanceVsPredicted"].predicted == 3


def test_check_instance_both_even_skips_codes():
    rec = check_instance(4, 4, 2, CONFIG)
    checks = _by_name(rec)
    assert checks["DisconnectedIfBothEven"].status == Status.PASS
    assert checks["ConjectureI"].status == Status.SKIPPED
    for name in ("CodeParamsVsPredicted", "DualDimension", "CodeDistanceEqualsLambda"):
        assert checks[name].status == Status.SKIPPED


def test_check_instance_conjectures():
    # (6,5): general one-even, so Conjecture I applies and II over odd r
    checks = _by_name(check_instance(6, 5, 3, CONFIG))
    assert checks["ConjectureI"].status == Status.CONJECTURE_PASS
    assert checks["ConjectureII"].status == Status.CONJECTURE_PASS
    assert checks["BipartiteIffOneEven"].status == Status.PASS


def test_check_instance_odd_odd_odd_field_no_claims():
    checks = _by_name(check_instance(3, 5, 3, CONFIG))
    assert checks["ConjectureII"].status == Status.SKIPPED
    assert checks["DualDistanceVsPredicted"].status == Status.SKIPPED


def test_statuses_are_valid():
    for n, m, r in [(2, 2, 2), (3, 4, 3), (5, 5, 2), (6, 6, 3)]:
        rec = check_instance(n, m, r, CONFIG)
        for c in rec.checks:
            assert isinstance(c, Check)
            assert c.status in Status


# ---------------------------------------------------------------------------
# sweeps and reports


@pytest.fixture(scope="module")
def small_sweep():
    return sweep(CONFIG)


def test_sweep_covers_all_instances(small_sweep):
    assert len(small_sweep) == 5 * 5 * 2
    assert [(r.n, r.m, r.r) for r in small_sweep] == CONFIG.instances()


def test_sweep_zero_theorem_failures(small_sweep):
    assert not any(rec.has_theorem_failure() for rec in small_sweep)
    for rec in small_sweep:
        for c in rec.checks:
            assert c.status != Status.CONJECTURE_FAIL


def test_sweep_parallel_matches_serial(small_sweep):
    parallel = sweep(SweepConfig(n_range=(2, 6), m_range=(2, 6), fields=(2, 3), jobs=4))
    assert parallel == small_sweep


def test_summarize(small_sweep):
    s = summarize(small_sweep)
    assert s["theorem_failures"] == 0
    assert s["records"] == 50
    counts = s["checks"]["EdgeCountFormula"]
    assert counts["Pass"] == 50 and counts["Fail"] == 0


def test_report_json_round_trip(small_sweep):
    text = report_json(CONFIG, small_sweep)
    data = json.loads(text)
    assert data["config"]["n_range"] == [2, 6]
    assert data["summary"]["theorem_failures"] == 0
    recs = data["records"]
    assert len(recs) == 50
    first = recs[0]
    assert first["n"] == 2 and first["m"] == 2
    names = [c["name"] for c in first["checks"]]
    assert "EdgeCountFormula" in names and "ConjectureII" in names


def test_report_json_deterministic(small_sweep):
    a = report_json(CONFIG, small_sweep)
    b = report_json(CONFIG, sweep(CONFIG))
    assert a.encode() == b.encode()
    assert a.endswith("\n")


def test_summary_csv(small_sweep):
    text = summary_csv(small_sweep)
    lines = text.strip().split("\n")
    assert lines[0].startswith("group,name")
    assert any("EdgeCountFormula" in ln for ln in lines[1:])


def test_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(n_range=(1, 5), m_range=(2, 5), fields=(2,))
    with pytest.raises(ValueError):
        SweepConfig(n_range=(2, 65), m_range=(2, 5), fields=(2,))
    with pytest.raises(ValueError):
        SweepConfig(n_range=(2, 4), m_range=(2, 4), fields=(2,), budget=16)


def test_empty_range_sweep():
    cfg = SweepConfig(n_range=(5, 4), m_range=(2, 3), fields=(2,))
    assert sweep(cfg) == []
    assert summarize([])["records"] == 0


def test_infinite_values_serialized(small_sweep):
    text = report_json(CONFIG, small_sweep)
    data = json.loads(text)
    rec22 = next(r for r in data["records"] if (r["n"], r["m"], r["r"]) == (2, 2, 2))
    diam = next(c for c in rec22["checks"] if c["name"] == "DiameterBound")
    assert diam["observed"] == "Infinite" or diam["status"] == "Skipped"
