import json

import pytest

from sierpinski_median import verify as V
from sierpinski_median.errors import OrderTooLarge
from sierpinski_median.verify import Status


def test_thm1_small_orders_are_skipped_with_note():
    r = V.verify_thm1_median(1)
    assert r.status is Status.SKIPPED
    assert "n >= 2" in r.note


@pytest.mark.parametrize("n", [2, 3])
def test_thm1_passes(n):
    assert V.verify_thm1_median(n).passed
    assert V.verify_thm1_lift(n).passed


def test_lem2_fails_from_order_three_with_witnesses():
    assert V.verify_lem2_residues(2).passed
    r = V.verify_lem2_residues(3)
    assert r.status is Status.FAIL
    assert r.evidence["histogram"] == {"0": 810, "4": 96, "5": 24, "6": 552}
    assert 0 < len(r.counterexamples) <= V.MAX_COUNTEREXAMPLES
    ex = r.counterexamples[0]
    assert ex["delta"] % 8 == 5
    assert "24 failures in total" in r.note


def test_counterexample_cap_is_adjustable():
    r = V.verify_lem2_residues(3, max_counterexamples=2)
    assert len(r.counterexamples) == 2


def test_eq1_sampled_is_replayable():
    a = V.verify_eq1(5, mode="sampled", seed=7, samples=2000)
    b = V.verify_eq1(5, mode="sampled", seed=7, samples=2000)
    assert a.passed and a.checked == 2000
    assert a.evidence == b.evidence


def test_eq1_exhaustive_cap():
    with pytest.raises(OrderTooLarge):
        V.verify_eq1(5, mode="exhaustive")


def test_run_suite_filter_and_order():
    results = V.run_suite([3, 2], ["eq1"])
    assert [(r.claim, r.n) for r in results] == [("eq1", 2), ("eq1", 3)]
    assert V.run_suite([2, 3], []) == []


def test_run_suite_turns_cap_into_skip():
    (r,) = V.run_suite([7], ["lem2"])
    assert r.status is Status.SKIPPED


def test_unknown_claim():
    with pytest.raises(ValueError):
        V.run_suite([2], ["nope"])


def test_report_schema():
    results = V.run_suite([2], ["thm2", "lem2"])
    data = json.loads(V.suite_report(results, seed=0))
    assert data["failed"] == 0
    for r in data["results"]:
        assert {"claim", "n", "status", "checked", "counterexamples", "ms"} <= set(r)


def test_fail_always_has_counterexample():
    for r in V.run_suite(range(0, 5)):
        if r.status is Status.FAIL:
            assert r.counterexamples


@pytest.mark.parametrize("claim", sorted(V.CLAIMS))
def test_every_claim_runs_at_small_order(claim):
    (r,) = V.run_suite([2], [claim], mode="sampled" if claim in ("eq1", "oracle") else "exhaustive", samples=500)
    assert r.status is Status.PASS
