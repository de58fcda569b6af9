import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starinv import errors
from starinv.search import (CSV_COLUMNS, MiningJob, classify_carrier, hermitian_units, mine,
                            replay)
from starinv.starring import CarrierSpec
from starinv.verdict import Status

M2Z2 = CarrierSpec("ZN", 2, 2)
Z6 = CarrierSpec("ZN", 1, 6)


def test_thm39_over_m2z2():
    r = mine(MiningJob(M2Z2, "thm39"))
    t = r.totals
    assert t["inputs"] == 256 and t["nonvacuous"] == 99
    assert t["equivalence_fails"] == 0 and t["equivalence_holds"] == 99
    assert t["both_false"] >= 1
    assert len(r.witnesses) == 32
    # the invertible pair sits at position 13 * 16 + 11 of the scan
    job = MiningJob(M2Z2, "thm39")
    v = replay(job, {"inputs": [[1, 1, 0, 1], [1, 0, 1, 1]]})
    assert v.status is Status.EQUIVALENCE_HOLDS and v.equivalences[0].left is False


def test_thm32_over_z6():
    r = mine(MiningJob(Z6, "thm32"))
    assert r.totals["inputs"] == 36 and r.totals["counterexamples"] == 0
    # commutative: the commutation hypotheses hold for every core-invertible pair
    h = r.hypothesis_counts
    assert h["a_core"] == 36 and r.totals["nonvacuous"] == 36


def test_weighted_ranges_over_hermitian_units():
    assert len(hermitian_units(M2Z2)) == 4
    r = mine(MiningJob(M2Z2, "weighted"))
    assert r.totals["inputs"] == 256 * 4
    assert r.totals["nonvacuous"] == 112 and r.totals["counterexamples"] == 0


def test_masked_mining_is_reproducible_and_replays():
    job = MiningJob(M2Z2, "thm32", mask={"ab core(b) = b core(b) a"})
    r1, r2 = mine(job), mine(job)
    assert r1.to_json(timing=False) == r2.to_json(timing=False)
    assert r1.totals["counterexamples"] >= 0
    for entry in r1.counterexamples:
        assert replay(job, entry).status is Status.COUNTEREXAMPLE


def test_masking_all_hypotheses_finds_counterexamples_that_replay():
    names = ["a_core", "b_core", "aba = ba^2", "ba^2 = a^2b",
             "ab core(a) = a core(a) b", "ab core(b) = b core(b) a"]
    job = MiningJob(M2Z2, "thm32", mask=names)
    r = mine(job)
    assert r.totals["counterexamples"] > 0 and r.totals["vacuous"] == 0
    for entry in r.counterexamples[:50]:
        assert replay(job, entry).status is Status.COUNTEREXAMPLE


def test_budget_and_resume():
    full = mine(MiningJob(M2Z2, "thm39"))
    first = mine(MiningJob(M2Z2, "thm39", max_inputs=100))
    assert first.partial and first.cursor == 100
    rest = mine(MiningJob(M2Z2, "thm39", start=first.cursor))
    assert not rest.partial
    for k, v in full.totals.items():
        assert first.totals[k] + rest.totals[k] == v


def test_time_limit_gives_clean_prefix():
    r = mine(MiningJob(M2Z2, "thm39", time_limit=0.0))
    assert r.partial and r.cursor == r.totals["inputs"]


@settings(max_examples=10)
@given(st.integers(0, 2**32), st.integers(1, 4))
def test_random_mode_determinism_and_partition(seed, workers):
    job = MiningJob(CarrierSpec("ZN", 2, 3), "thm35", mode="random", seed=seed, samples=40)
    base = mine(job).to_json(timing=False)
    assert mine(job, workers=workers).to_json(timing=False) == base


def test_random_mode_needs_seed():
    with pytest.raises(ValueError):
        MiningJob(M2Z2, "thm39", mode="random", samples=10)


def test_rejects_infinite_and_large_carriers():
    with pytest.raises(errors.InfiniteCarrier):
        mine(MiningJob(CarrierSpec("Q", 2), "thm39"))
    with pytest.raises(errors.CarrierTooLarge):
        mine(MiningJob(CarrierSpec("ZN", 3, 3), "thm39"))


def test_classify_carrier():
    z6 = classify_carrier(Z6)
    assert z6["unit"] == 2 and z6["idempotent"] == 4 and z6["core_invertible"] == 6
    z4 = classify_carrier(CarrierSpec("ZN", 1, 4))
    assert z4["nilpotent"] == 2 and z4["core_invertible"] == 3
    for spec in (M2Z2, CarrierSpec("ZN", 1, 12)):
        c = classify_carrier(spec)
        assert c["unit"] <= c["core_invertible"]
        assert sum(c["drazin_index_histogram"].values()) == c["size"]


def test_report_serialization():
    r = mine(MiningJob(M2Z2, "hybrid"))
    obj = json.loads(r.to_json())
    assert "elapsed_seconds" in obj and "elapsed_seconds" not in json.loads(r.to_json(False))
    assert r.to_json().endswith("}\n")
    header, row = r.to_csv().splitlines()
    assert header.split(",") == list(CSV_COLUMNS)
    assert row.startswith("hybrid,ZN,2,2,transpose,exhaustive")
