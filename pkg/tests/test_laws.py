from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from conftest import SMALL_RINGS, elements, small_fractions
from starinv import errors, geninv
from starinv.laws import (LAWS, check_law, get_law, law_remark36, law_thm32, law_thm35,
                          law_thm39_iff_star, law_weighted, lemma_commute)
from starinv.starring import CarrierSpec, make_element, one, scalar
from starinv.verdict import Status

M2Z2 = CarrierSpec("ZN", 2, 2)
Q3 = CarrierSpec("Q", 3)
FAILING = (Status.COUNTEREXAMPLE, Status.EQUIVALENCE_FAILS)


def el(spec, *vals):
    return make_element(spec, list(vals))


def test_known_forward_failure_pair():
    a, b = el(M2Z2, 1, 1, 0, 1), el(M2Z2, 1, 0, 1, 1)
    ab = a * b
    cab = geninv.core(ab)
    assert cab == el(M2Z2, 1, 1, 1, 0) == geninv.unit_inverse(ab)
    prod = geninv.core(a) * geninv.core(b)
    assert prod == el(M2Z2, 0, 1, 1, 1)
    # the same numbers from plain mod-2 arithmetic
    assert oracle.core(ab.entries, 2) == ((1, 1), (1, 0))
    assert oracle.mul(oracle.core(a.entries, 2), oracle.core(b.entries, 2), 2) == ((0, 1), (1, 1))
    v = law_thm39_iff_star(a, b)
    assert v.status is Status.EQUIVALENCE_HOLDS
    (eq,) = v.equivalences
    assert eq.left is False and eq.right is False


def test_identity_pair():
    u = one(CarrierSpec("ZN", 1, 6))
    assert law_thm32(u, u).status is Status.IMPLICATION_HOLDS


def test_mismatched_carriers():
    with pytest.raises(errors.SpecMismatch):
        law_thm32(el(CarrierSpec("ZN", 1, 6), 1), el(CarrierSpec("ZN", 1, 4), 1))


def test_strict_and_lenient_preconditions():
    a = el(CarrierSpec("ZN", 1, 4), 2)
    with pytest.raises(errors.NotCoreInvertible):
        law_thm32(a, a)
    assert law_thm32(a, a, strict=False).status is Status.VACUOUS


def test_masking():
    u = one(M2Z2)
    v = law_thm32(u, u)
    with pytest.raises(KeyError):
        v.masked({"no such hypothesis"})
    n = el(M2Z2, 0, 1, 0, 0)
    v = law_thm32(n, u, strict=False)
    assert v.status is Status.VACUOUS
    # masking every unmet hypothesis exposes an unevaluable conclusion
    unmet = {h.name for h in v.hypotheses if not h.ok}
    assert "a_core" in unmet
    assert v.masked(unmet).status is Status.COUNTEREXAMPLE


def test_registry_aliases():
    assert get_law("Thm39IffStar").law_id == "thm39"
    assert get_law("THM32") is LAWS["thm32"]
    with pytest.raises(KeyError):
        get_law("thm99")
    assert check_law("lemma31", el(CarrierSpec("ZN", 1, 6), 2)).status is Status.IMPLICATION_HOLDS


@pytest.mark.parametrize("spec", SMALL_RINGS, ids=lambda s: s.label())
def test_commutative_rings_satisfy_every_law(spec):
    n = spec.modulus
    els = [el(spec, k) for k in range(n)]
    units = [e for e in els if geninv.is_unit(e)]
    for law in LAWS.values():
        if law.arity == 1:
            continue
        for a in els:
            for b in els:
                inputs = (a, b, units[-1]) if law.weighted else (a, b)
                v = law.checker(*inputs, strict=False)
                assert v.status not in FAILING, v.to_json_obj()


@st.composite
def symmetric_commuting_pair(draw):
    """a symmetric, b a polynomial in a: ab = ba and ab* = b*a."""
    vals = draw(st.lists(st.integers(-2, 2), min_size=6, max_size=6))
    m = [[0] * 3 for _ in range(3)]
    k = 0
    for i in range(3):
        for j in range(i, 3):
            m[i][j] = m[j][i] = vals[k]
            k += 1
    a = make_element(Q3, [v for r in m for v in r])
    c = draw(st.lists(small_fractions, min_size=3, max_size=3))
    b = scalar(Q3, c[0]) + scalar(Q3, c[1]) * a + scalar(Q3, c[2]) * a * a
    return a, b


@given(symmetric_commuting_pair())
def test_commuting_rational_pairs(pair):
    a, b = pair
    v35 = law_thm35(a, b)
    assert v35.status is Status.IMPLICATION_HOLDS
    v36 = law_remark36(a, b)
    assert v36.status is Status.IMPLICATION_HOLDS
    assert lemma_commute(a, b).status is Status.IMPLICATION_HOLDS


@given(st.sampled_from([CarrierSpec("Q", 2), CarrierSpec("QI", 2), M2Z2]).flatmap(
    lambda s: st.tuples(elements(s), elements(s))))
def test_random_pairs_never_fail(pair):
    a, b = pair
    for law in LAWS.values():
        if law.arity != 2 or law.law_id == "remark_bbcore" and not a.spec.is_finite:
            continue
        assert law.checker(a, b, strict=False).status not in FAILING


def test_weighted_law_with_nontrivial_weight():
    spec = CarrierSpec("ZN", 1, 5)
    e = el(spec, 4)
    a = b = el(spec, 2)
    v = law_weighted(a, b, e)
    assert v.status is Status.IMPLICATION_HOLDS
    with pytest.raises(errors.InvalidWeight):
        law_weighted(a, b, el(spec, 0))


def test_remark36_bridge_row_present():
    u = one(M2Z2)
    v = law_remark36(u, u)
    assert any(r.name == "thm35 hypotheses hold" and r.ok for r in v.rows)


def test_verdict_json_shape():
    v = law_thm32(one(M2Z2), one(M2Z2))
    obj = v.to_json_obj()
    assert obj["status"] == "ImplicationHolds" and obj["inputs"] == [[1, 0, 0, 1]] * 2


def test_thm33_nonvacuous_on_nonunits():
    from starinv.laws import law_thm33
    e22 = el(M2Z2, 0, 0, 0, 1)
    assert not geninv.is_unit(e22)
    assert law_thm33(e22, e22).status is Status.IMPLICATION_HOLDS
