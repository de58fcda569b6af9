import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from conftest import FINITE, M2Z2, elements
from starinv import errors, geninv
from starinv.annihil import (check_idempotent_lemma, check_lemma31, check_lemma31_pointwise,
                             check_remark_bbcore, left_annihilator, right_annihilator)
from starinv.search import enumerate_carrier
from starinv.starring import CarrierSpec, is_idempotent, make_element
from starinv.verdict import Status

Z4, Z6 = CarrierSpec("ZN", 1, 4), CarrierSpec("ZN", 1, 6)


def el(spec, *vals):
    return make_element(spec, list(vals))


def residues(s):
    return sorted(x.entries[0][0] for x in s.members)


def test_scalar_annihilators():
    assert residues(left_annihilator(el(Z4, 2))) == [0, 2]
    assert residues(right_annihilator(el(Z6, 2))) == [0, 3]
    assert residues(left_annihilator(el(Z6, 1))) == [0]


def _oracle_left_ann(a, n):
    return {x for x in oracle.carrier(n, len(a)) if all(v == 0 for r in oracle.mul(x, a, n) for v in r)}


def test_annihilators_match_bruteforce():
    for a in enumerate_carrier(M2Z2):
        got = {x.entries for x in left_annihilator(a).members}
        assert got == _oracle_left_ann(a.entries, 2)
        got = {x.entries for x in right_annihilator(a).members}
        want = {x for x in oracle.carrier(2, 2)
                if all(v == 0 for r in oracle.mul(a.entries, x, 2) for v in r)}
        assert got == want


def test_annihilators_need_finite_carrier():
    with pytest.raises(errors.InfiniteCarrier):
        left_annihilator(el(CarrierSpec("Q", 1), 1))


@pytest.mark.parametrize("spec", FINITE, ids=lambda s: s.label())
def test_lemma31_on_every_core_invertible_element(spec):
    for a in enumerate_carrier(spec):
        v = check_lemma31(a, strict=False)
        if geninv.core(a) is None:
            assert v.status is Status.VACUOUS
        else:
            assert v.status is Status.IMPLICATION_HOLDS, v.to_json_obj()
            assert "quantifier: exhaustive" in v.notes


def test_lemma31_strict_raises_without_core():
    with pytest.raises(errors.NotCoreInvertible):
        check_lemma31(el(Z4, 2))


def test_lemma31_sampled_mode():
    a = el(M2Z2, 1, 0, 0, 0)
    v = check_lemma31(a, bound=4, samples=8, seed=3)
    assert v.status is Status.IMPLICATION_HOLDS
    assert v.notes == ("quantifier: sampled(n=8, seed=3)",)


@given(st.sampled_from([CarrierSpec("Q", 2), CarrierSpec("QI", 2)]).flatmap(
    lambda s: st.tuples(elements(s), elements(s), elements(s))))
def test_lemma31_pointwise_on_fields(t):
    a, b, c = t
    if geninv.core(a) is None:
        return
    assert check_lemma31_pointwise(a, b, c).status is Status.IMPLICATION_HOLDS


IDEMPOTENTS = [x for x in enumerate_carrier(M2Z2) if is_idempotent(x)]


@given(elements(M2Z2), elements(M2Z2), st.sampled_from(IDEMPOTENTS), st.sampled_from(IDEMPOTENTS))
def test_idempotent_lemma(a, b, x, y):
    v = check_idempotent_lemma(a, b, x, y)
    assert v.status is Status.EQUIVALENCE_HOLDS
    # independent evaluation of (i) with explicit sets
    n = 2
    one = oracle.identity(n, 2)
    lhs = oracle.mul(oracle.sub(one, x.entries, n), a.entries, n) == b.entries
    xb_zero = all(v == 0 for r in oracle.mul(x.entries, b.entries, n) for v in r)
    d = oracle.sub(a.entries, b.entries, n)
    contained = _oracle_left_ann(x.entries, n) <= _oracle_left_ann(d, n)
    assert lhs == (xb_zero and contained) == v.equivalences[0].left


def test_idempotent_lemma_rejects_non_idempotent():
    with pytest.raises(errors.NotIdempotent):
        check_idempotent_lemma(*(el(M2Z2, 0, 1, 0, 0),) * 4)


def test_remark_bbcore_exhaustive():
    els = list(enumerate_carrier(M2Z2))
    statuses = {check_remark_bbcore(a, b, strict=False).status for a in els for b in els}
    assert Status.COUNTEREXAMPLE not in statuses
    assert Status.IMPLICATION_HOLDS in statuses
