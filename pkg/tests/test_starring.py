from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import M2Z2, carriers, elements
from starinv import errors
from starinv.gaussian import GaussianRational
from starinv.search import enumerate_carrier
from starinv.starring import (CarrierSpec, dumps, element_from_json, element_to_json,
                              format_element, is_proper_witness, make_element, one,
                              parse_element, parse_scalar, zero)


def triples(draw_spec=carriers):
    return draw_spec.flatmap(lambda s: st.tuples(elements(s), elements(s), elements(s)))


@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert a - a == zero(a.spec)
    assert one(a.spec) * a == a == a * one(a.spec)


@given(triples())
def test_involution_axioms(t):
    a, b, _ = t
    assert a.star().star() == a
    assert (a + b).star() == a.star() + b.star()
    assert (a * b).star() == b.star() * a.star()


@given(carriers.flatmap(elements))
def test_canonical_form_is_idempotent(a):
    again = make_element(a.spec, a.entries)
    assert again == a and hash(again) == hash(a)
    assert element_from_json(element_to_json(a)) == a
    assert parse_element(format_element(a)) == a


@given(carriers.flatmap(elements))
def test_json_reemission_is_byte_identical(a):
    text = element_to_json(a)
    assert element_to_json(element_from_json(text)) == text
    assert text.endswith("\n")


def test_zn_reduction_and_negatives():
    spec = CarrierSpec("ZN", 1, 6)
    assert make_element(spec, [-1]).entries == ((5,),)
    assert make_element(spec, [13]) == make_element(spec, [1])
    assert parse_scalar(spec, "7") == 1


def test_rational_parsing():
    a = parse_element("[Q 2] 1/2 -3 / 0 4/8")
    assert a.entries == ((Fraction(1, 2), Fraction(-3)), (Fraction(0), Fraction(1, 2)))
    with pytest.raises(errors.NonCanonicalScalar):
        parse_element("Q 1 1/0")


def test_gaussian_parsing_and_conjugate_transpose():
    a = parse_element("QI 2\n1+i 1/2-3i\n-i 3")
    assert a.entries[0][1] == GaussianRational(Fraction(1, 2), -3)
    s = a.star()
    assert s.entries[1][0] == GaussianRational(Fraction(1, 2), 3)
    assert s.entries[0][0] == GaussianRational(1, -1)


def test_multiline_and_bracket_headers_agree():
    assert parse_element("ZN 2 2\n1 1\n0 1\n") == parse_element("[ZN 2 2] 1 1 / 0 1")


@pytest.mark.parametrize("text, exc", [
    ("Q 2 1 2 3", errors.DimensionMismatch),
    ("ZN 2 1 1 1 1", errors.ModulusOutOfRange),
    ("ZN 1", errors.ModulusOutOfRange),
    ("R 1 1", errors.InvalidCarrier),
    ("Q 1 x", errors.NonCanonicalScalar),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_element(text)


def test_spec_validation():
    assert CarrierSpec("QI", 2).involution == "conjugate-transpose"
    assert CarrierSpec("Q", 1).involution == "identity"
    assert CarrierSpec("ZN", 2, 3).involution == "transpose"
    with pytest.raises(errors.InvalidCarrier):
        CarrierSpec("ZN", 2, 3, "identity")
    with pytest.raises(errors.InvalidCarrier):
        CarrierSpec("ZN", 2, 3, "conjugate-transpose")
    with pytest.raises(errors.ModulusOutOfRange):
        CarrierSpec("ZN", 1, 1)


def test_mixing_carriers_fails():
    with pytest.raises(errors.SpecMismatch):
        make_element(CarrierSpec("ZN", 1, 4), [1]) * make_element(CarrierSpec("ZN", 1, 6), [1])


def test_proper_witness():
    w = is_proper_witness(M2Z2)
    assert w is not None and not w.is_zero() and (w.star() * w).is_zero()
    assert w.entries == ((0, 1), (0, 1))
    # Q and Z_p with p = 1 mod 4 differ: a*a = 0 forces a = 0 over Q
    assert is_proper_witness(CarrierSpec("Q", 2), budget=200) is None
    assert is_proper_witness(CarrierSpec("ZN", 1, 5)) is None


def test_enumeration_order():
    els = list(enumerate_carrier(M2Z2))
    assert len(els) == 16
    assert els[1].entries == ((0, 0), (0, 1)) and els[-1].entries == ((1, 1), (1, 1))
    assert [e.entries[0][0] for e in enumerate_carrier(CarrierSpec("ZN", 1, 6))] == list(range(6))
    with pytest.raises(errors.InfiniteCarrier):
        enumerate_carrier(CarrierSpec("Q", 2))
    with pytest.raises(errors.CarrierTooLarge):
        enumerate_carrier(CarrierSpec("ZN", 3, 3))


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
